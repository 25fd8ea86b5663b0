//! Discrete Smoluchowski (DPBE) reference solver.
//!
//! Size classes are `v_i = i Δv`, `i = 1..=K`, and `N_i` is the particle count
//! in class `i`. Class `i` represents the interval `[(i - ½)Δv, (i + ½)Δv)`;
//! the first class also absorbs `[0, ½Δv)`. The system
//!
//! ```text
//! dN_i/dt = ½ Σ_{j<i} β_{j,i-j} N_j N_{i-j} - N_i Σ_{j ≤ K-i} β_{ij} N_j
//! ```
//!
//! truncates the loss sum so that pairs which would leave the tracked range
//! are not removed; the total mass `Σ i Δv N_i` is then an exact invariant.
//! Time integration is SSP-RK3 with step halving on negative counts.

use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernels::Func2;
use crate::mesh::Mesh;
use crate::quadrature::LineRule;

/// Relative threshold below which a negative count triggers step halving.
pub const NEGATIVE_TOLERANCE: f64 = 1e-12;

const MAX_HALVINGS: usize = 40;

/// Precomputed kernel samples for a class grid.
#[derive(Clone, Debug)]
pub struct Dpbe {
    dv: f64,
    classes: usize,
    /// `β(v_i, v_j)` in row-major `K × K` order (0-based indices).
    beta: Vec<f64>,
}

/// Class counts at a time instant.
#[derive(Clone, Debug, PartialEq)]
pub struct DpbeState {
    pub t: f64,
    pub dv: f64,
    /// `counts[i]` belongs to class `i + 1`.
    pub counts: Vec<f64>,
}

impl DpbeState {
    /// `Σ i Δv N_i`.
    pub fn mass(&self) -> f64 {
        mass(self.dv, &self.counts)
    }

    /// Piecewise-constant density `N_i / Δv` at `v`; zero outside the grid.
    pub fn density(&self, v: f64) -> f64 {
        if !(v >= 0.0) {
            return 0.0;
        }
        let i = ((v / self.dv + 0.5).floor() as usize).max(1);
        self.counts.get(i - 1).map_or(0.0, |n| n / self.dv)
    }

    /// Writes `class_center,count` rows.
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        let mut w = csv::Writer::from_writer(file);
        w.write_record(["class_center", "count"])?;
        for (i, n) in self.counts.iter().enumerate() {
            w.write_record([
                format!("{:e}", (i + 1) as f64 * self.dv),
                format!("{n:e}"),
            ])?;
        }
        w.flush().map_err(|e| Error::io(path, e))?;
        Ok(())
    }
}

fn mass(dv: f64, counts: &[f64]) -> f64 {
    counts
        .iter()
        .enumerate()
        .map(|(i, n)| (i + 1) as f64 * dv * n)
        .sum()
}

impl Dpbe {
    /// Samples `kernel` on `classes` classes of width `dv`.
    pub fn new(kernel: &Func2, dv: f64, classes: usize) -> Result<Self> {
        if !(dv > 0.0 && dv.is_finite()) || classes == 0 {
            return Err(Error::InvalidArgument(format!(
                "class grid needs dv > 0 and at least one class (dv = {dv}, K = {classes})"
            )));
        }
        let mut beta = vec![0.0; classes * classes];
        beta.par_chunks_mut(classes).enumerate().for_each(|(i, row)| {
            let u = (i + 1) as f64 * dv;
            for (j, b) in row.iter_mut().enumerate() {
                *b = kernel.eval(u, (j + 1) as f64 * dv);
            }
        });
        if let Some(bad) = beta.iter().find(|b| !b.is_finite() || **b < 0.0) {
            return Err(Error::Kernel(format!(
                "kernel '{}' produced {bad} on the class grid",
                kernel.name()
            )));
        }
        Ok(Dpbe { dv, classes, beta })
    }

    pub fn dv(&self) -> f64 {
        self.dv
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    /// Upper end of the tracked size range, `(K + ½) Δv`.
    pub fn v_max(&self) -> f64 {
        (self.classes as f64 + 0.5) * self.dv
    }

    /// Counts obtained by integrating `n0` over each class interval.
    pub fn initial_counts(&self, n0: impl Fn(f64) -> f64 + Sync) -> Vec<f64> {
        let rule = LineRule::gauss_legendre(8).expect("8-point rule exists");
        (0..self.classes)
            .into_par_iter()
            .map(|i| {
                let c = (i + 1) as f64 * self.dv;
                let lo = if i == 0 { 0.0 } else { c - 0.5 * self.dv };
                rule.integrate_interval(lo, c + 0.5 * self.dv, &n0)
            })
            .collect()
    }

    /// Evaluates `dN/dt` into `out`.
    pub fn rhs(&self, counts: &[f64], out: &mut [f64]) {
        let k = self.classes;
        let beta = &self.beta;
        out.par_iter_mut().enumerate().for_each(|(i, o)| {
            // class index c = i + 1; partners j + 1 and c - (j + 1)
            let c = i + 1;
            let mut birth = 0.0;
            for a in 1..=(c - 1) / 2 {
                let b = c - a;
                birth += beta[(a - 1) * k + b - 1] * counts[a - 1] * counts[b - 1];
            }
            if c % 2 == 0 && c >= 2 {
                let h = c / 2 - 1;
                birth += 0.5 * beta[h * k + h] * counts[h] * counts[h];
            }
            let row = &beta[i * k..i * k + (k - c)];
            let loss: f64 = row.iter().zip(&counts[..k - c]).map(|(b, n)| b * n).sum();
            *o = birth - counts[i] * loss;
        });
    }

    /// Integrates from `initial` to `t_end` with nominal step `dt`.
    pub fn solve(&self, initial: DpbeState, t_end: f64, dt: f64) -> Result<DpbeState> {
        if initial.counts.len() != self.classes || initial.dv != self.dv {
            return Err(Error::InvalidArgument(
                "initial state does not match the class grid".into(),
            ));
        }
        if !(dt > 0.0) || !(t_end >= initial.t) {
            return Err(Error::InvalidArgument(format!(
                "invalid time window: t0 = {}, t_end = {t_end}, dt = {dt}",
                initial.t
            )));
        }
        let k = self.classes;
        let mut n = initial.counts;
        let mut t = initial.t;
        let mut step = dt;
        let (mut n1, mut n2, mut next, mut rate) =
            (vec![0.0; k], vec![0.0; k], vec![0.0; k], vec![0.0; k]);
        let mut halvings = 0;
        while t < t_end {
            let h = step.min(t_end - t);
            let scale = n.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(f64::MIN_POSITIVE);
            let floor = -NEGATIVE_TOLERANCE * scale;

            self.rhs(&n, &mut rate);
            for i in 0..k {
                n1[i] = n[i] + h * rate[i];
            }
            self.rhs(&n1, &mut rate);
            for i in 0..k {
                n2[i] = 0.75 * n[i] + 0.25 * (n1[i] + h * rate[i]);
            }
            self.rhs(&n2, &mut rate);
            for i in 0..k {
                next[i] = n[i] / 3.0 + 2.0 / 3.0 * (n2[i] + h * rate[i]);
            }
            let bad = [&n1, &n2, &next]
                .iter()
                .any(|s| s.iter().any(|x| !(*x >= floor)));
            if bad {
                halvings += 1;
                if halvings > MAX_HALVINGS {
                    return Err(Error::HalvingBudgetExhausted { t, halvings });
                }
                step = 0.5 * h;
                continue;
            }
            std::mem::swap(&mut n, &mut next);
            t = if t_end - t <= h { t_end } else { t + h };
        }
        Ok(DpbeState {
            t,
            dv: self.dv,
            counts: n,
        })
    }
}

/// Cell averages of the piecewise-constant DPBE density on `mesh`, by exact
/// overlap integration. The part of the mesh beyond the class grid counts as
/// zero density.
pub fn project(state: &DpbeState, mesh: &Mesh) -> Vec<f64> {
    let dv = state.dv;
    let k = state.counts.len();
    // class c spans [lo_c, hi_c); class 1 starts at 0
    let lo = |c: usize| if c == 1 { 0.0 } else { (c as f64 - 0.5) * dv };
    let hi = |c: usize| (c as f64 + 0.5) * dv;
    (0..mesh.num_cells())
        .map(|i| {
            let (a, b) = (mesh.left(i), mesh.right(i));
            let first = ((a / dv + 0.5).floor() as usize).max(1);
            let mut integral = 0.0;
            let mut c = first;
            while c <= k && lo(c) < b {
                let overlap = hi(c).min(b) - lo(c).max(a);
                if overlap > 0.0 {
                    integral += state.counts[c - 1] / dv * overlap;
                }
                c += 1;
            }
            integral / (b - a)
        })
        .collect()
}
