//! Moment-conserving positivity limiter.
//!
//! On a cell whose polynomial dips below zero at a sample point, the limiter
//! replaces `n_h` by `θ (n_h + m)`, where `m = -min n_h` and
//!
//! ```text
//! θ = M_s / (M_s + m ∫_{I_i} v^s dv),     M_s = ∫_{I_i} v^s n_h dv.
//! ```
//!
//! The result is nonnegative at every sample point, keeps the `s`-th cell
//! moment, and never exceeds the original maximum. `s = 0` is the classical
//! cell-average scaling limiter.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis::{eval_modal, moment_weights, Basis};
use crate::error::{Error, Result};
use crate::mesh::Mesh;
use crate::quadrature::LineRule;

/// Number of Chebyshev points added in dense-sampling mode.
pub const DENSE_POINTS: usize = 64;

/// Relative tolerance for treating a slightly negative cell moment as zero.
pub const MOMENT_TOLERANCE: f64 = 1e-13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimiterConfig {
    #[serde(default = "default_enabled")]
    pub enabled: bool,
    /// Moment order kept by the limiter.
    #[serde(default = "default_s")]
    pub s: usize,
    /// Add 64 Chebyshev points to the sample set.
    #[serde(default)]
    pub dense_sampling: bool,
}

fn default_enabled() -> bool {
    true
}

fn default_s() -> usize {
    1
}

impl Default for LimiterConfig {
    fn default() -> Self {
        LimiterConfig {
            enabled: true,
            s: 1,
            dense_sampling: false,
        }
    }
}

/// Limiter bound to a basis and a sample set.
#[derive(Clone, Debug)]
pub struct Limiter {
    config: LimiterConfig,
    basis: Basis,
    samples: Vec<f64>,
}

impl Limiter {
    /// Samples are the `lobatto_points` Gauss-Lobatto nodes (plus Chebyshev
    /// points in dense mode).
    pub fn new(config: LimiterConfig, basis: Basis, lobatto_points: usize) -> Result<Self> {
        if config.s > basis.degree() {
            return Err(Error::Config(format!(
                "limiter moment order s = {} exceeds the polynomial degree {}",
                config.s,
                basis.degree()
            )));
        }
        let mut samples = LineRule::gauss_lobatto(lobatto_points)?.nodes().to_vec();
        if config.dense_sampling {
            samples.extend((0..DENSE_POINTS).map(|k| {
                (std::f64::consts::PI * (k as f64 + 0.5) / DENSE_POINTS as f64).cos()
            }));
        }
        Ok(Limiter {
            config,
            basis,
            samples,
        })
    }

    pub fn config(&self) -> LimiterConfig {
        self.config
    }

    /// Reference-coordinate sample points (critical points are added per cell).
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// Minimum of a cell polynomial over the sample set.
    pub fn cell_min(&self, coeffs: &[f64]) -> f64 {
        cell_min(coeffs, &self.samples)
    }

    /// Maximum of a cell polynomial over the sample set.
    pub fn cell_max(&self, coeffs: &[f64]) -> f64 {
        let mut max = self
            .samples
            .iter()
            .map(|&x| eval_modal(coeffs, x))
            .fold(f64::NEG_INFINITY, f64::max);
        if let Some(x) = critical_point(coeffs) {
            max = max.max(eval_modal(coeffs, x));
        }
        max
    }

    /// Limits cell `i` in place; returns whether it was modified.
    ///
    /// A cell moment in `[-tol, 0)` is treated as zero, where
    /// `tol = max(floor, 1e-13 (|M_s| + m ∫ v^s))`; anything more negative
    /// is an error.
    pub fn limit_cell(&self, mesh: &Mesh, i: usize, coeffs: &mut [f64], floor: f64) -> Result<bool> {
        if !self.config.enabled {
            return Ok(false);
        }
        let min = self.cell_min(coeffs);
        if min >= 0.0 {
            return Ok(false);
        }
        let s = self.config.s;
        let m = -min;
        let mut w = vec![0.0; self.basis.len()];
        moment_weights(mesh, self.basis, i, s, &mut w);
        let moment: f64 = coeffs.iter().zip(&w).map(|(c, w)| c * w).sum();
        // ∫_{I_i} v^s dv from the same weights as M_s: the constant 1 has
        // modal coefficient c0 in mode 0. Differencing powers of the cell
        // edges would cancel badly on narrow cells far from the origin.
        let vs = self.basis.constant_coefficient() * w[0];
        let tol = floor.max(MOMENT_TOLERANCE * (moment.abs() + m * vs));
        if moment < -tol || !moment.is_finite() {
            return Err(Error::NegativeMoment { cell: i, moment });
        }
        let moment = moment.max(0.0);
        let theta = moment / (moment + m * vs);
        coeffs[0] += m * self.basis.constant_coefficient();
        for c in coeffs.iter_mut() {
            *c *= theta;
        }
        Ok(true)
    }

    /// Limits every cell; returns the number of modified cells.
    pub fn apply(&self, mesh: &Mesh, coeffs: &mut [f64], floor: f64) -> Result<usize> {
        if !self.config.enabled {
            return Ok(0);
        }
        let n = self.basis.len();
        let results: Vec<Result<bool>> = coeffs
            .par_chunks_mut(n)
            .enumerate()
            .map(|(i, c)| self.limit_cell(mesh, i, c, floor))
            .collect();
        let mut count = 0;
        for r in results {
            count += usize::from(r?);
        }
        Ok(count)
    }
}

/// Minimum of a modal polynomial over `samples`, plus its interior critical
/// point for degree 2 (so the result is the exact minimum on `[-1, 1]` for
/// `k <= 2` whenever the samples include both endpoints).
pub fn cell_min(coeffs: &[f64], samples: &[f64]) -> f64 {
    let mut min = samples
        .iter()
        .map(|&x| eval_modal(coeffs, x))
        .fold(f64::INFINITY, f64::min);
    if let Some(x) = critical_point(coeffs) {
        min = min.min(eval_modal(coeffs, x));
    }
    min
}

/// Interior stationary point of a quadratic modal expansion.
fn critical_point(coeffs: &[f64]) -> Option<f64> {
    if coeffs.len() != 3 {
        return None;
    }
    // n(x) = c0 √(1/2) + c1 √(3/2) x + c2 √(5/2) (3x² - 1)/2
    let b = coeffs[1] * 1.5f64.sqrt();
    let a = coeffs[2] * 2.5f64.sqrt() * 1.5;
    if a == 0.0 {
        return None;
    }
    let x = -b / (2.0 * a);
    (x > -1.0 && x < 1.0).then_some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::DgSolution;
    use std::sync::Arc;

    fn unit() -> Arc<Mesh> {
        Arc::new(Mesh::from_edges(vec![0.0, 1.0]).unwrap())
    }

    fn limiter(k: usize, s: usize) -> Limiter {
        let config = LimiterConfig {
            enabled: true,
            s,
            dense_sampling: false,
        };
        Limiter::new(config, Basis::new(k).unwrap(), k + 2).unwrap()
    }

    #[test]
    fn linear_example() {
        let basis = Basis::new(1).unwrap();
        let sol = DgSolution::project(unit(), basis, 4, |v| 1.0 - 1.2 * v).unwrap();
        let lim = limiter(1, 1);
        assert!((lim.cell_min(sol.cell(0)) + 0.2).abs() < 1e-14);

        let mut c = sol.cell(0).to_vec();
        assert!(lim.limit_cell(&unit(), 0, &mut c, 0.0).unwrap());
        let limited = DgSolution::from_coeffs(unit(), basis, c).unwrap();
        for v in [0.0, 0.3, 1.0] {
            let expected = 0.6 * (1.0 - v);
            assert!((limited.eval(0, v).unwrap() - expected).abs() < 1e-14);
        }
        assert!((limited.cell_moment(0, 1) - 0.1).abs() < 1e-15);
    }

    #[test]
    fn nonnegative_is_untouched() {
        let sol = DgSolution::project(unit(), Basis::new(2).unwrap(), 4, |v| 3.0 + v * v).unwrap();
        let mut c = sol.cell(0).to_vec();
        assert!(!limiter(2, 1).limit_cell(&unit(), 0, &mut c, 0.0).unwrap());
        assert_eq!(c, sol.cell(0));
        let constant = DgSolution::project(unit(), Basis::new(2).unwrap(), 4, |_| 3.0).unwrap();
        assert!((limiter(2, 0).cell_min(constant.cell(0)) - 3.0).abs() < 1e-14);
    }

    #[test]
    fn quadratic_vertex_is_found() {
        // (v - 0.3)^2 - 0.01, minimum -0.01 at v = 0.3
        let sol = DgSolution::project(unit(), Basis::new(2).unwrap(), 4, |v| {
            (v - 0.3) * (v - 0.3) - 0.01
        })
        .unwrap();
        let lim = limiter(2, 1);
        assert!((lim.cell_min(sol.cell(0)) + 0.01).abs() < 1e-15);
    }

    #[test]
    fn zero_moment_collapses_to_zero() {
        // 1 - 2v on [0,1]: zero mean, s = 0
        let sol = DgSolution::project(unit(), Basis::new(1).unwrap(), 4, |v| 1.0 - 2.0 * v).unwrap();
        let mut c = sol.cell(0).to_vec();
        limiter(1, 0).limit_cell(&unit(), 0, &mut c, 0.0).unwrap();
        assert!(c.iter().all(|x| x.abs() < 1e-15));
    }

    #[test]
    fn negative_moment_is_an_error() {
        let sol = DgSolution::project(unit(), Basis::new(1).unwrap(), 4, |v| -1.0 - v).unwrap();
        let mut c = sol.cell(0).to_vec();
        let err = limiter(1, 1).limit_cell(&unit(), 0, &mut c, 0.0).unwrap_err();
        assert!(matches!(err, Error::NegativeMoment { cell: 0, .. }));
    }

    #[test]
    fn disabled_limiter_is_identity() {
        let config = LimiterConfig {
            enabled: false,
            ..LimiterConfig::default()
        };
        let lim = Limiter::new(config, Basis::new(1).unwrap(), 3).unwrap();
        let mut c = vec![0.0, -5.0];
        assert!(!lim.limit_cell(&unit(), 0, &mut c, 0.0).unwrap());
        assert_eq!(c, vec![0.0, -5.0]);
    }

    #[test]
    fn rejects_moment_order_above_degree() {
        let config = LimiterConfig {
            s: 3,
            ..LimiterConfig::default()
        };
        assert!(Limiter::new(config, Basis::new(2).unwrap(), 4).is_err());
    }

    #[test]
    fn dense_sampling_adds_points() {
        let config = LimiterConfig {
            dense_sampling: true,
            ..LimiterConfig::default()
        };
        let lim = Limiter::new(config, Basis::new(3).unwrap(), 5).unwrap();
        assert_eq!(lim.samples().len(), 5 + DENSE_POINTS);
    }
}
