//! Orthonormal Legendre modal basis and piecewise-polynomial DG solutions.
//!
//! On the reference interval `[-1, 1]` the basis is
//! `phi_j(x) = sqrt((2j + 1) / 2) P_j(x)`, so `int phi_j phi_m = delta_jm` and
//! on a physical cell of width `dv` the mass matrix is `(dv / 2) I`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::mesh::Mesh;
use crate::quadrature::LineRule;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Basis {
    degree: usize,
}

impl Basis {
    pub fn new(degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument(
                "polynomial degree must be at least 1".into(),
            ));
        }
        Ok(Basis { degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of modes per cell, `k + 1`.
    pub fn len(&self) -> usize {
        self.degree + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `phi_j(x)` with range checks on `j` and `x`.
    pub fn eval(&self, j: usize, x: f64) -> Result<f64> {
        if j > self.degree {
            return Err(Error::IndexOutOfRange {
                what: "basis function",
                index: j,
                len: self.len(),
            });
        }
        if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&x) {
            return Err(Error::InvalidArgument(format!(
                "reference coordinate {x} outside [-1, 1]"
            )));
        }
        let mut vals = vec![0.0; self.len()];
        self.eval_all(x, &mut vals);
        Ok(vals[j])
    }

    /// Writes `phi_0(x) .. phi_k(x)` into `out`.
    pub fn eval_all(&self, x: f64, out: &mut [f64]) {
        legendre_values(x, out);
        for (j, v) in out.iter_mut().enumerate() {
            *v *= norm(j);
        }
    }

    /// Values and first derivatives (with respect to the reference coordinate).
    pub fn eval_all_with_derivative(&self, x: f64, vals: &mut [f64], ders: &mut [f64]) {
        let n = vals.len();
        legendre_values(x, vals);
        if n > 0 {
            ders[0] = 0.0;
        }
        if n > 1 {
            ders[1] = 1.0;
        }
        // P'_{j+1} = P'_{j-1} + (2j + 1) P_j
        for j in 1..n.saturating_sub(1) {
            ders[j + 1] = ders[j - 1] + (2 * j + 1) as f64 * vals[j];
        }
        for j in 0..n {
            vals[j] *= norm(j);
            ders[j] *= norm(j);
        }
    }

    /// `phi_j(1)`.
    pub fn right_value(&self, j: usize) -> f64 {
        norm(j)
    }

    /// `phi_j(-1)`.
    pub fn left_value(&self, j: usize) -> f64 {
        if j.is_multiple_of(2) {
            norm(j)
        } else {
            -norm(j)
        }
    }

    /// Modal coefficients of the constant function 1.
    pub fn constant_coefficient(&self) -> f64 {
        std::f64::consts::SQRT_2
    }
}

fn norm(j: usize) -> f64 {
    ((2 * j + 1) as f64 / 2.0).sqrt()
}

fn legendre_values(x: f64, out: &mut [f64]) {
    let n = out.len();
    if n == 0 {
        return;
    }
    out[0] = 1.0;
    if n > 1 {
        out[1] = x;
    }
    for j in 1..n.saturating_sub(1) {
        let jf = j as f64;
        out[j + 1] = ((2.0 * jf + 1.0) * x * out[j] - jf * out[j - 1]) / (jf + 1.0);
    }
}

/// Modal coefficients `c_j^i` of a piecewise polynomial on a mesh.
#[derive(Clone, Debug)]
pub struct DgSolution {
    mesh: Arc<Mesh>,
    basis: Basis,
    coeffs: Vec<f64>,
}

impl DgSolution {
    pub fn zeros(mesh: Arc<Mesh>, basis: Basis) -> Self {
        let n = mesh.num_cells() * basis.len();
        DgSolution {
            mesh,
            basis,
            coeffs: vec![0.0; n],
        }
    }

    pub fn from_coeffs(mesh: Arc<Mesh>, basis: Basis, coeffs: Vec<f64>) -> Result<Self> {
        let n = mesh.num_cells() * basis.len();
        if coeffs.len() != n {
            return Err(Error::InvalidArgument(format!(
                "expected {n} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(DgSolution {
            mesh,
            basis,
            coeffs,
        })
    }

    /// Cellwise L2 projection of `f` using an `n_points` Gauss-Legendre rule.
    pub fn project<F: Fn(f64) -> f64>(
        mesh: Arc<Mesh>,
        basis: Basis,
        n_points: usize,
        f: F,
    ) -> Result<Self> {
        let rule = LineRule::gauss_legendre(n_points)?;
        let nb = basis.len();
        let mut sol = DgSolution::zeros(mesh, basis);
        let mut phi = vec![0.0; nb];
        for i in 0..sol.mesh.num_cells() {
            let mut c = vec![0.0; nb];
            for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
                let fv = f(sol.mesh.from_reference(i, x));
                basis.eval_all(x, &mut phi);
                for j in 0..nb {
                    c[j] += w * fv * phi[j];
                }
            }
            sol.cell_mut(i).copy_from_slice(&c);
        }
        Ok(sol)
    }

    pub fn mesh(&self) -> &Arc<Mesh> {
        &self.mesh
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn cell(&self, i: usize) -> &[f64] {
        let nb = self.basis.len();
        &self.coeffs[i * nb..(i + 1) * nb]
    }

    pub fn cell_mut(&mut self, i: usize) -> &mut [f64] {
        let nb = self.basis.len();
        &mut self.coeffs[i * nb..(i + 1) * nb]
    }

    /// `n_h` on cell `i` at reference coordinate `x`.
    pub fn eval_reference(&self, i: usize, x: f64) -> f64 {
        eval_modal(self.cell(i), x)
    }

    /// `n_h` restricted to cell `i`, evaluated at physical size `v`.
    pub fn eval(&self, i: usize, v: f64) -> Result<f64> {
        self.mesh.check_cell(i)?;
        let tol = 1e-12 * self.mesh.width(i).max(self.mesh.right(i).abs());
        if v < self.mesh.left(i) - tol || v > self.mesh.right(i) + tol {
            return Err(Error::InvalidArgument(format!(
                "v = {v} outside cell {i} [{}, {}]",
                self.mesh.left(i),
                self.mesh.right(i)
            )));
        }
        Ok(self.eval_reference(i, self.mesh.to_reference(i, v)))
    }

    /// Evaluates `n_h` at any `v` in the domain (interior edges take the
    /// right cell's value).
    pub fn eval_global(&self, v: f64) -> Option<f64> {
        let i = self.mesh.cell_of(v)?;
        Some(self.eval_reference(i, self.mesh.to_reference(i, v)))
    }

    /// Left limit of `n_h` at the right edge of cell `i`.
    pub fn right_trace(&self, i: usize) -> f64 {
        self.cell(i)
            .iter()
            .enumerate()
            .map(|(j, c)| c * self.basis.right_value(j))
            .sum()
    }

    /// Right limit of `n_h` at the left edge of cell `i`.
    pub fn left_trace(&self, i: usize) -> f64 {
        self.cell(i)
            .iter()
            .enumerate()
            .map(|(j, c)| c * self.basis.left_value(j))
            .sum()
    }

    /// Cell average of `n_h` over cell `i`.
    pub fn cell_average(&self, i: usize) -> f64 {
        self.cell(i)[0] / std::f64::consts::SQRT_2
    }

    /// `int_{I_i} v^s n_h dv`, exact up to rounding.
    pub fn cell_moment(&self, i: usize, s: usize) -> f64 {
        let rule = moment_rule(self.basis.degree(), s);
        let half = 0.5 * self.mesh.width(i);
        rule.nodes()
            .iter()
            .zip(rule.weights())
            .map(|(&x, &w)| {
                let v = self.mesh.from_reference(i, x);
                w * v.powi(s as i32) * self.eval_reference(i, x)
            })
            .sum::<f64>()
            * half
    }

    /// `int v^s n_h dv` over the whole domain, with compensated summation.
    pub fn total_moment(&self, s: usize) -> f64 {
        neumaier_sum((0..self.mesh.num_cells()).map(|i| self.cell_moment(i, s)))
    }
}

/// Evaluates a modal expansion at reference coordinate `x`.
pub fn eval_modal(coeffs: &[f64], x: f64) -> f64 {
    let n = coeffs.len();
    let (mut p_prev, mut p) = (1.0, x);
    let mut sum = coeffs[0] * norm(0);
    if n > 1 {
        sum += coeffs[1] * norm(1) * x;
    }
    for j in 1..n.saturating_sub(1) {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0) * x * p - jf * p_prev) / (jf + 1.0);
        p_prev = p;
        p = next;
        sum += coeffs[j + 1] * norm(j + 1) * p;
    }
    sum
}

/// Writes `int_{I_i} v^s φ_j^i dv` for every basis function `j` into `out`.
pub fn moment_weights(mesh: &Mesh, basis: Basis, i: usize, s: usize, out: &mut [f64]) {
    let rule = moment_rule(basis.degree(), s);
    let half = 0.5 * mesh.width(i);
    let mut phi = vec![0.0; basis.len()];
    out.iter_mut().for_each(|o| *o = 0.0);
    for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
        let v = mesh.from_reference(i, x);
        basis.eval_all(x, &mut phi);
        let f = half * w * v.powi(s as i32);
        for (o, p) in out.iter_mut().zip(&phi) {
            *o += f * p;
        }
    }
}

/// Gauss-Legendre rule exact for `v^s` times a degree-`k` polynomial.
pub(crate) fn moment_rule(k: usize, s: usize) -> &'static LineRule {
    LineRule::gauss_legendre_cached((k + s) / 2 + 1)
}

/// Compensated (Neumaier) summation.
pub fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}
