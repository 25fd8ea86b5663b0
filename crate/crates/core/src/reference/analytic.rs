//! Closed-form solutions of the benchmark problems.
//!
//! Formulas with a removable singularity (`I_1(x)/x`, `sinh(x)/x`) or with
//! large cancelling exponentials are evaluated in scaled form, see
//! [`super::bessel::exp_i1_ratio`].

use std::fmt;

use serde::{Deserialize, Serialize};

use super::bessel::exp_i1_ratio;
use crate::error::{Error, Result};
use crate::kernels::{builtin_aggregation, builtin_breakage, builtin_growth, Func1, KernelSet};

/// A benchmark with a known exact solution.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case", deny_unknown_fields)]
pub enum AnalyticCase {
    /// Pure aggregation, `β = 1`, exponential initial data.
    ConstantAggregation { v0: f64 },
    /// Pure aggregation, `β = u + w`, exponential initial data.
    AdditiveAggregation { v0: f64 },
    /// Pure breakage, `γ(w) = w`, `p(u, w) = 2 / w`, exponential initial data.
    UniformLinearBreakage { v0: f64 },
    /// Aggregation (`β = 1`) with uniform/linear breakage.
    AggregationBreakage { lambda0: f64, lambda_inf: f64 },
    /// Linear growth `G = v` with `β = 1`, exponential initial data.
    GrowthConstantAggregation { v0: f64 },
    /// Linear growth `G = v` with `β = 1`, initial data `v e^{-v/v0} / v0²`.
    GrowthConstantAggregationGamma { v0: f64 },
    /// Linear growth `G = v` with `β = u + w`, exponential initial data.
    GrowthAdditiveAggregation { v0: f64 },
}

impl fmt::Display for AnalyticCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AnalyticCase::*;
        match *self {
            ConstantAggregation { v0 } => write!(f, "constant aggregation (v0 = {v0})"),
            AdditiveAggregation { v0 } => write!(f, "additive aggregation (v0 = {v0})"),
            UniformLinearBreakage { v0 } => write!(f, "uniform/linear breakage (v0 = {v0})"),
            AggregationBreakage {
                lambda0,
                lambda_inf,
            } => write!(
                f,
                "aggregation-breakage (lambda0 = {lambda0}, lambda_inf = {lambda_inf})"
            ),
            GrowthConstantAggregation { v0 } => {
                write!(f, "growth + constant aggregation (v0 = {v0})")
            }
            GrowthConstantAggregationGamma { v0 } => {
                write!(f, "growth + constant aggregation, gamma data (v0 = {v0})")
            }
            GrowthAdditiveAggregation { v0 } => {
                write!(f, "growth + additive aggregation (v0 = {v0})")
            }
        }
    }
}

/// `sinh(x) / x`.
fn sinhc(x: f64) -> f64 {
    if x.abs() < 1e-3 {
        let x2 = x * x;
        1.0 + x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0))
    } else {
        x.sinh() / x
    }
}

impl AnalyticCase {
    /// Checks that all parameters are positive and finite.
    pub fn validate(&self) -> Result<()> {
        let params: &[f64] = match self {
            AnalyticCase::AggregationBreakage {
                lambda0,
                lambda_inf,
            } => &[*lambda0, *lambda_inf],
            AnalyticCase::ConstantAggregation { v0 }
            | AnalyticCase::AdditiveAggregation { v0 }
            | AnalyticCase::UniformLinearBreakage { v0 }
            | AnalyticCase::GrowthConstantAggregation { v0 }
            | AnalyticCase::GrowthConstantAggregationGamma { v0 }
            | AnalyticCase::GrowthAdditiveAggregation { v0 } => std::slice::from_ref(v0),
        };
        if params.iter().all(|p| p.is_finite() && *p > 0.0) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "{self}: parameters must be positive and finite"
            )))
        }
    }

    /// `λ(t)` of the aggregation-breakage solution; `None` for other cases.
    pub fn lambda(&self, t: f64) -> Option<f64> {
        match *self {
            AnalyticCase::AggregationBreakage {
                lambda0: l0,
                lambda_inf: li,
            } => {
                let th = (t / li).tanh();
                Some(li * (l0 + li * th) / (li + l0 * th))
            }
            _ => None,
        }
    }

    /// Exact number density `n(v, t)`.
    pub fn density(&self, v: f64, t: f64) -> f64 {
        use AnalyticCase::*;
        match *self {
            ConstantAggregation { v0 } => {
                let s = t + 2.0;
                4.0 / (s * s * v0) * (-2.0 * v / (s * v0)).exp()
            }
            AdditiveAggregation { v0 } => {
                // (1-T)/(v√T) e^{-(1+T)v/v0} I1(2√T v/v0)
                //   = (1-T)/v0 · e^{-(1+T)v/v0} · I1(2a)/a,  a = √T v/v0
                let tt = -(-v0 * t).exp_m1();
                let a = tt.sqrt() * v / v0;
                let c = (1.0 + tt) * v / v0;
                (1.0 - tt) / v0 * ratio(c, a)
            }
            UniformLinearBreakage { v0 } => {
                let s = 1.0 + v0 * t;
                s * s / v0 * (-s * v / v0).exp()
            }
            AggregationBreakage { lambda_inf, .. } => {
                let l = self.lambda(t).unwrap_or(f64::NAN);
                let r = l / lambda_inf;
                2.0 * r * r * (-l * v).exp()
            }
            GrowthConstantAggregation { .. } => {
                let (m0, m1) = self.moments(t).unwrap_or((f64::NAN, f64::NAN));
                m0 * m0 / m1 * (-m0 / m1 * v).exp()
            }
            GrowthConstantAggregationGamma { .. } => {
                // 2M0²/M1 · e^{-b} sinh(εb)/ε,  b = 2v/M1,  ε = √(1-M0)
                let (m0, m1) = self.moments(t).unwrap_or((f64::NAN, f64::NAN));
                let b = 2.0 * v / m1;
                let eps = (1.0 - m0).max(0.0).sqrt();
                let x = eps * b;
                let shape = if x < 1e-3 {
                    b * sinhc(x) * (-b).exp()
                } else {
                    0.5 * (((eps - 1.0) * b).exp() - ((-eps - 1.0) * b).exp()) / eps
                };
                2.0 * m0 * m0 / m1 * shape
            }
            GrowthAdditiveAggregation { .. } => {
                // (M0/M1) e^{-(2-M0)v/M1} I1(2a)/a,  a = √(1-M0) v/M1
                let (m0, m1) = self.moments(t).unwrap_or((f64::NAN, f64::NAN));
                let a = (1.0 - m0).max(0.0).sqrt() * v / m1;
                let c = (2.0 - m0) * v / m1;
                m0 / m1 * ratio(c, a)
            }
        }
    }

    /// Initial condition `n(v, 0)`.
    pub fn initial(&self, v: f64) -> f64 {
        self.density(v, 0.0)
    }

    /// Boundary value `n(0, t)` for the cases with growth.
    pub fn boundary(&self, t: f64) -> Option<f64> {
        match self {
            AnalyticCase::GrowthConstantAggregation { .. }
            | AnalyticCase::GrowthConstantAggregationGamma { .. }
            | AnalyticCase::GrowthAdditiveAggregation { .. } => Some(self.density(0.0, t)),
            _ => None,
        }
    }

    /// Exact (untruncated) zeroth and first moments.
    pub fn moments(&self, t: f64) -> Option<(f64, f64)> {
        use AnalyticCase::*;
        Some(match *self {
            ConstantAggregation { v0 } => (2.0 / (t + 2.0), v0),
            AdditiveAggregation { v0 } => ((-v0 * t).exp(), v0),
            UniformLinearBreakage { v0 } => (1.0 + v0 * t, v0),
            AggregationBreakage { lambda_inf, .. } => {
                let l = self.lambda(t)?;
                let li2 = lambda_inf * lambda_inf;
                (2.0 * l / li2, 2.0 / li2)
            }
            GrowthConstantAggregation { v0 } => (2.0 / (2.0 + t), v0 * t.exp()),
            GrowthConstantAggregationGamma { v0 } => (2.0 / (2.0 + t), 2.0 * v0 * t.exp()),
            GrowthAdditiveAggregation { v0 } => ((v0 * (1.0 - t.exp())).exp(), v0 * t.exp()),
        })
    }

    /// The kernels of the benchmark, including the inflow boundary trace.
    pub fn kernels(&self) -> Result<KernelSet> {
        self.validate()?;
        use AnalyticCase::*;
        let mut k = KernelSet::default();
        match self {
            ConstantAggregation { .. } => k.aggregation = Some(builtin_aggregation("constant", 1.0)?),
            AdditiveAggregation { .. } => k.aggregation = Some(builtin_aggregation("additive", 1.0)?),
            UniformLinearBreakage { .. } => k.breakage = Some(builtin_breakage("uniform_linear", 1.0)?),
            AggregationBreakage { .. } => {
                k.aggregation = Some(builtin_aggregation("constant", 1.0)?);
                k.breakage = Some(builtin_breakage("uniform_linear", 1.0)?);
            }
            GrowthConstantAggregation { .. }
            | GrowthConstantAggregationGamma { .. }
            | GrowthAdditiveAggregation { .. } => {
                let name = if matches!(self, GrowthAdditiveAggregation { .. }) {
                    "additive"
                } else {
                    "constant"
                };
                k.aggregation = Some(builtin_aggregation(name, 1.0)?);
                k.growth = Some(builtin_growth("linear", 1.0)?);
                let case = *self;
                k.inflow = Some(Func1::new("analytic_boundary", move |t| {
                    case.boundary(t).unwrap_or(0.0)
                }));
            }
        }
        Ok(k)
    }
}

fn ratio(c: f64, a: f64) -> f64 {
    exp_i1_ratio(c, a).unwrap_or(f64::NAN)
}
