//! Modified Bessel function of the first kind, order one.
//!
//! The power series `I_1(x) = Σ (x/2)^{2m+1} / (m! (m+1)!)` has only positive
//! terms and is used up to [`SERIES_LIMIT`]; beyond that the exponentially
//! scaled asymptotic expansion
//!
//! ```text
//! e^{-x} I_1(x) ≈ (2π x)^{-1/2} Σ_k (-1)^k a_k / x^k,
//! a_k = Π_{i=1}^{k} (4 - (2i-1)^2) / (k! 8^k)
//! ```
//!
//! is summed until its terms stop decreasing. At `x = 25` the smallest term is
//! far below machine precision.

use crate::error::{Error, Result};

/// Arguments up to this value are evaluated by the power series.
pub const SERIES_LIMIT: f64 = 25.0;

fn check(x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("Bessel I1 of non-finite argument {x}")))
    }
}

/// `Σ_m (x²/4)^m / (m! (m+1)!)`, i.e. `2 I_1(x) / x`.
fn ratio_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..500 {
        term *= q / (m as f64 * (m + 1) as f64);
        sum += term;
        if term <= f64::EPSILON * 1e-3 * sum {
            break;
        }
    }
    sum
}

/// Asymptotic `e^{-x} I_1(x)` for large positive `x`.
fn scaled_asymptotic(x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        // term = (-1)^k a_k / x^k
        term *= -(4.0 - odd * odd) / (k as f64 * 8.0 * x);
        let t = term;
        if t.abs() >= last {
            break;
        }
        sum += t;
        last = t.abs();
        if last < f64::EPSILON * 1e-3 {
            break;
        }
    }
    sum / (2.0 * std::f64::consts::PI * x).sqrt()
}

/// `I_1(x)`; odd in `x`.
pub fn bessel_i1(x: f64) -> Result<f64> {
    check(x)?;
    let a = x.abs();
    let value = if a <= SERIES_LIMIT {
        0.5 * a * ratio_series(a)
    } else {
        // overflows to +inf only for x beyond ~713, as I_1 itself does
        scaled_asymptotic(a) * a.exp()
    };
    Ok(value.copysign(x))
}

/// Exponentially scaled `e^{-|x|} I_1(x)`, finite for every finite `x`.
pub fn bessel_i1e(x: f64) -> Result<f64> {
    check(x)?;
    let a = x.abs();
    let value = if a <= SERIES_LIMIT {
        0.5 * a * ratio_series(a) * (-a).exp()
    } else {
        scaled_asymptotic(a)
    };
    Ok(value.copysign(x))
}

/// `e^{-c} I_1(2a) / a` for `a >= 0`, evaluated without overflow and with the
/// removable singularity at `a = 0` (value `e^{-c}`) handled by the series.
pub fn exp_i1_ratio(c: f64, a: f64) -> Result<f64> {
    check(a)?;
    check(c)?;
    if a < 0.0 {
        return Err(Error::InvalidArgument(format!("negative Bessel ratio argument {a}")));
    }
    if 2.0 * a <= SERIES_LIMIT {
        Ok(ratio_series(2.0 * a) * (-c).exp())
    } else {
        Ok((2.0 * a - c).exp() * scaled_asymptotic(2.0 * a) / a)
    }
}
