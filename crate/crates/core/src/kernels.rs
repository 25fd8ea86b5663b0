//! Model functions: growth rate `G(v)`, nucleation source `S(v)`, aggregation
//! kernel `β(u, w)`, breakage rate `γ(w)` with daughter distribution `p(u, w)`,
//! and the inflow boundary value `n(0, t)`.
//!
//! Each function is a named, shareable closure. Built-ins cover the kernels of
//! the standard benchmarks; anything else can be supplied with
//! [`Func1::new`] / [`Func2::new`].

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::quadrature::LineRule;

/// Arguments of fractional powers are floored at this value so that nodes
/// touching `u = 0` or `w = 0` stay finite.
pub const SIZE_FLOOR: f64 = 1e-30;

/// Relative residual above which [`validate`] reports a failure.
pub const VALIDATION_TOLERANCE: f64 = 1e-10;

/// A named function of one variable.
#[derive(Clone)]
pub struct Func1 {
    name: String,
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl Func1 {
    pub fn new(name: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Func1 {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Debug for Func1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Func1({})", self.name)
    }
}

/// A named function of two variables.
#[derive(Clone)]
pub struct Func2 {
    name: String,
    f: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
}

impl Func2 {
    pub fn new(
        name: impl Into<String>,
        f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Func2 {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    #[inline]
    pub fn eval(&self, u: f64, w: f64) -> f64 {
        (self.f)(u, w)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Debug for Func2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Func2({})", self.name)
    }
}

/// Breakage rate and daughter distribution.
#[derive(Clone, Debug)]
pub struct Breakage {
    /// `γ(w)`.
    pub rate: Func1,
    /// `p(u, w)`, number density of fragments of size `u` from a parent `w`.
    pub daughter: Func2,
}

/// The active processes of a problem. `None` means the process is off.
#[derive(Clone, Debug, Default)]
pub struct KernelSet {
    pub growth: Option<Func1>,
    pub nucleation: Option<Func1>,
    pub aggregation: Option<Func2>,
    pub breakage: Option<Breakage>,
    /// Boundary value `n(0, t)`, used only when growth is active.
    pub inflow: Option<Func1>,
}

impl KernelSet {
    pub fn has_growth(&self) -> bool {
        self.growth.is_some()
    }

    pub fn is_empty(&self) -> bool {
        self.growth.is_none()
            && self.nucleation.is_none()
            && self.aggregation.is_none()
            && self.breakage.is_none()
    }
}

/// Built-in aggregation kernel scaled by `multiplier`.
///
/// `constant` (β = 1), `additive` (u + w), `free_molecule`,
/// `brownian` and `gravitational`.
pub fn builtin_aggregation(name: &str, multiplier: f64) -> Result<Func2> {
    check_multiplier(name, multiplier)?;
    let c = multiplier;
    let cbrt = |x: f64| x.max(SIZE_FLOOR).cbrt();
    let f = match name {
        "constant" => Func2::new(name, move |_, _| c),
        "additive" => Func2::new(name, move |u, w| c * (u + w)),
        "free_molecule" => Func2::new(name, move |u, w| {
            let (u, w) = (u.max(SIZE_FLOOR), w.max(SIZE_FLOOR));
            let s = u.cbrt() + w.cbrt();
            c * (1.0 / u + 1.0 / w).sqrt() * s * s
        }),
        "brownian" => Func2::new(name, move |u, w| {
            let (a, b) = (cbrt(u), cbrt(w));
            c * (1.0 / a + 1.0 / b) * (a + b)
        }),
        "gravitational" => Func2::new(name, move |u, w| {
            let (a, b) = (cbrt(u), cbrt(w));
            c * (a + b) * (a + b) * (a * a - b * b).abs()
        }),
        _ => {
            return Err(Error::Kernel(format!(
                "unknown aggregation kernel '{name}' (expected constant, additive, \
                 free_molecule, brownian or gravitational)"
            )))
        }
    };
    Ok(f)
}

/// Built-in breakage model. Only `uniform_linear` exists: `γ(w) = c w`,
/// `p(u, w) = 2 / w`.
pub fn builtin_breakage(name: &str, multiplier: f64) -> Result<Breakage> {
    check_multiplier(name, multiplier)?;
    match name {
        "uniform_linear" => Ok(Breakage {
            rate: Func1::new("linear", move |w| multiplier * w),
            daughter: Func2::new("uniform", |_, w| 2.0 / w.max(SIZE_FLOOR)),
        }),
        _ => Err(Error::Kernel(format!(
            "unknown breakage kernel '{name}' (expected uniform_linear)"
        ))),
    }
}

/// Built-in growth rate: `constant` (G = c) or `linear` (G = c v).
pub fn builtin_growth(name: &str, multiplier: f64) -> Result<Func1> {
    check_multiplier(name, multiplier)?;
    let c = multiplier;
    match name {
        "constant" => Ok(Func1::new(name, move |_| c)),
        "linear" => Ok(Func1::new(name, move |v| c * v)),
        _ => Err(Error::Kernel(format!(
            "unknown growth rate '{name}' (expected constant or linear)"
        ))),
    }
}

/// Narrow Gaussian approximation of a point source `rate · δ(v - center)`.
pub fn gaussian_nucleation(rate: f64, center: f64, width: f64) -> Result<Func1> {
    if !(width > 0.0 && width.is_finite()) {
        return Err(Error::Kernel(format!(
            "nucleation width must be positive, got {width}"
        )));
    }
    if !rate.is_finite() || !center.is_finite() {
        return Err(Error::Kernel("nucleation parameters must be finite".into()));
    }
    let norm = rate / (width * (2.0 * std::f64::consts::PI).sqrt());
    Ok(Func1::new("gaussian", move |v| {
        let z = (v - center) / width;
        norm * (-0.5 * z * z).exp()
    }))
}

fn check_multiplier(name: &str, c: f64) -> Result<()> {
    if !(c.is_finite() && c >= 0.0) {
        return Err(Error::Kernel(format!(
            "multiplier for '{name}' must be finite and nonnegative, got {c}"
        )));
    }
    Ok(())
}

/// Outcome of [`validate`]. Residuals are relative; `None` means the
/// corresponding process is inactive.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    /// `max |β(u,w) - β(w,u)| / max |β|` over random samples.
    pub symmetry_residual: Option<f64>,
    /// `max_w |∫_0^w u p(u,w) du - w| / w` over random parents.
    pub daughter_mass_residual: Option<f64>,
    /// Smallest growth rate seen on the samples.
    pub min_growth: Option<f64>,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Spot-checks the structural properties of the kernels on `samples` random
/// points in `(0, v_max]`.
pub fn validate(kernels: &KernelSet, v_max: f64, samples: usize, seed: u64) -> ValidationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut draw = move || v_max * (1.0 - rng.gen::<f64>());
    let points: Vec<(f64, f64)> = (0..samples.max(1)).map(|_| (draw(), draw())).collect();

    let symmetry_residual = kernels.aggregation.as_ref().map(|beta| {
        let mut diff: f64 = 0.0;
        let mut scale: f64 = 0.0;
        for &(u, w) in &points {
            let (a, b) = (beta.eval(u, w), beta.eval(w, u));
            if !a.is_finite() || !b.is_finite() {
                return f64::INFINITY;
            }
            diff = diff.max((a - b).abs());
            scale = scale.max(a.abs()).max(b.abs());
        }
        if scale > 0.0 {
            diff / scale
        } else {
            0.0
        }
    });
    if let Some(r) = symmetry_residual {
        if !(r <= VALIDATION_TOLERANCE) {
            failures.push(format!("aggregation kernel is not symmetric (residual {r:e})"));
        }
    }

    let daughter_mass_residual = kernels.breakage.as_ref().map(|b| {
        let rule = LineRule::gauss_legendre_cached(24);
        points
            .iter()
            .map(|&(_, w)| {
                let m = rule.integrate_interval(0.0, w, |u| u * b.daughter.eval(u, w));
                if m.is_finite() {
                    (m - w).abs() / w
                } else {
                    f64::INFINITY
                }
            })
            .fold(0.0, f64::max)
    });
    if let Some(r) = daughter_mass_residual {
        if !(r <= VALIDATION_TOLERANCE) {
            failures.push(format!(
                "daughter distribution does not conserve mass (residual {r:e})"
            ));
        }
    }

    let min_growth = kernels.growth.as_ref().map(|g| {
        points
            .iter()
            .flat_map(|&(u, w)| [u, w])
            .chain([0.0, v_max])
            .map(|v| g.eval(v))
            .fold(f64::INFINITY, |a, b| if b.is_nan() { f64::NEG_INFINITY } else { a.min(b) })
    });
    if let Some(g) = min_growth {
        if !(g >= 0.0) {
            failures.push(format!("growth rate is negative somewhere ({g:e})"));
        }
    }

    ValidationReport {
        symmetry_residual,
        daughter_mass_residual,
        min_growth,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_values() {
        let b = builtin_aggregation("brownian", 1.0).unwrap();
        assert!((b.eval(1.0, 1.0) - 4.0).abs() < 1e-15);
        let g = builtin_aggregation("gravitational", 1.0).unwrap();
        assert_eq!(g.eval(0.7, 0.7), 0.0);
        let f = builtin_aggregation("free_molecule", 1.0).unwrap();
        assert!((f.eval(1.0, 1.0) - 4.0 * 2f64.sqrt()).abs() < 1e-14);
        let c = builtin_aggregation("constant", 2.5).unwrap();
        assert_eq!(c.eval(3.0, 0.1), 2.5);
        let a = builtin_aggregation("additive", 1.0).unwrap();
        assert_eq!(a.eval(0.25, 0.5), 0.75);
        assert!(builtin_aggregation("multiplicative", 1.0).is_err());
        assert!(builtin_aggregation("constant", f64::NAN).is_err());
    }

    #[test]
    fn fractional_kernels_finite_at_zero() {
        for name in ["free_molecule", "brownian", "gravitational"] {
            let k = builtin_aggregation(name, 1.0).unwrap();
            assert!(k.eval(0.0, 1.0).is_finite(), "{name}");
            assert!(k.eval(1.0, 0.0).is_finite(), "{name}");
        }
    }

    #[test]
    fn uniform_linear_breakage() {
        let b = builtin_breakage("uniform_linear", 1.0).unwrap();
        assert_eq!(b.rate.eval(3.0), 3.0);
        let rule = LineRule::gauss_lobatto(3).unwrap();
        let w = 1.7;
        let mass = rule.integrate_interval(0.0, w, |u| u * b.daughter.eval(u, w));
        assert!((mass - w).abs() < 1e-15);
        let count = rule.integrate_interval(0.0, w, |u| b.daughter.eval(u, w));
        assert!((count - 2.0).abs() < 1e-15);
        assert!(builtin_breakage("binary", 1.0).is_err());
    }

    #[test]
    fn growth_and_nucleation() {
        assert_eq!(builtin_growth("linear", 2.0).unwrap().eval(3.0), 6.0);
        assert_eq!(builtin_growth("constant", 2.0).unwrap().eval(3.0), 2.0);
        let s = gaussian_nucleation(1.0, 0.5, 0.05).unwrap();
        let rule = LineRule::gauss_legendre(24).unwrap();
        let total: f64 = (0..20)
            .map(|p| rule.integrate_interval(p as f64 / 20.0, (p + 1) as f64 / 20.0, |v| s.eval(v)))
            .sum();
        assert!((total - 1.0).abs() < 1e-8);
        assert!(gaussian_nucleation(1.0, 0.5, 0.0).is_err());
    }

    #[test]
    fn validation_reports() {
        let ks = KernelSet {
            aggregation: Some(builtin_aggregation("additive", 1.0).unwrap()),
            breakage: Some(builtin_breakage("uniform_linear", 1.0).unwrap()),
            growth: Some(builtin_growth("linear", 1.0).unwrap()),
            ..Default::default()
        };
        let r = validate(&ks, 10.0, 200, 7);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.symmetry_residual, Some(0.0));
        assert!(r.daughter_mass_residual.unwrap() < 1e-12);

        let bad = KernelSet {
            aggregation: Some(Func2::new("asymmetric", |u, _| u)),
            growth: Some(Func1::new("shrink", |v| -v)),
            ..Default::default()
        };
        let r = validate(&bad, 10.0, 200, 7);
        assert!(!r.passed());
        assert_eq!(r.failures.len(), 2);
    }
}
