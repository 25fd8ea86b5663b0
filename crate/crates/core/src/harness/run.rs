//! Executing a [`ProblemSpec`]: projection, time stepping, moment tracking,
//! error norms and convergence studies.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::config::{ProblemSpec, ReferenceSpec, StepSize};
use crate::assembly::DgData;
use crate::basis::{moment_weights, neumaier_sum, Basis, DgSolution};
use crate::error::{Error, Result};
use crate::limiter::Limiter;
use crate::mesh::Mesh;
use crate::quadrature::LineRule;
use crate::reference::dpbe::{self, Dpbe, DpbeState};
use crate::reference::AnalyticCase;
use crate::timestep::{RunSummary, StepMode, Stepper, TimeController};

/// `L¹`, `L²` and node-maximum errors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Norms {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

impl Norms {
    pub fn as_array(&self) -> [f64; 3] {
        [self.l1, self.l2, self.linf]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentRecord {
    pub t: f64,
    pub m0: f64,
    pub m1: f64,
    /// `M_1(t) - M_1(0)`.
    pub mass_deviation: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepRecord {
    pub t: f64,
    pub dt: f64,
    pub halvings: usize,
    pub limiter_activations: usize,
}

/// One row of a convergence table; `orders` is `None` on the first level.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub level: usize,
    pub cells: usize,
    pub norms: Norms,
    pub orders: Option<[f64; 3]>,
}

/// Everything a run produces.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub name: String,
    pub solution: DgSolution,
    pub moments: Vec<MomentRecord>,
    pub steps: Vec<StepRecord>,
    pub summary: RunSummary,
    /// Exact solution used for `n_exact` and the error norms.
    pub analytic: Option<AnalyticCase>,
    /// Errors against the reference at the final time, if one is available.
    pub errors: Vec<ConvergenceRow>,
    /// DPBE reference at the final time.
    pub dpbe: Option<DpbeState>,
    /// Reference cell averages on the DG mesh (DPBE projection).
    pub reference_averages: Option<Vec<f64>>,
    /// `Σ |ā_h - ā_ref| Δv / Σ |ā_ref| Δv` over cell averages.
    pub reference_l1_relative: Option<f64>,
}

impl RunOutput {
    /// Largest `|M_1(t) - M_1(0)|` over the recorded times.
    pub fn max_mass_deviation(&self) -> f64 {
        self.moments
            .iter()
            .map(|m| m.mass_deviation.abs())
            .fold(0.0, f64::max)
    }

    pub fn initial_mass(&self) -> f64 {
        self.moments.first().map_or(0.0, |m| m.m1)
    }
}

/// L² projection of the initial condition with `2k + 2` Gauss points per
/// cell, followed by one limiter pass.
pub fn project_initial(spec: &ProblemSpec, mesh: Arc<Mesh>, basis: Basis) -> Result<DgSolution> {
    let f = spec.initial_fn()?;
    let mut sol = DgSolution::project(mesh, basis, 2 * basis.degree() + 2, |v| f(v))?;
    let limiter = Limiter::new(spec.limiter, basis, spec.dg.options().lobatto_points)?;
    let mesh = Arc::clone(sol.mesh());
    limiter.apply(&mesh, sol.coeffs_mut(), 0.0)?;
    Ok(sol)
}

/// Errors of `sol` against a pointwise reference, using `2k + 2` Gauss points
/// per cell; the maximum norm is the maximum over those nodes.
pub fn error_norms(sol: &DgSolution, reference: impl Fn(f64) -> f64) -> Norms {
    let mesh = sol.mesh();
    let rule = LineRule::gauss_legendre(2 * sol.basis().degree() + 2)
        .expect("Gauss rules exist for every supported degree");
    let mut l1 = Vec::with_capacity(mesh.num_cells());
    let mut l2 = Vec::with_capacity(mesh.num_cells());
    let mut linf: f64 = 0.0;
    for i in 0..mesh.num_cells() {
        let half = 0.5 * mesh.width(i);
        let (mut a, mut b) = (0.0, 0.0);
        for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
            let e = (reference(mesh.from_reference(i, x)) - sol.eval_reference(i, x)).abs();
            a += w * e;
            b += w * e * e;
            linf = linf.max(e);
        }
        l1.push(half * a);
        l2.push(half * b);
    }
    Norms {
        l1: neumaier_sum(l1),
        l2: neumaier_sum(l2).sqrt(),
        linf,
    }
}

/// Observed orders `log2(e_{ℓ-1} / e_ℓ)` for the three norms.
pub fn orders(coarse: &Norms, fine: &Norms) -> [f64; 3] {
    let c = coarse.as_array();
    let f = fine.as_array();
    [0, 1, 2].map(|k| (c[k] / f[k]).log2())
}

/// Precomputed zeroth and first moment weights.
struct MomentTracker {
    n: usize,
    w0: Vec<f64>,
    w1: Vec<f64>,
}

impl MomentTracker {
    fn new(mesh: &Mesh, basis: Basis) -> Self {
        let n = basis.len();
        let l = mesh.num_cells();
        let (mut w0, mut w1) = (vec![0.0; l * n], vec![0.0; l * n]);
        for i in 0..l {
            moment_weights(mesh, basis, i, 0, &mut w0[i * n..(i + 1) * n]);
            moment_weights(mesh, basis, i, 1, &mut w1[i * n..(i + 1) * n]);
        }
        MomentTracker { n, w0, w1 }
    }

    fn moments(&self, c: &[f64]) -> (f64, f64) {
        let dot = |w: &[f64]| {
            neumaier_sum(
                c.chunks(self.n)
                    .zip(w.chunks(self.n))
                    .map(|(c, w)| c.iter().zip(w).map(|(a, b)| a * b).sum::<f64>()),
            )
        };
        (dot(&self.w0), dot(&self.w1))
    }
}

/// Runs `spec` on its own mesh.
pub fn run(spec: &ProblemSpec) -> Result<RunOutput> {
    spec.validate()?;
    let mesh = spec.mesh.build()?;
    let dt = spec.time.step_for(&mesh);
    run_on_mesh(spec, mesh, dt)
}

/// Runs `spec` on `mesh` with nominal step `dt`.
pub fn run_on_mesh(spec: &ProblemSpec, mesh: Mesh, dt: f64) -> Result<RunOutput> {
    let mesh = Arc::new(mesh);
    let basis = Basis::new(spec.dg.degree)?;
    let options = spec.dg.options();
    let data = DgData::build(Arc::clone(&mesh), basis, spec.kernels()?, options)?;
    let limiter = Limiter::new(spec.limiter, basis, options.lobatto_points)?;
    let initial = project_initial(spec, Arc::clone(&mesh), basis)?;

    let mut ctl = TimeController::new(dt, spec.time.t_end)?;
    ctl.max_halvings = spec.time.max_halvings;
    if let Some(safety) = spec.time.cfl_safety {
        ctl.mode = StepMode::Theorem { safety };
    }

    let tracker = MomentTracker::new(&mesh, basis);
    let (m0, m1_initial) = tracker.moments(initial.coeffs());
    let mut moments = vec![MomentRecord {
        t: 0.0,
        m0,
        m1: m1_initial,
        mass_deviation: 0.0,
    }];
    let mut steps = Vec::new();
    let stride = spec.output.moment_stride.unwrap_or(1).max(1);
    let t_end = spec.time.t_end;

    let mut coeffs = initial.into_coeffs();
    let mut stepper = Stepper::for_data(&data, &limiter);
    let summary = stepper.run(&mut ctl, &mut coeffs, |t, c, report| {
        steps.push(StepRecord {
            t,
            dt: report.dt,
            halvings: report.halvings,
            limiter_activations: report.limiter_activations,
        });
        if steps.len() % stride == 0 || t >= t_end {
            let (m0, m1) = tracker.moments(c);
            moments.push(MomentRecord {
                t,
                m0,
                m1,
                mass_deviation: m1 - m1_initial,
            });
        }
    })?;
    let solution = DgSolution::from_coeffs(Arc::clone(&mesh), basis, coeffs)?;

    let analytic = spec.analytic();
    let mut errors = Vec::new();
    if let Some(case) = analytic {
        errors.push(ConvergenceRow {
            level: 0,
            cells: mesh.num_cells(),
            norms: error_norms(&solution, |v| case.density(v, t_end)),
            orders: None,
        });
    }
    let mut out = RunOutput {
        name: spec.name.clone(),
        solution,
        moments,
        steps,
        summary,
        analytic,
        errors,
        dpbe: None,
        reference_averages: None,
        reference_l1_relative: None,
    };
    if let Some(ReferenceSpec::Dpbe {
        classes,
        dt,
        richardson,
    }) = spec.problem.reference
    {
        let (state, averages) = dpbe_reference(spec, &mesh, classes, dt, richardson)?;
        out.reference_l1_relative = Some(relative_l1(&out.solution, &averages));
        out.dpbe = Some(state);
        out.reference_averages = Some(averages);
    }
    Ok(out)
}

/// DPBE reference cell averages at the final time. With `richardson`, the
/// projection from `2K` classes is extrapolated against the one from `K`
/// classes, `2 P_{2K} - P_K`; the returned state is the finer one.
pub fn dpbe_reference(
    spec: &ProblemSpec,
    mesh: &Mesh,
    classes: usize,
    dt: f64,
    richardson: bool,
) -> Result<(DpbeState, Vec<f64>)> {
    let solve = |k: usize| -> Result<(DpbeState, Vec<f64>)> {
        let state = dpbe_solve(spec, mesh.v_max(), k, dt)?;
        let avg = dpbe::project(&state, mesh);
        Ok((state, avg))
    };
    if richardson {
        let (_, coarse) = solve(classes)?;
        let (state, fine) = solve(2 * classes)?;
        let avg = fine.iter().zip(&coarse).map(|(f, c)| 2.0 * f - c).collect();
        Ok((state, avg))
    } else {
        solve(classes)
    }
}

/// Solves the DPBE for `spec`'s aggregation kernel and initial data with
/// `classes` classes on `[0, v_max]`.
pub fn dpbe_solve(spec: &ProblemSpec, v_max: f64, classes: usize, dt: f64) -> Result<DpbeState> {
    let kernel = spec
        .kernels()?
        .aggregation
        .ok_or_else(|| Error::Config("dpbe reference requires an aggregation kernel".into()))?;
    let dv = v_max / classes as f64;
    let solver = Dpbe::new(&kernel, dv, classes)?;
    let f = spec.initial_fn()?;
    let counts = solver.initial_counts(|v| f(v));
    let state = DpbeState {
        t: 0.0,
        dv,
        counts,
    };
    solver.solve(state, spec.time.t_end, dt)
}

/// Relative `L¹` distance between the cell averages of `sol` and `averages`.
pub fn relative_l1(sol: &DgSolution, averages: &[f64]) -> f64 {
    let mesh = sol.mesh();
    let (mut num, mut den) = (Vec::new(), Vec::new());
    for (i, a) in averages.iter().enumerate() {
        let h = mesh.width(i);
        num.push((sol.cell_average(i) - a).abs() * h);
        den.push(a.abs() * h);
    }
    neumaier_sum(num) / neumaier_sum(den)
}

/// Runs `spec` on `levels` successively split meshes and tabulates the errors
/// against its analytic reference. The time step follows the mesh: a
/// `mesh_factor` rule is re-evaluated on every level, a fixed step is scaled
/// with the smallest cell width.
pub fn convergence_study(spec: &ProblemSpec, levels: usize) -> Result<Vec<ConvergenceRow>> {
    let case = spec.analytic().ok_or_else(|| {
        Error::Config("a convergence study needs an analytic reference".into())
    })?;
    convergence_study_with(spec, levels, |v, t| case.density(v, t))
}

/// [`convergence_study`] against an arbitrary reference `n(v, t)`.
pub fn convergence_study_with(
    spec: &ProblemSpec,
    levels: usize,
    reference: impl Fn(f64, f64) -> f64,
) -> Result<Vec<ConvergenceRow>> {
    if levels < 2 {
        return Err(Error::Config(format!(
            "a convergence study needs at least 2 levels, got {levels}"
        )));
    }
    spec.validate()?;
    let t_end = spec.time.t_end;
    let base = spec.mesh.build()?;
    let mut mesh = base.clone();
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(levels);
    for level in 0..levels {
        let dt = match spec.time.dt {
            StepSize::MeshFactor(f) => f * mesh.min_width(),
            StepSize::Fixed(dt) => dt * mesh.min_width() / base.min_width(),
        };
        let out = run_on_mesh(spec, mesh.clone(), dt)?;
        let norms = error_norms(&out.solution, |v| reference(v, t_end));
        let orders = rows.last().map(|prev| orders(&prev.norms, &norms));
        rows.push(ConvergenceRow {
            level,
            cells: mesh.num_cells(),
            norms,
            orders,
        });
        mesh = mesh.refine_split();
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::config::*;
    use crate::limiter::LimiterConfig;

    fn unit_solution(k: usize, f: impl Fn(f64) -> f64) -> DgSolution {
        let mesh = Arc::new(Mesh::uniform(1.0, 4).unwrap());
        DgSolution::project(mesh, Basis::new(k).unwrap(), 2 * k + 2, f).unwrap()
    }

    #[test]
    fn norms_of_identical_and_constant() {
        let sol = unit_solution(2, |v| v * v - v + 1.0);
        let n = error_norms(&sol, |v| v * v - v + 1.0);
        assert!(n.l1 < 1e-14 && n.l2 < 1e-14 && n.linf < 1e-14);
        let zero = unit_solution(2, |_| 0.0);
        let n = error_norms(&zero, |_| 1.0);
        assert!((n.l1 - 1.0).abs() < 1e-14);
        assert!((n.l2 - 1.0).abs() < 1e-14);
        assert!((n.linf - 1.0).abs() < 1e-14);
    }

    fn spec_with_initial(initial: InitialCondition, degree: usize) -> ProblemSpec {
        ProblemSpec {
            name: "t".into(),
            problem: Problem {
                growth: None,
                nucleation: None,
                aggregation: None,
                breakage: None,
                initial,
                boundary: BoundaryCondition::Zero,
                reference: None,
            },
            mesh: MeshSpec::Power {
                v_max: 10.0,
                cells: 15,
                exponent: 3.0,
            },
            dg: DgSpec {
                degree,
                lobatto_points: None,
                triangle_degree: None,
                compact: None,
            },
            time: TimeSpec {
                t_end: 0.1,
                dt: StepSize::Fixed(0.05),
                cfl_safety: None,
                max_halvings: 40,
            },
            limiter: LimiterConfig::default(),
            output: OutputSpec::default(),
        }
    }

    #[test]
    fn initial_projection_of_exponential() {
        let spec = spec_with_initial(InitialCondition::Exponential { v0: 0.2 }, 2);
        let mesh = Arc::new(spec.mesh.build().unwrap());
        let sol = project_initial(&spec, Arc::clone(&mesh), Basis::new(2).unwrap()).unwrap();
        let h = mesh.width(0);
        let exact = (1.0 - (-h / 0.2).exp()) / h;
        assert!(((sol.cell_average(0) - exact) / exact).abs() < 1e-12);
    }

    #[test]
    fn constant_projects_to_constant_mode() {
        let spec = spec_with_initial(
            InitialCondition::Tabulated {
                v: vec![0.0, 10.0],
                n: vec![1.0, 1.0],
            },
            2,
        );
        let mesh = Arc::new(spec.mesh.build().unwrap());
        let sol = project_initial(&spec, mesh, Basis::new(2).unwrap()).unwrap();
        for i in 0..15 {
            let c = sol.cell(i);
            assert!((c[0] - 2f64.sqrt()).abs() < 1e-13);
            assert!(c[1].abs() < 1e-13 && c[2].abs() < 1e-13);
        }
    }

    #[test]
    fn zero_operator_run_keeps_state_and_counts_rows() {
        let spec = spec_with_initial(InitialCondition::Exponential { v0: 0.2 }, 2);
        let out = run(&spec).unwrap();
        assert_eq!(out.steps.len(), 2);
        assert_eq!(out.moments.len(), 3);
        // the SSP-RK3 convex combinations round even with a zero operator
        assert!(out.max_mass_deviation() <= 1e-15 * out.initial_mass());
        assert!(out.errors.is_empty());
    }

    #[test]
    fn polynomial_data_has_zero_error_at_all_levels() {
        let spec = spec_with_initial(
            InitialCondition::Tabulated {
                v: vec![0.0, 10.0],
                n: vec![1.0, 3.0],
            },
            1,
        );
        let rows = convergence_study_with(&spec, 3, |v, _| 1.0 + 0.2 * v).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[2].cells, 60);
        for r in &rows {
            assert!(r.norms.linf < 1e-13, "{r:?}");
        }
        assert!(rows[0].orders.is_none() && rows[1].orders.is_some());
        assert!(convergence_study(&spec, 2).is_err());
        assert!(convergence_study_with(&spec, 1, |_, _| 0.0).is_err());
    }
}
