//! JSON problem description.
//!
//! A problem file has six sections: `problem`, `mesh`, `dg`, `time`,
//! `limiter` and `output`. Unknown keys are rejected everywhere.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::assembly::AssemblyOptions;
use crate::error::{Error, Result};
use crate::kernels::{
    builtin_aggregation, builtin_breakage, builtin_growth, gaussian_nucleation, Func1, KernelSet,
};
use crate::limiter::LimiterConfig;
use crate::mesh::Mesh;
use crate::reference::AnalyticCase;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    /// Free-form label used in output.
    #[serde(default)]
    pub name: String,
    pub problem: Problem,
    pub mesh: MeshSpec,
    pub dg: DgSpec,
    pub time: TimeSpec,
    #[serde(default)]
    pub limiter: LimiterConfig,
    #[serde(default)]
    pub output: OutputSpec,
}

/// Physical processes, data and reference solution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Problem {
    #[serde(default)]
    pub growth: Option<NamedKernel>,
    #[serde(default)]
    pub nucleation: Option<NucleationSpec>,
    #[serde(default)]
    pub aggregation: Option<NamedKernel>,
    #[serde(default)]
    pub breakage: Option<NamedKernel>,
    pub initial: InitialCondition,
    #[serde(default)]
    pub boundary: BoundaryCondition,
    #[serde(default)]
    pub reference: Option<ReferenceSpec>,
}

/// A built-in kernel with a scalar multiplier.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedKernel {
    pub kernel: String,
    #[serde(default = "one")]
    pub multiplier: f64,
}

fn one() -> f64 {
    1.0
}

impl NamedKernel {
    pub fn new(kernel: &str) -> Self {
        NamedKernel {
            kernel: kernel.into(),
            multiplier: 1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NucleationSpec {
    pub rate: f64,
    pub center: f64,
    pub width: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialCondition {
    /// `e^{-v/v0} / v0`.
    Exponential { v0: f64 },
    /// The `t = 0` profile of the reference solution (which must be analytic).
    Analytic,
    /// Piecewise-linear interpolation of samples; zero outside their range.
    Tabulated { v: Vec<f64>, n: Vec<f64> },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum BoundaryCondition {
    /// `n(0, t) = 0`.
    #[default]
    Zero,
    Constant { value: f64 },
    /// Trace of the analytic reference solution.
    Analytic,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ReferenceSpec {
    Analytic { case: AnalyticCase },
    /// Discrete Smoluchowski solution with `classes` classes of width
    /// `v_max / classes`; `richardson` combines it with a run on half the
    /// class width to cancel the first-order error.
    Dpbe {
        classes: usize,
        dt: f64,
        #[serde(default)]
        richardson: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MeshSpec {
    Uniform { v_max: f64, cells: usize },
    /// Edges `v_max (i/L)^exponent`.
    Power {
        v_max: f64,
        cells: usize,
        exponent: f64,
    },
    /// `[0, v_lo]` followed by log-uniform edges up to `v_max`.
    Log { v_lo: f64, v_max: f64, cells: usize },
    Edges { edges: Vec<f64> },
}

impl MeshSpec {
    pub fn build(&self) -> Result<Mesh> {
        match self {
            MeshSpec::Uniform { v_max, cells } => Mesh::uniform(*v_max, *cells),
            MeshSpec::Power {
                v_max,
                cells,
                exponent,
            } => Mesh::power(*v_max, *cells, *exponent),
            MeshSpec::Log { v_lo, v_max, cells } => Mesh::log(*v_lo, *v_max, *cells),
            MeshSpec::Edges { edges } => Mesh::from_edges(edges.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DgSpec {
    pub degree: usize,
    /// Gauss-Lobatto points `N_G` (default `k + 2`).
    #[serde(default)]
    pub lobatto_points: Option<usize>,
    /// Exactness degree of the triangle rule (default `2k + 2`).
    #[serde(default)]
    pub triangle_degree: Option<usize>,
    /// Fold mirror-image aggregation triangles together (default on).
    #[serde(default)]
    pub compact: Option<bool>,
}

impl DgSpec {
    pub fn options(&self) -> AssemblyOptions {
        let mut o = AssemblyOptions::for_degree(self.degree);
        if let Some(n) = self.lobatto_points {
            o.lobatto_points = n;
        }
        if let Some(d) = self.triangle_degree {
            o.triangle_degree = d;
        }
        if let Some(c) = self.compact {
            o.compact = c;
        }
        o
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum StepSize {
    /// A fixed step.
    Fixed(f64),
    /// `factor × (smallest cell width)`.
    MeshFactor(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeSpec {
    pub t_end: f64,
    pub dt: StepSize,
    /// Also cap every step at `safety ×` the positivity CFL bound.
    #[serde(default)]
    pub cfl_safety: Option<f64>,
    #[serde(default = "default_halvings")]
    pub max_halvings: usize,
}

fn default_halvings() -> usize {
    40
}

impl TimeSpec {
    pub fn step_for(&self, mesh: &Mesh) -> f64 {
        match self.dt {
            StepSize::Fixed(dt) => dt,
            StepSize::MeshFactor(f) => f * mesh.min_width(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    /// Record moments only every `moment_stride` accepted steps (default 1;
    /// the final step is always recorded).
    #[serde(default)]
    pub moment_stride: Option<usize>,
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: ProblemSpec = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()?).map_err(|e| Error::io(path, e))
    }

    /// Analytic reference case, if any.
    pub fn analytic(&self) -> Option<AnalyticCase> {
        match &self.problem.reference {
            Some(ReferenceSpec::Analytic { case }) => Some(*case),
            _ => None,
        }
    }

    /// Checks everything that can be checked without running.
    pub fn validate(&self) -> Result<()> {
        let cfg = |m: String| Err(Error::Config(m));
        if self.dg.degree < 1 {
            return cfg("dg.degree must be at least 1".into());
        }
        let o = self.dg.options();
        if o.lobatto_points < self.dg.degree + 2 {
            return cfg(format!(
                "dg.lobatto_points = {} is below k + 2 = {}",
                o.lobatto_points,
                self.dg.degree + 2
            ));
        }
        if !(self.time.t_end > 0.0 && self.time.t_end.is_finite()) {
            return cfg(format!("time.t_end must be positive, got {}", self.time.t_end));
        }
        let dt = match self.time.dt {
            StepSize::Fixed(v) | StepSize::MeshFactor(v) => v,
        };
        if !(dt > 0.0 && dt.is_finite()) {
            return cfg(format!("time.dt must be positive, got {dt}"));
        }
        if self.limiter.s > self.dg.degree {
            return cfg(format!(
                "limiter.s = {} exceeds dg.degree = {}",
                self.limiter.s, self.dg.degree
            ));
        }
        if let Some(case) = self.analytic() {
            case.validate().map_err(|e| Error::Config(e.to_string()))?;
        }
        let needs_case = matches!(self.problem.initial, InitialCondition::Analytic)
            || matches!(self.problem.boundary, BoundaryCondition::Analytic);
        if needs_case && self.analytic().is_none() {
            return cfg("analytic initial/boundary data requires an analytic reference".into());
        }
        if let InitialCondition::Tabulated { v, n } = &self.problem.initial {
            if v.len() != n.len() || v.len() < 2 || v.windows(2).any(|w| !(w[1] > w[0])) {
                return cfg("tabulated initial data needs >= 2 increasing samples".into());
            }
        }
        if let InitialCondition::Exponential { v0 } = self.problem.initial {
            if !(v0 > 0.0) {
                return cfg(format!("initial v0 must be positive, got {v0}"));
            }
        }
        if let Some(ReferenceSpec::Dpbe { classes, dt, .. }) = self.problem.reference {
            if classes == 0 || !(dt > 0.0) {
                return cfg("dpbe reference needs classes > 0 and dt > 0".into());
            }
            if self.problem.aggregation.is_none() || self.problem.growth.is_some()
                || self.problem.breakage.is_some() || self.problem.nucleation.is_some()
            {
                return cfg("a dpbe reference is only available for pure aggregation".into());
            }
        }
        self.mesh.build().map_err(|e| Error::Config(e.to_string()))?;
        self.kernels().map_err(|e| Error::Config(e.to_string()))?;
        Ok(())
    }

    /// The kernel set, including the boundary inflow.
    pub fn kernels(&self) -> Result<KernelSet> {
        let p = &self.problem;
        let mut k = KernelSet::default();
        if let Some(g) = &p.growth {
            k.growth = Some(builtin_growth(&g.kernel, g.multiplier)?);
        }
        if let Some(n) = &p.nucleation {
            k.nucleation = Some(gaussian_nucleation(n.rate, n.center, n.width)?);
        }
        if let Some(a) = &p.aggregation {
            k.aggregation = Some(builtin_aggregation(&a.kernel, a.multiplier)?);
        }
        if let Some(b) = &p.breakage {
            k.breakage = Some(builtin_breakage(&b.kernel, b.multiplier)?);
        }
        k.inflow = match p.boundary {
            BoundaryCondition::Zero => None,
            BoundaryCondition::Constant { value } => Some(Func1::new("constant", move |_| value)),
            BoundaryCondition::Analytic => {
                let case = self
                    .analytic()
                    .ok_or_else(|| Error::Config("analytic boundary needs a reference".into()))?;
                Some(Func1::new("analytic_boundary", move |t| {
                    case.boundary(t).unwrap_or_else(|| case.density(0.0, t))
                }))
            }
        };
        Ok(k)
    }

    /// The initial density as a function of `v`.
    pub fn initial_fn(&self) -> Result<Arc<dyn Fn(f64) -> f64 + Send + Sync>> {
        Ok(match &self.problem.initial {
            InitialCondition::Exponential { v0 } => {
                let v0 = *v0;
                Arc::new(move |v| (-v / v0).exp() / v0)
            }
            InitialCondition::Analytic => {
                let case = self
                    .analytic()
                    .ok_or_else(|| Error::Config("analytic initial data needs a reference".into()))?;
                Arc::new(move |v| case.initial(v))
            }
            InitialCondition::Tabulated { v, n } => {
                let (v, n) = (v.clone(), n.clone());
                Arc::new(move |x| interpolate(&v, &n, x))
            }
        })
    }
}

fn interpolate(v: &[f64], n: &[f64], x: f64) -> f64 {
    if !(x >= v[0] && x <= v[v.len() - 1]) {
        return 0.0;
    }
    let j = v.partition_point(|&p| p <= x).clamp(1, v.len() - 1);
    let (a, b) = (v[j - 1], v[j]);
    let s = (x - a) / (b - a);
    n[j - 1] + s * (n[j] - n[j - 1])
}
