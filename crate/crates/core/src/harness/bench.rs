//! Prewired benchmark problems.
//!
//! | name | process | data |
//! |------|---------|------|
//! | `ex1-I`, `ex1-II`, `ex1-III` | constant / additive aggregation, UL breakage | `v0 = 0.2` |
//! | `ex2` | constant aggregation + UL breakage | `λ0 = 3`, `λ∞ = 4` |
//! | `ex3-I`, `ex3-II`, `ex3-III` | linear growth + aggregation | `v0 = 0.2` |
//! | `ex4-I`, `ex4-II`, `ex4-III` | free-molecule / Brownian / gravitational aggregation | `v0 = 0.15`, DPBE reference |
//! | `ex5-I`, `ex5-II`, `ex5-III` | aggregation + breakage, `P⁴`, log mesh on `[0, 10³]` | `λ0 = 1`, `λ∞ = ½, 1, 2` |
//!
//! Examples 1–4 use the cubic mesh `v_{i+½} = 10 (i/15)³`, `k = 2`,
//! `Δt = 10 min Δv` and `t_end = 1`. Example 5 runs to `t = 10` with
//! `Δt = 0.02`. Each `ex5-*` name also accepts the suffixes `-unlimited`
//! (limiter off, `Δt = 0.02`), `-unlimited-dt0.003` and `-unlimited-dt0.002`.

use super::config::*;
use crate::error::{Error, Result};
use crate::limiter::LimiterConfig;
use crate::reference::AnalyticCase;

/// The canonical benchmark names.
pub const BENCHMARKS: [&str; 13] = [
    "ex1-I", "ex1-II", "ex1-III", "ex2", "ex3-I", "ex3-II", "ex3-III", "ex4-I", "ex4-II",
    "ex4-III", "ex5-I", "ex5-II", "ex5-III",
];

/// Number of DPBE classes for the Example 4 reference (`Δv = v_max / K`).
pub const EX4_CLASSES: usize = 2000;

/// Time step of the DPBE reference solver.
pub const EX4_DPBE_DT: f64 = 0.01;

fn base(name: &str, case: Option<AnalyticCase>) -> ProblemSpec {
    ProblemSpec {
        name: name.into(),
        problem: Problem {
            growth: None,
            nucleation: None,
            aggregation: None,
            breakage: None,
            initial: InitialCondition::Analytic,
            boundary: BoundaryCondition::Zero,
            reference: case.map(|case| ReferenceSpec::Analytic { case }),
        },
        mesh: MeshSpec::Power {
            v_max: 10.0,
            cells: 15,
            exponent: 3.0,
        },
        dg: DgSpec {
            degree: 2,
            lobatto_points: None,
            triangle_degree: None,
            compact: None,
        },
        time: TimeSpec {
            t_end: 1.0,
            dt: StepSize::MeshFactor(10.0),
            cfl_safety: None,
            max_halvings: 40,
        },
        limiter: LimiterConfig::default(),
        output: OutputSpec::default(),
    }
}

fn analytic(name: &str, case: AnalyticCase) -> ProblemSpec {
    let mut spec = base(name, Some(case));
    let p = &mut spec.problem;
    use AnalyticCase::*;
    match case {
        ConstantAggregation { .. } => p.aggregation = Some(NamedKernel::new("constant")),
        AdditiveAggregation { .. } => p.aggregation = Some(NamedKernel::new("additive")),
        UniformLinearBreakage { .. } => p.breakage = Some(NamedKernel::new("uniform_linear")),
        AggregationBreakage { .. } => {
            p.aggregation = Some(NamedKernel::new("constant"));
            p.breakage = Some(NamedKernel::new("uniform_linear"));
        }
        GrowthConstantAggregation { .. } | GrowthConstantAggregationGamma { .. } => {
            p.aggregation = Some(NamedKernel::new("constant"));
            p.growth = Some(NamedKernel::new("linear"));
            p.boundary = BoundaryCondition::Analytic;
        }
        GrowthAdditiveAggregation { .. } => {
            p.aggregation = Some(NamedKernel::new("additive"));
            p.growth = Some(NamedKernel::new("linear"));
            p.boundary = BoundaryCondition::Analytic;
        }
    }
    spec
}

fn physical(name: &str, kernel: &str) -> ProblemSpec {
    let mut spec = base(name, None);
    spec.problem.aggregation = Some(NamedKernel::new(kernel));
    spec.problem.initial = InitialCondition::Exponential { v0: 0.15 };
    spec.problem.reference = Some(ReferenceSpec::Dpbe {
        classes: EX4_CLASSES,
        dt: EX4_DPBE_DT,
        richardson: true,
    });
    spec
}

fn positivity(name: &str, lambda_inf: f64, limited: bool, dt: f64) -> ProblemSpec {
    let case = AnalyticCase::AggregationBreakage {
        lambda0: 1.0,
        lambda_inf,
    };
    let mut spec = analytic(name, case);
    spec.mesh = MeshSpec::Log {
        v_lo: 1e-3,
        v_max: 1e3,
        cells: 11,
    };
    spec.dg.degree = 4;
    spec.time = TimeSpec {
        t_end: 10.0,
        dt: StepSize::Fixed(dt),
        cfl_safety: None,
        max_halvings: 40,
    };
    spec.limiter.enabled = limited;
    spec
}

/// The problem description of benchmark `name`.
pub fn benchmark_spec(name: &str) -> Result<ProblemSpec> {
    const V0: f64 = 0.2;
    use AnalyticCase::*;
    let spec = match name {
        "ex1-I" => analytic(name, ConstantAggregation { v0: V0 }),
        "ex1-II" => analytic(name, AdditiveAggregation { v0: V0 }),
        "ex1-III" => analytic(name, UniformLinearBreakage { v0: V0 }),
        "ex2" => analytic(
            name,
            AggregationBreakage {
                lambda0: 3.0,
                lambda_inf: 4.0,
            },
        ),
        "ex3-I" => analytic(name, GrowthConstantAggregation { v0: V0 }),
        "ex3-II" => analytic(name, GrowthConstantAggregationGamma { v0: V0 }),
        "ex3-III" => analytic(name, GrowthAdditiveAggregation { v0: V0 }),
        "ex4-I" => physical(name, "free_molecule"),
        "ex4-II" => physical(name, "brownian"),
        "ex4-III" => physical(name, "gravitational"),
        _ => {
            let lambda_inf = |case: &str| match case {
                "I" => Some(0.5),
                "II" => Some(1.0),
                "III" => Some(2.0),
                _ => None,
            };
            let parsed = name.strip_prefix("ex5-").and_then(|rest| {
                let (case, variant) = rest.split_once('-').unwrap_or((rest, ""));
                let li = lambda_inf(case)?;
                match variant {
                    "" => Some((li, true, 0.02)),
                    "unlimited" => Some((li, false, 0.02)),
                    "unlimited-dt0.003" => Some((li, false, 0.003)),
                    "unlimited-dt0.002" => Some((li, false, 0.002)),
                    _ => None,
                }
            });
            match parsed {
                Some((li, limited, dt)) => positivity(name, li, limited, dt),
                None => {
                    return Err(Error::Config(format!(
                        "unknown benchmark '{name}' (expected one of {})",
                        BENCHMARKS.join(", ")
                    )))
                }
            }
        }
    };
    Ok(spec)
}

/// Runs benchmark `name`.
pub fn run_benchmark(name: &str) -> Result<super::RunOutput> {
    super::run(&benchmark_spec(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_benchmark_has_a_valid_spec() {
        for name in BENCHMARKS {
            let spec = benchmark_spec(name).unwrap();
            spec.validate().unwrap();
            assert_eq!(spec.name, name);
        }
        for v in ["-unlimited", "-unlimited-dt0.003", "-unlimited-dt0.002"] {
            let spec = benchmark_spec(&format!("ex5-II{v}")).unwrap();
            assert!(!spec.limiter.enabled);
        }
    }

    #[test]
    fn unknown_names_are_rejected() {
        for name in ["ex6", "ex5-IV", "ex5-I-fast", "ex1"] {
            assert!(matches!(benchmark_spec(name), Err(Error::Config(_))), "{name}");
        }
    }

    #[test]
    fn example_setups() {
        let ex1 = benchmark_spec("ex1-I").unwrap();
        let mesh = ex1.mesh.build().unwrap();
        assert_eq!(mesh.num_cells(), 15);
        assert!((mesh.edges()[1] - 10.0 / 3375.0).abs() < 1e-15);
        let ex5 = benchmark_spec("ex5-I").unwrap();
        let mesh = ex5.mesh.build().unwrap();
        assert_eq!(mesh.num_cells(), 11);
        assert_eq!(mesh.edges()[1], 1e-3);
        assert_eq!(mesh.v_max(), 1e3);
        assert_eq!(ex5.dg.options().triangle_degree, 10);
        assert!(ex5.limiter.enabled);
    }
}
