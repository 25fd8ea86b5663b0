//! Configurable runs, prewired benchmarks, convergence studies and CSV output.

pub mod bench;
pub mod config;
pub mod output;
pub mod run;

pub use bench::{benchmark_spec, run_benchmark, BENCHMARKS};
pub use config::ProblemSpec;
pub use output::{emit_csv, CsvPaths};
pub use run::{
    convergence_study, convergence_study_with, error_norms, project_initial, run, run_on_mesh,
    ConvergenceRow, MomentRecord, Norms, RunOutput, StepRecord,
};
