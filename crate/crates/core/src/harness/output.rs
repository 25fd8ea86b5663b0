//! CSV persistence of run results.
//!
//! Numbers are written in the shortest scientific notation that round-trips
//! exactly, so files are both full precision and bit-reproducible.

use std::fs::File;
use std::path::{Path, PathBuf};

use super::run::{ConvergenceRow, MomentRecord, RunOutput, StepRecord};
use crate::error::{Error, Result};

/// Paths written by [`emit_csv`].
#[derive(Clone, Debug, PartialEq)]
pub struct CsvPaths {
    pub solution: PathBuf,
    pub moments: PathBuf,
    pub errors: PathBuf,
    pub steps: PathBuf,
    /// Present when the run carries a DPBE reference.
    pub dpbe: Option<PathBuf>,
}

impl CsvPaths {
    /// Standard file names inside `dir`.
    pub fn in_dir(dir: &Path) -> Self {
        CsvPaths {
            solution: dir.join("solution.csv"),
            moments: dir.join("moments.csv"),
            errors: dir.join("errors.csv"),
            steps: dir.join("steps.csv"),
            dpbe: Some(dir.join("dpbe.csv")),
        }
    }
}

pub(crate) fn num(x: f64) -> String {
    format!("{x:e}")
}

fn writer(path: &Path) -> Result<csv::Writer<File>> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    Ok(csv::Writer::from_writer(file))
}

fn finish(mut w: csv::Writer<File>, path: &Path) -> Result<()> {
    w.flush().map_err(|e| Error::io(path, e))
}

/// Writes `solution.csv`, `moments.csv`, `errors.csv`, `steps.csv` (and
/// `dpbe.csv` when available) for `output`.
pub fn emit_csv(output: &RunOutput, paths: &CsvPaths) -> Result<()> {
    write_solution(output, &paths.solution)?;
    write_moments(&output.moments, &paths.moments)?;
    write_errors(&output.errors, &paths.errors)?;
    write_steps(&output.steps, &paths.steps)?;
    if let (Some(state), Some(path)) = (&output.dpbe, &paths.dpbe) {
        state.write_csv(path)?;
    }
    Ok(())
}

/// Cell-center values of `n_h`, the exact solution (blank if unknown) and the
/// reference cell average (blank if unknown).
pub fn write_solution(output: &RunOutput, path: &Path) -> Result<()> {
    let sol = &output.solution;
    let mesh = sol.mesh();
    let t = output.summary.t;
    let mut w = writer(path)?;
    w.write_record(["v_center", "n_h", "n_exact", "reference_average"])?;
    for i in 0..mesh.num_cells() {
        let v = mesh.center(i);
        let exact = output
            .analytic
            .map(|c| num(c.density(v, t)))
            .unwrap_or_default();
        let reference = output
            .reference_averages
            .as_ref()
            .map(|a| num(a[i]))
            .unwrap_or_default();
        w.write_record([num(v), num(sol.eval_reference(i, 0.0)), exact, reference])?;
    }
    finish(w, path)
}

pub fn write_moments(moments: &[MomentRecord], path: &Path) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["t", "M0", "M1", "mass_deviation"])?;
    for m in moments {
        w.write_record([num(m.t), num(m.m0), num(m.m1), num(m.mass_deviation)])?;
    }
    finish(w, path)
}

pub fn write_errors(rows: &[ConvergenceRow], path: &Path) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["level", "L1", "order1", "L2", "order2", "Linf", "orderinf"])?;
    for r in rows {
        let o = |k: usize| r.orders.map(|o| num(o[k])).unwrap_or_default();
        w.write_record([
            r.level.to_string(),
            num(r.norms.l1),
            o(0),
            num(r.norms.l2),
            o(1),
            num(r.norms.linf),
            o(2),
        ])?;
    }
    finish(w, path)
}

pub fn write_steps(steps: &[StepRecord], path: &Path) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["t", "dt", "halvings", "limiter_activations"])?;
    for s in steps {
        w.write_record([
            num(s.t),
            num(s.dt),
            s.halvings.to_string(),
            s.limiter_activations.to_string(),
        ])?;
    }
    finish(w, path)
}
