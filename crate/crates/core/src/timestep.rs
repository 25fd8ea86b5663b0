//! Forward Euler stages, SSP-RK3 steps and the halve-and-retry driver.
//!
//! Every Euler stage checks that all cell moments of order `s` (the limiter's
//! moment) are nonnegative up to round-off before applying the limiter; a
//! violation rejects the whole step, which is then retried from its start
//! with half the time step. After [`TimeController::regrow_after`] clean steps
//! the step is doubled again, never beyond its initial value.
//!
//! With the limiter disabled there are no moment checks; instead a state that
//! becomes non-finite or grows by more than [`BLOWUP_FACTOR`] is reported as a
//! blow-up.

use crate::assembly::DgData;
use crate::basis::{moment_weights, Basis};
use crate::error::{Error, Result};
use crate::limiter::Limiter;
use crate::mesh::Mesh;

/// Relative tolerance separating round-off from genuinely negative moments.
pub const STAGE_TOLERANCE: f64 = 1e-12;

/// Growth of the coefficient sup-norm (relative to the initial state) that is
/// treated as a blow-up.
pub const BLOWUP_FACTOR: f64 = 1e6;

/// A semi-discrete operator `dc/dt = L(c, t)`.
pub trait Operator: Sync {
    fn apply(&self, c: &[f64], t: f64, out: &mut [f64]);

    /// Largest stable step suggested by the operator (`+∞` if none).
    fn cfl_bound(&self, _c: &[f64]) -> f64 {
        f64::INFINITY
    }
}

impl Operator for DgData {
    fn apply(&self, c: &[f64], t: f64, out: &mut [f64]) {
        self.apply_rhs(c, t, out)
    }

    fn cfl_bound(&self, c: &[f64]) -> f64 {
        DgData::cfl_bound(self, c)
    }
}

/// Adapts a closure `(c, t, out)` into an [`Operator`].
pub struct FnOperator<F>(pub F);

impl<F: Fn(&[f64], f64, &mut [f64]) + Sync> Operator for FnOperator<F> {
    fn apply(&self, c: &[f64], t: f64, out: &mut [f64]) {
        (self.0)(c, t, out)
    }
}

/// How the step size is chosen.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum StepMode {
    /// Use the controller's step (subject to halving).
    Fixed,
    /// Additionally cap each step at `safety ×` the operator's CFL bound.
    Theorem { safety: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct TimeController {
    pub t: f64,
    pub dt: f64,
    pub dt_init: f64,
    pub t_end: f64,
    pub mode: StepMode,
    pub max_halvings: usize,
    pub regrow_after: usize,
}

impl TimeController {
    pub fn new(dt: f64, t_end: f64) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::InvalidArgument(format!("time step must be positive, got {dt}")));
        }
        if !(t_end > 0.0 && t_end.is_finite()) {
            return Err(Error::InvalidArgument(format!("end time must be positive, got {t_end}")));
        }
        Ok(TimeController {
            t: 0.0,
            dt,
            dt_init: dt,
            t_end,
            mode: StepMode::Fixed,
            max_halvings: 40,
            regrow_after: 20,
        })
    }
}

/// Outcome of one accepted step.
#[derive(Clone, Debug, PartialEq)]
pub struct StepReport {
    /// Time at the end of the step.
    pub t: f64,
    pub dt: f64,
    pub accepted: bool,
    pub halvings: usize,
    /// Smallest cell moment (of the limiter's order) after the step.
    pub min_cell_moment: f64,
    pub limiter_activations: usize,
}

/// Totals for a completed run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunSummary {
    pub t: f64,
    pub steps: usize,
    pub halvings: usize,
    pub limiter_activations: usize,
}

type FaultInjector = Box<dyn FnMut(usize, usize) -> bool + Send>;

/// Drives an [`Operator`] in time with limiting and step control.
pub struct Stepper<'a> {
    op: &'a dyn Operator,
    mesh: &'a Mesh,
    basis: Basis,
    limiter: &'a Limiter,
    /// Moment weights `∫ v^s φ_j^i`, `L × n`.
    weights: Vec<f64>,
    rate: Vec<f64>,
    stage: Vec<f64>,
    fault: Option<FaultInjector>,
    step_index: usize,
}

impl<'a> Stepper<'a> {
    pub fn new(op: &'a dyn Operator, mesh: &'a Mesh, basis: Basis, limiter: &'a Limiter) -> Self {
        let n = basis.len();
        let s = limiter.config().s;
        let mut weights = vec![0.0; mesh.num_cells() * n];
        for (i, w) in weights.chunks_mut(n).enumerate() {
            moment_weights(mesh, basis, i, s, w);
        }
        Stepper {
            op,
            mesh,
            basis,
            limiter,
            weights,
            rate: Vec::new(),
            stage: Vec::new(),
            fault: None,
            step_index: 0,
        }
    }

    /// Convenience constructor for a [`DgData`] operator.
    pub fn for_data(data: &'a DgData, limiter: &'a Limiter) -> Self {
        Self::new(data, data.mesh(), data.basis(), limiter)
    }

    /// Installs a hook called as `(step, attempt)` before each step attempt;
    /// returning `true` rejects that attempt.
    pub fn inject_faults(&mut self, f: impl FnMut(usize, usize) -> bool + Send + 'static) {
        self.fault = Some(Box::new(f));
    }

    fn checks_moments(&self) -> bool {
        self.limiter.config().enabled
    }

    /// Per-cell moments of the limiter's order.
    pub fn cell_moments(&self, c: &[f64]) -> Vec<f64> {
        let n = self.basis.len();
        c.chunks(n)
            .zip(self.weights.chunks(n))
            .map(|(c, w)| c.iter().zip(w).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn moment_scale(&self, c: &[f64]) -> f64 {
        let m = self.cell_moments(c);
        m.iter().map(|x| x.abs()).sum::<f64>() / m.len().max(1) as f64
    }

    /// `out = c + dt L(c, t)`, followed by the moment check and the limiter.
    /// Returns the number of limited cells.
    pub fn euler_stage(&mut self, c: &[f64], t: f64, dt: f64, out: &mut [f64]) -> Result<usize> {
        let scale = self.moment_scale(c);
        self.rate.resize(c.len(), 0.0);
        self.op.apply(c, t, &mut self.rate);
        for ((o, &a), &r) in out.iter_mut().zip(c).zip(&self.rate) {
            *o = a + dt * r;
        }
        if !self.checks_moments() {
            return Ok(0);
        }
        let tol = STAGE_TOLERANCE * scale;
        for (cell, moment) in self.cell_moments(out).into_iter().enumerate() {
            if !(moment >= -tol) {
                return Err(Error::StageRejected { cell, moment });
            }
        }
        match self.limiter.apply(self.mesh, out, tol) {
            Err(Error::NegativeMoment { cell, moment }) => Err(Error::StageRejected { cell, moment }),
            other => other,
        }
    }

    /// One SSP-RK3 step from `c` (left untouched) into `out`.
    pub fn ssprk3_step(&mut self, c: &[f64], t: f64, dt: f64, out: &mut [f64]) -> Result<usize> {
        let mut stage = std::mem::take(&mut self.stage);
        stage.resize(c.len(), 0.0);
        let result = (|| {
            let mut count = self.euler_stage(c, t, dt, &mut stage)?;
            count += self.euler_stage(&stage, t + dt, dt, out)?;
            for ((s, &a), &b) in stage.iter_mut().zip(c).zip(out.iter()) {
                *s = 0.75 * a + 0.25 * b;
            }
            count += self.euler_stage(&stage, t + 0.5 * dt, dt, out)?;
            for (o, &a) in out.iter_mut().zip(c) {
                *o = a / 3.0 + 2.0 / 3.0 * *o;
            }
            Ok(count)
        })();
        self.stage = stage;
        result
    }

    /// Advances `c` from `ctl.t` to `ctl.t_end`, calling `observer` after every
    /// accepted step.
    pub fn run(
        &mut self,
        ctl: &mut TimeController,
        c: &mut Vec<f64>,
        mut observer: impl FnMut(f64, &[f64], &StepReport),
    ) -> Result<RunSummary> {
        let initial_size = sup_norm(c).max(f64::MIN_POSITIVE);
        let mut next = vec![0.0; c.len()];
        let mut clean = 0;
        let mut summary = RunSummary {
            t: ctl.t,
            steps: 0,
            halvings: 0,
            limiter_activations: 0,
        };
        while ctl.t < ctl.t_end {
            let mut halvings = 0;
            let (dt, activations, last) = loop {
                let mut dt = ctl.dt;
                if let StepMode::Theorem { safety } = ctl.mode {
                    let bound = safety * self.op.cfl_bound(c);
                    if bound > 0.0 && bound.is_finite() {
                        dt = dt.min(bound);
                    }
                }
                let remaining = ctl.t_end - ctl.t;
                let last = dt >= remaining * (1.0 - 1e-12);
                if last {
                    dt = remaining;
                }
                let forced = match self.fault.as_mut() {
                    Some(f) => f(self.step_index, halvings),
                    None => false,
                };
                let attempt = if forced {
                    Err(Error::StageRejected {
                        cell: 0,
                        moment: f64::NAN,
                    })
                } else {
                    self.ssprk3_step(c, ctl.t, dt, &mut next)
                };
                match attempt {
                    Ok(count) => break (dt, count, last),
                    Err(Error::StageRejected { .. }) => {
                        halvings += 1;
                        summary.halvings += 1;
                        if halvings > ctl.max_halvings {
                            return Err(Error::HalvingBudgetExhausted {
                                t: ctl.t,
                                halvings: ctl.max_halvings,
                            });
                        }
                        ctl.dt = 0.5 * ctl.dt.min(dt);
                        clean = 0;
                    }
                    Err(e) => return Err(e),
                }
            };
            std::mem::swap(c, &mut next);
            ctl.t = if last { ctl.t_end } else { ctl.t + dt };
            self.step_index += 1;

            if let Some(reason) = blowup(c, initial_size) {
                return Err(Error::BlowUp { t: ctl.t, reason });
            }

            if halvings == 0 {
                clean += 1;
                if clean >= ctl.regrow_after && ctl.dt < ctl.dt_init {
                    ctl.dt = (2.0 * ctl.dt).min(ctl.dt_init);
                    clean = 0;
                }
            }
            summary.steps += 1;
            summary.limiter_activations += activations;
            summary.t = ctl.t;
            let report = StepReport {
                t: ctl.t,
                dt,
                accepted: true,
                halvings,
                min_cell_moment: self
                    .cell_moments(c)
                    .into_iter()
                    .fold(f64::INFINITY, f64::min),
                limiter_activations: activations,
            };
            observer(ctl.t, c, &report);
        }
        Ok(summary)
    }
}

fn sup_norm(c: &[f64]) -> f64 {
    c.iter().fold(0.0, |m: f64, x| m.max(x.abs()))
}

fn blowup(c: &[f64], initial: f64) -> Option<String> {
    if c.iter().any(|x| !x.is_finite()) {
        return Some("non-finite coefficients".into());
    }
    let size = sup_norm(c);
    (size > BLOWUP_FACTOR * initial).then(|| {
        format!("coefficient magnitude {size:e} exceeds {BLOWUP_FACTOR:e} times the initial {initial:e}")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limiter::LimiterConfig;
    use std::sync::{Arc, Mutex};

    fn setup(enabled: bool) -> (Mesh, Basis, Limiter) {
        let mesh = Mesh::uniform(1.0, 1).unwrap();
        let basis = Basis::new(1).unwrap();
        let config = LimiterConfig {
            enabled,
            s: 1,
            dense_sampling: false,
        };
        let limiter = Limiter::new(config, basis, 3).unwrap();
        (mesh, basis, limiter)
    }

    #[test]
    fn zero_operator_is_identity() {
        let (mesh, basis, limiter) = setup(true);
        let op = FnOperator(|_: &[f64], _: f64, out: &mut [f64]| out.fill(0.0));
        let mut st = Stepper::new(&op, &mesh, basis, &limiter);
        let c = vec![1.0, 0.2];
        let mut out = vec![0.0; 2];
        st.euler_stage(&c, 0.0, 0.5, &mut out).unwrap();
        assert_eq!(out, c);
        st.ssprk3_step(&c, 0.0, 0.5, &mut out).unwrap();
        assert_eq!(out, c);

        let mut ctl = TimeController::new(1.0, 1.0).unwrap();
        let mut state = c.clone();
        let summary = st.run(&mut ctl, &mut state, |_, _, _| {}).unwrap();
        assert_eq!(summary.steps, 1);
        assert_eq!(summary.halvings, 0);
        assert_eq!(ctl.t, 1.0);
    }

    #[test]
    fn linear_decay() {
        let (mesh, basis, limiter) = setup(false);
        let op = FnOperator(|c: &[f64], _: f64, out: &mut [f64]| {
            for (o, x) in out.iter_mut().zip(c) {
                *o = -x;
            }
        });
        let mut st = Stepper::new(&op, &mesh, basis, &limiter);
        let mut out = vec![0.0; 2];
        st.euler_stage(&[1.0, 0.0], 0.0, 1.0, &mut out).unwrap();
        assert_eq!(out, vec![0.0, 0.0]);
        st.ssprk3_step(&[1.0, 0.0], 0.0, 1.0, &mut out).unwrap();
        assert!((out[0] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn injected_fault_halves_once() {
        let (mesh, basis, limiter) = setup(true);
        let op = FnOperator(|_: &[f64], _: f64, out: &mut [f64]| out.fill(0.0));
        let mut st = Stepper::new(&op, &mesh, basis, &limiter);
        st.inject_faults(|step, attempt| step == 0 && attempt == 0);
        let mut ctl = TimeController::new(0.25, 1.0).unwrap();
        let reports = Arc::new(Mutex::new(Vec::new()));
        let sink = reports.clone();
        let mut c = vec![1.0, 0.0];
        st.run(&mut ctl, &mut c, move |_, _, r| sink.lock().unwrap().push(r.clone()))
            .unwrap();
        let reports = reports.lock().unwrap();
        assert_eq!(reports[0].halvings, 1);
        assert_eq!(reports[0].dt, 0.125);
        assert!(reports[1..].iter().all(|r| r.halvings == 0));
        assert_eq!(ctl.t, 1.0);
        assert!(ctl.dt <= ctl.dt_init);
    }

    #[test]
    fn exhausted_budget_is_reported() {
        let (mesh, basis, limiter) = setup(true);
        let op = FnOperator(|_: &[f64], _: f64, out: &mut [f64]| out.fill(0.0));
        let mut st = Stepper::new(&op, &mesh, basis, &limiter);
        st.inject_faults(|_, _| true);
        let mut ctl = TimeController::new(0.25, 1.0).unwrap();
        ctl.max_halvings = 3;
        let err = st.run(&mut ctl, &mut vec![1.0, 0.0], |_, _, _| {}).unwrap_err();
        assert!(matches!(err, Error::HalvingBudgetExhausted { halvings: 3, .. }));
    }

    #[test]
    fn negative_moment_rejects_stage() {
        let (mesh, basis, limiter) = setup(true);
        let op = FnOperator(|_: &[f64], _: f64, out: &mut [f64]| {
            out[0] = -10.0;
            out[1] = 0.0;
        });
        let mut st = Stepper::new(&op, &mesh, basis, &limiter);
        let mut out = vec![0.0; 2];
        let err = st.euler_stage(&[1.0, 0.0], 0.0, 1.0, &mut out).unwrap_err();
        assert!(matches!(err, Error::StageRejected { cell: 0, .. }));
    }

    #[test]
    fn unlimited_growth_is_a_blowup() {
        let (mesh, basis, limiter) = setup(false);
        let op = FnOperator(|c: &[f64], _: f64, out: &mut [f64]| {
            for (o, x) in out.iter_mut().zip(c) {
                *o = x * x;
            }
        });
        let mut st = Stepper::new(&op, &mesh, basis, &limiter);
        let mut ctl = TimeController::new(0.1, 10.0).unwrap();
        let err = st.run(&mut ctl, &mut vec![1.0, 0.0], |_, _, _| {}).unwrap_err();
        assert!(matches!(err, Error::BlowUp { .. }));
        assert!(err.is_numerical());
    }

    #[test]
    fn last_step_lands_on_end_time() {
        let (mesh, basis, limiter) = setup(true);
        let op = FnOperator(|_: &[f64], _: f64, out: &mut [f64]| out.fill(0.0));
        let mut st = Stepper::new(&op, &mesh, basis, &limiter);
        let mut ctl = TimeController::new(0.3, 1.0).unwrap();
        let mut times = Vec::new();
        st.run(&mut ctl, &mut vec![1.0, 0.0], |t, _, _| times.push(t)).unwrap();
        assert_eq!(times.len(), 4);
        assert_eq!(*times.last().unwrap(), 1.0);
    }
}
