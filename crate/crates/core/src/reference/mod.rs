//! Reference solutions: closed-form benchmark densities, the Bessel function
//! they need, and a discrete Smoluchowski solver for kernels without one.

pub mod analytic;
pub mod bessel;
pub mod dpbe;

pub use analytic::AnalyticCase;
pub use bessel::{bessel_i1, bessel_i1e};
pub use dpbe::{Dpbe, DpbeState};
