//! Conservative, positivity-preserving discontinuous Galerkin solver for the
//! one-dimensional population balance equation (growth, nucleation,
//! aggregation, breakage).
//!
//! The pieces fit together as follows:
//!
//! - [`mesh`] and [`basis`] describe the 1-D partition of `[0, v_max]` and the
//!   orthonormal Legendre modal basis in which solutions are stored.
//! - [`quadrature`] supplies Gauss-Lobatto line rules, fully symmetric triangle
//!   rules and tensor-product rectangle rules.
//! - [`geometry`] builds the common refinements of the aggregation and breakage
//!   integration regions.
//! - [`kernels`] holds the model functions (growth, nucleation, aggregation and
//!   breakage kernels).
//! - [`assembly`] precomputes all constant tensors and evaluates the
//!   semi-discrete right-hand side.
//! - [`limiter`] and [`timestep`] implement the moment-conserving positivity
//!   limiter and the SSP-RK3 driver with halve-and-retry step control.
//! - [`reference`] contains closed-form benchmark solutions and a discrete
//!   Smoluchowski reference solver.
//! - [`harness`] ties everything into configurable runs, benchmarks,
//!   convergence studies and CSV output.

pub mod assembly;
pub mod basis;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod kernels;
pub mod limiter;
pub mod mesh;
pub mod quadrature;
pub mod reference;
pub mod timestep;

pub use assembly::{DgData, RhsWorkspace};
pub use basis::{Basis, DgSolution};
pub use error::{Error, Result};
pub use mesh::Mesh;
