// `!(x > 0.0)` is used deliberately so that NaN is rejected along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! Numerical physics experiments with analytic cross-checks.
//!
//! * [`numcore`]: RK4 integration, tridiagonal eigensolver, quadrature,
//!   seeded random streams and the [`TimeSeries`](numcore::TimeSeries) container.
//! * [`quantum`]: photoelectric effect, radioactive decay, 1D bound states.
//! * [`mechanics`]: circular motion, driven damped oscillator, pendulum,
//!   fixed-fixed string.
//! * [`tables`]: temperature conversion and Stirling comparison tables.

pub mod error;
pub mod mechanics;
pub mod numcore;
pub mod quantum;
pub mod tables;

pub use error::{Error, Result};
