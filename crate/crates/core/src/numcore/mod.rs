//! Shared numerical machinery used by the physics modules.

mod eigen;
mod grid;
mod ode;
mod quad;
mod rng;
mod series;

pub use eigen::{eigs_tridiag, sturm_count, EigenPair, TridiagonalSymmetric, SIGN_THRESHOLD};
pub use grid::Grid1D;
pub use ode::{integrate_fixed, rk4_step};
pub use quad::trapezoid;
pub use rng::RngStream;
pub use series::{Table, TimeSeries};
