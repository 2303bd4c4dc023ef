//! Circular motion, the driven damped oscillator, the pendulum and the
//! vibrating fixed-fixed string.

mod circular;
mod oscillator;
mod pendulum;
mod string;

pub use circular::{circular_position, circular_trajectory, CircularMotionParams};
pub use oscillator::{
    analytic_displacement, compare_analytic_numeric, default_time_step, simulate_oscillator,
    steady_state_amplitude, steady_state_phase, OscillatorComparison, OscillatorParams,
};
pub use pendulum::{
    measured_period, pendulum_energy, simulate_pendulum, PendulumParams, STANDARD_GRAVITY,
};
pub use string::{
    node_positions, resonance_frequency, standing_wave, string_animation_frames,
    traveling_superposition, wave_speed, StringFrames, StringParams,
};

/// Number of whole steps of `dt` that fit in `t_max`, tolerant of rounding.
pub(crate) fn step_count(dt: f64, t_max: f64) -> usize {
    (t_max / dt * (1.0 + 1e-12)).floor() as usize
}
