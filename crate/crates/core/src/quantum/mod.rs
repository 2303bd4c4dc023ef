//! Photoelectric effect, radioactive decay and 1D bound states.

mod constants;
mod decay;
mod photoelectric;
mod potential;
mod schrodinger;

pub use constants::PhysicalConstants;
pub use decay::{decay_analytic, decay_ensemble, decay_simulate, DecayModel};
pub use photoelectric::{max_kinetic_energy, max_speed, stopping_voltage, PhotoelectricInput};
pub use potential::{parse_potential_text, sample_potential, PotentialSpec};
pub use schrodinger::{
    build_hamiltonian, count_nodes, count_nodes_default, solve_bound_states, BoundStateSolution,
};
