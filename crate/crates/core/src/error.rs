use thiserror::Error;

/// Errors raised by the numerical and physics routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A caller-supplied argument violated a documented precondition.
    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    /// The integrator produced a non-finite value.
    #[error("integration diverged at t = {t}")]
    IntegrationDiverged { t: f64 },

    /// Light below the threshold frequency emits no electrons.
    #[error("frequency {f} Hz is below the threshold frequency {f0} Hz; no electrons are emitted")]
    BelowThreshold { f: f64, f0: f64 },

    /// Tabulated data does not span the requested grid.
    #[error("tabulated potential covers [{table_min}, {table_max}] but the grid spans [{grid_min}, {grid_max}]")]
    Coverage {
        table_min: f64,
        table_max: f64,
        grid_min: f64,
        grid_max: f64,
    },

    /// Undamped driving exactly at the natural frequency has no bounded steady state.
    #[error("undamped resonance (r = 0 and m*omega_d^2 = k) has no steady state")]
    UndampedResonance,

    /// x outside the string.
    #[error("position {x} lies outside the string [0, {length}]")]
    Domain { x: f64, length: f64 },

    /// Malformed tabulated-potential text.
    #[error("potential file line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidArgument {
        name,
        reason: reason.into(),
    }
}
