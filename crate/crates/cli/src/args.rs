//! Command-line grammar and validation into a [`RunConfig`].

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use openph_core::mechanics::{
    default_time_step, CircularMotionParams, OscillatorParams, PendulumParams, StringParams,
};
use openph_core::numcore::Grid1D;
use openph_core::quantum::{DecayModel, PotentialSpec};

use crate::csv::DEFAULT_PRECISION;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialKind {
    Square,
    Double,
    Parabolic,
    Tabulated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Temperature,
    Stirling,
}

#[derive(Debug, Parser)]
#[command(
    name = "openph",
    version,
    about = "Numerical physics experiments with CSV and SVG output",
    allow_negative_numbers = true
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Output file (default: standard output)
    #[arg(long, short, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Significant digits in CSV output (1-17)
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Photoelectric effect: stopping voltage, electron energy and speed
    #[command(allow_negative_numbers = true)]
    Photo {
        /// Incident light frequency [Hz]
        #[arg(long)]
        freq: f64,
        /// Threshold frequency of the surface [Hz]
        #[arg(long)]
        threshold: f64,
        /// Rows in a linear sweep from the threshold up to --freq (1 = only --freq)
        #[arg(long, default_value_t = 1)]
        points: usize,
    },
    /// Monte Carlo radioactive decay (carbon-11 by default)
    #[command(allow_negative_numbers = true)]
    Decay {
        /// Initial number of nuclei
        #[arg(long, default_value_t = 10_000)]
        n0: i64,
        /// Half-life [s]; ignored when --lambda is given
        #[arg(long, default_value_t = 1220.0)]
        half_life: f64,
        /// Decay constant [1/s]
        #[arg(long)]
        lambda: Option<f64>,
        /// Simulation step [s]
        #[arg(long, default_value_t = 10.0)]
        dt: f64,
        /// Horizon [s]
        #[arg(long, default_value_t = 6100.0)]
        tmax: f64,
        /// Random seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of runs (seeds seed, seed+1, ...); >1 reports the mean count
        #[arg(long, default_value_t = 1)]
        ensemble: u64,
    },
    /// Bound states of a particle in a 1D box (natural units by default)
    #[command(allow_negative_numbers = true)]
    Schrodinger {
        /// Potential inside the box
        #[arg(long, value_enum, default_value_t = PotentialKind::Square)]
        potential: PotentialKind,
        /// Angular frequency of the parabolic well
        #[arg(long)]
        omega: Option<f64>,
        /// Height of the central barrier (double well) [energy]
        #[arg(long)]
        barrier_height: Option<f64>,
        /// Width of the central barrier (double well) [length]
        #[arg(long)]
        barrier_width: Option<f64>,
        /// Tabulated potential file, one "x,V" pair per line, '#' comments
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        /// Number of lowest states to compute
        #[arg(long, default_value_t = 4)]
        levels: usize,
        /// Grid points including both walls
        #[arg(long, default_value_t = 2001)]
        points: usize,
        /// Left wall position
        #[arg(long, default_value_t = 0.0)]
        x_min: f64,
        /// Right wall position
        #[arg(long, default_value_t = 1.0)]
        x_max: f64,
        /// Reduced Planck constant
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        /// Particle mass
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
    },
    /// Uniform circular motion x = R cos(wt), y = R sin(wt)
    #[command(allow_negative_numbers = true)]
    Circular {
        /// Radius [m]
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        /// Angular speed [rad/s]
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        /// Start time [s]
        #[arg(long, default_value_t = 0.0)]
        t0: f64,
        /// End time [s] (default: t0 + one period)
        #[arg(long)]
        t1: Option<f64>,
        /// Number of samples
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Forced damped oscillator m x'' + r x' + k x = F0 cos(w t)
    #[command(allow_negative_numbers = true)]
    Oscillator {
        /// Mass m [kg]
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        /// Damping coefficient r [kg/s]
        #[arg(long, default_value_t = 0.2)]
        damping: f64,
        /// Spring constant k [N/m]
        #[arg(long, default_value_t = 1.0)]
        stiffness: f64,
        /// Drive amplitude F0 [N]
        #[arg(long, default_value_t = 1.0)]
        force: f64,
        /// Drive angular frequency w [rad/s]
        #[arg(long, default_value_t = 0.5)]
        drive_omega: f64,
        /// Initial position [m]
        #[arg(long, default_value_t = 0.0)]
        x0: f64,
        /// Initial velocity [m/s]
        #[arg(long, default_value_t = 0.0)]
        v0: f64,
        /// Time step [s] (default: shortest period / 1000)
        #[arg(long)]
        dt: Option<f64>,
        /// Horizon [s] (default: ten periods of the slowest frequency)
        #[arg(long)]
        tmax: Option<f64>,
        /// Emit numeric vs closed-form comparison instead of x, v, a
        #[arg(long)]
        compare: bool,
    },
    /// Nonlinear pendulum compared with its small-angle solution
    #[command(allow_negative_numbers = true)]
    Pendulum {
        /// Length [m]
        #[arg(long, default_value_t = 1.0)]
        length: f64,
        /// Gravitational acceleration [m/s^2]
        #[arg(long, default_value_t = 9.80665)]
        g: f64,
        /// Initial angle [rad]
        #[arg(long, default_value_t = 0.1)]
        theta0: f64,
        /// Initial angular velocity [rad/s]
        #[arg(long, default_value_t = 0.0)]
        omega0: f64,
        /// Time step [s] (default: small-angle period / 1000)
        #[arg(long)]
        dt: Option<f64>,
        /// Horizon [s] (default: five small-angle periods)
        #[arg(long)]
        tmax: Option<f64>,
    },
    /// Standing wave on a fixed-fixed string
    #[command(allow_negative_numbers = true)]
    String {
        /// Tension [N]
        #[arg(long, default_value_t = 100.0)]
        tension: f64,
        /// Linear mass density [kg/m]
        #[arg(long, default_value_t = 0.01)]
        mu: f64,
        /// String length [m]
        #[arg(long, default_value_t = 1.0)]
        length: f64,
        /// Mode number n
        #[arg(long, default_value_t = 1)]
        mode: i64,
        /// Mode amplitude y_m [m]
        #[arg(long, default_value_t = 0.01)]
        amplitude: f64,
        /// Animation frames over one period
        #[arg(long, default_value_t = 9)]
        frames: usize,
        /// Sample positions per frame
        #[arg(long, default_value_t = 101)]
        points: usize,
    },
    /// Fahrenheit-Celsius or factorial-vs-Stirling table
    #[command(allow_negative_numbers = true)]
    Tables {
        /// Which table
        #[arg(long, value_enum, default_value_t = TableKind::Temperature)]
        table: TableKind,
        /// First Celsius value
        #[arg(long, default_value_t = -40.0)]
        start: f64,
        /// Last Celsius value
        #[arg(long, default_value_t = 120.0)]
        stop: f64,
        /// Celsius increment
        #[arg(long, default_value_t = 10.0)]
        step: f64,
        /// Largest n in the Stirling table (1-170)
        #[arg(long, default_value_t = 20)]
        n_max: u32,
    },
}

/// Where the Schrödinger potential comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum PotentialSource {
    Builtin(PotentialSpec),
    File(PathBuf),
}

/// A validated experiment.
#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Photo {
        freq: f64,
        threshold: f64,
        points: usize,
    },
    Decay {
        model: DecayModel,
        seed: u64,
        ensemble: u64,
    },
    Schrodinger {
        potential: PotentialSource,
        grid: Grid1D,
        levels: usize,
        hbar: f64,
        mass: f64,
    },
    Circular {
        params: CircularMotionParams,
        t0: f64,
        t1: f64,
        samples: usize,
    },
    Oscillator {
        params: OscillatorParams,
        dt: f64,
        t_max: f64,
        compare: bool,
    },
    Pendulum {
        params: PendulumParams,
        dt: f64,
        t_max: f64,
    },
    String {
        params: StringParams,
        frames: usize,
        points: usize,
    },
    Tables {
        table: TableKind,
        start: f64,
        stop: f64,
        step: f64,
        n_max: u32,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Photo { .. } => "photo",
            Self::Decay { .. } => "decay",
            Self::Schrodinger { .. } => "schrodinger",
            Self::Circular { .. } => "circular",
            Self::Oscillator { .. } => "oscillator",
            Self::Pendulum { .. } => "pendulum",
            Self::String { .. } => "string",
            Self::Tables { .. } => "tables",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub precision: usize,
}

fn usage(flag: &str, constraint: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("--{flag}: {constraint}"))
}

fn positive(flag: &str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(usage(flag, format!("must be > 0 (got {v})")))
    }
}

fn finite(flag: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(usage(flag, format!("must be finite (got {v})")))
    }
}

/// Parses `argv` (including the program name) into a validated configuration.
///
/// `--help` and `--version` come back as [`CliError::Help`].
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            CliError::Help(e.to_string())
        }
        _ => CliError::Usage(e.to_string().trim_end().to_string()),
    })?;
    if !(1..=17).contains(&cli.precision) {
        return Err(usage(
            "precision",
            format!("must lie in 1..=17 (got {})", cli.precision),
        ));
    }
    let command = validate(cli.command)?;
    Ok(RunConfig {
        command,
        output: cli.output,
        format: cli.format,
        precision: cli.precision,
    })
}

fn validate(cmd: Cmd) -> Result<Command, CliError> {
    Ok(match cmd {
        Cmd::Photo {
            freq,
            threshold,
            points,
        } => {
            positive("freq", freq)?;
            positive("threshold", threshold)?;
            if points < 1 {
                return Err(usage("points", "must be >= 1"));
            }
            Command::Photo {
                freq,
                threshold,
                points,
            }
        }
        Cmd::Decay {
            n0,
            half_life,
            lambda,
            dt,
            tmax,
            seed,
            ensemble,
        } => {
            if n0 < 1 {
                return Err(usage("n0", format!("must be >= 1 (got {n0})")));
            }
            positive("dt", dt)?;
            finite("tmax", tmax)?;
            if tmax < dt {
                return Err(usage("tmax", format!("must be >= dt (got {tmax} < {dt})")));
            }
            if ensemble < 1 {
                return Err(usage("ensemble", "must be >= 1"));
            }
            if seed.checked_add(ensemble - 1).is_none() {
                return Err(usage("ensemble", "seed + ensemble - 1 overflows u64"));
            }
            let model = match lambda {
                Some(l) => {
                    if !(l >= 0.0 && l.is_finite()) {
                        return Err(usage(
                            "lambda",
                            format!("must be finite and >= 0 (got {l})"),
                        ));
                    }
                    DecayModel::with_lambda(n0 as u64, l, dt, tmax)
                }
                None => {
                    positive("half-life", half_life)?;
                    DecayModel::with_half_life(n0 as u64, half_life, dt, tmax)
                }
            }
            .map_err(|e| CliError::Usage(e.to_string()))?;
            Command::Decay {
                model,
                seed,
                ensemble,
            }
        }
        Cmd::Schrodinger {
            potential,
            omega,
            barrier_height,
            barrier_width,
            file,
            levels,
            points,
            x_min,
            x_max,
            hbar,
            mass,
        } => {
            finite("x-min", x_min)?;
            finite("x-max", x_max)?;
            if x_max <= x_min {
                return Err(usage(
                    "x-max",
                    format!("must exceed --x-min (got {x_max} <= {x_min})"),
                ));
            }
            if points < 3 {
                return Err(usage("points", format!("must be >= 3 (got {points})")));
            }
            if levels < 1 || levels > points - 2 {
                return Err(usage(
                    "levels",
                    format!("must lie in 1..={} (got {levels})", points - 2),
                ));
            }
            positive("hbar", hbar)?;
            positive("mass", mass)?;
            let grid =
                Grid1D::new(x_min, x_max, points).map_err(|e| CliError::Usage(e.to_string()))?;
            let source = match potential {
                PotentialKind::Square => PotentialSource::Builtin(PotentialSpec::SquareWell),
                PotentialKind::Parabolic => {
                    let omega = omega
                        .ok_or_else(|| usage("omega", "required for --potential parabolic"))?;
                    PotentialSource::Builtin(PotentialSpec::Parabolic {
                        omega: finite("omega", omega)?,
                    })
                }
                PotentialKind::Double => {
                    let h = barrier_height.ok_or_else(|| {
                        usage("barrier-height", "required for --potential double")
                    })?;
                    let w = barrier_width
                        .ok_or_else(|| usage("barrier-width", "required for --potential double"))?;
                    if !(h >= 0.0 && h.is_finite()) {
                        return Err(usage(
                            "barrier-height",
                            format!("must be finite and >= 0 (got {h})"),
                        ));
                    }
                    if !(w >= 0.0 && w < x_max - x_min) {
                        return Err(usage(
                            "barrier-width",
                            format!("must lie in [0, box width {}) (got {w})", x_max - x_min),
                        ));
                    }
                    PotentialSource::Builtin(PotentialSpec::DoubleWell {
                        barrier_height: h,
                        barrier_width: w,
                    })
                }
                PotentialKind::Tabulated => PotentialSource::File(
                    file.ok_or_else(|| usage("file", "required for --potential tabulated"))?,
                ),
            };
            Command::Schrodinger {
                potential: source,
                grid,
                levels,
                hbar,
                mass,
            }
        }
        Cmd::Circular {
            radius,
            omega,
            t0,
            t1,
            samples,
        } => {
            positive("radius", radius)?;
            finite("omega", omega)?;
            if omega == 0.0 {
                return Err(usage("omega", "must be non-zero"));
            }
            finite("t0", t0)?;
            let params = CircularMotionParams::new(radius, omega)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let t1 = finite("t1", t1.unwrap_or(t0 + params.period()))?;
            if t1 <= t0 {
                return Err(usage("t1", format!("must exceed --t0 (got {t1} <= {t0})")));
            }
            if samples < 2 {
                return Err(usage("samples", format!("must be >= 2 (got {samples})")));
            }
            Command::Circular {
                params,
                t0,
                t1,
                samples,
            }
        }
        Cmd::Oscillator {
            mass,
            damping,
            stiffness,
            force,
            drive_omega,
            x0,
            v0,
            dt,
            tmax,
            compare,
        } => {
            positive("mass", mass)?;
            positive("stiffness", stiffness)?;
            for (flag, v) in [
                ("damping", damping),
                ("force", force),
                ("drive-omega", drive_omega),
            ] {
                if !(v >= 0.0 && v.is_finite()) {
                    return Err(usage(flag, format!("must be finite and >= 0 (got {v})")));
                }
            }
            finite("x0", x0)?;
            finite("v0", v0)?;
            let params =
                OscillatorParams::new(mass, damping, stiffness, force, drive_omega, x0, v0)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
            let dt = positive("dt", dt.unwrap_or_else(|| default_time_step(&params)))?;
            let slowest = if drive_omega > 0.0 {
                params.natural_omega().min(drive_omega)
            } else {
                params.natural_omega()
            };
            let t_max = positive(
                "tmax",
                tmax.unwrap_or(10.0 * 2.0 * std::f64::consts::PI / slowest),
            )?;
            if t_max < dt {
                return Err(usage("tmax", format!("must be >= dt (got {t_max} < {dt})")));
            }
            Command::Oscillator {
                params,
                dt,
                t_max,
                compare,
            }
        }
        Cmd::Pendulum {
            length,
            g,
            theta0,
            omega0,
            dt,
            tmax,
        } => {
            positive("length", length)?;
            positive("g", g)?;
            finite("theta0", theta0)?;
            finite("omega0", omega0)?;
            let params = PendulumParams::new(length, g, theta0, omega0)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let period = params.small_angle_period();
            let dt = positive("dt", dt.unwrap_or(period / 1000.0))?;
            let t_max = positive("tmax", tmax.unwrap_or(5.0 * period))?;
            if t_max < dt {
                return Err(usage("tmax", format!("must be >= dt (got {t_max} < {dt})")));
            }
            Command::Pendulum { params, dt, t_max }
        }
        Cmd::String {
            tension,
            mu,
            length,
            mode,
            amplitude,
            frames,
            points,
        } => {
            positive("tension", tension)?;
            positive("mu", mu)?;
            positive("length", length)?;
            positive("amplitude", amplitude)?;
            if mode < 1 || mode > u32::MAX as i64 {
                return Err(usage(
                    "mode",
                    format!("must be a positive integer (got {mode})"),
                ));
            }
            if frames < 1 {
                return Err(usage("frames", "must be >= 1"));
            }
            if points < 2 {
                return Err(usage("points", format!("must be >= 2 (got {points})")));
            }
            let params = StringParams::new(length, tension, mu, amplitude, mode as u32)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Command::String {
                params,
                frames,
                points,
            }
        }
        Cmd::Tables {
            table,
            start,
            stop,
            step,
            n_max,
        } => {
            match table {
                TableKind::Temperature => {
                    finite("start", start)?;
                    finite("stop", stop)?;
                    positive("step", step)?;
                    if stop < start {
                        return Err(usage(
                            "stop",
                            format!("must be >= --start (got {stop} < {start})"),
                        ));
                    }
                }
                TableKind::Stirling => {
                    if !(1..=170).contains(&n_max) {
                        return Err(usage("n-max", format!("must lie in 1..=170 (got {n_max})")));
                    }
                }
            }
            Command::Tables {
                table,
                start,
                stop,
                step,
                n_max,
            }
        }
    })
}
