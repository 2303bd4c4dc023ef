//! Dispatch of a validated [`RunConfig`] to the physics modules.

use std::fs::File;
use std::hash::{Hash, Hasher};
use std::io::{self, BufWriter, Write};

use openph_core::mechanics::{
    circular_trajectory, compare_analytic_numeric, measured_period, node_positions,
    resonance_frequency, simulate_oscillator, simulate_pendulum, steady_state_amplitude,
    steady_state_phase, string_animation_frames, wave_speed, OscillatorParams,
};
use openph_core::numcore::Table;
use openph_core::quantum::{
    decay_ensemble, max_kinetic_energy, max_speed, parse_potential_text, solve_bound_states,
    stopping_voltage, PhotoelectricInput, PhysicalConstants, PotentialSpec,
};
use openph_core::tables::{fahrenheit_celsius_table, stirling_table};

use crate::args::{Command, Format, PotentialSource, RunConfig, TableKind};
use crate::csv::{format_value, write_csv};
use crate::error::{CliError, EXIT_OK};
use crate::svg::{write_svg_panels, Series, SvgPlot};

/// Computed data for one run, independent of the output format.
#[derive(Debug, Clone)]
pub struct Output {
    pub table: Table,
    pub plots: Vec<SvgPlot>,
    pub summary: String,
}

/// What [`execute`] wrote.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub rows: usize,
    pub bytes: usize,
    pub summary: String,
}

fn num(v: f64) -> String {
    format_value(v, 7)
}

fn col(table: &Table, label: &str) -> Vec<f64> {
    table.column(label).unwrap_or_default()
}

/// Order-sensitive hash of labels and value bits.
pub fn table_fingerprint(table: &Table) -> u64 {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    table.labels().hash(&mut h);
    for row in table.rows() {
        for v in row {
            v.to_bits().hash(&mut h);
        }
    }
    h.finish()
}

/// Runs the experiment named by `command`.
pub fn compute(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Photo {
            freq,
            threshold,
            points,
        } => photo(*freq, *threshold, *points),
        Command::Decay {
            model,
            seed,
            ensemble,
        } => {
            let seeds: Vec<u64> = (0..*ensemble).map(|i| seed + i).collect();
            let runs = decay_ensemble(model, &seeds);
            let first = &runs[0];
            let table = if runs.len() == 1 {
                first.as_table().clone()
            } else {
                let mut t = Table::new(["t", "n_mean", "n_analytic"])?;
                for (i, row) in first.rows().iter().enumerate() {
                    let mean = runs.iter().map(|r| r.rows()[i][1]).sum::<f64>() / runs.len() as f64;
                    t.push(vec![row[0], mean, row[2]])?;
                }
                t
            };
            let count_label = table.labels()[1].clone();
            let t = col(&table, "t");
            let plot = SvgPlot::new("Radioactive decay", "t [s]", "nuclei")
                .with_series(Series::from_columns(
                    count_label.clone(),
                    &t,
                    &col(&table, &count_label),
                ))
                .with_series(Series::from_columns(
                    "n_analytic",
                    &t,
                    &col(&table, "n_analytic"),
                ));
            let last = table.rows().last().expect("at least the t = 0 row");
            let summary = format!(
                "lambda = {} 1/s, half-life = {} s, {}(t = {}) = {}, n_analytic = {}",
                num(model.lambda()),
                num(model.half_life()),
                count_label,
                num(last[0]),
                num(last[1]),
                num(last[2])
            );
            Ok(Output {
                table,
                plots: vec![plot],
                summary,
            })
        }
        Command::Schrodinger {
            potential,
            grid,
            levels,
            hbar,
            mass,
        } => {
            let spec = match potential {
                PotentialSource::Builtin(spec) => spec.clone(),
                PotentialSource::File(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        CliError::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
                    })?;
                    PotentialSpec::Tabulated {
                        samples: parse_potential_text(&text)?,
                    }
                }
            };
            let sol = solve_bound_states(&spec, grid, *levels, *hbar, *mass)?;
            let labels = ["x".to_string(), "V".to_string()]
                .into_iter()
                .chain((0..*levels).map(|j| format!("psi_{j}")));
            let mut table = Table::new(labels)?;
            let xs = grid.points();
            for (i, &x) in xs.iter().enumerate() {
                let mut row = vec![x, sol.potential[i]];
                row.extend(sol.wavefunctions.iter().map(|psi| psi[i]));
                table.push(row)?;
            }
            let plot = schrodinger_plot(
                spec.name(),
                &xs,
                &sol.potential,
                &sol.energies,
                &sol.wavefunctions,
            );
            let energies: Vec<String> = sol
                .energies
                .iter()
                .enumerate()
                .map(|(j, e)| format!("E_{j} = {}", num(*e)))
                .collect();
            Ok(Output {
                table,
                plots: vec![plot],
                summary: format!("potential = {}, {}", spec.name(), energies.join(", ")),
            })
        }
        Command::Circular {
            params,
            t0,
            t1,
            samples,
        } => {
            let series = circular_trajectory(params, *t0, *t1, *samples)?;
            let table = series.into_table();
            let (t, x, y) = (col(&table, "t"), col(&table, "x"), col(&table, "y"));
            let path = SvgPlot::new("Uniform circular motion", "x [m]", "y [m]")
                .with_series(Series::from_columns("path", &x, &y));
            let components = SvgPlot::new("Coordinates", "t [s]", "position [m]")
                .with_series(Series::from_columns("x(t)", &t, &x))
                .with_series(Series::from_columns("y(t)", &t, &y));
            Ok(Output {
                table,
                plots: vec![path, components],
                summary: format!(
                    "period = {} s, speed = {} m/s",
                    num(params.period()),
                    num(params.radius() * params.omega().abs())
                ),
            })
        }
        Command::Oscillator {
            params,
            dt,
            t_max,
            compare,
        } => oscillator(params, *dt, *t_max, *compare),
        Command::Pendulum { params, dt, t_max } => {
            let series = simulate_pendulum(params, *dt, *t_max)?;
            let period = measured_period(&series);
            let table = series.into_table();
            let t = col(&table, "t");
            let angles = SvgPlot::new("Pendulum", "t [s]", "theta [rad]")
                .with_series(Series::from_columns("theta", &t, &col(&table, "theta")))
                .with_series(Series::from_columns(
                    "theta_small_angle",
                    &t,
                    &col(&table, "theta_small_angle"),
                ));
            let rate = SvgPlot::new("Angular velocity", "t [s]", "omega [rad/s]")
                .with_series(Series::from_columns("omega", &t, &col(&table, "omega")));
            let measured = period.map_or_else(|| "n/a".to_string(), |p| format!("{} s", num(p)));
            Ok(Output {
                table,
                plots: vec![angles, rate],
                summary: format!(
                    "small-angle period = {} s, measured period = {measured}",
                    num(params.small_angle_period())
                ),
            })
        }
        Command::String {
            params,
            frames,
            points,
        } => {
            let fr = string_animation_frames(params, *frames, *points)?;
            let mut table = Table::new(["frame", "t", "x", "y"])?;
            let mut plot = SvgPlot::new(format!("String mode {}", params.mode), "x [m]", "y [m]");
            for (j, (t, ys)) in fr.times.iter().zip(&fr.displacements).enumerate() {
                for (x, y) in fr.positions.iter().zip(ys) {
                    table.push(vec![j as f64, *t, *x, *y])?;
                }
                plot.series.push(
                    Series::from_columns(format!("t = {}", num(*t)), &fr.positions, ys)
                        .with_opacity(0.35),
                );
            }
            plot.markers = node_positions(params)
                .into_iter()
                .map(|x| (x, 0.0))
                .collect();
            let v = wave_speed(params.tension, params.mu)?;
            Ok(Output {
                table,
                plots: vec![plot],
                summary: format!(
                    "v = {} m/s, f_{} = {} Hz",
                    num(v),
                    params.mode,
                    num(resonance_frequency(params))
                ),
            })
        }
        Command::Tables {
            table,
            start,
            stop,
            step,
            n_max,
        } => match table {
            TableKind::Temperature => {
                let t = fahrenheit_celsius_table(*start, *stop, *step)?;
                let plot =
                    SvgPlot::new("Temperature conversion", "Celsius", "Fahrenheit").with_series(
                        Series::from_columns("F(C)", &col(&t, "celsius"), &col(&t, "fahrenheit")),
                    );
                let summary = format!("{} to {} C", num(*start), num(*stop));
                Ok(Output {
                    table: t,
                    plots: vec![plot],
                    summary,
                })
            }
            TableKind::Stirling => {
                let t = stirling_table(*n_max)?;
                let n = col(&t, "n");
                let err = col(&t, "relative_error");
                let plot = SvgPlot::new("Stirling approximation", "n", "relative error")
                    .with_series(Series::from_columns("(n! - stirling)/n!", &n, &err));
                let summary = format!(
                    "relative_error(n = {n_max}) = {}",
                    num(*err.last().unwrap_or(&0.0))
                );
                Ok(Output {
                    table: t,
                    plots: vec![plot],
                    summary,
                })
            }
        },
    }
}

fn photo(freq: f64, threshold: f64, points: usize) -> Result<Output, CliError> {
    let consts = PhysicalConstants::default();
    let mut table = Table::new(["f", "E_k", "v_max", "V_stop"])?;
    for i in 0..points {
        let f = if points == 1 || i + 1 == points {
            freq
        } else {
            threshold + (freq - threshold) * i as f64 / (points - 1) as f64
        };
        let inp = PhotoelectricInput::new(f, threshold)?;
        table.push(vec![
            f,
            max_kinetic_energy(&inp, &consts)?,
            max_speed(&inp, &consts)?,
            stopping_voltage(&inp, &consts)?,
        ])?;
    }
    let last = table.rows().last().expect("points >= 1").clone();
    let plot = SvgPlot::new("Photoelectric effect", "f [Hz]", "stopping voltage [V]").with_series(
        Series::from_columns("V_stop(f)", &col(&table, "f"), &col(&table, "V_stop")),
    );
    Ok(Output {
        table,
        plots: vec![plot],
        summary: format!(
            "E_k = {} J, v_max = {} m/s, V_stop = {} V",
            num(last[1]),
            num(last[2]),
            num(last[3])
        ),
    })
}

fn oscillator(
    p: &OscillatorParams,
    dt: f64,
    t_max: f64,
    compare: bool,
) -> Result<Output, CliError> {
    if compare {
        let cmp = compare_analytic_numeric(p, dt, t_max)?;
        let table = cmp.series.into_table();
        let t = col(&table, "t");
        let xn = col(&table, "x_numeric");
        let xa = col(&table, "x_analytic");
        let plots = vec![
            SvgPlot::new("Numerical solution", "t [s]", "x [m]").with_series(Series::from_columns(
                "x_numeric",
                &t,
                &xn,
            )),
            SvgPlot::new("Closed-form solution", "t [s]", "x [m]")
                .with_series(Series::from_columns("x_analytic", &t, &xa)),
            SvgPlot::new("Overlay", "t [s]", "x [m]")
                .with_series(Series::from_columns("x_numeric", &t, &xn))
                .with_series(Series::from_columns("x_analytic", &t, &xa)),
            SvgPlot::new("Absolute error", "t [s]", "|x_numeric - x_analytic| [m]").with_series(
                Series::from_columns("abs_error", &t, &col(&table, "abs_error")),
            ),
        ];
        let summary = format!(
            "A = {} m, phi = {} rad, max abs_error (last 20%) = {} m",
            num(steady_state_amplitude(p)?),
            num(steady_state_phase(p)?),
            num(cmp.tail_max_error)
        );
        return Ok(Output {
            table,
            plots,
            summary,
        });
    }

    let table = simulate_oscillator(p, dt, t_max)?.into_table();
    let t = col(&table, "t");
    let mut plots = vec![
        SvgPlot::new("Displacement", "t [s]", "x [m]").with_series(Series::from_columns(
            "x",
            &t,
            &col(&table, "x"),
        )),
        SvgPlot::new("Velocity", "t [s]", "v [m/s]").with_series(Series::from_columns(
            "v",
            &t,
            &col(&table, "v"),
        )),
        SvgPlot::new("Acceleration", "t [s]", "a [m/s^2]").with_series(Series::from_columns(
            "a",
            &t,
            &col(&table, "a"),
        )),
    ];
    let mut summary = String::new();
    if let (Ok(a), Ok(phi)) = (steady_state_amplitude(p), steady_state_phase(p)) {
        summary = format!("A = {} m, phi = {} rad", num(a), num(phi));
    }
    if p.r > 0.0 {
        // amplitude response over 0..3 natural frequencies
        let w_max = 3.0 * p.natural_omega();
        let scan: Vec<(f64, f64)> = (0..=300)
            .filter_map(|i| {
                let w = w_max * i as f64 / 300.0;
                let q = OscillatorParams { omega_d: w, ..*p };
                steady_state_amplitude(&q).ok().map(|a| (w, a))
            })
            .collect();
        plots.push(
            SvgPlot::new("Steady-state amplitude", "drive omega [rad/s]", "A [m]")
                .with_series(Series::new("A(omega)", scan)),
        );
    }
    Ok(Output {
        table,
        plots,
        summary,
    })
}

fn schrodinger_plot(
    name: &str,
    xs: &[f64],
    v: &[f64],
    energies: &[f64],
    psis: &[Vec<f64>],
) -> SvgPlot {
    let gap = energies
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min);
    let gap = if gap.is_finite() && gap > 0.0 {
        gap
    } else {
        energies[0].abs().max(1.0)
    };
    let peak = psis
        .iter()
        .flat_map(|p| p.iter())
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(f64::MIN_POSITIVE);
    let scale = 0.4 * gap / peak;
    let v_min = v.iter().copied().fold(f64::INFINITY, f64::min);
    let top = energies[energies.len() - 1] + gap;
    let ceiling = top + 0.5 * (top - v_min).abs();
    let clipped: Vec<f64> = v.iter().map(|&x| x.min(ceiling)).collect();

    let mut plot = SvgPlot::new(format!("Particle in a box ({name})"), "x", "energy / psi")
        .with_series(Series::from_columns("V(x)", xs, &clipped));
    for (j, (e, psi)) in energies.iter().zip(psis).enumerate() {
        let shifted: Vec<f64> = psi.iter().map(|p| e + scale * p).collect();
        plot.series.push(Series::from_columns(
            format!("psi_{j} (E = {})", num(*e)),
            xs,
            &shifted,
        ));
    }
    plot
}

/// Computes `config` and serializes the result into `sink`.
pub fn execute<W: Write + ?Sized>(config: &RunConfig, sink: &mut W) -> Result<Report, CliError> {
    let out = compute(&config.command)?;
    let bytes = match config.format {
        Format::Csv => write_csv(&out.table, config.precision, sink)?,
        Format::Svg => write_svg_panels(&out.plots, sink)?,
    };
    sink.flush()?;
    let rows = out.table.len();
    Ok(Report {
        rows,
        bytes,
        summary: format!("{}: {rows} rows; {}", config.command.name(), out.summary),
    })
}

/// Runs `config` against its configured sink and prints the summary to stderr.
pub fn run(config: &RunConfig) -> Result<i32, CliError> {
    let report = match &config.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| {
                CliError::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
            })?;
            execute(config, &mut BufWriter::new(file))?
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            execute(config, &mut lock)?
        }
    };
    eprintln!("{}", report.summary);
    Ok(EXIT_OK)
}
