use crate::error::{invalid, Error, Result};
use crate::numcore::Grid1D;

/// Potential inside the box. Walls at the grid ends are always infinite.
#[derive(Debug, Clone, PartialEq)]
pub enum PotentialSpec {
    /// `V = 0` everywhere inside the box.
    SquareWell,
    /// Rectangular barrier centred on the box midpoint.
    DoubleWell {
        barrier_height: f64,
        barrier_width: f64,
    },
    /// `V = m omega^2 (x - x_c)^2 / 2` about the box centre.
    Parabolic { omega: f64 },
    /// Piecewise-linear potential through `(x, V)` samples, x strictly increasing.
    Tabulated { samples: Vec<(f64, f64)> },
}

impl PotentialSpec {
    pub fn name(&self) -> &'static str {
        match self {
            Self::SquareWell => "square",
            Self::DoubleWell { .. } => "double",
            Self::Parabolic { .. } => "parabolic",
            Self::Tabulated { .. } => "tabulated",
        }
    }

    /// Checks the parameter invariants that do not depend on a grid.
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::SquareWell => Ok(()),
            Self::DoubleWell {
                barrier_height,
                barrier_width,
            } => {
                if !(*barrier_height >= 0.0 && barrier_height.is_finite()) {
                    return Err(invalid(
                        "barrier_height",
                        format!("must be finite and >= 0, got {barrier_height}"),
                    ));
                }
                if !(*barrier_width >= 0.0 && barrier_width.is_finite()) {
                    return Err(invalid(
                        "barrier_width",
                        format!("must be finite and >= 0, got {barrier_width}"),
                    ));
                }
                Ok(())
            }
            Self::Parabolic { omega } => {
                if omega.is_finite() {
                    Ok(())
                } else {
                    Err(invalid("omega", "must be finite"))
                }
            }
            Self::Tabulated { samples } => {
                if samples.len() < 2 {
                    return Err(invalid("samples", "need at least two (x, V) pairs"));
                }
                if samples
                    .iter()
                    .any(|(x, v)| !x.is_finite() || !v.is_finite())
                {
                    return Err(invalid("samples", "values must be finite"));
                }
                if let Some(w) = samples.windows(2).find(|w| !(w[1].0 > w[0].0)) {
                    return Err(invalid(
                        "samples",
                        format!("x must increase strictly ({} follows {})", w[1].0, w[0].0),
                    ));
                }
                Ok(())
            }
        }
    }
}

/// Samples `spec` on every grid point.
pub fn sample_potential(spec: &PotentialSpec, grid: &Grid1D, mass: f64) -> Result<Vec<f64>> {
    spec.validate()?;
    let xs = grid.points();
    // Offsets from the box centre by index, so mirrored points get identical values.
    let mid = 0.5 * (grid.len() - 1) as f64;
    let offsets: Vec<f64> = (0..grid.len())
        .map(|i| (i as f64 - mid) * grid.dx())
        .collect();
    match spec {
        PotentialSpec::SquareWell => Ok(vec![0.0; xs.len()]),
        PotentialSpec::DoubleWell {
            barrier_height,
            barrier_width,
        } => {
            let box_width = grid.x_max() - grid.x_min();
            if *barrier_width >= box_width {
                return Err(invalid(
                    "barrier_width",
                    format!("must be narrower than the box ({barrier_width} >= {box_width})"),
                ));
            }
            // edge points count as inside, up to rounding
            let half = 0.5 * barrier_width + 1e-9 * grid.dx();
            Ok(offsets
                .iter()
                .map(|u| {
                    if u.abs() <= half {
                        *barrier_height
                    } else {
                        0.0
                    }
                })
                .collect())
        }
        PotentialSpec::Parabolic { omega } => Ok(offsets
            .iter()
            .map(|u| 0.5 * mass * omega * omega * u * u)
            .collect()),
        PotentialSpec::Tabulated { samples } => {
            let (first, last) = (samples[0].0, samples[samples.len() - 1].0);
            let slack = 1e-12 * (grid.x_max() - grid.x_min());
            if first > grid.x_min() + slack || last < grid.x_max() - slack {
                return Err(Error::Coverage {
                    table_min: first,
                    table_max: last,
                    grid_min: grid.x_min(),
                    grid_max: grid.x_max(),
                });
            }
            Ok(xs.iter().map(|&x| interpolate(samples, x)).collect())
        }
    }
}

fn interpolate(samples: &[(f64, f64)], x: f64) -> f64 {
    let hi = samples.partition_point(|s| s.0 < x);
    if hi == 0 {
        return samples[0].1;
    }
    if hi == samples.len() {
        return samples[hi - 1].1;
    }
    let (x0, v0) = samples[hi - 1];
    let (x1, v1) = samples[hi];
    if x == x1 {
        return v1;
    }
    v0 + (v1 - v0) * (x - x0) / (x1 - x0)
}

/// Parses tabulated-potential text: one `x,V` pair per line, `#` starts a
/// comment line, blank lines are skipped, x must increase strictly.
pub fn parse_potential_text(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut samples: Vec<(f64, f64)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let err = |reason: String| Error::Parse {
            line: lineno,
            reason,
        };
        let mut parts = line.split(',');
        let (Some(xs), Some(vs), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(format!("expected `x,V`, got {line:?}")));
        };
        let x: f64 = xs
            .trim()
            .parse()
            .map_err(|_| err(format!("bad x value {:?}", xs.trim())))?;
        let v: f64 = vs
            .trim()
            .parse()
            .map_err(|_| err(format!("bad V value {:?}", vs.trim())))?;
        if !x.is_finite() || !v.is_finite() {
            return Err(err("values must be finite".into()));
        }
        if let Some(&(prev, _)) = samples.last() {
            if !(x > prev) {
                return Err(err(format!(
                    "x must increase strictly ({x} follows {prev})"
                )));
            }
        }
        samples.push((x, v));
    }
    if samples.len() < 2 {
        return Err(Error::Parse {
            line: text.lines().count(),
            reason: "need at least two samples".into(),
        });
    }
    Ok(samples)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid1D {
        Grid1D::new(0.0, 1.0, 101).unwrap()
    }

    #[test]
    fn square_well_is_zero() {
        let v = sample_potential(&PotentialSpec::SquareWell, &grid(), 1.0).unwrap();
        assert!(v.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn parabolic_symmetric_and_zero_at_centre() {
        let v = sample_potential(&PotentialSpec::Parabolic { omega: 3.0 }, &grid(), 2.0).unwrap();
        assert_eq!(v[50], 0.0);
        for i in 0..101 {
            assert!((v[i] - v[100 - i]).abs() < 1e-12);
        }
        assert!((v[0] - 0.5 * 2.0 * 9.0 * 0.25).abs() < 1e-12);
    }

    #[test]
    fn double_well_barrier() {
        let spec = PotentialSpec::DoubleWell {
            barrier_height: 7.0,
            barrier_width: 0.2,
        };
        let v = sample_potential(&spec, &grid(), 1.0).unwrap();
        assert_eq!(v[50], 7.0);
        assert_eq!(v[45], 7.0);
        assert_eq!(v[38], 0.0);
        assert_eq!(v[0], 0.0);
        let wide = PotentialSpec::DoubleWell {
            barrier_height: 1.0,
            barrier_width: 1.0,
        };
        assert!(sample_potential(&wide, &grid(), 1.0).is_err());
    }

    #[test]
    fn tabulated_interpolation() {
        let spec = PotentialSpec::Tabulated {
            samples: vec![(0.0, 0.0), (1.0, 2.0)],
        };
        let g = Grid1D::new(0.0, 1.0, 5).unwrap();
        let v = sample_potential(&spec, &g, 1.0).unwrap();
        assert_eq!(v, vec![0.0, 0.5, 1.0, 1.5, 2.0]);
    }

    #[test]
    fn tabulated_coverage_error() {
        let spec = PotentialSpec::Tabulated {
            samples: vec![(0.0, 0.0), (0.5, 2.0)],
        };
        assert!(matches!(
            sample_potential(&spec, &grid(), 1.0),
            Err(Error::Coverage { .. })
        ));
    }

    #[test]
    fn parse_file_text() {
        let text = "# free-hand well\n0,5\n 0.5 , 0\n\n1.0,5\n";
        assert_eq!(
            parse_potential_text(text).unwrap(),
            vec![(0.0, 5.0), (0.5, 0.0), (1.0, 5.0)]
        );
        assert!(matches!(
            parse_potential_text("0,1\n0,2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_potential_text("0;1\n1;2\n").is_err());
        assert!(parse_potential_text("0,1,2\n1,2\n").is_err());
        assert!(parse_potential_text("# nothing\n").is_err());
    }
}
