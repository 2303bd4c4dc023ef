//! Standing waves on a string fixed at both ends.

use crate::error::{invalid, Error, Result};

/// Length (m), tension (N), linear density (kg/m), mode amplitude (m), mode number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StringParams {
    pub length: f64,
    pub tension: f64,
    pub mu: f64,
    pub amplitude: f64,
    pub mode: u32,
}

impl StringParams {
    pub fn new(length: f64, tension: f64, mu: f64, amplitude: f64, mode: u32) -> Result<Self> {
        for (name, v) in [
            ("length", length),
            ("tension", tension),
            ("mu", mu),
            ("amplitude", amplitude),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(invalid(name, format!("must be positive, got {v}")));
            }
        }
        if mode < 1 {
            return Err(invalid("mode", "mode number must be >= 1"));
        }
        Ok(Self {
            length,
            tension,
            mu,
            amplitude,
            mode,
        })
    }

    pub fn with_mode(&self, mode: u32) -> Result<Self> {
        Self::new(self.length, self.tension, self.mu, self.amplitude, mode)
    }
}

// sin(pi z) and cos(pi z), exact at integer and half-integer z.
fn sin_pi(z: f64) -> f64 {
    let r = z - 2.0 * (z / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        0.0
    } else {
        (std::f64::consts::PI * r).sin()
    }
}

fn cos_pi(z: f64) -> f64 {
    let r = z - 2.0 * (z / 2.0).round();
    if r.abs() == 0.5 {
        0.0
    } else {
        (std::f64::consts::PI * r).cos()
    }
}

/// Transverse wave speed `sqrt(tension / mu)`.
pub fn wave_speed(tension: f64, mu: f64) -> Result<f64> {
    if !(tension > 0.0) {
        return Err(invalid(
            "tension",
            format!("must be positive, got {tension}"),
        ));
    }
    if !(mu > 0.0) {
        return Err(invalid("mu", format!("must be positive, got {mu}")));
    }
    Ok((tension / mu).sqrt())
}

/// Resonance frequency `n v / 2L` of the string's mode.
pub fn resonance_frequency(p: &StringParams) -> f64 {
    let v = (p.tension / p.mu).sqrt();
    p.mode as f64 * v / (2.0 * p.length)
}

/// `y_m sin(n pi x / L) cos(2 pi f t)`.
pub fn standing_wave(p: &StringParams, x: f64, t: f64) -> Result<f64> {
    if !(0.0..=p.length).contains(&x) {
        return Err(Error::Domain {
            x,
            length: p.length,
        });
    }
    let f = resonance_frequency(p);
    Ok(p.amplitude * sin_pi(p.mode as f64 * x / p.length) * cos_pi(2.0 * f * t))
}

/// Two counter-propagating waves, `y_m sin(kx - wt) + y_m sin(kx + wt)`.
pub fn traveling_superposition(amplitude: f64, k_wave: f64, omega: f64, x: f64, t: f64) -> f64 {
    amplitude * (k_wave * x - omega * t).sin() + amplitude * (k_wave * x + omega * t).sin()
}

/// The `n + 1` nodes `j L / n`, both fixed ends included.
pub fn node_positions(p: &StringParams) -> Vec<f64> {
    let n = p.mode as usize;
    (0..=n)
        .map(|j| {
            if j == n {
                p.length
            } else {
                j as f64 * p.length / n as f64
            }
        })
        .collect()
}

/// Displacement snapshots over one period of the mode.
#[derive(Debug, Clone, PartialEq)]
pub struct StringFrames {
    pub positions: Vec<f64>,
    pub times: Vec<f64>,
    /// `displacements[frame][point]`.
    pub displacements: Vec<Vec<f64>>,
}

/// `frames` snapshots at uniform times covering `[0, 1/f]` (just `t = 0`
/// for a single frame), each sampled at `points` uniform positions.
pub fn string_animation_frames(
    p: &StringParams,
    frames: usize,
    points: usize,
) -> Result<StringFrames> {
    if frames < 1 {
        return Err(invalid("frames", "need at least one frame"));
    }
    if points < 2 {
        return Err(invalid(
            "points",
            format!("need at least 2 points, got {points}"),
        ));
    }
    let period = 1.0 / resonance_frequency(p);
    let positions: Vec<f64> = (0..points)
        .map(|i| {
            if i + 1 == points {
                p.length
            } else {
                i as f64 * p.length / (points - 1) as f64
            }
        })
        .collect();
    let times: Vec<f64> = (0..frames)
        .map(|j| {
            if frames == 1 {
                0.0
            } else {
                j as f64 * period / (frames - 1) as f64
            }
        })
        .collect();
    let displacements = times
        .iter()
        .map(|&t| {
            positions
                .iter()
                .map(|&x| standing_wave(p, x, t))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StringFrames {
        positions,
        times,
        displacements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::RngStream;

    fn guitar(mode: u32) -> StringParams {
        StringParams::new(1.0, 100.0, 0.01, 0.01, mode).unwrap()
    }

    #[test]
    fn speed_and_fundamental() {
        assert_eq!(wave_speed(100.0, 0.01).unwrap(), 100.0);
        assert_eq!(wave_speed(3.0, 3.0).unwrap(), 1.0);
        assert_eq!(
            wave_speed(400.0, 0.01).unwrap(),
            2.0 * wave_speed(100.0, 0.01).unwrap()
        );
        assert!(wave_speed(0.0, 1.0).is_err());
        assert_eq!(resonance_frequency(&guitar(1)), 50.0);
    }

    #[test]
    fn harmonic_ladder() {
        let f1 = resonance_frequency(&guitar(1));
        for n in 1..=40 {
            assert_eq!(resonance_frequency(&guitar(n)), n as f64 * f1);
        }
        let long = StringParams::new(2.0, 100.0, 0.01, 0.01, 3).unwrap();
        assert_eq!(
            resonance_frequency(&long),
            0.5 * resonance_frequency(&guitar(3))
        );
    }

    #[test]
    fn fixed_ends_nodes_antinodes() {
        let p = guitar(2);
        let mut rng = RngStream::new(5);
        for _ in 0..100 {
            let t = rng.uniform();
            assert_eq!(standing_wave(&p, 0.0, t).unwrap(), 0.0);
            assert_eq!(standing_wave(&p, 1.0, t).unwrap(), 0.0);
            assert_eq!(standing_wave(&p, 0.5, t).unwrap(), 0.0);
        }
        for n in 1..6 {
            let p = guitar(n);
            let x = p.length / (2.0 * n as f64);
            assert!((standing_wave(&p, x, 0.0).unwrap() - p.amplitude).abs() < 1e-15);
        }
        assert!(matches!(
            standing_wave(&p, 1.5, 0.0),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn nodes_do_not_move() {
        assert_eq!(node_positions(&guitar(1)), vec![0.0, 1.0]);
        assert_eq!(node_positions(&guitar(2)), vec![0.0, 0.5, 1.0]);
        let mut rng = RngStream::new(11);
        for n in 1..8 {
            let p = StringParams::new(0.65, 80.0, 0.002, 0.003, n).unwrap();
            for x in node_positions(&p) {
                for _ in 0..100 {
                    let y = standing_wave(&p, x, 10.0 * rng.uniform()).unwrap();
                    assert!(y.abs() <= 1e-12 * p.amplitude);
                }
            }
        }
    }

    #[test]
    fn superposition_edge_cases() {
        assert_eq!(traveling_superposition(0.2, 3.0, 5.0, 0.0, 1.7), 0.0);
        let y = traveling_superposition(0.2, 3.0, 5.0, 0.4, 0.0);
        assert!((y - 0.4 * (1.2f64).sin()).abs() < 1e-16);
    }

    #[test]
    fn animation_frames() {
        let p = guitar(3);
        let fr = string_animation_frames(&p, 9, 31).unwrap();
        assert_eq!(fr.displacements.len(), 9);
        let (first, last) = (&fr.displacements[0], &fr.displacements[8]);
        for (a, b) in first.iter().zip(last) {
            assert!((a - b).abs() < 1e-9);
        }
        for frame in &fr.displacements {
            assert_eq!(frame[0], 0.0);
            assert_eq!(frame[30], 0.0);
        }
        // frame 2 of 9 sits at a quarter period
        assert!(fr.displacements[2]
            .iter()
            .all(|y| y.abs() <= 1e-12 * p.amplitude));
        assert!(string_animation_frames(&p, 0, 10).is_err());
        assert!(string_animation_frames(&p, 3, 1).is_err());
        assert_eq!(string_animation_frames(&p, 1, 5).unwrap().times, vec![0.0]);
    }
}
