use super::potential::{sample_potential, PotentialSpec};
use crate::error::{invalid, Result};
use crate::numcore::{eigs_tridiag, trapezoid, Grid1D, TridiagonalSymmetric};

/// The lowest bound states of a particle confined to the grid's box.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundStateSolution {
    pub grid: Grid1D,
    /// Ascending.
    pub energies: Vec<f64>,
    /// One per energy, sampled on every grid point, zero at both walls,
    /// normalized so the trapezoid integral of `psi^2` is one.
    pub wavefunctions: Vec<Vec<f64>>,
    /// The potential sampled on the grid.
    pub potential: Vec<f64>,
}

/// Central-difference Hamiltonian on the interior grid points (size `n - 2`).
///
/// The wavefunction is pinned to zero at both ends of the grid, which models
/// infinitely high walls.
pub fn build_hamiltonian(
    v: &[f64],
    grid: &Grid1D,
    hbar: f64,
    mass: f64,
) -> Result<TridiagonalSymmetric> {
    if v.len() != grid.len() {
        return Err(invalid(
            "v",
            format!(
                "potential has {} samples for a {}-point grid",
                v.len(),
                grid.len()
            ),
        ));
    }
    if !(hbar > 0.0) || !(mass > 0.0) {
        return Err(invalid("hbar/mass", "must be positive"));
    }
    let dx = grid.dx();
    let kinetic = hbar * hbar / (mass * dx * dx);
    let interior = &v[1..v.len() - 1];
    let diag = interior.iter().map(|vi| kinetic + vi).collect();
    let off = vec![-0.5 * kinetic; interior.len() - 1];
    TridiagonalSymmetric::new(diag, off)
}

/// The `k` lowest bound states of `spec` on `grid`.
pub fn solve_bound_states(
    spec: &PotentialSpec,
    grid: &Grid1D,
    k: usize,
    hbar: f64,
    mass: f64,
) -> Result<BoundStateSolution> {
    let interior = grid.len() - 2;
    if k == 0 || k > interior {
        return Err(invalid(
            "k",
            format!("must satisfy 1 <= k <= {interior}, got {k}"),
        ));
    }
    let potential = sample_potential(spec, grid, mass)?;
    let h = build_hamiltonian(&potential, grid, hbar, mass)?;
    let pairs = eigs_tridiag(&h, k)?;

    let dx = grid.dx();
    let mut energies = Vec::with_capacity(k);
    let mut wavefunctions = Vec::with_capacity(k);
    for pair in pairs {
        let mut psi = Vec::with_capacity(grid.len());
        psi.push(0.0);
        psi.extend_from_slice(&pair.vector);
        psi.push(0.0);
        let sq: Vec<f64> = psi.iter().map(|p| p * p).collect();
        let norm = trapezoid(&sq, dx)?.sqrt();
        psi.iter_mut().for_each(|p| *p /= norm);
        energies.push(pair.value);
        wavefunctions.push(psi);
    }
    Ok(BoundStateSolution {
        grid: *grid,
        energies,
        wavefunctions,
        potential,
    })
}

/// Sign changes among the interior samples whose magnitude exceeds `tol`.
pub fn count_nodes(psi: &[f64], tol: f64) -> usize {
    if psi.len() < 3 {
        return 0;
    }
    let mut nodes = 0;
    let mut last_sign = 0.0;
    for &p in &psi[1..psi.len() - 1] {
        if p.abs() <= tol {
            continue;
        }
        let s = p.signum();
        if last_sign != 0.0 && s != last_sign {
            nodes += 1;
        }
        last_sign = s;
    }
    nodes
}

/// [`count_nodes`] with `tol = 1e-8 * max|psi|`.
pub fn count_nodes_default(psi: &[f64]) -> usize {
    let peak = psi.iter().fold(0.0f64, |m, p| m.max(p.abs()));
    count_nodes(psi, 1e-8 * peak)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn free_hamiltonian_entries() {
        let g = Grid1D::new(0.0, 4.0, 5).unwrap();
        let h = build_hamiltonian(&[0.0; 5], &g, 1.0, 1.0).unwrap();
        assert_eq!(h.diag(), &[1.0, 1.0, 1.0]);
        assert_eq!(h.offdiag(), &[-0.5, -0.5]);
        let shifted = build_hamiltonian(&[3.0; 5], &g, 1.0, 1.0).unwrap();
        assert_eq!(shifted.diag(), &[4.0, 4.0, 4.0]);
        assert_eq!(shifted.offdiag(), h.offdiag());
    }

    #[test]
    fn free_spectrum_is_scaled_laplacian() {
        let n = 102;
        let g = Grid1D::new(0.0, 1.0, n).unwrap();
        let h = build_hamiltonian(&vec![0.0; n], &g, 1.0, 1.0).unwrap();
        let scale = 1.0 / (2.0 * g.dx() * g.dx());
        let m = n - 2;
        for (j, p) in eigs_tridiag(&h, 6).unwrap().iter().enumerate() {
            let lap = 2.0 - 2.0 * ((j + 1) as f64 * PI / (m + 1) as f64).cos();
            assert!((p.value - scale * lap).abs() < 1e-9 * scale);
        }
    }

    #[test]
    fn square_well_levels_and_nodes() {
        let g = Grid1D::new(0.0, 1.0, 2001).unwrap();
        let sol = solve_bound_states(&PotentialSpec::SquareWell, &g, 4, 1.0, 1.0).unwrap();
        for (j, e) in sol.energies.iter().enumerate() {
            let exact = ((j + 1) as f64 * PI).powi(2) / 2.0;
            assert!((e - exact).abs() < 1e-3 * exact);
            assert_eq!(count_nodes_default(&sol.wavefunctions[j]), j);
            let psi = &sol.wavefunctions[j];
            assert_eq!(psi[0], 0.0);
            assert_eq!(psi[2000], 0.0);
        }
    }

    #[test]
    fn parabolic_levels() {
        let g = Grid1D::new(0.0, 1.0, 2001).unwrap();
        let sol =
            solve_bound_states(&PotentialSpec::Parabolic { omega: 50.0 }, &g, 3, 1.0, 1.0).unwrap();
        for (j, e) in sol.energies.iter().enumerate() {
            let exact = 50.0 * (j as f64 + 0.5);
            assert!((e - exact).abs() < 1e-2 * exact, "{e} vs {exact}");
        }
    }

    #[test]
    fn k_bounds() {
        let g = Grid1D::new(0.0, 1.0, 5).unwrap();
        assert!(solve_bound_states(&PotentialSpec::SquareWell, &g, 0, 1.0, 1.0).is_err());
        assert!(solve_bound_states(&PotentialSpec::SquareWell, &g, 4, 1.0, 1.0).is_err());
        assert!(solve_bound_states(&PotentialSpec::SquareWell, &g, 3, 1.0, 1.0).is_ok());
    }

    #[test]
    fn node_counting() {
        assert_eq!(count_nodes(&[0.0, 1.0, 2.0, 1.0, 0.0], 1e-8), 0);
        assert_eq!(count_nodes(&[0.0, 1.0, 0.0, -1.0, 0.0], 1e-8), 1);
        // endpoints excluded, tiny values skipped
        assert_eq!(count_nodes(&[-1.0, 1.0, 1e-12, 1.0, -1.0], 1e-8), 0);
    }
}
