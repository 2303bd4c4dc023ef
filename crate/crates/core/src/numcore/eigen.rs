//! Symmetric tridiagonal eigensolver: Sturm-sequence bisection for the
//! eigenvalues, inverse iteration for the eigenvectors.

use super::rng::RngStream;
use crate::error::{invalid, Result};

/// Components at or below this magnitude are skipped by the sign rule.
pub const SIGN_THRESHOLD: f64 = 1e-12;

const MAX_BISECTION_STEPS: usize = 256;
const MAX_INVERSE_ITERATIONS: usize = 10;

/// Real symmetric tridiagonal matrix stored as its diagonal and off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSymmetric {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagonalSymmetric {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(invalid("diag", "matrix must have at least one row"));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(invalid(
                "offdiag",
                format!(
                    "length {} must be one less than diag length {}",
                    offdiag.len(),
                    diag.len()
                ),
            ));
        }
        if diag.iter().chain(&offdiag).any(|v| !v.is_finite()) {
            return Err(invalid("diag/offdiag", "entries must be finite"));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// `T v`.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.offdiag[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.offdiag[i] * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// Infinity norm (equal to the 1-norm for a symmetric matrix).
    pub fn norm_inf(&self) -> f64 {
        row_norm(&self.diag, &self.offdiag)
    }
}

/// An eigenvalue with its unit-norm eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

fn row_norm(diag: &[f64], off: &[f64]) -> f64 {
    let n = diag.len();
    (0..n)
        .map(|i| {
            let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { off[i].abs() } else { 0.0 };
            diag[i].abs() + left + right
        })
        .fold(0.0, f64::max)
}

fn pivot_floor(off: &[f64]) -> f64 {
    let emax = off.iter().map(|e| e * e).fold(1.0, f64::max);
    f64::MIN_POSITIVE * emax
}

/// Number of eigenvalues of the tridiagonal matrix `(diag, off)` that are at
/// most `x`, counted as the negative pivots of the LDLᵀ factorization of
/// `T - xI`.
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    sturm_count_with_floor(diag, off, x, pivot_floor(off))
}

fn sturm_count_with_floor(diag: &[f64], off: &[f64], x: f64, pivmin: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        q = if i == 0 {
            diag[0] - x
        } else {
            diag[i] - x - off[i - 1] * off[i - 1] / q
        };
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `m` smallest eigenvalues of an unreduced block, ascending.
fn bisect_smallest(diag: &[f64], off: &[f64], m: usize) -> Vec<f64> {
    let n = diag.len();
    if n == 1 {
        return vec![diag[0]];
    }
    let pivmin = pivot_floor(off);
    let mut lo_bound = f64::INFINITY;
    let mut hi_bound = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off[i].abs() } else { 0.0 };
        lo_bound = lo_bound.min(diag[i] - left - right);
        hi_bound = hi_bound.max(diag[i] + left + right);
    }
    let pad = 2.0 * f64::EPSILON * lo_bound.abs().max(hi_bound.abs()) + 2.0 * pivmin;
    lo_bound -= pad;
    hi_bound += pad;

    let mut values = Vec::with_capacity(m);
    let mut lo = lo_bound;
    for j in 0..m {
        let mut hi = hi_bound;
        for _ in 0..MAX_BISECTION_STEPS {
            let width_tol = 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) + pivmin;
            if hi - lo <= width_tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if sturm_count_with_floor(diag, off, mid, pivmin) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        values.push(0.5 * (lo + hi));
        // count(lo) <= j <= j + 1, so lo stays a valid lower bracket.
    }
    values
}

/// LU factorization with partial pivoting of `T - shift*I`, solved in place.
struct ShiftedLu {
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    dl: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn new(diag: &[f64], off: &[f64], shift: f64, pivot_tol: f64) -> Self {
        let n = diag.len();
        let mut d: Vec<f64> = diag.iter().map(|v| v - shift).collect();
        let mut du = off.to_vec();
        let mut dl = off.to_vec();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i] != 0.0 {
                    let fact = dl[i] / d[i];
                    dl[i] = fact;
                    d[i + 1] -= fact * du[i];
                } else {
                    dl[i] = 0.0;
                }
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }
        // The shift is an eigenvalue, so U is (nearly) singular: floor the pivots.
        for p in d.iter_mut() {
            if p.abs() < pivot_tol {
                *p = if *p < 0.0 { -pivot_tol } else { pivot_tol };
            }
        }
        Self {
            d,
            du,
            du2,
            dl,
            swapped,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = b.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.dl[i] * b[i];
            } else {
                b[i + 1] -= self.dl[i] * b[i];
            }
        }
        b[n - 1] /= self.d[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) -> f64 {
    let norm = dot(v, v).sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}

fn orthogonalize(v: &mut [f64], basis: &[&Vec<f64>]) {
    // Two passes of classical Gram-Schmidt.
    for _ in 0..2 {
        for q in basis {
            let c = dot(v, q);
            v.iter_mut().zip(q.iter()).for_each(|(x, qi)| *x -= c * qi);
        }
    }
}

/// Eigenvectors of an unreduced block for the given ascending eigenvalues.
fn inverse_iteration(diag: &[f64], off: &[f64], values: &[f64], seed: u64) -> Vec<Vec<f64>> {
    let n = diag.len();
    if n == 1 {
        return vec![vec![1.0]];
    }
    let norm = row_norm(diag, off).max(f64::MIN_POSITIVE);
    let pivot_tol = f64::EPSILON * norm;
    let cluster_gap = 1e-3 * norm;
    let mut rng = RngStream::new(seed);
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(values.len());

    for (j, &lambda) in values.iter().enumerate() {
        let lu = ShiftedLu::new(diag, off, lambda, pivot_tol);
        let cluster: Vec<&Vec<f64>> = (0..j)
            .filter(|&i| (lambda - values[i]).abs() <= cluster_gap)
            .map(|i| &vectors[i])
            .collect();

        let mut v: Vec<f64> = (0..n).map(|_| 2.0 * rng.uniform() - 1.0).collect();
        orthogonalize(&mut v, &cluster);
        normalize(&mut v);
        for _ in 0..MAX_INVERSE_ITERATIONS {
            let prev = v.clone();
            lu.solve(&mut v);
            orthogonalize(&mut v, &cluster);
            if normalize(&mut v) == 0.0 || v.iter().any(|x| !x.is_finite()) {
                v = prev;
                break;
            }
            if 1.0 - dot(&v, &prev).abs() < 1e-15 {
                break;
            }
        }
        vectors.push(v);
    }
    vectors
}

fn apply_sign_convention(v: &mut [f64]) {
    if let Some(first) = v.iter().find(|x| x.abs() > SIGN_THRESHOLD) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// The `k` algebraically smallest eigenpairs of `t`, ascending by value.
///
/// The matrix is first split wherever an off-diagonal entry is negligible;
/// each unreduced block is solved independently, and pairs with equal values
/// keep the order of the blocks they came from.
pub fn eigs_tridiag(t: &TridiagonalSymmetric, k: usize) -> Result<Vec<EigenPair>> {
    let n = t.len();
    if k == 0 || k > n {
        return Err(invalid("k", format!("must satisfy 1 <= k <= {n}, got {k}")));
    }
    let (diag, off) = (t.diag(), t.offdiag());

    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 0..n - 1 {
        let scale = (diag[i].abs() * diag[i + 1].abs()).sqrt();
        if off[i] == 0.0 || off[i].abs() <= f64::EPSILON * scale {
            blocks.push(start..i + 1);
            start = i + 1;
        }
    }
    blocks.push(start..n);

    let mut pairs = Vec::new();
    for block in blocks {
        let bd = &diag[block.clone()];
        let bo = &off[block.start..block.end - 1];
        let m = k.min(bd.len());
        let values = bisect_smallest(bd, bo, m);
        let vectors = inverse_iteration(bd, bo, &values, block.start as u64);
        for (value, local) in values.into_iter().zip(vectors) {
            let mut vector = vec![0.0; n];
            vector[block.clone()].copy_from_slice(&local);
            apply_sign_convention(&mut vector);
            pairs.push(EigenPair { value, vector });
        }
    }
    pairs.sort_by(|a, b| a.value.total_cmp(&b.value));
    pairs.truncate(k);
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn residual(t: &TridiagonalSymmetric, p: &EigenPair) -> f64 {
        t.apply(&p.vector)
            .iter()
            .zip(&p.vector)
            .map(|(a, v)| (a - p.value * v).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    fn laplacian(n: usize) -> TridiagonalSymmetric {
        TridiagonalSymmetric::new(vec![2.0; n], vec![-1.0; n - 1]).unwrap()
    }

    #[test]
    fn diagonal_matrix_gives_standard_basis() {
        let t = TridiagonalSymmetric::new(vec![2.0; 3], vec![0.0; 2]).unwrap();
        let pairs = eigs_tridiag(&t, 3).unwrap();
        for (i, p) in pairs.iter().enumerate() {
            assert_eq!(p.value, 2.0);
            let mut e = vec![0.0; 3];
            e[i] = 1.0;
            assert_eq!(p.vector, e);
        }
    }

    #[test]
    fn two_by_two() {
        // det [[2-l, -1], [-1, 2-l]] = (2-l)^2 - 1 -> l = 1, 3
        let t = TridiagonalSymmetric::new(vec![2.0, 2.0], vec![-1.0]).unwrap();
        let pairs = eigs_tridiag(&t, 2).unwrap();
        assert!((pairs[0].value - 1.0).abs() < 1e-14);
        assert!((pairs[1].value - 3.0).abs() < 1e-14);
        let s = 0.5f64.sqrt();
        assert!((pairs[0].vector[0] - s).abs() < 1e-12 && (pairs[0].vector[1] - s).abs() < 1e-12);
        assert!((pairs[1].vector[0] - s).abs() < 1e-12 && (pairs[1].vector[1] + s).abs() < 1e-12);
    }

    #[test]
    fn laplacian_closed_form() {
        for n in [5usize, 50, 400] {
            let t = laplacian(n);
            let pairs = eigs_tridiag(&t, n.min(40)).unwrap();
            for (j, p) in pairs.iter().enumerate() {
                let exact = 2.0 - 2.0 * ((j + 1) as f64 * PI / (n + 1) as f64).cos();
                assert!((p.value - exact).abs() < 1e-10, "n={n} j={j}");
                assert!(residual(&t, p) <= 1e-8 * p.value.abs().max(1.0));
            }
        }
    }

    #[test]
    fn vectors_orthonormal_and_signed() {
        let t = laplacian(200);
        let pairs = eigs_tridiag(&t, 12).unwrap();
        for (i, a) in pairs.iter().enumerate() {
            let first = a.vector.iter().find(|x| x.abs() > SIGN_THRESHOLD).unwrap();
            assert!(*first > 0.0);
            for (j, b) in pairs.iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&a.vector, &b.vector) - expect).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn k_out_of_range() {
        let t = laplacian(4);
        assert!(eigs_tridiag(&t, 0).is_err());
        assert!(eigs_tridiag(&t, 5).is_err());
    }

    #[test]
    fn sturm_counts_2x2() {
        // eigenvalues of [[1, -1], [-1, 3]] are 2 -/+ sqrt(2)
        let d = [1.0, 3.0];
        let e = [-1.0];
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 1.0), 1);
        assert_eq!(sturm_count(&d, &e, 4.0), 2);
    }

    #[test]
    fn split_blocks_merge_in_order() {
        // Block [[5]] then [[1, 1], [1, 1]] (eigenvalues 0, 2).
        let t = TridiagonalSymmetric::new(vec![5.0, 1.0, 1.0], vec![0.0, 1.0]).unwrap();
        let pairs = eigs_tridiag(&t, 3).unwrap();
        let values: Vec<f64> = pairs.iter().map(|p| p.value).collect();
        assert!((values[0]).abs() < 1e-14 && (values[1] - 2.0).abs() < 1e-14 && values[2] == 5.0);
        assert_eq!(pairs[2].vector, vec![1.0, 0.0, 0.0]);
    }

    #[test]
    fn near_degenerate_pair_stays_orthogonal() {
        // Two weakly coupled copies of the same chain.
        let n = 60;
        let mut off = vec![-1.0; n - 1];
        off[n / 2 - 1] = -1e-9;
        let t = TridiagonalSymmetric::new(vec![2.0; n], off).unwrap();
        let pairs = eigs_tridiag(&t, 4).unwrap();
        for i in 0..4 {
            assert!(residual(&t, &pairs[i]) <= 1e-8);
            for j in 0..i {
                assert!(dot(&pairs[i].vector, &pairs[j].vector).abs() < 1e-8);
            }
        }
    }
}
