//! Dense complex linear algebra for small bipartite systems.
//!
//! Everything here is sized for the witness construction (a 3×32 joint
//! space) and for randomized checks up to a few dozen dimensions; the
//! eigensolver is a cyclic complex Jacobi iteration and is fine up to
//! dimension ~100.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::tol;

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    /// Builds a matrix from row-major data.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeError {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(CMatrix { rows, cols, data })
    }

    /// Real matrix from row-major data.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::from_row_major(rows, cols, data.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// A column vector.
    pub fn column(v: &[Complex64]) -> Self {
        CMatrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeError {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum::<f64>())
    }

    /// Largest entrywise modulus of `self - other`; `INFINITY` on shape mismatch.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `max |m[j,k] - conj(m[k,j])|`, or `INFINITY` for non-square input.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst: f64 = 0.0;
        for j in 0..self.rows {
            for k in j..self.cols {
                worst = worst.max((self[(j, k)] - self[(k, j)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Kronecker product `a ⊗ b`.
///
/// Entry `[(i·p + k), (j·q + l)]` of the result is `a[i,j]·b[k,l]` where `b`
/// is `p×q`. Empty operands give an empty result.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (p, q) = (b.rows, b.cols);
    CMatrix::from_fn(a.rows * p, a.cols * q, |r, c| {
        a[(r / p, c / q)] * b[(r % p, c % q)]
    })
}

/// Kronecker product of two vectors.
pub fn kron_vec(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| x * y))
        .collect()
}

/// `<u|v>`, conjugate-linear in the first argument.
pub fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn norm(v: &[Complex64]) -> f64 {
    libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>())
}

/// A normalized pure state on `C^dim_a ⊗ C^dim_b`.
///
/// Amplitudes are stored row-major in (Alice index, Bob index).
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dim_a: usize,
    dim_b: usize,
    amps: Vec<Complex64>,
}

impl PureState {
    /// Accepts amplitudes whose norm is within the normalization gate of one
    /// and renormalizes them; anything further off is `NotNormalized`.
    pub fn new(dim_a: usize, dim_b: usize, amps: Vec<Complex64>) -> Result<Self> {
        let (state, norm_sq) = Self::from_unnormalized(dim_a, dim_b, amps)?;
        let norm = libm::sqrt(norm_sq);
        if (norm - 1.0).abs() > tol::NORM_GATE {
            return Err(Error::NotNormalized { norm });
        }
        Ok(state)
    }

    /// Normalizes any non-zero vector, returning the state and the squared
    /// norm it had before normalization.
    pub fn from_unnormalized(
        dim_a: usize,
        dim_b: usize,
        mut amps: Vec<Complex64>,
    ) -> Result<(Self, f64)> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::ShapeError {
                expected: 1,
                found: 0,
            });
        }
        if amps.len() != dim_a * dim_b {
            return Err(Error::ShapeError {
                expected: dim_a * dim_b,
                found: amps.len(),
            });
        }
        if !amps.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq == 0.0 || !norm_sq.is_finite() {
            return Err(Error::NotNormalized { norm: libm::sqrt(norm_sq) });
        }
        let inv = 1.0 / libm::sqrt(norm_sq);
        for z in &mut amps {
            *z *= inv;
        }
        Ok((PureState { dim_a, dim_b, amps }, norm_sq))
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amp(&self, i: usize, j: usize) -> Complex64 {
        self.amps[i * self.dim_b + j]
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amps)
    }
}

/// A Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity and unit trace. Positivity is not checked here;
    /// see [`DensityMatrix::min_eigenvalue`].
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::ShapeError {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        let deviation = matrix.hermitian_deviation();
        if deviation > tol::STRUCTURAL {
            return Err(Error::NotHermitian { deviation });
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > tol::ITERATIVE || tr.im.abs() > tol::ITERATIVE {
            return Err(Error::NotNormalized { norm: tr.re });
        }
        Ok(DensityMatrix { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    /// Descending spectrum.
    pub fn eigenvalues(&self) -> Vec<f64> {
        // Hermitian by construction, so the solver cannot reject it.
        hermitian_eigs(&self.matrix, false)
            .map(|e| e.values)
            .unwrap_or_default()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().last().copied().unwrap_or(0.0)
    }
}

impl Index<(usize, usize)> for DensityMatrix {
    type Output = Complex64;

    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.matrix[idx]
    }
}

/// Reduced state on Alice's side: `ρ[j,k] = Σ_m ψ[j,m]·conj(ψ[k,m])`.
pub fn partial_trace_b(state: &PureState) -> Result<DensityMatrix> {
    let norm = state.norm();
    if (norm - 1.0).abs() > tol::NORM_GATE {
        return Err(Error::NotNormalized { norm });
    }
    let (da, db) = (state.dim_a, state.dim_b);
    let mut rho = CMatrix::zeros(da, da);
    for j in 0..da {
        let row_j = &state.amps[j * db..(j + 1) * db];
        for k in j..da {
            let row_k = &state.amps[k * db..(k + 1) * db];
            let v = inner(row_k, row_j);
            rho[(j, k)] = v;
            rho[(k, j)] = v.conj();
        }
        rho[(j, j)].im = 0.0;
    }
    DensityMatrix::new(rho)
}

/// `G[j,k] = <v_k|v_j>` for a family of equal-length vectors.
pub fn gram_matrix<V: AsRef<[Complex64]>>(vectors: &[V]) -> Result<CMatrix> {
    let n = vectors.len();
    if let Some(first) = vectors.first() {
        let dim = first.as_ref().len();
        if let Some(bad) = vectors.iter().find(|v| v.as_ref().len() != dim) {
            return Err(Error::ShapeError {
                expected: dim,
                found: bad.as_ref().len(),
            });
        }
    }
    let mut g = CMatrix::zeros(n, n);
    for j in 0..n {
        for k in j..n {
            let v = inner(vectors[k].as_ref(), vectors[j].as_ref());
            g[(j, k)] = v;
            g[(k, j)] = v.conj();
        }
        g[(j, j)].im = 0.0;
    }
    Ok(g)
}

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Eigen {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    pub vectors: Option<CMatrix>,
}

const MAX_SWEEPS: usize = 100;

/// Eigenvalues (and optionally eigenvectors) of a Hermitian matrix by
/// cyclic complex Jacobi rotations.
///
/// The input must be Hermitian to within `1e-10·max(1, ‖H‖_F)`; the
/// antihermitian residue is discarded before iterating.
pub fn hermitian_eigs(h: &CMatrix, with_vectors: bool) -> Result<Eigen> {
    if !h.is_square() {
        return Err(Error::ShapeError {
            expected: h.rows(),
            found: h.cols(),
        });
    }
    if !h.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = h.rows();
    let scale = h.frobenius_norm();
    let deviation = h.hermitian_deviation();
    if deviation > tol::ITERATIVE * scale.max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }

    let mut a = CMatrix::from_fn(n, n, |j, k| (h[(j, k)] + h[(k, j)].conj()) * 0.5);
    let mut v = with_vectors.then(|| CMatrix::identity(n));

    for _ in 0..MAX_SWEEPS {
        let off_sq: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum();
        let off = libm::sqrt(off_sq);
        if off <= f64::EPSILON * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
                let theta = 0.5 * libm::atan2(2.0 * mag, aqq - app);
                let (s, c) = libm::sincos(theta);
                // Phase that makes the (p, q) entry real, then a real rotation.
                let phase = apq / mag;
                let phase_conj = phase.conj();

                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = akp * c - akq * phase_conj * s;
                    a[(k, q)] = akp * s + akq * phase_conj * c;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = apk * c - aqk * phase * s;
                    a[(q, k)] = apk * s + aqk * phase * c;
                }
                a[(p, q)] = Complex64::zero();
                a[(q, p)] = Complex64::zero();
                a[(p, p)].im = 0.0;
                a[(q, q)].im = 0.0;

                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                        v[(k, p)] = vkp * c - vkq * phase_conj * s;
                        v[(k, q)] = vkp * s + vkq * phase_conj * c;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = v.map(|v| CMatrix::from_fn(n, n, |r, c| v[(r, order[c])]));
    Ok(Eigen { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = CMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), CMatrix::identity(4));
    }

    #[test]
    fn kron_of_basis_vectors() {
        let e1 = CMatrix::column(&[c(1.0), c(0.0)]);
        let k = kron(&e1, &e1);
        assert_eq!(k, CMatrix::column(&[c(1.0), c(0.0), c(0.0), c(0.0)]));
        assert_eq!(kron_vec(&[c(1.0), c(0.0)], &[c(1.0), c(0.0)]), k.as_slice());
    }

    #[test]
    fn kron_hand_expansion() {
        let x = CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let two = CMatrix::from_real(2, 2, &[2.0, 0.0, 0.0, 2.0]).unwrap();
        let expected = CMatrix::from_real(
            4,
            4,
            &[
                0.0, 0.0, 2.0, 0.0, //
                0.0, 0.0, 0.0, 2.0, //
                2.0, 0.0, 0.0, 0.0, //
                0.0, 2.0, 0.0, 0.0,
            ],
        )
        .unwrap();
        assert_eq!(kron(&x, &two), expected);
    }

    #[test]
    fn kron_rectangular_shapes() {
        let a = CMatrix::zeros(2, 3);
        let b = CMatrix::zeros(4, 5);
        let k = kron(&a, &b);
        assert_eq!((k.rows(), k.cols()), (8, 15));
    }

    #[test]
    fn bell_state_reduces_to_half_identity() {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let bell = PureState::new(2, 2, vec![c(s), c(0.0), c(0.0), c(s)]).unwrap();
        let rho = partial_trace_b(&bell).unwrap();
        let half = CMatrix::identity(2).scale(c(0.5));
        assert!(rho.matrix().max_abs_diff(&half) < 1e-15);
    }

    #[test]
    fn product_state_reduces_to_projector() {
        let prod = PureState::new(2, 2, vec![c(1.0), c(0.0), c(0.0), c(0.0)]).unwrap();
        let rho = partial_trace_b(&prod).unwrap();
        let proj = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(rho.matrix(), &proj);
    }

    #[test]
    fn pure_state_gate() {
        let slightly_off = vec![c(1.0 + 5e-7), c(0.0)];
        let st = PureState::new(1, 2, slightly_off).unwrap();
        assert!((st.norm() - 1.0).abs() < 1e-15);
        assert!(matches!(
            PureState::new(1, 2, vec![c(1.1), c(0.0)]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            PureState::new(2, 2, vec![c(1.0)]),
            Err(Error::ShapeError { .. })
        ));
        assert_eq!(
            PureState::new(1, 2, vec![c(f64::NAN), c(1.0)]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn eigs_of_identity() {
        let e = hermitian_eigs(&CMatrix::identity(3), false).unwrap();
        assert_eq!(e.values, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn eigs_of_symmetric_block() {
        let cc = 0.375;
        let h = CMatrix::from_real(2, 2, &[2.0, -cc, -cc, 2.0]).unwrap();
        let e = hermitian_eigs(&h, true).unwrap();
        assert!((e.values[0] - (2.0 + cc)).abs() < 1e-14);
        assert!((e.values[1] - (2.0 - cc)).abs() < 1e-14);
    }

    #[test]
    fn eigs_complex_entries_residual() {
        let h = CMatrix::from_row_major(
            3,
            3,
            vec![
                c(2.0),
                Complex64::new(0.5, -1.0),
                Complex64::new(0.0, 0.25),
                Complex64::new(0.5, 1.0),
                c(-1.0),
                Complex64::new(0.3, 0.3),
                Complex64::new(0.0, -0.25),
                Complex64::new(0.3, -0.3),
                c(0.5),
            ],
        )
        .unwrap();
        let e = hermitian_eigs(&h, true).unwrap();
        let vecs = e.vectors.unwrap();
        for (i, &lambda) in e.values.iter().enumerate() {
            let v = CMatrix::column(&vecs.col(i));
            let hv = h.matmul(&v).unwrap();
            let res = hv.max_abs_diff(&v.scale(c(lambda)));
            assert!(res <= 1e-10 * h.frobenius_norm(), "residual {res}");
        }
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        let tr: f64 = e.values.iter().sum();
        assert!((tr - 1.5).abs() < 1e-13);
    }

    #[test]
    fn eigs_rejects_non_hermitian() {
        let h = CMatrix::from_real(2, 2, &[1.0, 2.0, 0.0, 1.0]).unwrap();
        assert!(matches!(
            hermitian_eigs(&h, false),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(
            hermitian_eigs(&CMatrix::zeros(2, 3), false),
            Err(Error::ShapeError { .. })
        ));
    }

    #[test]
    fn eigs_of_zero_matrix() {
        let e = hermitian_eigs(&CMatrix::zeros(4, 4), true).unwrap();
        assert_eq!(e.values, vec![0.0; 4]);
    }

    #[test]
    fn gram_examples() {
        let e1 = vec![c(1.0), c(0.0)];
        let e2 = vec![c(0.0), c(1.0)];
        assert_eq!(gram_matrix(&[e1, e2]).unwrap(), CMatrix::identity(2));

        let s = core::f64::consts::FRAC_1_SQRT_2;
        let v = vec![c(s), Complex64::new(0.0, s)];
        let g = gram_matrix(&[v.clone(), v]).unwrap();
        let ones = CMatrix::from_real(2, 2, &[1.0; 4]).unwrap();
        assert!(g.max_abs_diff(&ones) < 1e-15);
    }

    #[test]
    fn gram_shape_mismatch() {
        let r = gram_matrix(&[vec![c(1.0)], vec![c(1.0), c(0.0)]]);
        assert_eq!(
            r,
            Err(Error::ShapeError {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn gram_orientation() {
        // G[j,k] = <v_k|v_j>
        let u = vec![Complex64::new(0.0, 1.0)];
        let w = vec![c(1.0)];
        let g = gram_matrix(&[u, w]).unwrap();
        assert_eq!(g[(0, 1)], Complex64::new(0.0, 1.0));
        assert_eq!(g[(1, 0)], Complex64::new(0.0, -1.0));
    }
}
