//! Dense complex matrix arithmetic and the real-inner-product machinery the
//! rest of the crate builds on.
//!
//! All generators live in the real vector space of N×N skew-Hermitian
//! matrices equipped with the Hilbert–Schmidt inner product
//! `⟨A,B⟩ = Re Tr(A†B)`.  [`ComplexMatrix`] is the dense carrier type,
//! [`OrthoBasis`] maintains an orthonormal spanning set of a subspace, and
//! [`matrix_nullspace`] computes common kernels of linear operators on
//! vectorized matrices via singular values.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = Complex<f64>;

/// Dense square complex matrix.
///
/// The wrapper keeps every matrix square (the only shape the library uses)
/// and exposes the handful of operations the algorithms need: commutators,
/// the real Hilbert–Schmidt inner product, conjugation, and vectorization.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    data: DMatrix<C64>,
}

impl ComplexMatrix {
    /// Wraps a square `DMatrix`.  Panics if the matrix is not square.
    pub fn from_dmatrix(data: DMatrix<C64>) -> Self {
        assert_eq!(data.nrows(), data.ncols(), "ComplexMatrix must be square");
        Self { data }
    }

    /// The zero matrix of side `n`.
    pub fn zeros(n: usize) -> Self {
        Self { data: DMatrix::zeros(n, n) }
    }

    /// The identity matrix of side `n`.
    pub fn identity(n: usize) -> Self {
        Self { data: DMatrix::identity(n, n) }
    }

    /// Elementary matrix `e_{rc}` (single 1 at 0-based row `r`, column `c`).
    pub fn basis_matrix(n: usize, r: usize, c: usize) -> Self {
        assert!(r < n && c < n, "basis_matrix index out of range");
        let mut m = DMatrix::zeros(n, n);
        m[(r, c)] = C64::new(1.0, 0.0);
        Self { data: m }
    }

    /// Real diagonal matrix `diag(values)`.
    pub fn from_diag_real(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = DMatrix::zeros(n, n);
        for (k, &v) in values.iter().enumerate() {
            m[(k, k)] = C64::new(v, 0.0);
        }
        Self { data: m }
    }

    /// Imaginary diagonal matrix `i·diag(values)` (skew-Hermitian).
    pub fn from_diag_imag(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = DMatrix::zeros(n, n);
        for (k, &v) in values.iter().enumerate() {
            m[(k, k)] = C64::new(0.0, v);
        }
        Self { data: m }
    }

    /// Builds a matrix entry by entry from a closure over (row, column).
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> C64) -> Self {
        Self { data: DMatrix::from_fn(n, n, f) }
    }

    /// Side length.
    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    /// Entry at 0-based (row, column).
    pub fn entry(&self, r: usize, c: usize) -> C64 {
        self.data[(r, c)]
    }

    /// Sets the entry at 0-based (row, column).
    pub fn set_entry(&mut self, r: usize, c: usize, value: C64) {
        self.data[(r, c)] = value;
    }

    pub(crate) fn as_dmatrix(&self) -> &DMatrix<C64> {
        &self.data
    }

    /// Conjugate transpose `A†`.
    pub fn dagger(&self) -> Self {
        Self { data: self.data.adjoint() }
    }

    /// Transpose `Aᵀ` (no conjugation).
    pub fn transpose(&self) -> Self {
        Self { data: self.data.transpose() }
    }

    /// Matrix trace.
    pub fn trace(&self) -> C64 {
        self.data.trace()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.data.norm()
    }

    /// Frobenius distance `‖A − B‖`.
    pub fn distance(&self, other: &Self) -> f64 {
        (&self.data - &other.data).norm()
    }

    /// True when every entry is finite.
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `‖A + A†‖`: zero exactly when the matrix is skew-Hermitian.
    pub fn skew_deviation(&self) -> f64 {
        (&self.data + self.data.adjoint()).norm()
    }

    /// Checks skew-Hermiticity with a tolerance relative to the matrix norm.
    pub fn is_skew_hermitian(&self, tolerance: f64) -> bool {
        self.skew_deviation() <= tolerance * self.norm()
    }

    /// Scales by a real factor.
    pub fn scaled(&self, factor: f64) -> Self {
        Self { data: &self.data * C64::new(factor, 0.0) }
    }

    /// Scales by a complex factor.
    pub fn scaled_complex(&self, factor: C64) -> Self {
        Self { data: &self.data * factor }
    }

    /// Commutator `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        let ab = &self.data * &other.data;
        let ba = &other.data * &self.data;
        Ok(Self { data: ab - ba })
    }

    /// Real Hilbert–Schmidt inner product `Re Tr(A†B)`.
    pub fn hs_inner(&self, other: &Self) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        let mut acc = 0.0;
        for (a, b) in self.data.iter().zip(other.data.iter()) {
            // Re(conj(a)·b) summed over entries equals Re Tr(A†B).
            acc += a.re * b.re + a.im * b.im;
        }
        Ok(acc)
    }

    /// Unitary conjugation `U A U†`.
    pub fn conjugated_by(&self, u: &Self) -> Result<Self> {
        if self.dim() != u.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: u.dim() });
        }
        Ok(Self { data: &u.data * &self.data * u.data.adjoint() })
    }

    /// Column-major vectorization.
    pub(crate) fn vec_column_major(&self) -> DVector<C64> {
        DVector::from_column_slice(self.data.as_slice())
    }

    /// Inverse of [`Self::vec_column_major`].
    pub(crate) fn from_vec_column_major(n: usize, v: &DVector<C64>) -> Self {
        assert_eq!(v.len(), n * n);
        Self { data: DMatrix::from_column_slice(n, n, v.as_slice()) }
    }

    /// Kronecker product `A ⊗ B`.
    pub(crate) fn kronecker(&self, other: &Self) -> Self {
        Self { data: self.data.kronecker(&other.data) }
    }

    /// Entries split into real and imaginary parts, row by row.
    pub fn entries_split(&self) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
        let n = self.dim();
        let mut re = vec![vec![0.0; n]; n];
        let mut im = vec![vec![0.0; n]; n];
        for r in 0..n {
            for c in 0..n {
                let z = self.data[(r, c)];
                re[r][c] = z.re;
                im[r][c] = z.im;
            }
        }
        (re, im)
    }
}

impl std::ops::Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix { data: &self.data + &rhs.data }
    }
}

impl std::ops::Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix { data: &self.data - &rhs.data }
    }
}

impl std::ops::Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        ComplexMatrix { data: -&self.data }
    }
}

impl std::ops::Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix { data: &self.data * &rhs.data }
    }
}

/// Outcome of offering a candidate to an [`OrthoBasis`].
#[derive(Debug, Clone, Copy)]
pub struct ExtendOutcome {
    /// Whether the candidate enlarged the basis.
    pub accepted: bool,
    /// Norm of the candidate after projection onto the current span.
    pub residual_norm: f64,
}

/// Ordered, Hilbert–Schmidt-orthonormal list of matrices spanning a real
/// subspace of matrix space.
///
/// Orthogonalization uses modified Gram–Schmidt with a second
/// reorthogonalization pass, so near-dependent candidates are projected
/// accurately before the acceptance decision.
#[derive(Debug, Clone)]
pub struct OrthoBasis {
    elements: Vec<ComplexMatrix>,
    tolerance: f64,
}

impl OrthoBasis {
    /// Creates an empty basis with the given relative tolerance.
    pub fn new(tolerance: f64) -> Result<Self> {
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(Error::InvalidSystem(format!(
                "tolerance must be a positive finite number, got {tolerance}"
            )));
        }
        Ok(Self { elements: Vec::new(), tolerance })
    }

    /// Relative acceptance tolerance.
    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Number of basis elements (the dimension of the spanned subspace).
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True when no element has been accepted yet.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The orthonormal elements in acceptance order.
    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    /// Matrix side length of the stored elements, if any.
    pub fn matrix_dim(&self) -> Option<usize> {
        self.elements.first().map(ComplexMatrix::dim)
    }

    fn check_dim(&self, candidate: &ComplexMatrix) -> Result<()> {
        if let Some(n) = self.matrix_dim() {
            if candidate.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: candidate.dim() });
            }
        }
        Ok(())
    }

    /// Projects `candidate` against the span (two passes of modified
    /// Gram–Schmidt) and returns the residual together with its norm.
    pub fn residual(&self, candidate: &ComplexMatrix) -> Result<(ComplexMatrix, f64)> {
        self.check_dim(candidate)?;
        if !candidate.is_finite() {
            return Err(Error::NonFinite("orthogonalization candidate"));
        }
        let mut r = candidate.clone();
        for _pass in 0..2 {
            for e in &self.elements {
                let overlap = e.hs_inner(&r)?;
                r = &r - &e.scaled(overlap);
            }
        }
        let norm = r.norm();
        Ok((r, norm))
    }

    /// Norm of the candidate's component orthogonal to the span.
    pub fn residual_norm(&self, candidate: &ComplexMatrix) -> Result<f64> {
        self.residual(candidate).map(|(_, norm)| norm)
    }

    /// Membership test: residual at most `tolerance × ‖candidate‖`.
    ///
    /// The zero matrix is a member by convention.
    pub fn contains(&self, candidate: &ComplexMatrix) -> Result<bool> {
        let norm = candidate.norm();
        let residual = self.residual_norm(candidate)?;
        Ok(residual <= self.tolerance * norm)
    }

    /// Offers a candidate: accepted (and appended, normalized) exactly when
    /// its residual norm exceeds `tolerance × ‖candidate‖`.
    pub fn try_extend(&mut self, candidate: &ComplexMatrix) -> Result<ExtendOutcome> {
        let original_norm = candidate.norm();
        let (residual, residual_norm) = self.residual(candidate)?;
        let accepted = residual_norm > self.tolerance * original_norm;
        if accepted {
            self.elements.push(residual.scaled(1.0 / residual_norm));
        }
        Ok(ExtendOutcome { accepted, residual_norm })
    }
}

/// Common kernel of a list of linear operators on vectorized `n×n` matrices.
///
/// Each operator is given as an `n²×n²` matrix acting on the column-major
/// vectorization of an `n×n` matrix.  The operators are stacked and a
/// singular value decomposition reveals the kernel: right singular vectors
/// whose singular value is at most `tolerance × σ_max` (all of them when the
/// stack is exactly zero).  The returned kernel matrices are orthonormal in
/// the Hilbert–Schmidt sense.
pub fn matrix_nullspace(operators: &[ComplexMatrix], tolerance: f64) -> Result<Vec<ComplexMatrix>> {
    if operators.is_empty() {
        return Err(Error::EmptyInput("matrix_nullspace requires at least one operator"));
    }
    let nn = operators[0].dim();
    let n = (nn as f64).sqrt().round() as usize;
    if n * n != nn {
        return Err(Error::InvalidSystem(format!(
            "nullspace operators must act on vectorized square matrices; side {nn} is not a square"
        )));
    }
    for op in operators {
        if op.dim() != nn {
            return Err(Error::DimensionMismatch { expected: nn, found: op.dim() });
        }
        if !op.is_finite() {
            return Err(Error::NonFinite("nullspace operator"));
        }
    }

    let rows = operators.len() * nn;
    let mut stacked = DMatrix::<C64>::zeros(rows, nn);
    for (k, op) in operators.iter().enumerate() {
        stacked.view_mut((k * nn, 0), (nn, nn)).copy_from(op.as_dmatrix());
    }

    // rows ≥ nn, so the thin SVD still produces a complete set of nn right
    // singular vectors and the kernel cannot be silently truncated.
    let svd = stacked.svd(false, true);
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::Internal("SVD did not return right singular vectors".into()))?;
    let sigma = svd.singular_values;
    let sigma_max = sigma.iter().cloned().fold(0.0_f64, f64::max);

    let mut kernel = Vec::new();
    for (k, &s) in sigma.iter().enumerate() {
        if s <= tolerance * sigma_max {
            let row = v_t.row(k).adjoint();
            let vector = DVector::from_iterator(nn, row.iter().cloned());
            kernel.push(ComplexMatrix::from_vec_column_major(n, &vector));
        }
    }
    Ok(kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, r: usize, c: usize) -> ComplexMatrix {
        ComplexMatrix::basis_matrix(n, r, c)
    }

    #[test]
    fn commutator_of_elementary_matrices() {
        // [e_{12}, e_{21}] = e_{11} − e_{22} (1-based labels).
        let a = e(2, 0, 1);
        let b = e(2, 1, 0);
        let expected = &e(2, 0, 0) - &e(2, 1, 1);
        let got = a.commutator(&b).unwrap();
        assert!(got.distance(&expected) == 0.0);
    }

    #[test]
    fn commutator_with_self_is_zero() {
        let a = ComplexMatrix::from_fn(3, |r, c| C64::new((r + 2 * c) as f64, (r * c) as f64));
        let z = a.commutator(&a).unwrap();
        assert_eq!(z.norm(), 0.0);
    }

    #[test]
    fn commutator_dimension_mismatch_errors() {
        let a = ComplexMatrix::zeros(2);
        let b = ComplexMatrix::zeros(3);
        assert!(a.commutator(&b).is_err());
        assert!(a.hs_inner(&b).is_err());
    }

    #[test]
    fn hs_inner_examples() {
        // h₁ = i(e_{11} − e_{22}) has squared norm 2.
        let h1 = ComplexMatrix::from_diag_imag(&[1.0, -1.0]);
        assert_eq!(h1.hs_inner(&h1).unwrap(), 2.0);

        // Real and imaginary off-diagonal parts are orthogonal.
        let x = &e(2, 0, 1) - &e(2, 1, 0);
        let y = (&e(2, 0, 1) + &e(2, 1, 0)).scaled_complex(C64::new(0.0, 1.0));
        assert_eq!(x.hs_inner(&y).unwrap(), 0.0);

        // Disjoint support.
        let a = ComplexMatrix::from_diag_imag(&[1.0, 0.0]);
        let b = ComplexMatrix::from_diag_imag(&[0.0, 1.0]);
        assert_eq!(a.hs_inner(&b).unwrap(), 0.0);
    }

    #[test]
    fn skew_hermitian_detection() {
        let h1 = ComplexMatrix::from_diag_imag(&[1.0, -1.0]);
        assert!(h1.is_skew_hermitian(1e-12));
        let not_skew = ComplexMatrix::from_diag_real(&[1.0, -1.0]);
        assert!(!not_skew.is_skew_hermitian(1e-12));
    }

    #[test]
    fn extend_accepts_independent_and_rejects_dependent() {
        let mut basis = OrthoBasis::new(1e-9).unwrap();
        let a = (&e(2, 0, 1) - &e(2, 1, 0)).scaled(3.0);

        let first = basis.try_extend(&a).unwrap();
        assert!(first.accepted);
        assert!((first.residual_norm - a.norm()).abs() < 1e-14);
        assert_eq!(basis.len(), 1);

        // Re-offering any accepted element is rejected (idempotence).
        let again = basis.try_extend(&a).unwrap();
        assert!(!again.accepted);
        assert!(again.residual_norm <= 1e-12 * a.norm());
        assert_eq!(basis.len(), 1);

        // A linear combination of accepted elements is rejected.
        let b = ComplexMatrix::from_diag_imag(&[1.0, -1.0]);
        assert!(basis.try_extend(&b).unwrap().accepted);
        let combo = &a.scaled(2.0) + &b;
        assert!(!basis.try_extend(&combo).unwrap().accepted);
    }

    #[test]
    fn extend_rejects_zero_candidate() {
        let mut basis = OrthoBasis::new(1e-9).unwrap();
        let outcome = basis.try_extend(&ComplexMatrix::zeros(2)).unwrap();
        assert!(!outcome.accepted);
        assert_eq!(outcome.residual_norm, 0.0);
    }

    #[test]
    fn nullspace_of_identity_map_is_empty() {
        let id = ComplexMatrix::identity(4);
        let kernel = matrix_nullspace(&[id], 1e-9).unwrap();
        assert!(kernel.is_empty());
    }

    #[test]
    fn nullspace_of_zero_map_is_full() {
        let z = ComplexMatrix::zeros(4);
        let kernel = matrix_nullspace(&[z], 1e-9).unwrap();
        assert_eq!(kernel.len(), 4);
    }

    #[test]
    fn nullspace_empty_input_errors() {
        assert!(matrix_nullspace(&[], 1e-9).is_err());
    }

    #[test]
    fn nullspace_orthonormality() {
        let z = ComplexMatrix::zeros(9);
        let kernel = matrix_nullspace(&[z], 1e-9).unwrap();
        for (i, a) in kernel.iter().enumerate() {
            for (j, b) in kernel.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((a.hs_inner(b).unwrap() - want).abs() < 1e-12);
            }
        }
    }
}
