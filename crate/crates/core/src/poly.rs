//! Scalar and matrix polynomial value types.
//!
//! Coefficients are stored in ascending degree order. Matrix polynomials are
//! usually monic (leading coefficient the identity); non-monic intermediates
//! such as derivatives or pencil differences go through
//! [`MatrixPolynomial::from_coeffs`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

use crate::eig;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::spectrum::SpectrumComplex;
use crate::C64;

/// Relative cutoff for trimming vanishing leading coefficients on
/// construction. Keeps degree drops in pencil combinations (`α f + β h`
/// with `α + β ≈ 0`) from leaving a spurious tiny leading term.
const TRIM_TOL: f64 = 1e-12;

/// Tolerance for recognizing a leading coefficient as the identity.
const MONIC_TOL: f64 = 1e-9;

fn czero() -> C64 {
    C64::new(0.0, 0.0)
}

fn cone() -> C64 {
    C64::new(1.0, 0.0)
}

/// Univariate polynomial with complex coefficients, ascending degree order.
/// Trailing (near-)zero coefficients are trimmed on construction relative to
/// the largest coefficient magnitude; the zero polynomial is the single
/// coefficient `0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPolynomial {
    coeffs: Vec<C64>,
}

impl ScalarPolynomial {
    pub fn new(mut coeffs: Vec<C64>) -> Self {
        let max = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let cutoff = TRIM_TOL * max;
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.norm() <= cutoff) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(czero());
        }
        if coeffs.len() == 1 && coeffs[0].norm() <= cutoff {
            coeffs[0] = czero();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// `∏ (z − r_j)`, expanded.
    pub fn from_roots(roots: &[C64]) -> Self {
        let mut coeffs = vec![cone()];
        for &r in roots {
            let mut next = vec![czero(); coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= r * c;
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self {
            coeffs: vec![czero()],
        }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![cone()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == czero()
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_else(czero)
    }

    pub fn leading(&self) -> C64 {
        *self.coeffs.last().expect("nonempty coeffs")
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_monic(&self, tol: f64) -> bool {
        (self.leading() - cone()).norm() <= tol
    }

    /// All coefficient imaginary parts at most `tol·(1 + |coeff|)`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.im.abs() <= tol * (1.0 + c.norm()))
    }

    pub fn eval(&self, z: C64) -> C64 {
        let mut acc = czero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| c * (j as f64))
            .collect();
        Self::new(coeffs)
    }

    /// `a·self + b·other`.
    pub fn linear_combination(&self, other: &Self, a: C64, b: C64) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| a * self.coeff(k) + b * other.coeff(k))
            .collect();
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.linear_combination(other, cone(), cone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.linear_combination(other, cone(), -cone())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![czero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Monic normalization (divide by the leading coefficient).
    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lead = self.leading();
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c /= lead;
        }
        *out.coeffs.last_mut().expect("nonempty") = cone();
        Ok(out)
    }

    /// Euclidean division `self = q·divisor + r`, returning `(q, r)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() < divisor.degree() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let dn = divisor.degree();
        let lead = divisor.leading();
        let qlen = self.degree() - dn + 1;
        let mut q = vec![czero(); qlen];
        for k in (0..qlen).rev() {
            let factor = rem[k + dn] / lead;
            q[k] = factor;
            for j in 0..=dn {
                let d = divisor.coeff(j);
                rem[k + j] -= factor * d;
            }
        }
        rem.truncate(dn.max(1));
        Ok((Self::new(q), Self::new(rem)))
    }

    /// Coefficientwise distance scaled by `1 + max coefficient magnitude` of
    /// the two operands.
    pub fn rel_distance(&self, other: &Self) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        let diff = (0..len)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max);
        diff / (1.0 + self.max_coeff_norm().max(other.max_coeff_norm()))
    }

    /// Companion matrix of the monic normalization: identity on the first
    /// superdiagonal and `−c_0 … −c_{d−1}` along the last row.
    pub fn companion(&self) -> Result<ComplexMatrix> {
        if self.is_zero() || self.degree() == 0 {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.monic()?;
        let d = p.degree();
        let mut c = ComplexMatrix::zeros(d, d);
        for i in 0..d.saturating_sub(1) {
            c[(i, i + 1)] = cone();
        }
        for j in 0..d {
            c[(d - 1, j)] = -p.coeff(j);
        }
        Ok(c)
    }

    /// Root multiset via eigenvalues of the companion matrix.
    pub fn roots(&self) -> Result<SpectrumComplex> {
        eig::eigenvalues(&self.companion()?)
    }
}

/// Chebyshev (first-kind) points scaled to `radius`.
pub(crate) fn chebyshev_nodes(radius: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|k| radius * (core::f64::consts::PI * (2.0 * k as f64 + 1.0) / (2.0 * count as f64)).cos())
        .collect()
}

/// Newton divided-difference interpolation through `(nodes[k], values[k])`,
/// expanded to monomial coefficients. Nodes must be pairwise distinct.
pub(crate) fn interpolate(nodes: &[f64], values: &[C64]) -> ScalarPolynomial {
    debug_assert_eq!(nodes.len(), values.len());
    let n = nodes.len();
    let mut dd = values.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / C64::new(nodes[i] - nodes[i - k], 0.0);
        }
    }
    // Horner expansion of the Newton form.
    let mut coeffs = vec![dd[n - 1]];
    for k in (0..n - 1).rev() {
        let x = C64::new(nodes[k], 0.0);
        let mut next = vec![czero(); coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= x * c;
        }
        next[0] += dd[k];
        coeffs = next;
    }
    ScalarPolynomial::new(coeffs)
}

/// Characteristic polynomial `det(zI − A)`, monic, by determinant
/// interpolation at Chebyshev nodes of radius exceeding twice the max
/// row-sum norm.
pub fn char_poly(a: &ComplexMatrix) -> Result<ScalarPolynomial> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "char_poly of {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let m = a.rows();
    if m == 0 {
        return Ok(ScalarPolynomial::one());
    }
    let radius = 2.0 * a.max_row_sum_norm() + 1.0;
    let nodes = chebyshev_nodes(radius, m + 1);
    let id = ComplexMatrix::identity(m);
    let mut values = Vec::with_capacity(m + 1);
    for &x in &nodes {
        let shifted = id.scale(C64::new(x, 0.0)).sub(a)?;
        values.push(shifted.det()?);
    }
    let p = interpolate(&nodes, &values);
    finalize_monic(p, m)
}

fn finalize_monic(p: ScalarPolynomial, expected_degree: usize) -> Result<ScalarPolynomial> {
    if p.degree() != expected_degree {
        return Err(Error::NumericalError(format!(
            "interpolated determinant degree {} (expected {})",
            p.degree(),
            expected_degree
        )));
    }
    let lead = p.leading();
    if (lead - cone()).norm() > 1e-6 {
        return Err(Error::NumericalError(format!(
            "interpolated leading coefficient {:.6e}+{:.6e}i departs from 1",
            lead.re, lead.im
        )));
    }
    p.monic()
}

/// Monic matrix polynomial `L(z) = Σ L_j z^j` with `n×n` complex
/// coefficients, or a general matrix-coefficient polynomial built through
/// [`MatrixPolynomial::from_coeffs`].
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixPolynomial {
    n: usize,
    coeffs: Vec<ComplexMatrix>,
}

impl MatrixPolynomial {
    /// Monic constructor: the leading coefficient must equal the identity
    /// (within a tight tolerance; it is snapped to the exact identity).
    pub fn monic(coeffs: Vec<ComplexMatrix>) -> Result<Self> {
        let mut p = Self::from_coeffs(coeffs)?;
        let n = p.n;
        let lead = p.coeffs.last().expect("nonempty");
        let defect = lead.sub(&ComplexMatrix::identity(n))?.max_abs();
        if defect > MONIC_TOL {
            return Err(Error::NotMonic);
        }
        *p.coeffs.last_mut().expect("nonempty") = ComplexMatrix::identity(n);
        Ok(p)
    }

    /// General constructor: validates only that all coefficients are square
    /// of one size and at least one is present.
    pub fn from_coeffs(coeffs: Vec<ComplexMatrix>) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::ZeroPolynomial)?;
        let n = first.rows();
        if n == 0 {
            return Err(Error::ShapeMismatch("empty coefficient matrices".into()));
        }
        for c in &coeffs {
            if c.rows() != n || c.cols() != n {
                return Err(Error::ShapeMismatch(format!(
                    "coefficient {}x{} in degree-{} polynomial over {n}x{n}",
                    c.rows(),
                    c.cols(),
                    coeffs.len() - 1
                )));
            }
        }
        Ok(Self { n, coeffs })
    }

    /// Wraps a scalar polynomial as a `1×1` matrix polynomial.
    pub fn from_scalar(f: &ScalarPolynomial) -> Self {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|&c| ComplexMatrix::diag(&[c]))
            .collect();
        Self { n: 1, coeffs }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, j: usize) -> &ComplexMatrix {
        &self.coeffs[j]
    }

    pub fn is_monic(&self) -> bool {
        let lead = self.coeffs.last().expect("nonempty");
        lead.sub(&ComplexMatrix::identity(self.n))
            .map(|d| d.max_abs() <= MONIC_TOL)
            .unwrap_or(false)
    }

    /// Validates monicity and snaps the leading coefficient to the exact
    /// identity.
    pub fn into_monic(self) -> Result<Self> {
        Self::monic(self.coeffs)
    }

    /// All coefficients Hermitian within `tol` (relative)?
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_hermitian(tol))
    }

    /// Horner evaluation `Σ L_j z^j`.
    pub fn eval(&self, z: C64) -> ComplexMatrix {
        let mut acc = self.coeffs.last().expect("nonempty").clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.scale(z).add(c).expect("same shape");
        }
        acc
    }

    /// Derivative: coefficient `j` is `(j+1)·L_{j+1}`. The result is a
    /// general polynomial (leading coefficient `ℓ·I`).
    pub fn derivative(&self) -> Result<Self> {
        if self.degree() == 0 {
            return Err(Error::ZeroPolynomial);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c.scale(C64::new(j as f64, 0.0)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// `α·self + (1−α)·other`, coefficientwise. Both operands must be monic
    /// of the same shape; the result is monic again.
    pub fn affine_combination(&self, other: &Self, alpha: f64) -> Result<Self> {
        self.check_compatible(other)?;
        if !self.is_monic() || !other.is_monic() {
            return Err(Error::NotMonic);
        }
        let a = C64::new(alpha, 0.0);
        let b = C64::new(1.0 - alpha, 0.0);
        let coeffs: Vec<ComplexMatrix> = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(l, m)| l.scale(a).add(&m.scale(b)).expect("same shape"))
            .collect();
        Self::monic(coeffs)
    }

    /// `self + t·other` with `deg other ≤ deg self` allowed to differ.
    pub fn add_scaled(&self, other: &Self, t: f64) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!(
                "sizes {} vs {}",
                self.n, other.n
            )));
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = ComplexMatrix::zeros(self.n, self.n);
        let tt = C64::new(t, 0.0);
        let coeffs: Vec<ComplexMatrix> = (0..len)
            .map(|j| {
                let a = self.coeffs.get(j).unwrap_or(&zero);
                let b = other.coeffs.get(j).unwrap_or(&zero);
                a.add(&b.scale(tt)).expect("same shape")
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Block companion matrix: identity blocks on the first superdiagonal
    /// and `−L_0 … −L_{ℓ−1}` along the last block row. For `ℓ = 1` this is
    /// `−L_0`.
    pub fn companion(&self) -> Result<ComplexMatrix> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let ell = self.degree();
        if ell == 0 {
            return Err(Error::ZeroPolynomial);
        }
        let n = self.n;
        let mut c = ComplexMatrix::zeros(n * ell, n * ell);
        let id = ComplexMatrix::identity(n);
        for i in 0..ell - 1 {
            c.set_block(i * n, (i + 1) * n, &id);
        }
        let minus_one = C64::new(-1.0, 0.0);
        for j in 0..ell {
            let neg = self.coeffs[j].scale(minus_one);
            c.set_block((ell - 1) * n, j * n, &neg);
        }
        Ok(c)
    }

    /// Raw interpolation of `z ↦ det L(z)` at `nℓ+1` Chebyshev nodes scaled
    /// past twice the companion max row-sum norm; no monic normalization.
    pub fn det_poly_raw(&self) -> Result<ScalarPolynomial> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        if self.n == 1 {
            return Ok(ScalarPolynomial::new(
                self.coeffs.iter().map(|c| c[(0, 0)]).collect(),
            ));
        }
        let ell = self.degree();
        if ell == 0 {
            return Ok(ScalarPolynomial::one());
        }
        let radius = 2.0 * self.companion()?.max_row_sum_norm() + 1.0;
        let count = self.n * ell + 1;
        let nodes = chebyshev_nodes(radius, count);
        let mut values = Vec::with_capacity(count);
        for &x in &nodes {
            values.push(self.eval(C64::new(x, 0.0)).det()?);
        }
        Ok(interpolate(&nodes, &values))
    }

    /// `det L(z)` as a monic scalar polynomial of degree `nℓ`.
    pub fn det_poly(&self) -> Result<ScalarPolynomial> {
        let raw = self.det_poly_raw()?;
        finalize_monic(raw, self.n * self.degree())
    }

    /// Largest off-diagonal magnitude over all coefficients.
    pub fn off_diagonal_defect(&self) -> f64 {
        let mut defect = 0.0f64;
        for c in &self.coeffs {
            for i in 0..self.n {
                for j in 0..self.n {
                    if i != j {
                        defect = defect.max(c[(i, j)].norm());
                    }
                }
            }
        }
        defect
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        let scale = 1.0
            + self
                .coeffs
                .iter()
                .map(ComplexMatrix::max_abs)
                .fold(0.0, f64::max);
        self.off_diagonal_defect() <= tol * scale
    }

    /// Scalar polynomial along diagonal entry `i`.
    pub fn diagonal_section(&self, i: usize) -> Result<ScalarPolynomial> {
        if i >= self.n {
            return Err(Error::ShapeMismatch(format!(
                "diagonal index {i} in size {}",
                self.n
            )));
        }
        Ok(ScalarPolynomial::new(
            self.coeffs.iter().map(|c| c[(i, i)]).collect(),
        ))
    }

    /// The scalar polynomial of a `1×1` matrix polynomial.
    pub fn scalar_part(&self) -> Result<ScalarPolynomial> {
        if self.n != 1 {
            return Err(Error::ShapeMismatch(format!(
                "scalar_part of size {}",
                self.n
            )));
        }
        Ok(ScalarPolynomial::new(
            self.coeffs.iter().map(|c| c[(0, 0)]).collect(),
        ))
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.degree() != other.degree() {
            return Err(Error::ShapeMismatch(format!(
                "size {} degree {} vs size {} degree {}",
                self.n,
                self.degree(),
                other.n,
                other.degree()
            )));
        }
        Ok(())
    }

    /// Coefficientwise distance (largest entry of any coefficient
    /// difference), for equality checks.
    pub fn coeff_distance(&self, other: &Self) -> Result<f64> {
        self.check_compatible(other)?;
        let mut d = 0.0f64;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            d = d.max(a.sub(b)?.max_abs());
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::classify_real;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    /// z²I − C with C = [[2,1],[1,2]].
    fn sample_quadratic() -> MatrixPolynomial {
        let cmat = ComplexMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        MatrixPolynomial::monic(vec![
            cmat.scale(c(-1.0, 0.0)),
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::identity(2),
        ])
        .unwrap()
    }

    #[test]
    fn trim_and_degree() {
        let p = ScalarPolynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(1e-15, 0.0)]);
        assert_eq!(p.degree(), 1);
        let z = ScalarPolynomial::new(vec![c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(z.is_zero());
    }

    #[test]
    fn eval_matrix_polynomial() {
        let l = sample_quadratic();
        // z = 0 -> constant term = -C
        let v0 = l.eval(c(0.0, 0.0));
        assert!((v0[(0, 0)] - c(-2.0, 0.0)).norm() < 1e-15);
        assert!((v0[(0, 1)] - c(-1.0, 0.0)).norm() < 1e-15);
        // z = 2 -> 4I - C = [[2,-1],[-1,2]]
        let v2 = l.eval(c(2.0, 0.0));
        assert!((v2[(0, 0)] - c(2.0, 0.0)).norm() < 1e-14);
        assert!((v2[(0, 1)] - c(-1.0, 0.0)).norm() < 1e-14);
        assert!((v2[(1, 0)] - c(-1.0, 0.0)).norm() < 1e-14);
        assert!((v2[(1, 1)] - c(2.0, 0.0)).norm() < 1e-14);

        // zI − diag(1,2) at z = 1 -> diag(0,−1)
        let h = ComplexMatrix::diag(&[c(1.0, 0.0), c(2.0, 0.0)]);
        let p = MatrixPolynomial::monic(vec![h.scale(c(-1.0, 0.0)), ComplexMatrix::identity(2)])
            .unwrap();
        let v = p.eval(c(1.0, 0.0));
        assert!((v[(0, 0)]).norm() < 1e-15);
        assert!((v[(1, 1)] - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn derivative_examples() {
        let l = sample_quadratic();
        let d = l.derivative().unwrap();
        assert_eq!(d.degree(), 1);
        assert!(d.coefficient(0).max_abs() < 1e-15);
        assert!((d.coefficient(1)[(0, 0)] - c(2.0, 0.0)).norm() < 1e-15);

        // z³I + Dz -> 3z²I + D
        let dm = ComplexMatrix::diag(&[c(2.0, 0.0), c(-1.0, 0.0)]);
        let p = MatrixPolynomial::monic(vec![
            ComplexMatrix::zeros(2, 2),
            dm.clone(),
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::identity(2),
        ])
        .unwrap();
        let dp = p.derivative().unwrap();
        assert_eq!(dp.degree(), 2);
        assert!((dp.coefficient(0)[(0, 0)] - c(2.0, 0.0)).norm() < 1e-15);
        assert!((dp.coefficient(2)[(0, 0)] - c(3.0, 0.0)).norm() < 1e-15);

        let deg0 = MatrixPolynomial::monic(vec![ComplexMatrix::identity(2)]).unwrap();
        assert!(deg0.derivative().is_err());
    }

    #[test]
    fn affine_combination_endpoints_and_midpoint() {
        let l = MatrixPolynomial::monic(vec![
            ComplexMatrix::diag(&[c(-1.0, 0.0), c(-1.0, 0.0)]),
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::identity(2),
        ])
        .unwrap();
        let m = MatrixPolynomial::monic(vec![
            ComplexMatrix::diag(&[c(-3.0, 0.0), c(-3.0, 0.0)]),
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::identity(2),
        ])
        .unwrap();
        assert!(l.affine_combination(&m, 1.0).unwrap().coeff_distance(&l).unwrap() < 1e-15);
        assert!(l.affine_combination(&m, 0.0).unwrap().coeff_distance(&m).unwrap() < 1e-15);
        let mid = l.affine_combination(&m, 0.5).unwrap();
        assert!((mid.coefficient(0)[(0, 0)] - c(-2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn companion_layouts() {
        // f = z² − 3z + 2 -> [[0,1],[-2,3]]
        let f = ScalarPolynomial::from_real(&[2.0, -3.0, 1.0]);
        let cf = f.companion().unwrap();
        assert!((cf[(0, 1)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((cf[(1, 0)] - c(-2.0, 0.0)).norm() < 1e-15);
        assert!((cf[(1, 1)] - c(3.0, 0.0)).norm() < 1e-15);

        // f = z² − 1 -> [[0,1],[1,0]]
        let f = ScalarPolynomial::from_real(&[-1.0, 0.0, 1.0]);
        let cf = f.companion().unwrap();
        assert!((cf[(1, 0)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!(cf[(1, 1)].norm() < 1e-15);

        // Block layout: z²I−C has I₂ top-right and bottom block row (C, 0).
        let l = sample_quadratic();
        let cl = l.companion().unwrap();
        assert_eq!(cl.rows(), 4);
        assert!((cl[(0, 2)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((cl[(1, 3)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((cl[(2, 0)] - c(2.0, 0.0)).norm() < 1e-15);
        assert!((cl[(2, 1)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!(cl[(2, 2)].norm() < 1e-15);
        assert!(cl[(3, 3)].norm() < 1e-15);
        // Spectrum {±1, ±√3}.
        let eigs = eig::eigenvalues(&cl).unwrap();
        let r = classify_real(&eigs, 1e-8);
        assert!(r.all_real);
        let v = r.reals.values();
        let expected = [-(3.0f64.sqrt()), -1.0, 1.0, 3.0f64.sqrt()];
        for (a, b) in v.iter().zip(expected) {
            assert!((a - b).abs() < 1e-9);
        }

        // ℓ = 1: companion is −L_0.
        let h = ComplexMatrix::diag(&[c(1.0, 0.0), c(2.0, 0.0)]);
        let p = MatrixPolynomial::monic(vec![h.scale(c(-1.0, 0.0)), ComplexMatrix::identity(2)])
            .unwrap();
        let cp = p.companion().unwrap();
        assert_eq!(cp.rows(), 2);
        assert!((cp[(0, 0)] - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn det_poly_examples() {
        // zI − diag(1,2) -> z² − 3z + 2
        let h = ComplexMatrix::diag(&[c(1.0, 0.0), c(2.0, 0.0)]);
        let p = MatrixPolynomial::monic(vec![h.scale(c(-1.0, 0.0)), ComplexMatrix::identity(2)])
            .unwrap();
        let d = p.det_poly().unwrap();
        let expected = ScalarPolynomial::from_real(&[2.0, -3.0, 1.0]);
        assert!(d.rel_distance(&expected) < 1e-10);

        // z²I−C -> z⁴ − 4z² + 3
        let l = sample_quadratic();
        let d = l.det_poly().unwrap();
        let expected = ScalarPolynomial::from_real(&[3.0, 0.0, -4.0, 0.0, 1.0]);
        assert!(d.rel_distance(&expected) < 1e-10, "{:?}", d);

        // n = 1 passthrough.
        let f = ScalarPolynomial::from_real(&[-1.0, 0.0, 1.0]);
        let p = MatrixPolynomial::from_scalar(&f);
        assert!(p.det_poly().unwrap().rel_distance(&f) < 1e-15);
    }

    #[test]
    fn roots_of_expanded_product() {
        // (z−1)(z−2)(z−3)(z−4)(z−5), coefficients frozen from the expansion.
        let f = ScalarPolynomial::from_real(&[-120.0, 274.0, -225.0, 85.0, -15.0, 1.0]);
        let r = f.roots().unwrap();
        let cls = classify_real(&r, 1e-8);
        assert!(cls.all_real);
        for (a, b) in cls.reals.values().iter().zip([1.0, 2.0, 3.0, 4.0, 5.0]) {
            assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }

        // z² + 1 -> ±i; z² − 3z + 2 -> {1, 2}
        let g = ScalarPolynomial::from_real(&[1.0, 0.0, 1.0]);
        let rg = g.roots().unwrap().sorted();
        assert!((rg[0] - c(0.0, -1.0)).norm() < 1e-12);
        assert!((rg[1] - c(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn division_and_from_roots() {
        let f = ScalarPolynomial::from_roots(&[c(1.0, 0.0), c(2.0, 0.0), c(-0.5, 0.0)]);
        let g = ScalarPolynomial::from_roots(&[c(2.0, 0.0)]);
        let (q, r) = f.div_rem(&g).unwrap();
        assert!(r.max_coeff_norm() < 1e-12);
        let back = q.mul(&g);
        assert!(back.rel_distance(&f) < 1e-12);
    }

    #[test]
    fn monic_guard() {
        let bad = MatrixPolynomial::monic(vec![
            ComplexMatrix::identity(2),
            ComplexMatrix::identity(2).scale(c(2.0, 0.0)),
        ]);
        assert!(matches!(bad, Err(Error::NotMonic)));
    }
}
