//! Interlacing criteria for scalar monic pairs: pencil real-rootedness
//! (two quantifications), residue sign, root alternation, and the
//! constructive rank-one symmetric pair, extended blockwise to diagonal
//! matrix polynomials.

use alloc::format;
use alloc::vec::Vec;
use num_traits::Float;

use crate::defaults;
use crate::eig;
use crate::error::{Error, Result};
use crate::hyperbolicity::verify_coincidence;
use crate::matrix::SymmetricMatrix;
use crate::poly::{MatrixPolynomial, ScalarPolynomial};
use crate::spectrum::{classify_real, SpectrumReal};
use crate::C64;

/// Sign pattern of the residues `c_j` in `h/f = 1 + Σ c_j/(z−λ_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignClass {
    AllPositive,
    AllNegative,
    Mixed,
    /// Some `|c_j|` at or below the degeneracy threshold (near-common root).
    Degenerate,
}

/// Partial-fraction data of `h/f − 1` over the simple real roots of `f`.
#[derive(Debug, Clone)]
pub struct ResidueDecomposition {
    /// Roots of `f`, strictly increasing.
    pub lambdas: SpectrumReal,
    /// `c_j = h(λ_j)/f′(λ_j)`, aligned with `lambdas`.
    pub residues: Vec<f64>,
    pub sign_class: SignClass,
}

/// Rank-one symmetric pair realizing `f = det(zI−A)`, `h = det(zI−B)`.
#[derive(Debug, Clone)]
pub struct SymmetricPair {
    /// Diagonal matrix of the roots of `f`.
    pub a: SymmetricMatrix,
    /// `B = A + sign·xxᵀ`.
    pub b: SymmetricMatrix,
    pub x: Vec<f64>,
    /// `+1` or `−1` (`−sign(c_j)`).
    pub sign: f64,
}

/// Why a root-alternation check failed (or that it held).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterlaceStatus {
    Interlaces,
    FirstNotRealSimple,
    SecondNotRealSimple,
    /// Root sets too close to order, or not strictly alternating.
    NotAlternating,
}

impl InterlaceStatus {
    pub fn holds(self) -> bool {
        self == InterlaceStatus::Interlaces
    }
}

/// Verdicts of the four equivalent conditions, evaluated independently.
#[derive(Debug, Clone)]
pub struct ObreschkoffReport {
    /// `αf + βh` real-rooted on the unit-circle direction grid.
    pub cond1: bool,
    /// `αf + (1−α)h` real-rooted on the default real grid.
    pub cond2: bool,
    /// Residues exist and are all of one strict sign.
    pub cond3: bool,
    /// Roots are real, simple, and strictly alternate.
    pub cond4: bool,
    pub circle_failures: Vec<(f64, f64)>,
    pub affine_failures: Vec<f64>,
    pub sign_class: SignClass,
    pub interlace: InterlaceStatus,
}

impl ObreschkoffReport {
    pub fn unanimous(&self) -> Option<bool> {
        if self.cond1 == self.cond2 && self.cond2 == self.cond3 && self.cond3 == self.cond4 {
            Some(self.cond1)
        } else {
            None
        }
    }
}

fn check_pair_shape(f: &ScalarPolynomial, h: &ScalarPolynomial) -> Result<()> {
    if f.degree() != h.degree() {
        return Err(Error::ShapeMismatch(format!(
            "degrees {} vs {}",
            f.degree(),
            h.degree()
        )));
    }
    if f.degree() == 0 {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic(1e-9) || !h.is_monic(1e-9) {
        return Err(Error::NotMonic);
    }
    Ok(())
}

fn polynomials_distinct(f: &ScalarPolynomial, h: &ScalarPolynomial) -> bool {
    f.rel_distance(h) > 1e-12
}

/// Coprimality via a monic Euclidean remainder sequence with a relative
/// coefficient cutoff.
pub fn are_coprime(f: &ScalarPolynomial, h: &ScalarPolynomial, cutoff: f64) -> bool {
    let mut a = f.clone();
    let mut b = h.clone();
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
    }
    while b.degree() > 0 {
        let (_, r) = match a.div_rem(&b) {
            Ok(qr) => qr,
            Err(_) => return false,
        };
        if r.max_coeff_norm() <= cutoff * (1.0 + a.max_coeff_norm().max(b.max_coeff_norm())) {
            // Remainder vanished: gcd is b, which has positive degree.
            return false;
        }
        a = b;
        b = r.monic().expect("nonzero remainder");
    }
    !b.is_zero()
}

/// Partial-fraction residues `c_j = h(λ_j)/f′(λ_j)` over the simple real
/// roots of `f`, with the decomposition identity re-verified at `2ℓ` test
/// points before returning.
pub fn residues(
    f: &ScalarPolynomial,
    h: &ScalarPolynomial,
    tol: f64,
) -> Result<ResidueDecomposition> {
    check_pair_shape(f, h)?;
    if !are_coprime(f, h, defaults::COPRIME_TOL) {
        return Err(Error::NotCoprime);
    }
    let roots = f.roots()?;
    let cls = classify_real(&roots, tol);
    if !cls.all_real {
        return Err(Error::NonRealRoots(format!(
            "{} non-real roots of the denominator",
            cls.offenders.len()
        )));
    }
    let lambdas = cls.reals;
    for w in lambdas.values().windows(2) {
        if (w[1] - w[0]).abs() <= defaults::SIMPLE_TOL * (1.0 + w[0].abs().max(w[1].abs())) {
            return Err(Error::MultipleRoots);
        }
    }
    let fd = f.derivative();
    let mut residues = Vec::with_capacity(lambdas.len());
    for &lam in lambdas.values() {
        let z = C64::new(lam, 0.0);
        let c = h.eval(z) / fd.eval(z);
        if c.im.abs() > 1e-8 * (1.0 + c.norm()) {
            return Err(Error::NumericalError(format!(
                "complex residue {:.3e}+{:.3e}i at λ = {lam}",
                c.re, c.im
            )));
        }
        residues.push(c.re);
    }
    let sign_class = classify_signs(&residues);

    // Re-verify h(z) = f(z)·(1 + Σ c_j/(z−λ_j)) away from the spectrum.
    let ell = f.degree();
    let radius = 2.0
        * (1.0
            + lambdas
                .values()
                .iter()
                .map(|l| l.abs())
                .fold(0.0, f64::max));
    for k in 0..(2 * ell) {
        let theta = core::f64::consts::TAU * (k as f64 + 0.37) / (2 * ell) as f64;
        let z = C64::new(radius * theta.cos(), radius * theta.sin());
        let mut series = C64::new(1.0, 0.0);
        for (&lam, &c) in lambdas.values().iter().zip(&residues) {
            series += C64::new(c, 0.0) / (z - C64::new(lam, 0.0));
        }
        let lhs = h.eval(z);
        let rhs = f.eval(z) * series;
        if (lhs - rhs).norm() > 1e-8 * (1.0 + lhs.norm()) {
            return Err(Error::NumericalError(format!(
                "partial-fraction identity residual {:.3e}",
                (lhs - rhs).norm()
            )));
        }
    }
    Ok(ResidueDecomposition {
        lambdas,
        residues,
        sign_class,
    })
}

fn classify_signs(residues: &[f64]) -> SignClass {
    if residues.iter().any(|c| c.abs() <= defaults::RESIDUE_TOL) {
        return SignClass::Degenerate;
    }
    let pos = residues.iter().filter(|c| **c > 0.0).count();
    if pos == residues.len() {
        SignClass::AllPositive
    } else if pos == 0 {
        SignClass::AllNegative
    } else {
        SignClass::Mixed
    }
}

/// Do the roots of `f` and `h` strictly alternate (both real and simple)?
pub fn roots_interlace(
    f: &ScalarPolynomial,
    h: &ScalarPolynomial,
    tol: f64,
) -> Result<InterlaceStatus> {
    check_pair_shape(f, h)?;
    let rf = match real_simple_roots(f, tol) {
        Some(r) => r,
        None => return Ok(InterlaceStatus::FirstNotRealSimple),
    };
    let rh = match real_simple_roots(h, tol) {
        Some(r) => r,
        None => return Ok(InterlaceStatus::SecondNotRealSimple),
    };
    // Merge with tags and require strict alternation; degree 1 is vacuous.
    let mut merged: Vec<(f64, u8)> = rf
        .iter()
        .map(|&v| (v, 0u8))
        .chain(rh.iter().map(|&v| (v, 1u8)))
        .collect();
    merged.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));
    for w in merged.windows(2) {
        if w[0].1 == w[1].1 {
            return Ok(InterlaceStatus::NotAlternating);
        }
        if (w[1].0 - w[0].0).abs() <= defaults::SIMPLE_TOL * (1.0 + w[0].0.abs().max(w[1].0.abs()))
        {
            // A near-tie between an f-root and an h-root cannot be ordered.
            return Ok(InterlaceStatus::NotAlternating);
        }
    }
    Ok(InterlaceStatus::Interlaces)
}

fn real_simple_roots(p: &ScalarPolynomial, tol: f64) -> Option<Vec<f64>> {
    let roots = p.roots().ok()?;
    let cls = classify_real(&roots, tol);
    if !cls.all_real {
        return None;
    }
    let vals = cls.reals.values().to_vec();
    for w in vals.windows(2) {
        if (w[1] - w[0]).abs() <= defaults::SIMPLE_TOL * (1.0 + w[0].abs().max(w[1].abs())) {
            return None;
        }
    }
    Some(vals)
}

/// Is `αf + βh` real-rooted for every grid direction? Degree drops at
/// `α + β ≈ 0` are handled by coefficient trimming; a constant combination
/// is vacuously real-rooted.
pub fn pencil_real_rooted(
    f: &ScalarPolynomial,
    h: &ScalarPolynomial,
    grid: &[(f64, f64)],
    tol: f64,
) -> Result<bool> {
    check_pair_shape(f, h)?;
    if !polynomials_distinct(f, h) {
        return Err(Error::NotDistinct);
    }
    Ok(pencil_failures(f, h, grid, tol).is_empty())
}

fn pencil_failures(
    f: &ScalarPolynomial,
    h: &ScalarPolynomial,
    grid: &[(f64, f64)],
    tol: f64,
) -> Vec<(f64, f64)> {
    let mut failures = Vec::new();
    for &(a, b) in grid {
        if a == 0.0 && b == 0.0 {
            continue;
        }
        let p = f.linear_combination(h, C64::new(a, 0.0), C64::new(b, 0.0));
        if p.degree() == 0 {
            continue;
        }
        let real_rooted = p
            .roots()
            .map(|r| classify_real(&r, tol).all_real)
            .unwrap_or(false);
        if !real_rooted {
            failures.push((a, b));
        }
    }
    failures
}

fn circle_grid() -> Vec<(f64, f64)> {
    (0..defaults::CIRCLE_DIRECTIONS)
        .map(|k| {
            let theta = core::f64::consts::TAU * k as f64 / defaults::CIRCLE_DIRECTIONS as f64;
            (theta.cos(), theta.sin())
        })
        .collect()
}

fn affine_grid() -> Vec<(f64, f64)> {
    defaults::ALPHA_GRID.iter().map(|&a| (a, 1.0 - a)).collect()
}

/// Evaluates all four conditions independently. Preconditions: monic, equal
/// degree, distinct, coprime (guarded). The four verdicts are returned
/// without forcing agreement.
pub fn obreschkoff_report(
    f: &ScalarPolynomial,
    h: &ScalarPolynomial,
    tol: f64,
) -> Result<ObreschkoffReport> {
    check_pair_shape(f, h)?;
    if !polynomials_distinct(f, h) {
        return Err(Error::NotDistinct);
    }
    if !are_coprime(f, h, defaults::COPRIME_TOL) {
        return Err(Error::NotCoprime);
    }
    let circle_failures = pencil_failures(f, h, &circle_grid(), tol);
    let affine_failures: Vec<f64> = pencil_failures(f, h, &affine_grid(), tol)
        .into_iter()
        .map(|(a, _)| a)
        .collect();
    let (cond3, sign_class) = match residues(f, h, tol) {
        Ok(rd) => (
            matches!(rd.sign_class, SignClass::AllPositive | SignClass::AllNegative),
            rd.sign_class,
        ),
        Err(Error::NonRealRoots(_)) | Err(Error::MultipleRoots) => (false, SignClass::Degenerate),
        Err(e) => return Err(e),
    };
    let interlace = roots_interlace(f, h, tol)?;
    Ok(ObreschkoffReport {
        cond1: circle_failures.is_empty(),
        cond2: affine_failures.is_empty(),
        cond3,
        cond4: interlace.holds(),
        circle_failures,
        affine_failures,
        sign_class,
        interlace,
    })
}

/// Constructive rank-one pair from a one-signed residue decomposition:
/// `A = diag(λ)`, `x_j = √|c_j|`, `sign = −sign(c_j)`, `B = A + sign·xxᵀ`.
/// Both characteristic polynomials are re-verified before returning.
pub fn build_symmetric_pair(
    f: &ScalarPolynomial,
    h: &ScalarPolynomial,
    tol: f64,
) -> Result<SymmetricPair> {
    let rd = residues(f, h, tol)?;
    let sign = match rd.sign_class {
        SignClass::AllPositive => -1.0,
        SignClass::AllNegative => 1.0,
        SignClass::Mixed => return Err(Error::MixedSigns),
        SignClass::Degenerate => return Err(Error::DegenerateResidue),
    };
    let a = SymmetricMatrix::diag(rd.lambdas.values());
    let x: Vec<f64> = rd.residues.iter().map(|c| c.abs().sqrt()).collect();
    let b = a.rank_one_update(&x, sign)?;

    let fa = ScalarPolynomial::from_roots(
        &rd.lambdas
            .values()
            .iter()
            .map(|&l| C64::new(l, 0.0))
            .collect::<Vec<_>>(),
    );
    if fa.rel_distance(f) > 1e-8 {
        return Err(Error::NumericalError(format!(
            "det(zI−A) departs from f by {:.3e}",
            fa.rel_distance(f)
        )));
    }
    let eigs_b = eig::symmetric_eigenvalues(&b)?;
    let hb = ScalarPolynomial::from_roots(
        &eigs_b
            .values()
            .iter()
            .map(|&l| C64::new(l, 0.0))
            .collect::<Vec<_>>(),
    );
    if hb.rel_distance(h) > 1e-8 {
        return Err(Error::NumericalError(format!(
            "det(zI−B) departs from h by {:.3e}",
            hb.rel_distance(h)
        )));
    }
    Ok(SymmetricPair { a, b, x, sign })
}

/// Blockwise rank-one construction for diagonal monic matrix polynomials:
/// per-entry scalar pairs produce `(A_i, B_i)`, assembled as direct sums.
/// The root/eigenvalue coincidence over the default α grid is re-verified
/// before returning.
pub fn build_diagonal_pencil_pair(
    l: &MatrixPolynomial,
    m: &MatrixPolynomial,
    tol: f64,
) -> Result<(SymmetricMatrix, SymmetricMatrix)> {
    l.check_compatible(m)?;
    if !l.is_monic() || !m.is_monic() {
        return Err(Error::NotMonic);
    }
    if !l.is_diagonal(1e-12) || !m.is_diagonal(1e-12) {
        return Err(Error::NotDiagonal);
    }
    let n = l.size();
    let mut blocks_a = Vec::with_capacity(n);
    let mut blocks_b = Vec::with_capacity(n);
    for i in 0..n {
        let fi = l.diagonal_section(i)?;
        let hi = m.diagonal_section(i)?;
        if !fi.is_real(1e-10) || !hi.is_real(1e-10) {
            return Err(Error::NotReal);
        }
        let pair = build_symmetric_pair(&fi, &hi, tol)?;
        blocks_a.push(pair.a);
        blocks_b.push(pair.b);
    }
    let a = SymmetricMatrix::block_diag(&blocks_a);
    let b = SymmetricMatrix::block_diag(&blocks_b);
    let report = verify_coincidence(l, m, &a, &b, &defaults::ALPHA_GRID, tol.max(1e-7))?;
    if !report.verdict {
        return Err(Error::NumericalError(format!(
            "blockwise pair mismatch {:.3e} on the α grid",
            report.max_mismatch
        )));
    }
    Ok((a, b))
}

/// Constructs interlacing test pairs: `f = det(zI−A)` for diagonal `A`,
/// `h = det(zI−(A + sign·xxᵀ))`. Useful for randomized round trips.
pub fn rank_one_pair_from(
    lambdas: &[f64],
    x: &[f64],
    sign: f64,
) -> Result<(ScalarPolynomial, ScalarPolynomial)> {
    if lambdas.len() != x.len() || lambdas.is_empty() {
        return Err(Error::ShapeMismatch("lambda/x length mismatch".into()));
    }
    let a = SymmetricMatrix::diag(lambdas);
    let b = a.rank_one_update(x, sign)?;
    let f = ScalarPolynomial::from_roots(
        &lambdas.iter().map(|&l| C64::new(l, 0.0)).collect::<Vec<_>>(),
    );
    let eigs = eig::symmetric_eigenvalues(&b)?;
    let h = ScalarPolynomial::from_roots(
        &eigs
            .values()
            .iter()
            .map(|&l| C64::new(l, 0.0))
            .collect::<Vec<_>>(),
    );
    Ok((f, h))
}
