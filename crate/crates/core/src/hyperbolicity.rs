//! Hyperbolicity and weak-hyperbolicity tests, the affine-pencil condition
//! on a polynomial pair, directional determinant polynomials, and the
//! root/eigenvalue coincidence check against a symmetric pair.

use alloc::format;
use alloc::vec::Vec;
use num_traits::Float;

use crate::eig;
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;
use crate::poly::{char_poly, MatrixPolynomial, ScalarPolynomial};
use crate::rng::Sampler;
use crate::spectrum::{classify_real, SpectrumComplex};
use crate::C64;

/// Result of scanning weak hyperbolicity of `αL + (1−α)M` over a grid plus
/// the leading-coefficient difference check that covers the `α → ∞`
/// direction.
#[derive(Debug, Clone)]
pub struct StarReport {
    pub alpha_grid: Vec<f64>,
    /// Grid values where the combination failed, with the offending roots.
    pub failures: Vec<(f64, Vec<C64>)>,
    /// Eigenvalues of `L_{ℓ−1} − M_{ℓ−1}`.
    pub leading_diff_spectrum: SpectrumComplex,
    /// Whether the leading-difference spectrum classifies all-real.
    pub leading_diff_real: bool,
    /// `failures` empty and the leading difference has all-real eigenvalues.
    pub verdict: bool,
}

/// Largest sorted-match distance between pencil determinant roots and
/// eigenvalues of `αA + (1−α)B` over a grid.
#[derive(Debug, Clone)]
pub struct CoincidenceReport {
    pub alpha_grid: Vec<f64>,
    /// `f64::INFINITY` when some grid point produced non-real roots.
    pub max_mismatch: f64,
    pub verdict: bool,
}

/// How a hyperbolicity check failed.
#[derive(Debug, Clone)]
pub enum HyperbolicityWitness {
    /// Coefficient `L_j` is not Hermitian (necessary condition).
    NonHermitianCoefficient { index: usize, defect: f64 },
    /// A unit vector whose scalar section has non-real roots.
    Section { x: Vec<C64>, offenders: Vec<C64> },
}

/// One-sided Monte Carlo verdict: `hyperbolic = true` means "no
/// counterexample found" among the sampled sections plus the standard basis
/// vectors; `false` carries a concrete witness and is conclusive.
#[derive(Debug, Clone)]
pub struct HyperbolicityVerdict {
    pub hyperbolic: bool,
    pub witness: Option<HyperbolicityWitness>,
    pub sections_checked: usize,
}

/// Does `det L(z)` have `nℓ` real roots (with multiplicity, within `tol`)?
pub fn is_weakly_hyperbolic(l: &MatrixPolynomial, tol: f64) -> Result<bool> {
    if !l.is_monic() {
        return Err(Error::NotMonic);
    }
    let roots = l.det_poly()?.roots()?;
    Ok(classify_real(&roots, tol).all_real)
}

/// The scalar section `⟨L(z)x, x⟩` for a unit vector `x` (normalized
/// internally). Monic whenever `L` is monic.
pub fn scalar_section(l: &MatrixPolynomial, x: &[C64]) -> Result<ScalarPolynomial> {
    let norm_sq: f64 = x.iter().map(|z| z.norm_sqr()).sum();
    if norm_sq.sqrt() <= 1e-300 {
        return Err(Error::ZeroVector);
    }
    let xn: Vec<C64> = if (norm_sq - 1.0).abs() > 1e-12 {
        let inv = 1.0 / norm_sq.sqrt();
        x.iter().map(|z| z * inv).collect()
    } else {
        x.to_vec()
    };
    let mut coeffs: Vec<C64> = (0..=l.degree())
        .map(|j| l.coefficient(j).quadratic_form(&xn))
        .collect::<Result<_>>()?;
    if l.is_monic() {
        // ⟨Ix, x⟩ = ‖x‖² = 1 by construction.
        *coeffs.last_mut().expect("nonempty") = C64::new(1.0, 0.0);
    }
    Ok(ScalarPolynomial::new(coeffs))
}

/// Monte Carlo hyperbolicity test: checks the sections over the standard
/// basis plus `samples` seeded random unit vectors. Hermitian coefficients
/// are a necessary condition and are tested first.
pub fn is_hyperbolic(
    l: &MatrixPolynomial,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<HyperbolicityVerdict> {
    if !l.is_monic() {
        return Err(Error::NotMonic);
    }
    for j in 0..=l.degree() {
        let c = l.coefficient(j);
        if !c.is_hermitian(tol.max(1e-10)) {
            return Ok(HyperbolicityVerdict {
                hyperbolic: false,
                witness: Some(HyperbolicityWitness::NonHermitianCoefficient {
                    index: j,
                    defect: c.hermitian_defect(),
                }),
                sections_checked: 0,
            });
        }
    }
    let n = l.size();
    let mut sampler = Sampler::new(seed);
    let mut checked = 0usize;
    let mut vectors: Vec<Vec<C64>> = Vec::with_capacity(n + samples);
    for i in 0..n {
        let mut e = alloc::vec![C64::new(0.0, 0.0); n];
        e[i] = C64::new(1.0, 0.0);
        vectors.push(e);
    }
    for _ in 0..samples {
        vectors.push(sampler.unit_vector(n));
    }
    for x in vectors {
        let section = scalar_section(l, &x)?;
        let roots = section.roots()?;
        let cls = classify_real(&roots, tol);
        checked += 1;
        if !cls.all_real {
            return Ok(HyperbolicityVerdict {
                hyperbolic: false,
                witness: Some(HyperbolicityWitness::Section {
                    x,
                    offenders: cls.offenders,
                }),
                sections_checked: checked,
            });
        }
    }
    Ok(HyperbolicityVerdict {
        hyperbolic: true,
        witness: None,
        sections_checked: checked,
    })
}

/// Scans weak hyperbolicity of `αL + (1−α)M` over `alpha_grid` and checks
/// that `L_{ℓ−1} − M_{ℓ−1}` has all-real eigenvalues (the degenerate
/// direction of the pencil).
pub fn condition_star(
    l: &MatrixPolynomial,
    m: &MatrixPolynomial,
    alpha_grid: &[f64],
    tol: f64,
) -> Result<StarReport> {
    l.check_compatible(m)?;
    if alpha_grid.is_empty() {
        return Err(Error::UnsupportedSize("empty alpha grid".into()));
    }
    let mut failures = Vec::new();
    for &alpha in alpha_grid {
        let comb = l.affine_combination(m, alpha)?;
        let roots = comb.det_poly()?.roots()?;
        let cls = classify_real(&roots, tol);
        if !cls.all_real {
            failures.push((alpha, cls.offenders));
        }
    }
    let ell = l.degree();
    if ell == 0 {
        return Err(Error::ZeroPolynomial);
    }
    let diff = l.coefficient(ell - 1).sub(m.coefficient(ell - 1))?;
    let spectrum = eig::eigenvalues(&diff)?;
    let leading_diff_real = classify_real(&spectrum, tol).all_real;
    let verdict = failures.is_empty() && leading_diff_real;
    Ok(StarReport {
        alpha_grid: alpha_grid.to_vec(),
        failures,
        leading_diff_spectrum: spectrum,
        leading_diff_real,
        verdict,
    })
}

/// The homogeneous direction polynomial `γ ↦ det(αC_L + βC_M − γI_{nℓ})`.
/// Degree `nℓ` with leading coefficient `(−1)^{nℓ}`.
pub fn direction_poly(
    l: &MatrixPolynomial,
    m: &MatrixPolynomial,
    alpha: f64,
    beta: f64,
) -> Result<ScalarPolynomial> {
    l.check_compatible(m)?;
    let cl = l.companion()?;
    let cm = m.companion()?;
    let pencil = cl
        .scale(C64::new(alpha, 0.0))
        .add(&cm.scale(C64::new(beta, 0.0)))?;
    let p = char_poly(&pencil)?; // det(γI − K), monic
    let sign = if (l.size() * l.degree()) % 2 == 0 {
        1.0
    } else {
        -1.0
    };
    Ok(p.scale(C64::new(sign, 0.0)))
}

/// Compares sorted real roots of `det(αL + (1−α)M)` with the eigenvalues of
/// `αA + (1−α)B` over a grid. Non-real roots at some `α` count as mismatch
/// `+∞` (the coincidence hypothesis is violated there).
pub fn verify_coincidence(
    l: &MatrixPolynomial,
    m: &MatrixPolynomial,
    a: &SymmetricMatrix,
    b: &SymmetricMatrix,
    alpha_grid: &[f64],
    tol: f64,
) -> Result<CoincidenceReport> {
    l.check_compatible(m)?;
    let dim = l.size() * l.degree();
    if a.size() != dim || b.size() != dim {
        return Err(Error::ShapeMismatch(format!(
            "symmetric pair size {} and {} for nℓ = {dim}",
            a.size(),
            b.size()
        )));
    }
    let mut max_mismatch = 0.0f64;
    for &alpha in alpha_grid {
        let comb = l.affine_combination(m, alpha)?;
        let roots = comb.det_poly()?.roots()?;
        let cls = classify_real(&roots, tol);
        if !cls.all_real {
            max_mismatch = f64::INFINITY;
            continue;
        }
        let sym = a.scale(alpha).add(&b.scale(1.0 - alpha))?;
        let eigs = eig::symmetric_eigenvalues(&sym)?;
        let mismatch = cls
            .reals
            .max_distance(&eigs)
            .unwrap_or(f64::INFINITY);
        max_mismatch = max_mismatch.max(mismatch);
    }
    Ok(CoincidenceReport {
        alpha_grid: alpha_grid.to_vec(),
        max_mismatch,
        verdict: max_mismatch <= tol,
    })
}

/// Checks that `L + tL′` stays hyperbolic over `t_grid` (Monte Carlo with a
/// shared seed). Returns `false` as soon as any grid point (or `L` itself)
/// fails.
pub fn derivative_pencil_check(
    l: &MatrixPolynomial,
    t_grid: &[f64],
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<bool> {
    if !is_hyperbolic(l, samples, seed, tol)?.hyperbolic {
        return Ok(false);
    }
    let dl = l.derivative()?;
    for &t in t_grid {
        let shifted = l.add_scaled(&dl, t)?.into_monic()?;
        if !is_hyperbolic(&shifted, samples, seed, tol)?.hyperbolic {
            return Ok(false);
        }
    }
    Ok(true)
}
