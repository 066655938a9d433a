//! Spectral zones of hyperbolic matrix polynomials and the
//! convex-combination criterion.
//!
//! The `j`-th zone is the interval swept by the `j`-th smallest section
//! root `λ_j(x)` over unit vectors `x`. Endpoints are estimated by seeded
//! sampling plus projected coordinate ascent, so the reported intervals are
//! *inner* estimates: subsets of the true zones up to refinement error.
//! Comparisons downstream use the exported tolerance.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

use crate::defaults;
use crate::error::{Error, Result};
use crate::hyperbolicity::scalar_section;
use crate::poly::MatrixPolynomial;
use crate::rng::Sampler;
use crate::spectrum::{classify_real, SpectrumReal};
use crate::C64;

/// Sampling and refinement budget for zone estimation.
#[derive(Debug, Clone)]
pub struct ZoneParams {
    pub samples: usize,
    pub refine_iters: usize,
    pub seed: u64,
    /// Real-root classification tolerance for the sections.
    pub tol: f64,
}

impl Default for ZoneParams {
    fn default() -> Self {
        Self {
            samples: defaults::ZONE_SAMPLES,
            refine_iters: defaults::ZONE_REFINE,
            seed: defaults::SEED,
            tol: defaults::ROOT_TOL,
        }
    }
}

/// The `ℓ` estimated zone intervals `[δ_j^−, δ_j^+]`, ordered.
#[derive(Debug, Clone)]
pub struct SpectralZones {
    pub intervals: Vec<(f64, f64)>,
    pub sample_count: usize,
    pub refined: bool,
    /// Tolerance to use when comparing endpoints of these estimates.
    pub tol: f64,
}

/// Outcome of the convex-combination criterion.
#[derive(Debug, Clone)]
pub struct Prop23Verdict {
    pub holds: bool,
    /// 1-based index of the first failing inequality, when any.
    pub binding_j: Option<usize>,
    /// Most negative slack `min_j (rhs_j − lhs_j)` over the inequalities.
    pub worst_slack: f64,
}

/// Sorted real roots of the section `⟨L(z)x, x⟩`; errors when any root
/// classifies non-real (a hyperbolicity violation witness).
pub fn section_roots(l: &MatrixPolynomial, x: &[C64], tol: f64) -> Result<SpectrumReal> {
    let section = scalar_section(l, x)?;
    let roots = section.roots()?;
    let cls = classify_real(&roots, tol);
    if !cls.all_real {
        return Err(Error::NonRealRoots(format!(
            "section has {} non-real roots",
            cls.offenders.len()
        )));
    }
    Ok(cls.reals)
}

fn section_root_j(l: &MatrixPolynomial, x: &[C64], j: usize, tol: f64) -> Result<f64> {
    Ok(section_roots(l, x, tol)?.values()[j])
}

/// Inner estimates of the spectral zones by sampling `samples` seeded unit
/// vectors (plus the standard basis) and refining each endpoint with
/// projected coordinate ascent on the unit sphere.
pub fn zone_estimates(l: &MatrixPolynomial, params: &ZoneParams) -> Result<SpectralZones> {
    if !l.is_monic() {
        return Err(Error::NotMonic);
    }
    let ell = l.degree();
    if ell == 0 {
        return Err(Error::ZeroPolynomial);
    }
    let n = l.size();
    let mut sampler = Sampler::new(params.seed);
    let mut lo = vec![f64::INFINITY; ell];
    let mut hi = vec![f64::NEG_INFINITY; ell];
    let mut arg_lo: Vec<Vec<C64>> = vec![Vec::new(); ell];
    let mut arg_hi: Vec<Vec<C64>> = vec![Vec::new(); ell];

    let mut vectors: Vec<Vec<C64>> = Vec::with_capacity(n + params.samples);
    for i in 0..n {
        let mut e = vec![C64::new(0.0, 0.0); n];
        e[i] = C64::new(1.0, 0.0);
        vectors.push(e);
    }
    for _ in 0..params.samples {
        vectors.push(sampler.unit_vector(n));
    }
    let sample_count = vectors.len();
    for x in vectors {
        let roots = section_roots(l, &x, params.tol)?;
        for (j, &v) in roots.values().iter().enumerate() {
            if v < lo[j] {
                lo[j] = v;
                arg_lo[j] = x.clone();
            }
            if v > hi[j] {
                hi[j] = v;
                arg_hi[j] = x.clone();
            }
        }
    }
    if params.refine_iters > 0 {
        for j in 0..ell {
            let (v, _) = refine_endpoint(l, arg_lo[j].clone(), j, -1.0, params)?;
            lo[j] = lo[j].min(v);
            let (v, _) = refine_endpoint(l, arg_hi[j].clone(), j, 1.0, params)?;
            hi[j] = hi[j].max(v);
        }
    }
    Ok(SpectralZones {
        intervals: lo.into_iter().zip(hi).collect(),
        sample_count,
        refined: params.refine_iters > 0,
        tol: params.tol.max(1e-9),
    })
}

/// Coordinate-wise perturbation of `x` (real and imaginary parts) with
/// renormalization, accepting improvements of the targeted root; step
/// halves on a sweep without progress, floored at 1e−10.
fn refine_endpoint(
    l: &MatrixPolynomial,
    mut x: Vec<C64>,
    j: usize,
    direction: f64,
    params: &ZoneParams,
) -> Result<(f64, Vec<C64>)> {
    let n = x.len();
    let mut best = section_root_j(l, &x, j, params.tol)?;
    let mut step = 0.3f64;
    for _ in 0..params.refine_iters {
        let mut improved = false;
        for coord in 0..n {
            for part in 0..2 {
                for sign in [1.0f64, -1.0] {
                    let mut cand = x.clone();
                    let delta = if part == 0 {
                        C64::new(sign * step, 0.0)
                    } else {
                        C64::new(0.0, sign * step)
                    };
                    cand[coord] += delta;
                    let norm: f64 = cand.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                    if norm <= 1e-8 {
                        continue;
                    }
                    for z in cand.iter_mut() {
                        *z /= norm;
                    }
                    // A candidate whose section misbehaves is skipped, not
                    // fatal: the accepted iterate stays on the good set.
                    let val = match section_root_j(l, &cand, j, params.tol) {
                        Ok(v) => v,
                        Err(_) => continue,
                    };
                    if direction * (val - best) > 1e-14 * (1.0 + best.abs()) {
                        best = val;
                        x = cand;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            step *= 0.5;
            if step < 1e-10 {
                break;
            }
        }
    }
    Ok((best, x))
}

/// Consecutive zone estimates may touch but not overlap beyond
/// `overlap_tol`.
pub fn zones_consistent(z: &SpectralZones, overlap_tol: f64) -> bool {
    z.intervals
        .windows(2)
        .all(|w| w[0].1 <= w[1].0 + overlap_tol)
}

/// Convex-combination criterion: all convex combinations of two hyperbolic
/// polynomials are hyperbolic iff
/// `max{δ_j^+(L), δ_j^+(M)} ≤ min{δ_{j+1}^−(L), δ_{j+1}^−(M)}` for
/// `j = 1, …, ℓ−1`. Evaluated on zone estimates with their combined
/// tolerance.
pub fn convex_combination_hyperbolic(
    l: &MatrixPolynomial,
    m: &MatrixPolynomial,
    params: &ZoneParams,
) -> Result<Prop23Verdict> {
    l.check_compatible(m)?;
    let zl = zone_estimates(l, params)?;
    let zm = zone_estimates(m, params)?;
    let tol = zl.tol.max(zm.tol);
    let ell = zl.intervals.len();
    let mut binding = None;
    let mut worst = f64::INFINITY;
    for j in 0..ell.saturating_sub(1) {
        let lhs = zl.intervals[j].1.max(zm.intervals[j].1);
        let rhs = zl.intervals[j + 1].0.min(zm.intervals[j + 1].0);
        let slack = rhs - lhs;
        if slack < worst {
            worst = slack;
        }
        if lhs > rhs + tol && binding.is_none() {
            binding = Some(j + 1);
        }
    }
    Ok(Prop23Verdict {
        holds: binding.is_none(),
        binding_j: binding,
        worst_slack: worst,
    })
}
