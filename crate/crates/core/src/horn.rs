//! Horn triples and eigenvalue-sum inequalities for determinant roots.
//!
//! A triple `(U, S, T)` of equal-cardinality subsets of `{1..m}` is a Horn
//! triple (non-decreasing eigenvalue convention) when
//! `Σ_{i∈U} λ_i(X+Y) ≤ Σ_{j∈S} λ_j(X) + Σ_{k∈T} λ_k(Y)` for every Hermitian
//! pair. Generation uses the classical recursive characterization, stated
//! in the non-increasing convention and converted by index reversal; an
//! empirical Hermitian-sampling filter cross-validates it at desk scale.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::eig;
use crate::error::{Error, Result};
use crate::poly::MatrixPolynomial;
use crate::rng::Sampler;
use crate::spectrum::{classify_real, SpectrumReal};

/// Largest ambient size supported by the generator (desk scale).
pub const MAX_HORN_SIZE: usize = 5;

/// An index-set triple over `{1..m}` with equal cardinalities, strictly
/// increasing 1-based entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HornTriple {
    pub u: Vec<usize>,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub m: usize,
}

impl HornTriple {
    pub fn new(u: Vec<usize>, s: Vec<usize>, t: Vec<usize>, m: usize) -> Result<Self> {
        for set in [&u, &s, &t] {
            validate_index_set(set, m)?;
        }
        if u.len() != s.len() || s.len() != t.len() {
            return Err(Error::InvalidIndexSet(format!(
                "cardinalities {}, {}, {} differ",
                u.len(),
                s.len(),
                t.len()
            )));
        }
        Ok(Self { u, s, t, m })
    }

    pub fn cardinality(&self) -> usize {
        self.u.len()
    }
}

fn validate_index_set(set: &[usize], m: usize) -> Result<()> {
    if set.is_empty() {
        return Err(Error::InvalidIndexSet("empty index set".into()));
    }
    for w in set.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidIndexSet(format!(
                "indices not strictly increasing: {} then {}",
                w[0], w[1]
            )));
        }
    }
    if set[0] < 1 || *set.last().expect("nonempty") > m {
        return Err(Error::InvalidIndexSet(format!(
            "index out of range 1..={m}"
        )));
    }
    Ok(())
}

/// Sorted non-decreasing roots of `det L(z)` (length `nℓ`).
#[derive(Debug, Clone)]
pub struct DVector {
    pub values: SpectrumReal,
}

/// One evaluated inequality instance.
#[derive(Debug, Clone)]
pub struct Theorem24Verdict {
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
}

/// Roots of the determinant polynomial, sorted; errors when any root is
/// non-real (the polynomial is not weakly hyperbolic at tolerance).
pub fn d_vector(l: &MatrixPolynomial, tol: f64) -> Result<DVector> {
    let roots = l.det_poly()?.roots()?;
    let cls = classify_real(&roots, tol);
    if !cls.all_real {
        return Err(Error::NonRealRoots(format!(
            "determinant has {} non-real roots",
            cls.offenders.len()
        )));
    }
    Ok(DVector { values: cls.reals })
}

/// Index reversal `i ↦ m+1−i`, sorted increasing. An involution; it
/// realizes `λ_j(−A) = −λ_{m+1−j}(A)` on index sets.
pub fn bar(set: &[usize], m: usize) -> Result<Vec<usize>> {
    validate_index_set(set, m)?;
    let mut out: Vec<usize> = set.iter().map(|&i| m + 1 - i).collect();
    out.sort_unstable();
    Ok(out)
}

fn subsets(m: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << m) {
        if mask.count_ones() as usize == r {
            let set: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
            out.push(set);
        }
    }
    out
}

type Triple = (Vec<usize>, Vec<usize>, Vec<usize>);

/// Recursive characterization in the non-increasing convention: cardinality-r
/// triples `(I, J, K)` over `{1..m}` with `ΣI + ΣJ = ΣK + r(r+1)/2`, subject
/// for `r > 1` to the sub-sum conditions over lower-cardinality triples with
/// respect to `r`.
fn decreasing_triples(m: usize, cache: &mut BTreeMap<usize, Vec<Triple>>) -> Vec<Triple> {
    if let Some(v) = cache.get(&m) {
        return v.clone();
    }
    let mut acc: Vec<Triple> = Vec::new();
    for r in 1..=m {
        let inner: Vec<Triple> = if r < m {
            decreasing_triples(r, cache)
        } else {
            acc.clone()
        };
        let sets = subsets(m, r);
        let target_offset = r * (r + 1) / 2;
        for i_set in &sets {
            let si: usize = i_set.iter().sum();
            for j_set in &sets {
                let sj: usize = j_set.iter().sum();
                for k_set in &sets {
                    let sk: usize = k_set.iter().sum();
                    if si + sj != sk + target_offset {
                        continue;
                    }
                    let ok = r == 1
                        || inner.iter().filter(|(f, _, _)| f.len() < r).all(|(f, g, h)| {
                            let p = f.len();
                            let lhs: usize = f.iter().map(|&idx| i_set[idx - 1]).sum::<usize>()
                                + g.iter().map(|&idx| j_set[idx - 1]).sum::<usize>();
                            let rhs: usize = h.iter().map(|&idx| k_set[idx - 1]).sum::<usize>()
                                + p * (p + 1) / 2;
                            lhs <= rhs
                        });
                    if ok {
                        acc.push((i_set.clone(), j_set.clone(), k_set.clone()));
                    }
                }
            }
        }
    }
    cache.insert(m, acc.clone());
    acc
}

/// Every Horn triple with respect to `m` (non-decreasing convention),
/// sorted. Supported for `1 ≤ m ≤ 5`.
pub fn horn_triples(m: usize) -> Result<Vec<HornTriple>> {
    if m < 1 || m > MAX_HORN_SIZE {
        return Err(Error::UnsupportedSize(format!(
            "Horn triples supported for 1..={MAX_HORN_SIZE}, got {m}"
        )));
    }
    let mut cache = BTreeMap::new();
    let dec = decreasing_triples(m, &mut cache);
    // Convert (I, J, K) with K on the left-hand side of the decreasing
    // convention to (U, S, T) = (bar K, bar I, bar J).
    let mut out: Vec<HornTriple> = dec
        .into_iter()
        .map(|(i, j, k)| {
            HornTriple::new(bar(&k, m)?, bar(&i, m)?, bar(&j, m)?, m)
        })
        .collect::<Result<_>>()?;
    out.sort_unstable_by(|a, b| {
        (a.cardinality(), &a.u, &a.s, &a.t).cmp(&(b.cardinality(), &b.u, &b.s, &b.t))
    });
    Ok(out)
}

/// All equal-cardinality index triples over `{1..m}` (the candidate pool
/// the generator selects from).
pub fn candidate_triples(m: usize) -> Result<Vec<HornTriple>> {
    if m < 1 || m > MAX_HORN_SIZE {
        return Err(Error::UnsupportedSize(format!(
            "candidate triples supported for 1..={MAX_HORN_SIZE}, got {m}"
        )));
    }
    let mut out = Vec::new();
    for r in 1..=m {
        let sets = subsets(m, r);
        for u in &sets {
            for s in &sets {
                for t in &sets {
                    out.push(HornTriple::new(u.clone(), s.clone(), t.clone(), m)?);
                }
            }
        }
    }
    Ok(out)
}

/// Ascending spectra `(λ(X), λ(Y), λ(X+Y))` for seeded Hermitian trials.
fn trial_spectra(m: usize, trials: usize, seed: u64) -> Result<Vec<[Vec<f64>; 3]>> {
    let mut out = Vec::with_capacity(trials);
    for k in 0..trials {
        let mut sampler = Sampler::derive(seed, k as u64);
        let x = sampler.hermitian(m);
        let y = sampler.hermitian(m);
        let sum = x.add(&y)?;
        out.push([
            eig::hermitian_eigenvalues(&x, 1e-10)?.values().to_vec(),
            eig::hermitian_eigenvalues(&y, 1e-10)?.values().to_vec(),
            eig::hermitian_eigenvalues(&sum, 1e-10)?.values().to_vec(),
        ]);
    }
    Ok(out)
}

fn triple_holds_on(triple: &HornTriple, spectra: &[Vec<f64>; 3], tol: f64) -> bool {
    let lhs: f64 = triple.u.iter().map(|&i| spectra[2][i - 1]).sum();
    let rhs: f64 = triple.s.iter().map(|&j| spectra[0][j - 1]).sum::<f64>()
        + triple.t.iter().map(|&k| spectra[1][k - 1]).sum::<f64>();
    lhs <= rhs + tol * (1.0 + lhs.abs() + rhs.abs())
}

/// Necessary-condition filter: draws `trials` seeded Hermitian pairs and
/// returns `false` on any violation beyond `tol` (one-sided: `true` only
/// means no violation was sampled).
pub fn empirical_triple_filter(
    triple: &HornTriple,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<bool> {
    let spectra = trial_spectra(triple.m, trials, seed)?;
    Ok(spectra.iter().all(|s| triple_holds_on(triple, s, tol)))
}

/// Batch form of the filter sharing one set of trials across `triples`
/// (all with the same ambient `m`).
pub fn empirical_filter_batch(
    m: usize,
    triples: &[HornTriple],
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<Vec<bool>> {
    if triples.iter().any(|t| t.m != m) {
        return Err(Error::InvalidIndexSet("mixed ambient sizes in batch".into()));
    }
    let spectra = trial_spectra(m, trials, seed)?;
    Ok(triples
        .iter()
        .map(|t| spectra.iter().all(|s| triple_holds_on(t, s, tol)))
        .collect())
}

/// Evaluates `Σ_{i∈U} d_i(αL+(1−α)M) ≤ α Σ_{j∈S_α} d_j(L) + (1−α)
/// Σ_{k∈T_{1−α}} d_k(M)` where a negative coefficient reverses its index
/// set (`S_α = S̄` for `α < 0`, `T_{1−α} = T̄` for `α > 1`).
pub fn verify_theorem24(
    l: &MatrixPolynomial,
    m_poly: &MatrixPolynomial,
    alpha: f64,
    triple: &HornTriple,
    tol: f64,
) -> Result<Theorem24Verdict> {
    l.check_compatible(m_poly)?;
    let dim = l.size() * l.degree();
    if triple.m != dim {
        return Err(Error::InvalidIndexSet(format!(
            "triple ambient {} but nℓ = {dim}",
            triple.m
        )));
    }
    let d_l = d_vector(l, tol)?;
    let d_m = d_vector(m_poly, tol)?;
    let mid = l.affine_combination(m_poly, alpha)?;
    let d_mid = d_vector(&mid, tol)?;

    let s_eff = if alpha >= 0.0 {
        triple.s.clone()
    } else {
        bar(&triple.s, dim)?
    };
    let t_eff = if 1.0 - alpha >= 0.0 {
        triple.t.clone()
    } else {
        bar(&triple.t, dim)?
    };
    let lhs: f64 = triple
        .u
        .iter()
        .map(|&i| d_mid.values.values()[i - 1])
        .sum();
    let rhs = alpha
        * s_eff
            .iter()
            .map(|&j| d_l.values.values()[j - 1])
            .sum::<f64>()
        + (1.0 - alpha)
            * t_eff
                .iter()
                .map(|&k| d_m.values.values()[k - 1])
                .sum::<f64>();
    Ok(Theorem24Verdict {
        holds: lhs <= rhs + tol,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ComplexMatrix;
    use crate::C64;

    #[test]
    fn bar_examples() {
        assert_eq!(bar(&[1, 3], 4).unwrap(), vec![2, 4]);
        assert_eq!(bar(&[1, 2, 3], 3).unwrap(), vec![1, 2, 3]);
        // Involution on a few sets.
        for set in [vec![1], vec![2, 4], vec![1, 2, 5]] {
            let m = 5;
            assert_eq!(bar(&bar(&set, m).unwrap(), m).unwrap(), set);
        }
        assert!(bar(&[0, 2], 4).is_err());
        assert!(bar(&[2, 2], 4).is_err());
    }

    #[test]
    fn horn_triples_m1_and_m2() {
        let t1 = horn_triples(1).unwrap();
        assert_eq!(t1.len(), 1);
        assert_eq!(t1[0], HornTriple::new(vec![1], vec![1], vec![1], 1).unwrap());

        let t2 = horn_triples(2).unwrap();
        let expected = vec![
            HornTriple::new(vec![1], vec![1], vec![2], 2).unwrap(),
            HornTriple::new(vec![1], vec![2], vec![1], 2).unwrap(),
            HornTriple::new(vec![2], vec![2], vec![2], 2).unwrap(),
            HornTriple::new(vec![1, 2], vec![1, 2], vec![1, 2], 2).unwrap(),
        ];
        assert_eq!(t2.len(), 4);
        for e in &expected {
            assert!(t2.contains(e), "missing {e:?}");
        }
        // ({1},{1},{1}) is not a Horn triple for m = 2.
        let bad = HornTriple::new(vec![1], vec![1], vec![1], 2).unwrap();
        assert!(!t2.contains(&bad));

        // m = 3 matches the classical count: 6 + 6 + 1.
        let t3 = horn_triples(3).unwrap();
        assert_eq!(t3.len(), 13);

        assert!(horn_triples(0).is_err());
        assert!(horn_triples(6).is_err());
    }

    #[test]
    fn filter_examples() {
        // Trace triple: always equality.
        let full = HornTriple::new(vec![1, 2], vec![1, 2], vec![1, 2], 2).unwrap();
        assert!(empirical_triple_filter(&full, 300, 0, 1e-10).unwrap());

        // Max subadditivity.
        let max_t = HornTriple::new(vec![2], vec![2], vec![2], 2).unwrap();
        assert!(empirical_triple_filter(&max_t, 300, 0, 1e-10).unwrap());

        // ({1},{1},{1}) fails: λ_min is superadditive, not subadditive.
        let bad = HornTriple::new(vec![1], vec![1], vec![1], 2).unwrap();
        assert!(!empirical_triple_filter(&bad, 300, 0, 1e-10).unwrap());
    }

    #[test]
    fn d_vector_examples() {
        let cmat = ComplexMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let l = MatrixPolynomial::monic(vec![
            cmat.scale(C64::new(-1.0, 0.0)),
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::identity(2),
        ])
        .unwrap();
        let d = d_vector(&l, 1e-8).unwrap();
        let s3 = 3.0f64.sqrt();
        let expected = [-s3, -1.0, 1.0, s3];
        for (a, b) in d.values.values().iter().zip(expected) {
            assert!((a - b).abs() < 1e-9);
        }

        let h = ComplexMatrix::diag(&[C64::new(1.0, 0.0), C64::new(2.0, 0.0)]);
        let p = MatrixPolynomial::monic(vec![
            h.scale(C64::new(-1.0, 0.0)),
            ComplexMatrix::identity(2),
        ])
        .unwrap();
        let d = d_vector(&p, 1e-8).unwrap();
        assert!((d.values.values()[0] - 1.0).abs() < 1e-9);
        assert!((d.values.values()[1] - 2.0).abs() < 1e-9);

        // Non-weakly-hyperbolic input errors.
        let plus = MatrixPolynomial::monic(vec![
            ComplexMatrix::identity(2),
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::identity(2),
        ])
        .unwrap();
        assert!(matches!(d_vector(&plus, 1e-8), Err(Error::NonRealRoots(_))));
    }

    #[test]
    fn theorem24_alpha_one_reduces_to_single_polynomial() {
        let cmat = ComplexMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let l = MatrixPolynomial::monic(vec![
            cmat.scale(C64::new(-1.0, 0.0)),
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::identity(2),
        ])
        .unwrap();
        // U = S: equality at α = 1 regardless of T.
        let triple = HornTriple::new(vec![4], vec![4], vec![4], 4).unwrap();
        let v = verify_theorem24(&l, &l, 1.0, &triple, 1e-9).unwrap();
        assert!(v.holds);
        assert!((v.lhs - v.rhs).abs() < 1e-9);
    }
}
