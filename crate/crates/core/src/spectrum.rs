//! Root and eigenvalue containers plus real-root classification.

use alloc::vec::Vec;

use crate::C64;

/// Real spectrum, sorted non-decreasing with multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReal {
    values: Vec<f64>,
}

impl SpectrumReal {
    /// Sorts on construction.
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_unstable_by(f64::total_cmp);
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest elementwise distance to another sorted spectrum; `None` when
    /// lengths differ.
    pub fn max_distance(&self, other: &SpectrumReal) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        Some(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }
}

/// Multiset of complex roots or eigenvalues (no ordering guarantee).
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumComplex {
    values: Vec<C64>,
}

impl SpectrumComplex {
    pub fn new(values: Vec<C64>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values sorted by `(Re, Im)` lexicographically.
    pub fn sorted(&self) -> Vec<C64> {
        let mut v = self.values.clone();
        v.sort_unstable_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    /// Deterministic multiset distance: sort both by `(Re, Im)`, take the
    /// largest elementwise modulus of the difference. Adequate at desk scale;
    /// `None` when lengths differ.
    pub fn max_distance(&self, other: &SpectrumComplex) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        let a = self.sorted();
        let b = other.sorted();
        Some(
            a.iter()
                .zip(&b)
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max),
        )
    }
}

/// Verdict of [`classify_real`].
#[derive(Debug, Clone, PartialEq)]
pub struct RootClassification {
    /// True iff every root satisfies `|Im z| ≤ tol·(1 + |z|)`.
    pub all_real: bool,
    /// When `all_real`: sorted real parts of all roots. Otherwise the sorted
    /// real parts of the real-classified subset.
    pub reals: SpectrumReal,
    /// Roots that failed the test (empty when `all_real`).
    pub offenders: Vec<C64>,
}

/// Classifies each root as real when `|Im z| ≤ tol·(1 + |z|)`.
pub fn classify_real(roots: &SpectrumComplex, tol: f64) -> RootClassification {
    let mut reals = Vec::new();
    let mut offenders = Vec::new();
    for &z in roots.values() {
        if z.im.abs() <= tol * (1.0 + z.norm()) {
            reals.push(z.re);
        } else {
            offenders.push(z);
        }
    }
    RootClassification {
        all_real: offenders.is_empty(),
        reals: SpectrumReal::new(reals),
        offenders,
    }
}
