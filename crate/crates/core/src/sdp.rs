//! Semidefinite feasibility checks for simultaneous symmetrization.
//!
//! Two equivalent programs decide the one-signed-residue condition on a
//! monic pair `(f, h)`:
//!
//! - the minimal-realization form: find `P ≻ 0` with `ÃP = PÃᵀ` and
//!   `PC̃ᵀ = B̃` for a state-space realization of `h/f − 1`;
//! - the symmetrizer form: find `P ≻ 0` with `PC_f = C_fᵀP` and
//!   `PC_h = C_hᵀP` for the companion matrices.
//!
//! Both reduce to maximizing the smallest eigenvalue over a small linear
//! space of symmetric matrices, which is done by multi-start projected
//! supergradient ascent (the constraint spaces here have dimension at most
//! about the polynomial degree, so a bespoke engine beats hauling in a
//! conic solver). "Infeasible" always means "no certificate found at
//! tolerance", never a proof of infeasibility; feasible certificates are
//! re-verifiable from scratch.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

use crate::defaults;
use crate::eig;
use crate::error::{Error, Result};
use crate::interlacing::are_coprime;
use crate::matrix::{ComplexMatrix, SymmetricMatrix};
use crate::poly::ScalarPolynomial;
use crate::rng::Sampler;
use crate::C64;

/// Controllable-canonical state-space realization of `h(z)/f(z) = 1 +
/// c·(zI−a)⁻¹·b`. All entries are real; `a` is the companion matrix of `f`.
#[derive(Debug, Clone)]
pub struct Realization {
    pub a: ComplexMatrix,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
}

/// Tolerances and search budget for the feasibility engine.
#[derive(Debug, Clone)]
pub struct SdpTols {
    /// Required `λ_min(P)` relative to `‖P‖_F = 1`.
    pub pd_margin: f64,
    /// Allowed constraint residual relative to `‖P‖_F = 1`.
    pub eq_tol: f64,
    pub starts: usize,
    pub iters: usize,
    pub seed: u64,
}

impl Default for SdpTols {
    fn default() -> Self {
        Self {
            pd_margin: defaults::PD_MARGIN,
            eq_tol: defaults::EQ_TOL,
            starts: defaults::SDP_STARTS,
            iters: defaults::SDP_ITERS,
            seed: defaults::SEED,
        }
    }
}

/// Feasibility certificate. `p` is stored with unit Frobenius norm; for the
/// realization form the raw solution is `scale·p` (the inhomogeneous
/// constraint `PC̃ᵀ = B̃` pins the scale). `feasible` means
/// `min_eig ≥ pd_margin` and `constraint_residual ≤ eq_tol`.
///
/// `orientation` applies to the realization form: `+1` when
/// `(scale·p)·cᵀ = b` (all-positive residues), `−1` when it equals `−b`
/// (all-negative residues; `−P` solves the displayed program). Either way a
/// definite `P` certifies the one-signed condition.
#[derive(Debug, Clone)]
pub struct SymmetrizerCertificate {
    pub p: SymmetricMatrix,
    pub scale: f64,
    pub orientation: f64,
    pub min_eig: f64,
    pub constraint_residual: f64,
    pub feasible: bool,
}

/// Real square matrix plumbing for the constraint algebra.
#[derive(Debug, Clone)]
struct RMat {
    n: usize,
    a: Vec<f64>,
}

impl RMat {
    fn from_complex(m: &ComplexMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "real matrix from {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if m.max_imag() > 1e-12 * (1.0 + m.max_abs()) {
            return Err(Error::NotReal);
        }
        let n = m.rows();
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = m[(i, j)].re;
            }
        }
        Ok(Self { n, a })
    }

    fn from_sym(s: &SymmetricMatrix) -> Self {
        let n = s.size();
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = s.get(i, j);
            }
        }
        Self { n, a }
    }

    fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    /// `self·other − otherᵀ·self` (the symmetrizer defect of `self` against
    /// `other`), useful because its result is antisymmetric.
    fn symmetrizer_defect(&self, c: &RMat) -> RMat {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for k in 0..n {
                    acc += self.get(i, k) * c.get(k, j) - c.get(k, i) * self.get(k, j);
                }
                out[i * n + j] = acc;
            }
        }
        RMat { n, a: out }
    }

    fn frobenius_norm(&self) -> f64 {
        self.a.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

fn vech_pairs(m: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(m * (m + 1) / 2);
    for i in 0..m {
        for j in i..m {
            pairs.push((i, j));
        }
    }
    pairs
}

fn sym_from_vech(m: usize, v: &[f64]) -> SymmetricMatrix {
    let mut s = SymmetricMatrix::zeros(m);
    for (k, &(i, j)) in vech_pairs(m).iter().enumerate() {
        s.set(i, j, v[k]);
    }
    s
}

/// Rows of the linear operator `vech(P) ↦ strict-upper(PC − CᵀP)`.
fn symmetrizer_rows(c: &RMat) -> Vec<Vec<f64>> {
    let m = c.n;
    let pairs = vech_pairs(m);
    let dim = pairs.len();
    let row_count = m * (m - 1) / 2;
    let mut rows = vec![vec![0.0; dim]; row_count];
    for (t, &(p, q)) in pairs.iter().enumerate() {
        let mut basis = SymmetricMatrix::zeros(m);
        basis.set(p, q, 1.0);
        let defect = RMat::from_sym(&basis).symmetrizer_defect(c);
        let mut r = 0;
        for i in 0..m {
            for j in (i + 1)..m {
                rows[r][t] = defect.get(i, j);
                r += 1;
            }
        }
    }
    rows
}

/// Rows of `vech(P) ↦ P·cᵀ` for a row vector `c`.
fn product_rows(m: usize, c: &[f64]) -> Vec<Vec<f64>> {
    let pairs = vech_pairs(m);
    let mut rows = vec![vec![0.0; pairs.len()]; m];
    for (t, &(p, q)) in pairs.iter().enumerate() {
        // (E_{pq} cᵀ)_i
        for (i, row) in rows.iter_mut().enumerate() {
            let mut val = 0.0;
            if i == p {
                val += c[q];
            }
            if i == q && p != q {
                val += c[p];
            }
            row[t] = val;
        }
    }
    rows
}

/// Least-squares solve of the stacked constraint system together with a
/// nullspace basis, via the eigendecomposition of the Gram matrix. Returns
/// `(particular solution, nullspace basis, absolute residual)`.
fn gram_solve(rows: &[Vec<f64>], b: &[f64], dim: usize) -> Result<(Vec<f64>, Vec<Vec<f64>>, f64)> {
    let mut gram = SymmetricMatrix::zeros(dim);
    for s in 0..dim {
        for t in s..dim {
            let mut acc = 0.0;
            for row in rows {
                acc += row[s] * row[t];
            }
            gram.set(s, t, acc);
        }
    }
    let mut rhs = vec![0.0; dim];
    for (row, &bi) in rows.iter().zip(b) {
        for t in 0..dim {
            rhs[t] += row[t] * bi;
        }
    }
    let (vals, vecs) = eig::symmetric_eigen(&gram)?;
    let max_val = vals.values().last().copied().unwrap_or(0.0).max(0.0);
    let cutoff = max_val * 1e-12;
    let mut x = vec![0.0; dim];
    let mut nullspace = Vec::new();
    for (val, vecv) in vals.values().iter().zip(&vecs) {
        if *val <= cutoff {
            nullspace.push(vecv.clone());
        } else {
            let coef: f64 = vecv.iter().zip(&rhs).map(|(a, b)| a * b).sum::<f64>() / val;
            for t in 0..dim {
                x[t] += coef * vecv[t];
            }
        }
    }
    let mut resid_sq = 0.0;
    for (row, &bi) in rows.iter().zip(b) {
        let ax: f64 = row.iter().zip(&x).map(|(a, b)| a * b).sum();
        resid_sq += (ax - bi) * (ax - bi);
    }
    Ok((x, nullspace, resid_sq.sqrt()))
}

fn min_eig_and_vector(x: &SymmetricMatrix) -> Result<(f64, Vec<f64>)> {
    let (vals, vecs) = eig::symmetric_eigen(x)?;
    Ok((vals.values()[0], vecs[0].clone()))
}

fn assemble(base: Option<&SymmetricMatrix>, basis: &[SymmetricMatrix], t: &[f64]) -> SymmetricMatrix {
    let m = basis
        .first()
        .map(SymmetricMatrix::size)
        .or_else(|| base.map(SymmetricMatrix::size))
        .unwrap_or(0);
    let mut x = base.cloned().unwrap_or_else(|| SymmetricMatrix::zeros(m));
    for (tk, ek) in t.iter().zip(basis) {
        x = x.add(&ek.scale(*tk)).expect("same size");
    }
    x
}

/// Supergradient ascent on `t ↦ λ_min(base + Σ t_k E_k)`, optionally
/// projected to the unit sphere (`spherical`). The objective is concave in
/// the matrix, so backtracking line search with multi-start is reliable at
/// the dimensions this crate meets.
fn ascend(
    base: Option<&SymmetricMatrix>,
    basis: &[SymmetricMatrix],
    t0: &[f64],
    spherical: bool,
    iters: usize,
) -> Result<(Vec<f64>, f64)> {
    let normalize = |t: &mut Vec<f64>| {
        if spherical {
            let norm = t.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.0 {
                for x in t.iter_mut() {
                    *x /= norm;
                }
            }
        }
    };
    let mut t = t0.to_vec();
    normalize(&mut t);
    let (mut best, mut v) = min_eig_and_vector(&assemble(base, basis, &t))?;
    let mut step = 0.5;
    for _ in 0..iters {
        let grad: Vec<f64> = basis
            .iter()
            .map(|ek| {
                let ev = ek.matvec(&v);
                v.iter().zip(&ev).map(|(a, b)| a * b).sum::<f64>()
            })
            .collect();
        let gnorm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        if gnorm < 1e-15 {
            break;
        }
        let mut accepted = false;
        let mut trial_step = step;
        while trial_step > 1e-12 {
            let mut cand: Vec<f64> = t
                .iter()
                .zip(&grad)
                .map(|(tk, gk)| tk + trial_step * gk / gnorm)
                .collect();
            normalize(&mut cand);
            let (val, cv) = min_eig_and_vector(&assemble(base, basis, &cand))?;
            if val > best + 1e-15 * (1.0 + best.abs()) {
                t = cand;
                best = val;
                v = cv;
                accepted = true;
                step = (trial_step * 2.0).min(1.0);
                break;
            }
            trial_step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    Ok((t, best))
}

/// Approximately maximizes `λ_min(Σ t_k E_k)` over `‖Σ t_k E_k‖_F = 1`.
/// The basis elements must be linearly independent symmetric matrices of one
/// size. An empty basis yields the `−∞` sentinel.
pub fn subspace_max_min_eig(
    basis: &[SymmetricMatrix],
    tols: &SdpTols,
) -> Result<(SymmetricMatrix, f64)> {
    if basis.is_empty() {
        return Ok((SymmetricMatrix::zeros(0), f64::NEG_INFINITY));
    }
    let m = basis[0].size();
    if basis.iter().any(|e| e.size() != m) {
        return Err(Error::ShapeMismatch("mixed sizes in subspace basis".into()));
    }
    // Orthonormalize in the Frobenius inner product so that ‖t‖₂ = 1 is
    // exactly the unit sphere of the subspace.
    let mut ortho: Vec<SymmetricMatrix> = Vec::with_capacity(basis.len());
    for e in basis {
        let mut w = e.clone();
        for q in &ortho {
            let proj = w.dot(q);
            w = w.add(&q.scale(-proj))?;
        }
        let norm = w.frobenius_norm();
        if norm > 1e-10 {
            ortho.push(w.scale(1.0 / norm));
        }
    }
    if ortho.is_empty() {
        return Ok((SymmetricMatrix::zeros(0), f64::NEG_INFINITY));
    }
    let k = ortho.len();
    let mut starts: Vec<Vec<f64>> = Vec::new();
    // Projection of the identity onto the subspace is the natural first
    // guess for a definite element.
    let id_proj: Vec<f64> = ortho
        .iter()
        .map(|e| e.dot(&SymmetricMatrix::identity(m)))
        .collect();
    if id_proj.iter().map(|x| x * x).sum::<f64>() > 1e-20 {
        starts.push(id_proj.clone());
        starts.push(id_proj.iter().map(|x| -x).collect());
    }
    let mut e0 = vec![0.0; k];
    e0[0] = 1.0;
    starts.push(e0.clone());
    starts.push(e0.iter().map(|x| -x).collect());
    let mut sampler = Sampler::derive(tols.seed, 0x5d9);
    for _ in 0..tols.starts {
        starts.push((0..k).map(|_| sampler.normal()).collect());
    }
    let mut best: Option<(Vec<f64>, f64)> = None;
    for s in starts {
        let (t, val) = ascend(None, &ortho, &s, true, tols.iters)?;
        if best.as_ref().map_or(true, |(_, bv)| val > *bv) {
            best = Some((t, val));
        }
    }
    let (t, _) = best.expect("at least one start");
    let mut p = assemble(None, &ortho, &t);
    let norm = p.frobenius_norm();
    if norm > 0.0 {
        p = p.scale(1.0 / norm);
    }
    let min_eig = eig::symmetric_eigenvalues(&p)?.values()[0];
    Ok((p, min_eig))
}

/// Controllable canonical minimal realization of `h/f − 1` (degree-`ℓ`
/// monic real coprime pair): `a = companion(f)`, `b = e_ℓ`, `c` the
/// coefficient row of `h − f`. The transfer identity is re-verified at `2ℓ`
/// off-spectrum points before returning.
pub fn minimal_realization(
    f: &ScalarPolynomial,
    h: &ScalarPolynomial,
    _tol: f64,
) -> Result<Realization> {
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
    if !f.is_real(1e-10) || !h.is_real(1e-10) {
        return Err(Error::NotReal);
    }
    if !are_coprime(f, h, defaults::COPRIME_TOL) {
        return Err(Error::NotCoprime);
    }
    let ell = f.degree();
    let a = f.companion()?;
    let mut b = vec![0.0; ell];
    b[ell - 1] = 1.0;
    let numer = h.sub(f);
    let c: Vec<f64> = (0..ell).map(|k| numer.coeff(k).re).collect();

    // Verify 1 + c·(zI−a)⁻¹·b against h/f at 2ℓ points off the spectrum.
    let radius = 2.0 * (1.0 + a.max_row_sum_norm());
    let id = ComplexMatrix::identity(ell);
    let bc: Vec<C64> = b.iter().map(|&x| C64::new(x, 0.0)).collect();
    for k in 0..(2 * ell) {
        let theta = core::f64::consts::TAU * (k as f64 + 0.29) / (2 * ell) as f64;
        let z = C64::new(radius * theta.cos(), radius * theta.sin());
        let shifted = id.scale(z).sub(&a)?;
        let w = shifted.solve(&bc)?;
        let mut val = C64::new(1.0, 0.0);
        for (ck, wk) in c.iter().zip(&w) {
            val += C64::new(*ck, 0.0) * wk;
        }
        let target = h.eval(z) / f.eval(z);
        if (val - target).norm() > 1e-8 * (1.0 + target.norm()) {
            return Err(Error::NumericalError(format!(
                "realization transfer residual {:.3e}",
                (val - target).norm()
            )));
        }
    }
    Ok(Realization { a, b, c })
}

/// Feasibility of the realization-form program: symmetric `P ≻ 0` with
/// `aP = Paᵀ` and `Pcᵀ = b`.
pub fn feasibility_realization(r: &Realization, tols: &SdpTols) -> Result<SymmetrizerCertificate> {
    let a = RMat::from_complex(&r.a)?;
    let ell = a.n;
    if r.b.len() != ell || r.c.len() != ell {
        return Err(Error::ShapeMismatch(format!(
            "realization vectors of length {} and {} for state dimension {ell}",
            r.b.len(),
            r.c.len()
        )));
    }
    let dim = ell * (ell + 1) / 2;
    let mut rows = symmetrizer_rows(&a);
    let mut rhs = vec![0.0; rows.len()];
    rows.extend(product_rows(ell, &r.c));
    rhs.extend_from_slice(&r.b);

    let (x0, nullspace, ls_residual) = gram_solve(&rows, &rhs, dim)?;
    let b_norm = r.b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if ls_residual > tols.eq_tol.max(1e-9) * (1.0 + b_norm) {
        // The linear system itself is inconsistent: no symmetric solution.
        let p_raw = sym_from_vech(ell, &x0);
        return Ok(infeasible_certificate(p_raw, ls_residual));
    }
    let p0 = sym_from_vech(ell, &x0);
    let basis: Vec<SymmetricMatrix> = nullspace
        .iter()
        .map(|v| sym_from_vech(ell, v))
        .collect();
    // The displayed program certifies the all-positive orientation of the
    // residues; the all-negative one is the same system with −b, solved by
    // −P. Search both signs and keep the better definite candidate.
    let mut best: Option<(SymmetricMatrix, f64, f64)> = None;
    for orientation in [1.0f64, -1.0] {
        let base = p0.scale(orientation);
        let p_raw = if basis.is_empty() {
            base
        } else {
            let mut inner: Option<(Vec<f64>, f64)> = None;
            let mut starts: Vec<Vec<f64>> = vec![vec![0.0; basis.len()]];
            let mut sampler = Sampler::derive(tols.seed, 0xae31);
            for _ in 0..tols.starts {
                starts.push((0..basis.len()).map(|_| sampler.normal()).collect());
            }
            for s in starts {
                let (t, val) = ascend(Some(&base), &basis, &s, false, tols.iters)?;
                if inner.as_ref().map_or(true, |(_, bv)| val > *bv) {
                    inner = Some((t, val));
                }
            }
            let (t, _) = inner.expect("at least one start");
            assemble(Some(&base), &basis, &t)
        };
        let scale = p_raw.frobenius_norm();
        let ratio = if scale > 1e-12 {
            eig::symmetric_eigenvalues(&p_raw.scale(1.0 / scale))?.values()[0]
        } else {
            f64::NEG_INFINITY
        };
        if best.as_ref().map_or(true, |(_, _, bv)| ratio > *bv) {
            best = Some((p_raw, orientation, ratio));
        }
    }
    let (p_raw, orientation, _) = best.expect("two orientations tried");
    let scale = p_raw.frobenius_norm();
    if scale <= 1e-12 {
        return Ok(infeasible_certificate(p_raw, if b_norm > 0.0 { b_norm } else { 0.0 }));
    }
    let p = p_raw.scale(1.0 / scale);
    let min_eig = eig::symmetric_eigenvalues(&p)?.values()[0];
    let residual = realization_residual(&p_raw, &a, &r.c, &r.b, orientation) / scale;
    let feasible = min_eig >= tols.pd_margin && residual <= tols.eq_tol;
    Ok(SymmetrizerCertificate {
        p,
        scale,
        orientation,
        min_eig,
        constraint_residual: residual,
        feasible,
    })
}

fn infeasible_certificate(p_raw: SymmetricMatrix, residual: f64) -> SymmetrizerCertificate {
    let scale = p_raw.frobenius_norm();
    let (p, min_eig) = if scale > 1e-12 {
        let p = p_raw.scale(1.0 / scale);
        let me = eig::symmetric_eigenvalues(&p)
            .map(|e| e.values()[0])
            .unwrap_or(f64::NEG_INFINITY);
        (p, me)
    } else {
        (p_raw, f64::NEG_INFINITY)
    };
    SymmetrizerCertificate {
        p,
        scale,
        orientation: 1.0,
        min_eig,
        constraint_residual: residual,
        feasible: false,
    }
}

fn realization_residual(p: &SymmetricMatrix, a: &RMat, c: &[f64], b: &[f64], orientation: f64) -> f64 {
    let ap = RMat::from_sym(p).symmetrizer_defect(a).frobenius_norm();
    let pc = p.matvec(c);
    let pc_res = pc
        .iter()
        .zip(b)
        .map(|(x, y)| (x - orientation * y) * (x - orientation * y))
        .sum::<f64>()
        .sqrt();
    ap.max(pc_res)
}

/// Feasibility of the symmetrizer-form program: symmetric `P ≻ 0` with
/// `PC_f = C_fᵀP` and `PC_h = C_hᵀP`. `cf`, `ch` must be real-valued square
/// matrices of one size.
pub fn feasibility_symmetrizer(
    cf: &ComplexMatrix,
    ch: &ComplexMatrix,
    tols: &SdpTols,
) -> Result<SymmetrizerCertificate> {
    let f = RMat::from_complex(cf)?;
    let h = RMat::from_complex(ch)?;
    if f.n != h.n {
        return Err(Error::ShapeMismatch(format!("sizes {} vs {}", f.n, h.n)));
    }
    let m = f.n;
    let dim = m * (m + 1) / 2;
    let mut rows = symmetrizer_rows(&f);
    rows.extend(symmetrizer_rows(&h));
    let rhs = vec![0.0; rows.len()];
    let (_, nullspace, _) = gram_solve(&rows, &rhs, dim)?;
    if nullspace.is_empty() {
        return Ok(SymmetrizerCertificate {
            p: SymmetricMatrix::zeros(m),
            scale: 0.0,
            orientation: 1.0,
            min_eig: f64::NEG_INFINITY,
            constraint_residual: 0.0,
            feasible: false,
        });
    }
    let basis: Vec<SymmetricMatrix> = nullspace.iter().map(|v| sym_from_vech(m, v)).collect();
    let (p, min_eig) = subspace_max_min_eig(&basis, tols)?;
    let residual = RMat::from_sym(&p)
        .symmetrizer_defect(&f)
        .frobenius_norm()
        .max(RMat::from_sym(&p).symmetrizer_defect(&h).frobenius_norm());
    let feasible = min_eig >= tols.pd_margin && residual <= tols.eq_tol;
    Ok(SymmetrizerCertificate {
        p,
        scale: 1.0,
        orientation: 1.0,
        min_eig,
        constraint_residual: residual,
        feasible,
    })
}

impl SymmetrizerCertificate {
    /// Re-verifies a symmetrizer-form certificate from scratch: symmetry is
    /// structural, `λ_min` is recomputed, and both constraint residuals are
    /// re-evaluated on the stored `P`.
    pub fn verify_symmetrizer(
        &self,
        cf: &ComplexMatrix,
        ch: &ComplexMatrix,
        tols: &SdpTols,
    ) -> Result<bool> {
        if !self.feasible {
            return Ok(false);
        }
        let f = RMat::from_complex(cf)?;
        let h = RMat::from_complex(ch)?;
        let min_eig = eig::symmetric_eigenvalues(&self.p)?.values()[0];
        let residual = RMat::from_sym(&self.p)
            .symmetrizer_defect(&f)
            .frobenius_norm()
            .max(RMat::from_sym(&self.p).symmetrizer_defect(&h).frobenius_norm());
        Ok(min_eig >= tols.pd_margin && residual <= tols.eq_tol)
    }

    /// Re-verifies a realization-form certificate from scratch on the raw
    /// solution `scale·p`.
    pub fn verify_realization(&self, r: &Realization, tols: &SdpTols) -> Result<bool> {
        if !self.feasible || self.scale <= 0.0 {
            return Ok(false);
        }
        let a = RMat::from_complex(&r.a)?;
        let min_eig = eig::symmetric_eigenvalues(&self.p)?.values()[0];
        let raw = self.p.scale(self.scale);
        let residual = realization_residual(&raw, &a, &r.c, &r.b, self.orientation) / self.scale;
        Ok(min_eig >= tols.pd_margin && residual <= tols.eq_tol)
    }
}

/// Symmetric square root `P^{1/2}` from the eigendecomposition; requires
/// `P ≻ 0`.
pub fn symmetric_sqrt(p: &SymmetricMatrix) -> Result<SymmetricMatrix> {
    let m = p.size();
    let (vals, vecs) = eig::symmetric_eigen(p)?;
    if vals.values().first().copied().unwrap_or(0.0) <= 0.0 {
        return Err(Error::NumericalError(format!(
            "square root of non-PD matrix (λ_min = {:.3e})",
            vals.values().first().copied().unwrap_or(0.0)
        )));
    }
    let mut out = SymmetricMatrix::zeros(m);
    for i in 0..m {
        for j in i..m {
            let mut acc = 0.0;
            for (val, v) in vals.values().iter().zip(&vecs) {
                acc += val.sqrt() * v[i] * v[j];
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

/// Frobenius asymmetry of `D C D⁻¹` with `D = P^{1/2}`: near zero exactly
/// when the certificate congruence symmetrizes `C`.
pub fn congruence_defect(p: &SymmetricMatrix, c: &ComplexMatrix) -> Result<f64> {
    let m = p.size();
    let (vals, vecs) = eig::symmetric_eigen(p)?;
    if vals.values().first().copied().unwrap_or(0.0) <= 0.0 {
        return Err(Error::NumericalError("congruence with non-PD P".into()));
    }
    let mut d = ComplexMatrix::zeros(m, m);
    let mut dinv = ComplexMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            let mut acc = 0.0;
            let mut acc_inv = 0.0;
            for (val, v) in vals.values().iter().zip(&vecs) {
                acc += val.sqrt() * v[i] * v[j];
                acc_inv += v[i] * v[j] / val.sqrt();
            }
            d[(i, j)] = C64::new(acc, 0.0);
            dinv[(i, j)] = C64::new(acc_inv, 0.0);
        }
    }
    let x = d.matmul(c)?.matmul(&dinv)?;
    Ok(x.sub(&x.conj_transpose())?.frobenius_norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2m1() -> ScalarPolynomial {
        ScalarPolynomial::from_real(&[-1.0, 0.0, 1.0])
    }

    fn golden() -> ScalarPolynomial {
        ScalarPolynomial::from_real(&[-1.0, -1.0, 1.0])
    }

    #[test]
    fn realization_examples() {
        let r = minimal_realization(&z2m1(), &golden(), 1e-8).unwrap();
        // Ã = [[0,1],[1,0]], B̃ = (0,1), C̃ = (0,−1) since h − f = −z.
        assert!((r.a[(0, 1)] - C64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((r.a[(1, 0)] - C64::new(1.0, 0.0)).norm() < 1e-14);
        assert_eq!(r.b, vec![0.0, 1.0]);
        assert!((r.c[0]).abs() < 1e-14);
        assert!((r.c[1] + 1.0).abs() < 1e-14);

        // h = f + f′: numerator 2z.
        let h = ScalarPolynomial::from_real(&[-1.0, 2.0, 1.0]);
        let r = minimal_realization(&z2m1(), &h, 1e-8).unwrap();
        assert!((r.c[1] - 2.0).abs() < 1e-14);

        // Degree 1: f = z − a, h = z − b gives Ã = (a), B̃ = (1), C̃ = (a−b).
        let f = ScalarPolynomial::from_real(&[-0.5, 1.0]);
        let h = ScalarPolynomial::from_real(&[-2.0, 1.0]);
        let r = minimal_realization(&f, &h, 1e-8).unwrap();
        assert!((r.a[(0, 0)] - C64::new(0.5, 0.0)).norm() < 1e-14);
        assert_eq!(r.b, vec![1.0]);
        assert!((r.c[0] - (-2.0 + 0.5)).abs() < 1e-14);

        // Non-coprime pair is rejected.
        let f = ScalarPolynomial::from_roots(&[C64::new(1.0, 0.0), C64::new(2.0, 0.0)]);
        let h = ScalarPolynomial::from_roots(&[C64::new(1.0, 0.0), C64::new(3.0, 0.0)]);
        assert!(matches!(
            minimal_realization(&f, &h, 1e-8),
            Err(Error::NotCoprime)
        ));
    }

    #[test]
    fn subspace_engine_examples() {
        let tols = SdpTols::default();
        // {I/√2} for m = 2.
        let m = 2;
        let id = SymmetricMatrix::identity(m).scale(1.0 / 2.0f64.sqrt());
        let (p, me) = subspace_max_min_eig(&[id], &tols).unwrap();
        assert!((me - 1.0 / 2.0f64.sqrt()).abs() < 1e-9);
        assert!((p.get(0, 0) - 1.0 / 2.0f64.sqrt()).abs() < 1e-9);

        // {diag(1,−1)/√2}: best is −1/√2 (infeasible ray).
        let ind = SymmetricMatrix::diag(&[1.0, -1.0]).scale(1.0 / 2.0f64.sqrt());
        let (_, me) = subspace_max_min_eig(&[ind], &tols).unwrap();
        assert!((me + 1.0 / 2.0f64.sqrt()).abs() < 1e-9);

        // {diag(1,0), diag(0,1)}: optimum 1/√2 at the identity direction.
        let e1 = SymmetricMatrix::diag(&[1.0, 0.0]);
        let e2 = SymmetricMatrix::diag(&[0.0, 1.0]);
        let (_, me) = subspace_max_min_eig(&[e1, e2], &tols).unwrap();
        assert!((me - 1.0 / 2.0f64.sqrt()).abs() < 1e-6, "me = {me}");

        // Empty basis sentinel.
        let (_, me) = subspace_max_min_eig(&[], &tols).unwrap();
        assert_eq!(me, f64::NEG_INFINITY);
    }

    #[test]
    fn symmetrizer_examples() {
        let tols = SdpTols::default();
        // Both already symmetric: identity works.
        let cf = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let ch = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let cert = feasibility_symmetrizer(&cf, &ch, &tols).unwrap();
        assert!(cert.feasible, "min_eig {} residual {}", cert.min_eig, cert.constraint_residual);
        assert!(cert.verify_symmetrizer(&cf, &ch, &tols).unwrap());

        // Constraints force P₁₁ = 0: no PD solution.
        let ch = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let cert = feasibility_symmetrizer(&cf, &ch, &tols).unwrap();
        assert!(!cert.feasible);

        // Single matrix (C_f = C_h) with distinct real eigenvalues: feasible.
        let cert = feasibility_symmetrizer(&cf, &cf, &tols).unwrap();
        assert!(cert.feasible);
    }

    #[test]
    fn realization_feasibility_matches_sign_condition() {
        let tols = SdpTols::default();
        // Interlacing pair: feasible.
        let r = minimal_realization(&z2m1(), &golden(), 1e-8).unwrap();
        let cert = feasibility_realization(&r, &tols).unwrap();
        assert!(cert.feasible, "min_eig {} residual {}", cert.min_eig, cert.constraint_residual);
        assert!(cert.verify_realization(&r, &tols).unwrap());

        // Mixed-sign pair (f = z²−1, h = z²): infeasible.
        let h = ScalarPolynomial::from_real(&[0.0, 0.0, 1.0]);
        let r = minimal_realization(&z2m1(), &h, 1e-8).unwrap();
        let cert = feasibility_realization(&r, &tols).unwrap();
        assert!(!cert.feasible);

        // Degree 1 with agreeing signs: feasible scalar P.
        let f = ScalarPolynomial::from_real(&[0.0, 1.0]);
        let h = ScalarPolynomial::from_real(&[-1.0, 1.0]);
        let r = minimal_realization(&f, &h, 1e-8).unwrap();
        let cert = feasibility_realization(&r, &tols).unwrap();
        assert!(cert.feasible);
    }

    #[test]
    fn congruence_symmetrizes_on_feasible_pair() {
        let tols = SdpTols::default();
        let cf = z2m1().companion().unwrap();
        let ch = golden().companion().unwrap();
        let cert = feasibility_symmetrizer(&cf, &ch, &tols).unwrap();
        assert!(cert.feasible);
        assert!(congruence_defect(&cert.p, &cf).unwrap() < 1e-6);
        assert!(congruence_defect(&cert.p, &ch).unwrap() < 1e-6);
    }
}
