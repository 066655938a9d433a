//! Dense eigenvalue solvers built from scratch.
//!
//! - [`symmetric_eigen`] / [`symmetric_eigenvalues`]: Householder
//!   tridiagonalization followed by implicit QL with Wilkinson shifts.
//! - [`eigenvalues`]: complex nonsymmetric solver — balancing, Householder
//!   Hessenberg reduction, explicit single-shift QR with Givens rotations.
//! - [`hermitian_eigenvalues`]: complex Hermitian matrices through the real
//!   symmetric embedding `[[Re, −Im], [Im, Re]]` (each eigenvalue doubled).
//!
//! Iteration budget is `30·m` QR sweeps; exceeding it raises
//! [`Error::NoConvergence`] rather than returning silent garbage.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, SymmetricMatrix};
use crate::spectrum::{SpectrumComplex, SpectrumReal};
use crate::C64;

/// Sweep cap factor: at most `30·m` QR sweeps per solve.
const SWEEP_FACTOR: usize = 30;

/// Eigenvalues of a real symmetric matrix, sorted non-decreasing.
pub fn symmetric_eigenvalues(s: &SymmetricMatrix) -> Result<SpectrumReal> {
    Ok(symmetric_eigen(s)?.0)
}

/// Full symmetric eigendecomposition. Returns sorted eigenvalues and the
/// matching eigenvectors as columns (`vecs[j]` pairs with `values[j]`).
pub fn symmetric_eigen(s: &SymmetricMatrix) -> Result<(SpectrumReal, Vec<Vec<f64>>)> {
    let m = s.size();
    if m == 0 {
        return Ok((SpectrumReal::new(vec![]), vec![]));
    }
    let mut z: Vec<Vec<f64>> = (0..m)
        .map(|i| (0..m).map(|j| s.get(i, j)).collect())
        .collect();
    let mut d = vec![0.0; m];
    let mut e = vec![0.0; m];
    tred2(&mut z, &mut d, &mut e);
    tql2(&mut z, &mut d, &mut e)?;

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_unstable_by(|&a, &b| d[a].total_cmp(&d[b]));
    let values: Vec<f64> = order.iter().map(|&k| d[k]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| (0..m).map(|i| z[i][k]).collect())
        .collect();
    Ok((SpectrumReal::new(values), vectors))
}

/// Householder reduction to tridiagonal form with accumulated
/// transformations (EISPACK `tred2` lineage). On exit `z` holds the
/// orthogonal matrix, `d` the diagonal, `e` the subdiagonal in `e[1..]`.
fn tred2(z: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| z[i][k].abs()).sum();
            if scale == 0.0 {
                e[i] = z[i][l];
            } else {
                for k in 0..=l {
                    z[i][k] /= scale;
                    h += z[i][k] * z[i][k];
                }
                let f = z[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                z[i][l] = f - g;
                let mut f_acc = 0.0;
                for j in 0..=l {
                    z[j][i] = z[i][j] / h;
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += z[j][k] * z[i][k];
                    }
                    for k in (j + 1)..=l {
                        g_acc += z[k][j] * z[i][k];
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * z[i][j];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = z[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        z[j][k] -= f * e[k] + g * z[i][k];
                    }
                }
            }
        } else {
            e[i] = z[i][l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += z[i][k] * z[k][j];
                }
                for k in 0..i {
                    z[k][j] -= g * z[k][i];
                }
            }
        }
        d[i] = z[i][i];
        z[i][i] = 1.0;
        for j in 0..i {
            z[j][i] = 0.0;
            z[i][j] = 0.0;
        }
    }
}

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix,
/// accumulating rotations into `z` (EISPACK `tql2` lineage).
fn tql2(z: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    let eps = f64::EPSILON;
    let cap = SWEEP_FACTOR * n;
    let mut sweeps = 0usize;

    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > cap {
                return Err(Error::NoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                let t = (d[i] - g) * s + 2.0 * c * b;
                p = s * t;
                d[i + 1] = g + p;
                g = c * t - b;
                for row in z.iter_mut().take(n) {
                    f = row[i + 1];
                    row[i + 1] = s * row[i] + c * f;
                    row[i] = c * row[i] - s * f;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Eigenvalues of a complex Hermitian matrix via the doubled real symmetric
/// embedding. The input must be Hermitian within `tol` (relative).
pub fn hermitian_eigenvalues(h: &ComplexMatrix, tol: f64) -> Result<SpectrumReal> {
    if !h.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "hermitian_eigenvalues on {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    if !h.is_hermitian(tol) {
        return Err(Error::NumericalError(format!(
            "matrix is not Hermitian (defect {:.3e})",
            h.hermitian_defect()
        )));
    }
    let m = h.rows();
    let mut em = SymmetricMatrix::zeros(2 * m);
    for i in 0..m {
        for j in i..m {
            let z = (h[(i, j)] + h[(j, i)].conj()) * 0.5;
            em.set(i, j, z.re);
            em.set(m + i, m + j, z.re);
            // Off-diagonal blocks carry ∓Im(H); Im is antisymmetric.
            em.set(i, m + j, -z.im);
            em.set(j, m + i, z.im);
        }
    }
    let doubled = symmetric_eigenvalues(&em)?;
    // Values come in coincident pairs after sorting; take one per pair.
    let vals: Vec<f64> = doubled.values().iter().step_by(2).copied().collect();
    Ok(SpectrumReal::new(vals))
}

/// Eigenvalue multiset of a general complex square matrix: balancing,
/// Hessenberg reduction, then explicit shifted QR with a trace residual
/// checked a posteriori.
pub fn eigenvalues(a: &ComplexMatrix) -> Result<SpectrumComplex> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "eigenvalues of {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(SpectrumComplex::new(vec![]));
    }
    let trace: C64 = (0..n).map(|i| a[(i, i)]).sum();
    let scale = 1.0 + a.frobenius_norm();

    let mut h = a.clone();
    balance(&mut h);
    hessenberg(&mut h);
    let values = hessenberg_qr(h)?;

    let sum: C64 = values.iter().sum();
    if (sum - trace).norm() > 1e-6 * (n as f64) * scale {
        return Err(Error::NumericalError(format!(
            "eigenvalue sum departs from trace by {:.3e}",
            (sum - trace).norm()
        )));
    }
    Ok(SpectrumComplex::new(values))
}

/// Balanced upper Hessenberg form of `a` (similarity transform; same
/// spectrum and characteristic polynomial).
pub(crate) fn hessenberg_form(a: &ComplexMatrix) -> ComplexMatrix {
    let mut h = a.clone();
    balance(&mut h);
    hessenberg(&mut h);
    h
}

/// Parlett–Reinsch balancing by powers of two (similarity transform, so
/// eigenvalues are untouched and no back-transform is needed).
fn balance(a: &mut ComplexMatrix) {
    let n = a.rows();
    let radix = 2.0f64;
    let sq = radix * radix;
    loop {
        let mut converged = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].norm();
                    r += a[(i, j)].norm();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let mut f = 1.0;
            let mut c_var = c;
            let g = r / radix;
            while c_var < g {
                f *= radix;
                c_var *= sq;
            }
            let g = r * radix;
            while c_var > g {
                f /= radix;
                c_var /= sq;
            }
            if (c + r) / f < 0.95 * (c + r) {
                converged = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    a[(i, j)] = a[(i, j)] * inv;
                }
                for j in 0..n {
                    a[(j, i)] = a[(j, i)] * f;
                }
            }
        }
        if converged {
            break;
        }
    }
}

/// In-place Householder reduction to upper Hessenberg form.
fn hessenberg(a: &mut ComplexMatrix) {
    let n = a.rows();
    for k in 0..n.saturating_sub(2) {
        let mut norm_sq = 0.0;
        for i in (k + 1)..n {
            norm_sq += a[(i, k)].norm_sqr();
        }
        let alpha = a[(k + 1, k)];
        let tail_sq = norm_sq - alpha.norm_sqr();
        if norm_sq == 0.0 || tail_sq <= f64::EPSILON * f64::EPSILON * norm_sq {
            continue;
        }
        let norm = norm_sq.sqrt();
        // beta = -sign(alpha)·‖x‖ keeps the reflector well conditioned.
        let phase = if alpha.norm() > 0.0 {
            alpha / alpha.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        let beta = -phase * norm;
        let mut v = vec![C64::new(0.0, 0.0); n];
        v[k + 1] = alpha - beta;
        for i in (k + 2)..n {
            v[i] = a[(i, k)];
        }
        let vnorm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        let tau = 2.0 / vnorm_sq;
        // Left: A ← A − τ v (vᴴ A)
        for j in k..n {
            let mut dot = C64::new(0.0, 0.0);
            for i in (k + 1)..n {
                dot += v[i].conj() * a[(i, j)];
            }
            let dot = dot * tau;
            for i in (k + 1)..n {
                let vi = v[i];
                a[(i, j)] -= vi * dot;
            }
        }
        // Right: A ← A − (A v) τ vᴴ
        for i in 0..n {
            let mut dot = C64::new(0.0, 0.0);
            for j in (k + 1)..n {
                dot += a[(i, j)] * v[j];
            }
            let dot = dot * tau;
            for j in (k + 1)..n {
                let vj = v[j].conj();
                a[(i, j)] -= dot * vj;
            }
        }
        a[(k + 1, k)] = beta;
        for i in (k + 2)..n {
            a[(i, k)] = C64::new(0.0, 0.0);
        }
    }
}

/// Complex Givens rotation `[[c, s], [−s̄, c]]` (real `c ≥ 0`) sending
/// `(a, b)` to `(r, 0)`.
fn givens(a: C64, b: C64) -> (f64, C64) {
    let an = a.norm();
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, C64::new(0.0, 0.0));
    }
    if an == 0.0 {
        return (0.0, b.conj() / bn);
    }
    let r = an.hypot(bn);
    let c = an / r;
    let s = (a / an) * b.conj() / r;
    (c, s)
}

/// Eigenvalues of the 2×2 complex matrix `[[a, b], [c, d]]`.
fn eig2(a: C64, b: C64, c: C64, d: C64) -> (C64, C64) {
    let half_tr = (a + d) * 0.5;
    let det = a * d - b * c;
    let disc = (half_tr * half_tr - det).sqrt();
    (half_tr + disc, half_tr - disc)
}

/// Explicit single-shift QR iteration on an upper Hessenberg matrix.
fn hessenberg_qr(mut h: ComplexMatrix) -> Result<Vec<C64>> {
    let n = h.rows();
    let mut values = Vec::with_capacity(n);
    let overall = 1.0 + h.frobenius_norm();
    let eps = f64::EPSILON;
    let cap = SWEEP_FACTOR * n;
    let mut sweeps = 0usize;

    let mut hi = n; // active block is rows/cols 0..hi
    let mut its_since_deflation = 0usize;
    while hi > 0 {
        if hi == 1 {
            values.push(h[(0, 0)]);
            hi = 0;
            continue;
        }
        // Scan for a negligible subdiagonal entry from the bottom.
        let mut lo = hi - 1;
        while lo > 0 {
            let s = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            let s = if s == 0.0 { overall } else { s };
            if h[(lo, lo - 1)].norm() <= eps * s {
                h[(lo, lo - 1)] = C64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi - 1 {
            values.push(h[(hi - 1, hi - 1)]);
            hi -= 1;
            its_since_deflation = 0;
            continue;
        }
        if lo == hi - 2 {
            let (l1, l2) = eig2(
                h[(hi - 2, hi - 2)],
                h[(hi - 2, hi - 1)],
                h[(hi - 1, hi - 2)],
                h[(hi - 1, hi - 1)],
            );
            values.push(l1);
            values.push(l2);
            hi -= 2;
            its_since_deflation = 0;
            continue;
        }

        sweeps += 1;
        its_since_deflation += 1;
        if sweeps > cap {
            return Err(Error::NoConvergence);
        }

        // Wilkinson shift: eigenvalue of the trailing 2×2 closest to the
        // corner entry; occasional exceptional shift to break cycles.
        let corner = h[(hi - 1, hi - 1)];
        let mut sigma = {
            let (l1, l2) = eig2(
                h[(hi - 2, hi - 2)],
                h[(hi - 2, hi - 1)],
                h[(hi - 1, hi - 2)],
                h[(hi - 1, hi - 1)],
            );
            if (l1 - corner).norm() <= (l2 - corner).norm() {
                l1
            } else {
                l2
            }
        };
        if its_since_deflation % 10 == 0 {
            sigma = corner + C64::new(0.75, -0.4375) * h[(hi - 1, hi - 2)].norm();
        }

        // QR step on the active block: H − σI = QR, then H ← RQ + σI.
        let mut rot = Vec::with_capacity(hi - lo - 1);
        for i in lo..hi {
            h[(i, i)] -= sigma;
        }
        for i in lo..(hi - 1) {
            let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
            rot.push((c, s));
            for j in i..hi {
                let x = h[(i, j)];
                let y = h[(i + 1, j)];
                h[(i, j)] = x * c + y * s;
                h[(i + 1, j)] = -x * s.conj() + y * c;
            }
        }
        for (offset, &(c, s)) in rot.iter().enumerate() {
            let i = lo + offset;
            let hirow = (i + 2).min(hi);
            for k in lo..hirow {
                let x = h[(k, i)];
                let y = h[(k, i + 1)];
                h[(k, i)] = x * c + y * s.conj();
                h[(k, i + 1)] = -x * s + y * c;
            }
        }
        for i in lo..hi {
            h[(i, i)] += sigma;
        }
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn symmetric_small_known() {
        // [[0,1],[1,0]] -> (-1, 1)
        let mut s = SymmetricMatrix::zeros(2);
        s.set(0, 1, 1.0);
        let e = symmetric_eigenvalues(&s).unwrap();
        assert!((e.values()[0] + 1.0).abs() < 1e-12);
        assert!((e.values()[1] - 1.0).abs() < 1e-12);

        // diag(3,1,2) -> (1,2,3)
        let d = SymmetricMatrix::diag(&[3.0, 1.0, 2.0]);
        let e = symmetric_eigenvalues(&d).unwrap();
        assert_eq!(e.values(), &[1.0, 2.0, 3.0]);

        // [[2,1],[1,2]] -> (1, 3)
        let mut s = SymmetricMatrix::zeros(2);
        s.set(0, 0, 2.0);
        s.set(1, 1, 2.0);
        s.set(0, 1, 1.0);
        let e = symmetric_eigenvalues(&s).unwrap();
        assert!((e.values()[0] - 1.0).abs() < 1e-12);
        assert!((e.values()[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn symmetric_eigenvectors_have_small_residual() {
        let mut sampler = crate::rng::Sampler::new(11);
        for m in [2usize, 5, 9] {
            let s = sampler.symmetric(m);
            let norm = 1.0 + s.frobenius_norm();
            let (vals, vecs) = symmetric_eigen(&s).unwrap();
            for (lambda, v) in vals.values().iter().zip(&vecs) {
                let sv = s.matvec(v);
                let resid: f64 = sv
                    .iter()
                    .zip(v)
                    .map(|(a, b)| (a - lambda * b) * (a - lambda * b))
                    .sum::<f64>()
                    .sqrt();
                assert!(resid <= 1e-10 * norm, "residual {resid:e} for m={m}");
            }
        }
    }

    #[test]
    fn general_eigenvalues_known() {
        // Companion of (z-1)(z-2).
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![-2.0, 3.0]]).unwrap();
        let e = eigenvalues(&a).unwrap();
        let s = e.sorted();
        assert!((s[0] - c(1.0, 0.0)).norm() < 1e-10);
        assert!((s[1] - c(2.0, 0.0)).norm() < 1e-10);

        // Rotation generator: eigenvalues ±i.
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        let e = eigenvalues(&a).unwrap();
        let s = e.sorted();
        assert!((s[0] - c(0.0, -1.0)).norm() < 1e-12);
        assert!((s[1] - c(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn general_matches_similarity_transformed_diagonal() {
        // Similarity-transform a known diagonal and recover its spectrum.
        let mut sampler = crate::rng::Sampler::new(5);
        let n = 6;
        let diag: Vec<C64> = (0..n).map(|k| c(k as f64 - 2.0, 0.3 * k as f64)).collect();
        let d = ComplexMatrix::diag(&diag);
        let t = loop {
            let t = sampler.complex_matrix(n);
            if t.det().unwrap().norm() > 0.1 {
                break t;
            }
        };
        let tinv_cols: Vec<Vec<C64>> = (0..n)
            .map(|j| {
                let mut e = vec![c(0.0, 0.0); n];
                e[j] = c(1.0, 0.0);
                t.solve(&e).unwrap()
            })
            .collect();
        let mut tinv = ComplexMatrix::zeros(n, n);
        for (j, col) in tinv_cols.iter().enumerate() {
            for i in 0..n {
                tinv[(i, j)] = col[i];
            }
        }
        let a = t.matmul(&d).unwrap().matmul(&tinv).unwrap();
        let e = eigenvalues(&a).unwrap();
        let expected = SpectrumComplex::new(diag);
        let dist = e.max_distance(&expected).unwrap();
        assert!(dist < 1e-8, "distance {dist:e}");
    }

    #[test]
    fn hermitian_embedding_matches_direct() {
        let mut sampler = crate::rng::Sampler::new(9);
        for m in [2usize, 4, 6] {
            let h = sampler.hermitian(m);
            let via_embedding = hermitian_eigenvalues(&h, 1e-10).unwrap();
            let via_qr = eigenvalues(&h).unwrap();
            let qr_reals = crate::spectrum::classify_real(&via_qr, 1e-7);
            assert!(qr_reals.all_real);
            let dist = via_embedding.max_distance(&qr_reals.reals).unwrap();
            assert!(dist < 1e-8, "m={m} dist {dist:e}");
        }
    }
}
