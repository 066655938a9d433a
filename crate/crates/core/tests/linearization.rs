//! Properties of the companion linearization, determinant polynomials and
//! eigensolvers.

mod common;

use common::*;
use hyperpoly_core::eig;
use hyperpoly_core::hyperbolicity::direction_poly;
use hyperpoly_core::matrix::ComplexMatrix;
use hyperpoly_core::poly::{char_poly, ScalarPolynomial};
use hyperpoly_core::rng::Sampler;
use hyperpoly_core::spectrum::classify_real;
use hyperpoly_core::C64;
use proptest::prelude::*;

#[test]
fn companion_spectrum_matches_det_roots() {
    let mut sampler = Sampler::new(101);
    for trial in 0..30 {
        let n = 1 + trial % 3;
        let ell = 1 + (trial / 3) % 3;
        let l = random_monic(&mut sampler, n, ell);
        let from_companion = eig::eigenvalues(&l.companion().unwrap()).unwrap();
        let from_det = l.det_poly().unwrap().roots().unwrap();
        let dist = from_companion.max_distance(&from_det).unwrap();
        assert!(dist < 1e-6, "n={n} ℓ={ell} distance {dist:e}");
    }
}

#[test]
fn affine_combination_linearizes_exactly() {
    let mut sampler = Sampler::new(33);
    for trial in 0..20 {
        let n = 1 + trial % 3;
        let ell = 1 + trial % 3;
        let l = random_monic(&mut sampler, n, ell);
        let m = random_monic(&mut sampler, n, ell);
        let alpha = sampler.uniform_in(-2.0, 2.0);
        let lhs = l.affine_combination(&m, alpha).unwrap().companion().unwrap();
        let rhs = l
            .companion()
            .unwrap()
            .scale(C64::new(alpha, 0.0))
            .add(&m.companion().unwrap().scale(C64::new(1.0 - alpha, 0.0)))
            .unwrap();
        assert_eq!(lhs.sub(&rhs).unwrap().max_abs(), 0.0, "exact entrywise");
    }
}

#[test]
fn det_poly_degree_and_monicity() {
    let mut sampler = Sampler::new(7);
    for trial in 0..20 {
        let n = 1 + trial % 3;
        let ell = 1 + (trial / 2) % 3;
        let l = random_monic(&mut sampler, n, ell);
        let raw = l.det_poly_raw().unwrap();
        assert_eq!(raw.degree(), n * ell);
        let lead = raw.leading();
        assert!(
            (lead - C64::new(1.0, 0.0)).norm() <= 1e-10,
            "leading {lead} for n={n} ℓ={ell}"
        );
    }
}

#[test]
fn det_poly_matches_leverrier_oracle() {
    let mut sampler = Sampler::new(19);
    for trial in 0..12 {
        let n = 1 + trial % 3;
        let ell = 1 + trial % 2;
        let l = random_monic(&mut sampler, n, ell);
        let d = l.det_poly().unwrap();
        let oracle = charpoly_leverrier(&l.companion().unwrap());
        assert!(
            d.rel_distance(&oracle) < 1e-8,
            "n={n} ℓ={ell}: {:e}",
            d.rel_distance(&oracle)
        );
    }
}

#[test]
fn sym_eigs_trace_and_shift_consistency() {
    let mut sampler = Sampler::new(3);
    for m in [2usize, 4, 7, 10] {
        let s = sampler.symmetric(m);
        let norm = 1.0 + s.frobenius_norm();
        let e = eig::symmetric_eigenvalues(&s).unwrap();
        let sum: f64 = e.values().iter().sum();
        assert!((sum - s.trace()).abs() <= 1e-10 * norm);

        let c_shift = 1.75;
        let shifted = s.add(&hyperpoly_core::SymmetricMatrix::identity(m).scale(c_shift)).unwrap();
        let es = eig::symmetric_eigenvalues(&shifted).unwrap();
        for (a, b) in e.values().iter().zip(es.values()) {
            assert!((a + c_shift - b).abs() <= 1e-10 * norm);
        }
    }
}

#[test]
fn symmetric_eigenvalues_match_charpoly_roots() {
    let mut sampler = Sampler::new(23);
    for m in [3usize, 6, 9, 12] {
        let s = sampler.symmetric(m);
        let direct = eig::symmetric_eigenvalues(&s).unwrap();
        let p = char_poly(&s.to_complex()).unwrap();
        let roots = p.roots().unwrap();
        let cls = classify_real(&roots, 1e-6);
        assert!(cls.all_real, "char poly roots of symmetric must be real");
        let dist = direct.max_distance(&cls.reals).unwrap();
        assert!(dist < 1e-8, "m={m} dist {dist:e}");
    }
}

#[test]
fn degeneration_identity_and_sign() {
    // direction_poly(L, M, α, −α) = (−1)^{nℓ}·γ^{n(ℓ−1)}·det(αΔ + γI_n)
    // with Δ = L_{ℓ−1} − M_{ℓ−1}; the global sign is forced by the block
    // triangular structure of α(C_L − C_M) − γI.
    let mut sampler = Sampler::new(57);
    for trial in 0..25 {
        let n = 1 + trial % 3;
        let ell = 1 + (trial / 5) % 3;
        let l = random_monic(&mut sampler, n, ell);
        let m = random_monic(&mut sampler, n, ell);
        let alpha = sampler.uniform_in(-2.0, 2.0);
        let p = direction_poly(&l, &m, alpha, -alpha).unwrap();

        let delta = l
            .coefficient(ell - 1)
            .sub(m.coefficient(ell - 1))
            .unwrap()
            .scale(C64::new(alpha, 0.0));
        // det(αΔ + γI) = char_poly(−αΔ) as a polynomial in γ.
        let q = char_poly(&delta.scale(C64::new(-1.0, 0.0))).unwrap();
        let mut shifted = vec![C64::new(0.0, 0.0); n * (ell - 1)];
        shifted.extend_from_slice(q.coeffs());
        let rhs = ScalarPolynomial::new(shifted);
        let sign = if (n * ell) % 2 == 0 { 1.0 } else { -1.0 };
        let rhs_signed = rhs.scale(C64::new(sign, 0.0));
        assert!(
            p.rel_distance(&rhs_signed) < 1e-8,
            "n={n} ℓ={ell} α={alpha}: {:e}",
            p.rel_distance(&rhs_signed)
        );
    }
}

#[test]
fn direction_poly_homogeneity() {
    // direction_poly(L, M, sα, sβ)(sγ) = s^{nℓ}·direction_poly(L, M, α, β)(γ).
    let mut sampler = Sampler::new(91);
    for trial in 0..10 {
        let n = 1 + trial % 2;
        let ell = 1 + trial % 3;
        let l = random_monic(&mut sampler, n, ell);
        let m = random_monic(&mut sampler, n, ell);
        let (alpha, beta) = (sampler.uniform_in(-1.5, 1.5), sampler.uniform_in(-1.5, 1.5));
        let base = direction_poly(&l, &m, alpha, beta).unwrap();
        for s in [2.0f64, -1.0] {
            let scaled = direction_poly(&l, &m, s * alpha, s * beta).unwrap();
            let dim = n * ell;
            // Compare coefficientwise: scaled_k · s^k vs s^{nℓ} · base_k.
            let factor = C64::new(s, 0.0).powi(dim as i32);
            let lhs = ScalarPolynomial::new(
                (0..=dim)
                    .map(|k| scaled.coeff(k) * C64::new(s, 0.0).powi(k as i32))
                    .collect(),
            );
            let rhs = base.scale(factor);
            assert!(
                lhs.rel_distance(&rhs) < 1e-8,
                "s={s}: {:e}",
                lhs.rel_distance(&rhs)
            );
        }
    }
}

#[test]
fn char_poly_agrees_with_leverrier_on_random_complex() {
    let mut sampler = Sampler::new(71);
    for m in [2usize, 4, 6] {
        let a = sampler.complex_matrix(m);
        let p = char_poly(&a).unwrap();
        let oracle = charpoly_leverrier(&a);
        assert!(p.rel_distance(&oracle) < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_linear_combination_eval(a in -3.0..3.0f64, b in -3.0..3.0f64, z_re in -2.0..2.0f64, z_im in -2.0..2.0f64) {
        let f = ScalarPolynomial::from_real(&[-1.0, 0.5, 1.0]);
        let h = ScalarPolynomial::from_real(&[2.0, -1.0, 1.0]);
        let comb = f.linear_combination(&h, c(a, 0.0), c(b, 0.0));
        let z = c(z_re, z_im);
        let direct = f.eval(z) * c(a, 0.0) + h.eval(z) * c(b, 0.0);
        prop_assert!((comb.eval(z) - direct).norm() < 1e-10);
    }

    #[test]
    fn from_roots_then_roots_recovers(r1 in -2.0..2.0f64, gap1 in 0.5..2.0f64, gap2 in 0.5..2.0f64) {
        let roots = [r1, r1 + gap1, r1 + gap1 + gap2];
        let f = ScalarPolynomial::from_roots(&roots.iter().map(|&r| c(r, 0.0)).collect::<Vec<_>>());
        let computed = f.roots().unwrap();
        let cls = classify_real(&computed, 1e-7);
        prop_assert!(cls.all_real);
        for (a, b) in cls.reals.values().iter().zip(roots) {
            prop_assert!((a - b).abs() < 1e-7);
        }
    }

    #[test]
    fn interpolated_det_matches_pointwise(x in -3.0..3.0f64) {
        let cmat = ComplexMatrix::from_real_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let l = hyperpoly_core::MatrixPolynomial::monic(vec![
            cmat.scale(c(-1.0, 0.0)),
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::identity(2),
        ]).unwrap();
        let d = l.det_poly().unwrap();
        let z = c(x, 0.0);
        let direct = l.eval(z).det().unwrap();
        prop_assert!((d.eval(z) - direct).norm() < 1e-9 * (1.0 + direct.norm()));
    }
}
