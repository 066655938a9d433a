//! Shared generators and oracles for the integration suites.
#![allow(dead_code)]

use hyperpoly_core::matrix::{ComplexMatrix, SymmetricMatrix};
use hyperpoly_core::poly::{MatrixPolynomial, ScalarPolynomial};
use hyperpoly_core::rng::Sampler;
use hyperpoly_core::C64;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Random monic matrix polynomial with complex Gaussian coefficients.
pub fn random_monic(sampler: &mut Sampler, n: usize, ell: usize) -> MatrixPolynomial {
    let mut coeffs: Vec<ComplexMatrix> = (0..ell).map(|_| sampler.complex_matrix(n)).collect();
    coeffs.push(ComplexMatrix::identity(n));
    MatrixPolynomial::monic(coeffs).expect("leading identity")
}

/// Random monic scalar polynomial with real Gaussian coefficients.
pub fn random_real_monic(sampler: &mut Sampler, ell: usize) -> ScalarPolynomial {
    let mut coeffs: Vec<f64> = (0..ell).map(|_| sampler.normal()).collect();
    coeffs.push(1.0);
    ScalarPolynomial::from_real(&coeffs)
}

/// Strictly separated real roots in a bounded range (gaps at least 0.4).
pub fn separated_roots(sampler: &mut Sampler, ell: usize) -> Vec<f64> {
    let mut lambda = sampler.uniform_in(-3.0, -1.0);
    let mut out = Vec::with_capacity(ell);
    for _ in 0..ell {
        out.push(lambda);
        lambda += 0.4 + sampler.uniform();
    }
    out
}

/// Interlacing pair via the rank-one recipe with residues bounded away from
/// zero: `f = det(zI−A)`, `h = det(zI−(A + sign·xxᵀ))`.
pub fn random_interlacing_pair(
    sampler: &mut Sampler,
    ell: usize,
) -> (ScalarPolynomial, ScalarPolynomial) {
    let lambdas = separated_roots(sampler, ell);
    let x: Vec<f64> = (0..ell).map(|_| sampler.uniform_in(0.4, 1.2)).collect();
    let sign = if sampler.uniform() < 0.5 { 1.0 } else { -1.0 };
    hyperpoly_core::interlacing::rank_one_pair_from(&lambdas, &x, sign).expect("valid recipe")
}

/// Diagonal monic matrix polynomial with the given scalar sections.
pub fn diagonal_matrix_poly(sections: &[ScalarPolynomial]) -> MatrixPolynomial {
    let n = sections.len();
    let ell = sections[0].degree();
    let coeffs: Vec<ComplexMatrix> = (0..=ell)
        .map(|j| {
            let entries: Vec<C64> = sections.iter().map(|s| s.coeff(j)).collect();
            ComplexMatrix::diag(&entries)
        })
        .collect();
    MatrixPolynomial::monic(coeffs).expect("sections monic")
}

/// Diagonal interlacing pair of matrix polynomials (per-entry rank-one
/// scalar pairs).
pub fn random_diagonal_interlacing_pair(
    sampler: &mut Sampler,
    n: usize,
    ell: usize,
) -> (MatrixPolynomial, MatrixPolynomial) {
    let mut fs = Vec::with_capacity(n);
    let mut hs = Vec::with_capacity(n);
    for _ in 0..n {
        let (f, h) = random_interlacing_pair(sampler, ell);
        fs.push(f);
        hs.push(h);
    }
    (diagonal_matrix_poly(&fs), diagonal_matrix_poly(&hs))
}

/// Faddeev–LeVerrier characteristic polynomial `det(zI − A)`: an
/// interpolation-free oracle for the determinant machinery.
pub fn charpoly_leverrier(a: &ComplexMatrix) -> ScalarPolynomial {
    let m = a.rows();
    let mut coeffs = vec![c(0.0, 0.0); m + 1];
    coeffs[m] = c(1.0, 0.0);
    let mut mk = ComplexMatrix::identity(m);
    for k in 1..=m {
        let am = a.matmul(&mk).expect("square");
        let trace: C64 = (0..m).map(|i| am[(i, i)]).sum();
        let ck = -trace / c(k as f64, 0.0);
        coeffs[m - k] = ck;
        mk = am.add(&ComplexMatrix::identity(m).scale(ck)).expect("square");
    }
    ScalarPolynomial::new(coeffs)
}

/// Random real symmetric matrix with a PSD shift (positive definite).
pub fn random_spd(sampler: &mut Sampler, m: usize) -> SymmetricMatrix {
    let g = sampler.symmetric(m);
    let mut out = SymmetricMatrix::zeros(m);
    for i in 0..m {
        for j in i..m {
            let mut acc = 0.0;
            for k in 0..m {
                acc += g.get(i, k) * g.get(j, k);
            }
            out.set(i, j, acc / m as f64);
        }
    }
    for i in 0..m {
        out.set(i, i, out.get(i, i) + 0.5);
    }
    out
}
