//! Seeded deterministic sampling for the Monte Carlo checks.
//!
//! All randomized operations in this crate take an explicit `u64` seed and
//! draw through [`Sampler`], a thin wrapper over ChaCha8. Derived streams
//! (`derive`) give independent per-trial generators with order-independent
//! reductions.

use alloc::vec::Vec;
use num_traits::Float;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{ComplexMatrix, SymmetricMatrix};
use crate::C64;

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream `k` derived from `seed` (splitmix64 mix).
    pub fn derive(seed: u64, stream: u64) -> Self {
        let mut z = seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        Self::new(z ^ (z >> 31))
    }

    /// Uniform in `[0, 1)` with 53-bit resolution.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Standard normal via Box-Muller.
    pub fn normal(&mut self) -> f64 {
        let u1 = 1.0 - self.uniform(); // (0, 1]
        let u2 = self.uniform();
        (-2.0 * u1.ln()).sqrt() * (core::f64::consts::TAU * u2).cos()
    }

    /// Complex standard normal (independent real and imaginary parts).
    pub fn complex_normal(&mut self) -> C64 {
        C64::new(self.normal(), self.normal())
    }

    /// Random complex unit vector of length `n`.
    pub fn unit_vector(&mut self, n: usize) -> Vec<C64> {
        loop {
            let v: Vec<C64> = (0..n).map(|_| self.complex_normal()).collect();
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-6 {
                return v.iter().map(|z| z / norm).collect();
            }
        }
    }

    /// Random Hermitian matrix: `(G + Gᴴ)/2` for complex Gaussian `G`.
    pub fn hermitian(&mut self, m: usize) -> ComplexMatrix {
        let mut h = ComplexMatrix::zeros(m, m);
        for i in 0..m {
            h[(i, i)] = C64::new(self.normal(), 0.0);
            for j in (i + 1)..m {
                let g = self.complex_normal() * 0.5_f64.sqrt();
                h[(i, j)] = g;
                h[(j, i)] = g.conj();
            }
        }
        h
    }

    /// Random real symmetric matrix with standard normal entries,
    /// symmetrized.
    pub fn symmetric(&mut self, m: usize) -> SymmetricMatrix {
        let mut s = SymmetricMatrix::zeros(m);
        for i in 0..m {
            s.set(i, i, self.normal());
            for j in (i + 1)..m {
                s.set(i, j, self.normal() * 0.5_f64.sqrt());
            }
        }
        s
    }

    /// Random complex square matrix with standard complex normal entries.
    pub fn complex_matrix(&mut self, m: usize) -> ComplexMatrix {
        let mut g = ComplexMatrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                g[(i, j)] = self.complex_normal();
            }
        }
        g
    }

    /// Random Hermitian positive semidefinite matrix `GᴴG/m`.
    pub fn hermitian_psd(&mut self, m: usize) -> ComplexMatrix {
        let g = self.complex_matrix(m);
        g.conj_transpose()
            .matmul(&g)
            .expect("square product")
            .scale(C64::new(1.0 / m as f64, 0.0))
    }
}
