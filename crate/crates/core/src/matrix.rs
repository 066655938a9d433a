//! Dense complex and real-symmetric matrix containers.
//!
//! These are deliberately small row-major value types: the analyses in this
//! crate run at desk scale (matrices up to a few dozen rows), so clarity and
//! exact, deterministic semantics win over blocking or sparsity.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::C64;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from nested rows; every row must have equal length.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch(format!("ragged rows in {r}x{c} matrix")));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Real matrix promoted to complex.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let lifted: Vec<Vec<C64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&lifted)
    }

    pub fn diag(entries: &[C64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Copies `block` into position with top-left corner at `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &ComplexMatrix) {
        debug_assert!(row + block.rows <= self.rows && col + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(row + i, col + j)] = block[(i, j)];
            }
        }
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: C64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "matmul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, x: &[C64]) -> Result<Vec<C64>> {
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "matvec {}x{} by len-{}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let mut y = vec![C64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = C64::new(0.0, 0.0);
            for j in 0..self.cols {
                acc += self[(i, j)] * x[j];
            }
            y[i] = acc;
        }
        Ok(y)
    }

    pub fn conj_transpose(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Quadratic form `xᴴ A x` (real for Hermitian `A`).
    pub fn quadratic_form(&self, x: &[C64]) -> Result<C64> {
        let ax = self.matvec(x)?;
        Ok(x.iter().zip(&ax).map(|(xi, yi)| xi.conj() * yi).sum())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum row sum of entry magnitudes (the ∞-operator norm).
    pub fn max_row_sum_norm(&self) -> f64 {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest entry of `A − Aᴴ`; zero exactly when Hermitian.
    pub fn hermitian_defect(&self) -> f64 {
        let mut defect = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                defect = defect.max(d);
            }
        }
        defect
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermitian_defect() <= tol * (1.0 + self.max_abs())
    }

    /// Largest imaginary part over all entries.
    pub fn max_imag(&self) -> f64 {
        self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    /// Determinant by LU with partial pivoting.
    pub fn det(&self) -> Result<C64> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "det of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = C64::new(1.0, 0.0);
        for k in 0..n {
            let mut piv = k;
            let mut max = a[k * n + k].norm();
            for i in (k + 1)..n {
                let v = a[i * n + k].norm();
                if v > max {
                    max = v;
                    piv = i;
                }
            }
            if max == 0.0 {
                return Ok(C64::new(0.0, 0.0));
            }
            if piv != k {
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k];
            det *= pivot;
            for i in (k + 1)..n {
                let factor = a[i * n + k] / pivot;
                if factor.norm_sqr() == 0.0 {
                    continue;
                }
                for j in (k + 1)..n {
                    let akj = a[k * n + j];
                    a[i * n + j] -= factor * akj;
                }
            }
        }
        Ok(det)
    }

    /// Solves `A x = b` by LU with partial pivoting.
    pub fn solve(&self, b: &[C64]) -> Result<Vec<C64>> {
        if !self.is_square() || b.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "solve {}x{} with rhs len {}",
                self.rows,
                self.cols,
                b.len()
            )));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut x: Vec<C64> = b.to_vec();
        for k in 0..n {
            let mut piv = k;
            let mut max = a[k * n + k].norm();
            for i in (k + 1)..n {
                let v = a[i * n + k].norm();
                if v > max {
                    max = v;
                    piv = i;
                }
            }
            if max == 0.0 {
                return Err(Error::NumericalError(format!("singular system at column {k}")));
            }
            if piv != k {
                for j in 0..n {
                    a.swap(k * n + j, piv * n + j);
                }
                x.swap(k, piv);
            }
            let pivot = a[k * n + k];
            for i in (k + 1)..n {
                let factor = a[i * n + k] / pivot;
                if factor.norm_sqr() == 0.0 {
                    continue;
                }
                for j in (k + 1)..n {
                    let akj = a[k * n + j];
                    a[i * n + j] -= factor * akj;
                }
                let xk = x[k];
                x[i] -= factor * xk;
            }
        }
        for i in (0..n).rev() {
            let mut acc = x[i];
            for j in (i + 1)..n {
                acc -= a[i * n + j] * x[j];
            }
            x[i] = acc / a[i * n + i];
        }
        Ok(x)
    }

    fn check_same_shape(&self, other: &ComplexMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

impl core::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Dense real symmetric matrix. Storage is kept exactly symmetric: writes go
/// through [`SymmetricMatrix::set`], which mirrors the entry.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    m: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(m: usize) -> Self {
        Self {
            m,
            data: vec![0.0; m * m],
        }
    }

    pub fn identity(m: usize) -> Self {
        let mut s = Self::zeros(m);
        for i in 0..m {
            s.data[i * m + i] = 1.0;
        }
        s
    }

    pub fn diag(entries: &[f64]) -> Self {
        let m = entries.len();
        let mut s = Self::zeros(m);
        for (i, &e) in entries.iter().enumerate() {
            s.data[i * m + i] = e;
        }
        s
    }

    /// Builds from nested rows, symmetrizing `(a_ij + a_ji)/2`. Errors when
    /// the input is not square or departs from symmetry by more than `tol`
    /// relative to the largest entry.
    pub fn from_rows(rows: &[Vec<f64>], tol: f64) -> Result<Self> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::ShapeMismatch(format!("ragged rows in {m}x{m} symmetric matrix")));
        }
        let scale = 1.0
            + rows
                .iter()
                .flatten()
                .map(|x| x.abs())
                .fold(0.0, f64::max);
        let mut s = Self::zeros(m);
        for i in 0..m {
            for j in 0..m {
                if (rows[i][j] - rows[j][i]).abs() > tol * scale {
                    return Err(Error::ShapeMismatch(format!(
                        "asymmetric entry at ({i},{j})"
                    )));
                }
                s.data[i * m + j] = 0.5 * (rows[i][j] + rows[j][i]);
            }
        }
        Ok(s)
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.m + j]
    }

    /// Sets entry `(i, j)` and its mirror `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.m + j] = v;
        self.data[j * self.m + i] = v;
    }

    pub fn add(&self, other: &SymmetricMatrix) -> Result<SymmetricMatrix> {
        if self.m != other.m {
            return Err(Error::ShapeMismatch(format!("{} vs {}", self.m, other.m)));
        }
        Ok(SymmetricMatrix {
            m: self.m,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, s: f64) -> SymmetricMatrix {
        SymmetricMatrix {
            m: self.m,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self + sign·xxᵀ`.
    pub fn rank_one_update(&self, x: &[f64], sign: f64) -> Result<SymmetricMatrix> {
        if x.len() != self.m {
            return Err(Error::ShapeMismatch(format!(
                "rank-one update size {} on {}x{}",
                x.len(),
                self.m,
                self.m
            )));
        }
        let mut out = self.clone();
        for i in 0..self.m {
            for j in 0..self.m {
                out.data[i * self.m + j] += sign * x[i] * x[j];
            }
        }
        Ok(out)
    }

    /// Direct sum `⊕ blocks`.
    pub fn block_diag(blocks: &[SymmetricMatrix]) -> SymmetricMatrix {
        let m: usize = blocks.iter().map(|b| b.m).sum();
        let mut out = SymmetricMatrix::zeros(m);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.m {
                for j in 0..b.m {
                    out.data[(off + i) * m + (off + j)] = b.data[i * b.m + j];
                }
            }
            off += b.m;
        }
        out
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.m];
        for i in 0..self.m {
            let mut acc = 0.0;
            for j in 0..self.m {
                acc += self.data[i * self.m + j] * x[j];
            }
            y[i] = acc;
        }
        y
    }

    pub fn trace(&self) -> f64 {
        (0..self.m).map(|i| self.data[i * self.m + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|a| a.abs()).fold(0.0, f64::max)
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.m, self.m);
        for i in 0..self.m {
            for j in 0..self.m {
                out[(i, j)] = C64::new(self.data[i * self.m + j], 0.0);
            }
        }
        out
    }

    /// Frobenius inner product `⟨A, B⟩ = Σ a_ij b_ij`.
    pub fn dot(&self, other: &SymmetricMatrix) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }
}
