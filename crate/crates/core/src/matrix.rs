//! Dense matrices over a [`RingSpec`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::RingSpec;

/// Row-major dense matrix with canonical entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl Matrix {
    pub fn new(ring: RingSpec, rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 || rows * cols != entries.len() {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let entries = entries.into_iter().map(|e| ring.reduce(e)).collect();
        Ok(Matrix { ring, rows, cols, entries })
    }

    pub fn from_rows(ring: &RingSpec, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let entries = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Matrix::new(ring.clone(), rows.len(), cols, entries)
    }

    pub fn zeros(ring: &RingSpec, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    /// `E_n`.
    pub fn identity(n: usize, ring: &RingSpec) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Companion matrix: ones on the subdiagonal, last column `-a_0, ..., -a_(l-1)`.
    pub fn companion(f: &Poly) -> Result<Self> {
        f.require_monic_nonconstant()?;
        let ring = f.ring();
        let l = f.deg();
        let mut m = Matrix::zeros(ring, l, l);
        for i in 1..l {
            m.entries[i * l + (i - 1)] = BigInt::one();
        }
        for i in 0..l {
            m.entries[i * l + (l - 1)] = ring.neg(&f.coeff(i));
        }
        Ok(m)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn same_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.clone(), other.ring.clone()));
        }
        Ok(())
    }

    /// Block matrix `[a_ij * B]`.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        let (m, n, k, l) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Matrix::zeros(&self.ring, m * k, n * l);
        for i in 0..m {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for r in 0..k {
                    for c in 0..l {
                        out.entries[(i * k + r) * (n * l) + j * l + c] = self.ring.mul(a, other.get(r, c));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `A ⊗ E_n + E_m ⊗ B` for square `A` (m×m) and `B` (n×n).
    pub fn kronecker_sum(&self, other: &Matrix) -> Result<Matrix> {
        if !self.is_square() || !other.is_square() {
            return Err(Error::Shape("Kronecker sum needs square matrices".into()));
        }
        let left = self.kronecker(&Matrix::identity(other.rows, &self.ring))?;
        let right = Matrix::identity(self.rows, &self.ring).kronecker(other)?;
        left.add(&right)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| self.ring.add(a, b)).collect();
        Ok(Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &BigInt) -> Matrix {
        let entries = self.entries.iter().map(|a| self.ring.mul(a, c)).collect();
        Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(t, j);
                }
            }
        }
        for e in &mut out.entries {
            *e = self.ring.reduce(std::mem::take(e));
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc += a * b;
                }
                self.ring.reduce(acc)
            })
            .collect()
    }

    pub fn pow(&self, mut n: u64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape("power of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(self.rows, &self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape("polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut acc = Matrix::zeros(&self.ring, n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?.add(&Matrix::identity(n, &self.ring).scale(c))?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `det(xE - M)` by Berkowitz's division-free algorithm.
    ///
    /// Works from the trailing 1x1 block outwards. For the block with leading
    /// entry `a`, row `R`, column `C` and trailing block `A1`, the polynomial
    /// is the Toeplitz product of `(1, -a, -RC, -RA1C, ..., -RA1^(m-2)C)`
    /// with the characteristic polynomial of `A1`.
    pub fn char_poly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::Shape("characteristic polynomial of a non-square matrix".into()));
        }
        let ring = &self.ring;
        let n = self.rows;
        // coefficients, highest degree first
        let mut p = vec![BigInt::one(), ring.neg(self.get(n - 1, n - 1))];
        for k in (0..n - 1).rev() {
            let m = n - k;
            let mut t = Vec::with_capacity(m + 1);
            t.push(BigInt::one());
            t.push(ring.neg(self.get(k, k)));
            let mut v: Vec<BigInt> = (k + 1..n).map(|i| self.get(i, k).clone()).collect();
            for step in 0..m - 1 {
                let mut rv = BigInt::zero();
                for (j, vj) in v.iter().enumerate() {
                    rv += self.get(k, k + 1 + j) * vj;
                }
                t.push(ring.neg(&ring.reduce(rv)));
                if step + 1 < m - 1 {
                    v = (0..m - 1)
                        .map(|i| {
                            let mut acc = BigInt::zero();
                            for (j, vj) in v.iter().enumerate() {
                                acc += self.get(k + 1 + i, k + 1 + j) * vj;
                            }
                            ring.reduce(acc)
                        })
                        .collect();
                }
            }
            let mut next = vec![BigInt::zero(); m + 1];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, pj) in p.iter().enumerate().take(i + 1) {
                    *slot += &t[i - j] * pj;
                }
                *slot = ring.reduce(std::mem::take(slot));
            }
            p = next;
        }
        p.reverse();
        Ok(Poly::new(ring.clone(), p))
    }
}

impl fmt::Display for Matrix {
    /// Right-aligned columns, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
