//! Dense matrices over a finite field: reduced row echelon form, rank,
//! kernels, and the twisted Gram products that drive every orthogonality
//! computation in this crate.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::field::{Field, FieldElement};

/// Row-major dense matrix. Entries are field encodings; the matrix does not
/// carry its field, so every operation takes one explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<FieldElement>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        debug_assert!(rows.iter().all(|row| row.len() == c));
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend_from_slice(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[FieldElement]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Entrywise Frobenius power sigma^e.
    pub fn map_frob(&self, field: &Field, e: u32) -> Result<Matrix> {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = field.frob(*x, e)?;
        }
        Ok(out)
    }

    /// Vertical stack: self on top of other (same column count).
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Horizontal stack: self to the left of other (same row count).
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// The submatrix given by a list of column indices, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    /// Keep only the first `n` rows.
    pub fn take_rows(&self, n: usize) -> Matrix {
        debug_assert!(n <= self.rows);
        Matrix {
            rows: n,
            cols: self.cols,
            data: self.data[..n * self.cols].to_vec(),
        }
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if b == 0 {
                        continue;
                    }
                    let cur = out.get(i, j);
                    out.set(i, j, field.add(cur, field.mul(a, b)));
                }
            }
        }
        out
    }

    pub fn scale(&self, field: &Field, c: FieldElement) -> Matrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = field.mul(*x, c);
        }
        out
    }

    /// In-place reduced row echelon form. Returns the pivot column of each
    /// nonzero row, so the rank is `pivots.len()`.
    pub fn rref_in_place(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // find a pivot in column c at or below row r
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    let a = self.get(r, j);
                    let b = self.get(pr, j);
                    self.set(r, j, b);
                    self.set(pr, j, a);
                }
            }
            let inv = field.inv(self.get(r, c));
            for j in 0..self.cols {
                let v = self.get(r, j);
                self.set(r, j, field.mul(v, inv));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = field.sub(self.get(i, j), field.mul(f, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form with zero rows dropped: the canonical basis
    /// of the row space.
    pub fn row_space_basis(&self, field: &Field) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place(field);
        m.take_rows(pivots.len())
    }

    pub fn rank(&self, field: &Field) -> usize {
        let mut m = self.clone();
        m.rref_in_place(field).len()
    }

    /// Canonical basis of the right kernel {x : self * x = 0}, returned as
    /// rows of a (cols - rank) x cols matrix in reduced row echelon form.
    pub fn kernel(&self, field: &Field) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place(field);
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zero(free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            basis.set(bi, fc, 1);
            for (ri, &pc) in pivots.iter().enumerate() {
                basis.set(bi, pc, field.neg(m.get(ri, fc)));
            }
        }
        let _ = basis.rref_in_place(field);
        let _ = rank;
        basis
    }

    /// Determinant by fraction-free-ish Gaussian elimination (field version:
    /// plain elimination tracking row swaps and pivot products).
    pub fn det(&self, field: &Field) -> FieldElement {
        debug_assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det: FieldElement = 1;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if pr != c {
                for j in 0..n {
                    let a = m.get(c, j);
                    let b = m.get(pr, j);
                    m.set(c, j, b);
                    m.set(pr, j, a);
                }
                det = field.neg(det);
            }
            let piv = m.get(c, c);
            det = field.mul(det, piv);
            let inv = field.inv(piv);
            for i in c + 1..n {
                let f = field.mul(m.get(i, c), inv);
                if f == 0 {
                    continue;
                }
                for j in c..n {
                    let v = field.sub(m.get(i, j), field.mul(f, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

/// The twisted Gram matrix G * sigma^e(G)^T whose vanishing characterizes
/// self-orthogonality under the e-Galois form.
pub fn gram(field: &Field, g: &Matrix, e: u32) -> Result<Matrix> {
    let gt = g.map_frob(field, e)?.transpose();
    Ok(g.mul(field, &gt))
}

/// The e-Galois inner product of two vectors: sum_i x_i * y_i^(p^e).
pub fn inner_product(
    field: &Field,
    x: &[FieldElement],
    y: &[FieldElement],
    e: u32,
) -> Result<FieldElement> {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = 0u32;
    for (&xi, &yi) in x.iter().zip(y.iter()) {
        acc = field.add(acc, field.mul(xi, field.frob(yi, e)?));
    }
    Ok(acc)
}
