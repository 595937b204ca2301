//! Exact rational matrices and Gaussian elimination.
//!
//! Everything here is small (at most 17×16) and runs over `ExactScalar`, so
//! plain fraction-free-ish RREF is all that is needed. Pivot choice is the
//! first nonzero entry, which keeps kernel bases deterministic.

use num_traits::{One, Zero};

use crate::cd::CDElement;
use crate::scalar::ExactScalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>, // row-major
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ExactScalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[ExactScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let v = out.get(r, c) + &(a * rhs.get(k, c));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Vec<ExactScalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(ExactScalar::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    pub fn apply(&self, x: &CDElement) -> CDElement {
        CDElement::new(self.mul_vec(x.coords())).expect("shape checked by caller")
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Stack two matrices with equal column counts vertically.
    pub fn vstack(&self, below: &Mat) -> Mat {
        assert_eq!(self.cols, below.cols);
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Mat {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form together with the pivot column of each
    /// nonzero row.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let tmp = m.get(pr, c).clone();
                    m.set(pr, c, m.get(row, c).clone());
                    m.set(row, c, tmp);
                }
            }
            let inv = ExactScalar::one() / m.get(row, col).clone();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the null space `{v : Mv = 0}`. Each basis vector has a
    /// `1` at its free column, so the basis is deterministic; the list is
    /// empty iff the matrix is injective.
    pub fn kernel(&self) -> Vec<Vec<ExactScalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut next_pivot = 0;
        for col in 0..self.cols {
            if next_pivot < pivots.len() && pivots[next_pivot] == col {
                next_pivot += 1;
                continue;
            }
            let mut v = vec![ExactScalar::zero(); self.cols];
            v[col] = ExactScalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, col).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Vec<Vec<ExactScalar>> {
        let (r, pivots) = self.rref();
        (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, ExactScalar::one());
        }
        let (rr, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, rr.get(r, n + c).clone());
            }
        }
        Some(out)
    }

    pub fn is_orthogonal(&self) -> bool {
        self.rows == self.cols && self.transpose().mul(self) == Mat::identity(self.rows)
    }
}

/// Stack coordinate vectors as matrix rows.
pub fn rows_from_elements(elems: &[CDElement]) -> Mat {
    Mat::from_rows(elems.iter().map(|e| e.coords().to_vec()).collect())
}
