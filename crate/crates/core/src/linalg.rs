//! Exact dense linear algebra over [`FieldElement`]: fraction-free Bareiss
//! determinants, rank by elimination, and kernel vectors.

use crate::field::{FieldCtx, FieldElement};

/// Row-major exact matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn new(ctx: FieldCtx, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        assert!(entries.iter().all(|e| e.ctx() == ctx), "mixed contexts");
        Matrix {
            ctx,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(
        ctx: FieldCtx,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(ctx, rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldElement {
        &mut self.entries[i * self.cols + j]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.entries.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    /// Determinant by fraction-free Bareiss elimination; all intermediate
    /// divisions are exact, keeping entry growth polynomial.
    pub fn det(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return self.ctx.one();
        }
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = self.ctx.one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.at(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = !sign;
                    }
                    None => return self.ctx.zero(),
                }
            }
            let pivot = m.at(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let val = &(&pivot * m.at(i, j)) - &(m.at(i, k) * m.at(k, j));
                    *m.at_mut(i, j) = &val / &prev;
                }
                *m.at_mut(i, k) = self.ctx.zero();
            }
            prev = pivot;
        }
        let d = m.at(n - 1, n - 1).clone();
        if sign {
            -d
        } else {
            d
        }
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&i| !m.at(i, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let inv = m.at(row, col).inverse().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.at(row, j) * &inv;
                *m.at_mut(row, j) = v;
            }
            for i in 0..m.rows {
                if i != row && !m.at(i, col).is_zero() {
                    let factor = m.at(i, col).clone();
                    for j in col..m.cols {
                        let v = m.at(i, j) - &(&factor * m.at(row, j));
                        *m.at_mut(i, j) = v;
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    /// A basis of the right kernel `{x : M x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let mut pivot_col_of_row = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&i| !m.at(i, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let inv = m.at(row, col).inverse().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.at(row, j) * &inv;
                *m.at_mut(row, j) = v;
            }
            for i in 0..m.rows {
                if i != row && !m.at(i, col).is_zero() {
                    let factor = m.at(i, col).clone();
                    for j in col..m.cols {
                        let v = m.at(i, j) - &(&factor * m.at(row, j));
                        *m.at_mut(i, j) = v;
                    }
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
        let free_cols: Vec<usize> =
            (0..m.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free_cols {
            let mut v = vec![self.ctx.zero(); m.cols];
            v[fc] = self.ctx.one();
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = -m.at(r, fc).clone();
            }
            basis.push(v);
        }
        basis
    }
}
