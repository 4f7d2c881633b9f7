//! Dense integer matrices with Smith normal form.
//!
//! Entries are `i128`; the corpus matrices are tiny (tens of rows) with
//! small entries, so intermediate growth stays far from overflow.

use std::ops::{Index, IndexMut};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i128>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> Vec<i128> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)].checked_add(a.checked_mul(other[(k, j)]).unwrap()).unwrap();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i128]) -> Vec<i128> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows);
        let mut out = IntMat::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)];
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += c * row[b]
    fn add_row(&mut self, a: usize, b: usize, c: i128) {
        for j in 0..self.cols {
            let v = self[(b, j)];
            self[(a, j)] = self[(a, j)].checked_add(c.checked_mul(v).unwrap()).unwrap();
        }
    }

    /// col[a] += c * col[b]
    fn add_col(&mut self, a: usize, b: usize, c: i128) {
        for i in 0..self.rows {
            let v = self[(i, b)];
            self[(i, a)] = self[(i, a)].checked_add(c.checked_mul(v).unwrap()).unwrap();
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            self[(a, j)] = -self[(a, j)];
        }
    }

    /// Smith normal form `u * self * v = d` with `u`, `v` unimodular and
    /// `d` diagonal with d[i] | d[i+1].
    pub fn smith(&self) -> SmithForm {
        let mut d = self.clone();
        let mut u = IntMat::identity(self.rows);
        let mut v = IntMat::identity(self.cols);
        let n = self.rows.min(self.cols);
        for k in 0..n {
            loop {
                // Pivot: minimal nonzero |entry| in the trailing block.
                let mut pivot: Option<(usize, usize)> = None;
                for i in k..d.rows {
                    for j in k..d.cols {
                        if d[(i, j)] != 0
                            && pivot.is_none_or(|(pi, pj)| d[(i, j)].abs() < d[(pi, pj)].abs())
                        {
                            pivot = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = pivot else { break };
                d.swap_rows(k, pi);
                u.swap_rows(k, pi);
                d.swap_cols(k, pj);
                v.swap_cols(k, pj);

                let mut dirty = false;
                for i in k + 1..d.rows {
                    let q = d[(i, k)].div_euclid(d[(k, k)]);
                    if q != 0 {
                        d.add_row(i, k, -q);
                        u.add_row(i, k, -q);
                    }
                    if d[(i, k)] != 0 {
                        dirty = true;
                    }
                }
                for j in k + 1..d.cols {
                    let q = d[(k, j)].div_euclid(d[(k, k)]);
                    if q != 0 {
                        d.add_col(j, k, -q);
                        v.add_col(j, k, -q);
                    }
                    if d[(k, j)] != 0 {
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // Divisibility pass: fold a non-divisible entry into column k.
                let mut fixed = true;
                'scan: for i in k + 1..d.rows {
                    for j in k + 1..d.cols {
                        if d[(i, j)] % d[(k, k)] != 0 {
                            d.add_col(k, j, 1);
                            v.add_col(k, j, 1);
                            fixed = false;
                            break 'scan;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
            if d[(k, k)] < 0 {
                d.negate_row(k);
                u.negate_row(k);
            }
        }
        SmithForm { u, d, v }
    }

    /// Rank of the matrix (number of nonzero diagonal entries in SNF).
    pub fn rank(&self) -> usize {
        self.smith().rank()
    }

    /// A basis for the integer kernel, as columns.
    pub fn kernel_basis(&self) -> Vec<Vec<i128>> {
        let s = self.smith();
        let r = s.rank();
        (r..self.cols).map(|j| s.v.col(j)).collect()
    }

    /// One integral solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[i128]) -> Option<Vec<i128>> {
        assert_eq!(b.len(), self.rows);
        let s = self.smith();
        let c = s.u.mul_vec(b);
        let r = s.rank();
        let mut y = vec![0i128; self.cols];
        for (i, &ci) in c.iter().enumerate() {
            if i < r {
                if ci % s.d[(i, i)] != 0 {
                    return None;
                }
                y[i] = ci / s.d[(i, i)];
            } else if ci != 0 {
                return None;
            }
        }
        Some(s.v.mul_vec(&y))
    }

    /// Determinant via Bareiss fraction-free elimination (square only).
    pub fn det(&self) -> i128 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m = self.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[(k, k)] == 0 {
                let Some(swap) = (k + 1..n).find(|&i| m[(i, k)] != 0) else {
                    return 0;
                };
                m.swap_rows(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(k, k)].checked_mul(m[(i, j)]).unwrap()
                        - m[(i, k)].checked_mul(m[(k, j)]).unwrap();
                    m[(i, j)] = num / prev;
                }
                m[(i, k)] = 0;
            }
            prev = m[(k, k)];
        }
        sign * m[(n - 1, n - 1)]
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

/// Result of [`IntMat::smith`]: `u * a * v = d`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n).filter(|&i| self.d[(i, i)] != 0).count()
    }

    pub fn diagonal(&self) -> Vec<i128> {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n).map(|i| self.d[(i, i)]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn smith_small() {
        let m = IntMat::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let s = m.smith();
        assert_eq!(s.diagonal(), vec![2, 2, 156]);
    }

    #[test]
    fn solve_and_kernel() {
        let m = IntMat::from_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(m.solve(&[4, 9]), Some(vec![2, 3]));
        assert_eq!(m.solve(&[1, 0]), None);
        let k = IntMat::from_rows(vec![vec![1, 1, 1]]);
        assert_eq!(k.kernel_basis().len(), 2);
    }

    /// Rational rank by fraction-free elimination, as an oracle independent
    /// of the Smith routine.
    fn rank_oracle(m: &IntMat) -> usize {
        let mut a: Vec<Vec<i128>> = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
            .collect();
        let (rows, cols) = (m.nrows(), m.ncols());
        let mut rank = 0;
        for j in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&i| a[i][j] != 0) else {
                continue;
            };
            a.swap(rank, p);
            for i in 0..rows {
                if i != rank && a[i][j] != 0 {
                    let (num, den) = (a[i][j], a[rank][j]);
                    for col in 0..cols {
                        a[i][col] = a[i][col] * den - num * a[rank][col];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn smith_decomposition_laws(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-6i128..=6, 25),
        ) {
            let m = IntMat::from_rows(
                (0..rows).map(|i| (0..cols).map(|j| seed[i * 5 + j]).collect()).collect(),
            );
            let s = m.smith();
            // u * m * v = d
            prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
            // unimodular transforms
            prop_assert_eq!(s.u.det().abs(), 1);
            prop_assert_eq!(s.v.det().abs(), 1);
            // divisibility chain
            let diag = s.diagonal();
            for w in diag.windows(2) {
                if w[0] != 0 {
                    prop_assert_eq!(w[1] % w[0], 0);
                } else {
                    prop_assert_eq!(w[1], 0);
                }
            }
            // rank agrees with an independent elimination
            prop_assert_eq!(s.rank(), rank_oracle(&m));
            // kernel vectors are killed
            for k in m.kernel_basis() {
                prop_assert!(m.mul_vec(&k).iter().all(|&x| x == 0));
            }
        }
    }
}
