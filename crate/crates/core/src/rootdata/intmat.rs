//! Integer matrices, Smith normal form and column Hermite normal form.

use std::fmt;
use std::ops::{Index, IndexMut};

use num::{BigInt, Integer, One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Option<Self> {
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != c) {
            return None;
        }
        Some(IntMatrix {
            rows: rows.len(),
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).expect("ragged rows")
    }

    /// Block-diagonal sum of square blocks.
    pub fn block_diagonal(blocks: &[IntMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| i64::try_from(&self[(i, j)]).ok())
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[(r, k)].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += q·row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = q * &self[(src, c)];
            self[(dst, c)] += v;
        }
    }

    /// col[dst] += q·col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = q * &self[(r, src)];
            self[(r, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// `left · m · right = diagonal`, with both transforms unimodular and their
/// inverses tracked alongside.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub right: IntMatrix,
    pub right_inv: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d_1 | d_2 | …`, nonnegative, `min(rows, cols)` of them.
    pub fn factors(&self) -> Vec<BigInt> {
        let n = self.diagonal.rows.min(self.diagonal.cols);
        (0..n).map(|i| self.diagonal[(i, i)].clone()).collect()
    }
}

struct SmithCalc {
    m: IntMatrix,
    left: IntMatrix,
    left_inv: IntMatrix,
    right: IntMatrix,
    right_inv: IntMatrix,
}

impl SmithCalc {
    fn row_add(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.m.add_row(dst, src, q);
        self.left.add_row(dst, src, q);
        self.left_inv.add_col(src, dst, &-q);
    }

    fn col_add(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.m.add_col(dst, src, q);
        self.right.add_col(dst, src, q);
        self.right_inv.add_row(src, dst, &-q);
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        self.left.swap_rows(a, b);
        self.left_inv.swap_cols(a, b);
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        self.right.swap_cols(a, b);
        self.right_inv.swap_rows(a, b);
    }

    fn row_negate(&mut self, r: usize) {
        self.m.negate_row(r);
        self.left.negate_row(r);
        self.left_inv.negate_col(r);
    }

    /// Position of the smallest nonzero |entry| in the trailing submatrix.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.m.rows {
            for j in t..self.m.cols {
                let a = self.m[(i, j)].abs();
                if a.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|(_, b)| a < *b) {
                    best = Some(((i, j), a));
                }
            }
        }
        best.map(|(p, _)| p)
    }

    fn run(&mut self) {
        let n = self.m.rows.min(self.m.cols);
        for t in 0..n {
            loop {
                let Some((pi, pj)) = self.min_entry(t) else {
                    return;
                };
                self.row_swap(t, pi);
                self.col_swap(t, pj);
                let mut clean = true;
                for i in t + 1..self.m.rows {
                    let q = self.m[(i, t)].div_floor(&self.m[(t, t)]);
                    if !q.is_zero() {
                        self.row_add(i, t, &-q);
                    }
                    clean &= self.m[(i, t)].is_zero();
                }
                for j in t + 1..self.m.cols {
                    let q = self.m[(t, j)].div_floor(&self.m[(t, t)]);
                    if !q.is_zero() {
                        self.col_add(j, t, &-q);
                    }
                    clean &= self.m[(t, j)].is_zero();
                }
                if !clean {
                    continue;
                }
                // divisibility: fold an offending row into row t and retry
                let pivot = self.m[(t, t)].clone();
                let offender = (t + 1..self.m.rows).find(|&i| {
                    (t + 1..self.m.cols).any(|j| !self.m[(i, j)].is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.row_add(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.m[(t, t)].is_negative() {
                self.row_negate(t);
            }
        }
    }
}

/// Smith normal form of an arbitrary rectangular integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut calc = SmithCalc {
        m: m.clone(),
        left: IntMatrix::identity(m.rows),
        left_inv: IntMatrix::identity(m.rows),
        right: IntMatrix::identity(m.cols),
        right_inv: IntMatrix::identity(m.cols),
    };
    calc.run();
    SmithForm {
        diagonal: calc.m,
        left: calc.left,
        left_inv: calc.left_inv,
        right: calc.right,
        right_inv: calc.right_inv,
    }
}

/// Column-style Hermite normal form of a matrix of full row rank `k`: the
/// unique lower-triangular `k×k` basis `B` of the column lattice with positive
/// diagonal and `0 ≤ B[i][j] < B[i][i]` for `j < i`.
///
/// Returns `None` if the rows are not independent.
pub fn column_hermite_form(m: &IntMatrix) -> Option<IntMatrix> {
    let mut a = m.clone();
    let k = a.rows;
    for i in 0..k {
        // gcd of row i over columns i.. into column i
        loop {
            let pivot = (i..a.cols)
                .filter(|&j| !a[(i, j)].is_zero())
                .min_by_key(|&j| a[(i, j)].abs())?;
            a.swap_cols(i, pivot);
            let mut done = true;
            for j in i + 1..a.cols {
                let q = a[(i, j)].div_floor(&a[(i, i)]);
                if !q.is_zero() {
                    a.add_col(j, i, &-q);
                }
                done &= a[(i, j)].is_zero();
            }
            if done {
                break;
            }
        }
        if a[(i, i)].is_negative() {
            a.negate_col(i);
        }
        for j in 0..i {
            let q = a[(i, j)].div_floor(&a[(i, i)]);
            if !q.is_zero() {
                a.add_col(j, i, &-q);
            }
        }
    }
    let mut out = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            out[(i, j)] = a[(i, j)].clone();
        }
    }
    Some(out)
}
