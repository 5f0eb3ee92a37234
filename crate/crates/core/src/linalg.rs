//! Exact dense linear algebra over the rationals.
//!
//! Every Hom space, kernel and cokernel in the crate reduces to the routines
//! here. Matrices stay tiny (bounded by the total dimension of the modules
//! involved), so storage is a dense row-major `Vec` of `BigRational`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|c| format_rational(self.get(r, c))).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        Ok(QMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        QMatrix { rows, cols, entries }
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |r, c| q(rows[r][c]))
    }

    /// Builds an `rows x k` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "column length mismatch");
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn add_at(&mut self, r: usize, c: usize, value: &Rational) {
        let e = &mut self.entries[r * self.cols + c];
        *e += value;
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| e * k).collect() }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "mul_vec dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square(), "pow of non-square matrix");
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &QMatrix) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &QMatrix) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        QMatrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn block_diag(blocks: &[&QMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(r0 + r, c0 + c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &QMatrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn sub_matrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let pv = m.get(row, c);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &factor * pv;
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the null space.
    pub fn kernel_basis(&self) -> QMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = QMatrix::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, Rational::one());
            for (i, &p) in pivots.iter().enumerate() {
                let v = r.get(i, f);
                if !v.is_zero() {
                    k.set(p, j, -v.clone());
                }
            }
        }
        k
    }

    /// Basis of the column space, taken from the pivot columns of `self`.
    pub fn column_space(&self) -> QMatrix {
        let (_, pivots) = self.rref();
        QMatrix::from_fn(self.rows, pivots.len(), |r, c| self.get(r, pivots[c]).clone())
    }

    /// Standard basis vectors completing the column space of `self` to the whole
    /// ambient space, as the columns of the result.
    pub fn complement_columns(&self) -> QMatrix {
        let ext = self.hstack(&QMatrix::identity(self.rows));
        let (_, pivots) = ext.rref();
        let extra: Vec<usize> = pivots.into_iter().filter(|&p| p >= self.cols).map(|p| p - self.cols).collect();
        QMatrix::from_fn(self.rows, extra.len(), |r, c| if r == extra[c] { Rational::one() } else { Rational::zero() })
    }

    /// One particular solution of `self * x = b`, or `None` when unsolvable.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = QMatrix::from_columns(self.rows, &[b.to_vec()]);
        Ok(self.solve_matrix(&rhs)?.map(|x| x.column(0)))
    }

    /// Solves `self * X = rhs` column by column with free variables set to zero.
    pub fn solve_matrix(&self, rhs: &QMatrix) -> Result<Option<QMatrix>> {
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side with {} rows for {} rows",
                rhs.rows, self.rows
            )));
        }
        let (r, pivots) = self.hstack(rhs).rref();
        if pivots.last().is_some_and(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = QMatrix::zeros(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(p, c, r.get(i, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "det of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let factor = m.get(r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c) - &factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        self.solve_matrix(&QMatrix::identity(self.rows))
            .ok()
            .flatten()
            .filter(|x| (self * x) == QMatrix::identity(self.rows))
    }

    /// Largest absolute numerator/denominator, handy for debugging growth.
    pub fn height(&self) -> BigInt {
        self.entries.iter().map(|e| e.numer().abs().max(e.denom().clone())).max().unwrap_or_else(BigInt::zero)
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| -e).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity() {
        let id = QMatrix::identity(2);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let m = QMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, QMatrix::from_i64_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_empty_rows() {
        let m = QMatrix::zeros(0, 3);
        let (r, p) = m.rref();
        assert_eq!(r, m);
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(QMatrix::identity(3).kernel_basis().cols(), 0);
        assert_eq!(QMatrix::zeros(3, 3).kernel_basis().cols(), 3);
        let k = QMatrix::from_i64_rows(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.get(0, 0), &-k.get(1, 0).clone());
        assert!(!k.get(0, 0).is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(3), q(-7)];
        assert_eq!(QMatrix::identity(2).solve(&b).unwrap(), Some(b));

        let m = QMatrix::from_i64_rows(&[&[1, 1]]);
        let x = m.solve(&[q(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], q(2));

        assert_eq!(QMatrix::from_i64_rows(&[&[0]]).solve(&[q(1)]).unwrap(), None);
        assert!(QMatrix::identity(2).solve(&[q(1)]).is_err());
    }

    #[test]
    fn det_and_inverse() {
        let m = QMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.det(), q(1));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, QMatrix::identity(2));
        assert!(QMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn complement_extends_to_a_basis() {
        let m = QMatrix::from_i64_rows(&[&[1], &[1], &[0]]);
        let c = m.complement_columns();
        assert_eq!(c.cols(), 2);
        assert_eq!(m.hstack(&c).rank(), 3);
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "-3", "7/2", "-1/5"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (0usize..5, 0usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| QMatrix::from_fn(r, c, |i, j| q(v[i * c + j])))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
            prop_assert!((&m * &m.kernel_basis()).is_zero());
        }

        #[test]
        fn rref_idempotent(m in small_matrix()) {
            let (once, _) = m.rref();
            let (twice, _) = once.rref();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn solve_is_exact(m in small_matrix(), seed in proptest::collection::vec(-3i64..4, 5)) {
            let x0: Vec<Rational> = (0..m.cols()).map(|i| q(seed[i])).collect();
            let b = m.mul_vec(&x0);
            let x = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&x), b);
        }

        #[test]
        fn det_matches_rank(m in small_matrix()) {
            if m.is_square() {
                prop_assert_eq!(m.det().is_zero(), !m.is_invertible());
            }
        }
    }
}
