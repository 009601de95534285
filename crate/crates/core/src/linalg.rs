//! Exact linear algebra over `Q` by fraction-free elimination.
//!
//! Rational rows are first scaled to integer rows. Elimination then runs the
//! fraction-free Gauss–Jordan recurrence
//!
//! ```text
//! a[i][j] <- (p * a[i][j] - a[i][c] * a[r][j]) / p_prev
//! ```
//!
//! where `p = a[r][c]` is the current pivot and `p_prev` the previous one.
//! Every intermediate entry is a minor of the input, so each division is
//! exact. Pivots are taken in column order, first nonzero row first, which
//! makes every result deterministic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::{common_denominator, Rational};

/// Sparse matrix of rationals. Zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = ExactMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: Rational) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Rational::zero(); self.rows];
        for (i, j, a) in self.entries() {
            out[i] += a * &v[j];
        }
        out
    }

    /// Integer rows, each scaled by the lcm of its denominators. Returns the
    /// rows together with the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let dense = self.to_dense();
        let mut scales = Vec::with_capacity(self.rows);
        let rows = dense
            .iter()
            .map(|row| {
                let s = common_denominator(row);
                let out = row
                    .iter()
                    .map(|v| v.numer() * (&s / v.denom()))
                    .collect();
                scales.push(s);
                out
            })
            .collect();
        (rows, scales)
    }
}

/// Fraction-free Gauss–Jordan on the first `pivot_cols` columns of `a`.
/// Returns the pivot column of each pivot row; pivot rows end up first.
fn gauss_jordan(a: &mut [Vec<BigInt>], pivot_cols: usize) -> Vec<usize> {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == nrows {
            break;
        }
        let Some(found) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, found);
        let pivot_row = a[r].clone();
        let p = pivot_row[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                let (q, rem) = (&p * &*v - &f * pv).div_rem(&prev);
                assert!(rem.is_zero(), "fraction-free division not exact");
                *v = q;
            }
        }
        prev = p;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced echelon data of a matrix.
#[derive(Debug, Clone)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(m: &ExactMatrix) -> Self {
        let (mut rows, _) = m.integer_rows();
        let pivots = gauss_jordan(&mut rows, m.cols());
        Echelon { cols: m.cols(), rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// One vector per free column `f`: `v_f = 1`, other free coordinates 0,
    /// pivot coordinates solved from the reduced rows.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &c) in self.pivots.iter().enumerate() {
                    let row = &self.rows[r];
                    v[c] = -Rational::new(row[f].clone(), row[c].clone());
                }
                v
            })
            .collect()
    }
}

/// Basis of `{v : Mv = 0}` in free-variable parametrized form.
pub fn nullspace(m: &ExactMatrix) -> Vec<Vec<Rational>> {
    Echelon::new(m).nullspace()
}

pub fn rank(m: &ExactMatrix) -> usize {
    Echelon::new(m).rank()
}

/// Solves `A c = b` for many right-hand sides against one factorization.
///
/// Among all solutions the one returned is supported on the pivot columns,
/// i.e. it prefers earlier columns of `A`.
#[derive(Debug, Clone)]
pub struct LinearSolver {
    cols: usize,
    reduced: Vec<Vec<BigInt>>,
    transform: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl LinearSolver {
    pub fn new(a: &ExactMatrix) -> Self {
        let (rows, scales) = a.integer_rows();
        let n = a.rows();
        // [A_int | diag(scales)] keeps track of T with T·A = R.
        let mut aug: Vec<Vec<BigInt>> = rows
            .into_iter()
            .zip(scales)
            .enumerate()
            .map(|(i, (mut row, s))| {
                row.extend((0..n).map(|k| if k == i { s.clone() } else { BigInt::zero() }));
                row
            })
            .collect();
        let pivots = gauss_jordan(&mut aug, a.cols());
        let (reduced, transform) = aug
            .into_iter()
            .map(|mut row| {
                let t = row.split_off(a.cols());
                (row, t)
            })
            .unzip();
        LinearSolver { cols: a.cols(), reduced, transform, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.transform.len(), "right-hand side has wrong length");
        let tb: Vec<Rational> = self
            .transform
            .iter()
            .map(|row| {
                row.iter()
                    .zip(b)
                    .filter(|(t, _)| !t.is_zero())
                    .map(|(t, v)| Rational::from_integer(t.clone()) * v)
                    .sum()
            })
            .collect();
        if tb[self.rank()..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut c = vec![Rational::zero(); self.cols];
        for (r, &col) in self.pivots.iter().enumerate() {
            c[col] = &tb[r] / Rational::from_integer(self.reduced[r][col].clone());
        }
        Some(c)
    }
}
