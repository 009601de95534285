//! Two-row partitions, standard tableaux and Kostka numbers.
//!
//! Everything here is pure enumeration and is kept free of linear algebra
//! so it can serve as an independent dimension oracle.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::MultiDegree;

/// `λ = (λ₁, λ₂)` with `λ₁ ≥ λ₂ ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    pub l1: u32,
    pub l2: u32,
}

impl Partition {
    pub fn new(l1: u32, l2: u32) -> Result<Self> {
        if l1 < l2 {
            return Err(Error::InvalidPlan(format!("({l1},{l2}) is not a partition")));
        }
        Ok(Partition { l1, l2 })
    }

    /// Accepts any number of parts, rejecting more than two nonzero rows.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        let nonzero: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        if nonzero.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPlan(format!("{parts:?} is not a partition")));
        }
        match nonzero.as_slice() {
            [] => Ok(Partition { l1: 0, l2: 0 }),
            [a] => Ok(Partition { l1: *a, l2: 0 }),
            [a, b] => Ok(Partition { l1: *a, l2: *b }),
            _ => Err(Error::TooManyRows(parts.to_vec())),
        }
    }

    pub fn size(&self) -> u32 {
        self.l1 + self.l2
    }

    /// `λ₁ − λ₂ + 1`, the dimension of the irreducible `GL_2`-module `W(λ)`.
    pub fn module_dimension(&self) -> u32 {
        self.l1 - self.l2 + 1
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l1, self.l2)
    }
}

/// All two-row partitions of `n`, largest `λ₁` first.
pub fn two_row_partitions(n: u32) -> Vec<Partition> {
    (0..=n / 2).map(|l2| Partition { l1: n - l2, l2 }).collect()
}

/// A standard filling of a two-row shape with `1..=|λ|`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    pub row1: Vec<u32>,
    pub row2: Vec<u32>,
}

impl StandardTableau {
    pub fn shape(&self) -> Partition {
        Partition { l1: self.row1.len() as u32, l2: self.row2.len() as u32 }
    }

    pub fn is_standard(&self) -> bool {
        let inc = |r: &[u32]| r.windows(2).all(|w| w[0] < w[1]);
        let n = self.row1.len() + self.row2.len();
        let mut seen = vec![false; n + 1];
        for &e in self.row1.iter().chain(&self.row2) {
            if e == 0 || e as usize > n || seen[e as usize] {
                return false;
            }
            seen[e as usize] = true;
        }
        self.row2.len() <= self.row1.len()
            && inc(&self.row1)
            && inc(&self.row2)
            && self.row2.iter().zip(&self.row1).all(|(b, t)| t < b)
    }

    /// Row-reading word: first row then second row.
    pub fn reading_word(&self) -> Vec<u32> {
        self.row1.iter().chain(&self.row2).copied().collect()
    }
}

/// Every standard tableau of shape `λ`, ordered by reading word.
pub fn standard_tableaux(shape: Partition) -> Vec<StandardTableau> {
    fn rec(k: u32, n: u32, shape: Partition, cur: &mut StandardTableau, out: &mut Vec<StandardTableau>) {
        if k > n {
            out.push(cur.clone());
            return;
        }
        if (cur.row1.len() as u32) < shape.l1 {
            cur.row1.push(k);
            rec(k + 1, n, shape, cur, out);
            cur.row1.pop();
        }
        if (cur.row2.len() as u32) < shape.l2 && cur.row2.len() < cur.row1.len() {
            cur.row2.push(k);
            rec(k + 1, n, shape, cur, out);
            cur.row2.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = StandardTableau { row1: Vec::new(), row2: Vec::new() };
    rec(1, shape.size(), shape, &mut cur, &mut out);
    out.sort_by_key(StandardTableau::reading_word);
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(|λ|, λ₂)·(λ₁ − λ₂ + 1)/(λ₁ + 1)`: the number of standard tableaux of a
/// two-row shape.
pub fn standard_tableau_count(shape: Partition) -> u64 {
    let n = shape.size() as u64;
    binomial(n, shape.l2 as u64) * (shape.l1 - shape.l2 + 1) as u64 / (shape.l1 as u64 + 1)
}

/// Number of semistandard tableaux of shape `λ` and content `n`.
///
/// A semistandard filling is determined by how many copies of each value go
/// to the second row; all such splits are enumerated and the
/// column-strictness condition is checked on the resulting rows.
pub fn kostka(shape: Partition, content: &MultiDegree) -> Result<u64> {
    if shape.size() != content.total() {
        return Err(Error::SizeMismatch { partition: shape.size(), content: content.total() });
    }
    fn rec(i: usize, content: &[u32], shape: Partition, row1: &mut Vec<u32>, row2: &mut Vec<u32>) -> u64 {
        if i == content.len() {
            let ok = row1.len() == shape.l1 as usize
                && row2.len() == shape.l2 as usize
                && row2.iter().zip(row1.iter()).all(|(b, t)| t < b);
            return ok as u64;
        }
        let value = i as u32 + 1;
        let mut count = 0;
        for in_row2 in 0..=content[i] {
            let in_row1 = content[i] - in_row2;
            if row1.len() + in_row1 as usize > shape.l1 as usize
                || row2.len() + in_row2 as usize > shape.l2 as usize
            {
                continue;
            }
            let (l1, l2) = (row1.len(), row2.len());
            row1.extend(std::iter::repeat_n(value, in_row1 as usize));
            row2.extend(std::iter::repeat_n(value, in_row2 as usize));
            // a column violation cannot be repaired by later (larger) values
            if row2.len() <= row1.len() && row2.iter().zip(row1.iter()).all(|(b, t)| t < b) {
                count += rec(i + 1, content, shape, row1, row2);
            }
            row1.truncate(l1);
            row2.truncate(l2);
        }
        count
    }
    Ok(rec(0, content.as_slice(), shape, &mut Vec::new(), &mut Vec::new()))
}

/// `Σ_λ K_{λ,n}` over two-row `λ ⊢ |n|`: the predicted kernel dimension of
/// the component `n`.
pub fn kernel_dimension_oracle(n: &MultiDegree) -> u64 {
    two_row_partitions(n.total())
        .into_iter()
        .map(|l| kostka(l, n).expect("sizes match by construction"))
        .sum()
}

/// Checks `Π(n_i + 1) = Σ_λ K_{λ,n}·(λ₁ − λ₂ + 1)`.
pub fn dimension_identity_check(n: &MultiDegree) -> bool {
    let rhs: u64 = two_row_partitions(n.total())
        .into_iter()
        .map(|l| kostka(l, n).expect("sizes match by construction") * l.module_dimension() as u64)
        .sum();
    n.component_dimension() == rhs
}
