//! Monomials of `K[X_d, Y_d]` and the two gradings.
//!
//! A monomial stores its `x`-exponents followed by its `y`-exponents in a
//! single vector of length `2d`. Variable indices in the public API are
//! 1-based, matching the text format (`x1`, `y1`, ...).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// `x_1^{a_1}...x_d^{a_d} y_1^{b_1}...y_d^{b_d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

/// Multidegree `n` with `n_i = a_i + b_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(pub Vec<u32>);

/// Bi-weight `(p, q)`: number of `x`-letters and of `y`-letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiWeight {
    pub p: u32,
    pub q: u32,
}

impl BiWeight {
    pub fn new(p: u32, q: u32) -> Self {
        BiWeight { p, q }
    }
}

impl fmt::Display for BiWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl MultiDegree {
    pub fn new(n: Vec<u32>) -> Self {
        MultiDegree(n)
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    /// `|n|`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `Π (n_i + 1)`, the dimension of the component.
    pub fn component_dimension(&self) -> u64 {
        self.0.iter().map(|&k| k as u64 + 1).product()
    }

    /// All multidegrees of length `d` and total `t`, largest `n_1` first.
    pub fn with_total(d: usize, t: u32) -> Vec<MultiDegree> {
        fn rec(d: usize, t: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
            if prefix.len() + 1 == d {
                prefix.push(t);
                out.push(MultiDegree(prefix.clone()));
                prefix.pop();
                return;
            }
            for k in (0..=t).rev() {
                prefix.push(k);
                rec(d, t - k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if d == 0 {
            if t == 0 {
                out.push(MultiDegree(Vec::new()));
            }
            return out;
        }
        rec(d, t, &mut Vec::with_capacity(d), &mut out);
        out
    }

    /// Multidegrees with `|n| <= max_total` and every `n_i <= cap`, in
    /// graded lexicographic order.
    pub fn up_to(d: usize, max_total: u32, cap: Option<u32>) -> Vec<MultiDegree> {
        (0..=max_total)
            .flat_map(|t| MultiDegree::with_total(d, t))
            .filter(|n| cap.is_none_or(|c| n.0.iter().all(|&k| k <= c)))
            .collect()
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

impl Monomial {
    /// The monomial `1` in `2d` variables.
    pub fn one(d: usize) -> Self {
        Monomial { exps: vec![0; 2 * d] }
    }

    pub fn from_exponents(a: &[u32], b: &[u32]) -> Self {
        assert_eq!(a.len(), b.len(), "x- and y-exponent vectors differ in length");
        let mut exps = Vec::with_capacity(2 * a.len());
        exps.extend_from_slice(a);
        exps.extend_from_slice(b);
        Monomial { exps }
    }

    pub fn x(d: usize, i: usize) -> Self {
        let mut m = Monomial::one(d);
        m.exps[i - 1] = 1;
        m
    }

    pub fn y(d: usize, i: usize) -> Self {
        let mut m = Monomial::one(d);
        m.exps[d + i - 1] = 1;
        m
    }

    pub fn d(&self) -> usize {
        self.exps.len() / 2
    }

    /// Exponents of `x_1..x_d`.
    pub fn a(&self) -> &[u32] {
        &self.exps[..self.d()]
    }

    /// Exponents of `y_1..y_d`.
    pub fn b(&self) -> &[u32] {
        &self.exps[self.d()..]
    }

    pub(crate) fn a_mut(&mut self) -> &mut [u32] {
        let d = self.d();
        &mut self.exps[..d]
    }

    pub(crate) fn b_mut(&mut self) -> &mut [u32] {
        let d = self.d();
        &mut self.exps[d..]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn multidegree(&self) -> MultiDegree {
        MultiDegree(self.a().iter().zip(self.b()).map(|(a, b)| a + b).collect())
    }

    pub fn biweight(&self) -> BiWeight {
        BiWeight {
            p: self.a().iter().sum(),
            q: self.b().iter().sum(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Canonical order: higher total degree first, then lexicographic on
/// `(a_1..a_d, b_1..b_d)` with larger exponents first. Sorting ascending by
/// this order puts the leading monomial first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of multidegree `n`, in canonical order.
pub fn component_basis(n: &MultiDegree) -> Vec<Monomial> {
    let d = n.d();
    let mut out = vec![Monomial::one(d)];
    for (i, &ni) in n.0.iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * (ni as usize + 1));
        for m in &out {
            for a in 0..=ni {
                let mut m = m.clone();
                m.a_mut()[i] = a;
                m.b_mut()[i] = ni - a;
                next.push(m);
            }
        }
        out = next;
    }
    out.sort();
    out
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let d = self.d();
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let (letter, index) = if k < d { ('x', k + 1) } else { ('y', k - d + 1) };
            write!(f, "{letter}{index}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
