//! The generators `x_i` and `u_ij = x_i y_j − x_j y_i`, the products
//! `X^p U^q` of a multidegree, their span, and decomposition of constants
//! over them.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::derivation::delta;
use crate::error::{Error, Result};
use crate::linalg::{rank, ExactMatrix, LinearSolver};
use crate::monomial::{component_basis, Monomial, MultiDegree};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

fn check_index(d: usize, i: usize) -> Result<()> {
    if i == 0 || i > d {
        Err(Error::IndexOutOfRange { index: i, d })
    } else {
        Ok(())
    }
}

/// `u_ij = x_i y_j − x_j y_i`; `u_ji = −u_ij`.
pub fn make_u(d: usize, i: usize, j: usize) -> Result<Polynomial> {
    check_index(d, i)?;
    check_index(d, j)?;
    if i == j {
        return Err(Error::DegenerateDeterminant(i));
    }
    Ok(Polynomial::x(d, i) * Polynomial::y(d, j) - Polynomial::x(d, j) * Polynomial::y(d, i))
}

/// Pairs `(i, j)`, `1 ≤ i < j ≤ d`, in lexicographic order.
pub fn index_pairs(d: usize) -> Vec<(usize, usize)> {
    (1..=d).flat_map(|i| (i + 1..=d).map(move |j| (i, j))).collect()
}

/// Exponent data of `x_1^{p_1}...x_d^{p_d} Π_{i<j} u_ij^{q_ij}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProductTerm {
    pub p: Vec<u32>,
    /// `q_ij` for the pairs of [`index_pairs`], in that order.
    pub q: Vec<u32>,
}

impl ProductTerm {
    pub fn d(&self) -> usize {
        self.p.len()
    }

    pub fn q_exp(&self, i: usize, j: usize) -> u32 {
        let (i, j) = (i.min(j), i.max(j));
        let d = self.d();
        // offset of row i in the flattened strict upper triangle
        let row = (i - 1) * d - (i - 1) * i / 2;
        self.q[row + (j - i - 1)]
    }

    pub fn multidegree(&self) -> MultiDegree {
        let mut n = self.p.clone();
        for ((i, j), &e) in index_pairs(self.d()).into_iter().zip(&self.q) {
            n[i - 1] += e;
            n[j - 1] += e;
        }
        MultiDegree(n)
    }
}

fn u_name(i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("u{i}{j}")
    } else {
        format!("u({i},{j})")
    }
}

impl fmt::Display for ProductTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.p.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{e}", i + 1)),
            }
        }
        for ((i, j), &e) in index_pairs(self.d()).into_iter().zip(&self.q) {
            match e {
                0 => {}
                1 => parts.push(u_name(i, j)),
                _ => parts.push(format!("{}^{e}", u_name(i, j))),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Every product of multidegree `n`, each once. Exponents of `u_ij` are
/// assigned pair by pair in lexicographic order, smallest first; the
/// remaining degree goes to the `x_i`.
pub fn enumerate_products(n: &MultiDegree) -> Vec<ProductTerm> {
    fn rec(k: usize, pairs: &[(usize, usize)], rem: &mut Vec<u32>, q: &mut Vec<u32>, out: &mut Vec<ProductTerm>) {
        if k == pairs.len() {
            out.push(ProductTerm { p: rem.clone(), q: q.clone() });
            return;
        }
        let (i, j) = pairs[k];
        let max = rem[i - 1].min(rem[j - 1]);
        for e in 0..=max {
            rem[i - 1] -= e;
            rem[j - 1] -= e;
            q.push(e);
            rec(k + 1, pairs, rem, q, out);
            q.pop();
            rem[i - 1] += e;
            rem[j - 1] += e;
        }
    }
    let pairs = index_pairs(n.d());
    let mut out = Vec::new();
    rec(0, &pairs, &mut n.0.clone(), &mut Vec::with_capacity(pairs.len()), &mut out);
    out
}

pub fn expand(t: &ProductTerm) -> Polynomial {
    let d = t.d();
    let mut m = Monomial::one(d);
    m.a_mut().copy_from_slice(&t.p);
    let mut out = Polynomial::monomial(m, Rational::one());
    for ((i, j), &e) in index_pairs(d).into_iter().zip(&t.q) {
        if e > 0 {
            out = &out * &make_u(d, i, j).expect("pair indices are valid").pow(e);
        }
    }
    out
}

/// Coefficients of `polys` (columns) over the monomials `basis` (rows).
pub fn coefficient_matrix(basis: &[Monomial], polys: &[Polynomial]) -> ExactMatrix {
    let index: std::collections::HashMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut mat = ExactMatrix::zeros(basis.len(), polys.len());
    for (j, f) in polys.iter().enumerate() {
        for (m, c) in f.terms() {
            let i = *index.get(m).expect("polynomial has a monomial outside the basis");
            mat.set(i, j, c.clone());
        }
    }
    mat
}

/// Rank of the expanded products of multidegree `n`.
pub fn span_dimension(n: &MultiDegree) -> usize {
    let products: Vec<Polynomial> = enumerate_products(n).iter().map(expand).collect();
    rank(&coefficient_matrix(&component_basis(n), &products))
}

/// `u_ij u_kl − u_ik u_jl + u_il u_jk`, which expands to zero.
pub fn pluecker(d: usize, i: usize, j: usize, k: usize, l: usize) -> Result<Polynomial> {
    if !(i < j && j < k && k < l) {
        return Err(Error::NotIncreasing(vec![i, j, k, l]));
    }
    check_index(d, i)?;
    check_index(d, l)?;
    let u = |a, b| make_u(d, a, b).expect("indices checked");
    Ok(u(i, j) * u(k, l) - u(i, k) * u(j, l) + u(i, l) * u(j, k))
}

/// `f = Σ c_t · expand(t)`, nonzero coefficients only, in product order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: MultiDegree,
    pub terms: Vec<(ProductTerm, Rational)>,
}

impl Certificate {
    pub fn expand(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.n.d());
        for (t, c) in &self.terms {
            out = &out + &expand(t).scale(c);
        }
        out
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "({c})*{t}")?;
            }
        }
        Ok(())
    }
}

/// Solver for one multidegree, reusable across many inputs.
#[derive(Debug, Clone)]
pub struct Decomposer {
    n: MultiDegree,
    products: Vec<ProductTerm>,
    basis: Vec<Monomial>,
    solver: LinearSolver,
}

impl Decomposer {
    pub fn new(n: &MultiDegree) -> Self {
        let products = enumerate_products(n);
        let expanded: Vec<Polynomial> = products.iter().map(expand).collect();
        let basis = component_basis(n);
        let solver = LinearSolver::new(&coefficient_matrix(&basis, &expanded));
        Decomposer { n: n.clone(), products, basis, solver }
    }

    pub fn products(&self) -> &[ProductTerm] {
        &self.products
    }

    pub fn span_dimension(&self) -> usize {
        self.solver.rank()
    }

    /// Products selected as pivots; every certificate is supported on them.
    pub fn pivot_products(&self) -> Vec<&ProductTerm> {
        self.solver.pivot_columns().iter().map(|&c| &self.products[c]).collect()
    }

    pub fn decompose(&self, f: &Polynomial) -> Result<Certificate> {
        if f.d() != self.n.d() {
            return Err(Error::DimensionMismatch { left: f.d(), right: self.n.d() });
        }
        if f.is_zero() {
            return Ok(Certificate { n: self.n.clone(), terms: Vec::new() });
        }
        if f.multidegree().as_ref() != Some(&self.n) {
            return Err(Error::NotHomogeneous);
        }
        let image = delta(f);
        if !image.is_zero() {
            return Err(Error::NotConstant { image });
        }
        let b: Vec<Rational> = self.basis.iter().map(|m| f.coefficient(m)).collect();
        let Some(c) = self.solver.solve(&b) else {
            return Err(Error::ConjectureViolation { f: f.clone(), n: self.n.to_string() });
        };
        let terms = self
            .products
            .iter()
            .cloned()
            .zip(c)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(Certificate { n: self.n.clone(), terms })
    }
}

/// Writes a multidegree-homogeneous constant as a combination of products.
pub fn decompose(f: &Polynomial) -> Result<Certificate> {
    if f.is_zero() {
        return Ok(Certificate { n: MultiDegree(vec![0; f.d()]), terms: Vec::new() });
    }
    let n = f.multidegree().ok_or(Error::NotHomogeneous)?;
    Decomposer::new(&n).decompose(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::is_constant;
    use crate::rational::int;

    fn p(s: &str, d: usize) -> Polynomial {
        Polynomial::parse_with_dim(s, d).unwrap()
    }

    #[test]
    fn make_u_examples() {
        assert_eq!(make_u(2, 1, 2).unwrap(), p("x1*y2 - x2*y1", 2));
        assert_eq!(make_u(2, 2, 1).unwrap(), -p("x1*y2 - x2*y1", 2));
        assert_eq!(make_u(3, 2, 2), Err(Error::DegenerateDeterminant(2)));
        assert!(make_u(3, 1, 4).is_err());
        for d in 2..=6 {
            for i in 1..=d {
                for j in 1..=d {
                    if i != j {
                        let u = make_u(d, i, j).unwrap();
                        assert!(is_constant(&u));
                        assert_eq!(u, -make_u(d, j, i).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn q_exp_indexing() {
        let t = ProductTerm { p: vec![0; 4], q: vec![1, 2, 3, 4, 5, 6] };
        let pairs = index_pairs(4);
        for (k, (i, j)) in pairs.into_iter().enumerate() {
            assert_eq!(t.q_exp(i, j), k as u32 + 1);
            assert_eq!(t.q_exp(j, i), k as u32 + 1);
        }
    }

    #[test]
    fn enumerate_examples() {
        let ts = enumerate_products(&MultiDegree(vec![1, 1]));
        assert_eq!(
            ts,
            vec![ProductTerm { p: vec![1, 1], q: vec![0] }, ProductTerm { p: vec![0, 0], q: vec![1] }]
        );
        let ts = enumerate_products(&MultiDegree(vec![0, 0, 0]));
        assert_eq!(ts, vec![ProductTerm { p: vec![0, 0, 0], q: vec![0, 0, 0] }]);
        let ts = enumerate_products(&MultiDegree(vec![1, 1, 2]));
        let shown: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, ["x1*x2*x3^2", "x1*x3*u23", "x2*x3*u13", "u13*u23", "x3^2*u12"]);
    }

    #[test]
    fn expand_examples() {
        let t = ProductTerm { p: vec![1, 0, 0], q: vec![0, 0, 1] };
        assert_eq!(expand(&t), p("x1*x2*y3 - x1*x3*y2", 3));
        assert_eq!(expand(&ProductTerm { p: vec![0, 0], q: vec![0] }), Polynomial::one(2));
        let t = ProductTerm { p: vec![0, 0], q: vec![2] };
        assert_eq!(expand(&t), p("x1^2*y2^2 - 2*x1*x2*y1*y2 + x2^2*y1^2", 2));
    }

    #[test]
    fn span_examples() {
        assert_eq!(span_dimension(&MultiDegree(vec![1, 1])), 2);
        let n = MultiDegree(vec![1, 1, 1, 1]);
        assert_eq!(enumerate_products(&n).len(), 10);
        assert_eq!(span_dimension(&n), 6);
        for k in 0..=6 {
            assert_eq!(span_dimension(&MultiDegree(vec![k])), 1);
        }
    }

    #[test]
    fn pluecker_vanishes() {
        assert!(pluecker(4, 1, 2, 3, 4).unwrap().is_zero());
        assert_eq!(pluecker(4, 1, 3, 2, 4), Err(Error::NotIncreasing(vec![1, 3, 2, 4])));
        assert!(pluecker(4, 1, 2, 3, 5).is_err());
        let u = |i, j| make_u(4, i, j).unwrap();
        let prods = [u(1, 2) * u(3, 4), u(1, 3) * u(2, 4), u(1, 4) * u(2, 3)];
        for a in 0..3 {
            assert!(!prods[a].is_zero());
            for b in a + 1..3 {
                assert_ne!(prods[a], prods[b]);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let c = decompose(&p("x1*x2", 2)).unwrap();
        assert_eq!(c.terms, vec![(ProductTerm { p: vec![1, 1], q: vec![0] }, int(1))]);

        let u = |i, j| make_u(4, i, j).unwrap();
        let f = u(1, 2) * u(3, 4) - u(1, 3) * u(2, 4);
        assert_eq!(f, -(u(1, 4) * u(2, 3)));
        let c = decompose(&f).unwrap();
        assert_eq!(c.expand(), f);
        assert_eq!(c.to_string(), "(-1)*u14*u23");

        let c = decompose(&p("x1^2*x2*y3 - x1^2*x3*y2", 3)).unwrap();
        assert_eq!(c.to_string(), "x1^2*u23");

        assert!(matches!(decompose(&p("y1", 1)), Err(Error::NotConstant { .. })));
        assert_eq!(decompose(&p("x1 + x1*x2", 2)), Err(Error::NotHomogeneous));
        assert!(decompose(&Polynomial::zero(2)).unwrap().terms.is_empty());
    }
}
