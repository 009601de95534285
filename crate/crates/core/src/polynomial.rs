//! Sparse polynomials in `K[X_d, Y_d]` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{BiWeight, Monomial, MultiDegree};
use crate::rational::Rational;

/// A polynomial in `x_1..x_d, y_1..y_d`. Terms are kept in canonical
/// monomial order with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    d: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(d: usize) -> Self {
        Polynomial { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        Polynomial::constant(d, Rational::one())
    }

    pub fn constant(d: usize, c: Rational) -> Self {
        Polynomial::from_terms(d, [(Monomial::one(d), c)])
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let d = m.d();
        Polynomial::from_terms(d, [(m, c)])
    }

    /// `x_i`, 1-based.
    pub fn x(d: usize, i: usize) -> Self {
        assert!((1..=d).contains(&i), "index {i} out of range 1..={d}");
        Polynomial::monomial(Monomial::x(d, i), Rational::one())
    }

    /// `y_i`, 1-based.
    pub fn y(d: usize, i: usize) -> Self {
        assert!((1..=d).contains(&i), "index {i} out of range 1..={d}");
        Polynomial::monomial(Monomial::y(d, i), Rational::one())
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms(d: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(d);
        for (m, c) in terms {
            assert_eq!(m.d(), d, "monomial dimension differs from polynomial dimension");
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order, leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    /// Common multidegree of all terms, if there is one.
    pub fn multidegree(&self) -> Option<MultiDegree> {
        let mut it = self.terms.keys().map(Monomial::multidegree);
        let first = it.next()?;
        it.all(|n| n == first).then_some(first)
    }

    /// Common bi-weight of all terms, if there is one.
    pub fn biweight(&self) -> Option<BiWeight> {
        let mut it = self.terms.keys().map(Monomial::biweight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// Splits into multidegree-homogeneous parts.
    pub fn split_by_multidegree(&self) -> BTreeMap<MultiDegree, Polynomial> {
        let mut parts: BTreeMap<MultiDegree, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.multidegree())
                .or_insert_with(|| Polynomial::zero(self.d))
                .add_term(m.clone(), c.clone());
        }
        parts
    }

    fn check_dim(&self, other: &Polynomial) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.d, right: other.d })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = Polynomial::zero(self.d);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.d);
        }
        Polynomial {
            d: self.d,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.d);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Applies `f` to every monomial and sums the images scaled by the
    /// original coefficients.
    pub fn map_linear(&self, mut f: impl FnMut(&Monomial) -> Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.d);
        for (m, c) in &self.terms {
            for (m2, c2) in f(m).terms {
                out.add_term(m2, c * c2);
            }
        }
        out
    }

    /// Parses the text format, inferring `d` from the largest index (at
    /// least 1).
    pub fn parse(s: &str) -> Result<Polynomial> {
        let raw = crate::text::parse_terms(s)?;
        let d = raw
            .iter()
            .flat_map(|t| t.factors.iter().map(|f| f.index))
            .max()
            .unwrap_or(1)
            .max(1);
        crate::text::assemble(raw, d)
    }

    /// Parses the text format into a polynomial with exactly `d` pairs of
    /// variables.
    pub fn parse_with_dim(s: &str, d: usize) -> Result<Polynomial> {
        crate::text::assemble(crate::text::parse_terms(s)?, d)
    }
}

/// Printer for the text format: `x1*y2 - x2*y1`, `-5/2*x1^2 + 3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Polynomial::parse(s)
    }
}

// Operator forms panic on dimension mismatch; use the `checked_*` methods
// when operands come from untrusted input.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial dimension mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial dimension mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial dimension mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
