//! The derivation `δ(x_i) = 0, δ(y_i) = x_i`, its opposite `δ*`, the
//! unipotent action `exp(tδ)` and the diagonal `GL_2` substitution action.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{BiWeight, Monomial};
use crate::polynomial::Polynomial;
use crate::rational::{int, Rational};

fn shift_monomial(m: &Monomial, y_to_x: bool) -> Polynomial {
    let d = m.d();
    let mut out = Polynomial::zero(d);
    for i in 0..d {
        let e = if y_to_x { m.b()[i] } else { m.a()[i] };
        if e == 0 {
            continue;
        }
        let mut m2 = m.clone();
        if y_to_x {
            m2.b_mut()[i] -= 1;
            m2.a_mut()[i] += 1;
        } else {
            m2.a_mut()[i] -= 1;
            m2.b_mut()[i] += 1;
        }
        out.add_term(m2, int(e as i64));
    }
    out
}

/// `δ`: replaces one `y_i` by `x_i`, summed over all occurrences.
pub fn delta(f: &Polynomial) -> Polynomial {
    f.map_linear(|m| shift_monomial(m, true))
}

/// `δ*`: replaces one `x_i` by `y_i`, summed over all occurrences.
pub fn delta_star(f: &Polynomial) -> Polynomial {
    f.map_linear(|m| shift_monomial(m, false))
}

pub fn is_constant(f: &Polynomial) -> bool {
    delta(f).is_zero()
}

/// `exp(tδ)(f) = Σ_k t^k δ^k(f) / k!`. The series is finite because `δ`
/// lowers the `y`-degree.
pub fn exp_action(f: &Polynomial, t: &Rational) -> Polynomial {
    let mut out = f.clone();
    let mut term = f.clone();
    let mut k = 0i64;
    loop {
        term = delta(&term);
        if term.is_zero() {
            break;
        }
        k += 1;
        term = term.scale(&(t / int(k)));
        out = &out + &term;
    }
    out
}

/// An invertible 2×2 matrix `((g11, g12), (g21, g22))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GL2Element {
    g11: Rational,
    g12: Rational,
    g21: Rational,
    g22: Rational,
}

impl GL2Element {
    pub fn new(g11: Rational, g12: Rational, g21: Rational, g22: Rational) -> Result<Self> {
        let g = GL2Element { g11, g12, g21, g22 };
        if g.determinant().is_zero() {
            return Err(Error::Singular);
        }
        Ok(g)
    }

    pub fn identity() -> Self {
        GL2Element {
            g11: Rational::one(),
            g12: Rational::zero(),
            g21: Rational::zero(),
            g22: Rational::one(),
        }
    }

    /// `((1, t), (0, 1))`, which acts as `exp(tδ)`.
    pub fn unipotent(t: Rational) -> Self {
        GL2Element { g12: t, ..GL2Element::identity() }
    }

    pub fn determinant(&self) -> Rational {
        &self.g11 * &self.g22 - &self.g12 * &self.g21
    }

    pub fn entries(&self) -> [[&Rational; 2]; 2] {
        [[&self.g11, &self.g12], [&self.g21, &self.g22]]
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &GL2Element) -> GL2Element {
        GL2Element {
            g11: &self.g11 * &other.g11 + &self.g12 * &other.g21,
            g12: &self.g11 * &other.g12 + &self.g12 * &other.g22,
            g21: &self.g21 * &other.g11 + &self.g22 * &other.g21,
            g22: &self.g21 * &other.g12 + &self.g22 * &other.g22,
        }
    }
}

/// Substitutes `x_i ↦ g11·x_i + g21·y_i` and `y_i ↦ g12·x_i + g22·y_i` for
/// every `i`. With this convention `gl2_action(g·h, f)` equals
/// `gl2_action(g, gl2_action(h, f))`.
pub fn gl2_action(g: &GL2Element, f: &Polynomial) -> Polynomial {
    let d = f.d();
    let lin = |i: usize, cx: &Rational, cy: &Rational| {
        Polynomial::from_terms(d, [(Monomial::x(d, i), cx.clone()), (Monomial::y(d, i), cy.clone())])
    };
    let images_x: Vec<Polynomial> = (1..=d).map(|i| lin(i, &g.g11, &g.g21)).collect();
    let images_y: Vec<Polynomial> = (1..=d).map(|i| lin(i, &g.g12, &g.g22)).collect();
    f.map_linear(|m| {
        let mut out = Polynomial::one(d);
        for i in 0..d {
            if m.a()[i] > 0 {
                out = &out * &images_x[i].pow(m.a()[i]);
            }
            if m.b()[i] > 0 {
                out = &out * &images_y[i].pow(m.b()[i]);
            }
        }
        out
    })
}

/// Returns `c` with `a = c·b`, if such a scalar exists. `b` must be nonzero.
pub fn scalar_ratio(a: &Polynomial, b: &Polynomial) -> Option<Rational> {
    let (m, cb) = b.leading_term()?;
    let c = a.coefficient(m) / cb;
    (b.scale(&c) == *a).then_some(c)
}

/// The `δ`-coefficient along a ladder: `δ(w_i) = c_i · w_{i-1}` for the
/// unnormalized `w_i = (δ*)^i(w_0)`, where `span = λ₁ − λ₂`.
pub fn ladder_coefficient(span: u32, i: u32) -> u64 {
    assert!(1 <= i && i <= span, "ladder index {i} outside 1..={span}");
    i as u64 * (span - i + 1) as u64
}

/// A `δ`-constant `w_0` of bi-weight `(λ₁, λ₂)` and its images
/// `w_i = (δ*)^i(w_0)` for `i = 0..=λ₁−λ₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVectorChain {
    weight: BiWeight,
    ladder: Vec<Polynomial>,
}

impl WeightVectorChain {
    pub fn base(&self) -> &Polynomial {
        &self.ladder[0]
    }

    pub fn ladder(&self) -> &[Polynomial] {
        &self.ladder
    }

    /// `(λ₁, λ₂)`.
    pub fn weight(&self) -> BiWeight {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.ladder.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `c_1..c_{λ₁−λ₂}` measured on the ladder, or `None` if some `δ(w_i)` is
    /// not a nonzero multiple of `w_{i-1}`.
    pub fn raising_coefficients(&self) -> Option<Vec<Rational>> {
        self.ladder
            .windows(2)
            .map(|w| scalar_ratio(&delta(&w[1]), &w[0]).filter(|c| !c.is_zero()))
            .collect()
    }
}

/// Builds the ladder `(δ*)^i(w0)` until it vanishes.
pub fn build_chain(w0: &Polynomial) -> Result<WeightVectorChain> {
    if w0.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let weight = w0.biweight().ok_or(Error::NotBihomogeneous)?;
    let image = delta(w0);
    if !image.is_zero() {
        return Err(Error::NotConstant { image });
    }
    let mut ladder = vec![w0.clone()];
    loop {
        let next = delta_star(ladder.last().unwrap());
        if next.is_zero() {
            break;
        }
        ladder.push(next);
    }
    debug_assert!(weight.p >= weight.q);
    Ok(WeightVectorChain { weight, ladder })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse_with_dim(s, 3).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&p("y1")), p("x1"));
        assert_eq!(delta(&p("x1^3")), Polynomial::zero(3));
        assert_eq!(delta(&p("x1*y2 - x2*y1")), Polynomial::zero(3));
        assert_eq!(delta(&p("y1^2*y2")), p("2*x1*y1*y2 + x2*y1^2"));
    }

    #[test]
    fn delta_star_examples() {
        assert_eq!(delta_star(&p("x1")), p("y1"));
        assert_eq!(delta_star(&p("x1*y2 - x2*y1")), Polynomial::zero(3));
        assert_eq!(delta_star(&p("x1^2")), p("2*x1*y1"));
    }

    #[test]
    fn is_constant_examples() {
        assert!(is_constant(&p("x1*y2 - x2*y1")));
        assert!(!is_constant(&p("y1")));
        // x1*u23 + 5*u12*x3, written out
        let g = p("x1*x2*y3 - x1*x3*y2 + 5*x1*x3*y2 - 5*x2*x3*y1");
        assert!(is_constant(&g));
    }

    #[test]
    fn exp_action_examples() {
        let t = ratio(7, 3);
        assert_eq!(exp_action(&p("y1"), &t), p("y1 + 7/3*x1"));
        let u = p("x1*y2 - x2*y1");
        assert_eq!(exp_action(&u, &t), u);
        let f = p("y1^3*x2 - 2*y3");
        assert_eq!(exp_action(&f, &Rational::zero()), f);
    }

    #[test]
    fn exp_action_agrees_with_direct_substitution() {
        // y_i -> y_i + t x_i performed by hand on y1^2*y2
        let t = ratio(-3, 5);
        let f = p("y1^2*y2");
        let y1t = p("y1") + p("x1").scale(&t);
        let y2t = p("y2") + p("x2").scale(&t);
        assert_eq!(exp_action(&f, &t), y1t.pow(2) * y2t);
    }

    #[test]
    fn gl2_examples() {
        let f = p("x1^2*y3 - 4/3*y1*y2 + x2");
        assert_eq!(gl2_action(&GL2Element::identity(), &f), f);
        let t = ratio(5, 2);
        assert_eq!(gl2_action(&GL2Element::unipotent(t.clone()), &f), exp_action(&f, &t));
        let g = GL2Element::new(int(2), int(3), ratio(1, 2), int(-1)).unwrap();
        let u = p("x1*y2 - x2*y1");
        // det = 2*(-1) - 3*(1/2) = -7/2
        assert_eq!(g.determinant(), ratio(-7, 2));
        assert_eq!(gl2_action(&g, &u), u.scale(&ratio(-7, 2)));
    }

    #[test]
    fn singular_matrix_rejected() {
        assert_eq!(GL2Element::new(int(1), int(2), int(2), int(4)), Err(Error::Singular));
    }

    #[test]
    fn gl2_composition_order() {
        let g = GL2Element::new(int(1), int(2), int(0), int(1)).unwrap();
        let h = GL2Element::new(int(0), int(1), int(1), int(0)).unwrap();
        let f = p("x1^2*y2 + y1");
        let lhs = gl2_action(&g.compose(&h), &f);
        assert_eq!(lhs, gl2_action(&g, &gl2_action(&h, &f)));
        assert_ne!(lhs, gl2_action(&h, &gl2_action(&g, &f)));
    }

    #[test]
    fn chain_examples() {
        let c = build_chain(&p("x1")).unwrap();
        assert_eq!(c.ladder(), &[p("x1"), p("y1")]);
        assert_eq!(c.raising_coefficients().unwrap(), vec![int(1)]);

        let c = build_chain(&p("x1*y2 - x2*y1")).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.weight(), BiWeight::new(1, 1));

        let c = build_chain(&p("x1^2")).unwrap();
        assert_eq!(c.ladder(), &[p("x1^2"), p("2*x1*y1"), p("2*y1^2")]);
        assert_eq!(c.raising_coefficients().unwrap(), vec![int(2), int(2)]);
    }

    #[test]
    fn chain_rejects_bad_input() {
        assert!(matches!(build_chain(&p("y1")), Err(Error::NotConstant { .. })));
        assert_eq!(build_chain(&p("x1 + x1*x2")), Err(Error::NotBihomogeneous));
        assert_eq!(build_chain(&Polynomial::zero(3)), Err(Error::ZeroPolynomial));
    }

    /// Brute-force confirmation of the closed form for the ladder
    /// coefficients on pure powers and on products with determinants.
    #[test]
    fn ladder_coefficient_closed_form_matches_brute_force() {
        let u = p("x1*y2 - x2*y1");
        for a in 0..=6u32 {
            for b in 0..=2u32 {
                let w0 = p("x1").pow(a) * p("x3").pow(b) * u.pow(b % 2 + 1);
                let chain = build_chain(&w0).unwrap();
                let span = chain.weight().p - chain.weight().q;
                let measured = chain.raising_coefficients().unwrap();
                let expected: Vec<Rational> =
                    (1..=span).map(|i| int(ladder_coefficient(span, i) as i64)).collect();
                assert_eq!(measured, expected);
            }
        }
    }
}
