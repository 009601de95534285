//! Tensor words over the letters `x_i, y_i`, the derivation `Δ` of the
//! tensor algebra, the place-permutation action and highest weight vectors.
//!
//! `V^(n) = V_1^{⊗n_1} ⊗ ... ⊗ V_d^{⊗n_d}`: position `k` of a word in
//! `V^(n)` carries a letter of the block `V_i` it falls in. Elements built
//! by [`standard_hwv_basis`] respect that layout; general elements only need
//! to respect the content `n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{nullspace, ExactMatrix};
use crate::monomial::{BiWeight, Monomial, MultiDegree};
use crate::polynomial::Polynomial;
use crate::rational::{int, Rational};
use crate::tableau::{standard_tableaux, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    X,
    Y,
}

/// `x_i` or `y_i`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: usize,
}

impl Letter {
    pub fn x(index: usize) -> Self {
        Letter { kind: LetterKind::X, index }
    }

    pub fn y(index: usize) -> Self {
        Letter { kind: LetterKind::Y, index }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            LetterKind::X => 'x',
            LetterKind::Y => 'y',
        };
        write!(f, "{c}{}", self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord(pub Vec<Letter>);

impl TensorWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Count of letters per index `1..=d`.
    pub fn content(&self, d: usize) -> Vec<u32> {
        let mut c = vec![0; d];
        for l in &self.0 {
            c[l.index - 1] += 1;
        }
        c
    }

    pub fn biweight(&self) -> BiWeight {
        let q = self.0.iter().filter(|l| l.kind == LetterKind::Y).count() as u32;
        BiWeight::new(self.0.len() as u32 - q, q)
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Linear combination of words of one fixed content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    content: MultiDegree,
    terms: BTreeMap<TensorWord, Rational>,
}

impl TensorElement {
    pub fn zero(content: MultiDegree) -> Self {
        TensorElement { content, terms: BTreeMap::new() }
    }

    pub fn from_word(d: usize, word: TensorWord) -> Result<Self> {
        let content = MultiDegree(validated_content(d, &word)?);
        let mut e = TensorElement::zero(content);
        e.terms.insert(word, Rational::one());
        Ok(e)
    }

    pub fn content(&self) -> &MultiDegree {
        &self.content
    }

    pub fn d(&self) -> usize {
        self.content.d()
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

    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &TensorWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c·word`, rejecting words of a different content.
    pub fn add_term(&mut self, word: TensorWord, c: Rational) -> Result<()> {
        let found = validated_content(self.d(), &word)?;
        if found != self.content.0 {
            return Err(Error::ContentMismatch { expected: self.content.0.clone(), found });
        }
        self.push(word, c);
        Ok(())
    }

    fn push(&mut self, word: TensorWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
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

    pub fn checked_add(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.content != other.content {
            return Err(Error::ContentMismatch {
                expected: self.content.0.clone(),
                found: other.content.0.clone(),
            });
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.push(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        let mut out = TensorElement::zero(self.content.clone());
        for (w, v) in &self.terms {
            out.push(w.clone(), v * c);
        }
        out
    }

    /// Common bi-weight of all words, if there is one.
    pub fn biweight(&self) -> Option<BiWeight> {
        let mut it = self.terms.keys().map(TensorWord::biweight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

fn validated_content(d: usize, word: &TensorWord) -> Result<Vec<u32>> {
    if let Some(l) = word.0.iter().find(|l| l.index == 0 || l.index > d) {
        return Err(Error::IndexOutOfRange { index: l.index, d });
    }
    Ok(word.content(d))
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

/// `Δ(x_i) = 0, Δ(y_i) = x_i`, extended to words as a derivation.
pub fn delta_tensor(w: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(w.content.clone());
    for (word, c) in &w.terms {
        for (k, l) in word.0.iter().enumerate() {
            if l.kind == LetterKind::Y {
                let mut w2 = word.clone();
                w2.0[k] = Letter::x(l.index);
                out.push(w2, c.clone());
            }
        }
    }
    out
}

/// Opposite derivation `x_i ↦ y_i, y_i ↦ 0` on words.
pub fn delta_star_tensor(w: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero(w.content.clone());
    for (word, c) in &w.terms {
        for (k, l) in word.0.iter().enumerate() {
            if l.kind == LetterKind::X {
                let mut w2 = word.clone();
                w2.0[k] = Letter::y(l.index);
                out.push(w2, c.clone());
            }
        }
    }
    out
}

/// A permutation of `0..N`, stored as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// From 1-based images `σ(1), ..., σ(N)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(images.to_vec()));
        }
        Permutation::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }
}

/// Place permutation: `(v_1 ⊗ ... ⊗ v_N) ↦ v_{σ(1)} ⊗ ... ⊗ v_{σ(N)}`.
///
/// Composition law: permuting by `σ` and then by `τ` equals permuting by
/// `σ ∘ τ`.
pub fn place_permutation(w: &TensorElement, sigma: &Permutation) -> Result<TensorElement> {
    let mut out = TensorElement::zero(w.content.clone());
    for (word, c) in &w.terms {
        if word.len() != sigma.len() {
            return Err(Error::LengthMismatch { perm: sigma.len(), word: word.len() });
        }
        let permuted = TensorWord((0..word.len()).map(|i| word.0[sigma.apply(i)]).collect());
        out.push(permuted, c.clone());
    }
    Ok(out)
}

/// Pairs `(i_a, j_a)` at positions `(2a−1, 2a)` followed by single `x_{k_b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingPlan {
    pub pairs: Vec<(usize, usize)>,
    pub singles: Vec<usize>,
}

impl PairingPlan {
    /// `(λ₁, λ₂) = (pairs + singles, pairs)`.
    pub fn shape(&self) -> Partition {
        let l2 = self.pairs.len() as u32;
        Partition { l1: l2 + self.singles.len() as u32, l2 }
    }

    pub fn content(&self, d: usize) -> Vec<u32> {
        let mut c = vec![0; d];
        for &(i, j) in &self.pairs {
            c[i - 1] += 1;
            c[j - 1] += 1;
        }
        for &k in &self.singles {
            c[k - 1] += 1;
        }
        c
    }

    fn validate(&self, d: usize) -> Result<()> {
        let all = self.pairs.iter().flat_map(|&(i, j)| [i, j]).chain(self.singles.iter().copied());
        for i in all {
            if i == 0 || i > d {
                return Err(Error::InvalidPlan(format!("index {i} out of range 1..={d}")));
            }
        }
        Ok(())
    }
}

/// `(x_{i_1}⊗y_{j_1} − y_{i_1}⊗x_{j_1}) ⊗ ... ⊗ x_{k_1} ⊗ ...`, expanded into
/// its `2^{λ₂}` words.
pub fn special_hwv(d: usize, plan: &PairingPlan) -> Result<TensorElement> {
    plan.validate(d)?;
    let content = MultiDegree(plan.content(d));
    let mut partial: Vec<(Vec<Letter>, Rational)> = vec![(Vec::new(), Rational::one())];
    for &(i, j) in &plan.pairs {
        let mut next = Vec::with_capacity(partial.len() * 2);
        for (w, c) in partial {
            let mut a = w.clone();
            a.extend([Letter::x(i), Letter::y(j)]);
            next.push((a, c.clone()));
            let mut b = w;
            b.extend([Letter::y(i), Letter::x(j)]);
            next.push((b, -c));
        }
        partial = next;
    }
    let mut out = TensorElement::zero(content);
    for (mut w, c) in partial {
        w.extend(plan.singles.iter().map(|&k| Letter::x(k)));
        out.push(TensorWord(w), c);
    }
    Ok(out)
}

/// Variable index carried by each position of `V^(n)`.
pub fn position_indices(n: &MultiDegree) -> Vec<usize> {
    n.as_slice()
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat_n(i + 1, k as usize))
        .collect()
}

/// The permutation `σ` read off a standard tableau: `σ(2a−1), σ(2a)` are the
/// top and bottom of column `a ≤ λ₂`, then the remaining first-row cells
/// left to right.
pub fn tableau_permutation(t: &crate::tableau::StandardTableau) -> Permutation {
    let l2 = t.row2.len();
    let mut images = Vec::with_capacity(t.row1.len() + l2);
    for a in 0..l2 {
        images.push(t.row1[a] as usize);
        images.push(t.row2[a] as usize);
    }
    images.extend(t.row1[l2..].iter().map(|&e| e as usize));
    Permutation::from_one_based(&images).expect("a standard tableau yields a permutation")
}

/// One highest weight vector `w(λ)^(1) σ^{-1}` in `V^(n)` per standard
/// tableau of shape `λ`.
pub fn standard_hwv_basis(n: &MultiDegree, lambda: &[u32]) -> Result<Vec<TensorElement>> {
    let shape = Partition::from_parts(lambda)?;
    if shape.size() != n.total() {
        return Err(Error::SizeMismatch { partition: shape.size(), content: n.total() });
    }
    let idx = position_indices(n);
    let d = n.d();
    standard_tableaux(shape)
        .iter()
        .map(|t| {
            let sigma = tableau_permutation(t);
            let at = |k: usize| idx[sigma.apply(k)];
            let l2 = shape.l2 as usize;
            let plan = PairingPlan {
                pairs: (0..l2).map(|a| (at(2 * a), at(2 * a + 1))).collect(),
                singles: (2 * l2..idx.len()).map(at).collect(),
            };
            // the letter at slot m of w(λ)^(1) moves to slot σ(m)
            place_permutation(&special_hwv(d, &plan)?, &sigma.inverse())
        })
        .collect()
}

/// Multiplies out the letters of each word.
pub fn project_to_polynomial(w: &TensorElement) -> Polynomial {
    let d = w.d();
    let mut out = Polynomial::zero(d);
    for (word, c) in &w.terms {
        let mut m = Monomial::one(d);
        for l in &word.0 {
            match l.kind {
                LetterKind::X => m.a_mut()[l.index - 1] += 1,
                LetterKind::Y => m.b_mut()[l.index - 1] += 1,
            }
        }
        out.add_term(m, c.clone());
    }
    out
}

/// Words of `V^(n)` (position layout) with exactly `q` letters `y`.
pub fn weight_words(n: &MultiDegree, q: u32) -> Vec<TensorWord> {
    let idx = position_indices(n);
    let len = idx.len();
    let mut out = Vec::new();
    fn rec(k: usize, left: u32, idx: &[usize], cur: &mut Vec<Letter>, out: &mut Vec<TensorWord>) {
        if k == idx.len() {
            if left == 0 {
                out.push(TensorWord(cur.clone()));
            }
            return;
        }
        if (idx.len() - k) as u32 > left {
            cur.push(Letter::x(idx[k]));
            rec(k + 1, left, idx, cur, out);
            cur.pop();
        }
        if left > 0 {
            cur.push(Letter::y(idx[k]));
            rec(k + 1, left - 1, idx, cur, out);
            cur.pop();
        }
    }
    if q as usize <= len {
        rec(0, q, &idx, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

/// Coordinates of `elements` (columns) over `words` (rows).
pub fn coordinate_matrix(words: &[TensorWord], elements: &[TensorElement]) -> ExactMatrix {
    let index: HashMap<&TensorWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = ExactMatrix::zeros(words.len(), elements.len());
    for (j, e) in elements.iter().enumerate() {
        for (w, c) in e.terms() {
            let i = *index.get(w).expect("element has a word outside the given list");
            m.set(i, j, c.clone());
        }
    }
    m
}

/// Basis of the `Δ`-constants of weight `λ` in `V^(n)`.
pub fn hwv_space(n: &MultiDegree, shape: Partition) -> Vec<TensorElement> {
    let sources = weight_words(n, shape.l2);
    let targets = if shape.l2 == 0 { Vec::new() } else { weight_words(n, shape.l2 - 1) };
    let index: HashMap<&TensorWord, usize> = targets.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = ExactMatrix::zeros(targets.len(), sources.len());
    for (j, w) in sources.iter().enumerate() {
        for (k, l) in w.0.iter().enumerate() {
            if l.kind == LetterKind::Y {
                let mut w2 = w.clone();
                w2.0[k] = Letter::x(l.index);
                m.add_to(index[&w2], j, int(1));
            }
        }
    }
    nullspace(&m)
        .into_iter()
        .map(|v| {
            let mut e = TensorElement::zero(n.clone());
            for (w, c) in sources.iter().zip(v) {
                e.push(w.clone(), c);
            }
            e
        })
        .collect()
}
