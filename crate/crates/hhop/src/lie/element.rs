//! Bracket monomials and their exact linear combinations.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::symbols::{DegeneracyWord, GeneratorSymbol, Letter};
use super::Scalar;
use crate::error::{HhopError, Result};

/// A leaf `s_I g` or a bracket of two monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LieMonomial {
    Leaf(Letter),
    Bracket {
        left: Arc<LieMonomial>,
        right: Arc<LieMonomial>,
        weight: u32,
        degree: u32,
    },
}

impl LieMonomial {
    pub fn leaf(letter: Letter) -> Self {
        LieMonomial::Leaf(letter)
    }

    pub fn bracket(left: LieMonomial, right: LieMonomial) -> Self {
        let weight = left.weight() + right.weight();
        let degree = left.degree() + right.degree();
        LieMonomial::Bracket {
            left: Arc::new(left),
            right: Arc::new(right),
            weight,
            degree,
        }
    }

    /// Number of leaves.
    pub fn weight(&self) -> u32 {
        match self {
            LieMonomial::Leaf(_) => 1,
            LieMonomial::Bracket { weight, .. } => *weight,
        }
    }

    /// Reduced degree; additive over brackets.
    pub fn degree(&self) -> u32 {
        match self {
            LieMonomial::Leaf(l) => l.degree(),
            LieMonomial::Bracket { degree, .. } => *degree,
        }
    }

    /// Leaves from left to right.
    pub fn letters(&self) -> Vec<&Letter> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters<'a>(&'a self, out: &mut Vec<&'a Letter>) {
        match self {
            LieMonomial::Leaf(l) => out.push(l),
            LieMonomial::Bracket { left, right, .. } => {
                left.collect_letters(out);
                right.collect_letters(out);
            }
        }
    }

    /// Checks that cached degrees and weights agree with the leaves.
    pub fn validate(&self) -> Result<()> {
        if let LieMonomial::Bracket {
            left,
            right,
            weight,
            degree,
        } = self
        {
            left.validate()?;
            right.validate()?;
            if *degree != left.degree() + right.degree()
                || *weight != left.weight() + right.weight()
            {
                return Err(HhopError::MalformedElement(format!(
                    "bracket degree {degree} is not the sum {} + {}",
                    left.degree(),
                    right.degree()
                )));
            }
        }
        Ok(())
    }

    /// True when some index lies in every leaf's degeneracy word, so the
    /// monomial is the image of a single degeneracy.
    pub fn is_degenerate(&self) -> bool {
        let common = self
            .letters()
            .iter()
            .fold(u64::MAX, |acc, l| acc & l.word.mask());
        common != 0
    }

    /// Maps every leaf, keeping the bracket shape.
    pub fn map_letters(&self, f: &impl Fn(&Letter) -> Letter) -> LieMonomial {
        match self {
            LieMonomial::Leaf(l) => LieMonomial::Leaf(f(l)),
            LieMonomial::Bracket { left, right, .. } => {
                LieMonomial::bracket(left.map_letters(f), right.map_letters(f))
            }
        }
    }

    /// Structural order used after the weight comparison.
    fn structural_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (LieMonomial::Leaf(a), LieMonomial::Leaf(b)) => a.cmp(b),
            (LieMonomial::Leaf(_), LieMonomial::Bracket { .. }) => Ordering::Less,
            (LieMonomial::Bracket { .. }, LieMonomial::Leaf(_)) => Ordering::Greater,
            (
                LieMonomial::Bracket {
                    left: l1,
                    right: r1,
                    ..
                },
                LieMonomial::Bracket {
                    left: l2,
                    right: r2,
                    ..
                },
            ) => l1.cmp(l2).then_with(|| r1.cmp(r2)),
        }
    }
}

impl Ord for LieMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.structural_cmp(other))
    }
}

impl PartialOrd for LieMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LieMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieMonomial::Leaf(l) => write!(f, "{l}"),
            LieMonomial::Bracket { left, right, .. } => write!(f, "[{left}, {right}]"),
        }
    }
}

/// A finite rational combination of monomials. No stored coefficient is zero.
///
/// Construction does not normalize; use [`LieElement::normalize`] to reach
/// the Hall normal form before comparing elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    terms: BTreeMap<LieMonomial, Scalar>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomial(m: LieMonomial) -> Self {
        Self::term(Scalar::one(), m)
    }

    pub fn term(c: Scalar, m: LieMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn from_letter(l: Letter) -> Self {
        Self::from_monomial(LieMonomial::Leaf(l))
    }

    pub fn generator(g: &GeneratorSymbol) -> Self {
        Self::from_letter(Letter::bare(g.clone()))
    }

    /// `s_I g` for the ascending index list `I`.
    pub fn degenerate_generator(indices: &[usize], g: &GeneratorSymbol) -> Result<Self> {
        Ok(Self::from_letter(Letter::new(
            DegeneracyWord::from_indices(indices)?,
            g.clone(),
        )))
    }

    pub fn from_terms<I: IntoIterator<Item = (LieMonomial, Scalar)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: LieMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<LieMonomial, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &LieMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LieElement {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Scalar::from_integer(c.into()))
    }

    /// Reduced degree if every term has the same one; `None` for zero or
    /// inhomogeneous elements.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Common simplicial level of all leaves, if there is one.
    pub fn level(&self) -> Option<usize> {
        let mut levels = self.letters().into_iter().map(|l| l.level());
        let first = levels.next()?;
        levels.all(|s| s == first).then_some(first)
    }

    /// Distinct leaves occurring anywhere in the element.
    pub fn letters(&self) -> BTreeSet<Letter> {
        self.terms
            .keys()
            .flat_map(|m| m.letters().into_iter().cloned())
            .collect()
    }

    pub fn generators(&self) -> BTreeSet<GeneratorSymbol> {
        self.letters().into_iter().map(|l| l.generator).collect()
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    /// Bilinear bracket without normalization.
    pub fn bracket_raw(a: &LieElement, b: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(LieMonomial::bracket(ma.clone(), mb.clone()), ca * cb);
            }
        }
        out
    }

    /// The graded commutator `<a, b> = (-1)^{|a|} [a, b]` of differential
    /// graded Lie algebras, without normalization. Summed termwise, so `a`
    /// need not be homogeneous.
    pub fn commutator_raw(a: &LieElement, b: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (ma, ca) in &a.terms {
            let c = if ma.degree() % 2 == 1 {
                -ca.clone()
            } else {
                ca.clone()
            };
            for (mb, cb) in &b.terms {
                out.add_term(LieMonomial::bracket(ma.clone(), mb.clone()), &c * cb);
            }
        }
        out
    }

    /// Bilinear bracket followed by normalization. Arguments must be
    /// homogeneous or zero.
    pub fn bracket(a: &LieElement, b: &LieElement) -> Result<LieElement> {
        for e in [a, b] {
            if !e.is_homogeneous() {
                return Err(HhopError::MalformedElement(format!(
                    "bracket argument {e} is not homogeneous"
                )));
            }
        }
        Ok(Self::bracket_raw(a, b).normalize())
    }

    /// Canonical Hall-basis representative.
    pub fn normalize(&self) -> LieElement {
        super::normal::normalize(self)
    }

    /// Validates cached bracket data, then normalizes.
    pub fn try_normalize(&self) -> Result<LieElement> {
        for m in self.terms.keys() {
            m.validate()?;
        }
        Ok(self.normalize())
    }

    /// Equality in the free graded Lie algebra.
    pub fn lie_eq(&self, other: &LieElement) -> bool {
        (self - other).normalize().is_zero()
    }

    /// Applies `s_outer` on the left of every leaf.
    pub fn apply_degeneracies(&self, outer: &DegeneracyWord) -> LieElement {
        if outer.is_empty() {
            return self.clone();
        }
        LieElement::from_terms(self.terms.iter().map(|(m, c)| {
            (
                m.map_letters(&|l: &Letter| Letter::new(l.word.then(outer), l.generator.clone())),
                c.clone(),
            )
        }))
    }

    /// Terms whose monomials satisfy the predicate.
    pub fn filter(&self, keep: impl Fn(&LieMonomial) -> bool) -> LieElement {
        LieElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops monomials that lie in the image of a single degeneracy.
    pub fn drop_degenerate(&self) -> LieElement {
        self.filter(|m| !m.is_degenerate())
    }
}

impl AddAssign<&LieElement> for LieElement {
    fn add_assign(&mut self, rhs: &LieElement) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        self.scale(&-Scalar::one())
    }
}

impl Add for LieElement {
    type Output = LieElement;
    fn add(self, rhs: LieElement) -> LieElement {
        &self + &rhs
    }
}

impl Sub for LieElement {
    type Output = LieElement;
    fn sub(self, rhs: LieElement) -> LieElement {
        &self - &rhs
    }
}

impl Neg for LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        -&self
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &Scalar) -> fmt::Result {
    if !c.is_one() {
        write!(f, "{c}*")?;
    }
    Ok(())
}

impl fmt::Display for LieElement {
    /// Uses the element-expression grammar, so output parses back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (idx, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            write_coefficient(f, &magnitude)?;
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
