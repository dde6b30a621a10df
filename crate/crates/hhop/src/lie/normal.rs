//! Hall normal form via the tensor-algebra embedding.
//!
//! A Whitehead bracket `[A,B]` is sent to `(-1)^{|A|}(AB - (-1)^{|A||B|} BA)`
//! in the tensor algebra on the letters, with `|.|` the reduced degree. This is
//! injective on the free graded Lie algebra, so an element is zero exactly when
//! its expansion vanishes. Expansions are decomposed against the basis of
//! standard-bracketed Lyndon words together with squares `[u,u]` of odd-degree
//! Lyndon words: the lexicographically least word of any Lie polynomial is
//! always the leading word of exactly one such basis element.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::element::{LieElement, LieMonomial};
use super::symbols::Letter;
use super::Scalar;
use crate::error::Result;

pub(crate) type Word = Vec<u32>;
type Expansion = Arc<Vec<(Word, i64)>>;

/// True if `w` is strictly smaller than each of its proper rotations.
pub fn is_lyndon<T: Ord>(w: &[T]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|i| w[i..] > *w)
}

/// `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization<T: Ord>(w: &[T]) -> (&[T], &[T]) {
    let split = (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .expect("words of length >= 2 have a Lyndon suffix");
    (&w[..split], &w[split..])
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

pub(crate) struct Engine {
    letters: Vec<Letter>,
    degrees: Vec<u32>,
    index: HashMap<Letter, u32>,
    monomial_cache: HashMap<LieMonomial, Expansion>,
    basis_cache: HashMap<Word, Option<(LieMonomial, Expansion)>>,
}

impl Engine {
    pub(crate) fn new(letters: BTreeSet<Letter>) -> Self {
        let letters: Vec<Letter> = letters.into_iter().collect();
        let degrees = letters.iter().map(|l| l.degree()).collect();
        let index = letters
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect();
        Engine {
            letters,
            degrees,
            index,
            monomial_cache: HashMap::new(),
            basis_cache: HashMap::new(),
        }
    }

    fn word_degree(&self, w: &[u32]) -> u32 {
        w.iter().map(|&i| self.degrees[i as usize]).sum()
    }

    fn bracket_expansion(
        a: &[(Word, i64)],
        da: u32,
        b: &[(Word, i64)],
        db: u32,
    ) -> Vec<(Word, i64)> {
        let outer = sign(da % 2 == 1);
        let swap = sign((da * db) % 2 == 1);
        let mut acc: HashMap<Word, i64> = HashMap::with_capacity(2 * a.len() * b.len());
        for (u, cu) in a {
            for (v, cv) in b {
                let c = outer * cu * cv;
                let mut uv = u.clone();
                uv.extend_from_slice(v);
                *acc.entry(uv).or_insert(0) += c;
                let mut vu = v.clone();
                vu.extend_from_slice(u);
                *acc.entry(vu).or_insert(0) -= swap * c;
            }
        }
        acc.into_iter().filter(|(_, c)| *c != 0).collect()
    }

    pub(crate) fn expand_monomial(&mut self, m: &LieMonomial) -> Expansion {
        if let Some(e) = self.monomial_cache.get(m) {
            return e.clone();
        }
        let e = match m {
            LieMonomial::Leaf(l) => Arc::new(vec![(vec![self.index[l]], 1)]),
            LieMonomial::Bracket { left, right, .. } => {
                let a = self.expand_monomial(left);
                let b = self.expand_monomial(right);
                Arc::new(Self::bracket_expansion(
                    &a,
                    left.degree(),
                    &b,
                    right.degree(),
                ))
            }
        };
        self.monomial_cache.insert(m.clone(), e.clone());
        e
    }

    /// Basis monomial with leading word `w`, if `w` is a Lyndon word or the
    /// square of an odd-degree Lyndon word.
    fn basis_for(&mut self, w: &[u32]) -> Option<(LieMonomial, Expansion)> {
        if let Some(hit) = self.basis_cache.get(w) {
            return hit.clone();
        }
        let result = if w.len() == 1 {
            let m = LieMonomial::Leaf(self.letters[w[0] as usize].clone());
            Some((m, Arc::new(vec![(w.to_vec(), 1)])))
        } else if is_lyndon(w) {
            let (u, v) = standard_factorization(w);
            let (mu, eu) = self.basis_for(u).expect("Lyndon prefix");
            let (mv, ev) = self.basis_for(v).expect("Lyndon suffix");
            let e = Self::bracket_expansion(&eu, self.word_degree(u), &ev, self.word_degree(v));
            Some((LieMonomial::bracket(mu, mv), Arc::new(e)))
        } else if w.len().is_multiple_of(2) && w[..w.len() / 2] == w[w.len() / 2..] {
            let half = &w[..w.len() / 2];
            let d = self.word_degree(half);
            if d % 2 == 1 && is_lyndon(half) {
                let (mu, eu) = self.basis_for(half).expect("Lyndon half");
                let e = Self::bracket_expansion(&eu, d, &eu, d);
                Some((LieMonomial::bracket(mu.clone(), mu), Arc::new(e)))
            } else {
                None
            }
        } else {
            None
        };
        self.basis_cache.insert(w.to_vec(), result.clone());
        result
    }

    pub(crate) fn expand_element(&mut self, e: &LieElement) -> BTreeMap<Word, Scalar> {
        let mut poly: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (m, c) in e.terms() {
            let exp = self.expand_monomial(m);
            for (w, k) in exp.iter() {
                accumulate(&mut poly, w, &(c * Scalar::from_integer((*k).into())));
            }
        }
        poly
    }

    pub(crate) fn letter_id(&self, l: &Letter) -> u32 {
        self.index[l]
    }

    pub(crate) fn degree_of(&self, id: u32) -> u32 {
        self.degrees[id as usize]
    }

    /// Triangular decomposition of a Lie polynomial in tensor coordinates.
    pub(crate) fn reduce(&mut self, mut poly: BTreeMap<Word, Scalar>) -> LieElement {
        let mut out = LieElement::zero();
        while let Some((w, c)) = poly.pop_first() {
            let (m, exp) = self.basis_for(&w).unwrap_or_else(|| {
                panic!(
                    "tensor polynomial is not a Lie element: stray word of length {}",
                    w.len()
                )
            });
            let lead = exp
                .iter()
                .find(|(v, _)| *v == w)
                .map(|(_, k)| *k)
                .expect("basis expansion contains its leading word");
            let coef = c / Scalar::from_integer(lead.into());
            for (v, k) in exp.iter() {
                if *v != w {
                    accumulate(
                        &mut poly,
                        v,
                        &(-(&coef * Scalar::from_integer((*k).into()))),
                    );
                }
            }
            out.add_term(m, coef);
        }
        out
    }
}

fn accumulate(poly: &mut BTreeMap<Word, Scalar>, w: &Word, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match poly.get_mut(w) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                poly.remove(w);
            }
        }
        None => {
            poly.insert(w.clone(), c.clone());
        }
    }
}

/// Canonical Hall-basis representative of `e`.
pub fn normalize(e: &LieElement) -> LieElement {
    if e.is_zero() {
        return LieElement::zero();
    }
    let mut engine = Engine::new(e.letters());
    let poly = engine.expand_element(e);
    engine.reduce(poly)
}

/// Applies a degree -1 derivation given on letters, with the Koszul rule
/// `d(ab) = d(a) b + (-1)^{|a|} a d(b)` in the tensor algebra.
pub(crate) fn derivation(
    e: &LieElement,
    on_letter: &dyn Fn(&Letter) -> Result<LieElement>,
) -> Result<LieElement> {
    if e.is_zero() {
        return Ok(LieElement::zero());
    }
    let letters = e.letters();
    let mut images = BTreeMap::new();
    let mut all = letters.clone();
    for l in &letters {
        let img = on_letter(l)?;
        all.extend(img.letters());
        images.insert(l.clone(), img);
    }
    let mut engine = Engine::new(all);
    let mut image_polys: HashMap<u32, BTreeMap<Word, Scalar>> = HashMap::new();
    for (l, img) in &images {
        let id = engine.letter_id(l);
        let p = engine.expand_element(img);
        image_polys.insert(id, p);
    }
    let source = engine.expand_element(e);
    let mut target: BTreeMap<Word, Scalar> = BTreeMap::new();
    for (w, c) in &source {
        let mut prefix_degree = 0u32;
        for (pos, &id) in w.iter().enumerate() {
            let s = if prefix_degree % 2 == 1 {
                -Scalar::one()
            } else {
                Scalar::one()
            };
            for (v, k) in &image_polys[&id] {
                let mut word = w[..pos].to_vec();
                word.extend_from_slice(v);
                word.extend_from_slice(&w[pos + 1..]);
                accumulate(&mut target, &word, &(c * k * &s));
            }
            prefix_degree += engine.degree_of(id);
        }
    }
    Ok(engine.reduce(target))
}
