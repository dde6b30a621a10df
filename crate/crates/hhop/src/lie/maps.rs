//! Lie homomorphisms and derivations determined by their values on generators.

use std::collections::BTreeMap;

use super::element::{LieElement, LieMonomial};
use super::symbols::{GeneratorSymbol, Letter};
use crate::error::{HhopError, Result};

/// Values on generators; generators absent from the map are unbound.
pub type LieMap = BTreeMap<GeneratorSymbol, LieElement>;

/// Replaces every leaf by an element and expands brackets bilinearly,
/// without normalizing.
pub fn substitute_raw(
    e: &LieElement,
    on_letter: &mut dyn FnMut(&Letter) -> Result<LieElement>,
) -> Result<LieElement> {
    let mut out = LieElement::zero();
    for (m, c) in e.terms() {
        let img = substitute_monomial(m, on_letter)?;
        out += &img.scale(c);
    }
    Ok(out)
}

fn substitute_monomial(
    m: &LieMonomial,
    on_letter: &mut dyn FnMut(&Letter) -> Result<LieElement>,
) -> Result<LieElement> {
    match m {
        LieMonomial::Leaf(l) => on_letter(l),
        LieMonomial::Bracket { left, right, .. } => {
            let a = substitute_monomial(left, on_letter)?;
            if a.is_zero() {
                return Ok(LieElement::zero());
            }
            let b = substitute_monomial(right, on_letter)?;
            Ok(LieElement::bracket_raw(&a, &b))
        }
    }
}

fn checked_value<'a>(
    map: &'a LieMap,
    g: &GeneratorSymbol,
    expected_degree: Option<u32>,
) -> Result<&'a LieElement> {
    let v = map
        .get(g)
        .ok_or_else(|| HhopError::UnboundGenerator(g.name().to_string()))?;
    if let Some(want) = expected_degree {
        match v.degree() {
            _ if v.is_zero() => {}
            Some(d) if d == want => {}
            Some(d) => {
                return Err(HhopError::MalformedMap(format!(
                    "{} has degree {} but its image has degree {d}",
                    g.name(),
                    g.reduced_degree()
                )))
            }
            None => {
                return Err(HhopError::MalformedMap(format!(
                    "image of {} is not homogeneous",
                    g.name()
                )))
            }
        }
    }
    Ok(v)
}

/// Applies the Lie homomorphism determined by `map`, without normalizing.
/// Degeneracy words on leaves are carried over to the images.
pub fn apply_lie_map_raw(map: &LieMap, e: &LieElement) -> Result<LieElement> {
    substitute_raw(e, &mut |l: &Letter| {
        let v = checked_value(map, &l.generator, Some(l.generator.reduced_degree()))?;
        Ok(v.apply_degeneracies(&l.word))
    })
}

/// Applies the Lie homomorphism determined by `map` and normalizes.
pub fn apply_lie_map(map: &LieMap, e: &LieElement) -> Result<LieElement> {
    Ok(apply_lie_map_raw(map, e)?.normalize())
}

/// Applies the degree -1 derivation determined by `map` and normalizes.
///
/// The bracket here is the Whitehead bracket, related to the graded
/// commutator `<a,b>` by `[a,b] = (-1)^{|a|} <a,b>`. The derivation obeys the
/// Koszul-Leibniz rule for `<,>`, which reads
/// `d[x,y] = -[dx,y] + (-1)^{|x|} [x,dy]` on Whitehead brackets.
pub fn apply_derivation(map: &LieMap, e: &LieElement) -> Result<LieElement> {
    super::normal::derivation(e, &|l: &Letter| {
        let want = l.generator.reduced_degree().checked_sub(1);
        let v = checked_value(map, &l.generator, None)?;
        if !v.is_zero() && v.degree() != want {
            return Err(HhopError::MalformedMap(format!(
                "derivation must lower the degree of {} by one",
                l.generator.name()
            )));
        }
        Ok(v.apply_degeneracies(&l.word))
    })
}

/// The identity assignment on a set of generators.
pub fn identity_map<'a>(gens: impl IntoIterator<Item = &'a GeneratorSymbol>) -> LieMap {
    gens.into_iter()
        .map(|g| (g.clone(), LieElement::generator(g)))
        .collect()
}
