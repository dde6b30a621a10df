//! Whitehead products of two and three spheres as classes in wedges of
//! suspension resolutions.

use crate::combinatorics::{enumerate_index_partitions, shuffle_sign};
use crate::error::{domain, Result};
use crate::lie::{
    apply_lie_map_raw, parse_element, symbol_table, GeneratorSymbol, LieElement, LieMap,
};
use crate::simplicial::{CwGenerator, SimplicialLieObject};

/// A representative element together with the object it lives in.
#[derive(Debug, Clone)]
pub struct Representative {
    pub object: SimplicialLieObject,
    pub element: LieElement,
    pub level: usize,
}

fn check_sphere_dims(dims: &[u32]) -> Result<()> {
    if let Some(d) = dims.iter().find(|&&d| d < 2) {
        return domain(format!("sphere dimension {d} is below 2"));
    }
    Ok(())
}

/// `Σ sgn(I,J) [s_I a, s_J b]` over partitions of `{0..n-1}` with `|I| = k`.
///
/// The brackets are kept exactly as written; nothing is normalized.
pub fn shuffle_bracket_sum(
    a: &GeneratorSymbol,
    b: &GeneratorSymbol,
    n: usize,
    k: usize,
) -> Result<LieElement> {
    let mut out = LieElement::zero();
    for part in enumerate_index_partitions(n, k)? {
        let left = LieElement::degenerate_generator(part.first().elements(), a)?;
        let right = LieElement::degenerate_generator(part.second().elements(), b)?;
        let sign = shuffle_sign(part.first(), part.second());
        out += &LieElement::bracket_raw(&left, &right).scale_int(sign.into());
    }
    Ok(out)
}

/// The wedge `W = (S^p ⊗ S^l) ∨ (S^q ⊗ S^k)` and `ω̂` at level `k + l`.
///
/// `p` and `q` are sphere dimensions. `ι_p` carries the `k`-fold degeneracies,
/// so it sits at home dimension `l` and `ι_q` at home dimension `k`.
pub fn omega_hat(p: u32, q: u32, k: usize, l: usize) -> Result<Representative> {
    check_sphere_dims(&[p, q])?;
    if l > k {
        return domain(format!("need k >= l, got k={k}, l={l}"));
    }
    let n = k + l;
    let ip = GeneratorSymbol::new("iota_p", p - 1, l as u32)?;
    let iq = GeneratorSymbol::new("iota_q", q - 1, k as u32)?;
    let object = SimplicialLieObject::cw(
        &format!("omega_hat(p={p}, q={q}, k={k}, l={l})"),
        vec![CwGenerator::free(ip.clone()), CwGenerator::free(iq.clone())],
        None,
    )?;
    let element = shuffle_bracket_sum(&ip, &iq, n, k)?;
    Ok(Representative {
        object,
        element,
        level: n,
    })
}

/// The triple product `[[ι_p, ι_q], ι_r]` in filtration 3, over
/// `(S^p ∨ S^q ∨ S^r) ⊗ S^1`.
///
/// Obtained by composing the `(k, l) = (1, 2)` representative for
/// `[u, ι_r]` with the `(1, 1)` representative substituted for `u`.
pub fn omega_triple(p: u32, q: u32, r: u32) -> Result<Representative> {
    check_sphere_dims(&[p, q, r])?;
    let ip = GeneratorSymbol::new("iota_p", p - 1, 1)?;
    let iq = GeneratorSymbol::new("iota_q", q - 1, 1)?;
    let ir = GeneratorSymbol::new("iota_r", r - 1, 1)?;
    let u = GeneratorSymbol::new("u", p + q - 2, 2)?;
    let v = GeneratorSymbol::new("v", r - 1, 1)?;
    let outer = shuffle_bracket_sum(&u, &v, 3, 1)?;
    let mut f = LieMap::new();
    f.insert(u, shuffle_bracket_sum(&ip, &iq, 2, 1)?);
    f.insert(v, LieElement::generator(&ir));
    let element = apply_lie_map_raw(&f, &outer)?;
    let object = SimplicialLieObject::cw(
        &format!("omega_triple(p={p}, q={q}, r={r})"),
        [ip, iq, ir].into_iter().map(CwGenerator::free).collect(),
        None,
    )?;
    Ok(Representative {
        object,
        element,
        level: 3,
    })
}

/// One claimed identity `lhs = ∂(witness)` in the normalized complex.
#[derive(Debug, Clone)]
pub struct BoundaryIdentity {
    pub lhs: LieElement,
    pub witness: LieElement,
}

/// The six level-4 cross-term cycles for `k = l = 3` with their witnesses.
///
/// Returns the object of [`omega_hat`]`(p, q, 3, 3)` and the identities; the
/// witnesses live at level 5.
pub fn boundary_ledger(p: u32, q: u32) -> Result<(SimplicialLieObject, Vec<BoundaryIdentity>)> {
    let object = omega_hat(p, q, 3, 3)?.object;
    let symbols: Vec<GeneratorSymbol> = object
        .generators()
        .iter()
        .map(|g| g.symbol.clone())
        .collect();
    let table = symbol_table(&symbols)?;
    let x = "[s1s0 iota_p, s4s2 iota_q]";
    let y = "[s1s0 iota_p, s3s2 iota_q]";
    let rows = [
        ("[s0 iota_p, s3 iota_q]".to_string(), x.to_string()),
        ("[s0 iota_p, s2 iota_q]".to_string(), y.to_string()),
        (
            "[s1 iota_p, s3 iota_q]".to_string(),
            format!("[s2s0 iota_p, s4s1 iota_q] - {x}"),
        ),
        (
            "[s1 iota_p, s2 iota_q] + [s0 iota_p, s1 iota_q]".to_string(),
            format!("[s2s0 iota_p, s3s1 iota_q] - {y}"),
        ),
        (
            "[s1 iota_p, s2 iota_q] + [s1 iota_p, s0 iota_q]".to_string(),
            "[s2s1 iota_p, s3s0 iota_q]".to_string(),
        ),
        (
            "[s2 iota_p, s3 iota_q] - [s0 iota_p, s1 iota_q]".to_string(),
            "[s3s0 iota_p, s4s1 iota_q]".to_string(),
        ),
    ];
    let identities = rows
        .iter()
        .map(|(lhs, w)| {
            Ok(BoundaryIdentity {
                lhs: parse_element(lhs, &table)?,
                witness: parse_element(w, &table)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok((object, identities))
}

/// Groups the generators of a two-sphere wedge by the sphere they come from.
pub fn sphere_grouping(g: &GeneratorSymbol) -> String {
    g.name().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::SymbolTable;

    fn table(x: &SimplicialLieObject) -> SymbolTable {
        symbol_table(x.generators().iter().map(|g| &g.symbol)).unwrap()
    }

    #[test]
    fn low_cases_read_as_displayed() {
        let w = omega_hat(3, 5, 1, 1).unwrap();
        let want = parse_element(
            "[s0 iota_p, s1 iota_q] - [s1 iota_p, s0 iota_q]",
            &table(&w.object),
        )
        .unwrap();
        assert_eq!(w.element, want);
        let w = omega_hat(3, 3, 0, 0).unwrap();
        assert_eq!(w.element.to_string(), "[iota_p, iota_q]");
        assert!(omega_hat(1, 3, 1, 1).is_err());
        assert!(omega_hat(3, 3, 1, 2).is_err());
    }

    #[test]
    fn representatives_are_moore_cycles() {
        for (k, l) in [(1, 0), (1, 1), (2, 1), (2, 2), (3, 1)] {
            let w = omega_hat(3, 4, k, l).unwrap();
            assert!(
                w.object.is_moore_cycle(w.level, &w.element).unwrap(),
                "k={k} l={l}"
            );
        }
        let t = omega_triple(3, 4, 5).unwrap();
        assert_eq!(t.element.len(), 6);
        assert!(t.object.is_moore_cycle(3, &t.element).unwrap());
    }
}
