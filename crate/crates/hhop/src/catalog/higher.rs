//! Higher Whitehead products: fat-wedge cell data, the attaching elements
//! `φ_S` and the resolution built from them.

use itertools::Itertools;
use serde::Serialize;

use crate::combinatorics::{
    enumerate_index_partitions, enumerate_restricted_shuffles, koszul_sign, power_of_minus_one,
    shuffle_sign, DegreeVector, IndexSet,
};
use crate::error::{domain, Result};
use crate::lie::{GeneratorSymbol, LieElement};
use crate::simplicial::{CwGenerator, SimplicialLieObject};

/// Generator `ι_τ` for a nonempty subset `τ` of `{1..n}` (1-based).
///
/// It sits at home dimension `|τ| - 1` in the reduced degree `Σ_{i∈τ} p_i`.
pub fn wp_generator(degrees: &DegreeVector, tau: &[usize]) -> Result<GeneratorSymbol> {
    check_subset(degrees, tau)?;
    let degree = tau.iter().map(|&i| degrees.at(i)).sum::<Result<u32>>()?;
    GeneratorSymbol::new(
        &format!("iota{{{}}}", tau.iter().join(",")),
        degree,
        (tau.len() - 1) as u32,
    )
}

fn check_subset(degrees: &DegreeVector, tau: &[usize]) -> Result<()> {
    if tau.is_empty() {
        return domain("empty subcollection");
    }
    if !tau.windows(2).all(|w| w[0] < w[1]) {
        return domain(format!("subcollection {tau:?} is not strictly ascending"));
    }
    if tau[0] == 0 || tau[tau.len() - 1] > degrees.len() {
        return domain(format!(
            "subcollection {tau:?} leaves 1..={}",
            degrees.len()
        ));
    }
    Ok(())
}

/// The attaching element `φ` of `ι_τ`, an element of level `|τ| - 2`.
///
/// Summed over `k = 1..⌊m/2⌋`, restricted `(m-k, k)`-shuffles `(σ', σ'')` of
/// the positions of `τ`, and partitions `(I, J)` of `{0..m-3}` with
/// `|I| = k - 1`, with coefficient `(-1)^{deg σ' + k} gsn(σ', σ'') sgn(I, J)`
/// on `[s_I ι_σ', s_J ι_σ'']`. Brackets are left as written.
pub fn phi_s(degrees: &DegreeVector, tau: &[usize]) -> Result<LieElement> {
    check_subset(degrees, tau)?;
    let m = tau.len();
    if m < 2 {
        return domain("an attaching element needs at least two spheres");
    }
    let local = DegreeVector::new(tau.iter().map(|&i| degrees.at(i)).collect::<Result<_>>()?)?;
    let mut out = LieElement::zero();
    for k in 1..=m / 2 {
        for shuffle in enumerate_restricted_shuffles(m, m - k)? {
            let sub =
                |block: &IndexSet| -> Vec<usize> { block.iter().map(|pos| tau[pos - 1]).collect() };
            let first = sub(shuffle.first());
            let second = sub(shuffle.second());
            let deg_first = local.total(shuffle.first())?;
            let global = power_of_minus_one(i64::from(deg_first) + k as i64);
            let sign = global * koszul_sign(&local, &shuffle)?;
            let a = wp_generator(degrees, &first)?;
            let b = wp_generator(degrees, &second)?;
            for part in enumerate_index_partitions(m - 2, k - 1)? {
                let left = LieElement::degenerate_generator(part.first().elements(), &a)?;
                let right = LieElement::degenerate_generator(part.second().elements(), &b)?;
                let c = sign * shuffle_sign(part.first(), part.second());
                out += &LieElement::bracket_raw(&left, &right).scale_int(c.into());
            }
        }
    }
    Ok(out)
}

/// `φ_S` for the whole collection, at level `n - 2`.
pub fn phi_full(degrees: &DegreeVector) -> Result<LieElement> {
    let all: Vec<usize> = (1..=degrees.len()).collect();
    phi_s(degrees, &all)
}

/// The resolution `W(S)` of the fat wedge: one generator per proper nonempty
/// subset, attached by [`phi_s`]. The top product [`phi_full`] lives in it.
pub fn higher_wp_resolution(degrees: &DegreeVector) -> Result<SimplicialLieObject> {
    let n = degrees.len();
    if n < 2 {
        return domain("need at least two spheres");
    }
    let mut gens = Vec::new();
    for size in 1..n {
        for tau in (1..=n).combinations(size) {
            let symbol = wp_generator(degrees, &tau)?;
            let attaching = if size >= 2 {
                phi_s(degrees, &tau)?.normalize()
            } else {
                LieElement::zero()
            };
            gens.push(CwGenerator::new(symbol, attaching));
        }
    }
    SimplicialLieObject::cw(
        &format!("W({})", degrees.degrees().iter().join(",")),
        gens,
        Some(n - 2),
    )
}

/// One wedge summand of a fat-wedge layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FatWedgeSummand {
    /// 1-based positions of the spheres involved.
    pub subcollection: Vec<usize>,
    /// `N_{S'} - 1`, with `N_{S'}` the sum of their dimensions.
    pub sphere_dim: u32,
}

/// The spheres `S^{N_{S'} - 1}` attached along `T_k(S)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FatWedgeSummary {
    pub sphere_dims: Vec<u32>,
    pub k: usize,
    pub summands: Vec<FatWedgeSummand>,
}

/// Subcollections with `m - k + 1` elements of the spheres of dimensions
/// `sphere_dims`, for `0 < k < m`.
pub fn fat_wedge_summands(sphere_dims: &DegreeVector, k: usize) -> Result<FatWedgeSummary> {
    let m = sphere_dims.len();
    if k == 0 || k >= m {
        return domain(format!("need 0 < k < {m}, got {k}"));
    }
    let mut summands = Vec::new();
    for sub in (1..=m).combinations(m - k + 1) {
        let total = sub
            .iter()
            .map(|&i| sphere_dims.at(i))
            .sum::<Result<u32>>()?;
        summands.push(FatWedgeSummand {
            subcollection: sub,
            sphere_dim: total - 1,
        });
    }
    Ok(FatWedgeSummary {
        sphere_dims: sphere_dims.degrees().to_vec(),
        k,
        summands,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_attaching_sign() {
        for p in 1..=3 {
            let d = DegreeVector::new(vec![p, 2]).unwrap();
            let phi = phi_s(&d, &[1, 2]).unwrap();
            assert_eq!(phi.len(), 1);
            let c = phi.terms().values().next().unwrap().clone();
            assert_eq!(
                c,
                crate::lie::Scalar::from_integer(power_of_minus_one(i64::from(p) + 1).into())
            );
        }
    }

    #[test]
    fn fat_wedge_counts() {
        let d = DegreeVector::new(vec![2, 3, 4]).unwrap();
        let s = fat_wedge_summands(&d, 2).unwrap();
        let dims: Vec<u32> = s.summands.iter().map(|x| x.sphere_dim).collect();
        assert_eq!(dims, vec![4, 5, 6]);
        let d2 = DegreeVector::new(vec![2, 3]).unwrap();
        assert_eq!(fat_wedge_summands(&d2, 1).unwrap().summands.len(), 1);
        assert!(fat_wedge_summands(&d, 3).is_err());
    }

    #[test]
    fn small_resolutions_are_simplicial() {
        let w = higher_wp_resolution(&DegreeVector::new(vec![1, 2, 1, 1]).unwrap()).unwrap();
        assert_eq!(w.level_generators(0).unwrap().len(), 4);
        let r = w.verify_simplicial_identities(2, 12).unwrap();
        assert!(r.is_clean(), "{:?}", r.violations.first());
    }
}
