//! The rational resolution of complex projective space and its comparison
//! map from the higher-Whitehead resolution of a wedge of 2-spheres.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::higher::{higher_wp_resolution, phi_full};
use crate::combinatorics::{
    enumerate_index_partitions, power_of_minus_one, shuffle_sign, DegreeVector,
};
use crate::error::{domain, Result};
use crate::lie::{apply_lie_map, GeneratorSymbol, LieElement, LieMap, Scalar};
use crate::simplicial::{CwGenerator, SimplicialLieObject};

/// `ι_j`, the sphere `S^j` of the resolution, at home dimension `j - 2`.
pub fn cpn_generator(j: u32) -> Result<GeneratorSymbol> {
    if j < 2 {
        return domain(format!("no generator ι_{j}"));
    }
    GeneratorSymbol::new(&format!("iota_{j}"), j - 1, j - 2)
}

/// `γ_n`, the attaching element of `ι_{n+2}`, at level `n - 1`.
///
/// `γ_1 = ½[ι_2, ι_2]`. For `n ≥ 2` the sum runs over `j = 2..⌊(n+3)/2⌋` and
/// partitions `(I, J)` of `{0..n-2}` with `|I| = j - 2`, with coefficient
/// `(-1)^{nj} sgn(I, J)` on `[s_I ι_{n-j+3}, s_J ι_j]`. When both entries are
/// the same sphere only partitions with `0 ∈ I` are kept.
pub fn gamma(n: u32) -> Result<LieElement> {
    if n == 0 {
        return domain("γ_n needs n >= 1");
    }
    let i2 = LieElement::generator(&cpn_generator(2)?);
    if n == 1 {
        return Ok(LieElement::bracket_raw(&i2, &i2).scale(&Scalar::new(1.into(), 2.into())));
    }
    let mut out = LieElement::zero();
    for j in 2..=(n + 3) / 2 {
        let a = cpn_generator(n - j + 3)?;
        let b = cpn_generator(j)?;
        let symmetric = n - j + 3 == j;
        let global = power_of_minus_one(i64::from(n) * i64::from(j));
        for part in enumerate_index_partitions((n - 1) as usize, (j - 2) as usize)? {
            if symmetric && !part.first().contains(0) {
                continue;
            }
            let left = LieElement::degenerate_generator(part.first().elements(), &a)?;
            let right = LieElement::degenerate_generator(part.second().elements(), &b)?;
            let c = global * shuffle_sign(part.first(), part.second());
            out += &LieElement::bracket_raw(&left, &right).scale_int(c.into());
        }
    }
    Ok(out)
}

/// The resolution `V` with one sphere `S^{k+2}` at each level `k < n`.
pub fn cpn_resolution(n: u32) -> Result<SimplicialLieObject> {
    if n == 0 {
        return domain("need n >= 1");
    }
    let mut gens = Vec::new();
    for k in 0..n {
        let symbol = cpn_generator(k + 2)?;
        let mut g = if k == 0 {
            CwGenerator::free(symbol)
        } else {
            CwGenerator::new(symbol, gamma(k)?.normalize())
        };
        g.rationalized = k == 1;
        gens.push(g);
    }
    SimplicialLieObject::cw(&format!("CP^{n}"), gens, None)
}

/// `(-1)^{⌊k/2⌋} (k+1)!`.
pub fn comparison_coefficient(k: u32) -> BigInt {
    let factorial = (1..=k + 1).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    if (k / 2) % 2 == 1 {
        -factorial
    } else {
        factorial
    }
}

/// Source, target and generator values of the comparison map
/// `f: W((S^2)^{n+1}) → V`.
#[derive(Debug, Clone)]
pub struct ComparisonMap {
    pub source: SimplicialLieObject,
    pub target: SimplicialLieObject,
    pub map: LieMap,
}

/// `f(ι_τ) = (-1)^{⌊k/2⌋}(k+1)! ι_{k+2}` for `|τ| = k + 1`.
pub fn cpn_comparison_map(n: u32) -> Result<ComparisonMap> {
    let source = higher_wp_resolution(&DegreeVector::units(n as usize + 1))?;
    let target = cpn_resolution(n)?;
    let mut map = LieMap::new();
    for g in source.generators() {
        let k = g.symbol.home_dim();
        let image = LieElement::generator(&cpn_generator(k + 2)?);
        map.insert(
            g.symbol.clone(),
            image.scale(&Scalar::from_integer(comparison_coefficient(k))),
        );
    }
    Ok(ComparisonMap {
        source,
        target,
        map,
    })
}

/// A generator on which `d_i ∘ f` and `f ∘ d_i` differ.
#[derive(Debug, Clone, Serialize)]
pub struct ChainMapDefect {
    pub generator: String,
    pub face: usize,
    pub difference: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ChainMapReport {
    pub checked: usize,
    pub defects: Vec<ChainMapDefect>,
}

impl ChainMapReport {
    pub fn is_clean(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Checks `d_i^V f(ι) = f(d_i^W ι)` for every face of every CW generator of
/// `w` with home dimension in `1..=up_to_level`.
pub fn verify_chain_map(
    f: &LieMap,
    w: &SimplicialLieObject,
    v: &SimplicialLieObject,
    up_to_level: usize,
) -> Result<ChainMapReport> {
    let jobs: Vec<(&GeneratorSymbol, usize)> = w
        .generators()
        .iter()
        .filter(|g| (1..=up_to_level).contains(&g.home_dim()))
        .flat_map(|g| (0..=g.home_dim()).map(move |i| (&g.symbol, i)))
        .collect();
    let results: Vec<Result<Option<ChainMapDefect>>> = jobs
        .par_iter()
        .map(|&(g, i)| {
            let s = g.home_dim() as usize;
            let gen = LieElement::generator(g);
            let image = apply_lie_map(f, &gen)?;
            let lhs = v.face(s, i, &image)?;
            let rhs = apply_lie_map(f, &w.face(s, i, &gen)?)?;
            let diff = (&lhs - &rhs).normalize();
            Ok((!diff.is_zero()).then(|| ChainMapDefect {
                generator: g.name().to_string(),
                face: i,
                difference: diff.to_string(),
            }))
        })
        .collect();
    let mut report = ChainMapReport {
        checked: jobs.len(),
        defects: Vec::new(),
    };
    for r in results {
        if let Some(d) = r? {
            report.defects.push(d);
        }
    }
    Ok(report)
}

/// `f_{n-1}(φ_S)` for the `n + 1` two-spheres, next to `γ_n`.
pub fn top_comparison(n: u32) -> Result<(LieElement, LieElement)> {
    let c = cpn_comparison_map(n)?;
    let image = apply_lie_map(&c.map, &phi_full(&DegreeVector::units(n as usize + 1))?)?;
    Ok((image, gamma(n)?.normalize()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients() {
        let got: Vec<i64> = (0..=5)
            .map(|k| i64::try_from(comparison_coefficient(k)).unwrap())
            .collect();
        assert_eq!(got, vec![1, 2, -6, -24, 120, 720]);
    }

    #[test]
    fn low_gammas() {
        assert_eq!(gamma(2).unwrap().to_string(), "[iota_3, s0 iota_2]");
        let g3 = gamma(3).unwrap();
        assert_eq!(g3.len(), 2);
        let v = cpn_resolution(4).unwrap();
        let r = v.verify_simplicial_identities(4, 20).unwrap();
        assert!(r.is_clean());
    }

    #[test]
    fn chain_map_small() {
        let c = cpn_comparison_map(3).unwrap();
        let r = verify_chain_map(&c.map, &c.source, &c.target, 2).unwrap();
        assert!(r.is_clean(), "{:?}", r.defects);
        let (image, g3) = top_comparison(3).unwrap();
        assert_eq!(image, g3.scale_int(-24));
    }
}
