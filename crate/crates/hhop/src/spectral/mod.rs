//! The Lie part of the E¹ and E² pages: normalized chain slices, exact
//! homology ranks, boundary witnesses and cross-terms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, HhopError, Result};
use crate::lie::{hall_monomials, GeneratorSymbol, LieElement, LieMonomial, Scalar};
use crate::linalg::{
    elementary_divisors, integer_matrix, ColumnEchelon, SparseMatrix, SparseVector,
};
use crate::simplicial::SimplicialLieObject;

/// Label attached to every integral result.
pub const TORSION_SCOPE: &str = "Lie-lattice torsion only";

/// Filtration `s` (simplicial level) and internal reduced degree `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bidegree {
    pub s: usize,
    pub t: u32,
}

impl Bidegree {
    pub fn new(s: usize, t: u32) -> Result<Self> {
        if t < 1 {
            return domain("internal degree must be at least 1");
        }
        Ok(Bidegree { s, t })
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(s={}, t={})", self.s, self.t)
    }
}

/// Enumeration limits for slice construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceBounds {
    /// Largest accepted normalized slice dimension.
    pub max_dim: usize,
    /// Largest accepted number of Hall monomials before filtering.
    pub max_enumerated: usize,
}

impl Default for SliceBounds {
    fn default() -> Self {
        SliceBounds {
            max_dim: 4000,
            max_enumerated: 200_000,
        }
    }
}

/// Non-degenerate Hall monomials in a bidegree with the normalized boundary
/// `∂_s = Σ (-1)^i d_i` into the slice `(s-1, t)`.
#[derive(Debug, Clone)]
pub struct ChainSlice {
    pub bidegree: Bidegree,
    pub basis: Vec<LieMonomial>,
    /// Basis of the target slice, in row order.
    pub target_basis: Vec<LieMonomial>,
    pub boundary: SparseMatrix,
}

impl ChainSlice {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an element in this slice's basis. Degenerate
    /// monomials are discarded; anything else outside the basis is an error.
    pub fn coordinates(&self, e: &LieElement) -> Result<SparseVector> {
        let index: HashMap<&LieMonomial, usize> =
            self.basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        coordinates_in(&index, e, self.bidegree)
    }

    pub fn element(&self, v: &SparseVector) -> LieElement {
        LieElement::from_terms(v.iter().map(|(&i, c)| (self.basis[i].clone(), c.clone())))
    }
}

fn coordinates_in(
    index: &HashMap<&LieMonomial, usize>,
    e: &LieElement,
    b: Bidegree,
) -> Result<SparseVector> {
    let mut v = SparseVector::new();
    for (m, c) in e.normalize().drop_degenerate().terms() {
        let i = index
            .get(m)
            .ok_or_else(|| HhopError::Domain(format!("{m} does not lie in slice {b}")))?;
        v.insert(*i, c.clone());
    }
    Ok(v)
}

/// `Σ (-1)^i d_i e` at level `s`, normalized, degenerate terms kept.
pub fn boundary_of(x: &SimplicialLieObject, s: usize, e: &LieElement) -> Result<LieElement> {
    if s == 0 {
        return Ok(LieElement::zero());
    }
    let mut out = LieElement::zero();
    for i in 0..=s {
        let f = x.face(s, i, e)?;
        out += &if i % 2 == 0 { f } else { -f };
    }
    Ok(out.normalize())
}

/// Non-degenerate Hall monomials at level `s` in degree `t`.
pub fn normalized_basis(
    x: &SimplicialLieObject,
    s: usize,
    t: u32,
    bounds: SliceBounds,
) -> Result<Vec<LieMonomial>> {
    let letters = x.level_generators(s)?;
    let min_deg = letters.iter().map(|l| l.degree()).min().unwrap_or(t.max(1));
    let max_weight = (t / min_deg.max(1)) as usize;
    let all = hall_monomials(&letters, t, max_weight, Some(bounds.max_enumerated))?;
    let basis: Vec<LieMonomial> = all.into_iter().filter(|m| !m.is_degenerate()).collect();
    if basis.len() > bounds.max_dim {
        return Err(HhopError::Bound(format!(
            "slice (s={s}, t={t}) has dimension {} > {}",
            basis.len(),
            bounds.max_dim
        )));
    }
    Ok(basis)
}

/// The normalized chain slice at `(s, t)`.
pub fn chain_slice(
    x: &SimplicialLieObject,
    s: usize,
    t: u32,
    bounds: SliceBounds,
) -> Result<ChainSlice> {
    let bidegree = Bidegree::new(s, t)?;
    let basis = normalized_basis(x, s, t, bounds)?;
    if s == 0 || s <= x.lowest_level() {
        return Ok(ChainSlice {
            bidegree,
            boundary: SparseMatrix::new(0, vec![SparseVector::new(); basis.len()]),
            basis,
            target_basis: Vec::new(),
        });
    }
    let target_basis = normalized_basis(x, s - 1, t, bounds)?;
    let index: HashMap<&LieMonomial, usize> = target_basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let target_b = Bidegree { s: s - 1, t };
    let columns: Vec<SparseVector> = basis
        .par_iter()
        .map(|m| {
            let d = boundary_of(x, s, &LieElement::from_monomial(m.clone()))?;
            coordinates_in(&index, &d, target_b)
        })
        .collect::<Result<_>>()?;
    Ok(ChainSlice {
        bidegree,
        boundary: SparseMatrix::new(target_basis.len(), columns),
        basis,
        target_basis,
    })
}

/// Homology of the normalized complex at one bidegree.
#[derive(Debug, Clone, Serialize)]
pub struct HomologyReport {
    pub bidegree: Bidegree,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub rational_rank: usize,
    /// Elementary divisors greater than one, when requested and the
    /// incoming boundary has integral entries.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Vec<String>>,
    #[serde(skip)]
    pub cycle_basis: Vec<SparseVector>,
    #[serde(skip)]
    pub boundary_image: Vec<SparseVector>,
}

impl HomologyReport {
    fn from_slices(here: &ChainSlice, above: &ChainSlice, integral: bool) -> Self {
        let out = ColumnEchelon::build(&here.boundary);
        let into = ColumnEchelon::build(&above.boundary);
        let rank_out = out.rank();
        let rank_in = into.rank();
        let dim = here.dim();
        let torsion = if integral {
            integer_matrix(&above.boundary).map(|m| {
                elementary_divisors(m)
                    .into_iter()
                    .filter(|d| !d.is_one())
                    .map(|d: BigInt| d.abs().to_string())
                    .collect()
            })
        } else {
            None
        };
        let boundary_image = above
            .boundary
            .columns
            .iter()
            .filter(|c| !c.is_empty())
            .cloned()
            .collect();
        HomologyReport {
            bidegree: here.bidegree,
            dim,
            rank_in,
            rank_out,
            rational_rank: dim - rank_out - rank_in,
            torsion,
            cycle_basis: out.kernel().to_vec(),
            boundary_image,
        }
    }
}

fn check_top(x: &SimplicialLieObject, s: usize) -> Result<()> {
    match x.truncation() {
        Some(top) if s + 1 > top => domain(format!(
            "E² at level {s} needs level {} beyond truncation {top}",
            s + 1
        )),
        _ => Ok(()),
    }
}

/// Exact E² (Lie part) at `(s, t)`.
pub fn e2_report(
    x: &SimplicialLieObject,
    s: usize,
    t: u32,
    integral: bool,
    bounds: SliceBounds,
) -> Result<HomologyReport> {
    check_top(x, s)?;
    let here = chain_slice(x, s, t, bounds)?;
    let above = chain_slice(x, s + 1, t, bounds)?;
    if above.target_basis != here.basis {
        return Err(HhopError::Domain("slice bases disagree".into()));
    }
    Ok(HomologyReport::from_slices(&here, &above, integral))
}

/// E² over a window, ordered by `(t, s)`. Slices are built in parallel.
pub fn e2_table(
    x: &SimplicialLieObject,
    s_range: std::ops::RangeInclusive<usize>,
    t_range: std::ops::RangeInclusive<u32>,
    integral: bool,
    bounds: SliceBounds,
) -> Result<Vec<HomologyReport>> {
    check_top(x, *s_range.end())?;
    let keys: Vec<(u32, usize)> = t_range
        .clone()
        .flat_map(|t| (*s_range.start()..=*s_range.end() + 1).map(move |s| (t, s)))
        .collect();
    let slices: BTreeMap<(u32, usize), ChainSlice> = keys
        .par_iter()
        .map(|&(t, s)| chain_slice(x, s, t, bounds).map(|c| ((t, s), c)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();
    let mut out = Vec::new();
    for t in t_range {
        for s in s_range.clone() {
            out.push(HomologyReport::from_slices(
                &slices[&(t, s)],
                &slices[&(t, s + 1)],
                integral,
            ));
        }
    }
    Ok(out)
}

/// A preimage of `e` under `∂_{s+1}` in the normalized complex, if any.
pub fn is_boundary(
    x: &SimplicialLieObject,
    s: usize,
    t: u32,
    e: &LieElement,
    bounds: SliceBounds,
) -> Result<Option<LieElement>> {
    let here = chain_slice(x, s, t, bounds)?;
    let target = here.coordinates(e)?;
    if target.is_empty() {
        return Ok(Some(LieElement::zero()));
    }
    check_top(x, s)?;
    let above = chain_slice(x, s + 1, t, bounds)?;
    let echelon = ColumnEchelon::build(&above.boundary);
    Ok(echelon.solve(&target).map(|v| above.element(&v)))
}

/// Slice basis split into monomials on a single group and mixed ones.
#[derive(Debug, Clone)]
pub struct CrossTermSplit {
    pub pure: Vec<usize>,
    pub cross: Vec<usize>,
}

fn group_count(m: &LieMonomial, grouping: &dyn Fn(&GeneratorSymbol) -> String) -> usize {
    let mut groups: Vec<String> = m.letters().iter().map(|l| grouping(&l.generator)).collect();
    groups.sort();
    groups.dedup();
    groups.len()
}

/// Splits a slice basis by generator groups.
pub fn cross_term_basis(
    slice: &ChainSlice,
    grouping: &dyn Fn(&GeneratorSymbol) -> String,
) -> CrossTermSplit {
    let (cross, pure): (Vec<usize>, Vec<usize>) =
        (0..slice.dim()).partition(|&i| group_count(&slice.basis[i], grouping) > 1);
    CrossTermSplit { pure, cross }
}

/// The boundary restricted to cross-term columns, with rows re-indexed to the
/// cross-term part of the target. Errors if the restriction leaves the span.
pub fn cross_term_boundary(
    slice: &ChainSlice,
    grouping: &dyn Fn(&GeneratorSymbol) -> String,
) -> Result<SparseMatrix> {
    let split = cross_term_basis(slice, grouping);
    let target_cross: Vec<usize> = (0..slice.target_basis.len())
        .filter(|&i| group_count(&slice.target_basis[i], grouping) > 1)
        .collect();
    let row_index: HashMap<usize, usize> = target_cross
        .iter()
        .enumerate()
        .map(|(k, &i)| (i, k))
        .collect();
    let mut columns = Vec::new();
    for &j in &split.cross {
        let mut col = SparseVector::new();
        for (i, c) in &slice.boundary.columns[j] {
            let k = row_index.get(i).ok_or_else(|| {
                HhopError::Domain(format!(
                    "boundary of cross-term {} has a pure component",
                    slice.basis[j]
                ))
            })?;
            col.insert(*k, c.clone());
        }
        columns.push(col);
    }
    Ok(SparseMatrix::new(target_cross.len(), columns))
}

/// Rational rank of the cross-term homology at `(s, t)`.
pub fn cross_term_e2_rank(
    x: &SimplicialLieObject,
    s: usize,
    t: u32,
    grouping: &dyn Fn(&GeneratorSymbol) -> String,
    bounds: SliceBounds,
) -> Result<usize> {
    check_top(x, s)?;
    let here = chain_slice(x, s, t, bounds)?;
    let above = chain_slice(x, s + 1, t, bounds)?;
    let dim = cross_term_basis(&here, grouping).cross.len();
    let out = cross_term_boundary(&here, grouping)?.rank();
    let into = cross_term_boundary(&above, grouping)?.rank();
    Ok(dim - out - into)
}

/// Data for the alternating-sum test on the cross-term complex below level `n`.
#[derive(Debug, Clone, Serialize)]
pub struct CrossTermEuler {
    pub t: u32,
    pub n: usize,
    /// Cross-term dimensions for `s = 0..=n`.
    pub dims: Vec<usize>,
    /// Ranks of the restricted boundary `∂_s` for `s = 1..=n`.
    pub ranks: Vec<usize>,
    /// `Σ_{s<n} (-1)^s dim_s + (-1)^n rank ∂_n`.
    pub alternating_sum: i64,
}

/// Computes [`CrossTermEuler`]. The sum vanishes exactly when the cross-term
/// homology vanishes in levels below `n`.
pub fn cross_term_euler(
    x: &SimplicialLieObject,
    n: usize,
    t: u32,
    grouping: &dyn Fn(&GeneratorSymbol) -> String,
    bounds: SliceBounds,
) -> Result<CrossTermEuler> {
    let slices: Vec<ChainSlice> = (0..=n)
        .into_par_iter()
        .map(|s| chain_slice(x, s, t, bounds))
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = slices
        .iter()
        .map(|c| cross_term_basis(c, grouping).cross.len())
        .collect();
    let ranks: Vec<usize> = slices[1..]
        .iter()
        .map(|c| cross_term_boundary(c, grouping).map(|m| m.rank()))
        .collect::<Result<_>>()?;
    let mut sum: i64 = 0;
    for (s, &d) in dims.iter().enumerate().take(n) {
        sum += if s % 2 == 0 { d as i64 } else { -(d as i64) };
    }
    let top = ranks.last().copied().unwrap_or(0) as i64;
    sum += if n.is_multiple_of(2) { top } else { -top };
    Ok(CrossTermEuler {
        t,
        n,
        dims,
        ranks,
        alternating_sum: sum,
    })
}

/// Rational coefficient vector as strings, for reports.
pub fn format_vector(v: &SparseVector) -> Vec<(usize, String)> {
    v.iter()
        .map(|(&i, c): (&usize, &Scalar)| (i, c.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suspension_fundamental_class() {
        let x = GeneratorSymbol::plain("x", 3).unwrap();
        let z = SimplicialLieObject::suspension_resolution(&[x], 2).unwrap();
        let b = SliceBounds::default();
        assert_eq!(chain_slice(&z, 1, 3, b).unwrap().dim(), 0);
        let r = e2_report(&z, 2, 3, true, b).unwrap();
        assert_eq!(r.rational_rank, 1);
        assert_eq!(r.torsion, Some(vec![]));
        // Σ²S⁴ = S⁶ carries the rational Whitehead square in (s=4, t=6).
        assert_eq!(e2_report(&z, 4, 6, false, b).unwrap().rational_rank, 1);
        // Σ²S³ = S⁵ is rationally a single class.
        let y = GeneratorSymbol::plain("y", 2).unwrap();
        let z = SimplicialLieObject::suspension_resolution(&[y], 2).unwrap();
        for s in 0..6 {
            for t in 1..10 {
                let r = e2_report(&z, s, t, false, b).unwrap();
                let expect = usize::from(s == 2 && t == 2);
                assert_eq!(r.rational_rank, expect, "s={s} t={t}");
            }
        }
    }
}
