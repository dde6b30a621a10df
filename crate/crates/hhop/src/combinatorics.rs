//! Shuffles and their signs.
//!
//! Two coordinate systems are used: shuffles partition `{1..n}`, and the
//! associated multi-indices partition `{0..n-1}` (subtract one from every
//! entry). Enumeration order is lexicographic in the first block.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, HhopError, Result};

/// A finite set of non-negative integers, stored ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Builds a set from a strictly ascending sequence.
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return domain(format!("index set {elements:?} is not strictly ascending"));
        }
        Ok(IndexSet(elements))
    }

    /// Builds a set from arbitrary elements, sorting and removing duplicates.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut v: Vec<usize> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IndexSet(v)
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.iter().filter(|x| !other.contains(*x)).collect())
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet::from_unsorted(self.iter().chain(other.iter()))
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.iter().all(|x| !other.contains(x))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let parsed: std::result::Result<Vec<usize>, _> = text
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>())
            .collect();
        let v = parsed.map_err(serde::de::Error::custom)?;
        IndexSet::new(v).map_err(serde::de::Error::custom)
    }
}

/// An ordered tuple of pairwise-disjoint index sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShufflePartition {
    blocks: Vec<IndexSet>,
}

impl ShufflePartition {
    pub fn new(blocks: Vec<IndexSet>) -> Result<Self> {
        for (a, b) in blocks.iter().tuple_combinations() {
            if !a.is_disjoint(b) {
                return domain(format!("blocks {a} and {b} overlap"));
            }
        }
        Ok(ShufflePartition { blocks })
    }

    pub fn blocks(&self) -> &[IndexSet] {
        &self.blocks
    }

    pub fn first(&self) -> &IndexSet {
        &self.blocks[0]
    }

    pub fn second(&self) -> &IndexSet {
        &self.blocks[1]
    }

    /// The union of all blocks.
    pub fn ground(&self) -> IndexSet {
        IndexSet::from_unsorted(self.blocks.iter().flat_map(|b| b.iter()))
    }

    /// Converts a shuffle of `{1..n}` to multi-indices over `{0..n-1}`.
    pub fn to_multi_index(&self) -> Result<ShufflePartition> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                if b.contains(0) {
                    domain("shuffle blocks must not contain 0")
                } else {
                    Ok(IndexSet(b.iter().map(|x| x - 1).collect()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ShufflePartition { blocks })
    }

    /// Converts multi-indices over `{0..n-1}` to a shuffle of `{1..n}`.
    pub fn to_shuffle(&self) -> ShufflePartition {
        ShufflePartition {
            blocks: self
                .blocks
                .iter()
                .map(|b| IndexSet(b.iter().map(|x| x + 1).collect()))
                .collect(),
        }
    }
}

/// Reduced degrees `p_i >= 1`, indexed from 1 in shuffle coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeVector(Vec<u32>);

impl DegreeVector {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.contains(&0) {
            return domain("degree entries must be at least 1");
        }
        Ok(DegreeVector(degrees))
    }

    /// All entries equal to one, `n` times.
    pub fn units(n: usize) -> Self {
        DegreeVector(vec![1; n])
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree of the 1-based position `i`.
    pub fn at(&self, i: usize) -> Result<u32> {
        if i == 0 || i > self.0.len() {
            return domain(format!("index {i} outside 1..={}", self.0.len()));
        }
        Ok(self.0[i - 1])
    }

    /// Sum of degrees over a set of 1-based positions.
    pub fn total(&self, positions: &IndexSet) -> Result<u32> {
        positions.iter().map(|i| self.at(i)).sum()
    }
}

fn check_split(n: usize, k: usize) -> Result<()> {
    if k > n {
        return domain(format!("block size {k} exceeds ground size {n}"));
    }
    Ok(())
}

/// All `(k, n-k)`-shuffles of `{1..n}`, lexicographic in the first block.
pub fn enumerate_shuffles(n: usize, k: usize) -> Result<Vec<ShufflePartition>> {
    Ok(enumerate_index_partitions(n, k)?
        .into_iter()
        .map(|p| p.to_shuffle())
        .collect())
}

/// Shuffles of `{1..n}`; when `n = 2k` only those whose first block holds 1.
pub fn enumerate_restricted_shuffles(n: usize, k: usize) -> Result<Vec<ShufflePartition>> {
    let all = enumerate_shuffles(n, k)?;
    if n == 2 * k {
        Ok(all.into_iter().filter(|p| p.first().contains(1)).collect())
    } else {
        Ok(all)
    }
}

/// Partitions `(I, J)` of `{0..n-1}` with `|I| = k`, lexicographic in `I`.
pub fn enumerate_index_partitions(n: usize, k: usize) -> Result<Vec<ShufflePartition>> {
    check_split(n, k)?;
    Ok((0..n)
        .combinations(k)
        .map(|first| {
            let second: Vec<usize> = (0..n).filter(|x| !first.contains(x)).collect();
            ShufflePartition {
                blocks: vec![IndexSet(first), IndexSet(second)],
            }
        })
        .collect())
}

/// Index partitions of `{0..n-1}`; when `n = 2k` only those with `0 ∈ I`.
pub fn enumerate_restricted_index_partitions(n: usize, k: usize) -> Result<Vec<ShufflePartition>> {
    let all = enumerate_index_partitions(n, k)?;
    if n == 2 * k {
        Ok(all.into_iter().filter(|p| p.first().contains(0)).collect())
    } else {
        Ok(all)
    }
}

fn parity_sign(odd: bool) -> i32 {
    if odd {
        -1
    } else {
        1
    }
}

/// Sign of the permutation sorting a concatenation of disjoint sequences.
fn concatenation_sign(blocks: &[&[usize]]) -> i32 {
    let seq: Vec<usize> = blocks.iter().flat_map(|b| b.iter().copied()).collect();
    let inversions = seq
        .iter()
        .enumerate()
        .map(|(a, x)| seq[a + 1..].iter().filter(|y| *y < x).count())
        .sum::<usize>();
    parity_sign(inversions % 2 == 1)
}

/// The ungraded shuffle sign `sgn(I, J)`.
///
/// Common elements are discarded first; the sign is that of the permutation
/// sorting the concatenation `(I \ J)·(J \ I)`.
pub fn shuffle_sign(first: &IndexSet, second: &IndexSet) -> i32 {
    let a = first.difference(second);
    let b = second.difference(first);
    concatenation_sign(&[a.elements(), b.elements()])
}

/// Sign of the permutation sorting the concatenation of several disjoint blocks.
pub fn multi_shuffle_sign(blocks: &[IndexSet]) -> Result<i32> {
    for (a, b) in blocks.iter().tuple_combinations() {
        if !a.is_disjoint(b) {
            return domain(format!("blocks {a} and {b} overlap"));
        }
    }
    let slices: Vec<&[usize]> = blocks.iter().map(|b| b.elements()).collect();
    Ok(concatenation_sign(&slices))
}

/// The Koszul sign `gsn` of a block concatenation.
///
/// Each inverted pair `(a, b)` contributes `(-1)^{p_a p_b + 1}`. Block entries
/// are 1-based positions into `degrees`.
pub fn koszul_sign(degrees: &DegreeVector, blocks: &ShufflePartition) -> Result<i32> {
    let seq: Vec<usize> = blocks.blocks().iter().flat_map(|b| b.iter()).collect();
    let degs: Vec<u32> = seq.iter().map(|&i| degrees.at(i)).collect::<Result<_>>()?;
    let mut exponent = 0u64;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[b] < seq[a] {
                exponent += u64::from(degs[a]) * u64::from(degs[b]) + 1;
            }
        }
    }
    Ok(parity_sign(exponent % 2 == 1))
}

/// Adds one to every element; optionally adjoins 0.
pub fn hat_shift(set: &IndexSet, prepend_zero: bool) -> IndexSet {
    let shifted = set.iter().map(|x| x + 1);
    if prepend_zero {
        IndexSet(std::iter::once(0).chain(shifted).collect())
    } else {
        IndexSet(shifted.collect())
    }
}

/// `(-1)^e` as an integer.
pub fn power_of_minus_one(e: i64) -> i32 {
    parity_sign(e.rem_euclid(2) == 1)
}

impl From<IndexSet> for Vec<usize> {
    fn from(s: IndexSet) -> Self {
        s.0
    }
}

impl TryFrom<Vec<usize>> for IndexSet {
    type Error = HhopError;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        IndexSet::new(v)
    }
}
