//! Generators, degeneracy words and decorated letters.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::combinatorics::IndexSet;
use crate::error::{domain, Result};

/// A free generator of reduced degree `p >= 1` (class in π_{p+1}) sitting at
/// simplicial dimension `home_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSymbol {
    name: Arc<str>,
    reduced_degree: u32,
    home_dim: u32,
}

impl GeneratorSymbol {
    pub fn new(name: &str, reduced_degree: u32, home_dim: u32) -> Result<Self> {
        validate_name(name)?;
        if reduced_degree == 0 {
            return domain(format!("generator {name} must have reduced degree >= 1"));
        }
        Ok(GeneratorSymbol {
            name: Arc::from(name),
            reduced_degree,
            home_dim,
        })
    }

    /// A generator at simplicial dimension 0, for plain Lie algebra use.
    pub fn plain(name: &str, reduced_degree: u32) -> Result<Self> {
        Self::new(name, reduced_degree, 0)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn reduced_degree(&self) -> u32 {
        self.reduced_degree
    }

    /// Dimension of the sphere carrying the class.
    pub fn sphere_dim(&self) -> u32 {
        self.reduced_degree + 1
    }

    pub fn home_dim(&self) -> u32 {
        self.home_dim
    }

    pub fn with_home(&self, home_dim: u32) -> Self {
        GeneratorSymbol {
            home_dim,
            ..self.clone()
        }
    }
}

impl Ord for GeneratorSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.reduced_degree, &*self.name, self.home_dim).cmp(&(
            other.reduced_degree,
            &*other.name,
            other.home_dim,
        ))
    }
}

impl PartialOrd for GeneratorSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Names start with a letter, must not look like a degeneracy token `s<digits>`,
/// and may contain alphanumerics, `_`, `^`, `'` and brace groups without commas
/// outside braces.
pub fn validate_name(name: &str) -> Result<()> {
    let mut chars = name.chars().peekable();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {
            if c == 's' && chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                return domain(format!("name {name:?} collides with degeneracy syntax"));
            }
        }
        _ => return domain(format!("name {name:?} must start with a letter")),
    }
    let mut depth = 0i32;
    for c in name.chars() {
        match c {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth < 0 {
                    return domain(format!("unbalanced braces in {name:?}"));
                }
            }
            ',' if depth > 0 => {}
            c if c.is_ascii_alphanumeric() || "_^'".contains(c) => {}
            _ => return domain(format!("invalid character {c:?} in name {name:?}")),
        }
    }
    if depth != 0 {
        return domain(format!("unbalanced braces in {name:?}"));
    }
    Ok(())
}

/// A canonical iterated degeneracy `s_I = s_{i_k} ... s_{i_1}` for the
/// ascending set `I = {i_1 < ... < i_k}`, stored as a bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct DegeneracyWord(u64);

/// Maximum simplicial level supported by the bitmask encoding.
pub const MAX_LEVEL: usize = 62;

/// Result of pushing a face map through a degeneracy word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceOutcome {
    /// `d_i s_I = s_J`: the face cancels one degeneracy.
    Collapse(DegeneracyWord),
    /// `d_i s_I = s_J d_k`: the face reaches the generator as `d_k`.
    Through { word: DegeneracyWord, face: usize },
}

fn remove_bit(mask: u64, pos: usize) -> u64 {
    let low = mask & ((1u64 << pos) - 1);
    let high = mask >> (pos + 1);
    low | (high << pos)
}

impl DegeneracyWord {
    pub fn empty() -> Self {
        DegeneracyWord(0)
    }

    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let set = IndexSet::new(indices.to_vec())?;
        Self::from_set(&set)
    }

    pub fn from_set(set: &IndexSet) -> Result<Self> {
        let mut mask = 0u64;
        for i in set.iter() {
            if i > MAX_LEVEL {
                return domain(format!("degeneracy index {i} exceeds {MAX_LEVEL}"));
            }
            mask |= 1 << i;
        }
        Ok(DegeneracyWord(mask))
    }

    /// The word `s_0^k`, i.e. `{0, .., k-1}`.
    pub fn s0_power(k: usize) -> Self {
        DegeneracyWord((1u64 << k) - 1)
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..64).filter(|i| self.0 >> i & 1 == 1).collect()
    }

    pub fn to_set(&self) -> IndexSet {
        IndexSet::from_unsorted(self.indices())
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, j: usize) -> bool {
        j < 64 && self.0 >> j & 1 == 1
    }

    pub fn mask(&self) -> u64 {
        self.0
    }

    /// Largest index, if any.
    pub fn max_index(&self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// `s_j ∘ s_I`, re-canonicalized.
    pub fn apply(&self, j: usize) -> Self {
        let low = self.0 & ((1u64 << j) - 1);
        let high = self.0 >> j;
        DegeneracyWord(low | (1 << j) | (high << (j + 1)))
    }

    /// `s_outer ∘ s_self`.
    pub fn then(&self, outer: &DegeneracyWord) -> Self {
        outer.indices().into_iter().fold(*self, |w, j| w.apply(j))
    }

    /// Rewrites `d_i s_I` by the simplicial identities.
    pub fn face(&self, i: usize) -> FaceOutcome {
        if self.contains(i) {
            FaceOutcome::Collapse(DegeneracyWord(remove_bit(self.0, i)))
        } else if i >= 1 && self.contains(i - 1) {
            FaceOutcome::Collapse(DegeneracyWord(remove_bit(self.0, i - 1)))
        } else {
            let below = (self.0 & ((1u64 << i) - 1)).count_ones() as usize;
            FaceOutcome::Through {
                word: DegeneracyWord(remove_bit(self.0, i)),
                face: i - below,
            }
        }
    }
}

impl Ord for DegeneracyWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices().cmp(&other.indices())
    }
}

impl PartialOrd for DegeneracyWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DegeneracyWord {
    /// Written as applied: `s1s0` for `{0,1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.indices().into_iter().rev() {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// A degeneracy-decorated generator `s_I g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub word: DegeneracyWord,
    pub generator: GeneratorSymbol,
}

impl Letter {
    pub fn new(word: DegeneracyWord, generator: GeneratorSymbol) -> Self {
        Letter { word, generator }
    }

    pub fn bare(generator: GeneratorSymbol) -> Self {
        Letter {
            word: DegeneracyWord::empty(),
            generator,
        }
    }

    pub fn degree(&self) -> u32 {
        self.generator.reduced_degree()
    }

    /// Simplicial level the letter lives in.
    pub fn level(&self) -> usize {
        self.generator.home_dim() as usize + self.word.len()
    }

    /// Whether the letter is a well-formed element of level `s`.
    pub fn fits_level(&self, s: usize) -> bool {
        self.level() == s && self.word.max_index().is_none_or(|m| m < s)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.generator, &self.word).cmp(&(&other.generator, &other.word))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "{}", self.generator.name())
        } else {
            write!(f, "{} {}", self.word, self.generator.name())
        }
    }
}
