//! Simplicial objects in free graded Lie algebras presented by CW bases.
//!
//! Level `s` of an object is the free Lie algebra on the letters `s_I g`
//! with `g` a CW generator of home dimension `k <= s` and `I ⊆ {0..s-1}`,
//! `|I| = s - k`. Faces and degeneracies are Lie homomorphisms determined on
//! letters by the simplicial identities, with `d_0 g` the attaching element
//! and `d_j g = 0` for `j >= 1`.

mod spec_file;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{domain, HhopError, Result};
use crate::lie::maps::substitute_raw;
use crate::lie::{
    DegeneracyWord, FaceOutcome, GeneratorSymbol, Letter, LieElement, LieMap, MAX_LEVEL,
};

pub use spec_file::{GeneratorSpec, ResolutionSpec};

/// A CW generator with its attaching element in level `home_dim - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwGenerator {
    pub symbol: GeneratorSymbol,
    pub attaching: LieElement,
    /// Set when the attaching element is a rational stand-in for a class
    /// that is not itself a Lie element.
    pub rationalized: bool,
}

impl CwGenerator {
    pub fn new(symbol: GeneratorSymbol, attaching: LieElement) -> Self {
        CwGenerator {
            symbol,
            attaching,
            rationalized: false,
        }
    }

    pub fn free(symbol: GeneratorSymbol) -> Self {
        Self::new(symbol, LieElement::zero())
    }

    pub fn home_dim(&self) -> usize {
        self.symbol.home_dim() as usize
    }
}

#[derive(Debug, Clone)]
enum Structure {
    Cw,
    Wedge(Vec<Arc<SimplicialLieObject>>),
    Splice {
        junction: usize,
        lower: Arc<SimplicialLieObject>,
        upper: Arc<SimplicialLieObject>,
        fhat: LieMap,
    },
    Prolongation {
        from_level: usize,
        lower: Option<Arc<SimplicialLieObject>>,
    },
}

/// A simplicial Lie object described by a CW basis plus assembly data.
#[derive(Debug, Clone)]
pub struct SimplicialLieObject {
    label: String,
    generators: Vec<CwGenerator>,
    attaching: HashMap<GeneratorSymbol, LieElement>,
    truncation: Option<usize>,
    zero_faces_added: usize,
    structure: Structure,
}

/// One failed identity `d_i d_j = d_{j-1} d_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub level: usize,
    pub faces: (usize, usize),
    pub witness: LieElement,
    pub difference: LieElement,
}

/// Outcome of [`SimplicialLieObject::verify_simplicial_identities`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl IdentityReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_unique_names<'a>(gens: impl IntoIterator<Item = &'a GeneratorSymbol>) -> Result<()> {
    let mut seen = BTreeSet::new();
    for g in gens {
        if !seen.insert(g.name().to_string()) {
            return Err(HhopError::Naming(format!(
                "generator name {} used twice",
                g.name()
            )));
        }
    }
    Ok(())
}

fn fits(e: &LieElement, s: usize) -> bool {
    e.letters().iter().all(|l| l.fits_level(s))
}

impl SimplicialLieObject {
    fn assemble(
        label: &str,
        generators: Vec<CwGenerator>,
        truncation: Option<usize>,
        structure: Structure,
    ) -> Self {
        let attaching = generators
            .iter()
            .map(|g| (g.symbol.clone(), g.attaching.clone()))
            .collect();
        SimplicialLieObject {
            label: label.to_string(),
            generators,
            attaching,
            truncation,
            zero_faces_added: 0,
            structure,
        }
    }

    /// A CW object. Attaching elements must be homogeneous of the generator's
    /// degree and live in level `home_dim - 1` on letters of this basis.
    pub fn cw(
        label: &str,
        generators: Vec<CwGenerator>,
        truncation: Option<usize>,
    ) -> Result<Self> {
        check_unique_names(generators.iter().map(|g| &g.symbol))?;
        let known: BTreeSet<&GeneratorSymbol> = generators.iter().map(|g| &g.symbol).collect();
        for g in &generators {
            let home = g.home_dim();
            if home > MAX_LEVEL {
                return domain(format!("home dimension {home} exceeds {MAX_LEVEL}"));
            }
            if g.attaching.is_zero() {
                continue;
            }
            if home == 0 {
                return Err(HhopError::MalformedElement(format!(
                    "{} sits in level 0 and cannot be attached",
                    g.symbol.name()
                )));
            }
            if g.attaching.degree() != Some(g.symbol.reduced_degree()) {
                return Err(HhopError::MalformedElement(format!(
                    "attaching element of {} is not homogeneous of degree {}",
                    g.symbol.name(),
                    g.symbol.reduced_degree()
                )));
            }
            for l in g.attaching.letters() {
                if !known.contains(&l.generator) {
                    return Err(HhopError::UnboundGenerator(l.generator.name().to_string()));
                }
                if !l.fits_level(home - 1) {
                    return Err(HhopError::MalformedElement(format!(
                        "attaching element of {} has letter {l} outside level {}",
                        g.symbol.name(),
                        home - 1
                    )));
                }
            }
        }
        Ok(Self::assemble(label, generators, truncation, Structure::Cw))
    }

    /// `A ⊗̂ S^m`: every generator at home dimension `m` with zero attaching element.
    pub fn suspension_resolution(gens: &[GeneratorSymbol], m: usize) -> Result<Self> {
        if m < 1 {
            return domain("suspension level must be at least 1");
        }
        let cw = gens
            .iter()
            .map(|g| CwGenerator::free(g.with_home(m as u32)))
            .collect();
        Self::cw(&format!("suspension^{m}"), cw, None)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn generators(&self) -> &[CwGenerator] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&GeneratorSymbol> {
        self.generators
            .iter()
            .map(|g| &g.symbol)
            .find(|g| g.name() == name)
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn zero_faces_added(&self) -> usize {
        self.zero_faces_added
    }

    pub fn is_cw(&self) -> bool {
        matches!(self.structure, Structure::Cw)
    }

    /// Lowest level on which faces are fully defined.
    pub fn lowest_level(&self) -> usize {
        match &self.structure {
            Structure::Cw => 0,
            Structure::Wedge(parts) => parts.iter().map(|p| p.lowest_level()).max().unwrap_or(0),
            Structure::Splice { lower, .. } => lower.lowest_level(),
            Structure::Prolongation { from_level, lower } => match lower {
                Some(w) => w.lowest_level(),
                None => *from_level,
            },
        }
    }

    fn check_level(&self, s: usize) -> Result<()> {
        if s > MAX_LEVEL {
            return domain(format!("level {s} exceeds {MAX_LEVEL}"));
        }
        match self.truncation {
            Some(t) if s > t => domain(format!("level {s} beyond truncation {t}")),
            _ => Ok(()),
        }
    }

    /// Extra zero faces in effect at level `s`.
    fn shift_at(&self, s: usize) -> usize {
        self.zero_faces_added
            + match &self.structure {
                Structure::Cw | Structure::Wedge(_) => 0,
                Structure::Splice {
                    junction,
                    lower,
                    upper,
                    ..
                } => {
                    if s < *junction {
                        lower.shift_at(s)
                    } else {
                        upper.shift_at(s)
                    }
                }
                Structure::Prolongation { from_level, lower } => match lower {
                    Some(w) if s < *from_level => w.shift_at(s),
                    _ => 0,
                },
            }
    }

    /// Number of face maps out of level `s`, minus one.
    pub fn face_arity(&self, s: usize) -> usize {
        s + self.shift_at(s)
    }

    /// All letters spanning level `s`.
    pub fn level_generators(&self, s: usize) -> Result<Vec<Letter>> {
        self.check_level(s)?;
        Ok(match &self.structure {
            Structure::Cw => {
                let mut out = Vec::new();
                for g in &self.generators {
                    let home = g.home_dim();
                    if home > s {
                        continue;
                    }
                    for subset in (0..s).combinations(s - home) {
                        let w = DegeneracyWord::from_indices(&subset)?;
                        out.push(Letter::new(w, g.symbol.clone()));
                    }
                }
                out.sort();
                out
            }
            Structure::Wedge(parts) => {
                let mut out = Vec::new();
                for p in parts {
                    out.extend(p.level_generators(s)?);
                }
                out.sort();
                out
            }
            Structure::Splice {
                junction,
                lower,
                upper,
                ..
            } => {
                if s < *junction {
                    lower.level_generators(s)?
                } else {
                    upper.level_generators(s)?
                }
            }
            Structure::Prolongation { from_level, lower } => {
                if s >= *from_level {
                    let w = DegeneracyWord::s0_power(s - from_level);
                    self.generators
                        .iter()
                        .filter(|g| g.home_dim() == *from_level)
                        .map(|g| Letter::new(w, g.symbol.clone()))
                        .sorted()
                        .collect()
                } else {
                    match lower {
                        Some(w) => w.level_generators(s)?,
                        None => Vec::new(),
                    }
                }
            }
        })
    }

    fn own_attaching(&self, g: &GeneratorSymbol) -> Result<&LieElement> {
        self.attaching.get(g).ok_or_else(|| {
            HhopError::Domain(format!("{} is not a generator of {}", g.name(), self.label))
        })
    }

    /// Face rule for CW bases: rewrite through the word, then `d_0 g` is the
    /// attaching element and higher faces of `g` vanish.
    fn cw_face_letter(&self, i: usize, l: &Letter) -> Result<LieElement> {
        let attaching = self.own_attaching(&l.generator)?;
        Ok(match l.word.face(i) {
            FaceOutcome::Collapse(w) => {
                LieElement::from_letter(Letter::new(w, l.generator.clone()))
            }
            FaceOutcome::Through { word, face: 0 } => attaching.apply_degeneracies(&word),
            FaceOutcome::Through { .. } => LieElement::zero(),
        })
    }

    fn component_of(parts: &[Arc<SimplicialLieObject>], g: &GeneratorSymbol) -> Result<usize> {
        parts
            .iter()
            .position(|p| p.attaching.contains_key(g))
            .ok_or_else(|| {
                HhopError::Domain(format!("{} is not a generator of the wedge", g.name()))
            })
    }

    /// `d_i` of a single letter at level `s`, for `i <= s`.
    fn face_letter(&self, s: usize, i: usize, l: &Letter) -> Result<LieElement> {
        match &self.structure {
            Structure::Cw => self.cw_face_letter(i, l),
            Structure::Wedge(parts) => {
                let c = Self::component_of(parts, &l.generator)?;
                parts[c].face_letter(s, i, l)
            }
            Structure::Splice {
                junction,
                lower,
                upper,
                fhat,
            } => {
                let m = *junction;
                if s < m {
                    lower.face_letter(s, i, l)
                } else if s == m {
                    let value = fhat.get(&l.generator).ok_or_else(|| {
                        HhopError::MalformedSplice(format!("no value for {}", l.generator.name()))
                    })?;
                    if i == 0 {
                        lower.face(m, 0, value)
                    } else {
                        Ok(LieElement::zero())
                    }
                } else {
                    upper.face_letter(s, i, l)
                }
            }
            Structure::Prolongation { from_level, lower } => {
                if s >= *from_level {
                    self.cw_face_letter(i, l)
                } else {
                    match lower {
                        Some(w) => w.face_letter(s, i, l),
                        None => domain(format!("level {s} lies below the prolongation")),
                    }
                }
            }
        }
    }

    fn degeneracy_letter(&self, s: usize, j: usize, l: &Letter) -> Result<LieElement> {
        match &self.structure {
            Structure::Cw => Ok(LieElement::from_letter(Letter::new(
                l.word.apply(j),
                l.generator.clone(),
            ))),
            Structure::Wedge(parts) => {
                let c = Self::component_of(parts, &l.generator)?;
                parts[c].degeneracy_letter(s, j, l)
            }
            Structure::Splice {
                junction,
                lower,
                upper,
                ..
            } => {
                if s + 1 < *junction {
                    lower.degeneracy_letter(s, j, l)
                } else if s >= *junction {
                    upper.degeneracy_letter(s, j, l)
                } else {
                    domain("no degeneracy into the junction level of a splice")
                }
            }
            Structure::Prolongation { from_level, lower } => {
                if s >= *from_level {
                    let w = l.word.apply(j);
                    if w != DegeneracyWord::s0_power(s + 1 - from_level) {
                        return domain(format!("s{j} leaves the s0-image at level {s}"));
                    }
                    Ok(LieElement::from_letter(Letter::new(w, l.generator.clone())))
                } else if s + 1 < *from_level {
                    match lower {
                        Some(w) => w.degeneracy_letter(s, j, l),
                        None => domain(format!("level {s} lies below the prolongation")),
                    }
                } else {
                    domain("no degeneracy into the first level of a prolongation")
                }
            }
        }
    }

    /// `d_i e` for a level-`s` element, normalized.
    pub fn face(&self, s: usize, i: usize, e: &LieElement) -> Result<LieElement> {
        self.check_level(s)?;
        if s == 0 {
            return domain("level 0 has no face maps");
        }
        let arity = self.face_arity(s);
        if i > arity {
            return domain(format!("face d{i} out of range at level {s} (max {arity})"));
        }
        if !fits(e, s) {
            return Err(HhopError::MalformedElement(format!(
                "{e} is not a level-{s} element"
            )));
        }
        if i > s || e.is_zero() {
            return Ok(LieElement::zero());
        }
        Ok(substitute_raw(e, &mut |l: &Letter| self.face_letter(s, i, l))?.normalize())
    }

    /// `s_j e` for a level-`s` element, normalized.
    pub fn degeneracy(&self, s: usize, j: usize, e: &LieElement) -> Result<LieElement> {
        self.check_level(s + 1)?;
        if j > s {
            return domain(format!("degeneracy s{j} out of range at level {s}"));
        }
        if !fits(e, s) {
            return Err(HhopError::MalformedElement(format!(
                "{e} is not a level-{s} element"
            )));
        }
        Ok(substitute_raw(e, &mut |l: &Letter| self.degeneracy_letter(s, j, l))?.normalize())
    }

    /// Killed by `d_1, ..., d_s` (and any padded faces).
    pub fn is_moore_chain(&self, s: usize, e: &LieElement) -> Result<bool> {
        if s == 0 {
            return Ok(true);
        }
        for i in 1..=s {
            if !self.face(s, i, e)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A Moore chain also killed by `d_0`. Every level-0 element is a cycle.
    pub fn is_moore_cycle(&self, s: usize, e: &LieElement) -> Result<bool> {
        if s == 0 {
            return Ok(true);
        }
        Ok(self.is_moore_chain(s, e)? && self.face(s, 0, e)?.is_zero())
    }

    /// `T^n X`: `n` more zero faces at every level.
    pub fn shift_t(&self, n: usize) -> Self {
        let mut out = self.clone();
        out.zero_faces_added += n;
        out
    }

    /// Coproduct: the free Lie algebra on the union of the bases.
    pub fn wedge(&self, other: &SimplicialLieObject) -> Result<Self> {
        let generators: Vec<CwGenerator> = self
            .generators
            .iter()
            .chain(other.generators.iter())
            .cloned()
            .collect();
        check_unique_names(generators.iter().map(|g| &g.symbol))?;
        let truncation = match (self.truncation, other.truncation) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let label = format!("{} v {}", self.label, other.label);
        if self.is_cw() && other.is_cw() && self.zero_faces_added == other.zero_faces_added {
            let mut out = Self::cw(&label, generators, truncation)?;
            out.zero_faces_added = self.zero_faces_added;
            return Ok(out);
        }
        if self.zero_faces_added != other.zero_faces_added {
            return domain("wedge summands must carry the same number of zero faces");
        }
        let mut parts = Vec::new();
        for x in [self, other] {
            let mut x = x.clone();
            x.zero_faces_added = 0;
            match x.structure {
                Structure::Wedge(inner) => parts.extend(inner),
                _ => parts.push(Arc::new(x)),
            }
        }
        let mut out = Self::assemble(&label, generators, truncation, Structure::Wedge(parts));
        out.zero_faces_added = self.zero_faces_added;
        Ok(out)
    }

    /// The s0-iterates of generators at home dimension `n`, with nothing
    /// below level `n`. Faces follow `d_0 s_0 = d_1 s_0 = id` and
    /// `d_i s_0 = s_0 d_{i-1}` for `i >= 2`.
    pub fn constant_prolongation(gens: Vec<CwGenerator>, n: usize) -> Result<Self> {
        for g in &gens {
            if g.home_dim() != n {
                return domain(format!("{} does not sit at level {n}", g.symbol.name()));
            }
            if !g.attaching.is_zero() && g.attaching.degree() != Some(g.symbol.reduced_degree()) {
                return Err(HhopError::MalformedElement(format!(
                    "attaching element of {} has the wrong degree",
                    g.symbol.name()
                )));
            }
        }
        check_unique_names(gens.iter().map(|g| &g.symbol))?;
        Ok(Self::assemble(
            &format!("c(level {n})"),
            gens,
            None,
            Structure::Prolongation {
                from_level: n,
                lower: None,
            },
        ))
    }

    /// The constant prolongation of the named level-`n` generators of `w`,
    /// placed over the levels of `w` below `n`.
    pub fn constant_prolongation_over(
        w: &SimplicialLieObject,
        names: &[&str],
        n: usize,
    ) -> Result<Self> {
        let mut chosen = Vec::new();
        for name in names {
            let g = w
                .generators
                .iter()
                .find(|g| g.symbol.name() == *name)
                .ok_or_else(|| HhopError::UnboundGenerator(name.to_string()))?;
            if g.home_dim() != n {
                return domain(format!("{name} does not sit at level {n}"));
            }
            chosen.push(g.clone());
        }
        let lower_gens: Vec<CwGenerator> = w
            .generators
            .iter()
            .filter(|g| g.home_dim() < n)
            .cloned()
            .collect();
        let mut all = lower_gens;
        all.extend(chosen);
        check_unique_names(all.iter().map(|g| &g.symbol))?;
        let lower = w.clone();
        Ok(Self::assemble(
            &format!("c(level {n}) over {}", w.label),
            all,
            None,
            Structure::Prolongation {
                from_level: n,
                lower: Some(Arc::new(lower)),
            },
        ))
    }

    /// `Z ∝ W` along `fhat`, requiring every value of `fhat` to be a Moore
    /// cycle of `W` at the junction level.
    pub fn splice(
        z: &SimplicialLieObject,
        w: &SimplicialLieObject,
        fhat: &LieMap,
        m: usize,
    ) -> Result<Self> {
        let out = Self::splice_unchecked(z, w, fhat, m)?;
        for (g, v) in fhat {
            if !w.is_moore_cycle(m, v)? {
                return Err(HhopError::MalformedSplice(format!(
                    "value of {} is not a Moore cycle at level {m}",
                    g.name()
                )));
            }
        }
        Ok(out)
    }

    /// As [`Self::splice`], but accepts Moore chains, so that the
    /// simplicial identities may fail.
    pub fn splice_unchecked(
        z: &SimplicialLieObject,
        w: &SimplicialLieObject,
        fhat: &LieMap,
        m: usize,
    ) -> Result<Self> {
        if m < 1 {
            return Err(HhopError::MalformedSplice(
                "junction level must be at least 1".into(),
            ));
        }
        for g in &z.generators {
            if g.home_dim() < m {
                return Err(HhopError::MalformedSplice(format!(
                    "{} sits below the junction level {m}",
                    g.symbol.name()
                )));
            }
            if g.home_dim() == m {
                if !g.attaching.is_zero() {
                    return Err(HhopError::MalformedSplice(format!(
                        "junction generator {} must have zero attaching element",
                        g.symbol.name()
                    )));
                }
                if !fhat.contains_key(&g.symbol) {
                    return Err(HhopError::MalformedSplice(format!(
                        "no value for junction generator {}",
                        g.symbol.name()
                    )));
                }
            }
        }
        let w_letters: BTreeSet<Letter> = w.level_generators(m)?.into_iter().collect();
        for (g, v) in fhat {
            if g.home_dim() as usize != m || !z.attaching.contains_key(g) {
                return Err(HhopError::MalformedSplice(format!(
                    "{} is not a junction generator",
                    g.name()
                )));
            }
            if !v.is_zero() && v.degree() != Some(g.reduced_degree()) {
                return Err(HhopError::MalformedSplice(format!(
                    "value of {} has degree {:?}, expected {}",
                    g.name(),
                    v.degree(),
                    g.reduced_degree()
                )));
            }
            if let Some(l) = v.letters().into_iter().find(|l| !w_letters.contains(l)) {
                return Err(HhopError::MalformedSplice(format!(
                    "value of {} uses {l}, which is not in level {m} of the lower object",
                    g.name()
                )));
            }
        }
        let mut gens: Vec<CwGenerator> = w
            .generators
            .iter()
            .filter(|g| g.home_dim() < m)
            .cloned()
            .collect();
        gens.extend(z.generators.iter().cloned());
        check_unique_names(gens.iter().map(|g| &g.symbol))?;
        Ok(Self::assemble(
            &format!("{} splice {}", z.label, w.label),
            gens,
            z.truncation,
            Structure::Splice {
                junction: m,
                lower: Arc::new(w.clone()),
                upper: Arc::new(z.clone()),
                fhat: fhat.clone(),
            },
        ))
    }

    /// Checks `d_i d_j = d_{j-1} d_i` for `i < j` on every letter of degree at
    /// most `max_degree` in levels up to `max_level`.
    pub fn verify_simplicial_identities(
        &self,
        max_level: usize,
        max_degree: u32,
    ) -> Result<IdentityReport> {
        let top = self.truncation.map_or(max_level, |t| t.min(max_level));
        let mut jobs = Vec::new();
        for s in (self.lowest_level() + 2)..=top {
            for l in self.level_generators(s)? {
                if l.degree() <= max_degree {
                    jobs.push((s, l));
                }
            }
        }
        let results: Vec<Result<(usize, Vec<Violation>)>> = jobs
            .par_iter()
            .map(|(s, l)| self.check_letter(*s, l))
            .collect();
        let mut report = IdentityReport::default();
        for r in results {
            let (n, v) = r?;
            report.checked += n;
            report.violations.extend(v);
        }
        Ok(report)
    }

    fn check_letter(&self, s: usize, l: &Letter) -> Result<(usize, Vec<Violation>)> {
        let e = LieElement::from_letter(l.clone());
        let arity = self.face_arity(s);
        let faces: Vec<LieElement> = (0..=arity)
            .map(|i| self.face(s, i, &e))
            .collect::<Result<_>>()?;
        let mut checked = 0;
        let mut violations = Vec::new();
        for j in 1..=arity {
            for i in 0..j {
                checked += 1;
                let lhs = self.face(s - 1, i, &faces[j])?;
                let rhs = self.face(s - 1, j - 1, &faces[i])?;
                let difference = (&lhs - &rhs).normalize();
                if !difference.is_zero() {
                    violations.push(Violation {
                        level: s,
                        faces: (i, j),
                        witness: e.clone(),
                        difference,
                    });
                }
            }
        }
        Ok((checked, violations))
    }
}

impl PartialEq for SimplicialLieObject {
    fn eq(&self, other: &Self) -> bool {
        self.is_cw()
            && other.is_cw()
            && self.label == other.label
            && self.generators == other.generators
            && self.truncation == other.truncation
            && self.zero_faces_added == other.zero_faces_added
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iota(name: &str, deg: u32, home: u32) -> GeneratorSymbol {
        GeneratorSymbol::new(name, deg, home).unwrap()
    }

    #[test]
    fn suspension_levels() {
        let x = iota("x", 2, 0);
        let z = SimplicialLieObject::suspension_resolution(std::slice::from_ref(&x), 1).unwrap();
        assert!(z.level_generators(0).unwrap().is_empty());
        let l2 = z.level_generators(2).unwrap();
        let shown: Vec<String> = l2.iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, vec!["s0 x", "s1 x"]);
        let z3 = SimplicialLieObject::suspension_resolution(&[x], 3).unwrap();
        assert_eq!(z3.level_generators(4).unwrap().len(), 4);
        assert!(z3.verify_simplicial_identities(6, 12).unwrap().is_clean());
    }

    #[test]
    fn faces_of_degeneracies() {
        let x = iota("x", 2, 0);
        let z = SimplicialLieObject::suspension_resolution(std::slice::from_ref(&x), 1).unwrap();
        let g = x.with_home(1);
        let s0 = LieElement::degenerate_generator(&[0], &g).unwrap();
        assert_eq!(z.face(2, 1, &s0).unwrap(), LieElement::generator(&g));
        assert!(!z.is_moore_chain(2, &s0).unwrap());
        assert!(z.is_moore_chain(2, &LieElement::zero()).unwrap());
        let t = z.shift_t(2);
        assert_eq!(t.face_arity(2), 4);
        assert!(t.face(2, 4, &s0).unwrap().is_zero());
        assert!(t.face(2, 5, &s0).is_err());
        assert!(t.verify_simplicial_identities(5, 12).unwrap().is_clean());
    }

    #[test]
    fn degeneracies_are_canonical() {
        let g = iota("x", 2, 1);
        let z = SimplicialLieObject::suspension_resolution(&[g.with_home(0)], 1).unwrap();
        let s0 = LieElement::degenerate_generator(&[0], &g).unwrap();
        assert_eq!(z.degeneracy(2, 0, &s0).unwrap().to_string(), "s1s0 x");
        assert_eq!(z.degeneracy(2, 1, &s0).unwrap().to_string(), "s1s0 x");
        assert!(z.degeneracy(2, 3, &s0).is_err());
    }

    #[test]
    fn corrupted_attaching_is_caught() {
        let a = iota("a", 1, 0);
        let a2 = iota("a2", 1, 0);
        let b = iota("b", 2, 1);
        let c = iota("c", 3, 2);
        let bracket =
            LieElement::bracket(&LieElement::generator(&a), &LieElement::generator(&a2)).unwrap();
        // [s0 a, b] is not a Moore cycle, since d0 gives [a, [a, a2]].
        let s0a = LieElement::degenerate_generator(&[0], &a).unwrap();
        let bad = LieElement::bracket(&s0a, &LieElement::generator(&b)).unwrap();
        let x = SimplicialLieObject::cw(
            "bad",
            vec![
                CwGenerator::free(a),
                CwGenerator::free(a2),
                CwGenerator::new(b, bracket),
                CwGenerator::new(c, bad),
            ],
            None,
        )
        .unwrap();
        let report = x.verify_simplicial_identities(4, 12).unwrap();
        assert!(!report.is_clean());
        assert!(report.checked > 0);
    }

    #[test]
    fn wedge_rejects_collisions() {
        let x = SimplicialLieObject::suspension_resolution(&[iota("x", 2, 0)], 1).unwrap();
        let y = SimplicialLieObject::suspension_resolution(&[iota("y", 2, 0)], 2).unwrap();
        let xy = x.wedge(&y).unwrap();
        assert_eq!(xy.level_generators(2).unwrap().len(), 3);
        assert!(matches!(x.wedge(&x), Err(HhopError::Naming(_))));
        let empty = SimplicialLieObject::cw("empty", vec![], None).unwrap();
        assert_eq!(x.wedge(&empty).unwrap().generators(), x.generators());
    }

    #[test]
    fn prolongation_faces() {
        let g = iota("g", 2, 2);
        let c = SimplicialLieObject::constant_prolongation(vec![CwGenerator::free(g.clone())], 2)
            .unwrap();
        assert_eq!(c.level_generators(2).unwrap().len(), 1);
        let s0g = LieElement::degenerate_generator(&[0], &g).unwrap();
        let lg = LieElement::generator(&g);
        assert_eq!(c.face(3, 0, &s0g).unwrap(), lg);
        assert_eq!(c.face(3, 1, &s0g).unwrap(), lg);
        assert!(c.face(3, 2, &s0g).unwrap().is_zero());
        let s1s0g = LieElement::degenerate_generator(&[0, 1], &g).unwrap();
        assert_eq!(
            c.face(4, 3, &s1s0g).unwrap(),
            c.degeneracy(2, 0, &c.face(3, 2, &s0g).unwrap()).unwrap()
        );
        assert!(c.verify_simplicial_identities(6, 12).unwrap().is_clean());
        assert!(c.degeneracy(3, 2, &s0g).is_err());
    }
}
