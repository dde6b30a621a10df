//! Free differential graded Lie algebras, Lie-Massey defining systems and the
//! two hand-built models used as fixtures.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::power_of_minus_one;
use crate::error::{domain, HhopError, Result};
use crate::lie::{
    apply_derivation, hall_basis, parse_element, substitute_raw, symbol_table, GeneratorSymbol,
    Letter, LieElement, LieMap, LieMonomial, Scalar, SymbolTable,
};
use crate::linalg::{ColumnEchelon, SparseMatrix, SparseVector};
use crate::simplicial::{CwGenerator, SimplicialLieObject};

/// A free DGL: generators in DGL degree (the reduced degree of the symbol)
/// and a degree -1 differential given on generators.
///
/// The differential is a derivation for the graded commutator
/// `<a, b> = (-1)^{|a|} [a, b]`, written `<a, b>` in expressions.
#[derive(Debug, Clone)]
pub struct Dgl {
    label: String,
    generators: Vec<GeneratorSymbol>,
    differential: LieMap,
}

impl Dgl {
    /// Builds the DGL from `(generator, d(generator))` pairs.
    pub fn new(label: &str, entries: Vec<(GeneratorSymbol, LieElement)>) -> Result<Self> {
        let generators: Vec<GeneratorSymbol> = entries.iter().map(|(g, _)| g.clone()).collect();
        symbol_table(&generators)?;
        if let Some(g) = generators.iter().find(|g| g.home_dim() != 0) {
            return domain(format!(
                "DGL generator {} must have home dimension 0",
                g.name()
            ));
        }
        let known: BTreeSet<&GeneratorSymbol> = generators.iter().collect();
        let mut differential = LieMap::new();
        for (g, dg) in entries {
            if let Some(l) = dg
                .letters()
                .into_iter()
                .find(|l| !known.contains(&l.generator))
            {
                return Err(HhopError::UnboundGenerator(l.generator.name().to_string()));
            }
            if !dg.is_zero() && dg.degree() != Some(g.reduced_degree() - 1) {
                return Err(HhopError::MalformedMap(format!(
                    "d({}) must have degree {}",
                    g.name(),
                    g.reduced_degree() - 1
                )));
            }
            differential.insert(g, dg.normalize());
        }
        Ok(Dgl {
            label: label.to_string(),
            generators,
            differential,
        })
    }

    /// Builds the DGL from `(name, degree, d-expression)` rows.
    pub fn from_rows(label: &str, rows: &[(&str, u32, &str)]) -> Result<Self> {
        let symbols: Vec<GeneratorSymbol> = rows
            .iter()
            .map(|(n, d, _)| GeneratorSymbol::plain(n, *d))
            .collect::<Result<_>>()?;
        let table = symbol_table(&symbols)?;
        let entries = symbols
            .into_iter()
            .zip(rows)
            .map(|(g, (_, _, text))| Ok((g, parse_element(text, &table)?)))
            .collect::<Result<_>>()?;
        Self::new(label, entries)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generators(&self) -> &[GeneratorSymbol] {
        &self.generators
    }

    pub fn differential(&self) -> &LieMap {
        &self.differential
    }

    pub fn symbols(&self) -> SymbolTable {
        symbol_table(&self.generators).expect("names checked at construction")
    }

    pub fn generator(&self, name: &str) -> Result<LieElement> {
        self.generators
            .iter()
            .find(|g| g.name() == name)
            .map(LieElement::generator)
            .ok_or_else(|| HhopError::UnboundGenerator(name.to_string()))
    }

    pub fn parse(&self, text: &str) -> Result<LieElement> {
        parse_element(text, &self.symbols())
    }

    /// Restriction to the generators of degree at most `max_degree`.
    pub fn truncated(&self, max_degree: u32) -> Result<Self> {
        let entries = self
            .generators
            .iter()
            .filter(|g| g.reduced_degree() <= max_degree)
            .map(|g| (g.clone(), self.differential[g].clone()))
            .collect();
        Self::new(&format!("{} (degree <= {max_degree})", self.label), entries)
    }

    /// `d(e)`, normalized.
    pub fn d(&self, e: &LieElement) -> Result<LieElement> {
        apply_derivation(&self.differential, e)
    }

    /// Generators on which `d ∘ d` does not vanish, with the defect.
    pub fn square_defects(&self) -> Result<Vec<(String, LieElement)>> {
        let mut out = Vec::new();
        for g in &self.generators {
            let dd = self.d(&self.differential[g])?;
            if !dd.is_zero() {
                out.push((g.name().to_string(), dd));
            }
        }
        Ok(out)
    }

    /// Homology data in one degree.
    pub fn homology(&self, degree: u32) -> Result<DglHomology> {
        DglHomology::build(self, degree)
    }
}

fn degree_basis(dgl: &Dgl, degree: u32) -> Result<Vec<LieMonomial>> {
    if degree == 0 {
        return Ok(Vec::new());
    }
    hall_basis(&dgl.generators, degree, degree as usize)
}

fn coordinates(
    index: &BTreeMap<LieMonomial, usize>,
    e: &LieElement,
    degree: u32,
) -> Result<SparseVector> {
    let mut v = SparseVector::new();
    for (m, c) in e.normalize().terms() {
        let i = index.get(m).ok_or_else(|| {
            HhopError::Domain(format!("{m} is not a degree-{degree} basis monomial"))
        })?;
        v.insert(*i, c.clone());
    }
    Ok(v)
}

fn differential_matrix(
    dgl: &Dgl,
    source: &[LieMonomial],
    target_index: &BTreeMap<LieMonomial, usize>,
    target_degree: u32,
) -> Result<SparseMatrix> {
    let columns = source
        .iter()
        .map(|m| {
            coordinates(
                target_index,
                &dgl.d(&LieElement::from_monomial(m.clone()))?,
                target_degree,
            )
        })
        .collect::<Result<_>>()?;
    Ok(SparseMatrix::new(target_index.len(), columns))
}

/// Cycles and boundaries of a free DGL in one degree.
pub struct DglHomology {
    pub degree: u32,
    pub basis: Vec<LieMonomial>,
    index: BTreeMap<LieMonomial, usize>,
    /// `d` from degree `degree + 1`.
    pub incoming: SparseMatrix,
    /// `d` to degree `degree - 1`.
    pub outgoing: SparseMatrix,
    boundaries: ColumnEchelon,
}

impl DglHomology {
    fn build(dgl: &Dgl, degree: u32) -> Result<Self> {
        let basis = degree_basis(dgl, degree)?;
        let index: BTreeMap<LieMonomial, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let above = degree_basis(dgl, degree + 1)?;
        let incoming = differential_matrix(dgl, &above, &index, degree)?;
        let below = degree_basis(dgl, degree.saturating_sub(1))?;
        let below_index: BTreeMap<LieMonomial, usize> =
            below.into_iter().enumerate().map(|(i, m)| (m, i)).collect();
        let outgoing = differential_matrix(dgl, &basis, &below_index, degree.saturating_sub(1))?;
        let boundaries = ColumnEchelon::build(&incoming);
        Ok(DglHomology {
            degree,
            basis,
            index,
            incoming,
            outgoing,
            boundaries,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.dim() - self.outgoing.rank() - self.boundaries.rank()
    }

    pub fn coordinates(&self, e: &LieElement) -> Result<SparseVector> {
        coordinates(&self.index, e, self.degree)
    }

    pub fn is_cycle(&self, e: &LieElement) -> Result<bool> {
        Ok(self.outgoing.apply(&self.coordinates(e)?).is_empty())
    }

    pub fn is_boundary(&self, e: &LieElement) -> Result<bool> {
        Ok(self.boundaries.contains(&self.coordinates(e)?))
    }

    /// The scalar `c` with `v - c·alpha` a boundary, when `alpha` is not.
    pub fn multiple_of(&self, v: &LieElement, alpha: &LieElement) -> Result<Option<Scalar>> {
        let a = self.coordinates(alpha)?;
        if self.boundaries.contains(&a) {
            return domain("reference class is a boundary");
        }
        let mut columns = self.incoming.columns.clone();
        columns.push(a);
        let extended = ColumnEchelon::build(&SparseMatrix::new(self.dim(), columns));
        let Some(x) = extended.solve(&self.coordinates(v)?) else {
            return Ok(None);
        };
        // Coefficients on the boundary columns are not unique, the one on alpha is.
        Ok(Some(
            x.get(&self.incoming.cols())
                .cloned()
                .unwrap_or_else(Scalar::zero),
        ))
    }
}

/// Cycles `x_1..x_n` with chosen `x_I` for proper index tuples `I`.
#[derive(Debug, Clone)]
pub struct DefiningSystem {
    pub dgl: Dgl,
    pub inputs: Vec<LieElement>,
    /// Keys are strictly ascending 1-based tuples of length `2..n`.
    pub entries: BTreeMap<Vec<usize>, LieElement>,
}

impl DefiningSystem {
    pub fn new(
        dgl: Dgl,
        inputs: Vec<LieElement>,
        entries: BTreeMap<Vec<usize>, LieElement>,
    ) -> Result<Self> {
        let n = inputs.len();
        if inputs.iter().any(|x| !x.is_homogeneous() || x.is_zero()) {
            return domain("inputs must be nonzero and homogeneous");
        }
        for (key, x) in &entries {
            check_tuple(key, n)?;
            if key.len() < 2 || key.len() >= n {
                return domain(format!(
                    "entry {key:?} is not a proper tuple of length >= 2"
                ));
            }
            if !x.is_homogeneous() {
                return domain(format!("entry {key:?} is not homogeneous"));
            }
        }
        Ok(DefiningSystem {
            dgl,
            inputs,
            entries,
        })
    }

    pub fn len(&self) -> usize {
        self.inputs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inputs.is_empty()
    }

    fn input_degree(&self, i: usize) -> i64 {
        i64::from(self.inputs[i - 1].degree().expect("checked homogeneous"))
    }

    /// Degree of `x_I`: the input degrees plus `|I| - 1`.
    pub fn formal_degree(&self, tuple: &[usize]) -> i64 {
        tuple.iter().map(|&i| self.input_degree(i)).sum::<i64>() + tuple.len() as i64 - 1
    }

    fn entry(&self, tuple: &[usize]) -> Result<LieElement> {
        if tuple.len() == 1 {
            return Ok(self.inputs[tuple[0] - 1].clone());
        }
        self.entries
            .get(tuple)
            .cloned()
            .ok_or_else(|| HhopError::IncompleteSystem(format!("no entry for {tuple:?}")))
    }
}

fn check_tuple(tuple: &[usize], n: usize) -> Result<()> {
    if tuple.is_empty()
        || !tuple.windows(2).all(|w| w[0] < w[1])
        || tuple[0] == 0
        || tuple[tuple.len() - 1] > n
    {
        return domain(format!("{tuple:?} is not an ascending tuple in 1..={n}"));
    }
    Ok(())
}

/// `x̃_I = Σ (-1)^{ε(J,K) + |x_J| + 1} <x_J, x_K>` over splittings of `I`
/// into subsequences `J, K` with `j_1 < k_1`, in the graded commutator.
/// Brackets are left as written.
pub fn lie_massey_obstruction(system: &DefiningSystem, tuple: &[usize]) -> Result<LieElement> {
    check_tuple(tuple, system.len())?;
    if tuple.len() < 2 {
        return domain("the obstruction needs at least two indices");
    }
    let rest = &tuple[1..];
    let mut out = LieElement::zero();
    for size in 0..rest.len() {
        for extra in rest.iter().copied().combinations(size) {
            let mut j = vec![tuple[0]];
            j.extend(&extra);
            let k: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|x| !extra.contains(x))
                .collect();
            let mut epsilon = 0i64;
            for &a in &j {
                for &b in k.iter().filter(|&&b| b < a) {
                    epsilon += (system.input_degree(a) + 1) * (system.input_degree(b) + 1);
                }
            }
            let sign = power_of_minus_one(epsilon + system.formal_degree(&j) + 1);
            let term = LieElement::commutator_raw(&system.entry(&j)?, &system.entry(&k)?);
            out += &term.scale_int(sign.into());
        }
    }
    Ok(out)
}

/// An entry whose differential misses its obstruction.
#[derive(Debug, Clone, Serialize)]
pub struct SystemDefect {
    pub tuple: Vec<usize>,
    pub defect: String,
}

/// Result of checking a defining system.
#[derive(Debug, Clone, Serialize)]
pub struct SystemReport {
    pub entries_checked: usize,
    pub defects: Vec<SystemDefect>,
    /// Inputs that are not cycles, by 1-based position.
    pub non_cycle_inputs: Vec<usize>,
    pub value: String,
    pub value_degree: Option<u32>,
    pub value_is_cycle: bool,
    pub value_bounds: Option<bool>,
    #[serde(skip)]
    pub value_element: LieElement,
}

impl SystemReport {
    pub fn is_valid(&self) -> bool {
        self.defects.is_empty() && self.non_cycle_inputs.is_empty()
    }
}

/// Checks `d(x_I) = x̃_I` for every required tuple and evaluates the top
/// obstruction, deciding whether it bounds in its degree.
pub fn verify_defining_system(system: &DefiningSystem) -> Result<SystemReport> {
    let n = system.len();
    let dgl = &system.dgl;
    let mut non_cycle_inputs = Vec::new();
    for (i, x) in system.inputs.iter().enumerate() {
        if !dgl.d(x)?.is_zero() {
            non_cycle_inputs.push(i + 1);
        }
    }
    let mut defects = Vec::new();
    let mut checked = 0;
    for size in 2..n {
        for tuple in (1..=n).combinations(size) {
            checked += 1;
            let want = lie_massey_obstruction(system, &tuple)?;
            let got = match system.entries.get(&tuple) {
                Some(x) => dgl.d(x)?,
                None => {
                    return Err(HhopError::IncompleteSystem(format!(
                        "no entry for {tuple:?}"
                    )));
                }
            };
            let diff = (&got - &want).normalize();
            if !diff.is_zero() {
                defects.push(SystemDefect {
                    tuple,
                    defect: diff.to_string(),
                });
            }
        }
    }
    let top: Vec<usize> = (1..=n).collect();
    let value = lie_massey_obstruction(system, &top)?.normalize();
    let value_is_cycle = dgl.d(&value)?.is_zero();
    let value_bounds = match value.degree() {
        Some(t) if value_is_cycle => Some(dgl.homology(t)?.is_boundary(&value)?),
        _ if value.is_zero() => Some(true),
        _ => None,
    };
    Ok(SystemReport {
        entries_checked: checked,
        defects,
        non_cycle_inputs,
        value: value.to_string(),
        value_degree: value.degree(),
        value_is_cycle,
        value_bounds,
        value_element: value,
    })
}

/// The model from the 7-sphere bundle example, with the data around the
/// triple bracket `<y, x, x>`.
#[derive(Debug, Clone)]
pub struct BmfFixture {
    /// Generators through degree 7, using the first candidate for `yx2`.
    pub dgl: Dgl,
    /// The two readings of `d(yx2)`.
    pub candidates: [LieElement; 2],
    /// `2<yx, x> + <x2, y>`, the sign that makes it a cycle.
    pub alpha: LieElement,
    /// `2<yx, x> - <x2, y>` as printed next to the table.
    pub alpha_as_printed: LieElement,
    pub system: DefiningSystem,
}

const BMF_ROWS: &[(&str, u32, &str)] = &[
    ("x", 1, "0"),
    ("x2", 3, "1/2*<x, x>"),
    ("y", 3, "0"),
    ("x3", 5, "1/2*<x2, x> + 1/2*<x, x2>"),
    ("yx", 5, "1/2*<y, x>"),
    ("z", 6, "0"),
    ("y2", 7, "z + 1/2*<y, y>"),
    ("yx2", 7, "z + <yx, x> + 1/2*<x2, y>"),
];

pub fn bmf_fixture() -> Result<BmfFixture> {
    let dgl = Dgl::from_rows("bmf", BMF_ROWS)?;
    let candidates = [
        dgl.parse("z + <yx, x> + 1/2*<x2, y>")?,
        dgl.parse("z + 1/2*<yx, x> + 1/2*<x2, y>")?,
    ];
    let alpha = dgl.parse("2*<yx, x> + <x2, y>")?;
    let alpha_as_printed = dgl.parse("2*<yx, x> - <x2, y>")?;
    let y = dgl.generator("y")?;
    let x = dgl.generator("x")?;
    let mut entries = BTreeMap::new();
    entries.insert(vec![1, 2], dgl.parse("2*yx")?);
    entries.insert(vec![1, 3], dgl.parse("2*yx")?);
    entries.insert(vec![2, 3], dgl.parse("2*x2")?);
    let system = DefiningSystem::new(dgl.clone(), vec![y, x.clone(), x], entries)?;
    Ok(BmfFixture {
        dgl,
        candidates,
        alpha,
        alpha_as_printed,
        system,
    })
}

impl BmfFixture {
    /// The model with `d(yx2)` replaced by candidate `i`.
    pub fn with_candidate(&self, i: usize) -> Result<Dgl> {
        let entries = self
            .dgl
            .generators()
            .iter()
            .map(|g| {
                let dg = if g.name() == "yx2" {
                    self.candidates[i].clone()
                } else {
                    self.dgl.differential()[g].clone()
                };
                (g.clone(), dg)
            })
            .collect();
        Dgl::new(&format!("bmf (candidate {})", i + 1), entries)
    }
}

/// The three-fold example with odd degrees `p, q, r`: the filtered model,
/// its defining system, and the simplicial resolution carrying `φ`.
#[derive(Debug, Clone)]
pub struct TripleFixture {
    pub dgl: Dgl,
    pub system: DefiningSystem,
    pub resolution: SimplicialLieObject,
    /// `[s0 ι_p, ι_qr] + [ι_pq, s0 ι_r] + [ι_pr, s0 ι_q]` at level 1.
    pub phi: LieElement,
    /// The Lie-Massey value pushed to level 1 by `x_i ↦ s0 ι_i`,
    /// `x_ij ↦ ι_ij`, with each `<a, b>` read as `±[a, b]`.
    pub lifted: LieElement,
}

pub fn triple_fixture(p: u32, q: u32, r: u32) -> Result<TripleFixture> {
    if [p, q, r].iter().any(|d| d % 2 == 0) {
        return domain("degrees must be odd");
    }
    let m = p + q + r + 1;
    let names = ["p", "q", "r"];
    let degs = [p, q, r];
    let mut rows: Vec<(String, u32, String)> = names
        .iter()
        .zip(degs)
        .map(|(n, d)| (format!("x_{n}"), d, "0".to_string()))
        .collect();
    rows.push(("z".into(), m, "0".into()));
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        rows.push((
            format!("x_{}{}", names[a], names[b]),
            degs[a] + degs[b] + 1,
            format!("<x_{}, x_{}>", names[a], names[b]),
        ));
    }
    rows.push((
        "x_pqr".into(),
        m + 1,
        "<x_p, x_qr> + <x_pq, x_r> + <x_pr, x_q> - z".into(),
    ));
    let borrowed: Vec<(&str, u32, &str)> = rows
        .iter()
        .map(|(a, d, c)| (a.as_str(), *d, c.as_str()))
        .collect();
    let dgl = Dgl::from_rows("triple", &borrowed)?;
    let inputs = ["x_p", "x_q", "x_r"]
        .iter()
        .map(|n| dgl.generator(n))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = BTreeMap::new();
    for (key, name) in [
        (vec![1, 2], "x_pq"),
        (vec![1, 3], "x_pr"),
        (vec![2, 3], "x_qr"),
    ] {
        entries.insert(key, dgl.generator(name)?);
    }
    let system = DefiningSystem::new(dgl.clone(), inputs, entries)?;

    let mut gens = Vec::new();
    let mut lift = BTreeMap::new();
    for (n, d) in names.iter().zip(degs) {
        let g = GeneratorSymbol::new(&format!("iota_{n}"), d, 0)?;
        lift.insert(
            format!("x_{n}"),
            LieElement::degenerate_generator(&[0], &g)?,
        );
        gens.push(CwGenerator::free(g));
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let (na, nb) = (names[a], names[b]);
        let g = GeneratorSymbol::new(&format!("iota_{na}{nb}"), degs[a] + degs[b], 1)?;
        let attaching = LieElement::bracket_raw(
            &LieElement::generator(&gens[a].symbol),
            &LieElement::generator(&gens[b].symbol),
        );
        lift.insert(format!("x_{na}{nb}"), LieElement::generator(&g));
        gens.push(CwGenerator::new(g, attaching.normalize()));
    }
    let resolution = SimplicialLieObject::cw("triple resolution", gens, Some(1))?;
    let value = lie_massey_obstruction(&system, &[1, 2, 3])?;
    let lifted = substitute_raw(
        &value,
        &mut |l: &Letter| match lift.get(l.generator.name()) {
            Some(v) => Ok(v.apply_degeneracies(&l.word)),
            None => domain(format!("{} has no lift", l.generator.name())),
        },
    )?;
    let table = symbol_table(resolution.generators().iter().map(|g| &g.symbol))?;
    let phi = parse_element(
        "[s0 iota_p, iota_qr] + [iota_pq, s0 iota_r] + [iota_pr, s0 iota_q]",
        &table,
    )?;
    Ok(TripleFixture {
        dgl,
        system,
        resolution,
        phi,
        lifted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bmf_candidates() {
        let f = bmf_fixture().unwrap();
        assert!(f.dgl.square_defects().unwrap().is_empty());
        assert!(f.with_candidate(1).unwrap().square_defects().unwrap().len() == 1);
        assert!(f.dgl.d(&f.alpha).unwrap().is_zero());
        assert!(!f.dgl.d(&f.alpha_as_printed).unwrap().is_zero());
    }

    #[test]
    fn bmf_value() {
        let f = bmf_fixture().unwrap();
        let r = verify_defining_system(&f.system).unwrap();
        assert!(r.is_valid(), "{r:?}");
        let v = r.value_element.normalize();
        assert_eq!(v, f.alpha.scale_int(2).normalize(), "value {}", r.value);
    }

    #[test]
    fn triple_value_lifts_to_a_cycle() {
        for (p, q, r) in [(1, 3, 5), (3, 3, 3), (1, 1, 1), (5, 1, 3)] {
            let t = triple_fixture(p, q, r).unwrap();
            assert!(t.dgl.square_defects().unwrap().is_empty());
            let r = verify_defining_system(&t.system).unwrap();
            assert!(r.is_valid(), "{r:?}");
            let want = t
                .dgl
                .parse("<x_p, x_qr> + <x_pq, x_r> + <x_pr, x_q>")
                .unwrap();
            assert_eq!(r.value_element.normalize(), want.normalize());
            assert!(t.resolution.is_moore_cycle(1, &t.phi).unwrap());
            assert_eq!(t.lifted.normalize(), (-t.phi.clone()).normalize());
            assert_eq!(t.phi.len(), 3);
        }
    }
}
