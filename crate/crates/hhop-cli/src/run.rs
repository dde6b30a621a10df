//! Verb dispatch.

use anyhow::{bail, Result};
use hhop::lie::{hall_monomials, GeneratorSymbol, Letter};
use hhop::spectral::{e2_table, SliceBounds};
use hhop::{HhopError, LieElement, LieMap, SimplicialLieObject};

use crate::args::{Cli, Command, E2Args, FormulaArgs, HallArgs, SpliceArgs};
use crate::report::{Basis, Check, NamedElement, Outcome, RankRow, Report};
use crate::targets::resolve;
use crate::{fixtures, verify};

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let report = match &cli.command {
        Command::Formula(a) => formula(a)?,
        Command::Verify(a) => verify::run(a)?,
        Command::E2(a) => e2(a)?,
        Command::Splice(a) => splice(a)?,
        Command::Hall(a) => hall(a)?,
        Command::Fixtures(a) => fixtures::run(a)?,
    };
    Ok(report.into())
}

fn formula(a: &FormulaArgs) -> Result<Report> {
    let r = resolve(&a.source)?;
    let e = r.element()?;
    let mut report = Report::new("formula", &r.name);
    report.elements.push(NamedElement::new(&r.name, r.level, e));
    Ok(report)
}

fn e2(a: &E2Args) -> Result<Report> {
    let r = resolve(&a.source)?;
    let x = r.object()?;
    let bounds = SliceBounds {
        max_dim: a.max_dim,
        ..SliceBounds::default()
    };
    let rows = e2_table(x, a.s.clone(), a.t.clone(), a.integral, bounds)?;
    let mut report = Report::new(
        "e2",
        format!(
            "{} s={}..{} t={}..{}",
            r.name,
            a.s.start(),
            a.s.end(),
            a.t.start(),
            a.t.end()
        ),
    );
    report.ranks = rows.iter().map(RankRow::from).collect();
    Ok(report)
}

/// Splices `A ⊗̂ S^m` onto the object along the element, where `A` has one
/// generator `a` of the element's degree, and checks the junction and the
/// simplicial identities of the result.
fn splice(a: &SpliceArgs) -> Result<Report> {
    let r = resolve(&a.source)?;
    let w = r.object()?;
    let m = r.level()?;
    let value = r.element()?.normalize();
    let Some(degree) = value.degree() else {
        bail!("{} is not homogeneous", r.name);
    };
    if w.generator("a").is_some() {
        bail!("the object already has a generator named a");
    }
    let g = GeneratorSymbol::new("a", degree, m as u32)?;
    let z = SimplicialLieObject::suspension_resolution(std::slice::from_ref(&g), m)?;
    let mut fhat = LieMap::new();
    fhat.insert(g.clone(), value.clone());
    let mut report = Report::new("splice", format!("{} at level {m}", r.name));
    let y = match SimplicialLieObject::splice(&z, w, &fhat, m) {
        Ok(y) => y,
        Err(HhopError::MalformedSplice(msg)) => {
            report.push_check(Check::fail("junction", msg, Some(value.to_string())));
            return Ok(report);
        }
        Err(e) => return Err(e.into()),
    };
    let x = LieElement::generator(&g);
    let d0 = y.face(m, 0, &x)?;
    let want = w.face(m, 0, &value)?;
    report.push_check(Check::expect(
        "d0 of a",
        d0 == want,
        format!("d0(a) = {}", d0.normalize()),
    ));
    let mut nonzero = Vec::new();
    for i in 1..=m {
        if !y.face(m, i, &x)?.is_zero() {
            nonzero.push(i);
        }
    }
    report.push_check(Check::expect(
        "higher faces of a",
        nonzero.is_empty(),
        if nonzero.is_empty() {
            format!("d1..d{m} vanish")
        } else {
            format!("nonzero faces {nonzero:?}")
        },
    ));
    let ids = y.verify_simplicial_identities(m + a.extra, a.max_degree)?;
    let detail = format!("{} identities through level {}", ids.checked, m + a.extra);
    if ids.is_clean() {
        report.push_check(Check::pass("simplicial identities", detail));
    } else {
        let first = ids.violations.first().map(|v| {
            format!(
                "level {}, faces {:?} on {}: difference {}",
                v.level, v.faces, v.witness, v.difference
            )
        });
        report.push_check(Check::fail(
            "simplicial identities",
            format!("{detail}, {} violations", ids.violations.len()),
            first,
        ));
    }
    Ok(report)
}

fn hall(a: &HallArgs) -> Result<Report> {
    let letters: Vec<Letter> = a
        .degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| GeneratorSymbol::plain(&format!("x{}", i + 1), d).map(Letter::bare))
        .collect::<hhop::Result<_>>()?;
    let degrees = a
        .degrees
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let mut report = Report::new(
        "hall",
        format!("degrees={degrees} t={}..{}", a.t.start(), a.t.end()),
    );
    for t in a.t.clone() {
        if t == 0 {
            bail!("degree 0 has no Hall basis");
        }
        let weight = a.max_weight.unwrap_or(t as usize);
        let basis = hall_monomials(&letters, t, weight, Some(a.max_dim))?;
        report.bases.push(Basis {
            degree: t,
            count: basis.len(),
            monomials: (!a.counts).then(|| basis.iter().map(ToString::to_string).collect()),
        });
    }
    Ok(report)
}
