//! Verification suites behind `hhop verify`.

use anyhow::{anyhow, bail, Result};
use hhop::catalog::whitehead::sphere_grouping;
use hhop::catalog::{
    bmf_fixture, boundary_ledger, comparison_coefficient, cpn_comparison_map, cpn_resolution,
    gamma, higher_wp_resolution, omega_hat, phi_full, top_comparison, triple_fixture,
    verify_chain_map, verify_defining_system,
};
use hhop::combinatorics::DegreeVector;
use hhop::lie::{parse_element, symbol_table, GeneratorSymbol};
use hhop::spectral::{boundary_of, cross_term_e2_rank, e2_report, is_boundary, SliceBounds};
use hhop::LieElement;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{Suite, VerifyArgs};
use crate::report::{Check, Report};
use crate::targets::{degrees_of, resolve};

pub fn run(a: &VerifyArgs) -> Result<Report> {
    match a.suite {
        Suite::Cpn => cpn(a),
        Suite::OmegaHat => omega(a),
        Suite::Phi => phi(a),
        Suite::Massey => massey(a),
        Suite::Ledger => ledger(a),
        Suite::Simplicial => simplicial(a),
        Suite::Moore => moore(a),
        Suite::Lie => lie(a),
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

fn cpn(a: &VerifyArgs) -> Result<Report> {
    let n = a.source.params.n.unwrap_or(6);
    if n < 1 {
        bail!("--n must be at least 1");
    }
    let mut report = Report::new("verify", format!("cpn n={n}"));
    for k in 0..n.min(5) + 1 {
        let want = factorial(k + 1) * if (k / 2) % 2 == 0 { 1 } else { -1 };
        let got = comparison_coefficient(k);
        report.push_check(Check::expect(
            format!("coefficient k={k}"),
            got == want,
            format!("{got}"),
        ));
    }
    for m in 1..=n {
        let c = cpn_comparison_map(m)?;
        let r = verify_chain_map(&c.map, &c.source, &c.target, m as usize - 1)?;
        let name = format!("chain map n={m}");
        let detail = format!("{} faces, {} defects", r.checked, r.defects.len());
        match r.defects.first() {
            None => report.push_check(Check::pass(name, detail)),
            Some(d) => report.push_check(Check::fail(
                name,
                detail,
                Some(format!("{} face {}: {}", d.generator, d.face, d.difference)),
            )),
        }
    }
    let v = cpn_resolution(n.max(3))?;
    let table = symbol_table(v.generators().iter().map(|g| &g.symbol))?;
    let closed = [
        (2, "[iota_3, s0 iota_2]"),
        (3, "[iota_4, s1s0 iota_2] - [s0 iota_3, s1 iota_3]"),
    ];
    for (k, text) in closed {
        let got = gamma(k)?.normalize();
        let want = parse_element(text, &table)?.normalize();
        report.push_check(Check::expect(
            format!("gamma {k} closed form"),
            got == want,
            got.to_string(),
        ));
    }
    for k in 2..=n {
        let x = cpn_resolution(k)?;
        let ok = x.is_moore_cycle(k as usize - 1, &gamma(k)?)?;
        report.push_check(Check::expect(
            format!("gamma {k} Moore cycle"),
            ok,
            format!("level {}", k - 1),
        ));
    }
    if n >= 3 {
        let (image, g3) = top_comparison(3)?;
        report.push_check(Check::expect(
            "f(phi) = -24 gamma 3",
            image == g3.scale_int(-24),
            image.to_string(),
        ));
    }
    Ok(report)
}

fn omega(a: &VerifyArgs) -> Result<Report> {
    let p = &a.source.params;
    let dims: Vec<u32> = p.p.map_or_else(|| vec![3, 4, 5], |v| vec![v]);
    let dims_q: Vec<u32> = p.q.map_or_else(|| vec![3, 4, 5], |v| vec![v]);
    let ks: Vec<usize> = p.k.map_or_else(|| (0..=3).collect(), |v| vec![v]);
    let mut report = Report::new("verify", "omega_hat Moore cycles");
    for &sp in &dims {
        for &sq in &dims_q {
            for &k in &ks {
                let ls: Vec<usize> = p.l.map_or_else(|| (0..=k).collect(), |v| vec![v]);
                for l in ls {
                    let w = omega_hat(sp, sq, k, l)?;
                    let ok = w.object.is_moore_cycle(w.level, &w.element)?;
                    report.push_check(Check::expect(
                        format!("omega_hat({sp},{sq},{k},{l})"),
                        ok,
                        format!("{} terms at level {}", w.element.len(), w.level),
                    ));
                }
            }
        }
    }
    Ok(report)
}

fn phi(a: &VerifyArgs) -> Result<Report> {
    let vectors: Vec<DegreeVector> = match &a.source.params.degrees {
        Some(_) => vec![degrees_of(&a.source.params)?],
        None => {
            let mut v: Vec<DegreeVector> = Vec::new();
            for m in 3..=4u32 {
                for code in 0..3usize.pow(m) {
                    let d = (0..m)
                        .map(|i| (code / 3usize.pow(i) % 3) as u32 + 1)
                        .collect();
                    v.push(DegreeVector::new(d)?);
                }
            }
            v.push(DegreeVector::units(5));
            v
        }
    };
    let mut report = Report::new("verify", "phi Moore cycles");
    for d in vectors {
        if d.len() < 2 {
            bail!("phi needs at least two spheres");
        }
        let x = higher_wp_resolution(&d)?;
        let e = phi_full(&d)?;
        let ok = x.is_moore_cycle(d.len() - 2, &e)?;
        report.push_check(Check::expect(
            format!("phi{:?}", d.degrees()),
            ok,
            format!("{} terms at level {}", e.len(), d.len() - 2),
        ));
    }
    Ok(report)
}

fn massey(a: &VerifyArgs) -> Result<Report> {
    let p = &a.source.params;
    let triples: Vec<(u32, u32, u32)> = match (p.p, p.q, p.r) {
        (None, None, None) => vec![(1, 1, 1), (1, 3, 5), (3, 3, 3), (5, 1, 3)],
        (x, y, z) => vec![(x.unwrap_or(1), y.unwrap_or(1), z.unwrap_or(1))],
    };
    let mut report = Report::new("verify", "Lie-Massey systems");
    for (x, y, z) in triples {
        let t = triple_fixture(x, y, z)?;
        let tag = format!("triple({x},{y},{z})");
        report.push_check(Check::expect(
            format!("{tag} d^2 = 0"),
            t.dgl.square_defects()?.is_empty(),
            "all generators",
        ));
        let r = verify_defining_system(&t.system)?;
        report.push_check(Check::expect(
            format!("{tag} defining system"),
            r.is_valid(),
            format!("{} entries, value {}", r.entries_checked, r.value),
        ));
        report.push_check(Check::expect(
            format!("{tag} value is a cycle"),
            r.value_is_cycle,
            r.value.clone(),
        ));
        let lift_ok = t.resolution.is_moore_cycle(1, &t.phi)?
            && t.lifted.normalize() == (-t.phi.clone()).normalize();
        report.push_check(Check::expect(
            format!("{tag} lift"),
            lift_ok,
            "lifted value = -phi, a Moore cycle",
        ));
    }
    let f = bmf_fixture()?;
    report.push_check(Check::expect(
        "bmf d^2 = 0",
        f.dgl.square_defects()?.is_empty(),
        "all generators",
    ));
    report.push_check(Check::expect(
        "bmf d(alpha) = 0",
        f.dgl.d(&f.alpha)?.is_zero(),
        f.alpha.to_string(),
    ));
    let r = verify_defining_system(&f.system)?;
    report.push_check(Check::expect(
        "bmf defining system",
        r.is_valid(),
        format!("value {}", r.value),
    ));
    let h = f.dgl.truncated(6)?.homology(6)?;
    match h.multiple_of(&r.value_element, &f.alpha)? {
        Some(c) if !c.is_zero() => report.push_check(Check::pass(
            "bmf value",
            format!("{c} alpha, nonzero in degree 6"),
        )),
        Some(_) => report.push_check(Check::fail(
            "bmf value",
            "a boundary",
            Some(r.value.clone()),
        )),
        None => report.push_check(Check::fail(
            "bmf value",
            "not a multiple of alpha",
            Some(r.value.clone()),
        )),
    }
    Ok(report)
}

fn ledger(a: &VerifyArgs) -> Result<Report> {
    let p = a.source.params.p.unwrap_or(4);
    let q = a.source.params.q.unwrap_or(4);
    let (object, identities) = boundary_ledger(p, q)?;
    let mut report = Report::new("verify", format!("ledger p={p} q={q}"));
    for (i, id) in identities.iter().enumerate() {
        let got = boundary_of(&object, 5, &id.witness)?.drop_degenerate();
        let lhs = id.lhs.normalize().drop_degenerate();
        let name = format!("identity {}", i + 1);
        if got == lhs {
            report.push_check(Check::pass(name, "lhs = d(witness)"));
        } else if got == -lhs.clone() {
            report.push_check(Check::pass(name, "lhs = -d(witness)"));
        } else {
            report.push_check(Check::fail(
                name,
                "lhs is not d(±witness)",
                Some(got.to_string()),
            ));
        }
    }
    let bounds = SliceBounds::default();
    let t = p + q - 2;
    let w = omega_hat(p, q, 2, 2)?;
    let cross = cross_term_e2_rank(&w.object, 2, t, &sphere_grouping, bounds)?;
    report.push_check(Check::expect(
        "cross-term rank k=l=2",
        cross == 0,
        format!("rank {cross} at (s=2, t={t})"),
    ));
    for (k, l) in [(1, 1), (2, 2)] {
        let w = omega_hat(p, q, k, l)?;
        let s = k + l;
        let r = e2_report(&w.object, s, t, false, bounds)?;
        let nonzero =
            r.rational_rank > 0 && is_boundary(&w.object, s, t, &w.element, bounds)?.is_none();
        report.push_check(Check::expect(
            format!("omega_hat({k},{l}) nonzero in E2"),
            nonzero,
            format!("E2 rank {} at (s={s}, t={t})", r.rational_rank),
        ));
    }
    Ok(report)
}

fn simplicial(a: &VerifyArgs) -> Result<Report> {
    let r = resolve(&a.source)?;
    let x = r.object()?;
    let ids = x.verify_simplicial_identities(a.max_level, a.max_degree)?;
    let mut report = Report::new("verify", format!("simplicial {}", r.name));
    let detail = format!("{} identities through level {}", ids.checked, a.max_level);
    match ids.violations.first() {
        None => report.push_check(Check::pass("d_i d_j = d_{j-1} d_i", detail)),
        Some(v) => report.push_check(Check::fail(
            "d_i d_j = d_{j-1} d_i",
            format!("{detail}, {} violations", ids.violations.len()),
            Some(format!(
                "level {}, faces {:?} on {}",
                v.level, v.faces, v.witness
            )),
        )),
    }
    Ok(report)
}

fn moore(a: &VerifyArgs) -> Result<Report> {
    let r = resolve(&a.source)?;
    let x = r.object()?;
    let e = r.element()?;
    let s = r.level()?;
    let mut report = Report::new("verify", format!("moore {} at level {s}", r.name));
    report.push_check(Check::expect(
        "Moore chain",
        x.is_moore_chain(s, e)?,
        "d_i = 0 for i >= 1",
    ));
    report.push_check(Check::expect(
        "Moore cycle",
        x.is_moore_cycle(s, e)?,
        "all faces vanish",
    ));
    Ok(report)
}

/// Random bracket trees on three generators, checked for idempotent normal
/// forms, antisymmetry and the Jacobi identity.
fn lie(a: &VerifyArgs) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut report = Report::new("verify", format!("lie seed={} cases={}", a.seed, a.cases));
    let mut failures: [Option<String>; 3] = [None, None, None];
    for _ in 0..a.cases {
        let gens: Vec<GeneratorSymbol> = ["a", "b", "c"]
            .iter()
            .map(|n| GeneratorSymbol::plain(n, rng.gen_range(1..5)))
            .collect::<hhop::Result<_>>()?;
        let x = random_tree(&mut rng, &gens, 3);
        let y = random_tree(&mut rng, &gens, 3);
        let z = random_tree(&mut rng, &gens, 3);
        let br = LieElement::bracket_raw;
        let nf = x.normalize();
        if nf.normalize() != nf && failures[0].is_none() {
            failures[0] = Some(x.to_string());
        }
        let (dx, dy, dz) = (degree(&x)?, degree(&y)?, degree(&z)?);
        let sign = |p: u32, q: u32| {
            if ((p + 1) * (q + 1)).is_multiple_of(2) {
                1
            } else {
                -1
            }
        };
        let anti = br(&x, &y).normalize() - br(&y, &x).normalize().scale_int(sign(dx, dy));
        if !anti.normalize().is_zero() && failures[1].is_none() {
            failures[1] = Some(format!("[{x}, {y}]"));
        }
        let jacobi = br(&br(&x, &y), &z).scale_int(sign(dx, dz))
            + br(&br(&y, &z), &x).scale_int(sign(dy, dx))
            + br(&br(&z, &x), &y).scale_int(sign(dz, dy));
        if !jacobi.normalize().is_zero() && failures[2].is_none() {
            failures[2] = Some(format!("{x}; {y}; {z}"));
        }
    }
    for (name, f) in ["normal form idempotent", "antisymmetry", "Jacobi"]
        .into_iter()
        .zip(failures)
    {
        let detail = format!("{} cases", a.cases);
        match f {
            None => report.push_check(Check::pass(name, detail)),
            Some(w) => report.push_check(Check::fail(name, detail, Some(w))),
        }
    }
    Ok(report)
}

fn degree(e: &LieElement) -> Result<u32> {
    e.degree()
        .ok_or_else(|| anyhow!("inhomogeneous element {e}"))
}

fn random_tree(rng: &mut ChaCha8Rng, gens: &[GeneratorSymbol], depth: u32) -> LieElement {
    if depth == 0 || rng.gen_bool(0.4) {
        return LieElement::generator(&gens[rng.gen_range(0..gens.len())]);
    }
    let l = random_tree(rng, gens, depth - 1);
    let r = random_tree(rng, gens, depth - 1);
    LieElement::bracket_raw(&l, &r)
}
