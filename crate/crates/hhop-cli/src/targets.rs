//! Catalog targets, spec files and the fixture directory.

use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use hhop::catalog::{
    bmf_fixture, cpn_resolution, gamma, higher_wp_resolution, lie_massey_obstruction, omega_hat,
    omega_triple, phi_full, phi_s, top_comparison, triple_fixture,
};
use hhop::combinatorics::DegreeVector;
use hhop::lie::{parse_element, symbol_table, SymbolTable};
use hhop::simplicial::ResolutionSpec;
use hhop::{LieElement, SimplicialLieObject};

use crate::args::{Params, Source};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Two-sphere representative on `(S^p ⊗ S^l) ∨ (S^q ⊗ S^k)`; `--p --q --k --l`.
    #[value(name = "omega_hat")]
    OmegaHat,
    /// Triple-product representative; sphere dimensions `--p --q --r`.
    #[value(name = "omega_triple")]
    OmegaTriple,
    /// Higher Whitehead attaching element; `--degrees`, optional `--tau`.
    Phi,
    /// Attaching element of the top cell in the complex projective resolution; `--n`.
    Gamma,
    /// Image of the top higher Whitehead element under the comparison map; `--n`.
    #[value(name = "cpn_image")]
    CpnImage,
    /// Lie-Massey value of the three-fold system; odd reduced degrees `--p --q --r`.
    #[value(name = "massey_triple")]
    MasseyTriple,
    /// The same value lifted to level 1 of the resolution.
    #[value(name = "triple_lift")]
    TripleLift,
    /// The degree-6 cycle of the seven-sphere bundle model.
    #[value(name = "bmf_alpha")]
    BmfAlpha,
    /// The Lie-Massey value `<y, x, x>` in the same model.
    #[value(name = "bmf_value")]
    BmfValue,
}

/// What a request refers to.
pub struct Resolved {
    pub name: String,
    pub object: Option<SimplicialLieObject>,
    pub element: Option<LieElement>,
    pub level: Option<usize>,
    pub symbols: SymbolTable,
}

impl Resolved {
    pub fn object(&self) -> Result<&SimplicialLieObject> {
        self.object
            .as_ref()
            .ok_or_else(|| anyhow!("{} has no simplicial object", self.name))
    }

    pub fn element(&self) -> Result<&LieElement> {
        self.element
            .as_ref()
            .ok_or_else(|| anyhow!("{} names no element; pass --element", self.name))
    }

    pub fn level(&self) -> Result<usize> {
        self.level
            .ok_or_else(|| anyhow!("cannot infer the level of {}; pass --level", self.name))
    }
}

fn object_symbols(x: &SimplicialLieObject) -> Result<SymbolTable> {
    Ok(symbol_table(x.generators().iter().map(|g| &g.symbol))?)
}

fn with_object(
    name: String,
    x: SimplicialLieObject,
    e: Option<LieElement>,
    level: Option<usize>,
) -> Result<Resolved> {
    Ok(Resolved {
        name,
        symbols: object_symbols(&x)?,
        object: Some(x),
        element: e,
        level,
    })
}

pub fn degrees_of(params: &Params) -> Result<DegreeVector> {
    let v = params.degrees.clone().unwrap_or_else(|| vec![1, 1, 1]);
    Ok(DegreeVector::new(v)?)
}

fn format_degrees(d: &DegreeVector) -> String {
    d.degrees()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn resolve_target(target: Target, params: &Params) -> Result<Resolved> {
    let p = params.p;
    let q = params.q;
    let r = params.r;
    match target {
        Target::OmegaHat => {
            let (p, q, k, l) = (
                p.unwrap_or(3),
                q.unwrap_or(3),
                params.k.unwrap_or(1),
                params.l.unwrap_or(1),
            );
            let w = omega_hat(p, q, k, l)?;
            with_object(
                format!("omega_hat(p={p}, q={q}, k={k}, l={l})"),
                w.object,
                Some(w.element),
                Some(w.level),
            )
        }
        Target::OmegaTriple => {
            let (p, q, r) = (p.unwrap_or(3), q.unwrap_or(3), r.unwrap_or(3));
            let w = omega_triple(p, q, r)?;
            with_object(
                format!("omega_triple(p={p}, q={q}, r={r})"),
                w.object,
                Some(w.element),
                Some(w.level),
            )
        }
        Target::Phi => {
            let d = degrees_of(params)?;
            let x = higher_wp_resolution(&d)?;
            let (e, tau) = match &params.tau {
                Some(tau) => (phi_s(&d, tau)?, tau.clone()),
                None => (phi_full(&d)?, (1..=d.len()).collect()),
            };
            if tau.len() < 2 {
                bail!("phi needs at least two spheres");
            }
            let tau_text = tau
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let name = format!("phi(degrees={}, tau={tau_text})", format_degrees(&d));
            with_object(name, x, Some(e), Some(tau.len() - 2))
        }
        Target::Gamma => {
            let n = params.n.unwrap_or(3);
            let e = gamma(n)?;
            with_object(
                format!("gamma(n={n})"),
                cpn_resolution(n)?,
                Some(e),
                Some(n as usize - 1),
            )
        }
        Target::CpnImage => {
            let n = params.n.unwrap_or(3);
            let (image, _) = top_comparison(n)?;
            with_object(
                format!("cpn_image(n={n})"),
                cpn_resolution(n)?,
                Some(image),
                Some(n as usize - 1),
            )
        }
        Target::MasseyTriple | Target::TripleLift => {
            let (p, q, r) = (p.unwrap_or(1), q.unwrap_or(1), r.unwrap_or(1));
            let t = triple_fixture(p, q, r)?;
            if target == Target::TripleLift {
                return with_object(
                    format!("triple_lift(p={p}, q={q}, r={r})"),
                    t.resolution,
                    Some(t.lifted),
                    Some(1),
                );
            }
            let value = lie_massey_obstruction(&t.system, &[1, 2, 3])?;
            Ok(Resolved {
                name: format!("massey_triple(p={p}, q={q}, r={r})"),
                object: None,
                element: Some(value),
                level: None,
                symbols: t.dgl.symbols(),
            })
        }
        Target::BmfAlpha | Target::BmfValue => {
            let f = bmf_fixture()?;
            let (name, e) = if target == Target::BmfAlpha {
                ("bmf_alpha", f.alpha.clone())
            } else {
                ("bmf_value", lie_massey_obstruction(&f.system, &[1, 2, 3])?)
            };
            Ok(Resolved {
                name: name.to_string(),
                object: None,
                element: Some(e),
                level: None,
                symbols: f.dgl.symbols(),
            })
        }
    }
}

/// Fixture corpus location: `HHOP_FIXTURES`, else the repository copy.
pub fn fixture_dir() -> PathBuf {
    match std::env::var_os("HHOP_FIXTURES") {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"),
    }
}

/// A spec path as given, else relative to the fixture directory, where a
/// leading `fixtures/` component is dropped.
pub fn locate(path: &Path) -> PathBuf {
    if path.exists() {
        return path.to_path_buf();
    }
    let dir = fixture_dir();
    let rel = path.strip_prefix("fixtures").unwrap_or(path);
    let candidate = dir.join(rel);
    if candidate.exists() {
        candidate
    } else {
        path.to_path_buf()
    }
}

pub fn load_spec(path: &Path) -> Result<SimplicialLieObject> {
    let found = locate(path);
    let text =
        std::fs::read_to_string(&found).with_context(|| format!("reading {}", path.display()))?;
    let spec =
        ResolutionSpec::from_json(&text).with_context(|| format!("in {}", path.display()))?;
    spec.build()
        .with_context(|| format!("building {}", path.display()))
}

/// Resolves `--target`/`--spec` and then `--element`/`--level`.
pub fn resolve(source: &Source) -> Result<Resolved> {
    let mut resolved = match (&source.target, &source.spec) {
        (Some(t), None) => resolve_target(*t, &source.params)?,
        (None, Some(path)) => {
            let x = load_spec(path)?;
            with_object(x.label().to_string(), x, None, None)?
        }
        (None, None) => bail!("one of --target or --spec is required"),
        (Some(_), Some(_)) => bail!("--target and --spec are exclusive"),
    };
    if let Some(text) = &source.element {
        let e = parse_element(text, &resolved.symbols)
            .with_context(|| format!("parsing --element {text:?}"))?;
        resolved.level = e.level();
        resolved.element = Some(e);
        resolved.name = format!("{} / element", resolved.name);
    }
    if source.level.is_some() {
        resolved.level = source.level;
    }
    Ok(resolved)
}
