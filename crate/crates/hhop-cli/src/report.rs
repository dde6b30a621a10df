//! Report model shared by every verb, rendered as text, JSON or a LaTeX
//! fragment. All three renderings carry the same numbers.

use std::fmt::Write;

use hhop::lie::parse::{to_json_terms, JsonTerm};
use hhop::lie::{format_latex, LieElement};
use hhop::spectral::HomologyReport;
use hhop::HhopError;
use serde::Serialize;

use crate::args::Format;

#[derive(Debug, Clone, Serialize)]
pub struct NamedElement {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    pub expression: String,
    pub terms: Vec<JsonTerm>,
    #[serde(skip)]
    latex: String,
}

impl NamedElement {
    pub fn new(name: impl Into<String>, level: Option<usize>, e: &LieElement) -> Self {
        NamedElement {
            name: name.into(),
            level,
            degree: e.degree(),
            expression: e.to_string(),
            terms: to_json_terms(e),
            latex: format_latex(e),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        detail: impl Into<String>,
        witness: Option<String>,
    ) -> Self {
        Check {
            name: name.into(),
            passed: false,
            detail: detail.into(),
            witness,
        }
    }

    pub fn expect(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Check::pass(name, detail)
        } else {
            Check::fail(name, detail, None)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RankRow {
    pub s: usize,
    pub t: u32,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub e2: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Vec<String>>,
}

impl From<&HomologyReport> for RankRow {
    fn from(h: &HomologyReport) -> Self {
        RankRow {
            s: h.bidegree.s,
            t: h.bidegree.t,
            dim: h.dim,
            rank_in: h.rank_in,
            rank_out: h.rank_out,
            e2: h.rational_rank,
            torsion: h.torsion.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Basis {
    pub degree: u32,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomials: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub subject: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<NamedElement>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ranks: Vec<RankRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub bases: Vec<Basis>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str, subject: impl Into<String>) -> Self {
        Report {
            command: command.to_string(),
            subject: subject.into(),
            elements: Vec::new(),
            ranks: Vec::new(),
            bases: Vec::new(),
            checks: Vec::new(),
            passed: true,
        }
    }

    pub fn push_check(&mut self, c: Check) {
        self.passed &= c.passed;
        self.checks.push(c);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Latex => self.latex(),
        }
    }

    fn text(&self) -> String {
        let mut out = format!("{} {}\n", self.command, self.subject);
        for e in &self.elements {
            let mut meta = Vec::new();
            if let Some(l) = e.level {
                meta.push(format!("level {l}"));
            }
            if let Some(d) = e.degree {
                meta.push(format!("degree {d}"));
            }
            meta.push(format!("{} terms", e.terms.len()));
            let _ = writeln!(out, "{} ({})", e.name, meta.join(", "));
            let _ = writeln!(out, "  = {}", e.expression);
        }
        if !self.ranks.is_empty() {
            let _ = writeln!(
                out,
                "{:>3} {:>4} {:>6} {:>8} {:>8} {:>5}  torsion",
                "s", "t", "dim", "rank_in", "rank_out", "E2"
            );
            for r in &self.ranks {
                let torsion = r.torsion.as_ref().map_or("-".to_string(), |t| {
                    if t.is_empty() {
                        "none".to_string()
                    } else {
                        t.join(",")
                    }
                });
                let _ = writeln!(
                    out,
                    "{:>3} {:>4} {:>6} {:>8} {:>8} {:>5}  {torsion}",
                    r.s, r.t, r.dim, r.rank_in, r.rank_out, r.e2
                );
            }
        }
        for b in &self.bases {
            let _ = writeln!(out, "degree {}: {}", b.degree, b.count);
            for m in b.monomials.iter().flatten() {
                let _ = writeln!(out, "  {m}");
            }
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag} {}: {}", c.name, c.detail);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "  witness: {w}");
            }
        }
        if !self.checks.is_empty() {
            let failed = self.checks.iter().filter(|c| !c.passed).count();
            let _ = writeln!(
                out,
                "result: {} ({} checks, {failed} failed)",
                if self.passed { "PASS" } else { "FAIL" },
                self.checks.len()
            );
        }
        out
    }

    fn latex(&self) -> String {
        let mut out = format!("% {} {}\n", self.command, self.subject);
        for e in &self.elements {
            let _ = writeln!(out, "% {}", e.name);
            let _ = writeln!(out, "\\begin{{aligned}}\n{}\n\\end{{aligned}}", e.latex);
        }
        if !self.ranks.is_empty() {
            out.push_str(
                "\\begin{tabular}{rrrrrr}\n$s$ & $t$ & dim & in & out & $E^2$ \\\\\n\\hline\n",
            );
            for r in &self.ranks {
                let _ = writeln!(
                    out,
                    "{} & {} & {} & {} & {} & {} \\\\",
                    r.s, r.t, r.dim, r.rank_in, r.rank_out, r.e2
                );
            }
            out.push_str("\\end{tabular}\n");
        }
        for b in &self.bases {
            let _ = writeln!(out, "% degree {}: {}", b.degree, b.count);
        }
        for c in &self.checks {
            let tag = if c.passed { "pass" } else { "fail" };
            let _ = writeln!(out, "% {tag} {}: {}", c.name, c.detail);
        }
        out
    }
}

/// A finished request.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
}

impl Outcome {
    pub fn status(&self) -> u8 {
        if self.report.passed {
            0
        } else {
            1
        }
    }

    /// 3 for exceeded bounds, 2 for everything else that stops a request.
    pub fn error_status(e: &anyhow::Error) -> u8 {
        let bound = e
            .chain()
            .any(|c| matches!(c.downcast_ref::<HhopError>(), Some(HhopError::Bound(_))));
        if bound {
            3
        } else {
            2
        }
    }
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report }
    }
}
