//! `hhop fixtures`: replays golden transcripts and rebuilds spec files.
//!
//! A golden file (`*.golden`) holds `#` comment lines, one `$ hhop ...`
//! command line, and then the exact expected standard output. An optional
//! `# exit: N` comment sets the expected status (default 0).

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Parser;
use hhop::simplicial::ResolutionSpec;

use crate::args::{Cli, Command, FixturesArgs};
use crate::report::{Check, Outcome, Report};
use crate::run::execute;
use crate::targets::fixture_dir;

pub struct Golden {
    pub args: Vec<String>,
    pub status: u8,
    pub expected: String,
}

pub fn parse_golden(text: &str) -> Result<Golden> {
    let mut status = 0;
    let mut lines = text.split_inclusive('\n');
    let command = loop {
        let Some(line) = lines.next() else {
            bail!("no `$ hhop` command line");
        };
        let line = line.trim_end();
        if let Some(n) = line.strip_prefix("# exit:") {
            status = n.trim().parse().context("bad exit status")?;
        } else if let Some(cmd) = line.strip_prefix("$ ") {
            break cmd.to_string();
        } else if !line.starts_with('#') && !line.is_empty() {
            bail!("unexpected line before the command: {line:?}");
        }
    };
    let Some(args) = shlex::split(&command) else {
        bail!("unbalanced quotes in {command:?}");
    };
    if args.first().map(String::as_str) != Some("hhop") {
        bail!("command must start with hhop");
    }
    Ok(Golden {
        args,
        status,
        expected: lines.collect(),
    })
}

/// Runs a golden command in-process and returns `(status, stdout)`.
pub fn replay(args: &[String]) -> Result<(u8, String)> {
    let cli = Cli::try_parse_from(args).map_err(|e| anyhow::anyhow!("{e}"))?;
    if matches!(cli.command, Command::Fixtures(_)) {
        bail!("golden files cannot invoke the fixtures verb");
    }
    Ok(match execute(&cli) {
        Ok(o) => (o.status(), o.report.render(cli.format())),
        Err(e) => (Outcome::error_status(&e), String::new()),
    })
}

fn first_difference(want: &str, got: &str) -> String {
    let mut w = want.lines();
    let mut g = got.lines();
    for n in 1.. {
        match (w.next(), g.next()) {
            (None, None) => break,
            (a, b) if a == b => continue,
            (a, b) => {
                return format!(
                    "line {n}: expected {:?}, got {:?}",
                    a.unwrap_or(""),
                    b.unwrap_or("")
                )
            }
        }
    }
    "trailing newline differs".to_string()
}

fn sorted_files(dir: &Path, ext: &str) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    if !dir.is_dir() {
        return Ok(out);
    }
    for entry in std::fs::read_dir(dir).with_context(|| format!("listing {}", dir.display()))? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == ext) {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

fn relative(path: &Path, root: &Path) -> String {
    path.strip_prefix(root)
        .unwrap_or(path)
        .display()
        .to_string()
}

pub fn run(a: &FixturesArgs) -> Result<Report> {
    let root = a.dir.clone().unwrap_or_else(fixture_dir);
    if !root.is_dir() {
        bail!("fixture directory {} not found", root.display());
    }
    let mut report = Report::new("fixtures", "corpus");
    for path in sorted_files(&root, "json")? {
        let name = relative(&path, &root);
        let text = std::fs::read_to_string(&path)?;
        let spec = ResolutionSpec::from_json(&text).with_context(|| name.clone())?;
        let x = spec.build().with_context(|| name.clone())?;
        let round = x.to_spec()?.to_json();
        let ids = x.verify_simplicial_identities(x.truncation().unwrap_or(4).min(4), 40)?;
        let ok = round == text && ids.is_clean();
        let detail = format!(
            "{} generators, {} identities",
            x.generators().len(),
            ids.checked
        );
        report.push_check(if ok {
            Check::pass(name, detail)
        } else if round != text {
            Check::fail(name, detail, Some(first_difference(&text, &round)))
        } else {
            Check::fail(
                name,
                format!("{detail}, {} violations", ids.violations.len()),
                None,
            )
        });
    }
    for path in sorted_files(&root.join("golden"), "golden")? {
        let name = relative(&path, &root);
        let golden =
            parse_golden(&std::fs::read_to_string(&path)?).with_context(|| name.clone())?;
        let (status, got) = replay(&golden.args).with_context(|| name.clone())?;
        let detail = golden.args[1..].join(" ");
        report.push_check(if status != golden.status {
            Check::fail(
                name,
                detail,
                Some(format!("exit {status}, expected {}", golden.status)),
            )
        } else if got != golden.expected {
            Check::fail(name, detail, Some(first_difference(&golden.expected, &got)))
        } else {
            Check::pass(name, detail)
        });
    }
    if report.checks.is_empty() {
        bail!("no fixtures under {}", root.display());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_layout() {
        let g =
            parse_golden("# note\n# exit: 1\n$ hhop hall --degrees 1 --t '1..2'\nbody\n").unwrap();
        assert_eq!(g.args, ["hhop", "hall", "--degrees", "1", "--t", "1..2"]);
        assert_eq!(g.status, 1);
        assert_eq!(g.expected, "body\n");
        assert!(parse_golden("# only comments\n").is_err());
        assert!(parse_golden("$ ls\n").is_err());
    }
}
