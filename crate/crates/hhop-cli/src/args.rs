//! Command-line surface.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::targets::Target;

#[derive(Debug, Parser)]
#[command(
    name = "hhop",
    version,
    about = "Exact checks for simplicial resolutions in free graded Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl Cli {
    pub fn format(&self) -> Format {
        self.format
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a named element.
    Formula(FormulaArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Tabulate E² ranks over a window of bidegrees.
    E2(E2Args),
    /// Splice a suspension resolution along a Moore cycle and check the result.
    Splice(SpliceArgs),
    /// Enumerate Hall bases of a free graded Lie algebra.
    Hall(HallArgs),
    /// Check the shipped fixture corpus.
    Fixtures(FixturesArgs),
}

/// A catalog target or a resolution spec file, with an optional element.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Catalog name.
    #[arg(long, value_enum, conflicts_with = "spec")]
    pub target: Option<Target>,
    /// Resolution spec file (JSON).
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Element in the expression grammar, read against the object's generators.
    #[arg(long, allow_hyphen_values = true)]
    pub element: Option<String>,
    /// Simplicial level of `--element`.
    #[arg(long)]
    pub level: Option<usize>,
    #[command(flatten)]
    pub params: Params,
}

/// Catalog parameters. Sphere dimensions for `p, q, r` unless the target
/// says otherwise.
#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Comma-separated reduced degrees.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<u32>>,
    /// Comma-separated 1-based indices selecting a sub-product.
    #[arg(long, value_delimiter = ',')]
    pub tau: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct FormulaArgs {
    #[command(flatten)]
    pub source: Source,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Comparison map into the complex projective resolution.
    Cpn,
    /// Moore-cycle property of the two-sphere representatives.
    #[value(name = "omega_hat")]
    OmegaHat,
    /// Moore-cycle property of higher Whitehead representatives.
    Phi,
    /// Lie-Massey defining systems and their values.
    Massey,
    /// Boundary identities and cross-terms in the k = l = 3 wedge.
    Ledger,
    /// Simplicial identities of an object.
    Simplicial,
    /// Moore chain and cycle tests for a supplied element.
    Moore,
    /// Randomized antisymmetry and Jacobi checks of bracket normal forms.
    Lie,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub source: Source,
    /// Highest simplicial level examined.
    #[arg(long, default_value_t = 4)]
    pub max_level: usize,
    /// Highest reduced degree examined by the simplicial suite.
    #[arg(long, default_value_t = 40)]
    pub max_degree: u32,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of randomized cases.
    #[arg(long, default_value_t = 64)]
    pub cases: usize,
}

#[derive(Debug, Args)]
pub struct E2Args {
    #[command(flatten)]
    pub source: Source,
    /// Simplicial levels, `A..B` inclusive.
    #[arg(long, value_parser = parse_range::<usize>)]
    pub s: RangeInclusive<usize>,
    /// Internal reduced degrees, `A..B` inclusive.
    #[arg(long, value_parser = parse_range::<u32>)]
    pub t: RangeInclusive<u32>,
    /// Report elementary divisors of the incoming boundary as well.
    #[arg(long)]
    pub integral: bool,
    /// Largest normalized slice dimension.
    #[arg(long, default_value_t = 4000)]
    pub max_dim: usize,
}

#[derive(Debug, Args)]
pub struct SpliceArgs {
    #[command(flatten)]
    pub source: Source,
    /// Levels above the junction on which simplicial identities are checked.
    #[arg(long, default_value_t = 2)]
    pub extra: usize,
    /// Highest reduced degree examined.
    #[arg(long, default_value_t = 40)]
    pub max_degree: u32,
}

#[derive(Debug, Args)]
pub struct HallArgs {
    /// Comma-separated reduced degrees of the generators `x1, x2, ...`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<u32>,
    /// Degrees to enumerate, `A..B` inclusive.
    #[arg(long, value_parser = parse_range::<u32>)]
    pub t: RangeInclusive<u32>,
    /// Largest bracket length; defaults to the degree.
    #[arg(long)]
    pub max_weight: Option<usize>,
    /// Largest accepted basis size in one degree.
    #[arg(long, default_value_t = 20000)]
    pub max_dim: usize,
    /// Print the counts only.
    #[arg(long)]
    pub counts: bool,
}

#[derive(Debug, Args)]
pub struct FixturesArgs {
    /// Fixture directory; overrides `HHOP_FIXTURES`.
    #[arg(long)]
    pub dir: Option<PathBuf>,
}

/// `A..B` (inclusive) or a single value.
pub fn parse_range<T>(text: &str) -> Result<RangeInclusive<T>, String>
where
    T: std::str::FromStr + PartialOrd + Copy,
{
    let value = |s: &str| {
        s.trim()
            .parse::<T>()
            .map_err(|_| format!("{s:?} is not a valid bound"))
    };
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (value(a)?, value(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = value(text)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {text}"));
    }
    Ok(a..=b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range::<u32>("1..10").unwrap(), 1..=10);
        assert_eq!(parse_range::<u32>("3").unwrap(), 3..=3);
        assert_eq!(parse_range::<u32>("0..=2").unwrap(), 0..=2);
        assert!(parse_range::<u32>("5..1").is_err());
        assert!(parse_range::<u32>("a..1").is_err());
    }

    #[test]
    fn surface_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
