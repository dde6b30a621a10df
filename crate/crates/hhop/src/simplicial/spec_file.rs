//! JSON resolution spec files.

use serde::{Deserialize, Serialize};

use super::{CwGenerator, SimplicialLieObject};
use crate::error::{HhopError, Result};
use crate::lie::{parse_element, symbol_table, GeneratorSymbol};

/// One CW generator in a spec file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub reduced_degree: u32,
    pub home_dim: u32,
    pub attaching: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub rationalized: bool,
}

/// `{label, truncation?, generators: [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionSpec {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub zero_faces_added: usize,
    pub generators: Vec<GeneratorSpec>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

fn json_error(e: serde_json::Error) -> HhopError {
    HhopError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

impl ResolutionSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec serializes");
        s.push('\n');
        s
    }

    pub fn build(&self) -> Result<SimplicialLieObject> {
        let symbols: Vec<GeneratorSymbol> = self
            .generators
            .iter()
            .map(|g| GeneratorSymbol::new(&g.name, g.reduced_degree, g.home_dim))
            .collect::<Result<_>>()?;
        let table = symbol_table(&symbols)?;
        let mut gens = Vec::new();
        for (spec, sym) in self.generators.iter().zip(symbols) {
            let attaching = parse_element(&spec.attaching, &table)?.normalize();
            gens.push(CwGenerator {
                symbol: sym,
                attaching,
                rationalized: spec.rationalized,
            });
        }
        let mut x = SimplicialLieObject::cw(&self.label, gens, self.truncation)?;
        x.zero_faces_added = self.zero_faces_added;
        Ok(x)
    }
}

impl SimplicialLieObject {
    /// Spec-file form; only plain CW objects have one.
    pub fn to_spec(&self) -> Result<ResolutionSpec> {
        if !self.is_cw() {
            return Err(HhopError::Domain(
                "only CW objects can be written as spec files".into(),
            ));
        }
        Ok(ResolutionSpec {
            label: self.label.clone(),
            truncation: self.truncation,
            zero_faces_added: self.zero_faces_added,
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorSpec {
                    name: g.symbol.name().to_string(),
                    reduced_degree: g.symbol.reduced_degree(),
                    home_dim: g.symbol.home_dim(),
                    attaching: g.attaching.to_string(),
                    rationalized: g.rationalized,
                })
                .collect(),
        })
    }

    pub fn from_spec_json(text: &str) -> Result<Self> {
        ResolutionSpec::from_json(text)?.build()
    }
}
