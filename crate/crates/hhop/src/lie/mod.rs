//! Free graded Lie algebras on degeneracy-decorated generators.

pub mod element;
pub mod hall;
pub mod maps;
pub mod normal;
pub mod parse;
pub mod symbols;

/// Exact rational coefficients.
pub type Scalar = num_rational::BigRational;

pub use element::{LieElement, LieMonomial};
pub use hall::{hall_basis, hall_monomials};
pub use maps::{
    apply_derivation, apply_lie_map, apply_lie_map_raw, identity_map, substitute_raw, LieMap,
};
pub use parse::{format_latex, parse_element, symbol_table, SymbolTable};
pub use symbols::{DegeneracyWord, FaceOutcome, GeneratorSymbol, Letter, MAX_LEVEL};
