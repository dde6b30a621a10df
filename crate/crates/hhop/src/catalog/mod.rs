//! Named objects and elements: Whitehead-product representatives, higher
//! Whitehead resolutions, complex projective space and Lie-Massey data.

pub mod cpn;
pub mod higher;
pub mod massey;
pub mod whitehead;

pub use cpn::{
    comparison_coefficient, cpn_comparison_map, cpn_generator, cpn_resolution, gamma,
    top_comparison, verify_chain_map, ChainMapDefect, ChainMapReport, ComparisonMap,
};
pub use higher::{
    fat_wedge_summands, higher_wp_resolution, phi_full, phi_s, wp_generator, FatWedgeSummand,
    FatWedgeSummary,
};
pub use massey::{
    bmf_fixture, lie_massey_obstruction, triple_fixture, verify_defining_system, BmfFixture,
    DefiningSystem, Dgl, DglHomology, SystemDefect, SystemReport, TripleFixture,
};
pub use whitehead::{
    boundary_ledger, omega_hat, omega_triple, shuffle_bracket_sum, BoundaryIdentity, Representative,
};
