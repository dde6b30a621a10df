//! Exact symbolic machinery for higher homotopy operations.
//!
//! The crate models simplicial objects in free graded Lie algebras over the
//! rationals, presented by CW bases, together with the sign calculus of
//! shuffles, Hall-basis normal forms for Whitehead brackets, the Lie part of
//! the E¹/E² pages of the homotopy spectral sequence, and a catalog of named
//! elements and resolutions.
//!
//! Gradings: every generator carries a *reduced* (loop) degree `p`, meaning
//! its class lives in π_{p+1}. Brackets add reduced degrees. The bracket
//! antisymmetry sign uses sphere dimensions: `[a,b] = (-1)^{(p+1)(q+1)} [b,a]`.

pub mod catalog;
pub mod combinatorics;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod simplicial;
pub mod spectral;

pub use error::{HhopError, Result};
pub use lie::{DegeneracyWord, GeneratorSymbol, Letter, LieElement, LieMap, LieMonomial, Scalar};
pub use simplicial::SimplicialLieObject;
