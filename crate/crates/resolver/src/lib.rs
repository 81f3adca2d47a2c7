//! Polynomial side of the toolkit: bivariate polynomials over ℚ, Gröbner
//! bases, minimal resolutions of finite-colength quotients of `k[x,y]`, and
//! the transfer of their Betti tables to the Veronese ring.

mod error;
pub mod groebner;
mod linalg;
pub mod parse;
pub mod poly;
pub mod random;
pub mod resolution;
pub mod veronese;

pub use error::{ResolverError, Result};
pub use groebner::{groebner_basis, is_finite_colength, GradedIdeal};
pub use parse::{parse_ideal, parse_polynomial, SparsePoly, Variables};
pub use poly::{Monomial, Poly2};
pub use random::{random_forms, SplitMix64};
pub use resolution::{minimal_resolution, ResolutionS};
pub use veronese::{resolve_over_b, veronese_substitute, veronese_transfer};
