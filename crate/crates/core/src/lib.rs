//! Exact Betti-table arithmetic over `S = k[x,y]` and over its `d`-th Veronese
//! subring `B`, the homogeneous coordinate ring of the rational normal curve of
//! degree `d`.
//!
//! The crate covers:
//!  - the table types ([`SBettiTable`], [`BBettiTable`]) and the implied
//!    linear tail of a `B`-resolution,
//!  - pure diagrams over both rings and the partial order on `B`-types,
//!  - Hilbert numerators and Hilbert polynomials of finite-length modules,
//!  - the class map [`cone::phi`] into `S`-tables and greedy decomposition
//!    into chains of pure diagrams,
//!  - the cone of total Betti vectors.
//!
//! All arithmetic is exact; the scalar type is [`Rational`].

pub mod cone;
mod error;
pub mod hilbert;
pub mod pure;
mod rational;
pub mod table;
pub mod total;
pub mod validate;

pub use cone::{
    greedy_decompose_b, greedy_decompose_s, greedy_trace_b, phi, phi_representative, reconstruct,
    Decomposition, GreedyStep, PhiClass, SDecomposition,
};
pub use error::{BettiError, PartialDecomposition, Result};
pub use hilbert::{hilbert_numerator, hilbert_polynomial, Polynomial};
pub use pure::{
    apply_redundancy, linear_combination, pure_betti_b, pure_betti_s, pure_leq, PureTypeB,
    PureTypeS,
};
pub use rational::{frac, int, Rational};
pub use table::{tail_expand, BBettiTable, SBettiTable};
pub use total::{limit_vector, tot_membership, tot_rays, total_vector, Family, Membership, TotalVector};
pub use validate::{validate_b_table, DegreeCheck, ValidationReport, Violation};
