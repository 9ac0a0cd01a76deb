//! Exact integral and mod-p homological algebra.

pub mod chain;
pub mod cohomology;
pub mod groups;
pub mod induced;
pub mod matrix;
pub mod scalar;
pub mod smith;
pub mod sparse;

pub use chain::{ChainComplex, ChainDump, Flavor};
pub use cohomology::CohomologyBasis;
pub use groups::{cohomology, homology, invariant_factors, Coefficients, GradedGroup, Group};
pub use induced::induced_inclusion_map;
pub use matrix::{IntMatrix, TripletJson};
pub use smith::{smith_normal_form, verify_smith, SmithForm};
pub use sparse::{integer_invariants, rank_mod_p, MatrixInvariants};
