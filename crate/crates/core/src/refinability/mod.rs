//! Deciding refinability.
//!
//! Two independent routes are provided: [`brute_force_refinement`] searches
//! subset sums of missing parts directly, while [`check_unrefinable_fast`]
//! compares every part against the vector of forbidden elements. The
//! extension lattice is built on top of the fast route.

mod lattice;
mod oracle;
mod vector;

pub use lattice::{extension_candidates, extension_lattice, ExtensionLattice, LatticeEdge};
pub use oracle::{brute_force_refinement, RefinementWitness};
pub use vector::{
    build_forbidden_vector, build_forbidden_vector_traced, check_unrefinable_fast,
    classify_extension_finiteness, is_saturated, Finiteness, ForbiddenVector, StepTrace, Threshold,
    VectorBuilder,
};
pub(crate) use vector::gcd;
