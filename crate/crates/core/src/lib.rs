//! Unrefinable partitions into distinct parts and their numerical-semigroup
//! counterparts.
//!
//! * [`partition`]: distinct partitions, missing parts, mex, staircases.
//! * [`refinability`]: brute-force and forbidden-vector refinability checks,
//!   saturation, and the extension lattice.
//! * [`semigroup`]: numerical sets and semigroups by gap set.
//! * [`young`]: Young diagrams of numerical sets and hook-length criteria.
//! * [`enumeration`]: exhaustive enumerators and counting verifiers.

pub mod enumeration;
pub mod error;
pub mod partition;
pub mod refinability;
pub mod semigroup;
pub mod young;

pub use error::{Error, Result};
pub use partition::{DistinctPartition, MissingParts};
