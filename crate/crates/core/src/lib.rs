//! Exact counting of right quasigroups with identity up to isomorphism.
//!
//! A right quasigroup with identity of order `n` is the same thing as a
//! right transversal of `Σ_{n-1}` in `Σ_n`, and isomorphism is conjugation by
//! `Σ_{n-1}`. Counting orbits of that action by Burnside's lemma reduces to a
//! sum over cycle types of `Σ_{n-1}`; [`burnside`] evaluates it exactly and
//! [`oracle`] checks it by exhaustive enumeration at small orders.

pub mod burnside;
pub mod cycletype;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod quasigroup;

pub use burnside::{census, class_fix_count, count, sequence, CensusTable, Count};
pub use cycletype::{all_cycle_types, factorial, ClassRecord, CycleType};
pub use error::{Error, Result};
pub use oracle::{direct_fix_count, orbit_count, OracleConfig, OrbitCensus};
pub use perm::Permutation;
pub use quasigroup::{
    isomorphic_by_bijection, isomorphic_by_conjugation, CayleyTable, Structure, Transversal,
};
