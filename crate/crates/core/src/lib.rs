//! Exact computational engine for Prym-Tyurin varieties arising from Hecke
//! algebras of finite groups.
//!
//! The pipeline runs from enumerated permutation groups ([`group`]) through
//! exact character tables over cyclotomic fields ([`cyclotomic`],
//! [`characters`]) to the Hecke ring of a subgroup and its correspondence
//! matrices ([`hecke`]), and finally to hypothesis checks, admissible branch
//! data and certified (exponent, dimension) reports ([`prym`]).

pub mod characters;
pub mod cosets;
pub mod cyclotomic;
mod dixon;
pub mod error;
pub mod group;
pub mod group_spec;
pub mod hecke;
pub mod lattice;
pub mod perm;
pub mod prym;
pub mod verify;

pub use error::{Error, Result};
pub use group::{PermGroup, Subgroup};
pub use group_spec::{realize_group, GroupSpec};
pub use perm::Permutation;
