//! Exact-arithmetic homology of finite group actions on finite complexes.
//!
//! The library takes a finite chain complex of free abelian groups with a
//! signed permutation action of a finite group, and computes — all over Z or
//! Z/p with exact integer arithmetic — the homology of the invariant
//! subcomplex, the quotient, and the fixed subcomplex; the long exact
//! sequence tying them together for cyclic groups of prime order; the
//! hypercohomology-style groups built from the norm and difference maps with
//! their two spectral filtrations; and checkers for the classical
//! consequences (Smith-type rank inequalities, acyclicity of quotients of
//! acyclic complexes, transfer isomorphisms away from the group order, and
//! free-action detection through the norm map).

pub mod abelian;
pub mod cli;
pub mod complexes;
pub mod error;
pub mod functors;
pub mod homology;
pub mod hyper;
pub mod les;
pub mod report;
pub mod simplicial;
pub mod spaces;
pub mod theorems;

pub use error::{Error, Result};
