//! Exact combinatorial machinery for Hamiltonicity analysis on small graphs.
//!
//! The crate is organised around a compact immutable [`Graph`] value with
//! bitset adjacency and a family of exact algorithms on top of it:
//!
//! * [`invariants`]: connectivity (max-flow), independence number
//!   (branch-and-bound) and minimum degree sums over independent sets.
//! * [`conditions`]: the classical degree-sum sufficient conditions for
//!   Hamiltonicity, reported with margins and witnesses.
//! * [`oracle`]: exact Hamiltonian-cycle and longest-cycle searches plus
//!   cut-based non-Hamiltonicity witnesses.
//! * [`families`]: a small expression language for sequential-join graph
//!   constructions and generators for the extremal families used in tests.
//! * [`insertion`]: the insertible-vertex machinery: path-into-cycle
//!   merging, non-insertible frames and the forbidden-crossing scanner.
//! * [`random`]: a self-contained, cross-platform deterministic graph
//!   sampler for reproducible corpora.
//!
//! Everything is `no_std` + `alloc`; IO, JSON reporting and the CLI live in
//! the companion `hamcycle-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod conditions;
pub mod cycle;
pub mod families;
pub mod formats;
pub mod graph;
pub mod insertion;
pub mod invariants;
pub mod oracle;
pub mod random;
pub mod rational;

pub use bitset::VertexSet;
pub use cycle::OrientedCycle;
pub use graph::{Graph, GraphError};
pub use invariants::{DegreeSum, InvariantProfile};
pub use rational::Rational;
