//! Internally-disjoint pendant Steiner tree packing in digraphs.
//!
//! Exact solvers for `τ_{S,r}` and `τ_k`, a skeleton-based decision
//! procedure for symmetric digraphs, reduction gadgets, brute-force oracles
//! and closed-form bounds. Everything here needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod digraph;
pub mod error;
pub mod gadgets;
pub mod model;
pub mod oracles;
pub mod solvers;

pub use digraph::{DegreeSummary, Digraph, Vertex};
pub use error::{GadgetError, GraphError, OracleError, SpecError};
pub use model::{
    enumerate_pendant_trees, enumerate_skeletons, validate_packing, validate_pendant_tree,
    Packing, PackingDefect, PairConflict, PendantTree, Skeleton, TerminalSpec, TreeDefect,
};
pub use solvers::{
    decide_tau_symmetric, solve_tau_k, solve_tau_sr, SolveResult, SolveStats, TauKResult,
};
