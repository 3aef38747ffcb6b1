//! Construction and verification of m-partite Cayley digraphs over finite
//! groups.
//!
//! An m-partite Cayley digraph `Cay(G, T_{i,j})` has vertices `g_i` for
//! `g ∈ G`, `i ∈ Z_m`, and arcs `g_i → (t·g)_j` for `t ∈ T_{i,j}`, with
//! every `T_{i,i}` empty. The right translations `R(g): x_i ↦ (x·g)_i` are
//! always automorphisms; the digraph is an m-partite digraphical
//! representation (m-PDR) of `G` when they are the only ones and the
//! digraph is regular.
//!
//! - [`group`]: finite groups as multiplication tables.
//! - [`digraph`]: digraphs and their structural predicates.
//! - [`mcayley`]: connection specs, m-Cayley digraphs, `R(G)`.
//! - [`autgroup`]: exact automorphism groups and the m-PDR verdict.
//! - [`constructions`]: valency-3 recipes and DRR extension.
//! - [`search`]: exhaustive and randomized searches.
//! - [`cli`]: the `mpdr` command-line front end.

pub mod autgroup;
pub mod cli;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod group;
pub mod mcayley;
pub mod perm;
pub mod search;

pub use autgroup::{
    automorphism_group, brute_force_automorphisms, is_pdr, PermGroup, VerificationReport,
};
pub use digraph::{Connectivity, Digraph};
pub use error::{Error, Result};
pub use group::{Elem, FiniteGroup, IDENTITY};
pub use mcayley::{ConnectionSpec, MCayleyDigraph};
pub use perm::Permutation;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
