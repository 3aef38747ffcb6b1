//! Automorphism groups of (optionally vertex-coloured) digraphs, permutation
//! group machinery, and the m-PDR verdict.

mod backtrack;
mod brute;
mod partition;
mod permgroup;
mod verify;

pub use backtrack::SearchStats;
pub use brute::{brute_force_automorphism_list, BRUTE_FORCE_CAP};
pub use permgroup::{PermGroup, PermGroupReport};
pub use verify::{
    is_pdr, stabilizer_criterion_check, verify_mcayley, StabilizerCriterion, VerificationReport,
};

use num_bigint::BigUint;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_VERTEX_CAP: usize = 2048;

#[derive(Clone, Copy, Debug)]
pub struct AutOptions {
    /// Restrict to colour-preserving automorphisms when the digraph carries
    /// a colouring.
    pub use_colors: bool,
    pub vertex_cap: usize,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions {
            use_colors: true,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl AutOptions {
    pub fn color_blind() -> Self {
        AutOptions {
            use_colors: false,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct Automorphisms {
    pub group: PermGroup,
    /// Order from the search's orbit-length product; agrees with the
    /// stabilizer chain.
    pub search_order: BigUint,
    pub stats: SearchStats,
}

/// The automorphism group of `graph`, respecting its colouring if it has one.
pub fn automorphism_group(graph: &Digraph) -> Result<PermGroup> {
    Ok(automorphisms(graph, AutOptions::default())?.group)
}

pub fn automorphisms(graph: &Digraph, opts: AutOptions) -> Result<Automorphisms> {
    let n = graph.order();
    if n > opts.vertex_cap {
        return Err(Error::TooLarge {
            size: n,
            cap: opts.vertex_cap,
        });
    }
    let outcome = backtrack::search(graph, opts.use_colors);
    debug_assert!(outcome.generators.iter().all(|g| {
        let check = if opts.use_colors {
            graph.clone()
        } else {
            graph.uncolored()
        };
        is_automorphism(&check, g)
    }));
    let group = PermGroup::with_base_prefix(n, outcome.generators, &outcome.base);
    debug_assert_eq!(group.order(), outcome.order);
    Ok(Automorphisms {
        group,
        search_order: outcome.order,
        stats: outcome.stats,
    })
}

/// The automorphism group found by exhaustive enumeration (`n ≤ 9`).
pub fn brute_force_automorphisms(graph: &Digraph) -> Result<PermGroup> {
    let all = brute_force_automorphism_list(graph)?;
    Ok(PermGroup::new(graph.order(), all))
}

/// Whether `perm` preserves arcs, non-arcs and colours of `graph`.
pub fn is_automorphism(graph: &Digraph, perm: &Permutation) -> bool {
    let n = graph.order();
    if perm.degree() != n {
        return false;
    }
    if let Some(c) = graph.colors() {
        if (0..n).any(|v| c[v] != c[perm.apply(v)]) {
            return false;
        }
    }
    // a bijection mapping arcs to arcs maps non-arcs to non-arcs
    graph
        .arcs()
        .all(|(u, v)| graph.has_arc(perm.apply(u), perm.apply(v)))
}
