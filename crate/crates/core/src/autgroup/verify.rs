//! The m-PDR verdict and instance checks of the stabilizer criterion.

use num_bigint::BigUint;
use serde::Serialize;

use super::{automorphisms, AutOptions, PermGroup, SearchStats};
use crate::digraph::Connectivity;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::mcayley::{ConnectionSpec, MCayleyDigraph};

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub m: usize,
    pub group_order: usize,
    #[serde(serialize_with = "as_decimal")]
    pub aut_order: BigUint,
    pub is_pdr: bool,
    /// `None` when the digraph is not regular; the m-PDR definition
    /// requires regularity.
    pub valency: Option<usize>,
    pub regular: bool,
    pub color_blind: bool,
    pub parts_fixed_setwise: Vec<bool>,
    /// A generator of the automorphism group lying outside `R(G)`.
    pub extra_automorphism_witness: Option<String>,
    pub stats: SearchStats,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Builds the digraph of `spec` over `group` and decides whether its
/// automorphism group is exactly `R(G)`. The search ignores the part
/// colouring, so part-fixing is a finding rather than an assumption.
pub fn is_pdr(group: &FiniteGroup, spec: &ConnectionSpec) -> Result<VerificationReport> {
    let x = MCayleyDigraph::build(group, spec)?;
    verify_mcayley(&x, true)
}

pub fn verify_mcayley(x: &MCayleyDigraph, color_blind: bool) -> Result<VerificationReport> {
    if !x.spec().is_partite() {
        return Err(Error::Precondition(
            "connection spec is not m-partite: some T(i,i) is non-empty".into(),
        ));
    }
    let opts = if color_blind {
        AutOptions::color_blind()
    } else {
        AutOptions::default()
    };
    let aut = automorphisms(x.digraph(), opts)?;
    let aut_order = aut.group.order();
    let n = x.group().order();
    let is_pdr = aut_order == BigUint::from(n);
    let parts_fixed_setwise = (0..x.m())
        .map(|i| aut.group.fixes_setwise(&x.part(i)))
        .collect();
    let extra_automorphism_witness = if is_pdr {
        None
    } else {
        let regular = x.right_regular_group();
        aut.group
            .generators()
            .iter()
            .find(|g| !regular.contains(g))
            .map(|g| g.to_string())
    };
    let valency = x.digraph().valency();
    Ok(VerificationReport {
        m: x.m(),
        group_order: n,
        aut_order,
        is_pdr,
        valency,
        regular: valency.is_some(),
        color_blind,
        parts_fixed_setwise,
        extra_automorphism_witness,
        stats: aut.stats,
    })
}

/// Outcome of evaluating the stabilizer criterion on one digraph: if the
/// digraph is connected, its automorphism group `A` fixes every part, and
/// for chosen `u_i ∈ G_i` each stabilizer `A_{u_i}` fixes the out-neighbours
/// of `u_i` pointwise, then `A = R(G)`.
#[derive(Clone, Debug, Serialize)]
pub struct StabilizerCriterion {
    pub connected: bool,
    pub parts_fixed_setwise: bool,
    pub stabilizers_fix_out_neighbors: bool,
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
}

impl StabilizerCriterion {
    /// False only for a counterexample: hypotheses true, conclusion false.
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold || self.conclusion_holds
    }
}

pub fn stabilizer_criterion_check(x: &MCayleyDigraph, u: &[usize]) -> Result<StabilizerCriterion> {
    if u.len() != x.m() {
        return Err(Error::Precondition(format!(
            "{} base vertices for {} parts",
            u.len(),
            x.m()
        )));
    }
    for (i, &v) in u.iter().enumerate() {
        if v >= x.digraph().order() || x.part_of(v) != i {
            return Err(Error::Precondition(format!(
                "vertex {v} is not in part {i}"
            )));
        }
    }
    let connected = x.digraph().is_connected(Connectivity::Weak);
    let aut: PermGroup = automorphisms(x.digraph(), AutOptions::color_blind())?.group;
    let parts_fixed_setwise = (0..x.m()).all(|i| aut.fixes_setwise(&x.part(i)));
    let stabilizers_fix_out_neighbors = u.iter().all(|&v| {
        aut.point_stabilizer(v)
            .fixes_pointwise(x.digraph().out_neighbors(v))
    });
    let conclusion_holds = aut.order() == BigUint::from(x.group().order());
    Ok(StabilizerCriterion {
        connected,
        parts_fixed_setwise,
        stabilizers_fix_out_neighbors,
        hypotheses_hold: connected && parts_fixed_setwise && stabilizers_fix_out_neighbors,
        conclusion_holds,
    })
}
