//! Explicit connection-set recipes for valency-3 m-PDRs, and the searches
//! that extend small regular representations to 2-partite ones.
//!
//! In cyclic recipes an element index is the exponent of the generator `x`,
//! so `{1, x, x^2}` is written `[0, 1, 2]`.

use num_bigint::BigUint;

use crate::autgroup::{automorphisms, is_pdr, AutOptions};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, IDENTITY};
use crate::mcayley::{cayley_digraph, ConnectionSpec};

/// Groups larger than this are out of desk scale for the witness searches.
pub const DESK_GROUP_CAP: usize = 1024;

/// 2-partite valency-3 representation of `Z_n`:
/// `T(0,1) = {1, x, x^2}`, `T(1,0) = {1, x, x^3}`.
pub fn cyclic_2pdr(n: usize) -> Result<ConnectionSpec> {
    if n < 5 {
        return Err(Error::Excluded(format!(
            "Z_{n} has no 2-partite digraphical representation of valency 3 (cyclic groups need order at least 5 when m = 2)"
        )));
    }
    ConnectionSpec::new(2, n)?
        .with(0, 1, &[0, 1, 2])?
        .with(1, 0, &[0, 1, 3])
}

/// m-partite valency-3 representation of `Z_n` for `m ≥ 3`.
pub fn cyclic_mpdr(n: usize, m: usize) -> Result<ConnectionSpec> {
    if m < 3 {
        return Err(Error::Unsupported(format!(
            "m = {m}; use the 2-partite recipe for m = 2"
        )));
    }
    if n == 1 {
        return Err(Error::Unsupported(
            "the trivial group: this is the rigid 3-regular digraph question".into(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let mut spec = ConnectionSpec::new(m, n)?;
    match (n, m) {
        (2, 3) => {
            return Err(Error::Excluded(
                "Z_2 has no 3-partite digraphical representation of valency 3".into(),
            ))
        }
        (2, 4) => {
            for (i, j, t) in [
                (0, 1, 0),
                (0, 2, 0),
                (0, 3, 1),
                (1, 0, 0),
                (1, 2, 0),
                (1, 3, 0),
                (2, 0, 0),
                (2, 1, 0),
                (2, 3, 1),
                (3, 0, 0),
                (3, 1, 0),
                (3, 2, 1),
            ] {
                spec.set(i, j, &[t])?;
            }
        }
        (2, _) => {
            for i in 0..m {
                spec.set(i, i + m - 1, &[0])?;
                spec.set(i, i + 1, &[0])?;
                spec.set(i, i + 2, if i == 0 { &[1] } else { &[0] })?;
            }
        }
        _ => {
            for i in 0..m {
                spec.set(i, i + 1, &[0, 1])?;
                spec.set(i, i + m - 1, if i == 1 { &[1] } else { &[0] })?;
            }
        }
    }
    Ok(spec)
}

/// m-partite valency-3 representation of `G = ⟨x, y⟩` for `m ≥ 3`:
/// `T(0,1) = {x, y}`, `T(i,i+1) = {1, x}` for `i ≠ 0`, `T(j,j-1) = {1}`.
pub fn two_generated_mpdr(
    group: &FiniteGroup,
    x: Elem,
    y: Elem,
    m: usize,
) -> Result<ConnectionSpec> {
    group.check(x)?;
    group.check(y)?;
    if m < 3 {
        return Err(Error::Unsupported(format!(
            "m = {m}; the two-generator recipe needs m >= 3"
        )));
    }
    if !group.generates(&[x, y]) {
        return Err(Error::NotGenerating(format!(
            "<{}, {}> is a proper subgroup",
            group.label(x),
            group.label(y)
        )));
    }
    if x == y {
        return Err(Error::Precondition("x and y must be distinct".into()));
    }
    let mut spec = ConnectionSpec::new(m, group.order())?;
    spec.set(0, 1, &[x, y])?;
    for i in 1..m {
        spec.set(i, i + 1, &[IDENTITY, x])?;
    }
    for j in 0..m {
        spec.set(j, j + m - 1, &[IDENTITY])?;
    }
    Ok(spec)
}

/// A warning when a generator handed to [`two_generated_mpdr`] is the
/// identity; the recipe is then checked per instance.
pub fn identity_generator_warning(x: Elem, y: Elem) -> Option<String> {
    (x == IDENTITY || y == IDENTITY)
        .then(|| "a generator is the identity; verify the result before relying on it".to_string())
}

fn aut_order_of_cayley(group: &FiniteGroup, set: &[Elem]) -> Result<BigUint> {
    let digraph = cayley_digraph(group, set)?;
    Ok(automorphisms(&digraph, AutOptions::default())?
        .group
        .order())
}

/// Whether `Cay(G, set)` is a digraphical regular representation.
pub fn is_drr(group: &FiniteGroup, set: &[Elem]) -> Result<bool> {
    Ok(aut_order_of_cayley(group, set)? == BigUint::from(group.order()))
}

/// Extends a DRR `Cay(G, R)` to the 2-partite representation
/// `T(0,1) = R ∪ {1}`, `T(1,0) = L ∪ {1}`, taking the first
/// `L ⊆ G \ (R⁻¹ ∪ {1})` with `|L| = |R|` in lexicographic order that works.
pub fn drr_to_2pdr(group: &FiniteGroup, r: &[Elem]) -> Result<ConnectionSpec> {
    let n = group.order();
    for &e in r {
        group.check(e)?;
    }
    let mut r = r.to_vec();
    r.sort_unstable();
    r.dedup();
    if r.contains(&IDENTITY) {
        return Err(Error::Precondition(
            "R must not contain the identity".into(),
        ));
    }
    if 2 * r.len() >= n {
        return Err(Error::Precondition(format!(
            "|R| = {} is not less than |G|/2 = {}/2",
            r.len(),
            n
        )));
    }
    if n > DESK_GROUP_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: DESK_GROUP_CAP,
        });
    }
    if !is_drr(group, &r)? {
        return Err(Error::Precondition("Cay(G, R) is not a DRR".into()));
    }
    let forbidden = group.inverse_set(&r);
    let candidates: Vec<Elem> = (1..n).filter(|e| !forbidden.contains(e)).collect();
    let mut with_identity = r.clone();
    with_identity.push(IDENTITY);

    let k = r.len();
    let mut idx: Vec<usize> = (0..k).collect();
    if candidates.len() >= k {
        loop {
            let mut l: Vec<Elem> = idx.iter().map(|&i| candidates[i]).collect();
            l.push(IDENTITY);
            let spec = ConnectionSpec::new(2, n)?
                .with(0, 1, &with_identity)?
                .with(1, 0, &l)?;
            if is_pdr(group, &spec)?.is_pdr {
                return Ok(spec);
            }
            if !next_combination(&mut idx, candidates.len()) {
                break;
            }
        }
    }
    Err(Error::Contradiction(format!(
        "no L of size {k} extends the DRR with R = {r:?} to a 2-PDR"
    )))
}

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// First pair `{a, b}` of non-identity elements (ascending) that generates
/// `G`, avoids inverses (`{a, b} ∩ {a⁻¹, b⁻¹} = ∅`), and gives an oriented
/// Cayley digraph whose automorphism group is `R(G)`.
pub fn find_valency2_orr(group: &FiniteGroup) -> Result<Option<[Elem; 2]>> {
    find_pair(group, true)
}

pub(crate) fn find_pair(group: &FiniteGroup, oriented: bool) -> Result<Option<[Elem; 2]>> {
    let n = group.order();
    if n > DESK_GROUP_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: DESK_GROUP_CAP,
        });
    }
    for a in 1..n {
        for b in a + 1..n {
            if oriented {
                let inv = [group.inv(a), group.inv(b)];
                if inv.contains(&a) || inv.contains(&b) {
                    continue;
                }
            }
            if !group.generates(&[a, b]) {
                continue;
            }
            if is_drr(group, &[a, b])? {
                return Ok(Some([a, b]));
            }
        }
    }
    Ok(None)
}
