//! Exhaustive automorphism enumeration, used as an independent oracle.

use super::is_automorphism;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const BRUTE_FORCE_CAP: usize = 9;

/// Every automorphism of `graph` (respecting colours if present), found by
/// testing all `n!` permutations in lexicographic order.
pub fn brute_force_automorphism_list(graph: &Digraph) -> Result<Vec<Permutation>> {
    let n = graph.order();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let mut images: Vec<usize> = (0..n).collect();
    let mut found = Vec::new();
    loop {
        let candidate = Permutation::from_images(images.clone())?;
        if is_automorphism(graph, &candidate) {
            found.push(candidate);
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(found)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
