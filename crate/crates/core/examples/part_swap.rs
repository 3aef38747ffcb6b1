//! Every valency-3 two-part spec over `Z_4` has `T(1,0) = y·T(0,1)` for
//! some `y`, and the map `g_0 ↦ (y g)_1, g_1 ↦ g_0` swaps the parts.
//!
//!     cargo run --example part_swap

use mpdr::autgroup::is_automorphism;
use mpdr::search::exhaust_2partite_valency3;
use mpdr::{ConnectionSpec, FiniteGroup, MCayleyDigraph};

fn main() -> mpdr::Result<()> {
    let z4 = FiniteGroup::cyclic(4)?;
    for e in exhaust_2partite_valency3(&z4)? {
        let spec = ConnectionSpec::new(2, 4)?
            .with(0, 1, &e.t01)?
            .with(1, 0, &e.t10)?;
        let x = MCayleyDigraph::build(&z4, &spec)?;
        // swap_automorphism wants T(0,1) = y·T(1,0); the record stores the inverse direction
        let y = z4.inv(e.translate.expect("every Z_4 pair is a translate"));
        let tau = x.swap_automorphism(y)?;
        println!(
            "T01 {:?} T10 {:?}  aut {:>3}  swap by {}: {}  ok = {}",
            e.t01,
            e.t10,
            e.aut_order,
            z4.label(y),
            tau,
            is_automorphism(&x.digraph().uncolored(), &tau)
        );
    }
    Ok(())
}
