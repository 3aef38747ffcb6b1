//! Automorphism group of a digraph in the `n <count>` / `u v` text format,
//! cross-checked against brute force when it is small enough.
//!
//!     cargo run --example automorphisms -- path/to/graph.dg

use mpdr::autgroup::{automorphisms, AutOptions, BRUTE_FORCE_CAP};
use mpdr::{brute_force_automorphisms, Digraph};

const PETERSEN_LIKE: &str = "\
n 10
0 1
1 2
2 3
3 4
4 0
0 5
5 0
1 6
6 1
2 7
7 2
3 8
8 3
4 9
9 4
5 7
7 9
9 6
6 8
8 5
";

fn main() -> mpdr::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => PETERSEN_LIKE.to_string(),
    };
    let d = Digraph::parse(&text)?;
    let aut = automorphisms(&d, AutOptions::default())?;
    println!(
        "{} vertices, {} arcs, {} digons",
        d.order(),
        d.arc_count(),
        d.undirected_edges().len()
    );
    println!("order {}", aut.group.order());
    for g in aut.group.generators() {
        println!("  {g}");
    }
    println!("orbits {:?}", aut.group.orbits());
    println!("{}", serde_json::to_string(&aut.stats).unwrap());
    if d.order() <= BRUTE_FORCE_CAP {
        println!(
            "brute force order {}",
            brute_force_automorphisms(&d)?.order()
        );
    }
    Ok(())
}
