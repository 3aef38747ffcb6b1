//! Two-part representation of a cyclic group: prints the connection spec,
//! the verification report and the 3-step neighbourhoods of `1_0`, `1_1`.
//!
//!     cargo run --example cyclic_2pdr -- 9

use mpdr::constructions::cyclic_2pdr;
use mpdr::{is_pdr, FiniteGroup, MCayleyDigraph};

fn main() -> mpdr::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let group = FiniteGroup::cyclic(n)?;
    let spec = cyclic_2pdr(n)?;
    print!("{}", spec.to_json());

    let report = is_pdr(&group, &spec)?;
    println!(
        "aut order {} (|G| = {n}), is_pdr = {}",
        report.aut_order, report.is_pdr
    );

    let x = MCayleyDigraph::build(&group, &spec)?;
    let labels = x.vertex_labels();
    for part in 0..2 {
        let v = x.vertex(0, part);
        let ball = x.digraph().k_step_out_neighborhood(v, 3)?;
        let names: Vec<&str> = ball.iter().map(|&u| labels[u].as_str()).collect();
        println!(
            "Γ+3({}) has {} vertices: {}",
            labels[v],
            ball.len(),
            names.join(" ")
        );
    }
    if n == 5 {
        for cycle in x.digraph().directed_hamiltonian_oriented_cycles()? {
            let names: Vec<&str> = cycle.iter().map(|&u| labels[u].as_str()).collect();
            println!("oriented Hamiltonian cycle: ({})", names.join(", "));
        }
    }
    Ok(())
}
