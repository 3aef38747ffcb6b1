//! DOT rendering of the four-part digraph over `Z_2`; digons become plain
//! edges. Pipe into `dot -Tsvg`.
//!
//!     cargo run --example export_dot > z2m4.dot

use mpdr::constructions::cyclic_mpdr;
use mpdr::{FiniteGroup, MCayleyDigraph};

fn main() -> mpdr::Result<()> {
    let x = MCayleyDigraph::build(&FiniteGroup::cyclic(2)?, &cyclic_mpdr(2, 4)?)?;
    print!("{}", x.digraph().to_dot(Some(&x.vertex_labels())));
    eprintln!(
        "{} arcs, {} undirected edges",
        x.digraph().arc_count(),
        x.digraph().undirected_edges().len()
    );
    Ok(())
}
