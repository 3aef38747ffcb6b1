//! The recipe for a group generated by two elements `x, y`, checked on a
//! few small groups for m = 3..=5.
//!
//!     cargo run --example two_generated

use mpdr::constructions::two_generated_mpdr;
use mpdr::{is_pdr, FiniteGroup};

fn main() -> mpdr::Result<()> {
    let groups = [
        ("S3", FiniteGroup::symmetric(3)?),
        ("D4", FiniteGroup::dihedral(4)?),
        ("Q8", FiniteGroup::quaternion()?),
        ("Z2xZ4", FiniteGroup::cyclic_product(2, 4)?),
        ("S4", FiniteGroup::symmetric(4)?),
    ];
    for (name, g) in &groups {
        let (x, y) = (g.generators()[0], g.generators()[1]);
        println!("{name}: x = {}, y = {}", g.label(x), g.label(y));
        for m in 3..=5 {
            let report = is_pdr(g, &two_generated_mpdr(g, x, y, m)?)?;
            println!(
                "  m = {m}: {} vertices, aut order {}, is_pdr = {}",
                g.order() * m,
                report.aut_order,
                report.is_pdr
            );
        }
    }
    Ok(())
}
