//! Automorphism group orders of the valency-3 m-part recipe over `Z_n`.
//!
//!     cargo run --example cyclic_mpdr

use mpdr::constructions::cyclic_mpdr;
use mpdr::{is_pdr, Error, FiniteGroup};

fn main() -> mpdr::Result<()> {
    print!("n\\m");
    for m in 2..=8 {
        print!("{m:>6}");
    }
    println!();
    for n in 1..=8 {
        print!("{n:>3}");
        let group = FiniteGroup::cyclic(n)?;
        for m in 2..=8 {
            let cell = match cyclic_mpdr(n, m) {
                Ok(spec) => is_pdr(&group, &spec)?.aut_order.to_string(),
                Err(Error::Excluded(_)) => "none".into(),
                Err(_) => "-".into(),
            };
            print!("{cell:>6}");
        }
        println!();
    }
    println!("\n`none`: no valency-3 representation exists; `-`: outside the recipe");
    Ok(())
}
