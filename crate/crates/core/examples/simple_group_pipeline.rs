//! A_5 end to end: find a valency-2 oriented regular representation
//! `{a, b}`, then extend it to a two-part valency-3 representation.
//!
//!     cargo run --release --example simple_group_pipeline

use std::time::Instant;

use mpdr::constructions::{drr_to_2pdr, find_valency2_orr, is_drr};
use mpdr::{is_pdr, FiniteGroup, Permutation};

fn main() -> mpdr::Result<()> {
    let start = Instant::now();
    let a5 = FiniteGroup::from_permutations(
        5,
        &[
            Permutation::parse_cycles(5, "(0 1 2 3 4)")?,
            Permutation::parse_cycles(5, "(0 1 2)")?,
        ],
    )?;
    println!("|A5| = {}", a5.order());

    let Some(r) = find_valency2_orr(&a5)? else {
        println!("no valency-2 ORR found");
        return Ok(());
    };
    println!(
        "ORR {{{}, {}}}, DRR check: {}",
        a5.label(r[0]),
        a5.label(r[1]),
        is_drr(&a5, &r)?
    );

    let spec = drr_to_2pdr(&a5, &r)?;
    let labels: Vec<String> = spec.get(1, 0).iter().map(|&e| a5.label(e)).collect();
    println!("T(0,1) = R ∪ {{1}}, T(1,0) = {{{}}}", labels.join(", "));

    let report = is_pdr(&a5, &spec)?;
    println!(
        "{} vertices, valency {:?}, aut order {}, is_pdr = {} ({:.2?})",
        2 * a5.order(),
        report.valency,
        report.aut_order,
        report.is_pdr,
        start.elapsed()
    );
    println!("{}", serde_json::to_string_pretty(&report.stats).unwrap());
    Ok(())
}
