//! Search for a 3-regular digraph with trivial automorphism group on m
//! vertices. Prints one verdict record per m.
//!
//!     cargo run --release --example rigid_search -- 7

use mpdr::search::{trivial_aut_3regular_search, RigidSearch};

fn main() -> mpdr::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    for m in 4..=max {
        let record = trivial_aut_3regular_search(&RigidSearch {
            jobs,
            ..RigidSearch::exhaustive(m)
        })?;
        println!("{}", serde_json::to_string(&record).unwrap());
    }
    Ok(())
}
