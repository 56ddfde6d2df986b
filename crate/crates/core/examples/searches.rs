//! The two exhaustive multiset searches.
//!
//! `cargo run --release --example searches -- [N_MAX]`

use std::time::Instant;

use netext::bounds::{distribution_search, thetafact_search};

fn main() {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);

    let t = Instant::now();
    let s = thetafact_search(n_max);
    println!("theta-compatible, odd graph count, feasible ledger, n ≤ {n_max}:");
    for f in &s.solutions {
        println!("  {f}");
    }
    println!("  ({:.2?})", t.elapsed());

    let t = Instant::now();
    let d = distribution_search(n_max);
    println!(
        "distribution: {} feasible multisets with slinkies up to length {}, {} counterexamples ({:.2?})",
        d.feasible,
        d.max_slinky_length,
        d.counterexamples.len(),
        t.elapsed()
    );
    for f in &d.counterexamples {
        println!("  {f}");
    }
}
