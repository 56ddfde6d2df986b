//! Random decompositions: Δ = Σδ and link parity.
//!
//! `cargo run --example random_identity -- [COUNT] [SEED]`

use netext::decomposition::random::{random_decompositions, RandomConfig};
use netext::decomposition::{check_delta_identity, link_parity, netext};

fn main() -> netext::Result<()> {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);

    let all = random_decompositions(seed, count, &RandomConfig::default());
    let mut holds = 0;
    let mut largest = netext::HalfInt::ZERO;
    for d in &all {
        if check_delta_identity(d)? {
            holds += 1;
        }
        largest = largest.max(netext(d)?);
    }
    println!("Δ = Σδ on {holds} of {count} decompositions; largest netext {largest}");

    let links = random_decompositions(seed, count, &RandomConfig { link_only: true, ..RandomConfig::default() });
    let integral = links.iter().filter(|d| matches!(link_parity(d), Ok(true))).count();
    println!("integral netext on {integral} of {count} link decompositions");
    Ok(())
}
