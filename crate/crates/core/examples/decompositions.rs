//! Net extent, net Euler characteristic and Δ of the standard surfaces.

use netext::decomposition::{capital_delta, netchi, netext, sum_delta};
use netext::verify::standard_surfaces;

fn main() -> netext::Result<()> {
    println!("{:<40} {:>7} {:>7} {:>4} {:>4}", "surface", "netext", "netchi", "Δ", "Σδ");
    for (name, d) in standard_surfaces() {
        println!(
            "{name:<40} {:>7} {:>7} {:>4} {:>4}",
            netext(&d)?.to_string(),
            netchi(&d)?,
            capital_delta(&d)?.to_string(),
            sum_delta(&d)?.to_string()
        );
    }
    Ok(())
}
