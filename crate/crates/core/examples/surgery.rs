//! Cutting slinkies and sums along their thin spheres.

use netext::decomposition::standard::{slinky_fixture, two_bridge_connected_sum, two_bridge_theta_vertex_sum};
use netext::decomposition::{netext, surger};

fn main() -> netext::Result<()> {
    let mut cases = vec![("connected sum", two_bridge_connected_sum()), ("vertex sum", two_bridge_theta_vertex_sum())];
    for len in [2, 4, 6] {
        cases.push(("slinky", slinky_fixture(len)));
    }
    for (name, d) in cases {
        println!("{name} with {} thin spheres, netext {}", d.thin.len(), netext(&d)?);
        for i in 0..d.thin.len() {
            let (a, b, r) = surger(&d, i)?;
            println!(
                "  cut {} (p = {}): {} = {} + {} - {}; children have {} and {} bodies; {}",
                r.thin,
                r.punctures,
                r.netext[0],
                r.netext[1],
                r.netext[2],
                r.correction,
                a.bodies.len(),
                b.bodies.len(),
                if r.holds() { "identities hold" } else { "IDENTITY FAILS" }
            );
        }
    }
    Ok(())
}
