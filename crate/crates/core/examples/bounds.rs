//! Lower bounds, the equality ledger and the distribution check for a few
//! factor lists.

use netext::bounds::{analyze, classify_by_netext, FactorFlags, FactorType, Factorization};
use netext::HalfInt;

fn main() -> netext::Result<()> {
    use FactorType::*;
    let s3 = FactorFlags { ambient_s3: true, ..FactorFlags::default() };
    let lists = vec![
        vec![Curve11 { is_knot: false }; 3],
        vec![Curve11 { is_knot: false }; 5],
        vec![Curve02 { is_knot: false }, Curve02 { is_knot: true }, PropellerKnot],
        vec![TrivialTheta, Curve20 { is_knot: true }],
        vec![HopfSlinky { length: 4, is_knot: false, pieces: None }, Curve11 { is_knot: true }],
    ];
    for factors in lists {
        let f = Factorization::new(factors)?;
        let r = analyze(&f, &s3)?;
        println!("{f}");
        if let Some(t) = &r.tunnel {
            println!("  tunnel ≥ {}", t.ceil);
        }
        if let Some(b) = &r.bridge {
            println!("  bridge ≥ {}", b.value);
        }
        if let Some(l) = &r.ledger {
            println!("  ledger {} vs {}: {}", l.lhs, l.rhs, if l.feasible { "feasible" } else { "infeasible" });
        }
        if let Some(d) = &r.distribution {
            println!("  distribution: {:?}", d.all_hold());
        }
    }

    for doubled in 0..=4 {
        let v = HalfInt::from_doubled(doubled);
        match classify_by_netext(v, doubled % 2 == 0) {
            Ok(c) => println!("netext {v}: {:?}", c.kinds),
            Err(e) => println!("netext {v}: {e}"),
        }
    }
    Ok(())
}
