mod common;

use common::*;
use netext::bounds::search::{catalog, slinky_length_cap, theta_compatible};
use netext::bounds::{distribution_search, thetafact_search, FactorType};
use netext::cli::schema::DecompositionFile;
use netext::compressionbody::validate;
use netext::decomposition::standard::{slinky, SlinkyEnd, SlinkyStart};
use netext::enumerator::{enumerate, ClassificationTable, EnumSpec};
use netext::verify::standard_surfaces;
use netext::{HalfInt, VpBody};
use serde_json::Value;

#[test]
fn shipped_files_match_constructors() {
    for (name, d) in standard_surfaces() {
        let mut shipped = load_json(&decomposition_path(&format!("{name}.json")));
        shipped.as_object_mut().unwrap().remove("description");
        let built = serde_json::to_value(DecompositionFile::from_decomposition(&d)).unwrap();
        assert_eq!(shipped, built, "{name}");
        let raw = raw_net(&built);
        assert_eq!(raw.capital_delta2, raw.sum_delta2, "{name}");
    }
}

#[test]
fn slinky_values_for_every_end() {
    let starts = [
        SlinkyStart::Bouquet11,
        SlinkyStart::Bouquet20,
        SlinkyStart::HopfifiedTheta,
        SlinkyStart::HopfifiedHandcuff,
        SlinkyStart::HopfRinglet,
    ];
    for start in starts {
        for end in [SlinkyEnd::Bouquet11, SlinkyEnd::Bouquet20] {
            for len in (2..=12).step_by(2) {
                let Ok(d) = slinky(start, end, len) else { continue };
                let raw = raw_net(&serde_json::to_value(DecompositionFile::from_decomposition(&d)).unwrap());
                assert_eq!((raw.netext2, raw.netchi), (2, len as i64), "{start:?} {end:?} {len}");
                assert_eq!(raw.capital_delta2, raw.sum_delta2);
            }
        }
    }
}

#[test]
fn pruned_searches_match_brute_force() {
    for n_max in 2..=6 {
        let cap = slinky_length_cap(n_max);
        assert_eq!(sorted(catalog(cap)), sorted(oracle_catalog(cap)));

        let mut feasible = 0;
        all_multisets(&catalog(cap), 2, n_max, &mut |fs| {
            if structurally_valid(fs) && x_prime_feasible(fs) {
                feasible += 1;
            }
        });
        assert_eq!(distribution_search(n_max).feasible, feasible, "n ≤ {n_max}");

        let mut theta = Vec::new();
        all_multisets(&theta_compatible(cap), 2, n_max, &mut |fs| {
            if fs.len() % 2 == 1 && x_prime_feasible(fs) {
                theta.push(sorted(fs.to_vec()));
            }
        });
        let got: Vec<Vec<FactorType>> =
            thetafact_search(n_max).solutions.iter().map(|f| sorted(f.factors.clone())).collect();
        assert_eq!(got, theta, "n ≤ {n_max}");
    }
}

#[test]
fn slinky_cap_is_not_binding() {
    // a slinky of length ℓ puts at least ℓ on the left of the ledger,
    // which n − 1 further factors can offset by at most 2 each
    let n_max = 5;
    let mut longest = 0;
    all_multisets(&oracle_catalog(4 * n_max as u32), 2, n_max, &mut |fs| {
        if structurally_valid(fs) && x_prime_feasible(fs) {
            for f in fs {
                if let FactorType::HopfSlinky { length, .. } = f {
                    longest = longest.max(*length);
                }
            }
        }
    });
    assert!(longest <= slinky_length_cap(n_max), "{longest}");
}

#[test]
fn enumeration_is_stable_and_valid() {
    for (g, p) in [(0, 4), (1, 3), (2, 1)] {
        let mut spec = EnumSpec::exhaustive(g, p);
        spec.record_rejections = true;
        let a = enumerate(spec);
        let b = enumerate(spec);
        assert_eq!(a.keys(), b.keys());
        for body in a.types.values() {
            assert!(validate(body).is_admissible(), "{body}");
        }
        for r in &a.rejections {
            let report = validate(&r.body);
            assert!(
                report.has(r.invariant),
                "{} rejected for {} but validator says {:?}",
                r.body,
                r.invariant,
                report.invariants()
            );
        }
    }
}

#[test]
fn sphere_range_delta_is_at_most_one() {
    let found = enumerate(EnumSpec::exhaustive(0, 4));
    let ones: Vec<&VpBody> = found.types.values().filter(|b| b.delta_unchecked() == HalfInt::ONE).collect();
    assert!(found.types.values().all(|b| b.delta_unchecked() <= HalfInt::ONE));
    assert_eq!(ones, [&VpBody::handlebody(0, 2, 0)]);
}

#[test]
fn torus_table_class_counts() {
    let t = ClassificationTable::builtin(1).unwrap();
    let counts: Vec<usize> = t.class_counts().values().copied().collect();
    assert_eq!(counts, [3, 1, 1, 1, 2, 2, 1, 1]);
}

#[test]
fn factor_files_use_string_half_integers() {
    let v = load_json(&factor_path("brunnian-one.json"));
    assert_eq!(v["factors"][0]["netext"], Value::String("3/2".into()));
}
