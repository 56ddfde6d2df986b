//! Self-verification suites: table reproduction, δ classification, the
//! Δ = Σδ identity, parity, surgery arithmetic and the two multiset
//! searches.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{distribution_search, thetafact_search, FactorType};
use crate::compressionbody::{classify_delta_zero, VpClass};
use crate::decomposition::random::{random_body, random_decompositions, RandomConfig};
use crate::decomposition::standard;
use crate::decomposition::{check_delta_identity, link_parity, surger, Decomposition, GraphKind};
use crate::enumerator::{compare, enumerate, enumerate_delta_zero, ClassificationTable, EnumSpec};
use crate::HalfInt;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub random_samples: usize,
    pub seed: u64,
    pub max_factors: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { random_samples: 1000, seed: 2024, max_factors: 8 }
    }
}

fn timed(name: &str, f: impl FnOnce() -> (bool, String)) -> SuiteResult {
    let t = Instant::now();
    let (passed, detail) = f();
    SuiteResult { name: name.to_string(), passed, detail, seconds: t.elapsed().as_secs_f64() }
}

/// Every standard surface, with a name.
pub fn standard_surfaces() -> Vec<(String, Decomposition)> {
    use standard::*;
    let kinds = [GraphKind::KnotLink, GraphKind::Genus2Theta, GraphKind::Genus2Handcuff, GraphKind::Genus2Bouquet];
    let mut v = vec![("unknot-bridge-sphere".to_string(), unknot_bridge_sphere())];
    for k in kinds {
        let tag =
            serde_json::to_value(k).ok().and_then(|s| s.as_str().map(|s| s.replace('_', "-"))).unwrap_or_default();
        v.push((format!("two-bridge-sphere-{tag}"), two_bridge_sphere(k)));
        v.push((format!("one-one-torus-{tag}"), one_one_torus(k)));
        v.push((format!("genus-two-heegaard-{tag}"), genus_two_heegaard(k)));
    }
    v.push(("propeller".into(), standard_propeller(PropellerVariant::TwicePuncturedTorus)));
    v.push(("propeller-two-tori".into(), standard_propeller(PropellerVariant::TwoOncePuncturedTori)));
    v.push(("two-bridge-connected-sum".into(), two_bridge_connected_sum()));
    v.push(("two-bridge-theta-vertex-sum".into(), two_bridge_theta_vertex_sum()));
    for len in [2, 4, 6] {
        v.push((format!("slinky-{len}"), slinky_fixture(len)));
    }
    v
}

pub fn table_suite(genus: u32, max_p: u32) -> SuiteResult {
    timed(&format!("table genus {genus}"), || {
        let found = enumerate(EnumSpec::exhaustive(genus, max_p));
        let Some(table) = ClassificationTable::builtin(genus) else {
            return (false, "no table".into());
        };
        let table = match table.restricted(max_p) {
            Ok(t) => t,
            Err(e) => return (false, e.to_string()),
        };
        let d = compare(&found.keys(), &table);
        (
            d.is_empty(),
            format!(
                "{} types {:?}; {} missing, {} unexpected",
                found.len(),
                found.counts_by_punctures(),
                d.missing.len(),
                d.unexpected.len()
            ),
        )
    })
}

pub fn saturation_suite() -> SuiteResult {
    timed("saturation", || {
        let mut grew = Vec::new();
        for (g, p) in [(0, 4), (1, 2), (2, 0)] {
            let spec = EnumSpec::exhaustive(g, p);
            if enumerate(spec).keys() != enumerate(spec.widened(1)).keys() {
                grew.push(format!("genus {g}"));
            }
        }
        (grew.is_empty(), if grew.is_empty() { "bounds + 1 add nothing".into() } else { grew.join(", ") })
    })
}

pub fn delta_zero_suite() -> SuiteResult {
    timed("delta-zero classes", || {
        let mut total = 0;
        let mut zero = 0;
        let mut bad = Vec::new();
        for g in 0..=2 {
            let spec = EnumSpec::exhaustive(g, 4);
            let all = enumerate(spec);
            total += all.len();
            for (k, b) in &all.types {
                let d = b.delta_unchecked();
                if d < HalfInt::ZERO || !d.is_integer() {
                    bad.push(format!("{k}: delta {d}"));
                }
                let class = classify_delta_zero(b).unwrap_or(VpClass::NotDeltaZero);
                if (d == HalfInt::ZERO) != (class != VpClass::NotDeltaZero) {
                    bad.push(format!("{k}: delta {d}, class {class}"));
                }
            }
            match enumerate_delta_zero(spec) {
                Ok(m) => zero += m.len(),
                Err(e) => bad.push(e.to_string()),
            }
        }
        (bad.is_empty(), format!("{total} types, {zero} with delta 0, {} mismatches", bad.len()))
    })
}

pub fn delta_identity_suite(opts: &VerifyOptions) -> SuiteResult {
    timed("delta identity", || {
        let mut failures = 0;
        let random = random_decompositions(opts.seed, opts.random_samples, &RandomConfig::default());
        for d in random.iter().chain(standard_surfaces().iter().map(|(_, d)| d)) {
            if !matches!(check_delta_identity(d), Ok(true)) {
                failures += 1;
            }
        }
        (failures == 0, format!("{} random + standard surfaces, {failures} failures", random.len()))
    })
}

pub fn parity_suite(opts: &VerifyOptions) -> SuiteResult {
    timed("parity", || {
        let cfg = RandomConfig { link_only: true, ..RandomConfig::default() };
        let links = random_decompositions(opts.seed + 1, opts.random_samples, &cfg);
        let odd = links.iter().filter(|d| !matches!(link_parity(d), Ok(true))).count();
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed + 2);
        let bad_bodies = (0..opts.random_samples)
            .map(|_| random_body(&mut rng, 2))
            .filter(|b| b.delta().map_or(true, |d| d < HalfInt::ZERO || !d.is_integer()))
            .count();
        (
            odd == 0 && bad_bodies == 0,
            format!("{odd} non-integral link net extents, {bad_bodies} bodies with bad delta"),
        )
    })
}

pub fn crushing_suite() -> SuiteResult {
    timed("crushing calc", || {
        let mut cuts = 0;
        let mut bad = Vec::new();
        for len in [2, 4, 6] {
            let d = standard::slinky_fixture(len);
            for i in 0..d.thin.len() {
                cuts += 1;
                match surger(&d, i) {
                    Ok((_, _, r)) if r.holds() && r.correction == HalfInt::half_of(r.punctures as i64 - 2) => {}
                    Ok((_, _, r)) => bad.push(format!("slinky {len} {}: {r:?}", d.thin[i].name)),
                    Err(e) => bad.push(format!("slinky {len} {}: {e}", d.thin[i].name)),
                }
            }
        }
        (bad.is_empty(), format!("{cuts} thin spheres cut, {} failures", bad.len()))
    })
}

pub fn thetafact_suite(opts: &VerifyOptions) -> SuiteResult {
    timed("theta factors", || {
        let s = thetafact_search(opts.max_factors);
        let expected = vec![FactorType::Curve11 { is_knot: false }; 3];
        let ok = s.solutions.len() == 1 && s.solutions[0].factors == expected;
        let found: Vec<String> = s.solutions.iter().map(|f| f.to_string()).collect();
        (ok, format!("n ≤ {}: {}", opts.max_factors, found.join(" ")))
    })
}

pub fn distribution_suite(opts: &VerifyOptions) -> SuiteResult {
    timed("distribution", || {
        let s = distribution_search(opts.max_factors);
        (
            s.counterexamples.is_empty(),
            format!(
                "n ≤ {}: {} feasible multisets, {} counterexamples",
                opts.max_factors,
                s.feasible,
                s.counterexamples.len()
            ),
        )
    })
}

pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteResult> {
    vec![
        table_suite(0, 4),
        table_suite(1, 2),
        table_suite(2, 0),
        saturation_suite(),
        delta_zero_suite(),
        delta_identity_suite(opts),
        parity_suite(opts),
        crushing_suite(),
        thetafact_suite(opts),
        distribution_suite(opts),
    ]
}
