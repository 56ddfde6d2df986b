//! Independent oracles shared by the integration tests. Everything here
//! works on raw JSON or plain integers, in doubled units for extents, and
//! calls no library arithmetic.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use netext::bounds::FactorType;
use serde_json::Value;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join("data")
}

pub fn decomposition_path(name: &str) -> String {
    data_dir().join("decompositions").join(name).display().to_string()
}

pub fn factor_path(name: &str) -> String {
    data_dir().join("factors").join(name).display().to_string()
}

pub fn load_json(path: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).expect("readable")).expect("json")
}

/// 2·ext of a surface record {genus, punctures}.
pub fn ext2(s: &Value) -> i64 {
    let g = s["genus"].as_i64().unwrap();
    let p = s["punctures"].as_i64().unwrap();
    2 * g - 2 + p
}

pub fn chi(s: &Value) -> i64 {
    2 - 2 * s["genus"].as_i64().unwrap()
}

/// Net invariants of a decomposition file, in doubled units where halves
/// can occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawNet {
    pub netext2: i64,
    pub netchi: i64,
    pub capital_delta2: i64,
    pub sum_delta2: i64,
}

pub fn raw_net(file: &Value) -> RawNet {
    let bodies: BTreeMap<&str, &Value> =
        file["bodies"].as_array().unwrap().iter().map(|b| (b["name"].as_str().unwrap(), b)).collect();
    let mut netext2 = 0;
    let mut netchi = 0;
    for t in file["thick"].as_array().unwrap() {
        let plus = &bodies[t["bodies"][0].as_str().unwrap()]["plus"];
        netext2 += ext2(plus);
        netchi -= chi(plus);
    }
    for t in file["thin"].as_array().unwrap() {
        let side = &t["sides"][0];
        let s = &bodies[side["body"].as_str().unwrap()]["gag"]["vertices"][side["slot"].as_u64().unwrap() as usize];
        netext2 -= ext2(s);
        netchi += chi(s);
    }
    let sum_delta2 = bodies
        .values()
        .map(|b| {
            let below: i64 = b["gag"]["vertices"].as_array().unwrap().iter().map(ext2).sum();
            ext2(&b["plus"]) - below
        })
        .sum();
    let amb = &file["ambient"];
    let boundary: Vec<&Value> = amb["boundary"].as_array().map(|a| a.iter().collect()).unwrap_or_default();
    let bd_ext2: i64 = boundary.iter().map(|s| ext2(s)).sum();
    let bd_p: i64 = boundary.iter().map(|s| s["punctures"].as_i64().unwrap()).sum();
    let chi_t = amb["graph_euler_char"].as_i64().unwrap();
    // 2·(2·netext − (ext(∂M) + |∂M ∩ T|/2 − χ(T)))
    let capital_delta2 = 2 * netext2 - (bd_ext2 + bd_p - 2 * chi_t);
    RawNet { netext2, netchi, capital_delta2, sum_delta2 }
}

/// Per-factor net Euler characteristic x' of the low-extent surface, as a
/// function of the factor type.
pub fn x_prime(f: &FactorType) -> i64 {
    use FactorType::*;
    match *f {
        TrivialTheta | TrivialTwoBouquet | Curve02 { .. } => -2,
        LensCore | HopfGraph | Curve11 { .. } => 0,
        Curve20 { .. } => 2,
        PropellerKnot => 4,
        HopfSlinky { length, .. } => length as i64,
        GenericKnot { .. } | GenericGraph { .. } => panic!("no x' for generic factors"),
    }
}

pub fn is_knot(f: &FactorType) -> bool {
    use FactorType::*;
    match *f {
        Curve02 { is_knot } | Curve11 { is_knot } | Curve20 { is_knot } | HopfSlinky { is_knot, .. } => is_knot,
        LensCore | PropellerKnot | GenericKnot { .. } => true,
        TrivialTheta | TrivialTwoBouquet | HopfGraph | GenericGraph { .. } => false,
    }
}

/// Σ x' ≤ m + 2k − 2n + 3, where m skips trivial thetas and Hopf graphs
/// and k skips (1,0)-curves.
pub fn x_prime_feasible(fs: &[FactorType]) -> bool {
    let n = fs.len() as i64;
    let m = fs.iter().filter(|f| !is_knot(f) && !matches!(f, FactorType::TrivialTheta | FactorType::HopfGraph)).count()
        as i64;
    let k = fs.iter().filter(|f| is_knot(f) && **f != FactorType::LensCore).count() as i64;
    let sum: i64 = fs.iter().map(x_prime).sum();
    sum <= m + 2 * k - 2 * n + 3
}

pub fn structurally_valid(fs: &[FactorType]) -> bool {
    let graphs = fs.iter().filter(|f| !is_knot(f)).count();
    let trivial = fs.iter().filter(|f| matches!(f, FactorType::TrivialTheta | FactorType::TrivialTwoBouquet)).count();
    graphs >= 1 && trivial <= 1 && (trivial == 0 || graphs == 1)
}

/// The three distribution inequalities via the class counts n₋, n₀, n₂.
pub fn distribution_holds(fs: &[FactorType]) -> bool {
    use FactorType::*;
    let count = |p: &dyn Fn(&FactorType) -> bool| fs.iter().filter(|f| p(f)).count() as i64;
    let n = fs.len() as i64;
    let n_minus = count(&|f| matches!(f, TrivialTwoBouquet | Curve02 { .. }));
    let n_zero = count(&|f| matches!(f, HopfGraph | LensCore | Curve11 { is_knot: false }));
    let n_two = count(&|f| matches!(f, Curve20 { .. } | HopfSlinky { length: 2, .. }));
    let extra = count(&|f| matches!(f, Curve11 { is_knot: true } | TrivialTheta));
    3 * (n_minus + extra) >= n - 3
        && 4 * (n_minus + n_zero + extra) >= 2 * n - 3
        && 6 * (n_minus + n_zero + n_two + extra) >= 4 * n - 3
}

/// Every multiset of `types` with size in lo..=hi, no pruning.
pub fn all_multisets(types: &[FactorType], lo: usize, hi: usize, visit: &mut dyn FnMut(&[FactorType])) {
    fn rec(
        types: &[FactorType],
        start: usize,
        lo: usize,
        hi: usize,
        cur: &mut Vec<FactorType>,
        visit: &mut dyn FnMut(&[FactorType]),
    ) {
        if cur.len() >= lo {
            visit(cur);
        }
        if cur.len() == hi {
            return;
        }
        for j in start..types.len() {
            cur.push(types[j]);
            rec(types, j, lo, hi, cur, visit);
            cur.pop();
        }
    }
    rec(types, 0, lo, hi, &mut Vec::new(), visit);
}

/// Catalog types with slinkies of every even length up to `max_len`, built
/// independently of the library catalog.
pub fn oracle_catalog(max_len: u32) -> Vec<FactorType> {
    use FactorType::*;
    let mut v = vec![TrivialTheta, TrivialTwoBouquet, HopfGraph, LensCore, PropellerKnot];
    for is_knot in [true, false] {
        v.push(Curve02 { is_knot });
        v.push(Curve11 { is_knot });
        v.push(Curve20 { is_knot });
        let mut len = 2;
        while len <= max_len {
            v.push(HopfSlinky { length: len, is_knot, pieces: None });
            len += 2;
        }
    }
    v
}

pub fn sorted(mut v: Vec<FactorType>) -> Vec<FactorType> {
    v.sort();
    v
}

/// Runs the built binary and returns (exit status, stdout, stderr).
pub fn run_bin(args: &[&str]) -> (i32, String, String) {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_netext")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}
