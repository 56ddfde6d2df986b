//! Exhaustive searches over multisets of catalog factors.

use rayon::prelude::*;
use serde::Serialize;

use super::{distribution_check, ledger_weight, FactorType, Factorization};

/// Every catalog factor type, with slinky lengths up to `max_length`.
pub fn catalog(max_length: u32) -> Vec<FactorType> {
    use FactorType::*;
    let mut v = vec![TrivialTheta, TrivialTwoBouquet, HopfGraph, LensCore, PropellerKnot];
    for is_knot in [false, true] {
        v.extend([Curve02 { is_knot }, Curve11 { is_knot }, Curve20 { is_knot }]);
        for length in (2..=max_length).step_by(2) {
            v.push(HopfSlinky { length, is_knot, pieces: None });
        }
    }
    v
}

/// Catalog factors that are theta curves and not excluded by hypothesis:
/// (1,1)- and (2,0)-curves and Hopf slinkies, all as graphs.
pub fn theta_compatible(max_length: u32) -> Vec<FactorType> {
    use FactorType::*;
    let mut v = vec![Curve11 { is_knot: false }, Curve20 { is_knot: false }];
    for length in (2..=max_length).step_by(2) {
        v.push(HopfSlinky { length, is_knot: false, pieces: None });
    }
    v
}

/// The longest slinky that can appear in a feasible ledger with n factors:
/// its left-side weight is at least ℓ and the right side is at most 2n + 2.
pub fn slinky_length_cap(n_max: usize) -> u32 {
    2 * n_max as u32 + 2
}

/// Calls `visit` on every multiset of 2..=n_max elements of `types` whose
/// ledger can still be satisfied, in a deterministic order per first
/// element. Pruned branches are never visited.
fn walk<F>(types: &[FactorType], first: usize, n_max: usize, visit: &F) -> Vec<Factorization>
where
    F: Fn(&[FactorType]) -> bool + Sync,
{
    #[allow(clippy::too_many_arguments)]
    fn rec<F: Fn(&[FactorType]) -> bool>(
        types: &[FactorType],
        start: usize,
        n_max: usize,
        cur: &mut Vec<FactorType>,
        lhs: i64,
        rhs: i64,
        visit: &F,
        out: &mut Vec<Factorization>,
    ) {
        // every later factor adds at least 0 on the left and at most 2 on the right
        if lhs > rhs + 2 * (n_max - cur.len()) as i64 {
            return;
        }
        if cur.len() >= 2 && visit(cur) {
            out.push(Factorization { factors: cur.clone() });
        }
        if cur.len() == n_max {
            return;
        }
        for j in start..types.len() {
            let (l, r) = ledger_weight(&types[j]);
            cur.push(types[j]);
            rec(types, j, n_max, cur, lhs + l, rhs + r, visit, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let (l, r) = ledger_weight(&types[first]);
    let mut cur = vec![types[first]];
    rec(types, first, n_max, &mut cur, l, 3 + r, visit, &mut out);
    out
}

fn structurally_valid(factors: &[FactorType]) -> bool {
    let graphs = factors.iter().filter(|f| f.is_graph()).count();
    let trivial = factors.iter().filter(|f| f.is_trivial()).count();
    graphs >= 1 && trivial <= 1 && (trivial == 0 || graphs == 1)
}

fn ledger_feasible(factors: &[FactorType]) -> bool {
    let (l, r) = factors.iter().map(ledger_weight).fold((0, 3), |(a, b), (x, y)| (a + x, b + y));
    l <= r
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetafactSearch {
    pub n_max: usize,
    pub max_slinky_length: u32,
    pub solutions: Vec<Factorization>,
}

/// Multisets of theta-compatible factors with 2 ≤ n ≤ n_max, an odd number
/// of graph factors, and a feasible ledger.
pub fn thetafact_search(n_max: usize) -> ThetafactSearch {
    let max_len = slinky_length_cap(n_max);
    let types = theta_compatible(max_len);
    let visit = |f: &[FactorType]| {
        let m = f.iter().filter(|x| x.is_graph()).count();
        m % 2 == 1 && ledger_feasible(f)
    };
    let mut solutions: Vec<Factorization> =
        (0..types.len()).into_par_iter().flat_map_iter(|i| walk(&types, i, n_max, &visit)).collect();
    solutions.sort_by(|a, b| a.factors.cmp(&b.factors));
    ThetafactSearch { n_max, max_slinky_length: max_len, solutions }
}

#[derive(Clone, Debug, Serialize)]
pub struct DistributionSearch {
    pub n_max: usize,
    pub max_slinky_length: u32,
    /// Ledger-feasible multisets examined.
    pub feasible: usize,
    pub counterexamples: Vec<Factorization>,
}

/// Checks the three distribution inequalities on every ledger-feasible
/// multiset of catalog factors with 2 ≤ n ≤ n_max.
pub fn distribution_search(n_max: usize) -> DistributionSearch {
    let max_len = slinky_length_cap(n_max);
    let types = catalog(max_len);
    let visit = |f: &[FactorType]| structurally_valid(f) && ledger_feasible(f);
    let per_first: Vec<(usize, Vec<Factorization>)> = (0..types.len())
        .into_par_iter()
        .map(|i| {
            let feasible = walk(&types, i, n_max, &visit);
            let bad = feasible
                .iter()
                .filter(|f| !matches!(distribution_check(f).map(|r| r.all_hold()), Ok(Some(true))))
                .cloned()
                .collect();
            (feasible.len(), bad)
        })
        .collect();
    let mut counterexamples: Vec<Factorization> = per_first.iter().flat_map(|(_, b)| b.clone()).collect();
    counterexamples.sort_by(|a, b| a.factors.cmp(&b.factors));
    DistributionSearch {
        n_max,
        max_slinky_length: max_len,
        feasible: per_first.iter().map(|(n, _)| n).sum(),
        counterexamples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thetafact_small() {
        let s = thetafact_search(5);
        assert_eq!(s.solutions.len(), 1);
        assert_eq!(s.solutions[0].factors, vec![FactorType::Curve11 { is_knot: false }; 3]);
    }

    #[test]
    fn distribution_small() {
        let s = distribution_search(4);
        assert!(s.feasible > 0);
        assert!(s.counterexamples.is_empty());
    }

    #[test]
    fn catalog_size() {
        assert_eq!(catalog(6).len(), 5 + 2 * (3 + 3));
        assert_eq!(theta_compatible(4).len(), 4);
    }
}
