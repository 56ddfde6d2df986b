//! Exhaustive enumeration of admissible bodies up to canonical form.
//!
//! Search order: multisets of ∂₋ genera, then ghost arc multigraphs on them
//! (generated edge by edge, deduplicated up to isomorphism), then every
//! distribution of vertical and bridge arcs meeting the puncture count.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{canonical_key_unchecked, canonical_labelled_graph, CanonicalKey};
use crate::compressionbody::{classify_unchecked, validate, GhostArcGraph, Invariant, VpBody, VpClass};
use crate::error::{Error, Result};
use crate::surface::{Role, SurfaceComponent};
use crate::HalfInt;

pub mod tables;

pub use tables::{compare, ClassificationTable, DiffReport, TableEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumSpec {
    pub plus_genus: u32,
    pub max_punctures: u32,
    pub max_neg_components: usize,
    pub max_ghost_arcs: usize,
    pub allow_core_loops: bool,
    /// Keep every rejected candidate with the invariant that rejected it.
    #[serde(skip)]
    pub record_rejections: bool,
}

impl EnumSpec {
    pub fn new(plus_genus: u32, max_punctures: u32) -> Self {
        EnumSpec {
            plus_genus,
            max_punctures,
            max_neg_components: 4,
            max_ghost_arcs: 4,
            allow_core_loops: true,
            record_rejections: false,
        }
    }

    /// Bounds large enough that no admissible type is cut off.
    ///
    /// Each sphere needs three punctures, so 3s ≤ 2E + V. With
    /// E = n − c + r, t + r ≤ g and c ≥ 1 this gives n ≤ 3g + p − 2 and
    /// E ≤ n − 1 + g.
    pub fn exhaustive(plus_genus: u32, max_punctures: u32) -> Self {
        let g = plus_genus as i64;
        let p = max_punctures as i64;
        let n = (3 * g + p - 2).max(0);
        let e = (n - 1 + g).max(0);
        EnumSpec { max_neg_components: n as usize, max_ghost_arcs: e as usize, ..Self::new(plus_genus, max_punctures) }
    }

    pub fn widened(self, by: usize) -> Self {
        EnumSpec { max_neg_components: self.max_neg_components + by, max_ghost_arcs: self.max_ghost_arcs + by, ..self }
    }

    pub fn check(&self) -> Result<()> {
        if self.plus_genus > 2 {
            return Err(Error::OutOfRange(format!("plus genus {} is not in 0..=2", self.plus_genus)));
        }
        if self.max_punctures > 4 {
            return Err(Error::OutOfRange(format!("max punctures {} is above 4", self.max_punctures)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectionSource {
    /// The search's own arithmetic check.
    Search,
    /// Caught only by the full validator.
    Validator,
}

#[derive(Clone, Debug, Serialize)]
pub struct Rejection {
    pub body: VpBody,
    pub invariant: Invariant,
    pub source: RejectionSource,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub spec: EnumSpec,
    pub types: BTreeMap<CanonicalKey, VpBody>,
    pub rejections: Vec<Rejection>,
    /// Candidates examined, including rejected ones.
    pub candidates: usize,
}

impl Enumeration {
    pub fn keys(&self) -> BTreeSet<CanonicalKey> {
        self.types.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    /// Type counts by ∂₊ puncture number.
    pub fn counts_by_punctures(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for k in self.types.keys() {
            *m.entry(k.plus_punctures).or_insert(0) += 1;
        }
        m
    }
}

/// Every admissible body type with the given ∂₊ genus and at most
/// `max_punctures` punctures, within the search bounds.
pub fn enumerate(spec: EnumSpec) -> Enumeration {
    let mut multisets = vec![Vec::new()];
    genus_multisets(spec.plus_genus, spec.max_neg_components, &mut Vec::new(), &mut multisets);

    let parts: Vec<Partial> = multisets.par_iter().map(|genera| search_multiset(&spec, genera)).collect();

    let mut out = Enumeration { spec, types: BTreeMap::new(), rejections: Vec::new(), candidates: 0 };
    for part in parts {
        out.candidates += part.candidates;
        out.types.extend(part.found);
        out.rejections.extend(part.rejections);
    }
    out
}

/// Admissible types with δ = 0 and their class. Fails if the δ filter and
/// the class predicate disagree anywhere.
pub fn enumerate_delta_zero(spec: EnumSpec) -> Result<BTreeMap<CanonicalKey, VpClass>> {
    let all = enumerate(spec);
    let mut out = BTreeMap::new();
    for (k, b) in &all.types {
        let zero = b.delta_unchecked() == HalfInt::ZERO;
        let class = classify_unchecked(b);
        if zero != (class != VpClass::NotDeltaZero) {
            return Err(Error::SelfCheck(format!("{k}: delta {} but class {class}", b.delta_unchecked())));
        }
        if zero {
            out.insert(k.clone(), class);
        }
    }
    Ok(out)
}

#[derive(Default)]
struct Partial {
    found: Vec<(CanonicalKey, VpBody)>,
    rejections: Vec<Rejection>,
    candidates: usize,
}

impl Partial {
    fn consider(&mut self, spec: &EnumSpec, body: VpBody, quick: Option<Invariant>) {
        self.candidates += 1;
        if let Some(inv) = quick {
            if spec.record_rejections {
                self.rejections.push(Rejection { body, invariant: inv, source: RejectionSource::Search });
            }
            return;
        }
        let report = validate(&body);
        if let Some(v) = report.violations.first() {
            if spec.record_rejections {
                self.rejections.push(Rejection { body, invariant: v.invariant, source: RejectionSource::Validator });
            }
            return;
        }
        self.found.push((canonical_key_unchecked(&body), body));
    }
}

fn genus_multisets(budget: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == max_len {
        return;
    }
    let cap = cur.last().copied().unwrap_or(budget).min(budget);
    for g in (0..=cap).rev() {
        cur.push(g);
        out.push(cur.clone());
        genus_multisets(budget - g, max_len, cur, out);
        cur.pop();
    }
}

fn role_for(genus: u32) -> Role {
    if genus == 0 {
        Role::VertexSphere
    } else {
        Role::Thin
    }
}

fn search_multiset(spec: &EnumSpec, genera: &[u32]) -> Partial {
    let mut part = Partial::default();
    let g = spec.plus_genus;

    if genera.is_empty() {
        for p in (0..=spec.max_punctures).step_by(2) {
            let b = p / 2;
            let max_core = if spec.allow_core_loops { g } else { 0 };
            for c in 0..=max_core {
                let body = VpBody::handlebody(g, b, c);
                let quick = if g == 0 && p == 0 {
                    Some(Invariant::PlusRole)
                } else if c > 0 && b > 0 {
                    Some(Invariant::CoreLoopPlacement)
                } else {
                    None
                };
                part.consider(spec, body, quick);
            }
        }
        return part;
    }

    let genus_sum: u32 = genera.iter().sum();
    let rank_budget = (g - genus_sum) as usize;
    for (labels, edges) in ghost_graphs(genera, spec.max_ghost_arcs, rank_budget) {
        let n = labels.len();
        let deg: Vec<u32> =
            (0..n).map(|v| edges.iter().map(|&(a, b)| (a == v) as u32 + (b == v) as u32).sum()).collect();
        let need: u32 = (0..n).filter(|&v| labels[v] == 0).map(|v| 3u32.saturating_sub(deg[v])).sum();
        for p in 0..=spec.max_punctures {
            for b in 0..=p / 2 {
                let total_vertical = p - 2 * b;
                if !spec.record_rejections && need > total_vertical {
                    continue;
                }
                for_each_composition(total_vertical, n, &mut |vert: &[u32]| {
                    let small = (0..n).any(|v| labels[v] == 0 && deg[v] + vert[v] < 3);
                    if small && !spec.record_rejections {
                        part.candidates += 1;
                        return;
                    }
                    let vertices = (0..n)
                        .map(|v| SurfaceComponent::new(labels[v], deg[v] + vert[v], role_for(labels[v])))
                        .collect();
                    let body = VpBody {
                        plus: SurfaceComponent::thick(g, p),
                        gag: GhostArcGraph::new(vertices, edges.clone()),
                        vertical_arcs: vert.to_vec(),
                        bridge_arcs: b,
                        core_loops: 0,
                    };
                    part.consider(spec, body, small.then_some(Invariant::SmallSphere));
                });
            }
        }
    }
    part
}

/// Vertex genera and an edge list.
type LabelledGraph = (Vec<u32>, Vec<(usize, usize)>);

/// Ghost arc multigraphs on vertices with the given genera, up to
/// isomorphism, with at most `max_edges` edges and cycle rank at most
/// `rank_budget`. Vertices are returned in canonical order.
fn ghost_graphs(genera: &[u32], max_edges: usize, rank_budget: usize) -> Vec<LabelledGraph> {
    let n = genera.len();
    let start = canonical_labelled_graph(genera, &[]);
    let mut seen: BTreeSet<LabelledGraph> = BTreeSet::new();
    seen.insert(start.clone());
    let mut level = vec![start];
    for _ in 0..max_edges {
        let mut next = BTreeSet::new();
        for (labels, edges) in &level {
            for i in 0..n {
                for j in i..n {
                    let mut e = edges.clone();
                    e.push((i, j));
                    if cycle_rank(n, &e) > rank_budget {
                        continue;
                    }
                    let c = canonical_labelled_graph(labels, &e);
                    if !seen.contains(&c) {
                        next.insert(c);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        seen.extend(next.iter().cloned());
        level = next.into_iter().collect();
    }
    seen.into_iter().collect()
}

fn cycle_rank(n: usize, edges: &[(usize, usize)]) -> usize {
    let g = GhostArcGraph::new(vec![SurfaceComponent::vertex(3); n], edges.to_vec());
    g.cycle_rank()
}

/// Calls `f` on every way to write `total` as an ordered sum of `parts`
/// non-negative integers.
fn for_each_composition(total: u32, parts: usize, f: &mut dyn FnMut(&[u32])) {
    fn go(rem: u32, i: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if i + 1 == cur.len() {
            cur[i] = rem;
            f(cur);
            return;
        }
        for x in 0..=rem {
            cur[i] = x;
            go(rem - x, i + 1, cur, f);
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut cur = vec![0; parts];
    go(total, 0, &mut cur, f);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_count() {
        let mut n = 0;
        for_each_composition(4, 3, &mut |_| n += 1);
        assert_eq!(n, 15);
        let mut n = 0;
        for_each_composition(0, 0, &mut |_| n += 1);
        assert_eq!(n, 1);
    }

    #[test]
    fn multisets_respect_budget() {
        let mut out = vec![Vec::new()];
        genus_multisets(2, 2, &mut Vec::new(), &mut out);
        let expect: Vec<Vec<u32>> =
            vec![vec![], vec![2], vec![2, 0], vec![1], vec![1, 1], vec![1, 0], vec![0], vec![0, 0]];
        assert_eq!(out, expect);
    }

    #[test]
    fn ghost_graphs_on_two_spheres_rank_one() {
        // none, one arc, one loop, two parallel arcs, loop and arc
        let gs = ghost_graphs(&[0, 0], 2, 1);
        assert_eq!(gs.len(), 5);
    }

    #[test]
    fn sphere_counts() {
        let e = enumerate(EnumSpec::new(0, 4));
        let counts = e.counts_by_punctures();
        assert_eq!(counts.get(&2), Some(&1));
        assert_eq!(counts.get(&3), Some(&1));
        assert_eq!(counts.get(&4), Some(&3));
        assert_eq!(e.len(), 5);
    }

    #[test]
    fn torus_count() {
        assert_eq!(enumerate(EnumSpec::new(1, 2)).len(), 12);
    }

    #[test]
    fn range_checks() {
        assert!(EnumSpec::new(3, 0).check().is_err());
        assert!(EnumSpec::new(0, 5).check().is_err());
        assert!(EnumSpec::new(2, 4).check().is_ok());
    }
}
