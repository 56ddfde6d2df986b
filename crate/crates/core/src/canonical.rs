//! Canonical keys for bodies up to relabelling of ∂₋ components.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::compressionbody::{validate, VpBody};
use crate::error::{Error, Result};
use crate::surface::Role;

/// Per-vertex label in a key: (genus, punctures, role, vertical arcs).
pub type VertexLabel = (u32, u32, Role, u32);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    pub plus_genus: u32,
    pub plus_punctures: u32,
    pub bridge_arcs: u32,
    pub core_loops: u32,
    pub vertices: Vec<VertexLabel>,
    pub edges: Vec<(usize, usize)>,
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}p{} b{} c{} [", self.plus_genus, self.plus_punctures, self.bridge_arcs, self.core_loops)?;
        for (i, (g, p, r, v)) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{},{}+{}", r.short(), g, p, v)?;
        }
        write!(f, "]")?;
        if !self.edges.is_empty() {
            let e: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            write!(f, " {}", e.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The canonical key of an admissible body.
pub fn canonical_form(b: &VpBody) -> Result<CanonicalKey> {
    let r = validate(b);
    if !r.is_admissible() {
        return Err(Error::InadmissibleBody(r.violations));
    }
    Ok(canonical_key_unchecked(b))
}

/// Canonical key without the admissibility check. Requires only that the
/// vertical-arc vector and edge list are in range.
pub fn canonical_key_unchecked(b: &VpBody) -> CanonicalKey {
    let labels: Vec<VertexLabel> =
        b.gag.vertices.iter().zip(&b.vertical_arcs).map(|(s, &v)| (s.genus, s.punctures, s.role, v)).collect();
    let (vertices, edges) = canonical_labelled_graph(&labels, &b.gag.edges);
    CanonicalKey {
        plus_genus: b.plus.genus,
        plus_punctures: b.plus.punctures,
        bridge_arcs: b.bridge_arcs,
        core_loops: b.core_loops,
        vertices,
        edges,
    }
}

/// Relabels a vertex-labelled multigraph into a canonical form: vertices
/// sorted by refined colour, edges the lexicographically least sorted list
/// over all orderings compatible with the colouring.
pub fn canonical_labelled_graph<L: Ord + Clone>(
    labels: &[L],
    edges: &[(usize, usize)],
) -> (Vec<L>, Vec<(usize, usize)>) {
    let n = labels.len();
    let colour = refine_colours(labels, edges);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colour[v]);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if colour[c[0]] == colour[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let sorted_labels: Vec<L> = order.iter().map(|&v| labels[v].clone()).collect();

    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut position = vec![0usize; n];
    let class_perms: Vec<Vec<Vec<usize>>> = classes.iter().map(|c| permutations(c)).collect();
    let mut choice = vec![0usize; classes.len()];
    loop {
        let mut slot = 0;
        for (ci, perms) in class_perms.iter().enumerate() {
            for &v in &perms[choice[ci]] {
                position[v] = slot;
                slot += 1;
            }
        }
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (position[a], position[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        // advance the mixed-radix counter over class permutations
        let mut i = 0;
        loop {
            if i == choice.len() {
                return (sorted_labels, best.unwrap_or_default());
            }
            choice[i] += 1;
            if choice[i] < class_perms[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Colour refinement: start from the labels (plus loop count), then split by
/// the multiset of neighbour colours until stable. Colours are ranks of
/// isomorphism-invariant signatures, so the result is itself invariant.
fn refine_colours<L: Ord + Clone>(labels: &[L], edges: &[(usize, usize)]) -> Vec<usize> {
    let n = labels.len();
    let mut loops = vec![0usize; n];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a == b {
            loops[a] += 1;
        } else {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let init: Vec<(L, usize)> = (0..n).map(|v| (labels[v].clone(), loops[v])).collect();
    let mut colour = rank(&init);
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = adj[v].iter().map(|&u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let next = rank(&sig);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn rank<T: Ord + Clone>(items: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = items.to_vec();
    distinct.sort();
    distinct.dedup();
    items.iter().map(|x| distinct.binary_search(x).expect("present")).collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Role;

    const S: (u32, Role) = (0, Role::VertexSphere);

    #[test]
    fn swap_gives_same_key() {
        let a = VpBody::from_arcs(1, &[S, S], &[(0, 0), (0, 1)], &[0, 2], 0);
        let b = VpBody::from_arcs(1, &[S, S], &[(1, 1), (1, 0)], &[2, 0], 0);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn two_arcs_vs_loop_and_arc() {
        let seven = VpBody::from_arcs(1, &[S, S], &[(0, 1), (0, 1)], &[1, 1], 0);
        let eight = VpBody::from_arcs(1, &[S, S], &[(0, 0), (0, 1)], &[0, 2], 0);
        assert_ne!(canonical_form(&seven).unwrap(), canonical_form(&eight).unwrap());
    }

    #[test]
    fn inadmissible_has_no_key() {
        let b = VpBody::from_arcs(0, &[S], &[], &[2], 0);
        assert!(canonical_form(&b).is_err());
    }

    #[test]
    fn refinement_separates_regular_graphs() {
        // a 6-cycle and two triangles have the same labels and degrees
        let labels = vec![0u8; 6];
        let hex: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let tri = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        assert_ne!(canonical_labelled_graph(&labels, &hex).1, canonical_labelled_graph(&labels, &tri).1);
        let shuffled = vec![(3, 0), (0, 5), (5, 1), (1, 2), (2, 4), (4, 3)];
        assert_eq!(canonical_labelled_graph(&labels, &hex).1, canonical_labelled_graph(&labels, &shuffled).1);
    }
}
