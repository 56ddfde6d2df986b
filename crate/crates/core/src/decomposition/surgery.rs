//! Cutting a decomposition along a separating thin sphere.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::{require_valid, Ambient, Decomposition, GraphKind, NamedBody, SlotRef, ThickGlue, ThinGlue};
use crate::compressionbody::VpBody;
use crate::error::{Error, Result};
use crate::surface::{Role, SurfaceSet};
use crate::HalfInt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryReport {
    pub thin: String,
    pub punctures: u32,
    /// Parent, first child, second child.
    pub netchi: [i64; 3],
    pub netext: [HalfInt; 3],
    /// (p − 2)/2.
    pub correction: HalfInt,
    /// netχ(d) = netχ(d₁) + netχ(d₂) + 2.
    pub netchi_identity: bool,
    /// netext(d) = netext(d₁) + netext(d₂) − (p − 2)/2.
    pub netext_identity: bool,
}

impl SurgeryReport {
    pub fn holds(&self) -> bool {
        self.netchi_identity && self.netext_identity
    }
}

/// Cuts `d` along the thin sphere `thin_index`. Each side gets a vertex
/// sphere in its place, or absorbs it when it has two punctures.
pub fn surger(d: &Decomposition, thin_index: usize) -> Result<(Decomposition, Decomposition, SurgeryReport)> {
    require_valid(d)?;
    let cut =
        d.thin.get(thin_index).ok_or_else(|| Error::Surgery(format!("no thin surface with index {thin_index}")))?;
    let surf = *d.slot(cut.sides[0]);
    if surf.genus != 0 {
        return Err(Error::Surgery(format!("thin {} is {surf}, not a sphere", cut.name)));
    }

    let n = d.bodies.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for t in &d.thick {
        adj[t.bodies[0]].push(t.bodies[1]);
        adj[t.bodies[1]].push(t.bodies[0]);
    }
    for (i, t) in d.thin.iter().enumerate() {
        if i != thin_index {
            adj[t.sides[0].body].push(t.sides[1].body);
            adj[t.sides[1].body].push(t.sides[0].body);
        }
    }
    let mut first = vec![false; n];
    let start = cut.sides[0].body;
    first[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !first[w] {
                first[w] = true;
                queue.push_back(w);
            }
        }
    }
    if first[cut.sides[1].body] {
        return Err(Error::Surgery(format!("thin {} does not separate", cut.name)));
    }

    let c1 = child(d, thin_index, cut.sides[0], |b| first[b])?;
    let c2 = child(d, thin_index, cut.sides[1], |b| !first[b])?;
    for c in [&c1, &c2] {
        let r = c.validate();
        if !r.is_valid() {
            return Err(Error::Surgery(format!(
                "cutting along {} leaves an invalid side: {}",
                cut.name,
                r.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
            )));
        }
    }

    let p = surf.punctures;
    let netchi = [d.netchi_unchecked(), c1.netchi_unchecked(), c2.netchi_unchecked()];
    let netext = [d.netext_unchecked(), c1.netext_unchecked(), c2.netext_unchecked()];
    let correction = HalfInt::half_of(p as i64 - 2);
    let report = SurgeryReport {
        thin: cut.name.clone(),
        punctures: p,
        netchi,
        netext,
        correction,
        netchi_identity: netchi[0] == netchi[1] + netchi[2] + 2,
        netext_identity: netext[0] == netext[1] + netext[2] - correction,
    };
    Ok((c1, c2, report))
}

fn child(d: &Decomposition, cut: usize, slot: SlotRef, keep: impl Fn(usize) -> bool) -> Result<Decomposition> {
    let mut index = BTreeMap::new();
    let mut bodies: Vec<NamedBody> = Vec::new();
    for (i, b) in d.bodies.iter().enumerate() {
        if keep(i) {
            index.insert(i, bodies.len());
            bodies.push(b.clone());
        }
    }
    let thick: Vec<ThickGlue> = d
        .thick
        .iter()
        .filter(|t| keep(t.bodies[0]))
        .map(|t| ThickGlue { name: t.name.clone(), bodies: t.bodies.map(|b| index[&b]), into: index[&t.into] })
        .collect();
    let mut thin: Vec<ThinGlue> = d
        .thin
        .iter()
        .enumerate()
        .filter(|&(i, t)| i != cut && keep(t.sides[0].body))
        .map(|(_, t)| ThinGlue {
            name: t.name.clone(),
            sides: t.sides.map(|s| SlotRef { body: index[&s.body], slot: s.slot }),
            into: index[&t.into],
        })
        .collect();

    let bi = index[&slot.body];
    let body = &mut bodies[bi].body;
    if body.gag.vertices[slot.slot].punctures >= 3 {
        body.gag.vertices[slot.slot].role = Role::VertexSphere;
    } else {
        absorb(body, slot.slot)?;
        for t in &mut thin {
            for s in &mut t.sides {
                if s.body == bi && s.slot > slot.slot {
                    s.slot -= 1;
                }
            }
        }
    }

    let mut out = Decomposition { bodies, thick, thin, ambient: Ambient::closed(0, GraphKind::Other) };
    out.ambient = derived_ambient(&out, d.ambient.graph_kind);
    Ok(out)
}

/// Removes a twice-punctured sphere from ∂₋, joining the arcs through it.
fn absorb(b: &mut VpBody, v: usize) -> Result<()> {
    let ends: Vec<usize> =
        b.gag.edges.iter().filter(|&&(x, y)| x == v || y == v).map(|&(x, y)| if x == v { y } else { x }).collect();
    let verticals = b.vertical_arcs[v];
    b.gag.edges.retain(|&(x, y)| x != v && y != v);
    match (verticals, ends.as_slice()) {
        (2, []) => b.bridge_arcs += 1,
        (1, [u]) => b.vertical_arcs[*u] += 1,
        (0, [u, w]) if *u == v && *w == v => b.core_loops += 1,
        (0, [u, w]) => b.gag.edges.push((*u, *w)),
        _ => return Err(Error::Surgery(format!("cannot absorb component {v}"))),
    }
    b.gag.vertices.remove(v);
    b.vertical_arcs.remove(v);
    for e in &mut b.gag.edges {
        if e.0 > v {
            e.0 -= 1;
        }
        if e.1 > v {
            e.1 -= 1;
        }
    }
    Ok(())
}

fn derived_ambient(d: &Decomposition, parent: GraphKind) -> Ambient {
    let unglued = d.unglued_slots();
    let slots: Vec<_> = unglued.iter().map(|&s| *d.slot(s)).collect();
    let boundary =
        SurfaceSet { components: slots.iter().filter(|s| s.role == Role::ManifoldBoundary).copied().collect() };
    let mut vertex: Vec<u32> = slots.iter().filter(|s| s.role == Role::VertexSphere).map(|s| s.punctures).collect();
    vertex.sort_unstable();
    let twice_chi = boundary.punctures() as i64 - vertex.iter().map(|&p| p as i64 - 2).sum::<i64>();
    let meets_boundary = boundary.punctures() > 0;
    let kind = match (vertex.as_slice(), meets_boundary) {
        ([], false) => GraphKind::KnotLink,
        ([4], false) => GraphKind::Genus2Bouquet,
        ([3, 3], false) if matches!(parent, GraphKind::Genus2Theta | GraphKind::Genus2Handcuff) => parent,
        _ => GraphKind::Other,
    };
    Ambient { closed: boundary.is_empty(), boundary, graph_euler_char: twice_chi.div_euclid(2), graph_kind: kind }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::standard::*;
    use crate::decomposition::{check_delta_identity, GraphKind};

    #[test]
    fn slinky_spheres() {
        for len in [2, 4, 6] {
            let d = slinky_fixture(len);
            for i in 0..d.thin.len() {
                let (a, b, r) = surger(&d, i).unwrap();
                assert!(r.holds(), "{r:?}");
                assert_eq!(r.correction, HalfInt::ONE);
                assert!(check_delta_identity(&a).unwrap() && check_delta_identity(&b).unwrap());
            }
        }
    }

    #[test]
    fn connected_sum_absorbs() {
        let d = two_bridge_connected_sum();
        let (a, b, r) = surger(&d, 0).unwrap();
        assert!(r.holds());
        assert_eq!(r.correction, HalfInt::ZERO);
        for c in [a, b] {
            assert_eq!(c.ambient.graph_kind, GraphKind::KnotLink);
            assert!(c.bodies.iter().any(|nb| nb.body == VpBody::handlebody(0, 2, 0)));
        }
    }

    #[test]
    fn vertex_sum_splits_into_thetas() {
        let d = two_bridge_theta_vertex_sum();
        let (a, b, r) = surger(&d, 0).unwrap();
        assert!(r.holds());
        assert_eq!(r.correction, HalfInt::HALF);
        assert_eq!(a.ambient.graph_kind, GraphKind::Genus2Theta);
        assert_eq!(b.ambient.graph_euler_char, -1);
    }

    #[test]
    fn torus_refused() {
        let d = standard_propeller(PropellerVariant::TwicePuncturedTorus);
        assert!(matches!(surger(&d, 0), Err(Error::Surgery(_))));
        assert!(surger(&d, 7).is_err());
    }
}
