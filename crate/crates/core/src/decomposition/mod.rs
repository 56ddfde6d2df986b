//! Decompositions of a pair into bodies glued along thick and thin
//! surfaces, viewed as an oriented dual digraph.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compressionbody::{validate, VpBody};
use crate::error::{Error, Result};
use crate::surface::{Role, SurfaceComponent, SurfaceSet};
use crate::HalfInt;

pub mod random;
pub mod standard;
mod surgery;

pub use surgery::{surger, SurgeryReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedBody {
    pub name: String,
    #[serde(flatten)]
    pub body: VpBody,
}

/// A thick surface: the common ∂₊ of two bodies. `into` is the body its
/// normal points into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThickGlue {
    pub name: String,
    pub bodies: [usize; 2],
    pub into: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlotRef {
    pub body: usize,
    pub slot: usize,
}

/// A thin surface: a ∂₋ component of each of two bodies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinGlue {
    pub name: String,
    pub sides: [SlotRef; 2],
    pub into: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    KnotLink,
    Genus2Theta,
    Genus2Handcuff,
    Genus2Bouquet,
    Other,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GraphKind::KnotLink => "knot/link",
            GraphKind::Genus2Theta => "theta curve",
            GraphKind::Genus2Handcuff => "handcuff curve",
            GraphKind::Genus2Bouquet => "2-bouquet",
            GraphKind::Other => "other",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ambient {
    pub closed: bool,
    #[serde(default)]
    pub boundary: SurfaceSet,
    pub graph_euler_char: i64,
    pub graph_kind: GraphKind,
}

impl Ambient {
    pub fn closed(graph_euler_char: i64, graph_kind: GraphKind) -> Self {
        Ambient { closed: true, boundary: SurfaceSet::default(), graph_euler_char, graph_kind }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub bodies: Vec<NamedBody>,
    pub thick: Vec<ThickGlue>,
    pub thin: Vec<ThinGlue>,
    pub ambient: Ambient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionInvariant {
    Reference,
    Body,
    ThickArity,
    ThinArity,
    SurfaceMatching,
    SlotRole,
    UnpuncturedSphere,
    Orientation,
    Cycle,
    Ambient,
}

impl fmt::Display for DecompositionInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DecompositionInvariant::Reference => "reference",
            DecompositionInvariant::Body => "body",
            DecompositionInvariant::ThickArity => "thick arity",
            DecompositionInvariant::ThinArity => "thin arity",
            DecompositionInvariant::SurfaceMatching => "surface matching",
            DecompositionInvariant::SlotRole => "slot role",
            DecompositionInvariant::UnpuncturedSphere => "unpunctured sphere",
            DecompositionInvariant::Orientation => "orientation",
            DecompositionInvariant::Cycle => "digraph cycle",
            DecompositionInvariant::Ambient => "ambient",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionViolation {
    pub invariant: DecompositionInvariant,
    pub detail: String,
}

impl fmt::Display for DecompositionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.invariant, self.detail)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DecompositionReport {
    pub violations: Vec<DecompositionViolation>,
    /// Bodies in a topological order of the dual digraph, when acyclic.
    pub topological_order: Option<Vec<usize>>,
}

impl DecompositionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, inv: DecompositionInvariant) -> bool {
        self.violations.iter().any(|v| v.invariant == inv)
    }
}

impl Decomposition {
    pub fn body_index(&self, name: &str) -> Option<usize> {
        self.bodies.iter().position(|b| b.name == name)
    }

    pub fn thin_index(&self, name: &str) -> Option<usize> {
        self.thin.iter().position(|t| t.name == name)
    }

    pub fn slot(&self, s: SlotRef) -> &SurfaceComponent {
        &self.bodies[s.body].body.gag.vertices[s.slot]
    }

    pub fn validate(&self) -> DecompositionReport {
        validate_decomposition(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// The same decomposition with every normal reversed.
    pub fn reversed(&self) -> Decomposition {
        let mut d = self.clone();
        for t in &mut d.thick {
            t.into = if t.into == t.bodies[0] { t.bodies[1] } else { t.bodies[0] };
        }
        for t in &mut d.thin {
            t.into = if t.into == t.sides[0].body { t.sides[1].body } else { t.sides[0].body };
        }
        d
    }

    /// Directed edges (from, to) of the dual digraph, thick then thin.
    pub fn digraph_edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for t in &self.thick {
            let from = if t.into == t.bodies[0] { t.bodies[1] } else { t.bodies[0] };
            e.push((from, t.into));
        }
        for t in &self.thin {
            let from = if t.into == t.sides[0].body { t.sides[1].body } else { t.sides[0].body };
            e.push((from, t.into));
        }
        e
    }

    fn thick_surface(&self, t: &ThickGlue) -> SurfaceComponent {
        self.bodies[t.bodies[0]].body.plus
    }

    fn thin_surface(&self, t: &ThinGlue) -> SurfaceComponent {
        *self.slot(t.sides[0])
    }

    /// Unglued ∂₋ slots.
    pub fn unglued_slots(&self) -> Vec<SlotRef> {
        let glued: std::collections::BTreeSet<SlotRef> = self.thin.iter().flat_map(|t| t.sides).collect();
        let mut out = Vec::new();
        for (bi, b) in self.bodies.iter().enumerate() {
            for si in 0..b.body.gag.len() {
                let s = SlotRef { body: bi, slot: si };
                if !glued.contains(&s) {
                    out.push(s);
                }
            }
        }
        out
    }

    fn netext_unchecked(&self) -> HalfInt {
        let plus: HalfInt = self.thick.iter().map(|t| self.thick_surface(t).extent()).sum();
        let minus: HalfInt = self.thin.iter().map(|t| self.thin_surface(t).extent()).sum();
        plus - minus
    }

    fn netchi_unchecked(&self) -> i64 {
        let plus: i64 = self.thick.iter().map(|t| self.thick_surface(t).euler_char()).sum();
        let minus: i64 = self.thin.iter().map(|t| self.thin_surface(t).euler_char()).sum();
        -plus + minus
    }

    fn capital_delta_unchecked(&self) -> HalfInt {
        let a = &self.ambient;
        let correction = a.boundary.extent() + HalfInt::half_of(a.boundary.punctures() as i64)
            - HalfInt::from_int(a.graph_euler_char);
        self.netext_unchecked() * 2 - correction
    }

    fn sum_delta_unchecked(&self) -> HalfInt {
        self.bodies.iter().map(|b| b.body.delta_unchecked()).sum()
    }
}

fn require_valid(d: &Decomposition) -> Result<()> {
    let r = validate_decomposition(d);
    if r.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidDecomposition(r.violations))
    }
}

/// ext(H⁺) − ext(H⁻), each glued surface counted once.
pub fn netext(d: &Decomposition) -> Result<HalfInt> {
    require_valid(d)?;
    Ok(d.netext_unchecked())
}

/// −χ(H⁺) + χ(H⁻).
pub fn netchi(d: &Decomposition) -> Result<i64> {
    require_valid(d)?;
    Ok(d.netchi_unchecked())
}

/// Δ = 2·netext − (ext(∂M) + |∂M ∩ T|/2 − χ(T)), from the ambient record.
pub fn capital_delta(d: &Decomposition) -> Result<HalfInt> {
    require_valid(d)?;
    Ok(d.capital_delta_unchecked())
}

/// Σ δ over the bodies.
pub fn sum_delta(d: &Decomposition) -> Result<HalfInt> {
    require_valid(d)?;
    Ok(d.sum_delta_unchecked())
}

pub fn check_delta_identity(d: &Decomposition) -> Result<bool> {
    require_valid(d)?;
    Ok(d.capital_delta_unchecked() == d.sum_delta_unchecked())
}

/// Whether netext is an integer. Only defined for knots and links.
pub fn link_parity(d: &Decomposition) -> Result<bool> {
    require_valid(d)?;
    if d.ambient.graph_kind != GraphKind::KnotLink {
        return Err(Error::OutOfRange(format!(
            "parity is defined for knots and links, not a {}",
            d.ambient.graph_kind
        )));
    }
    Ok(d.netext_unchecked().is_integer())
}

pub fn validate_decomposition(d: &Decomposition) -> DecompositionReport {
    use DecompositionInvariant as I;
    let mut out: Vec<DecompositionViolation> = Vec::new();
    let mut push = |invariant: I, detail: String| out.push(DecompositionViolation { invariant, detail });
    let nb = d.bodies.len();
    let name = |i: usize| d.bodies.get(i).map_or("?", |b| b.name.as_str());

    // references first; later checks index freely
    for t in &d.thick {
        if t.bodies.iter().any(|&b| b >= nb) {
            push(I::Reference, format!("thick {} names a missing body", t.name));
        } else if !t.bodies.contains(&t.into) {
            push(I::Reference, format!("thick {} points into a body it does not bound", t.name));
        }
    }
    for t in &d.thin {
        for s in t.sides {
            if s.body >= nb || s.slot >= d.bodies[s.body].body.gag.len() {
                push(I::Reference, format!("thin {} names a missing slot", t.name));
            }
        }
        if !t.sides.iter().any(|s| s.body == t.into) {
            push(I::Reference, format!("thin {} points into a body it does not bound", t.name));
        }
    }
    for (i, b) in d.bodies.iter().enumerate() {
        if d.bodies[..i].iter().any(|o| o.name == b.name) {
            push(I::Reference, format!("duplicate body name {}", b.name));
        }
    }
    let mut names: Vec<&str> = d.thick.iter().map(|t| t.name.as_str()).collect();
    names.extend(d.thin.iter().map(|t| t.name.as_str()));
    names.sort_unstable();
    for w in names.windows(2) {
        if w[0] == w[1] {
            push(I::Reference, format!("duplicate surface name {}", w[0]));
        }
    }
    if !out.is_empty() {
        return DecompositionReport { violations: out, topological_order: None };
    }
    let mut push = |invariant: I, detail: String| out.push(DecompositionViolation { invariant, detail });

    for b in &d.bodies {
        for v in validate(&b.body).violations {
            push(I::Body, format!("{}: {v}", b.name));
        }
    }

    let mut thick_count = vec![0usize; nb];
    for t in &d.thick {
        if t.bodies[0] == t.bodies[1] {
            push(I::ThickArity, format!("thick {} has the same body on both sides", t.name));
        }
        for &b in &t.bodies {
            thick_count[b] += 1;
        }
        let (a, b) = (&d.bodies[t.bodies[0]].body.plus, &d.bodies[t.bodies[1]].body.plus);
        if !a.same_type(b) {
            push(I::SurfaceMatching, format!("thick {} joins {a} to {b}", t.name));
        }
        if a.genus == 0 && a.punctures == 0 {
            push(I::UnpuncturedSphere, format!("thick {} is an unpunctured sphere", t.name));
        }
    }
    for (i, &c) in thick_count.iter().enumerate() {
        if c != 1 {
            push(I::ThickArity, format!("body {} has its positive boundary glued {c} times", name(i)));
        }
    }

    let mut slot_uses: BTreeMap<SlotRef, usize> = BTreeMap::new();
    for t in &d.thin {
        if t.sides[0] == t.sides[1] {
            push(I::ThinArity, format!("thin {} glues a slot to itself", t.name));
        }
        for s in t.sides {
            *slot_uses.entry(s).or_insert(0) += 1;
            let surf = d.slot(s);
            if surf.role != Role::Thin {
                push(I::SlotRole, format!("thin {} uses {}[{}] tagged {:?}", t.name, name(s.body), s.slot, surf.role));
            }
        }
        let (a, b) = (d.slot(t.sides[0]), d.slot(t.sides[1]));
        if !a.same_type(b) {
            push(I::SurfaceMatching, format!("thin {} joins {a} to {b}", t.name));
        }
        if a.genus == 0 && a.punctures == 0 {
            push(I::UnpuncturedSphere, format!("thin {} is an unpunctured sphere", t.name));
        }
    }
    for (s, &c) in &slot_uses {
        if c > 1 {
            push(I::ThinArity, format!("slot {}[{}] is glued {c} times", name(s.body), s.slot));
        }
    }
    let unglued = d.unglued_slots();
    for &s in &unglued {
        let surf = d.slot(s);
        if !matches!(surf.role, Role::ManifoldBoundary | Role::VertexSphere) {
            push(I::SlotRole, format!("unglued slot {}[{}] is tagged {:?}", name(s.body), s.slot, surf.role));
        }
        if surf.genus == 0 && surf.punctures == 0 {
            push(I::UnpuncturedSphere, format!("slot {}[{}] is an unpunctured sphere", name(s.body), s.slot));
        }
    }

    // orientation: a body whose thick surface points in has all thin
    // surfaces pointing out, and conversely
    for (bi, b) in d.bodies.iter().enumerate() {
        let Some(thick) = d.thick.iter().find(|t| t.bodies.contains(&bi)) else { continue };
        let thick_in = thick.into == bi;
        for t in d.thin.iter().filter(|t| t.sides.iter().any(|s| s.body == bi)) {
            let self_glued = t.sides.iter().all(|s| s.body == bi);
            let thin_in = t.into == bi;
            if self_glued || thin_in == thick_in {
                push(
                    I::Orientation,
                    format!(
                        "body {}: thick {} points {}, thin {} points {}",
                        b.name,
                        thick.name,
                        if thick_in { "in" } else { "out" },
                        t.name,
                        if self_glued {
                            "both ways"
                        } else if thin_in {
                            "in"
                        } else {
                            "out"
                        }
                    ),
                );
            }
        }
    }

    let topo = topological_order(nb, &d.digraph_edges());
    if topo.is_none() {
        let stuck = cycle_members(nb, &d.digraph_edges());
        let names: Vec<&str> = stuck.iter().map(|&i| name(i)).collect();
        push(I::Cycle, format!("through bodies {}", names.join(", ")));
    }

    ambient_checks(d, &unglued, &mut push);

    DecompositionReport { violations: out, topological_order: topo }
}

fn ambient_checks(d: &Decomposition, unglued: &[SlotRef], push: &mut dyn FnMut(DecompositionInvariant, String)) {
    use DecompositionInvariant as I;
    let a = &d.ambient;
    let mut boundary: Vec<(u32, u32)> = unglued
        .iter()
        .map(|&s| d.slot(s))
        .filter(|s| s.role == Role::ManifoldBoundary)
        .map(|s| (s.genus, s.punctures))
        .collect();
    boundary.sort_unstable();
    if boundary != a.boundary.signature() {
        push(
            I::Ambient,
            format!("boundary slots {boundary:?} differ from the ambient boundary {:?}", a.boundary.signature()),
        );
    }
    if a.closed != a.boundary.is_empty() {
        push(I::Ambient, format!("closed flag {} disagrees with the boundary list", a.closed));
    }
    let vertex_degrees: Vec<u32> = {
        let mut v: Vec<u32> =
            unglued.iter().map(|&s| d.slot(s)).filter(|s| s.role == Role::VertexSphere).map(|s| s.punctures).collect();
        v.sort_unstable();
        v
    };
    // 2χ(T) = |∂M ∩ T| − Σ (deg v − 2)
    let twice_chi = a.boundary.punctures() as i64 - vertex_degrees.iter().map(|&p| p as i64 - 2).sum::<i64>();
    if twice_chi != 2 * a.graph_euler_char {
        push(
            I::Ambient,
            format!(
                "graph Euler characteristic {} disagrees with vertex degrees {:?} and {} boundary points",
                a.graph_euler_char,
                vertex_degrees,
                a.boundary.punctures()
            ),
        );
    }
    let expect: Option<&[u32]> = match a.graph_kind {
        GraphKind::KnotLink => Some(&[]),
        GraphKind::Genus2Theta | GraphKind::Genus2Handcuff => Some(&[3, 3]),
        GraphKind::Genus2Bouquet => Some(&[4]),
        GraphKind::Other => None,
    };
    if let Some(e) = expect {
        if vertex_degrees != e {
            push(I::Ambient, format!("a {} needs vertex degrees {e:?}, found {vertex_degrees:?}", a.graph_kind));
        }
        if a.boundary.punctures() != 0 {
            push(I::Ambient, format!("a {} meets the manifold boundary", a.graph_kind));
        }
    }
}

/// Kahn's algorithm; None if there is a cycle.
pub fn topological_order(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        indeg[b] += 1;
        out[a].push(b);
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Vertices left after repeatedly removing sources and sinks.
fn cycle_members(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let has_in = edges.iter().any(|&(a, b)| b == v && alive[a]);
            let has_out = edges.iter().any(|&(a, b)| a == v && alive[b]);
            if !has_in || !has_out {
                alive[v] = false;
                changed = true;
            }
        }
        if !changed {
            return (0..n).filter(|&v| alive[v]).collect();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;

    #[test]
    fn two_bridge_sphere_values() {
        let d = two_bridge_sphere(GraphKind::KnotLink);
        assert!(d.is_valid(), "{:?}", d.validate());
        assert_eq!(netext(&d).unwrap(), HalfInt::ONE);
        assert_eq!(netchi(&d).unwrap(), -2);
        assert_eq!(capital_delta(&d).unwrap(), HalfInt::from_int(2));
        assert!(check_delta_identity(&d).unwrap());
    }

    #[test]
    fn two_bridge_theta_delta_one() {
        let d = two_bridge_sphere(GraphKind::Genus2Theta);
        assert_eq!(capital_delta(&d).unwrap(), HalfInt::ONE);
        assert!(check_delta_identity(&d).unwrap());
    }

    #[test]
    fn unknot_bridge_sphere_values() {
        let d = unknot_bridge_sphere();
        assert_eq!(netext(&d).unwrap(), HalfInt::ZERO);
        assert_eq!(capital_delta(&d).unwrap(), HalfInt::ZERO);
        assert!(check_delta_identity(&d).unwrap());
        assert!(link_parity(&d).unwrap());
    }

    #[test]
    fn two_cycle_through_thick_surfaces() {
        let mut d = two_bridge_sphere(GraphKind::KnotLink);
        let second = ThickGlue { name: "H2".into(), bodies: [0, 1], into: 0 };
        d.thick[0].into = 1;
        d.thick.push(second);
        let r = d.validate();
        assert!(r.has(DecompositionInvariant::Cycle));
        assert!(r.has(DecompositionInvariant::ThickArity));
    }

    #[test]
    fn thin_mismatch() {
        let mut d = standard_propeller(PropellerVariant::TwicePuncturedTorus);
        let s = d.thin[0].sides[1];
        d.bodies[s.body].body.gag.vertices[s.slot].punctures = 1;
        assert!(d.validate().has(DecompositionInvariant::SurfaceMatching));
    }

    #[test]
    fn reversal_keeps_validity() {
        for d in [standard_propeller(PropellerVariant::TwicePuncturedTorus), slinky_fixture(4)] {
            let r = d.reversed();
            assert!(r.is_valid());
            assert_eq!(netext(&r).unwrap(), netext(&d).unwrap());
            assert_eq!(capital_delta(&r).unwrap(), capital_delta(&d).unwrap());
        }
    }

    #[test]
    fn thin_against_thick_cycle() {
        // thick points A→B and thin points B→A: orientation holds at both
        // bodies but the digraph has a 2-cycle
        let product = VpBody::from_arcs(1, &[(1, Role::Thin)], &[], &[2], 0);
        let mut b = Builder::new(Ambient::closed(0, GraphKind::KnotLink));
        let a = b.body("A", product.clone());
        let c = b.body("B", product);
        b.thick("H", a, c);
        b.thin("F", (c, 0), (a, 0));
        let d = b.build();
        let r = d.validate();
        assert!(!r.has(DecompositionInvariant::Orientation));
        assert!(r.has(DecompositionInvariant::Cycle));
        assert!(r.topological_order.is_none());
    }

    #[test]
    fn topological_order_of_chain() {
        assert_eq!(topological_order(3, &[(0, 1), (1, 2)]), Some(vec![0, 1, 2]));
        assert_eq!(topological_order(2, &[(0, 1), (1, 0)]), None);
        assert_eq!(cycle_members(3, &[(0, 1), (1, 0), (1, 2)]), vec![0, 1]);
    }
}
