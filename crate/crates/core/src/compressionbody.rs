//! Combinatorial vp-compressionbodies.
//!
//! A body records its positive boundary, the ghost arc graph on the
//! components of its negative boundary, and counts of vertical arcs, bridge
//! arcs and core loops. Embedding data is not modelled.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::{Role, SurfaceComponent};
use crate::HalfInt;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GhostArcGraph {
    pub vertices: Vec<SurfaceComponent>,
    /// Unordered pairs; loops and parallel edges allowed.
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
}

impl GhostArcGraph {
    pub fn new(vertices: Vec<SurfaceComponent>, edges: Vec<(usize, usize)>) -> Self {
        GhostArcGraph { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> u32 {
        self.edges.iter().map(|&(a, b)| (a == v) as u32 + (b == v) as u32).sum()
    }

    pub fn loops_at(&self, v: usize) -> u32 {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count() as u32
    }

    /// Component index for each vertex, numbered in order of first vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(a, b) in &self.edges {
            if a < n && b < n {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = Vec::with_capacity(n);
        for v in 0..n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out.push(label[r]);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn cycle_rank(&self) -> usize {
        (self.edges.len() + self.component_count()).saturating_sub(self.vertices.len())
    }

    /// Per component: (genus sum, cycle rank).
    pub fn component_genera(&self) -> Vec<(u32, u32)> {
        let labels = self.component_labels();
        let c = self.component_count();
        let mut genus = vec![0u32; c];
        let mut verts = vec![0i64; c];
        let mut edges = vec![0i64; c];
        for (v, s) in self.vertices.iter().enumerate() {
            genus[labels[v]] += s.genus;
            verts[labels[v]] += 1;
        }
        for &(a, _) in &self.edges {
            edges[labels[a]] += 1;
        }
        (0..c).map(|i| (genus[i], (edges[i] - verts[i] + 1) as u32)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VpBody {
    pub plus: SurfaceComponent,
    pub gag: GhostArcGraph,
    /// Vertical arcs ending on each ∂₋ component, indexed like `gag.vertices`.
    #[serde(default)]
    pub vertical_arcs: Vec<u32>,
    #[serde(default)]
    pub bridge_arcs: u32,
    #[serde(default)]
    pub core_loops: u32,
}

/// Names of the admissibility invariants, used in rejection records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Invariant {
    Shape,
    PlusRole,
    PlusPunctureAccounting,
    NegativePunctureAccounting,
    NegativeRole,
    SmallSphere,
    GenusBound,
    SphereBelowSphere,
    TorusBelowTorus,
    CoreLoopPlacement,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Invariant::Shape => "shape",
            Invariant::PlusRole => "plus-role",
            Invariant::PlusPunctureAccounting => "plus-puncture-accounting",
            Invariant::NegativePunctureAccounting => "negative-puncture-accounting",
            Invariant::NegativeRole => "negative-role",
            Invariant::SmallSphere => "small-sphere",
            Invariant::GenusBound => "genus-bound",
            Invariant::SphereBelowSphere => "sphere-below-sphere",
            Invariant::TorusBelowTorus => "torus-below-torus",
            Invariant::CoreLoopPlacement => "core-loop-placement",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BodyViolation {
    pub invariant: Invariant,
    pub detail: String,
}

impl BodyViolation {
    fn new(invariant: Invariant, detail: impl Into<String>) -> Self {
        BodyViolation { invariant, detail: detail.into() }
    }
}

impl fmt::Display for BodyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.invariant, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<BodyViolation>,
}

impl ValidationReport {
    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, inv: Invariant) -> bool {
        self.violations.iter().any(|v| v.invariant == inv)
    }

    pub fn invariants(&self) -> Vec<Invariant> {
        let mut v: Vec<_> = self.violations.iter().map(|v| v.invariant).collect();
        v.dedup();
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VpClass {
    VP1,
    VP2,
    VP3,
    VP4,
    NotDeltaZero,
}

impl fmt::Display for VpClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VpClass::VP1 => "VP1",
            VpClass::VP2 => "VP2",
            VpClass::VP3 => "VP3",
            VpClass::VP4 => "VP4",
            VpClass::NotDeltaZero => "not-delta-zero",
        };
        f.write_str(s)
    }
}

impl VpBody {
    /// A body with no negative boundary.
    pub fn handlebody(genus: u32, bridge_arcs: u32, core_loops: u32) -> Self {
        VpBody {
            plus: SurfaceComponent::thick(genus, 2 * bridge_arcs),
            gag: GhostArcGraph::default(),
            vertical_arcs: Vec::new(),
            bridge_arcs,
            core_loops,
        }
    }

    /// Builds a body, deriving ∂₊ punctures and each ∂₋ puncture count from
    /// the arcs. `neg` gives (genus, role) per ∂₋ component.
    pub fn from_arcs(
        plus_genus: u32,
        neg: &[(u32, Role)],
        edges: &[(usize, usize)],
        vertical_arcs: &[u32],
        bridge_arcs: u32,
    ) -> Self {
        let mut gag =
            GhostArcGraph::new(neg.iter().map(|&(g, r)| SurfaceComponent::new(g, 0, r)).collect(), edges.to_vec());
        for v in 0..gag.len() {
            let p = gag.degree(v) + vertical_arcs.get(v).copied().unwrap_or(0);
            gag.vertices[v].punctures = p;
        }
        let verticals: u32 = vertical_arcs.iter().sum();
        VpBody {
            plus: SurfaceComponent::thick(plus_genus, 2 * bridge_arcs + verticals),
            gag,
            vertical_arcs: vertical_arcs.to_vec(),
            bridge_arcs,
            core_loops: 0,
        }
    }

    pub fn minus(&self) -> &[SurfaceComponent] {
        &self.gag.vertices
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    pub fn is_admissible(&self) -> bool {
        validate(self).is_admissible()
    }

    pub fn delta(&self) -> Result<HalfInt> {
        delta(self)
    }

    /// δ computed without the admissibility check.
    pub fn delta_unchecked(&self) -> HalfInt {
        self.plus.extent() - self.gag.vertices.iter().map(|s| s.extent()).sum::<HalfInt>()
    }

    pub fn vertical_total(&self) -> u32 {
        self.vertical_arcs.iter().sum()
    }

    /// Σ genus + cycle rank over all components of Γ.
    pub fn spine_genus(&self) -> u32 {
        self.gag.component_genera().iter().map(|(g, r)| g + r).sum()
    }
}

pub fn validate(b: &VpBody) -> ValidationReport {
    use Invariant::*;
    let mut out = Vec::new();
    let n = b.gag.len();

    if b.vertical_arcs.len() != n {
        out.push(BodyViolation::new(
            Shape,
            format!("{} vertical-arc entries for {} negative components", b.vertical_arcs.len(), n),
        ));
    }
    if let Some(&(a, c)) = b.gag.edges.iter().find(|&&(a, c)| a >= n || c >= n) {
        out.push(BodyViolation::new(Shape, format!("ghost arc ({a},{c}) names a missing component")));
    }
    if !out.is_empty() {
        return ValidationReport { violations: out };
    }

    if b.plus.role != Role::Thick {
        out.push(BodyViolation::new(PlusRole, format!("positive boundary {} is not thick", b.plus)));
    }
    if b.plus.genus == 0 && b.plus.punctures == 0 {
        out.push(BodyViolation::new(PlusRole, "positive boundary is an unpunctured sphere"));
    }

    let arcs = 2 * b.bridge_arcs + b.vertical_total();
    if b.plus.punctures != arcs {
        out.push(BodyViolation::new(
            PlusPunctureAccounting,
            format!(
                "positive boundary has {} punctures but 2·{} bridge + {} vertical = {}",
                b.plus.punctures,
                b.bridge_arcs,
                b.vertical_total(),
                arcs
            ),
        ));
    }

    for (v, s) in b.gag.vertices.iter().enumerate() {
        let deg = b.gag.degree(v);
        if s.punctures != deg + b.vertical_arcs[v] {
            out.push(BodyViolation::new(
                NegativePunctureAccounting,
                format!(
                    "component {v} {s} has {} punctures but degree {deg} + {} vertical",
                    s.punctures, b.vertical_arcs[v]
                ),
            ));
        }
        if s.role == Role::Thick {
            out.push(BodyViolation::new(NegativeRole, format!("component {v} is tagged thick")));
        }
        if s.role == Role::VertexSphere && s.genus != 0 {
            out.push(BodyViolation::new(NegativeRole, format!("vertex sphere {v} has genus {}", s.genus)));
        }
        if s.genus == 0 && s.punctures < SurfaceComponent::min_sphere_punctures(s.role) {
            out.push(BodyViolation::new(
                SmallSphere,
                format!("component {v} {s} is a sphere with only {} puncture(s)", s.punctures),
            ));
        }
    }

    let comps = b.gag.component_genera();
    let spine: u32 = comps.iter().map(|(g, r)| g + r).sum();
    if spine + b.core_loops > b.plus.genus {
        out.push(BodyViolation::new(
            GenusBound,
            format!(
                "negative genus plus ghost cycles ({spine}) and core loops ({}) exceed positive genus {}",
                b.core_loops, b.plus.genus
            ),
        ));
    }

    let rank = b.gag.cycle_rank();
    match b.plus.genus {
        0 => {
            if b.gag.vertices.iter().any(|s| s.genus > 0) {
                out.push(BodyViolation::new(SphereBelowSphere, "positive sphere over a non-sphere"));
            }
            if rank > 0 {
                out.push(BodyViolation::new(SphereBelowSphere, "positive sphere over a ghost cycle"));
            }
        }
        1 => {
            let tori = b.gag.vertices.iter().filter(|s| s.genus == 1).count();
            if tori > 1 || b.gag.vertices.iter().any(|s| s.genus > 1) {
                out.push(BodyViolation::new(TorusBelowTorus, "positive torus over more than one torus"));
            }
            if tori == 1 && rank > 0 {
                out.push(BodyViolation::new(TorusBelowTorus, "positive torus over a torus and a ghost cycle"));
            }
            if rank > 1 {
                out.push(BodyViolation::new(TorusBelowTorus, "positive torus over two ghost cycles"));
            }
        }
        _ => {}
    }

    if b.core_loops > 0 && (n > 0 || b.bridge_arcs > 0) {
        out.push(BodyViolation::new(CoreLoopPlacement, "core loops occur only in a handlebody with no other arcs"));
    }

    ValidationReport { violations: out }
}

fn require_admissible(b: &VpBody) -> Result<()> {
    let r = validate(b);
    if r.is_admissible() {
        Ok(())
    } else {
        Err(Error::InadmissibleBody(r.violations))
    }
}

/// δ = ext(∂₊) − ext(∂₋).
pub fn delta(b: &VpBody) -> Result<HalfInt> {
    require_admissible(b)?;
    Ok(b.delta_unchecked())
}

pub fn classify_delta_zero(b: &VpBody) -> Result<VpClass> {
    require_admissible(b)?;
    Ok(classify_unchecked(b))
}

pub(crate) fn classify_unchecked(b: &VpBody) -> VpClass {
    let no_neg = b.gag.is_empty();
    if no_neg && b.plus.genus == 0 && b.plus.punctures == 2 && b.bridge_arcs == 1 && b.core_loops == 0 {
        return VpClass::VP1;
    }
    if no_neg && b.plus.genus == 1 && b.plus.punctures == 0 && b.bridge_arcs == 0 {
        match b.core_loops {
            0 => return VpClass::VP2,
            1 => return VpClass::VP3,
            _ => {}
        }
    }
    if b.bridge_arcs == 0
        && b.core_loops == 0
        && !no_neg
        && b.gag.is_connected()
        && b.spine_genus() == b.plus.genus
        && b.delta_unchecked() == HalfInt::ZERO
    {
        return VpClass::VP4;
    }
    VpClass::NotDeltaZero
}

impl fmt::Display for VpBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.plus)?;
        if !self.gag.is_empty() {
            write!(f, " over [")?;
            for (i, s) in self.gag.vertices.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{s}")?;
                if self.vertical_arcs.get(i).copied().unwrap_or(0) > 0 {
                    write!(f, "+{}v", self.vertical_arcs[i])?;
                }
            }
            write!(f, "]")?;
            if !self.gag.edges.is_empty() {
                let e: Vec<String> = self.gag.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                write!(f, " ghost {}", e.join(","))?;
            }
        }
        if self.bridge_arcs > 0 {
            write!(f, " bridge {}", self.bridge_arcs)?;
        }
        if self.core_loops > 0 {
            write!(f, " core {}", self.core_loops)?;
        }
        Ok(())
    }
}
