//! Ready-made decompositions: bridge spheres, Heegaard surfaces, slinky and
//! propeller surfaces.

use serde::{Deserialize, Serialize};

use super::{Ambient, Decomposition, GraphKind, NamedBody, SlotRef, ThickGlue, ThinGlue};
use crate::compressionbody::VpBody;
use crate::error::{Error, Result};
use crate::surface::Role;

const V: (u32, Role) = (0, Role::VertexSphere);
const FS: (u32, Role) = (0, Role::Thin);
const FT: (u32, Role) = (1, Role::Thin);

/// Incremental construction by name.
pub struct Builder {
    d: Decomposition,
}

impl Builder {
    pub fn new(ambient: Ambient) -> Self {
        Builder { d: Decomposition { bodies: Vec::new(), thick: Vec::new(), thin: Vec::new(), ambient } }
    }

    pub fn body(&mut self, name: &str, body: VpBody) -> usize {
        self.d.bodies.push(NamedBody { name: name.to_string(), body });
        self.d.bodies.len() - 1
    }

    /// A thick surface pointing from `from` into `into`.
    pub fn thick(&mut self, name: &str, from: usize, into: usize) {
        self.d.thick.push(ThickGlue { name: name.to_string(), bodies: [from, into], into });
    }

    /// A thin surface pointing from the first slot's body into the second's.
    pub fn thin(&mut self, name: &str, from: (usize, usize), into: (usize, usize)) {
        self.d.thin.push(ThinGlue {
            name: name.to_string(),
            sides: [SlotRef { body: from.0, slot: from.1 }, SlotRef { body: into.0, slot: into.1 }],
            into: into.0,
        });
    }

    pub fn build(self) -> Decomposition {
        self.d
    }
}

fn graph_chi(kind: GraphKind) -> i64 {
    match kind {
        GraphKind::KnotLink | GraphKind::Other => 0,
        _ => -1,
    }
}

fn two_sided(kind: GraphKind, a: VpBody, b: VpBody) -> Decomposition {
    let mut bld = Builder::new(Ambient::closed(graph_chi(kind), kind));
    let x = bld.body("A", a);
    let y = bld.body("B", b);
    bld.thick("H", x, y);
    bld.build()
}

/// The 2-punctured bridge sphere of the unknot.
pub fn unknot_bridge_sphere() -> Decomposition {
    two_sided(GraphKind::KnotLink, VpBody::handlebody(0, 1, 0), VpBody::handlebody(0, 1, 0))
}

/// A 4-punctured bridge sphere. For graphs the second side holds the
/// vertices.
pub fn two_bridge_sphere(kind: GraphKind) -> Decomposition {
    let side = match kind {
        GraphKind::KnotLink | GraphKind::Other => VpBody::handlebody(0, 2, 0),
        GraphKind::Genus2Theta | GraphKind::Genus2Handcuff => VpBody::from_arcs(0, &[V, V], &[(0, 1)], &[2, 2], 0),
        GraphKind::Genus2Bouquet => VpBody::from_arcs(0, &[V], &[], &[4], 0),
    };
    two_sided(kind, VpBody::handlebody(0, 2, 0), side)
}

/// A twice-punctured Heegaard torus.
pub fn one_one_torus(kind: GraphKind) -> Decomposition {
    let side = match kind {
        GraphKind::KnotLink | GraphKind::Other => VpBody::handlebody(1, 1, 0),
        GraphKind::Genus2Theta => VpBody::from_arcs(1, &[V, V], &[(0, 1), (0, 1)], &[1, 1], 0),
        GraphKind::Genus2Handcuff => VpBody::from_arcs(1, &[V, V], &[(0, 0), (0, 1)], &[0, 2], 0),
        GraphKind::Genus2Bouquet => VpBody::from_arcs(1, &[V], &[(0, 0)], &[2], 0),
    };
    two_sided(kind, VpBody::handlebody(1, 1, 0), side)
}

/// An unpunctured genus-2 Heegaard surface.
pub fn genus_two_heegaard(kind: GraphKind) -> Decomposition {
    let side = match kind {
        GraphKind::KnotLink | GraphKind::Other => VpBody::handlebody(2, 0, 1),
        GraphKind::Genus2Theta => VpBody::from_arcs(2, &[V, V], &[(0, 1), (0, 1), (0, 1)], &[0, 0], 0),
        GraphKind::Genus2Handcuff => VpBody::from_arcs(2, &[V, V], &[(0, 0), (0, 1), (1, 1)], &[0, 0], 0),
        GraphKind::Genus2Bouquet => VpBody::from_arcs(2, &[V], &[(0, 0), (0, 0)], &[0], 0),
    };
    two_sided(kind, VpBody::handlebody(2, 0, 0), side)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PropellerVariant {
    /// One twice-punctured thin torus.
    TwicePuncturedTorus,
    /// Two once-punctured thin tori.
    TwoOncePuncturedTori,
}

/// Two unpunctured genus-2 thick surfaces around thin tori.
pub fn standard_propeller(variant: PropellerVariant) -> Decomposition {
    let inner = match variant {
        PropellerVariant::TwicePuncturedTorus => VpBody::from_arcs(2, &[FT], &[(0, 0)], &[0], 0),
        PropellerVariant::TwoOncePuncturedTori => VpBody::from_arcs(2, &[FT, FT], &[(0, 1)], &[0, 0], 0),
    };
    let mut b = Builder::new(Ambient::closed(0, GraphKind::KnotLink));
    let c = b.body("C", VpBody::handlebody(2, 0, 0));
    let c2 = b.body("C'", inner.clone());
    let e = b.body("E", inner.clone());
    let d = b.body("D", VpBody::handlebody(2, 0, 0));
    b.thick("H1", c2, c);
    b.thick("H2", d, e);
    for slot in 0..inner.gag.len() {
        b.thin(&format!("F{}", slot + 1), (e, slot), (c2, slot));
    }
    b.build()
}

/// Connected sum of two 2-bridge knots along a twice-punctured sphere.
pub fn two_bridge_connected_sum() -> Decomposition {
    let inner = VpBody::from_arcs(0, &[FS], &[], &[2], 1);
    let mut b = Builder::new(Ambient::closed(0, GraphKind::KnotLink));
    let l1 = b.body("L1", VpBody::handlebody(0, 2, 0));
    let x1 = b.body("X1", inner.clone());
    let x2 = b.body("X2", inner);
    let l2 = b.body("L2", VpBody::handlebody(0, 2, 0));
    b.thick("H1", l1, x1);
    b.thin("F", (x1, 0), (x2, 0));
    b.thick("H2", x2, l2);
    b.build()
}

/// Trivalent vertex sum of two 2-bridge theta curves along a
/// thrice-punctured sphere.
pub fn two_bridge_theta_vertex_sum() -> Decomposition {
    let mut b = Builder::new(Ambient::closed(-1, GraphKind::Genus2Theta));
    let l1 = b.body("L1", VpBody::handlebody(0, 2, 0));
    let x1 = b.body("X1", VpBody::from_arcs(0, &[V, FS], &[(0, 1)], &[2, 2], 0));
    let x2 = b.body("X2", VpBody::from_arcs(0, &[FS, V], &[(0, 1)], &[2, 2], 0));
    let l2 = b.body("L2", VpBody::handlebody(0, 2, 0));
    b.thick("H1", l1, x1);
    b.thin("F", (x1, 1), (x2, 0));
    b.thick("H2", x2, l2);
    b.build()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlinkyStart {
    /// (1,1) 2-bouquet: twice-punctured torus, bridge arc on the far side.
    Bouquet11,
    /// (2,0) 2-bouquet: unpunctured genus-2 surface.
    Bouquet20,
    HopfifiedTheta,
    HopfifiedHandcuff,
    HopfRinglet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlinkyEnd {
    Bouquet11,
    Bouquet20,
}

impl SlinkyStart {
    pub fn graph_kind(self) -> GraphKind {
        match self {
            SlinkyStart::Bouquet11 | SlinkyStart::Bouquet20 => GraphKind::KnotLink,
            SlinkyStart::HopfifiedTheta => GraphKind::Genus2Theta,
            SlinkyStart::HopfifiedHandcuff => GraphKind::Genus2Handcuff,
            SlinkyStart::HopfRinglet => GraphKind::Genus2Bouquet,
        }
    }
}

/// Number of pieces in a slinky surface of length ℓ with the given ends.
pub fn slinky_pieces(start: SlinkyStart, end: SlinkyEnd, length: u32) -> Result<usize> {
    let extra = 2 * (start == SlinkyStart::Bouquet20) as u32 + 2 * (end == SlinkyEnd::Bouquet20) as u32;
    if !length.is_multiple_of(2) || length < extra + 2 {
        return Err(Error::OutOfRange(format!("no slinky of length {length} with ends {start:?}/{end:?}")));
    }
    Ok(((length - extra) / 2 + 1) as usize)
}

/// A standard slinky surface: thick surfaces H1..Hp, thin 4-punctured
/// spheres F1..F(p−1) chained left to right. Its net Euler characteristic
/// is the length.
pub fn slinky(start: SlinkyStart, end: SlinkyEnd, length: u32) -> Result<Decomposition> {
    let p = slinky_pieces(start, end, length)?;
    let kind = start.graph_kind();
    let mut b = Builder::new(Ambient::closed(graph_chi(kind), kind));
    // a sphere slot with a ghost loop and two vertical arcs under a
    // twice-punctured torus
    let ringlet_half = |role| VpBody::from_arcs(1, &[(0, role)], &[(0, 0)], &[2], 0);
    let mut prev_right: Option<usize> = None;
    for i in 1..=p {
        let (left, right) = if i == 1 {
            match start {
                SlinkyStart::Bouquet11 => (VpBody::handlebody(1, 1, 0), ringlet_half(Role::Thin)),
                SlinkyStart::Bouquet20 => {
                    (VpBody::handlebody(2, 0, 0), VpBody::from_arcs(2, &[FS], &[(0, 0), (0, 0)], &[0], 0))
                }
                SlinkyStart::HopfifiedTheta => {
                    (VpBody::from_arcs(1, &[V, V], &[(0, 1), (0, 1)], &[1, 1], 0), ringlet_half(Role::Thin))
                }
                SlinkyStart::HopfifiedHandcuff => {
                    (VpBody::from_arcs(1, &[V, V], &[(0, 1), (1, 1)], &[2, 0], 0), ringlet_half(Role::Thin))
                }
                SlinkyStart::HopfRinglet => (ringlet_half(Role::VertexSphere), ringlet_half(Role::Thin)),
            }
        } else if i == p {
            match end {
                SlinkyEnd::Bouquet11 => (ringlet_half(Role::Thin), VpBody::handlebody(1, 1, 0)),
                SlinkyEnd::Bouquet20 => {
                    (VpBody::from_arcs(2, &[FS], &[(0, 0), (0, 0)], &[0], 0), VpBody::handlebody(2, 0, 0))
                }
            }
        } else {
            (ringlet_half(Role::Thin), ringlet_half(Role::Thin))
        };
        let l = b.body(&format!("L{i}"), left);
        let r = b.body(&format!("R{i}"), right);
        b.thick(&format!("H{i}"), l, r);
        if let Some(pr) = prev_right {
            // the thin sphere is the only slot on the right body of the
            // previous piece, and the last slot on this left body
            let slot = b.d.bodies[l].body.gag.len() - 1;
            b.thin(&format!("F{}", i - 1), (pr, 0), (l, slot));
        }
        prev_right = Some(r);
    }
    Ok(b.build())
}

/// The slinky fixtures: Hopfified theta start, (1,1) 2-bouquet end.
pub fn slinky_fixture(length: u32) -> Decomposition {
    slinky(SlinkyStart::HopfifiedTheta, SlinkyEnd::Bouquet11, length).expect("even length at least 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{capital_delta, check_delta_identity, netchi, netext, sum_delta};
    use crate::HalfInt;

    fn values(d: &Decomposition) -> (HalfInt, i64) {
        assert!(d.is_valid(), "{:#?}", d.validate().violations);
        assert!(check_delta_identity(d).unwrap());
        (netext(d).unwrap(), netchi(d).unwrap())
    }

    const KINDS: [GraphKind; 4] =
        [GraphKind::KnotLink, GraphKind::Genus2Theta, GraphKind::Genus2Handcuff, GraphKind::Genus2Bouquet];

    #[test]
    fn standard_values() {
        for k in KINDS {
            assert_eq!(values(&two_bridge_sphere(k)), (HalfInt::ONE, -2));
            assert_eq!(values(&one_one_torus(k)), (HalfInt::ONE, 0));
            assert_eq!(values(&genus_two_heegaard(k)), (HalfInt::ONE, 2));
        }
        for v in [PropellerVariant::TwicePuncturedTorus, PropellerVariant::TwoOncePuncturedTori] {
            let d = standard_propeller(v);
            assert_eq!(values(&d), (HalfInt::ONE, 4));
            assert_eq!(capital_delta(&d).unwrap(), HalfInt::from_int(2));
        }
    }

    #[test]
    fn sums() {
        let d = two_bridge_connected_sum();
        assert_eq!(values(&d), (HalfInt::from_int(2), -2));
        assert_eq!(capital_delta(&d).unwrap(), HalfInt::from_int(4));
        let d = two_bridge_theta_vertex_sum();
        assert_eq!(values(&d), (HalfInt::from_doubled(3), -2));
        assert_eq!(sum_delta(&d).unwrap(), HalfInt::from_int(2));
    }

    #[test]
    fn slinky_lengths() {
        let starts = [
            SlinkyStart::Bouquet11,
            SlinkyStart::Bouquet20,
            SlinkyStart::HopfifiedTheta,
            SlinkyStart::HopfifiedHandcuff,
            SlinkyStart::HopfRinglet,
        ];
        for s in starts {
            for e in [SlinkyEnd::Bouquet11, SlinkyEnd::Bouquet20] {
                for len in (2..=12).step_by(2) {
                    let Ok(d) = slinky(s, e, len) else { continue };
                    let (ne, chi) = values(&d);
                    assert_eq!(ne, HalfInt::ONE);
                    assert_eq!(chi, len as i64);
                    let knot = s.graph_kind() == GraphKind::KnotLink;
                    let want = if knot { 2 } else { 1 };
                    assert_eq!(capital_delta(&d).unwrap(), HalfInt::from_int(want));
                }
            }
        }
        assert!(slinky(SlinkyStart::Bouquet20, SlinkyEnd::Bouquet20, 4).is_err());
        assert_eq!(slinky_pieces(SlinkyStart::Bouquet20, SlinkyEnd::Bouquet20, 6).unwrap(), 2);
        assert!(slinky(SlinkyStart::Bouquet11, SlinkyEnd::Bouquet11, 3).is_err());
    }
}
