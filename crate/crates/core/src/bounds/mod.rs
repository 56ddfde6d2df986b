//! Factor types of low net extent and the lower bounds, ledger and
//! distribution checks computed from a prime factorization.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::HalfInt;

pub mod search;

pub use search::{distribution_search, thetafact_search, DistributionSearch, ThetafactSearch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FactorType {
    TrivialTheta,
    TrivialTwoBouquet,
    HopfGraph,
    /// The core of a lens space: a (1,0)-curve.
    #[serde(rename = "LensCore_1_0")]
    LensCore,
    #[serde(rename = "Curve_0_2")]
    Curve02 {
        #[serde(default)]
        is_knot: bool,
    },
    #[serde(rename = "Curve_1_1")]
    Curve11 {
        #[serde(default)]
        is_knot: bool,
    },
    #[serde(rename = "Curve_2_0")]
    Curve20 {
        #[serde(default)]
        is_knot: bool,
    },
    HopfSlinky {
        length: u32,
        #[serde(default)]
        is_knot: bool,
        /// Pieces in a minimal slinky factorization, when known.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pieces: Option<u32>,
    },
    PropellerKnot,
    GenericKnot {
        netext: HalfInt,
    },
    GenericGraph {
        netext: HalfInt,
    },
}

impl FactorType {
    pub fn is_knot(&self) -> bool {
        use FactorType::*;
        match *self {
            TrivialTheta | TrivialTwoBouquet | HopfGraph | GenericGraph { .. } => false,
            LensCore | PropellerKnot | GenericKnot { .. } => true,
            Curve02 { is_knot } | Curve11 { is_knot } | Curve20 { is_knot } | HopfSlinky { is_knot, .. } => is_knot,
        }
    }

    pub fn is_graph(&self) -> bool {
        !self.is_knot()
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, FactorType::TrivialTheta | FactorType::TrivialTwoBouquet)
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, FactorType::GenericKnot { .. } | FactorType::GenericGraph { .. })
    }

    /// Net extent of a factor: the catalog value, or the supplied one.
    pub fn netext(&self) -> HalfInt {
        use FactorType::*;
        match *self {
            LensCore => HalfInt::ZERO,
            TrivialTheta | HopfGraph => HalfInt::HALF,
            TrivialTwoBouquet
            | Curve02 { .. }
            | Curve11 { .. }
            | Curve20 { .. }
            | HopfSlinky { .. }
            | PropellerKnot => HalfInt::ONE,
            GenericKnot { netext } | GenericGraph { netext } => netext,
        }
    }

    /// Short name used in reports, e.g. `(1,1)-graph` or `slinky-4-knot`.
    pub fn short_name(&self) -> String {
        use FactorType::*;
        let kind = |k: bool| if k { "knot" } else { "graph" };
        match *self {
            TrivialTheta => "trivial-theta".into(),
            TrivialTwoBouquet => "trivial-2-bouquet".into(),
            HopfGraph => "hopf-graph".into(),
            LensCore => "(1,0)-knot".into(),
            Curve02 { is_knot } => format!("(0,2)-{}", kind(is_knot)),
            Curve11 { is_knot } => format!("(1,1)-{}", kind(is_knot)),
            Curve20 { is_knot } => format!("(2,0)-{}", kind(is_knot)),
            HopfSlinky { length, is_knot, .. } => format!("slinky-{length}-{}", kind(is_knot)),
            PropellerKnot => "propeller-knot".into(),
            GenericKnot { netext } => format!("knot[{netext}]"),
            GenericGraph { netext } => format!("graph[{netext}]"),
        }
    }

    /// Checks the per-factor invariants.
    pub fn check(&self) -> Result<()> {
        match *self {
            FactorType::HopfSlinky { length, pieces, .. } => {
                if length < 2 || length % 2 != 0 {
                    return Err(Error::Factorization(format!(
                        "slinky length {length} is not an even number at least 2"
                    )));
                }
                if let Some(p) = pieces {
                    let (lo, hi) = (2 * p as i64 - 2, 2 * p as i64 + 2);
                    if lo < 2 || (length as i64) < lo || length as i64 > hi {
                        return Err(Error::Factorization(format!("slinky of length {length} cannot have {p} pieces")));
                    }
                }
            }
            FactorType::GenericKnot { netext } => {
                if !netext.is_integer() || netext < HalfInt::ONE {
                    return Err(Error::Factorization(format!(
                        "a generic knot needs an integer net extent at least 1, got {netext}"
                    )));
                }
            }
            FactorType::GenericGraph { netext } if netext < HalfInt::ONE => {
                return Err(Error::Factorization(format!("a generic graph needs net extent at least 1, got {netext}")));
            }
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for FactorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.short_name())
    }
}

/// The catalog types with a given net extent, as listed by the
/// classification of low net extent factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NetextClass {
    pub kinds: Vec<String>,
    pub note: Option<String>,
}

pub fn classify_by_netext(value: HalfInt, is_knot: bool) -> Result<NetextClass> {
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let d = value.doubled();
    match (d, is_knot) {
        (0, true) => Ok(NetextClass { kinds: names(&["TrivialKnot", "LensCore_1_0"]), note: None }),
        (0, false) => Ok(NetextClass { kinds: Vec::new(), note: Some("no genus-2 graph has net extent 0".into()) }),
        (1, false) => Ok(NetextClass { kinds: names(&["TrivialTheta", "HopfGraph"]), note: None }),
        (1, true) => Err(Error::OutOfRange("a knot has integral net extent".into())),
        (2, false) => Ok(NetextClass {
            kinds: names(&["Curve_0_2", "Curve_1_1", "Curve_2_0", "HopfSlinky", "TrivialTwoBouquet"]),
            note: None,
        }),
        (2, true) => Ok(NetextClass {
            kinds: names(&["Curve_0_2", "Curve_1_1", "Curve_2_0", "PropellerKnot", "HopfSlinky"]),
            note: Some("LensCore_1_0 has net extent 0 and is not in this list".into()),
        }),
        _ => Err(Error::OutOfRange(format!("net extent {value} is above classification range"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub factors: Vec<FactorType>,
}

/// Counts derived from a factorization. Never stored, always recomputed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub n: usize,
    /// Genus-2 graph factors other than the trivial theta curve and Hopf graphs.
    pub m_tunnel: usize,
    /// Genus-2 graph factors other than the trivial theta curve.
    pub m_bridge: usize,
    /// Knot factors other than (1,0)-curves.
    pub k: usize,
    pub k_all: usize,
    pub graphs: usize,
    pub p3: i64,
}

impl Factorization {
    /// Checks every factor and the structural rules: at least one genus-2
    /// graph factor, at most one trivial factor, and a trivial factor only
    /// as the sole graph factor.
    pub fn new(factors: Vec<FactorType>) -> Result<Self> {
        for f in &factors {
            f.check()?;
        }
        let f = Factorization { factors };
        let c = f.counts();
        if c.graphs == 0 {
            return Err(Error::Factorization("no genus-2 graph factor".into()));
        }
        let trivial = f.factors.iter().filter(|x| x.is_trivial()).count();
        if trivial > 1 {
            return Err(Error::Factorization(format!("{trivial} trivial factors; at most one is allowed")));
        }
        if trivial == 1 && c.graphs > 1 {
            return Err(Error::Factorization("a trivial factor must be the only genus-2 graph factor".into()));
        }
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn counts(&self) -> Counts {
        let graphs = self.factors.iter().filter(|f| f.is_graph()).count();
        let m_bridge = self.factors.iter().filter(|f| f.is_graph() && **f != FactorType::TrivialTheta).count();
        let m_tunnel = self
            .factors
            .iter()
            .filter(|f| f.is_graph() && !matches!(f, FactorType::TrivialTheta | FactorType::HopfGraph))
            .count();
        let k_all = self.factors.iter().filter(|f| f.is_knot()).count();
        let k = self.factors.iter().filter(|f| f.is_knot() && **f != FactorType::LensCore).count();
        Counts { n: self.factors.len(), m_tunnel, m_bridge, k, k_all, graphs, p3: graphs as i64 - 1 }
    }

    /// Number of factors of each short name.
    pub fn histogram(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for f in &self.factors {
            *m.entry(f.short_name()).or_insert(0) += 1;
        }
        m
    }

    fn require_composite(&self) -> Result<()> {
        if self.factors.len() < 2 {
            return Err(Error::Factorization(format!(
                "{} factor(s); the composite bounds need at least 2",
                self.factors.len()
            )));
        }
        Ok(())
    }

    fn require_catalog(&self) -> Result<()> {
        if let Some(g) = self.factors.iter().find(|f| f.is_generic()) {
            return Err(Error::Factorization(format!("the ledger takes catalog factors only, found {g}")));
        }
        Ok(())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.histogram().into_iter().map(|(k, c)| if c == 1 { k } else { format!("{c}×{k}") }).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A bound with the arithmetic that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: HalfInt,
    pub trace: Vec<String>,
}

/// ½ + Σ over graph factors (netext − ½) + Σ over knot factors netext.
pub fn netext_lower(f: &Factorization) -> Result<Bound> {
    f.require_composite()?;
    let graph: HalfInt = f.factors.iter().filter(|x| x.is_graph()).map(|x| x.netext() - HalfInt::HALF).sum();
    let knot: HalfInt = f.factors.iter().filter(|x| x.is_knot()).map(|x| x.netext()).sum();
    let value = HalfInt::HALF + graph + knot;
    Ok(Bound {
        value,
        trace: vec![format!("net extent: 1/2 + {graph} over graph factors + {knot} over knot factors = {value}")],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TunnelBound {
    pub value: HalfInt,
    /// The least integer at or above `value`.
    pub ceil: i64,
    pub trace: Vec<String>,
}

/// (m − 1)/2 + k, with m excluding trivial theta curves and Hopf graphs and
/// k excluding (1,0)-curves.
pub fn tunnel_lower(f: &Factorization) -> Result<TunnelBound> {
    f.require_composite()?;
    let c = f.counts();
    let value = HalfInt::half_of(c.m_tunnel as i64 - 1) + HalfInt::from_int(c.k as i64);
    Ok(TunnelBound {
        value,
        ceil: value.ceil(),
        trace: vec![format!("tunnel: (m − 1)/2 + k with m = {}, k = {} gives {value}", c.m_tunnel, c.k)],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeBound {
    pub value: HalfInt,
    /// Equality is possible only when every factor is a (0,2)-curve or trivial.
    pub equality_possible: bool,
    pub trace: Vec<String>,
}

/// (m + 3)/2 + k for a graph in the 3-sphere, with m excluding only the
/// trivial theta curve and k counting every knot factor.
pub fn bridge_lower(f: &Factorization) -> Result<BridgeBound> {
    f.require_composite()?;
    if f.factors.contains(&FactorType::LensCore) {
        return Err(Error::Factorization("a (1,0)-curve factor means the ambient manifold is not the 3-sphere".into()));
    }
    let c = f.counts();
    let value = HalfInt::half_of(c.m_bridge as i64 + 3) + HalfInt::from_int(c.k_all as i64);
    let equality_possible = f
        .factors
        .iter()
        .all(|x| matches!(x, FactorType::Curve02 { .. } | FactorType::TrivialTheta | FactorType::TrivialTwoBouquet));
    Ok(BridgeBound {
        value,
        equality_possible,
        trace: vec![format!("bridge: (m + 3)/2 + k with m = {}, k = {} gives {value}", c.m_bridge, c.k_all)],
    })
}

/// Tunnel and bridge bounds for a sum of m Brunnian theta curves.
pub fn brunnian_lower(m: u32) -> Result<(i64, HalfInt)> {
    if m == 0 {
        return Err(Error::OutOfRange("the Brunnian bound needs at least one factor".into()));
    }
    Ok((m as i64, HalfInt::from_int(m as i64) + HalfInt::from_doubled(3)))
}

/// Sum of the tunnel numbers of m-small factors.
pub fn m_small_lower(tunnels: &[i64]) -> Result<i64> {
    if let Some(t) = tunnels.iter().find(|&&t| t < 0) {
        return Err(Error::OutOfRange(format!("tunnel number {t} is negative")));
    }
    Ok(tunnels.iter().sum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerReport {
    pub lhs: i64,
    pub rhs: i64,
    pub feasible: bool,
    pub terms: Vec<(String, i64)>,
}

impl LedgerReport {
    pub fn slack(&self) -> i64 {
        self.rhs - self.lhs
    }
}

/// The inequality that must hold when the tunnel bound is attained:
/// N_g(1,1) + 2N(1,0) + 2N(Hopf) + 3N_g(2,0) + 2N_k(2,0) + 4N(π)
/// + Σ (ℓ(σ) − χ(σ)) ≤ 3 + N(tr2bq) + N_g(0,2) + 2N_k(0,2).
pub fn equality_ledger(f: &Factorization) -> Result<LedgerReport> {
    f.require_composite()?;
    f.require_catalog()?;
    let (lhs, rhs, terms) = ledger_terms(&f.factors);
    Ok(LedgerReport { lhs, rhs, feasible: lhs <= rhs, terms })
}

/// Per-factor ledger contributions, left side and right side.
pub(crate) fn ledger_weight(x: &FactorType) -> (i64, i64) {
    use FactorType::*;
    match *x {
        Curve11 { is_knot: false } => (1, 0),
        LensCore => (2, 0),
        HopfGraph => (2, 0),
        Curve20 { is_knot: false } => (3, 0),
        Curve20 { is_knot: true } => (2, 0),
        PropellerKnot => (4, 0),
        HopfSlinky { length, is_knot, .. } => (length as i64 + if is_knot { 0 } else { 1 }, 0),
        TrivialTwoBouquet => (0, 1),
        Curve02 { is_knot: false } => (0, 1),
        Curve02 { is_knot: true } => (0, 2),
        TrivialTheta | Curve11 { is_knot: true } | GenericKnot { .. } | GenericGraph { .. } => (0, 0),
    }
}

fn ledger_terms(factors: &[FactorType]) -> (i64, i64, Vec<(String, i64)>) {
    let mut lhs = 0;
    let mut rhs = 3;
    let mut terms: BTreeMap<String, i64> = BTreeMap::new();
    for x in factors {
        let (l, r) = ledger_weight(x);
        lhs += l;
        rhs += r;
        if l != 0 {
            *terms.entry(format!("lhs {}", x.short_name())).or_insert(0) += l;
        }
        if r != 0 {
            *terms.entry(format!("rhs {}", x.short_name())).or_insert(0) += r;
        }
    }
    (lhs, rhs, terms.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributionLine {
    pub counted: usize,
    /// Threshold numerator and denominator: counted ≥ num/den.
    pub threshold: (i64, i64),
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DistributionReport {
    NotApplicable { reason: String },
    Checked { lines: [DistributionLine; 3] },
}

impl DistributionReport {
    pub fn all_hold(&self) -> Option<bool> {
        match self {
            DistributionReport::NotApplicable { .. } => None,
            DistributionReport::Checked { lines } => Some(lines.iter().all(|l| l.holds)),
        }
    }
}

fn in_first_set(x: &FactorType) -> bool {
    use FactorType::*;
    matches!(
        x,
        TrivialTheta | TrivialTwoBouquet | HopfGraph | LensCore | Curve02 { .. } | Curve11 { .. } | Curve20 { .. }
    ) || matches!(x, HopfSlinky { length: 2, .. })
}

fn in_second_set(x: &FactorType) -> bool {
    use FactorType::*;
    matches!(x, TrivialTheta | TrivialTwoBouquet | Curve02 { .. } | LensCore | HopfGraph | Curve11 { .. })
}

fn in_third_set(x: &FactorType) -> bool {
    use FactorType::*;
    matches!(x, TrivialTheta | TrivialTwoBouquet | Curve02 { .. } | Curve11 { is_knot: true })
}

/// The three lower bounds on how many factors are of low complexity, which
/// follow from a feasible ledger. Not applicable when the ledger fails.
pub fn distribution_check(f: &Factorization) -> Result<DistributionReport> {
    let ledger = equality_ledger(f)?;
    if !ledger.feasible {
        return Ok(DistributionReport::NotApplicable {
            reason: format!("ledger infeasible: {} > {}", ledger.lhs, ledger.rhs),
        });
    }
    let n = f.len() as i64;
    let line = |pred: fn(&FactorType) -> bool, num: i64, den: i64| {
        let counted = f.factors.iter().filter(|x| pred(x)).count();
        DistributionLine { counted, threshold: (num, den), holds: den * counted as i64 >= num }
    };
    Ok(DistributionReport::Checked {
        lines: [line(in_first_set, 4 * n - 3, 6), line(in_second_set, 2 * n - 3, 4), line(in_third_set, n - 3, 3)],
    })
}

/// Context the factor list cannot carry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorFlags {
    #[serde(default)]
    pub ambient_s3: bool,
    #[serde(default)]
    pub brunnian: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_small_tunnels: Option<Vec<i64>>,
    /// The shape of the whole graph, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphShape>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphShape {
    Theta,
    Handcuff,
    Bouquet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub counts: Counts,
    pub netext: Option<Bound>,
    pub tunnel: Option<TunnelBound>,
    pub bridge: Option<BridgeBound>,
    pub brunnian: Option<(i64, HalfInt)>,
    pub m_small: Option<i64>,
    pub ledger: Option<LedgerReport>,
    pub distribution: Option<DistributionReport>,
    pub notes: Vec<String>,
}

/// Every bound that applies to the factorization under the given flags.
pub fn analyze(f: &Factorization, flags: &FactorFlags) -> Result<BoundsReport> {
    if flags.ambient_s3 {
        if f.factors.contains(&FactorType::LensCore) {
            return Err(Error::Factorization("a (1,0)-curve factor cannot occur in the 3-sphere".into()));
        }
        if f.factors.contains(&FactorType::HopfGraph) && flags.graph != Some(GraphShape::Handcuff) {
            return Err(Error::Factorization(
                "a theta curve in the 3-sphere has no Hopf graph factor; set graph to handcuff if that is the shape"
                    .into(),
            ));
        }
    }
    if flags.brunnian {
        if !flags.ambient_s3 {
            return Err(Error::Factorization("the Brunnian bound is for the 3-sphere".into()));
        }
        if !f.factors.iter().all(|x| matches!(x, FactorType::GenericGraph { .. })) {
            return Err(Error::Factorization("Brunnian factors must be generic graph factors".into()));
        }
    }
    if f.len() < 2 && !flags.brunnian {
        return Err(Error::Factorization("a single factor is prime; the composite bounds need at least 2".into()));
    }

    let mut r = BoundsReport {
        counts: f.counts(),
        netext: None,
        tunnel: None,
        bridge: None,
        brunnian: None,
        m_small: None,
        ledger: None,
        distribution: None,
        notes: Vec::new(),
    };
    if f.len() >= 2 {
        r.netext = Some(netext_lower(f)?);
        r.tunnel = Some(tunnel_lower(f)?);
        if flags.ambient_s3 {
            r.bridge = Some(bridge_lower(f)?);
        } else {
            r.notes.push("bridge bound skipped: ambient manifold not marked as the 3-sphere".into());
        }
        if f.factors.iter().any(|x| x.is_generic()) {
            r.notes.push("ledger skipped: generic factors present".into());
        } else {
            r.ledger = Some(equality_ledger(f)?);
            r.distribution = Some(distribution_check(f)?);
        }
    }
    if flags.brunnian {
        r.brunnian = Some(brunnian_lower(f.len() as u32)?);
    }
    if let Some(t) = &flags.m_small_tunnels {
        if t.len() != f.len() {
            return Err(Error::Factorization(format!("{} m-small tunnel numbers for {} factors", t.len(), f.len())));
        }
        r.m_small = Some(m_small_lower(t)?);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use FactorType::*;

    fn fz(v: Vec<FactorType>) -> Factorization {
        Factorization::new(v).unwrap()
    }

    const G11: FactorType = Curve11 { is_knot: false };
    const G02: FactorType = Curve02 { is_knot: false };
    const G20: FactorType = Curve20 { is_knot: false };

    #[test]
    fn netext_examples() {
        assert_eq!(netext_lower(&fz(vec![G11; 3])).unwrap().value, HalfInt::from_int(2));
        let f = fz(vec![TrivialTheta, GenericKnot { netext: HalfInt::ONE }]);
        assert_eq!(netext_lower(&f).unwrap().value, HalfInt::from_doubled(3));
        assert_eq!(netext_lower(&fz(vec![HopfGraph, LensCore])).unwrap().value, HalfInt::HALF);
    }

    #[test]
    fn tunnel_examples() {
        assert_eq!(tunnel_lower(&fz(vec![G11; 3])).unwrap().value, HalfInt::ONE);
        let f = fz(vec![GenericGraph { netext: HalfInt::ONE }, GenericKnot { netext: HalfInt::ONE }]);
        assert_eq!(tunnel_lower(&f).unwrap().value, HalfInt::ONE);
        for n in 1..=4 {
            let t = tunnel_lower(&fz(vec![G11; 2 * n + 1])).unwrap();
            assert_eq!(t.value, HalfInt::from_int(n as i64));
        }
        let t = tunnel_lower(&fz(vec![G11; 2])).unwrap();
        assert_eq!((t.value, t.ceil), (HalfInt::HALF, 1));
    }

    #[test]
    fn bridge_examples() {
        let b = bridge_lower(&fz(vec![G02; 2])).unwrap();
        assert_eq!(b.value, HalfInt::from_doubled(5));
        assert!(b.equality_possible);
        let b = bridge_lower(&fz(vec![G11, G02])).unwrap();
        assert_eq!(b.value, HalfInt::from_doubled(5));
        assert!(!b.equality_possible);
        let f = fz(vec![GenericGraph { netext: HalfInt::ONE }, GenericKnot { netext: HalfInt::ONE }]);
        assert_eq!(bridge_lower(&f).unwrap().value, HalfInt::from_int(3));
        assert!(bridge_lower(&fz(vec![G11, LensCore])).is_err());
    }

    #[test]
    fn brunnian_and_m_small() {
        assert_eq!(brunnian_lower(1).unwrap(), (1, HalfInt::from_doubled(5)));
        assert_eq!(brunnian_lower(2).unwrap(), (2, HalfInt::from_doubled(7)));
        assert_eq!(brunnian_lower(5).unwrap(), (5, HalfInt::from_doubled(13)));
        assert_eq!(m_small_lower(&[1, 1]).unwrap(), 2);
        assert_eq!(m_small_lower(&[0, 0, 1]).unwrap(), 1);
        assert_eq!(m_small_lower(&[2, 1, 0, 3]).unwrap(), 6);
    }

    #[test]
    fn ledger_examples() {
        let l = equality_ledger(&fz(vec![G11; 3])).unwrap();
        assert_eq!((l.lhs, l.rhs, l.feasible), (3, 3, true));
        let l = equality_ledger(&fz(vec![G20; 2])).unwrap();
        assert_eq!((l.lhs, l.rhs, l.feasible), (6, 3, false));
        let s = HopfSlinky { length: 2, is_knot: false, pieces: None };
        let l = equality_ledger(&fz(vec![s, G02])).unwrap();
        assert_eq!((l.lhs, l.rhs, l.feasible), (3, 4, true));
        assert!(equality_ledger(&fz(vec![G11, GenericGraph { netext: HalfInt::ONE }])).is_err());
    }

    #[test]
    fn distribution_examples() {
        let DistributionReport::Checked { lines } = distribution_check(&fz(vec![G11; 3])).unwrap() else {
            panic!("feasible")
        };
        assert_eq!(lines[2].counted, 0);
        assert!(lines[2].holds);
        assert!(matches!(distribution_check(&fz(vec![G20; 2])).unwrap(), DistributionReport::NotApplicable { .. }));
    }

    #[test]
    fn netext_classes() {
        assert_eq!(classify_by_netext(HalfInt::HALF, false).unwrap().kinds, vec!["TrivialTheta", "HopfGraph"]);
        assert!(classify_by_netext(HalfInt::ONE, true).unwrap().kinds.contains(&"PropellerKnot".to_string()));
        assert_eq!(classify_by_netext(HalfInt::ZERO, true).unwrap().kinds, vec!["TrivialKnot", "LensCore_1_0"]);
        assert!(classify_by_netext(HalfInt::from_doubled(3), false).is_err());
        assert!(classify_by_netext(HalfInt::HALF, true).is_err());
    }

    #[test]
    fn structural_rules() {
        assert!(Factorization::new(vec![LensCore, Curve11 { is_knot: true }]).is_err());
        assert!(Factorization::new(vec![TrivialTheta, TrivialTwoBouquet]).is_err());
        assert!(Factorization::new(vec![TrivialTheta, G11]).is_err());
        assert!(Factorization::new(vec![G11, HopfSlinky { length: 3, is_knot: false, pieces: None }]).is_err());
        assert!(Factorization::new(vec![G11, HopfSlinky { length: 8, is_knot: false, pieces: Some(2) }]).is_err());
        assert!(Factorization::new(vec![G11, HopfSlinky { length: 6, is_knot: false, pieces: Some(2) }]).is_ok());
        assert!(Factorization::new(vec![G11, GenericKnot { netext: HalfInt::HALF }]).is_err());
    }

    #[test]
    fn s3_rules() {
        let s3 = FactorFlags { ambient_s3: true, ..FactorFlags::default() };
        assert!(analyze(&fz(vec![HopfGraph, G11]), &s3).is_err());
        let handcuff = FactorFlags { graph: Some(GraphShape::Handcuff), ..s3.clone() };
        assert!(analyze(&fz(vec![HopfGraph, G11]), &handcuff).is_ok());
        assert!(analyze(&fz(vec![LensCore, G11]), &s3).is_err());
        let single_brunnian = fz(vec![GenericGraph { netext: HalfInt::from_doubled(3) }]);
        assert!(analyze(&single_brunnian, &s3).is_err());
        let b = FactorFlags { brunnian: true, ..s3 };
        let r = analyze(&single_brunnian, &b).unwrap();
        assert_eq!(r.brunnian, Some((1, HalfInt::from_doubled(5))));
    }

    #[test]
    fn serde_names() {
        let f: FactorType = serde_json::from_str(r#"{"kind":"Curve_1_1","is_knot":true}"#).unwrap();
        assert_eq!(f, Curve11 { is_knot: true });
        let f: FactorType = serde_json::from_str(r#"{"kind":"GenericGraph","netext":"3/2"}"#).unwrap();
        assert_eq!(f.netext(), HalfInt::from_doubled(3));
        let s = serde_json::to_string(&LensCore).unwrap();
        assert_eq!(s, r#"{"kind":"LensCore_1_0"}"#);
    }
}
