//! Seeded random generators of admissible bodies and valid decompositions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Ambient, Decomposition, GraphKind, NamedBody, SlotRef, ThickGlue, ThinGlue};
use crate::compressionbody::{GhostArcGraph, VpBody};
use crate::surface::{Role, SurfaceComponent, SurfaceSet};

#[derive(Clone, Copy, Debug)]
pub struct RandomConfig {
    pub max_thick: usize,
    pub max_plus_genus: u32,
    /// Knots and links in closed manifolds only: no vertex spheres and no
    /// punctured boundary.
    pub link_only: bool,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig { max_thick: 4, max_plus_genus: 2, link_only: false }
    }
}

fn random_thin_type<R: Rng>(rng: &mut R) -> SurfaceComponent {
    if rng.gen_bool(0.6) {
        SurfaceComponent::thin(0, rng.gen_range(2..=4))
    } else {
        SurfaceComponent::thin(1, rng.gen_range(0..=2))
    }
}

fn random_free_slot<R: Rng>(rng: &mut R, link_only: bool) -> SurfaceComponent {
    if link_only {
        return SurfaceComponent::boundary(1, 0);
    }
    match rng.gen_range(0..3) {
        0 => SurfaceComponent::vertex(rng.gen_range(3..=5)),
        1 => SurfaceComponent::boundary(0, rng.gen_range(3..=4)),
        _ => SurfaceComponent::boundary(1, rng.gen_range(0..=2)),
    }
}

/// A body with the given ∂₋ components in order and ∂₊ of the given type,
/// if one is found in `attempts` tries.
pub fn random_body_with<R: Rng>(
    rng: &mut R,
    plus: (u32, u32),
    slots: &[SurfaceComponent],
    attempts: usize,
) -> Option<VpBody> {
    let n = slots.len();
    for _ in 0..attempts {
        let mut free: Vec<u32> = slots.iter().map(|s| s.punctures).collect();
        let mut edges = Vec::new();
        if n > 0 {
            for _ in 0..rng.gen_range(0..=n + 1) {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let need = if a == b { 2 } else { 1 };
                if free[a] >= need && free[b] >= need {
                    free[a] -= if a == b { 2 } else { 1 };
                    if a != b {
                        free[b] -= 1;
                    }
                    edges.push((a, b));
                }
            }
        }
        let verticals: u32 = free.iter().sum();
        if verticals > plus.1 || !(plus.1 - verticals).is_multiple_of(2) {
            continue;
        }
        let bridge_arcs = (plus.1 - verticals) / 2;
        let mut b = VpBody {
            plus: SurfaceComponent::thick(plus.0, plus.1),
            gag: GhostArcGraph::new(slots.to_vec(), edges),
            vertical_arcs: free,
            bridge_arcs,
            core_loops: 0,
        };
        if n == 0 && bridge_arcs == 0 && plus.0 > 0 {
            b.core_loops = rng.gen_range(0..=plus.0);
        }
        if b.is_admissible() {
            return Some(b);
        }
    }
    None
}

/// A random admissible body with ∂₊ genus at most `max_genus`.
pub fn random_body<R: Rng>(rng: &mut R, max_genus: u32) -> VpBody {
    loop {
        let g = rng.gen_range(0..=max_genus);
        let slots: Vec<SurfaceComponent> = (0..rng.gen_range(0..=3))
            .map(|_| match rng.gen_range(0..3) {
                0 => SurfaceComponent::vertex(rng.gen_range(3..=5)),
                1 => random_thin_type(rng),
                _ => SurfaceComponent::boundary(rng.gen_range(0..=1), rng.gen_range(0..=3)),
            })
            .collect();
        let p = rng.gen_range(0..=8);
        if g == 0 && p == 0 {
            continue;
        }
        if let Some(b) = random_body_with(rng, (g, p), &slots, 20) {
            return b;
        }
    }
}

/// A random valid decomposition. Thick surfaces Hᵢ point from Aᵢ into
/// Bᵢ; thin surfaces point from some Bᵢ into a later Aⱼ, so the dual
/// digraph is acyclic and orientations are consistent.
pub fn random_decomposition<R: Rng>(rng: &mut R, cfg: &RandomConfig) -> Decomposition {
    loop {
        if let Some(d) = attempt(rng, cfg) {
            return d;
        }
    }
}

fn attempt<R: Rng>(rng: &mut R, cfg: &RandomConfig) -> Option<Decomposition> {
    let k = rng.gen_range(1..=cfg.max_thick.max(1));
    // slots[2i] for Aᵢ, slots[2i + 1] for Bᵢ
    let mut slots: Vec<Vec<SurfaceComponent>> = vec![Vec::new(); 2 * k];
    let mut thin: Vec<ThinGlue> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for _ in 0..rng.gen_range(0..=1) {
                let s = random_thin_type(rng);
                let (from, into) = (2 * i + 1, 2 * j);
                slots[from].push(s);
                slots[into].push(s);
                thin.push(ThinGlue {
                    name: format!("F{}", thin.len() + 1),
                    sides: [
                        SlotRef { body: from, slot: slots[from].len() - 1 },
                        SlotRef { body: into, slot: slots[into].len() - 1 },
                    ],
                    into,
                });
            }
        }
    }
    for s in slots.iter_mut() {
        if rng.gen_bool(0.3) {
            s.push(random_free_slot(rng, cfg.link_only));
        }
    }

    let mut bodies = Vec::with_capacity(2 * k);
    let mut thick = Vec::with_capacity(k);
    for i in 0..k {
        let g = rng.gen_range(0..=cfg.max_plus_genus);
        let p = 2 * rng.gen_range(0..=3) + slots[2 * i].iter().map(|s| s.punctures).sum::<u32>() % 2;
        if g == 0 && p == 0 {
            return None;
        }
        let a = random_body_with(rng, (g, p), &slots[2 * i], 40)?;
        let b = random_body_with(rng, (g, p), &slots[2 * i + 1], 40)?;
        bodies.push(NamedBody { name: format!("A{}", i + 1), body: a });
        bodies.push(NamedBody { name: format!("B{}", i + 1), body: b });
        thick.push(ThickGlue { name: format!("H{}", i + 1), bodies: [2 * i, 2 * i + 1], into: 2 * i + 1 });
    }

    let mut d = Decomposition { bodies, thick, thin, ambient: Ambient::closed(0, GraphKind::Other) };
    let free: Vec<SurfaceComponent> = d.unglued_slots().iter().map(|&s| *d.slot(s)).collect();
    let boundary =
        SurfaceSet { components: free.iter().filter(|s| s.role == Role::ManifoldBoundary).copied().collect() };
    let vertex_excess: i64 = free.iter().filter(|s| s.role == Role::VertexSphere).map(|s| s.punctures as i64 - 2).sum();
    let twice_chi = boundary.punctures() as i64 - vertex_excess;
    if twice_chi % 2 != 0 {
        return None;
    }
    let has_vertices = free.iter().any(|s| s.role == Role::VertexSphere);
    d.ambient = Ambient {
        closed: boundary.is_empty(),
        graph_kind: if has_vertices || boundary.punctures() > 0 { GraphKind::Other } else { GraphKind::KnotLink },
        boundary,
        graph_euler_char: twice_chi / 2,
    };
    shuffle_labels(rng, &mut d);
    d.is_valid().then_some(d)
}

/// Permutes body order, keeping every reference consistent.
pub fn shuffle_labels<R: Rng>(rng: &mut R, d: &mut Decomposition) {
    let n = d.bodies.len();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut bodies = d.bodies.clone();
    for (old, &new) in perm.iter().enumerate() {
        bodies[new] = d.bodies[old].clone();
    }
    d.bodies = bodies;
    for t in &mut d.thick {
        t.bodies = t.bodies.map(|b| perm[b]);
        t.into = perm[t.into];
    }
    for t in &mut d.thin {
        t.sides = t.sides.map(|s| SlotRef { body: perm[s.body], slot: s.slot });
        t.into = perm[t.into];
    }
    d.thick.shuffle(rng);
    d.thin.shuffle(rng);
}

/// `count` decompositions from a fixed seed.
pub fn random_decompositions(seed: u64, count: usize, cfg: &RandomConfig) -> Vec<Decomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_decomposition(&mut rng, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::check_delta_identity;

    #[test]
    fn generated_decompositions_are_valid() {
        for d in random_decompositions(7, 200, &RandomConfig::default()) {
            assert!(d.is_valid(), "{:?}", d.validate().violations);
            assert!(check_delta_identity(&d).unwrap());
        }
    }

    #[test]
    fn link_only_mode() {
        let cfg = RandomConfig { link_only: true, ..RandomConfig::default() };
        for d in random_decompositions(11, 100, &cfg) {
            assert_eq!(d.ambient.graph_kind, GraphKind::KnotLink);
            assert!(crate::decomposition::link_parity(&d).unwrap());
        }
    }

    #[test]
    fn bodies_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            assert!(random_body(&mut rng, 2).is_admissible());
        }
    }

    #[test]
    fn deterministic() {
        let cfg = RandomConfig::default();
        assert_eq!(random_decompositions(5, 20, &cfg), random_decompositions(5, 20, &cfg));
    }
}
