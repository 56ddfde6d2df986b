//! Closed orientable surface components punctured by the graph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::HalfInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Thick,
    Thin,
    ManifoldBoundary,
    VertexSphere,
}

impl Role {
    pub fn short(self) -> char {
        match self {
            Role::Thick => 'H',
            Role::Thin => 'F',
            Role::ManifoldBoundary => 'B',
            Role::VertexSphere => 'V',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SurfaceComponent {
    pub genus: u32,
    pub punctures: u32,
    pub role: Role,
}

impl SurfaceComponent {
    pub const fn new(genus: u32, punctures: u32, role: Role) -> Self {
        SurfaceComponent { genus, punctures, role }
    }

    pub const fn thick(genus: u32, punctures: u32) -> Self {
        Self::new(genus, punctures, Role::Thick)
    }

    pub const fn thin(genus: u32, punctures: u32) -> Self {
        Self::new(genus, punctures, Role::Thin)
    }

    pub const fn boundary(genus: u32, punctures: u32) -> Self {
        Self::new(genus, punctures, Role::ManifoldBoundary)
    }

    pub const fn vertex(degree: u32) -> Self {
        Self::new(0, degree, Role::VertexSphere)
    }

    pub fn is_sphere(&self) -> bool {
        self.genus == 0
    }

    pub fn euler_char(&self) -> i64 {
        euler_char(self)
    }

    pub fn extent(&self) -> HalfInt {
        extent(self)
    }

    pub fn with_role(self, role: Role) -> Self {
        SurfaceComponent { role, ..self }
    }

    /// Same surface up to role.
    pub fn same_type(&self, other: &SurfaceComponent) -> bool {
        self.genus == other.genus && self.punctures == other.punctures
    }

    /// Minimum puncture count allowed for a sphere with this role.
    ///
    /// Vertex spheres and spheres in ∂M need three punctures. A thin sphere
    /// may be a twice-punctured summing sphere. Thick spheres need two.
    pub fn min_sphere_punctures(role: Role) -> u32 {
        match role {
            Role::VertexSphere | Role::ManifoldBoundary => 3,
            Role::Thin | Role::Thick => 2,
        }
    }

    /// Checks the role-specific lower bound on punctures. Returns a message
    /// for each problem found.
    pub fn role_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.role == Role::VertexSphere && self.genus != 0 {
            out.push(format!("vertex sphere {self} has genus {}", self.genus));
        }
        if self.genus == 0 && self.punctures < Self::min_sphere_punctures(self.role) {
            out.push(format!(
                "{self} is a sphere with {} puncture(s), below the minimum {} for its role",
                self.punctures,
                Self::min_sphere_punctures(self.role)
            ));
        }
        out
    }
}

impl fmt::Display for SurfaceComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.role.short(), self.genus, self.punctures)
    }
}

pub fn euler_char(s: &SurfaceComponent) -> i64 {
    2 - 2 * s.genus as i64
}

/// ext(S) = (2g − 2 + p)/2.
pub fn extent(s: &SurfaceComponent) -> HalfInt {
    HalfInt::half_of(2 * s.genus as i64 - 2 + s.punctures as i64)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SurfaceSet {
    pub components: Vec<SurfaceComponent>,
}

impl SurfaceSet {
    pub fn new(components: Vec<SurfaceComponent>) -> Self {
        SurfaceSet { components }
    }

    pub fn extent(&self) -> HalfInt {
        extent_set(self)
    }

    pub fn euler_char(&self) -> i64 {
        self.components.iter().map(euler_char).sum()
    }

    pub fn punctures(&self) -> u32 {
        self.components.iter().map(|c| c.punctures).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// (genus, punctures) pairs, sorted.
    pub fn signature(&self) -> Vec<(u32, u32)> {
        let mut v: Vec<_> = self.components.iter().map(|c| (c.genus, c.punctures)).collect();
        v.sort_unstable();
        v
    }
}

impl FromIterator<SurfaceComponent> for SurfaceSet {
    fn from_iter<I: IntoIterator<Item = SurfaceComponent>>(iter: I) -> Self {
        SurfaceSet { components: iter.into_iter().collect() }
    }
}

pub fn extent_set(ss: &SurfaceSet) -> HalfInt {
    ss.components.iter().map(extent).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_char(&SurfaceComponent::thick(0, 0)), 2);
        assert_eq!(euler_char(&SurfaceComponent::thick(1, 0)), 0);
        assert_eq!(euler_char(&SurfaceComponent::thick(2, 0)), -2);
    }

    #[test]
    fn extents() {
        assert_eq!(extent(&SurfaceComponent::thick(0, 4)), HalfInt::ONE);
        assert_eq!(extent(&SurfaceComponent::thick(1, 0)), HalfInt::ZERO);
        assert_eq!(extent(&SurfaceComponent::vertex(3)), HalfInt::HALF);
        assert_eq!(extent(&SurfaceComponent::thick(1, 2)), HalfInt::ONE);
        assert_eq!(extent(&SurfaceComponent::thick(0, 0)), HalfInt::from_int(-1));
    }

    #[test]
    fn set_extents() {
        assert_eq!(extent_set(&SurfaceSet::default()), HalfInt::ZERO);
        let two_tripods = SurfaceSet::new(vec![SurfaceComponent::vertex(3); 2]);
        assert_eq!(extent_set(&two_tripods), HalfInt::ONE);
        let mixed = SurfaceSet::new(vec![SurfaceComponent::thin(1, 0), SurfaceComponent::thin(0, 4)]);
        assert_eq!(extent_set(&mixed), HalfInt::ONE);
    }

    #[test]
    fn role_bounds() {
        assert!(SurfaceComponent::vertex(3).role_problems().is_empty());
        assert_eq!(SurfaceComponent::vertex(2).role_problems().len(), 1);
        assert!(SurfaceComponent::thin(0, 2).role_problems().is_empty());
        assert_eq!(SurfaceComponent::thin(0, 0).role_problems().len(), 1);
        assert_eq!(SurfaceComponent::boundary(0, 2).role_problems().len(), 1);
        assert!(SurfaceComponent::boundary(1, 0).role_problems().is_empty());
        assert_eq!(SurfaceComponent::new(1, 3, Role::VertexSphere).role_problems().len(), 1);
    }
}
