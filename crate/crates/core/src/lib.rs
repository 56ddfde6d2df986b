//! Net extent calculus for vp-compressionbodies, with lower bounds on tunnel
//! and bridge numbers of composite genus-2 spatial graphs.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod canonical;
pub mod cli;
pub mod compressionbody;
pub mod decomposition;
pub mod enumerator;
pub mod error;
pub mod halfint;
pub mod surface;
pub mod verify;

pub use compressionbody::{GhostArcGraph, VpBody, VpClass};
pub use decomposition::{Decomposition, GraphKind};
pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use surface::{Role, SurfaceComponent, SurfaceSet};
