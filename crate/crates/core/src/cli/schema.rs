//! On-disk JSON forms of factor lists and decompositions. Surfaces and
//! bodies are referred to by name.

use serde::{Deserialize, Serialize};

use crate::bounds::{FactorFlags, FactorType, Factorization};
use crate::decomposition::{
    Ambient, Decomposition, DecompositionInvariant, DecompositionViolation, NamedBody, SlotRef, ThickGlue, ThinGlue,
};
use crate::error::{Error, Result};

pub const SCHEMA: u32 = 1;

fn default_schema() -> u32 {
    SCHEMA
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorFile {
    #[serde(default = "default_schema")]
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub factors: Vec<FactorType>,
    #[serde(default)]
    pub flags: FactorFlags,
}

impl FactorFile {
    pub fn factorization(&self) -> Result<Factorization> {
        Factorization::new(self.factors.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThickRecord {
    pub name: String,
    pub bodies: [String; 2],
    pub into: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlotRecord {
    pub body: String,
    pub slot: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThinRecord {
    pub name: String,
    pub sides: [SlotRecord; 2],
    pub into: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    #[serde(default = "default_schema")]
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub bodies: Vec<NamedBody>,
    pub thick: Vec<ThickRecord>,
    #[serde(default)]
    pub thin: Vec<ThinRecord>,
    pub ambient: Ambient,
}

impl DecompositionFile {
    pub fn from_decomposition(d: &Decomposition) -> Self {
        let name = |i: usize| d.bodies[i].name.clone();
        DecompositionFile {
            schema: SCHEMA,
            description: None,
            bodies: d.bodies.clone(),
            thick: d
                .thick
                .iter()
                .map(|t| ThickRecord { name: t.name.clone(), bodies: t.bodies.map(name), into: name(t.into) })
                .collect(),
            thin: d
                .thin
                .iter()
                .map(|t| ThinRecord {
                    name: t.name.clone(),
                    sides: t.sides.map(|s| SlotRecord { body: name(s.body), slot: s.slot }),
                    into: name(t.into),
                })
                .collect(),
            ambient: d.ambient.clone(),
        }
    }

    /// Resolves names. Unknown or ambiguous names are reference violations.
    pub fn to_decomposition(&self) -> Result<Decomposition> {
        let mut missing = Vec::new();
        let lookup = |n: &str, missing: &mut Vec<DecompositionViolation>| {
            let hits: Vec<usize> =
                self.bodies.iter().enumerate().filter(|(_, b)| b.name == n).map(|(i, _)| i).collect();
            match hits.as_slice() {
                [i] => *i,
                [] => {
                    missing.push(DecompositionViolation {
                        invariant: DecompositionInvariant::Reference,
                        detail: format!("no body named {n}"),
                    });
                    0
                }
                _ => {
                    missing.push(DecompositionViolation {
                        invariant: DecompositionInvariant::Reference,
                        detail: format!("body name {n} is used {} times", hits.len()),
                    });
                    0
                }
            }
        };
        let thick: Vec<ThickGlue> = self
            .thick
            .iter()
            .map(|t| ThickGlue {
                name: t.name.clone(),
                bodies: [lookup(&t.bodies[0], &mut missing), lookup(&t.bodies[1], &mut missing)],
                into: lookup(&t.into, &mut missing),
            })
            .collect();
        let thin: Vec<ThinGlue> = self
            .thin
            .iter()
            .map(|t| ThinGlue {
                name: t.name.clone(),
                sides: [
                    SlotRef { body: lookup(&t.sides[0].body, &mut missing), slot: t.sides[0].slot },
                    SlotRef { body: lookup(&t.sides[1].body, &mut missing), slot: t.sides[1].slot },
                ],
                into: lookup(&t.into, &mut missing),
            })
            .collect();
        if !missing.is_empty() {
            return Err(Error::InvalidDecomposition(missing));
        }
        Ok(Decomposition { bodies: self.bodies.clone(), thick, thin, ambient: self.ambient.clone() })
    }
}

/// Reasons a file could not be read, all reported with exit status 2.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: serde_json::Error },
    #[error("{path}: schema {found} is not supported (expected {SCHEMA})")]
    Schema { path: String, found: u32 },
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> std::result::Result<T, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| FileError::Parse { path: path.into(), source })
}

pub fn read_factor_file(path: &str) -> std::result::Result<FactorFile, FileError> {
    let f: FactorFile = read_json(path)?;
    if f.schema != SCHEMA {
        return Err(FileError::Schema { path: path.into(), found: f.schema });
    }
    Ok(f)
}

pub fn read_decomposition_file(path: &str) -> std::result::Result<DecompositionFile, FileError> {
    let f: DecompositionFile = read_json(path)?;
    if f.schema != SCHEMA {
        return Err(FileError::Schema { path: path.into(), found: f.schema });
    }
    Ok(f)
}
