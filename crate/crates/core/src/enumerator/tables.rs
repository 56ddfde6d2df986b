//! Reference classification tables, one entry per known diagram.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_form, CanonicalKey};
use crate::compressionbody::VpBody;
use crate::error::{Error, Result};

const SPHERE: &str = include_str!("../../data/tables/sphere.json");
const TORUS: &str = include_str!("../../data/tables/torus.json");
const GENUS2: &str = include_str!("../../data/tables/genus2.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
struct TableFile {
    name: String,
    plus_genus: u32,
    max_punctures: u32,
    #[serde(default)]
    legend: Vec<String>,
    entries: Vec<FileEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct FileEntry {
    label: String,
    body: VpBody,
    #[serde(default)]
    note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub key: CanonicalKey,
    pub label: String,
    pub body: VpBody,
    pub note: Option<String>,
}

impl TableEntry {
    /// The class part of a label such as `torus.6.ghost-loop-1`.
    pub fn class(&self) -> &str {
        self.label.split('.').nth(1).unwrap_or("")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationTable {
    pub name: String,
    pub plus_genus: u32,
    pub max_punctures: u32,
    pub legend: Vec<String>,
    pub entries: Vec<TableEntry>,
}

impl ClassificationTable {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: TableFile = serde_json::from_str(text).map_err(|e| Error::OutOfRange(format!("table: {e}")))?;
        let mut entries = Vec::with_capacity(file.entries.len());
        let mut seen = BTreeSet::new();
        for e in file.entries {
            let key = canonical_form(&e.body)?;
            if !seen.insert(key.clone()) {
                return Err(Error::SelfCheck(format!("table {}: duplicate key for {}", file.name, e.label)));
            }
            entries.push(TableEntry { key, label: e.label, body: e.body, note: e.note });
        }
        Ok(ClassificationTable {
            name: file.name,
            plus_genus: file.plus_genus,
            max_punctures: file.max_punctures,
            legend: file.legend,
            entries,
        })
    }

    /// The built-in table for a ∂₊ genus.
    pub fn builtin(plus_genus: u32) -> Option<Self> {
        let text = match plus_genus {
            0 => SPHERE,
            1 => TORUS,
            2 => GENUS2,
            _ => return None,
        };
        Some(Self::from_json(text).expect("built-in table is well formed"))
    }

    /// Entries with at most `max_punctures` punctures. Fails if the table
    /// does not cover that range.
    pub fn restricted(&self, max_punctures: u32) -> Result<Self> {
        if max_punctures > self.max_punctures {
            return Err(Error::OutOfRange(format!(
                "table {} covers at most {} punctures, asked for {}",
                self.name, self.max_punctures, max_punctures
            )));
        }
        Ok(ClassificationTable {
            max_punctures,
            entries: self.entries.iter().filter(|e| e.key.plus_punctures <= max_punctures).cloned().collect(),
            ..self.clone()
        })
    }

    pub fn without(&self, label: &str) -> Self {
        ClassificationTable {
            entries: self.entries.iter().filter(|e| e.label != label).cloned().collect(),
            ..self.clone()
        }
    }

    pub fn keys(&self) -> BTreeSet<CanonicalKey> {
        self.entries.iter().map(|e| e.key.clone()).collect()
    }

    pub fn label_of(&self, key: &CanonicalKey) -> Option<&str> {
        self.entries.iter().find(|e| &e.key == key).map(|e| e.label.as_str())
    }

    /// Number of entries per class, in class order.
    pub fn class_counts(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for e in &self.entries {
            *m.entry(e.class().to_string()).or_insert(0) += 1;
        }
        m
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DiffReport {
    pub table: String,
    pub matched: Vec<(String, CanonicalKey)>,
    /// In the table, not found.
    pub missing: Vec<(String, CanonicalKey)>,
    /// Found, not in the table.
    pub unexpected: Vec<CanonicalKey>,
    pub legend: Vec<String>,
    pub flagged: Vec<(String, String)>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }

    pub fn render_text(&self) -> String {
        let mut s = format!(
            "table {}: {} matched, {} missing, {} unexpected\n",
            self.table,
            self.matched.len(),
            self.missing.len(),
            self.unexpected.len()
        );
        for (label, key) in &self.matched {
            s += &format!("  ok       {label:<32} {key}\n");
        }
        for (label, key) in &self.missing {
            s += &format!("  missing  {label:<32} {key}\n");
        }
        for key in &self.unexpected {
            s += &format!("  extra    {:<32} {key}\n", "-");
        }
        for (label, note) in &self.flagged {
            s += &format!("  flag     {label}: {note}\n");
        }
        for line in &self.legend {
            s += &format!("  note: {line}\n");
        }
        s
    }
}

pub fn compare(found: &BTreeSet<CanonicalKey>, expected: &ClassificationTable) -> DiffReport {
    let mut r = DiffReport { table: expected.name.clone(), legend: expected.legend.clone(), ..DiffReport::default() };
    for e in &expected.entries {
        if found.contains(&e.key) {
            r.matched.push((e.label.clone(), e.key.clone()));
            if let Some(n) = &e.note {
                r.flagged.push((e.label.clone(), n.clone()));
            }
        } else {
            r.missing.push((e.label.clone(), e.key.clone()));
        }
    }
    let table_keys = expected.keys();
    r.unexpected = found.difference(&table_keys).cloned().collect();
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_load() {
        assert_eq!(ClassificationTable::builtin(0).unwrap().entries.len(), 5);
        assert_eq!(ClassificationTable::builtin(1).unwrap().entries.len(), 12);
        assert_eq!(ClassificationTable::builtin(2).unwrap().entries.len(), 12);
        assert!(ClassificationTable::builtin(3).is_none());
    }

    #[test]
    fn torus_class_counts() {
        let t = ClassificationTable::builtin(1).unwrap();
        let counts: Vec<usize> = t.class_counts().values().copied().collect();
        assert_eq!(counts, vec![3, 1, 1, 1, 2, 2, 1, 1]);
    }

    #[test]
    fn restriction() {
        let t = ClassificationTable::builtin(0).unwrap();
        assert_eq!(t.restricted(3).unwrap().entries.len(), 2);
        assert!(t.restricted(5).is_err());
    }

    #[test]
    fn compare_detects_removed_entry() {
        let t = ClassificationTable::builtin(1).unwrap();
        let found = t.keys();
        let cut = t.without("torus.8.loop-and-arc");
        let d = compare(&found, &cut);
        assert_eq!(d.unexpected.len(), 1);
        assert!(d.missing.is_empty());
        let d = compare(&cut.keys(), &t);
        assert_eq!(d.missing.len(), 1);
    }
}
