//! Lattice JSON and Graphviz DOT.
//!
//! The JSON form is `{"name": .., "elements": [..], "covers": [[a, b], ..]}`
//! where each pair `[a, b]` says `b` covers `a`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{LatticeError, Result};
use crate::lattice::{build_lattice, Lattice};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl LatticeDoc {
    pub fn from_lattice(lat: &Lattice) -> Self {
        LatticeDoc {
            name: lat.name().to_string(),
            elements: lat.labels().to_vec(),
            covers: lat.cover_labels(),
        }
    }

    pub fn build(&self) -> Result<Lattice> {
        build_lattice(&self.name, &self.elements, &self.covers)
    }
}

pub fn parse_lattice(json: &str) -> Result<Lattice> {
    let doc: LatticeDoc =
        serde_json::from_str(json).map_err(|e| LatticeError::Json(e.to_string()))?;
    doc.build()
}

pub fn to_json(lat: &Lattice) -> String {
    serde_json::to_string_pretty(&LatticeDoc::from_lattice(lat)).expect("plain data serializes")
}

/// One node per element, one edge per cover, drawn bottom-up.
pub fn to_dot(lat: &Lattice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(lat.name()));
    out.push_str("  rankdir=BT;\n  node [shape=circle];\n");
    for (i, l) in lat.labels().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(l));
    }
    for &(a, b) in lat.hasse() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
