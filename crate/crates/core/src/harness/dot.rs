//! Byte-stable DOT output for prime graphs.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::Result;
use crate::vanishing::PrimeGraph;

/// Undirected `graph G { ... }`, vertices ascending, edges sorted.
pub fn to_dot(g: &PrimeGraph) -> String {
    if g.vertices.is_empty() {
        return "graph G {}\n".to_string();
    }
    let mut s = String::from("graph G {\n");
    for v in &g.vertices {
        writeln!(s, "  {v};").unwrap();
    }
    for (p, q) in &g.edges {
        writeln!(s, "  {p} -- {q};").unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn dot_export(g: &PrimeGraph, path: &Path) -> Result<()> {
    std::fs::write(path, to_dot(g))?;
    Ok(())
}
