//! Graphviz export.

use std::fmt::Write;

use crate::error::Result;
use crate::homogeneity::EdgeColoring;
use crate::multigraph::Multigraph;

/// Fixed palette, indexed by color - 1 and reused cyclically past 12.
pub const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
    "#469990", "#9a6324", "#800000", "#000075",
];

pub fn palette_color(color: usize) -> &'static str {
    PALETTE[(color - 1) % PALETTE.len()]
}

/// Render `g` as an undirected DOT graph. With a coloring, every edge gets
/// a `color` from [`PALETTE`] and its color number as a label.
pub fn to_dot(g: &Multigraph, coloring: Option<&EdgeColoring>) -> Result<String> {
    if let Some(c) = coloring {
        crate::homogeneity::verify(g, c)?;
    }
    let mut out = String::new();
    out.push_str("graph G {\n");
    out.push_str("  node [shape=circle];\n");
    for x in g.vertices() {
        writeln!(out, "  {} [label=\"x{}\"];", x.0, x.0).unwrap();
    }
    for e in g.edges() {
        match coloring {
            Some(c) => {
                let k = c.color(e.id);
                writeln!(
                    out,
                    "  {} -- {} [color=\"{}\", label=\"{}\"];",
                    e.u.0,
                    e.v.0,
                    palette_color(k),
                    k
                )
                .unwrap();
            }
            None => writeln!(out, "  {} -- {};", e.u.0, e.v.0).unwrap(),
        }
    }
    out.push_str("}\n");
    Ok(out)
}
