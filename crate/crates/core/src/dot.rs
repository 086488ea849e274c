//! Graphviz export.

use std::fmt::Write;

use crate::graph::Graph;

/// Renders `g` as an undirected DOT graph, each edge once. When `labels`
/// is given, vertex `v` is drawn with `labels[v]`.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph {\n");
    if let Some(labels) = labels {
        for v in 0..g.order() {
            let label = labels.get(v).map(String::as_str).unwrap_or("");
            writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap();
        }
    } else {
        for v in 0..g.order() {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
