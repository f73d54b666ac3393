use std::fmt::Write;

use super::{Graph, VertexSet};

/// Renders `g` as an undirected DOT graph. Vertices in `highlight` are
/// filled black with white text; others are drawn white. Nodes and edges
/// appear in ascending index order.
pub fn to_dot(g: &Graph, highlight: &VertexSet) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in 0..g.order() {
        let name = g.label(v).map(str::to_owned).unwrap_or_else(|| v.to_string());
        let _ = write!(out, "  {v} [label=\"{}\"", escape(&name));
        if highlight.contains(v) {
            out.push_str(", fillcolor=black, fontcolor=white");
        }
        out.push_str("];\n");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
