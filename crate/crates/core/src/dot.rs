//! Graphviz DOT export.

use std::fmt::Write;

use crate::{Graph, VertexSet};

/// Renders `graph` as an undirected DOT graph. Vertices in `highlight` are
/// filled. Output depends only on the labeled structure.
pub fn to_dot(graph: &Graph, highlight: &VertexSet) -> String {
    let mut out = String::new();
    let title = graph.name().unwrap_or("G").replace('"', "'");
    writeln!(out, "graph \"{title}\" {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..graph.n() {
        if highlight.contains(v) {
            writeln!(out, "  {v} [style=filled, fillcolor=black, fontcolor=white];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for e in graph.edges() {
        writeln!(out, "  {} -- {};", e.u, e.v).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let dot = to_dot(&Graph::complete(1), &VertexSet::new());
        assert_eq!(dot, "graph \"G\" {\n  node [shape=circle];\n  0;\n}\n");
    }

    #[test]
    fn highlighted_edge() {
        let dot = to_dot(&Graph::complete(2).with_name("K2"), &VertexSet::from([0]));
        assert!(dot.starts_with("graph \"K2\" {"));
        assert!(dot.contains("  0 [style=filled"));
        assert!(dot.contains("  1;\n"));
        assert!(dot.contains("  0 -- 1;"));
    }

    #[test]
    fn total_set_of_the_smallest_hub_graph() {
        let inst = crate::families::make_family("Gn", &[2]).unwrap();
        let total = crate::solve::max_position_set(&inst.graph, crate::PositionKind::Total).unwrap();
        let dot = to_dot(&inst.graph, &total.witness);
        assert_eq!(dot.matches("style=filled").count(), 4);
        let nodes = dot.lines().filter(|l| l.trim_start().starts_with(char::is_numeric) && !l.contains("--"));
        assert_eq!(nodes.count(), 14);
        assert_eq!(dot.matches(" -- ").count(), inst.graph.edge_count());
    }
}
