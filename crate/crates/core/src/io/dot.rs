//! Deterministic DOT export of grey graphs.
//!
//! Vertices are emitted in label order and edges by sorted endpoint pair,
//! so the output is byte-identical across runs for the same graph. Labels
//! show the grey value at 4 decimals.

use std::fmt::Write as _;

use crate::graph::GreyGraph;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders an undirected DOT document.
pub fn export_dot(graph: &GreyGraph) -> Vec<u8> {
    let mut out = String::from("graph grey {\n");
    for (id, value) in graph.vertices() {
        let _ = writeln!(
            out,
            "    \"{}\" [label=\"{}\\n({:.4},{:.4})\"];",
            escape(id.as_str()),
            escape(id.as_str()),
            value.kernel,
            value.greyness
        );
    }
    for (a, b, value) in graph.edges() {
        let _ = writeln!(
            out,
            "    \"{}\" -- \"{}\" [label=\"({:.4},{:.4})\"];",
            escape(a.as_str()),
            escape(b.as_str()),
            value.kernel,
            value.greyness
        );
    }
    out.push_str("}\n");
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GreyGraph, VertexId};
    use crate::grey::GreyNumber;

    fn strong_example() -> GreyGraph {
        GreyGraph::strong_completion([
            (VertexId::new("x1"), GreyNumber::new(0.5, 0.6)),
            (VertexId::new("x2"), GreyNumber::new(0.3, 0.5)),
            (VertexId::new("x3"), GreyNumber::new(0.7, 0.2)),
            (VertexId::new("x4"), GreyNumber::new(0.4, 0.7)),
        ])
    }

    #[test]
    fn strong_graph_edge_labels_are_rendered() {
        let dot = String::from_utf8(export_dot(&strong_example())).unwrap();
        assert!(dot.contains("\"x1\" -- \"x2\" [label=\"(0.3000,0.6000)\"];"));
        assert!(dot.contains("\"x3\" -- \"x4\" [label=\"(0.4000,0.7000)\"];"));
        assert!(dot.contains("\"x1\" [label=\"x1\\n(0.5000,0.6000)\"];"));
    }

    #[test]
    fn edgeless_graph_renders_vertices_only() {
        let graph = GreyGraph::build(
            [(VertexId::new("a"), GreyNumber::new(0.4, 0.2))],
            std::iter::empty(),
            true,
        )
        .unwrap();
        let dot = String::from_utf8(export_dot(&graph)).unwrap();
        assert!(dot.contains("\"a\" [label="));
        assert!(!dot.contains("--"));
    }

    #[test]
    fn output_is_byte_identical_across_runs() {
        let a = export_dot(&strong_example());
        let b = export_dot(&strong_example());
        assert_eq!(a, b);
    }
}
