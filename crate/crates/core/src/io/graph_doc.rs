//! JSON form of a grey graph: vertices as a label map, edges as
//! `[a, b, [kernel, greyness]]` triples.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{GreyGraph, VertexId};
use crate::grey::GreyNumber;

use super::IoError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: BTreeMap<String, [f64; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<(String, String, [f64; 2])>,
}

impl GraphDocument {
    pub fn into_graph(self, strict: bool) -> Result<GreyGraph, IoError> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for (label, [kernel, greyness]) in &self.vertices {
            vertices.push((label.clone(), *kernel, *greyness));
        }
        for (label, kernel, greyness) in &vertices {
            check_value("vertex", label, *kernel, *greyness)?;
        }
        for (a, b, [kernel, greyness]) in &self.edges {
            check_value("edge", &format!("{a} -- {b}"), *kernel, *greyness)?;
        }
        let graph = GreyGraph::build(
            vertices
                .into_iter()
                .map(|(label, k, g)| (VertexId::new(label), GreyNumber::new(k, g))),
            self.edges.into_iter().map(|(a, b, [k, g])| {
                (VertexId::new(a), VertexId::new(b), GreyNumber::new(k, g))
            }),
            strict,
        )?;
        Ok(graph)
    }
}

fn check_value(what: &str, name: &str, kernel: f64, greyness: f64) -> Result<(), IoError> {
    if name.is_empty() {
        return Err(IoError::Invalid(format!("{what} with an empty label")));
    }
    if !kernel.is_finite() || !greyness.is_finite() || greyness < 0.0 {
        return Err(IoError::Invalid(format!(
            "{what} {name}: values ({kernel}, {greyness}) must be finite with non-negative greyness"
        )));
    }
    Ok(())
}

/// Parses a graph document; with `strict`, validity violations are
/// rejected.
pub fn parse_graph(data: &[u8], strict: bool) -> Result<GreyGraph, IoError> {
    let document: GraphDocument = serde_json::from_slice(data)?;
    document.into_graph(strict)
}

pub fn graph_to_document(graph: &GreyGraph) -> GraphDocument {
    GraphDocument {
        vertices: graph
            .vertices()
            .map(|(id, v)| (id.as_str().to_string(), [v.kernel, v.greyness]))
            .collect(),
        edges: graph
            .edges()
            .map(|(a, b, v)| {
                (
                    a.as_str().to_string(),
                    b.as_str().to_string(),
                    [v.kernel, v.greyness],
                )
            })
            .collect(),
    }
}
