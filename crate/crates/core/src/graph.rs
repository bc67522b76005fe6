//! Grey graphs: simple undirected graphs whose vertices and edges carry
//! grey-number weights.
//!
//! A grey graph is valid when every edge is no stronger and no less grey
//! than its endpoints: the edge kernel may not exceed the smaller endpoint
//! kernel, and the edge greyness may not fall below the larger endpoint
//! greyness. The module provides the validity check, strong completion,
//! and the union / addition (join) / Cartesian product operators, plus the
//! attribute-layer graph used by the decision pipeline.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::grey::GreyNumber;
use crate::matrix::GreyMatrix;

/// A vertex label, unique within one graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    /// # Panics
    /// Panics on an empty label.
    pub fn new(label: impl Into<String>) -> Self {
        let label = label.into();
        assert!(!label.is_empty(), "vertex label must be non-empty");
        Self(label)
    }

    /// Label for a Cartesian-product vertex, `"(p,q)"`.
    pub fn paired(p: &VertexId, q: &VertexId) -> Self {
        Self(format!("({},{})", p.0, q.0))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId::new(s)
    }
}

/// An unordered vertex pair; endpoints are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct EdgeKey(VertexId, VertexId);

impl EdgeKey {
    fn new(p: VertexId, q: VertexId) -> Result<Self, GraphError> {
        match p.cmp(&q) {
            std::cmp::Ordering::Less => Ok(Self(p, q)),
            std::cmp::Ordering::Greater => Ok(Self(q, p)),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop { label: p.0 }),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("duplicate vertex {label:?}")]
    DuplicateVertex { label: String },
    #[error("edge {a:?} -- {b:?} references unknown vertex {endpoint:?}")]
    UnknownEndpoint { a: String, b: String, endpoint: String },
    #[error("duplicate edge {a:?} -- {b:?}")]
    DuplicateEdge { a: String, b: String },
    #[error("self-loop on vertex {label:?}")]
    SelfLoop { label: String },
    #[error("grey-graph validity violated:\n{0}")]
    Invalid(ValidityReport),
    #[error("vertex sets overlap (shared vertex {label:?})")]
    OverlappingVertices { label: String },
    #[error("influence matrix is {rows}x{cols}, expected {expected}x{expected}")]
    InfluenceShape {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("influence matrix is asymmetric at ({p},{q})")]
    InfluenceAsymmetric { p: usize, q: usize },
    #[error("influence diagonal entry {index} must be the crisp unit (1, 0)")]
    InfluenceDiagonal { index: usize },
}

/// Which bound an edge breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundComponent {
    Kernel,
    Greyness,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidityViolation {
    pub edge: (VertexId, VertexId),
    pub component: BoundComponent,
    pub observed: f64,
    pub bound: f64,
}

impl fmt::Display for ValidityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = &self.edge;
        match self.component {
            BoundComponent::Kernel => write!(
                f,
                "edge {a} -- {b}: kernel {} exceeds endpoint minimum {}",
                self.observed, self.bound
            ),
            BoundComponent::Greyness => write!(
                f,
                "edge {a} -- {b}: greyness {} is below endpoint maximum {}",
                self.observed, self.bound
            ),
        }
    }
}

/// Every edge that breaks the validity constraint, one entry per broken
/// component; empty iff the graph is valid.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidityReport {
    pub violations: Vec<ValidityViolation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The edge weight bounds implied by a pair of endpoint weights: the
/// kernel minimum and greyness maximum.
fn endpoint_bounds(p: GreyNumber, q: GreyNumber) -> (f64, f64) {
    (p.kernel.min(q.kernel), p.greyness.max(q.greyness))
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GreyGraph {
    vertices: BTreeMap<VertexId, GreyNumber>,
    edges: BTreeMap<EdgeKey, GreyNumber>,
}

impl GreyGraph {
    /// Builds a graph from vertex and edge lists.
    ///
    /// Endpoints must exist, loops and duplicates are rejected, and with
    /// `strict` any validity violation is an error (the report names the
    /// offending edges). Without `strict` the graph is stored as given and
    /// validity stays queryable through [`GreyGraph::validate`].
    pub fn build(
        vertices: impl IntoIterator<Item = (VertexId, GreyNumber)>,
        edges: impl IntoIterator<Item = (VertexId, VertexId, GreyNumber)>,
        strict: bool,
    ) -> Result<Self, GraphError> {
        let mut vertex_map = BTreeMap::new();
        for (id, value) in vertices {
            if vertex_map.insert(id.clone(), value).is_some() {
                return Err(GraphError::DuplicateVertex { label: id.0 });
            }
        }
        let mut edge_map = BTreeMap::new();
        for (p, q, value) in edges {
            for endpoint in [&p, &q] {
                if !vertex_map.contains_key(endpoint) {
                    return Err(GraphError::UnknownEndpoint {
                        a: p.0.clone(),
                        b: q.0.clone(),
                        endpoint: endpoint.0.clone(),
                    });
                }
            }
            let key = EdgeKey::new(p, q)?;
            if edge_map.contains_key(&key) {
                return Err(GraphError::DuplicateEdge {
                    a: key.0 .0,
                    b: key.1 .0,
                });
            }
            edge_map.insert(key, value);
        }
        let graph = Self {
            vertices: vertex_map,
            edges: edge_map,
        };
        if strict {
            let report = graph.validate();
            if !report.is_valid() {
                return Err(GraphError::Invalid(report));
            }
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_value(&self, id: &VertexId) -> Option<GreyNumber> {
        self.vertices.get(id).copied()
    }

    pub fn edge_value(&self, p: &VertexId, q: &VertexId) -> Option<GreyNumber> {
        let key = EdgeKey::new(p.clone(), q.clone()).ok()?;
        self.edges.get(&key).copied()
    }

    /// Vertices in label order.
    pub fn vertices(&self) -> impl Iterator<Item = (&VertexId, GreyNumber)> {
        self.vertices.iter().map(|(id, v)| (id, *v))
    }

    /// Edges in sorted endpoint order.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId, GreyNumber)> {
        self.edges.iter().map(|(k, v)| (&k.0, &k.1, *v))
    }

    /// Reports every edge whose kernel exceeds the endpoint-kernel minimum
    /// or whose greyness falls below the endpoint-greyness maximum.
    pub fn validate(&self) -> ValidityReport {
        let mut violations = Vec::new();
        for (key, value) in &self.edges {
            let (kernel_bound, greyness_bound) =
                endpoint_bounds(self.vertices[&key.0], self.vertices[&key.1]);
            if value.kernel > kernel_bound {
                violations.push(ValidityViolation {
                    edge: (key.0.clone(), key.1.clone()),
                    component: BoundComponent::Kernel,
                    observed: value.kernel,
                    bound: kernel_bound,
                });
            }
            if value.greyness < greyness_bound {
                violations.push(ValidityViolation {
                    edge: (key.0.clone(), key.1.clone()),
                    component: BoundComponent::Greyness,
                    observed: value.greyness,
                    bound: greyness_bound,
                });
            }
        }
        ValidityReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// True iff every present edge equals (min endpoint kernels, max
    /// endpoint greynesses). Completeness of the edge set is not required.
    pub fn is_strong(&self) -> bool {
        self.edges.iter().all(|(key, value)| {
            let (kernel, greyness) = endpoint_bounds(self.vertices[&key.0], self.vertices[&key.1]);
            value.kernel == kernel && value.greyness == greyness
        })
    }

    /// The complete graph on the given vertices with every edge set to
    /// (min endpoint kernels, max endpoint greynesses).
    pub fn strong_completion(vertices: impl IntoIterator<Item = (VertexId, GreyNumber)>) -> Self {
        let vertices: BTreeMap<_, _> = vertices.into_iter().collect();
        let ids: Vec<_> = vertices.keys().cloned().collect();
        let mut edges = BTreeMap::new();
        for (i, p) in ids.iter().enumerate() {
            for q in &ids[i + 1..] {
                let (kernel, greyness) = endpoint_bounds(vertices[p], vertices[q]);
                edges.insert(
                    EdgeKey(p.clone(), q.clone()),
                    GreyNumber::new(kernel, greyness),
                );
            }
        }
        Self { vertices, edges }
    }

    /// Union: elements of exactly one graph carry over unchanged; shared
    /// vertices and shared edges take (max kernel, min greyness).
    pub fn union(&self, other: &GreyGraph) -> GreyGraph {
        let mut vertices = self.vertices.clone();
        for (id, value) in &other.vertices {
            vertices
                .entry(id.clone())
                .and_modify(|v| {
                    *v = GreyNumber::new(v.kernel.max(value.kernel), v.greyness.min(value.greyness))
                })
                .or_insert(*value);
        }
        let mut edges = self.edges.clone();
        for (key, value) in &other.edges {
            edges
                .entry(key.clone())
                .and_modify(|v| {
                    *v = GreyNumber::new(v.kernel.max(value.kernel), v.greyness.min(value.greyness))
                })
                .or_insert(*value);
        }
        GreyGraph { vertices, edges }
    }

    /// Addition (join): the disjoint union plus one joining edge per
    /// cross pair `(p ∈ V1, q ∈ V2)`, valued from the endpoint vertex
    /// weights as (min kernels, max greynesses).
    ///
    /// Overlapping vertex sets are rejected.
    pub fn graph_sum(&self, other: &GreyGraph) -> Result<GreyGraph, GraphError> {
        if let Some(shared) = self.vertices.keys().find(|id| other.vertices.contains_key(*id)) {
            return Err(GraphError::OverlappingVertices {
                label: shared.0.clone(),
            });
        }
        let mut result = self.union(other);
        for (p, pv) in &self.vertices {
            for (q, qv) in &other.vertices {
                let (kernel, greyness) = endpoint_bounds(*pv, *qv);
                result.edges.insert(
                    EdgeKey::new(p.clone(), q.clone()).expect("disjoint sets cannot loop"),
                    GreyNumber::new(kernel, greyness),
                );
            }
        }
        Ok(result)
    }

    /// Cartesian product on vertex set `V1×V2`.
    ///
    /// Product vertices take (min kernels, max greynesses) of their
    /// coordinates. Edges connect `(r,p)-(r,q)` for `r ∈ V1, pq ∈ E2`
    /// (valued against the fixed vertex weight) and symmetrically
    /// `(p,r)-(q,r)` for `r ∈ V2, pq ∈ E1`.
    pub fn cartesian_product(&self, other: &GreyGraph) -> GreyGraph {
        let mut vertices = BTreeMap::new();
        for (p, pv) in &self.vertices {
            for (q, qv) in &other.vertices {
                let (kernel, greyness) = endpoint_bounds(*pv, *qv);
                vertices.insert(VertexId::paired(p, q), GreyNumber::new(kernel, greyness));
            }
        }
        let mut edges = BTreeMap::new();
        for (r, rv) in &self.vertices {
            for (key, ev) in &other.edges {
                let (kernel, greyness) = endpoint_bounds(*rv, *ev);
                let edge = EdgeKey::new(
                    VertexId::paired(r, &key.0),
                    VertexId::paired(r, &key.1),
                )
                .expect("product endpoints differ");
                edges.insert(edge, GreyNumber::new(kernel, greyness));
            }
        }
        for (r, rv) in &other.vertices {
            for (key, ev) in &self.edges {
                let (kernel, greyness) = endpoint_bounds(*ev, *rv);
                let edge = EdgeKey::new(
                    VertexId::paired(&key.0, r),
                    VertexId::paired(&key.1, r),
                )
                .expect("product endpoints differ");
                edges.insert(edge, GreyNumber::new(kernel, greyness));
            }
        }
        GreyGraph { vertices, edges }
    }
}

/// The attribute-layer graph of a decision problem: one vertex per
/// attribute carrying its grey weight, one edge per nonzero off-diagonal
/// influence entry.
///
/// The influence matrix must be square, symmetric in both components, and
/// carry the crisp unit on its diagonal. Off-diagonal entries with a zero
/// kernel produce no edge.
pub fn attribute_graph(
    labels: &[VertexId],
    weights: &[GreyNumber],
    influence: &GreyMatrix,
) -> Result<GreyGraph, GraphError> {
    let m = labels.len();
    assert_eq!(weights.len(), m, "one weight per attribute label");
    if influence.rows() != m || influence.cols() != m {
        return Err(GraphError::InfluenceShape {
            rows: influence.rows(),
            cols: influence.cols(),
            expected: m,
        });
    }
    for i in 0..m {
        for j in 0..i {
            if influence.get(i, j) != influence.get(j, i) {
                return Err(GraphError::InfluenceAsymmetric { p: j, q: i });
            }
        }
        if influence.get(i, i).kernel != 1.0 {
            return Err(GraphError::InfluenceDiagonal { index: i });
        }
    }
    let mut edges = Vec::new();
    for p in 0..m {
        for q in p + 1..m {
            let value = influence.get(p, q);
            if value.kernel != 0.0 {
                edges.push((labels[p].clone(), labels[q].clone(), value));
            }
        }
    }
    GreyGraph::build(
        labels.iter().cloned().zip(weights.iter().copied()),
        edges,
        false,
    )
}
