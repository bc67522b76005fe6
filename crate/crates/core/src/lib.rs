//! Grey-number decision making.
//!
//! The crate has four layers:
//!
//! - [`grey`]: interval grey numbers in kernel/greyness form and their
//!   arithmetic, conversion, and ranking comparison.
//! - [`graph`]: grey graphs (vertex and edge grey weights under a
//!   validity constraint) with strong completion, union, addition, and
//!   Cartesian product.
//! - [`decision`]: the multi-attribute pipeline from an interval decision
//!   matrix to a relative-kernel ranking, including attribute influence
//!   propagation.
//! - [`io`]: JSON/CSV problem ingestion, report rendering, and DOT
//!   export.

pub mod decision;
pub mod graph;
pub mod grey;
pub mod io;
pub mod matrix;

pub use decision::{
    solve, Attribute, AttributeKind, DecisionProblem, EngineError, RankingResult, Solution,
    SolveOptions, SolveWarning,
};
pub use graph::{attribute_graph, GraphError, GreyGraph, ValidityReport, VertexId};
pub use grey::{GreyError, GreyInterval, GreyNumber, RelativeScore};
pub use matrix::GreyMatrix;
