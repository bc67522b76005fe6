//! Problem ingestion, report emission, and DOT export.
//!
//! JSON is the canonical format; CSV is a convenience encoding with a
//! `lo..hi` cell microformat. Reports render at 4 decimals for humans and
//! at full precision for JSON.

mod dot;
mod graph_doc;
mod problem;
mod report;

pub use dot::export_dot;
pub use graph_doc::{graph_to_document, parse_graph, GraphDocument};
pub use problem::{parse_problem, problem_to_document, ProblemDocument, ProblemFormat};
pub use report::{emit_report, Report, ReportFormat, ScoreRow};

use thiserror::Error;

use crate::decision::EngineError;
use crate::graph::GraphError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
