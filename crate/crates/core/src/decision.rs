//! The grey multi-attribute decision pipeline.
//!
//! An interval decision matrix is normalized per attribute kind into unit
//! intervals, converted to kernel/greyness form, pushed through the
//! attribute influence network, aggregated with grey weights, and ranked
//! by relative kernel. Every stage is a pure function and all
//! intermediates are returned for reporting.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{attribute_graph, GreyGraph, ValidityReport, VertexId};
use crate::grey::{GreyInterval, GreyNumber, RelativeScore};
use crate::matrix::GreyMatrix;

/// Tolerance on the weight-kernel sum before a drift warning is issued.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error("problem must have at least one alternative and one attribute")]
    Empty,
    #[error("matrix row {row} has {got} entries, expected {expected}")]
    MatrixShape {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("matrix has {got} rows, expected {expected}")]
    MatrixRows { expected: usize, got: usize },
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
    #[error("weight interval {index} [{lower}, {upper}] is outside [0, 1]")]
    WeightOutOfRange {
        index: usize,
        lower: f64,
        upper: f64,
    },
    #[error("attribute {index} has an invalid weight (kernel {kernel}, greyness {greyness})")]
    WeightInvariant {
        index: usize,
        kernel: f64,
        greyness: f64,
    },
    #[error("attribute {index} has an empty name")]
    EmptyAttributeName { index: usize },
    #[error("duplicate attribute name {name:?}")]
    DuplicateAttributeName { name: String },
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    Dimension {
        context: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("attribute influence graph violates the grey-graph constraint:\n{0}")]
    AttributeGraphInvalid(ValidityReport),
}

/// Whether larger or smaller raw values are preferred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttributeKind {
    Benefit,
    Cost,
}

impl fmt::Display for AttributeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AttributeKind::Benefit => "benefit",
            AttributeKind::Cost => "cost",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Attribute {
    pub name: String,
    pub kind: AttributeKind,
    pub weight: GreyNumber,
}

/// A full decision problem: alternatives × attributes interval matrix,
/// grey attribute weights, and the attribute influence matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    alternatives: Vec<String>,
    attributes: Vec<Attribute>,
    matrix: Vec<Vec<GreyInterval>>,
    influence: GreyMatrix,
}

impl DecisionProblem {
    pub fn new(
        alternatives: Vec<String>,
        attributes: Vec<Attribute>,
        matrix: Vec<Vec<GreyInterval>>,
        influence: GreyMatrix,
    ) -> Result<Self, EngineError> {
        let n = alternatives.len();
        let m = attributes.len();
        if n == 0 || m == 0 {
            return Err(EngineError::Empty);
        }
        if matrix.len() != n {
            return Err(EngineError::MatrixRows {
                expected: n,
                got: matrix.len(),
            });
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != m {
                return Err(EngineError::MatrixShape {
                    row: i,
                    expected: m,
                    got: row.len(),
                });
            }
        }
        let mut seen = std::collections::BTreeSet::<String>::new();
        for (j, attribute) in attributes.iter().enumerate() {
            if attribute.name.is_empty() {
                return Err(EngineError::EmptyAttributeName { index: j });
            }
            if !seen.insert(attribute.name.clone()) {
                return Err(EngineError::DuplicateAttributeName {
                    name: attribute.name.clone(),
                });
            }
            let w = attribute.weight;
            if !(w.kernel >= 0.0 && w.greyness >= 0.0) {
                return Err(EngineError::WeightInvariant {
                    index: j,
                    kernel: w.kernel,
                    greyness: w.greyness,
                });
            }
        }
        validate_influence(&influence, m)?;
        Ok(Self {
            alternatives,
            attributes,
            matrix,
            influence,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn attributes(&self) -> &[Attribute] {
        &self.attributes
    }

    pub fn matrix(&self) -> &[Vec<GreyInterval>] {
        &self.matrix
    }

    pub fn influence(&self) -> &GreyMatrix {
        &self.influence
    }

    pub fn weights(&self) -> Vec<GreyNumber> {
        self.attributes.iter().map(|a| a.weight).collect()
    }

    /// The attribute-layer grey graph: attributes as vertices weighted by
    /// their grey weights, nonzero off-diagonal influence entries as edges.
    pub fn attribute_graph(&self) -> GreyGraph {
        let labels: Vec<VertexId> = self
            .attributes
            .iter()
            .map(|a| VertexId::new(a.name.clone()))
            .collect();
        attribute_graph(&labels, &self.weights(), &self.influence)
            .expect("influence validated at construction")
    }
}

fn validate_influence(influence: &GreyMatrix, m: usize) -> Result<(), EngineError> {
    if influence.rows() != m || influence.cols() != m {
        return Err(EngineError::InfluenceShape {
            rows: influence.rows(),
            cols: influence.cols(),
            expected: m,
        });
    }
    for i in 0..m {
        for j in 0..i {
            if influence.get(i, j) != influence.get(j, i) {
                return Err(EngineError::InfluenceAsymmetric { p: j, q: i });
            }
        }
        if influence.get(i, i) != GreyNumber::crisp(1.0) {
            return Err(EngineError::InfluenceDiagonal { index: i });
        }
    }
    Ok(())
}

/// Per-attribute column statistics: the column minimum of the lower
/// bounds, the column maximum of the upper bounds, and their difference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AttributeRange {
    pub min: f64,
    pub max: f64,
    pub width: f64,
}

/// The normalized decision matrix in kernel/greyness form, plus the
/// per-attribute ranges used to produce it.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedMatrix {
    pub entries: GreyMatrix,
    pub ranges: Vec<AttributeRange>,
}

/// Normalizes each column into `[0, 1]` by attribute kind and converts
/// the normalized intervals to kernel/greyness form.
///
/// A zero-width column carries no discriminating information; its entries
/// are fixed to the crisp midpoint `(0.5, 0)` and the caller can spot the
/// case through the range's zero width.
pub fn normalize(problem: &DecisionProblem) -> NormalizedMatrix {
    let n = problem.alternatives.len();
    let m = problem.attributes.len();
    let mut ranges = Vec::with_capacity(m);
    for j in 0..m {
        let column = problem.matrix.iter().map(|row| row[j]);
        let min = column
            .clone()
            .map(|iv| iv.lower)
            .fold(f64::INFINITY, f64::min);
        let max = column.map(|iv| iv.upper).fold(f64::NEG_INFINITY, f64::max);
        ranges.push(AttributeRange {
            min,
            max,
            width: max - min,
        });
    }
    let entries = GreyMatrix::from_fn(n, m, |i, j| {
        let iv = problem.matrix[i][j];
        let range = ranges[j];
        if range.width == 0.0 {
            return GreyNumber::crisp(0.5);
        }
        let (lower, upper) = match problem.attributes[j].kind {
            AttributeKind::Benefit => (
                (iv.lower - range.min) / range.width,
                (iv.upper - range.min) / range.width,
            ),
            AttributeKind::Cost => (
                (range.max - iv.upper) / range.width,
                (range.max - iv.lower) / range.width,
            ),
        };
        GreyNumber::from_interval(GreyInterval { lower, upper })
    });
    NormalizedMatrix { entries, ranges }
}

/// Pushes a normalized matrix through the attribute influence network.
///
/// Kernels are the influence-weighted row sums; greyness is the maximum
/// over contributing terms of (coefficient greyness ∨ entry greyness),
/// where a term contributes iff its coefficient is not the crisp zero.
/// Skipping crisp-zero coefficients is what lets a crisp identity
/// influence return the input matrix unchanged.
pub fn propagate_influence(
    entries: &GreyMatrix,
    influence: &GreyMatrix,
) -> Result<GreyMatrix, EngineError> {
    let m = entries.cols();
    if influence.rows() != m || influence.cols() != m {
        return Err(EngineError::InfluenceShape {
            rows: influence.rows(),
            cols: influence.cols(),
            expected: m,
        });
    }
    Ok(GreyMatrix::from_fn(entries.rows(), m, |i, j| {
        let mut kernel = 0.0;
        let mut greyness = 0.0f64;
        for p in 0..m {
            let coefficient = influence.get(p, j);
            let entry = entries.get(i, p);
            kernel += coefficient.kernel * entry.kernel;
            if coefficient != GreyNumber::crisp(0.0) {
                greyness = greyness
                    .max(coefficient.greyness.max(entry.greyness));
            }
        }
        GreyNumber::new(kernel, greyness)
    }))
}

/// Weighted grey aggregation of a (propagated) matrix into one grey
/// number per alternative.
pub fn aggregate(
    propagated: &GreyMatrix,
    weights: &[GreyNumber],
) -> Result<Vec<GreyNumber>, EngineError> {
    if weights.len() != propagated.cols() {
        return Err(EngineError::Dimension {
            context: "aggregate weights",
            expected: propagated.cols(),
            got: weights.len(),
        });
    }
    Ok(propagated
        .iter_rows()
        .map(|row| {
            let mut kernel = 0.0;
            let mut greyness = 0.0f64;
            for (weight, entry) in weights.iter().zip(row) {
                kernel += weight.kernel * entry.kernel;
                greyness = greyness.max(weight.greyness.max(entry.greyness));
            }
            GreyNumber::new(kernel, greyness)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedAlternative {
    pub aggregate: GreyNumber,
    pub score: RelativeScore,
    /// 1-based position in the final order.
    pub rank: usize,
}

/// Scores and the final order. `entries` stays in input order; `order`
/// lists input indices from best to worst.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingResult {
    pub entries: Vec<RankedAlternative>,
    pub order: Vec<usize>,
}

/// Ranks aggregates by descending relative kernel, ties by descending
/// precision, residual ties by ascending input index.
pub fn rank(aggregates: &[GreyNumber]) -> RankingResult {
    let mut order: Vec<usize> = (0..aggregates.len()).collect();
    order.sort_by(|&a, &b| {
        aggregates[b]
            .compare(&aggregates[a])
            .then(a.cmp(&b))
    });
    let mut entries: Vec<RankedAlternative> = aggregates
        .iter()
        .map(|g| RankedAlternative {
            aggregate: *g,
            score: g.relative_score(),
            rank: 0,
        })
        .collect();
    for (position, &index) in order.iter().enumerate() {
        entries[index].rank = position + 1;
    }
    RankingResult { entries, order }
}

/// Non-fatal conditions observed while solving.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolveWarning {
    /// The weight kernels do not sum to 1 within [`WEIGHT_SUM_TOLERANCE`].
    WeightSumDrift { sum: f64 },
    /// A column had zero width; its entries were fixed to (0.5, 0).
    DegenerateColumn { attribute: String },
    /// Clamping pulled this many propagated kernels back into [0, 1].
    ClampedEntries { count: usize },
}

impl fmt::Display for SolveWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveWarning::WeightSumDrift { sum } => {
                write!(f, "weight kernels sum to {sum}, expected 1")
            }
            SolveWarning::DegenerateColumn { attribute } => write!(
                f,
                "attribute {attribute:?} is identical across alternatives; entries fixed to (0.5, 0)"
            ),
            SolveWarning::ClampedEntries { count } => {
                write!(f, "clamped {count} propagated kernels into [0, 1]")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveOptions {
    /// Clamp propagated kernels into [0, 1]. Off by default: influence
    /// propagation can legitimately push kernels above 1, and the
    /// unclamped values are the reference behaviour.
    pub clamp: bool,
    /// Require the attribute influence graph to satisfy the grey-graph
    /// validity constraint.
    pub strict_validation: bool,
}

/// Everything `solve` produces: the ranking plus every intermediate, for
/// reporting and audit.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub alternatives: Vec<String>,
    pub attribute_names: Vec<String>,
    pub normalized: NormalizedMatrix,
    pub propagated: GreyMatrix,
    pub aggregates: Vec<GreyNumber>,
    pub ranking: RankingResult,
    pub attribute_graph: GreyGraph,
    pub warnings: Vec<SolveWarning>,
}

/// Runs the full pipeline: normalize, propagate, aggregate, rank.
pub fn solve(problem: &DecisionProblem, options: SolveOptions) -> Result<Solution, EngineError> {
    let graph = problem.attribute_graph();
    if options.strict_validation {
        let report = graph.validate();
        if !report.is_valid() {
            return Err(EngineError::AttributeGraphInvalid(report));
        }
    }

    let mut warnings = Vec::new();
    let weight_sum: f64 = problem.attributes.iter().map(|a| a.weight.kernel).sum();
    if (weight_sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        warnings.push(SolveWarning::WeightSumDrift { sum: weight_sum });
    }

    let normalized = normalize(problem);
    for (j, range) in normalized.ranges.iter().enumerate() {
        if range.width == 0.0 {
            warnings.push(SolveWarning::DegenerateColumn {
                attribute: problem.attributes[j].name.clone(),
            });
        }
    }

    let mut propagated = propagate_influence(&normalized.entries, &problem.influence)?;
    if options.clamp {
        let mut clamped = 0usize;
        propagated = propagated.map(|g| {
            let kernel = g.kernel.clamp(0.0, 1.0);
            if kernel != g.kernel {
                clamped += 1;
            }
            GreyNumber::new(kernel, g.greyness)
        });
        if clamped > 0 {
            warnings.push(SolveWarning::ClampedEntries { count: clamped });
        }
    }

    let aggregates = aggregate(&propagated, &problem.weights())?;
    let ranking = rank(&aggregates);

    Ok(Solution {
        alternatives: problem.alternatives.clone(),
        attribute_names: problem.attributes.iter().map(|a| a.name.clone()).collect(),
        normalized,
        propagated,
        aggregates,
        ranking,
        attribute_graph: graph,
        warnings,
    })
}

/// Converts raw weight intervals (each within `[0, 1]`) to grey numbers.
pub fn weights_from_intervals(raw: &[GreyInterval]) -> Result<Vec<GreyNumber>, EngineError> {
    raw.iter()
        .enumerate()
        .map(|(index, iv)| {
            if iv.lower < 0.0 || iv.upper > 1.0 {
                return Err(EngineError::WeightOutOfRange {
                    index,
                    lower: iv.lower,
                    upper: iv.upper,
                });
            }
            Ok(GreyNumber::from_interval(*iv))
        })
        .collect()
}
