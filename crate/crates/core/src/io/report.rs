//! Rendering of solve output: text and markdown at 4 decimals, JSON at
//! full precision.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::decision::{AttributeRange, Solution};
use crate::grey::GreyNumber;

use super::{IoError, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Markdown,
    Json,
}

/// One score-table row, in input order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreRow {
    pub alternative: String,
    pub kernel: f64,
    pub greyness: f64,
    pub gamma: f64,
    pub delta: f64,
    pub rank: usize,
}

/// The full solve output in serializable form. JSON emission of this
/// structure never rounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    pub ranges: Vec<AttributeRange>,
    pub normalized_intervals: Vec<Vec<[f64; 2]>>,
    pub kernel_matrix: Vec<Vec<f64>>,
    pub greyness_matrix: Vec<Vec<f64>>,
    pub propagated_kernel: Vec<Vec<f64>>,
    pub propagated_greyness: Vec<Vec<f64>>,
    pub scores: Vec<ScoreRow>,
    /// Alternative names, best first.
    pub order: Vec<String>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn from_solution(solution: &Solution) -> Self {
        let normalized = &solution.normalized;
        let grid = |f: &dyn Fn(GreyNumber) -> f64, matrix: &crate::matrix::GreyMatrix| {
            matrix
                .iter_rows()
                .map(|row| row.iter().map(|g| f(*g)).collect())
                .collect()
        };
        let normalized_intervals = normalized
            .entries
            .iter_rows()
            .map(|row| {
                row.iter()
                    .map(|g| {
                        let iv = g.to_interval();
                        [iv.lower, iv.upper]
                    })
                    .collect()
            })
            .collect();
        let scores = solution
            .ranking
            .entries
            .iter()
            .zip(&solution.alternatives)
            .map(|(entry, name)| ScoreRow {
                alternative: name.clone(),
                kernel: entry.aggregate.kernel,
                greyness: entry.aggregate.greyness,
                gamma: entry.score.gamma,
                delta: entry.score.delta,
                rank: entry.rank,
            })
            .collect();
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            alternatives: solution.alternatives.clone(),
            attributes: solution.attribute_names.clone(),
            ranges: normalized.ranges.clone(),
            normalized_intervals,
            kernel_matrix: grid(&|g| g.kernel, &normalized.entries),
            greyness_matrix: grid(&|g| g.greyness, &normalized.entries),
            propagated_kernel: grid(&|g| g.kernel, &solution.propagated),
            propagated_greyness: grid(&|g| g.greyness, &solution.propagated),
            scores,
            order: solution
                .ranking
                .order
                .iter()
                .map(|&i| solution.alternatives[i].clone())
                .collect(),
            warnings: solution.warnings.iter().map(|w| w.to_string()).collect(),
        }
    }

    pub fn render(&self, format: ReportFormat) -> Result<Vec<u8>, IoError> {
        Ok(match format {
            ReportFormat::Json => serde_json::to_vec_pretty(self)?,
            ReportFormat::Markdown => self.render_markdown().into_bytes(),
            ReportFormat::Text => self.render_text().into_bytes(),
        })
    }

    fn render_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Decision report");

        let header = |out: &mut String| {
            let mut line = String::from("| alternative |");
            let mut rule = String::from("|---|");
            for name in &self.attributes {
                let _ = write!(line, " {name} |");
                rule.push_str("---|");
            }
            out.push_str(&line);
            out.push('\n');
            out.push_str(&rule);
            out.push('\n');
        };

        let _ = writeln!(out, "\n## Normalized matrix\n");
        header(&mut out);
        for (name, row) in self.alternatives.iter().zip(&self.normalized_intervals) {
            let _ = write!(out, "| {name} |");
            for [lo, hi] in row {
                let _ = write!(out, " [{lo:.4}, {hi:.4}] |");
            }
            out.push('\n');
        }

        let _ = writeln!(out, "\n## Kernel and greyness form\n");
        header(&mut out);
        for (i, name) in self.alternatives.iter().enumerate() {
            let _ = write!(out, "| {name} |");
            for j in 0..self.attributes.len() {
                let _ = write!(
                    out,
                    " ({:.4}, {:.4}) |",
                    self.kernel_matrix[i][j], self.greyness_matrix[i][j]
                );
            }
            out.push('\n');
        }

        let _ = writeln!(out, "\n## Propagated matrix\n");
        header(&mut out);
        for (i, name) in self.alternatives.iter().enumerate() {
            let _ = write!(out, "| {name} |");
            for j in 0..self.attributes.len() {
                let _ = write!(
                    out,
                    " ({:.4}, {:.4}) |",
                    self.propagated_kernel[i][j], self.propagated_greyness[i][j]
                );
            }
            out.push('\n');
        }

        let _ = writeln!(out, "\n## Scores\n");
        let _ = writeln!(out, "| alternative | kernel | greyness | delta |");
        let _ = writeln!(out, "|---|---|---|---|");
        for row in &self.scores {
            let _ = writeln!(
                out,
                "| {} | {:.4} | {:.4} | {:.4} |",
                row.alternative, row.kernel, row.greyness, row.delta
            );
        }

        let _ = writeln!(out, "\nRanking: {}", self.order.join(" > "));
        if !self.warnings.is_empty() {
            let _ = writeln!(out, "\n## Warnings\n");
            for warning in &self.warnings {
                let _ = writeln!(out, "- {warning}");
            }
        }
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "decision report");

        let _ = writeln!(out, "\nattribute ranges (min, max, width):");
        for (name, range) in self.attributes.iter().zip(&self.ranges) {
            let _ = writeln!(
                out,
                "  {name}: {:.4}, {:.4}, {:.4}",
                range.min, range.max, range.width
            );
        }

        let _ = writeln!(out, "\nnormalized matrix:");
        for (name, row) in self.alternatives.iter().zip(&self.normalized_intervals) {
            let cells: Vec<String> = row
                .iter()
                .map(|[lo, hi]| format!("[{lo:.4}, {hi:.4}]"))
                .collect();
            let _ = writeln!(out, "  {name}: {}", cells.join("  "));
        }

        let _ = writeln!(out, "\nkernel/greyness form:");
        for (i, name) in self.alternatives.iter().enumerate() {
            let cells: Vec<String> = (0..self.attributes.len())
                .map(|j| {
                    format!(
                        "({:.4}, {:.4})",
                        self.kernel_matrix[i][j], self.greyness_matrix[i][j]
                    )
                })
                .collect();
            let _ = writeln!(out, "  {name}: {}", cells.join("  "));
        }

        let _ = writeln!(out, "\npropagated matrix:");
        for (i, name) in self.alternatives.iter().enumerate() {
            let cells: Vec<String> = (0..self.attributes.len())
                .map(|j| {
                    format!(
                        "({:.4}, {:.4})",
                        self.propagated_kernel[i][j], self.propagated_greyness[i][j]
                    )
                })
                .collect();
            let _ = writeln!(out, "  {name}: {}", cells.join("  "));
        }

        let _ = writeln!(out, "\nscores (kernel, greyness, delta, rank):");
        for row in &self.scores {
            let _ = writeln!(
                out,
                "  {}: {:.4}, {:.4}, {:.4}, {}",
                row.alternative, row.kernel, row.greyness, row.delta, row.rank
            );
        }

        let _ = writeln!(out, "\nranking: {}", self.order.join(" > "));
        for warning in &self.warnings {
            let _ = writeln!(out, "warning: {warning}");
        }
        out
    }
}

/// Renders a solve output in the requested format.
pub fn emit_report(solution: &Solution, format: ReportFormat) -> Result<Vec<u8>, IoError> {
    Report::from_solution(solution).render(format)
}
