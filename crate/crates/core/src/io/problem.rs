//! The decision-problem document: JSON schema and CSV microformat.

use serde::{Deserialize, Serialize};

use crate::decision::{weights_from_intervals, Attribute, AttributeKind, DecisionProblem};
use crate::grey::{GreyInterval, GreyNumber};
use crate::matrix::GreyMatrix;

use super::{IoError, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemFormat {
    Json,
    Csv,
}

/// Serialized form of a decision problem.
///
/// `matrix[i][j]` is the `[lo, hi]` evaluation of alternative `i` under
/// attribute `j`. The influence matrices are optional; a missing kernel
/// matrix defaults to the identity and a missing greyness matrix to zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub schema_version: String,
    pub alternatives: Vec<String>,
    pub attributes: Vec<AttributeDocument>,
    pub matrix: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub influence_kernel: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub influence_greyness: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttributeDocument {
    pub name: String,
    pub kind: String,
    pub weight_interval: [f64; 2],
}

/// Parses and validates a problem document into a [`DecisionProblem`].
pub fn parse_problem(data: &[u8], format: ProblemFormat) -> Result<DecisionProblem, IoError> {
    let document = match format {
        ProblemFormat::Json => serde_json::from_slice::<ProblemDocument>(data)?,
        ProblemFormat::Csv => parse_csv_document(data)?,
    };
    document.into_problem()
}

/// Serializes a problem back into document form. Weight intervals are
/// reconstructed from the grey weights.
pub fn problem_to_document(problem: &DecisionProblem) -> ProblemDocument {
    let attributes = problem
        .attributes()
        .iter()
        .map(|a| {
            let interval = a.weight.to_interval();
            AttributeDocument {
                name: a.name.clone(),
                kind: a.kind.to_string(),
                weight_interval: [interval.lower, interval.upper],
            }
        })
        .collect();
    let matrix = problem
        .matrix()
        .iter()
        .map(|row| row.iter().map(|iv| [iv.lower, iv.upper]).collect())
        .collect();
    let m = problem.attributes().len();
    let influence = problem.influence();
    ProblemDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        alternatives: problem.alternatives().to_vec(),
        attributes,
        matrix,
        influence_kernel: Some(
            (0..m)
                .map(|i| (0..m).map(|j| influence.get(i, j).kernel).collect())
                .collect(),
        ),
        influence_greyness: Some(
            (0..m)
                .map(|i| (0..m).map(|j| influence.get(i, j).greyness).collect())
                .collect(),
        ),
    }
}

impl ProblemDocument {
    pub fn into_problem(self) -> Result<DecisionProblem, IoError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(IoError::Invalid(format!(
                "unsupported schema_version {:?} (expected {SCHEMA_VERSION:?})",
                self.schema_version
            )));
        }
        let n = self.alternatives.len();
        let m = self.attributes.len();
        if n == 0 || m == 0 {
            return Err(IoError::Invalid(
                "document needs at least one alternative and one attribute".to_string(),
            ));
        }

        let mut kinds = Vec::with_capacity(m);
        let mut weight_intervals = Vec::with_capacity(m);
        for (j, attribute) in self.attributes.iter().enumerate() {
            let kind = match attribute.kind.as_str() {
                "benefit" => AttributeKind::Benefit,
                "cost" => AttributeKind::Cost,
                other => {
                    return Err(IoError::Invalid(format!(
                        "attribute {} ({:?}): unknown kind {other:?} (expected \"benefit\" or \"cost\")",
                        j + 1,
                        attribute.name
                    )))
                }
            };
            kinds.push(kind);
            let [lo, hi] = attribute.weight_interval;
            let interval = GreyInterval::new(lo, hi).map_err(|e| {
                IoError::Invalid(format!(
                    "attribute {} ({:?}): {e}",
                    j + 1,
                    attribute.name
                ))
            })?;
            weight_intervals.push(interval);
        }
        let weights = weights_from_intervals(&weight_intervals)?;
        let attributes: Vec<Attribute> = self
            .attributes
            .iter()
            .zip(kinds)
            .zip(weights)
            .map(|((doc, kind), weight)| Attribute {
                name: doc.name.clone(),
                kind,
                weight,
            })
            .collect();

        if self.matrix.len() != n {
            return Err(IoError::Invalid(format!(
                "matrix has {} rows, expected {n} (one per alternative)",
                self.matrix.len()
            )));
        }
        let mut matrix = Vec::with_capacity(n);
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != m {
                return Err(IoError::Invalid(format!(
                    "matrix row {} ({}) has {} cells, expected {m}",
                    i + 1,
                    self.alternatives[i],
                    row.len()
                )));
            }
            let mut out = Vec::with_capacity(m);
            for (j, &[lo, hi]) in row.iter().enumerate() {
                let interval = GreyInterval::new(lo, hi).map_err(|e| {
                    IoError::Invalid(format!(
                        "matrix cell at row {} ({}), column {} ({}): {e}",
                        i + 1,
                        self.alternatives[i],
                        j + 1,
                        self.attributes[j].name
                    ))
                })?;
                out.push(interval);
            }
            matrix.push(out);
        }

        let influence = influence_from_parts(
            self.influence_kernel.as_deref(),
            self.influence_greyness.as_deref(),
            m,
        )?;

        Ok(DecisionProblem::new(
            self.alternatives,
            attributes,
            matrix,
            influence,
        )?)
    }
}

fn influence_from_parts(
    kernel: Option<&[Vec<f64>]>,
    greyness: Option<&[Vec<f64>]>,
    m: usize,
) -> Result<GreyMatrix, IoError> {
    let check_shape = |name: &str, rows: &[Vec<f64>]| -> Result<(), IoError> {
        if rows.len() != m || rows.iter().any(|r| r.len() != m) {
            return Err(IoError::Invalid(format!(
                "{name} must be a {m}x{m} matrix"
            )));
        }
        Ok(())
    };
    if let Some(rows) = kernel {
        check_shape("influence_kernel", rows)?;
    }
    if let Some(rows) = greyness {
        check_shape("influence_greyness", rows)?;
    }
    Ok(GreyMatrix::from_fn(m, m, |i, j| {
        let k = kernel.map_or(if i == j { 1.0 } else { 0.0 }, |rows| rows[i][j]);
        let g = greyness.map_or(0.0, |rows| rows[i][j]);
        GreyNumber { kernel: k, greyness: g }
    }))
}

/// CSV layout: a header row of `name:kind` attribute labels, one row per
/// alternative with `lo..hi` cells, and a trailing `weights` row. The
/// influence matrix is not representable in CSV and defaults to the
/// identity.
fn parse_csv_document(data: &[u8]) -> Result<ProblemDocument, IoError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(data);
    let records: Vec<csv::StringRecord> = reader.records().collect::<Result<_, _>>()?;
    if records.len() < 3 {
        return Err(IoError::Invalid(
            "CSV needs a header row, at least one alternative row, and a weights row".to_string(),
        ));
    }

    let header = &records[0];
    if header.len() < 2 {
        return Err(IoError::Invalid(
            "header row needs at least one name:kind attribute label".to_string(),
        ));
    }
    let mut attribute_labels = Vec::new();
    for (j, cell) in header.iter().enumerate().skip(1) {
        let Some((name, kind)) = cell.rsplit_once(':') else {
            return Err(IoError::Invalid(format!(
                "header column {}: expected name:kind, got {cell:?}",
                j + 1
            )));
        };
        attribute_labels.push((name.to_string(), kind.to_string()));
    }
    let m = attribute_labels.len();

    let body = &records[1..records.len() - 1];
    let weights_row = &records[records.len() - 1];
    if weights_row.get(0) != Some("weights") {
        return Err(IoError::Invalid(format!(
            "last row must start with \"weights\", got {:?}",
            weights_row.get(0).unwrap_or("")
        )));
    }

    let parse_cell = |cell: &str, row: usize, col: usize| -> Result<[f64; 2], IoError> {
        let context = || format!("row {row}, column {col}: ");
        let Some((lo, hi)) = cell.split_once("..") else {
            return Err(IoError::Invalid(format!(
                "{}expected lo..hi interval, got {cell:?}",
                context()
            )));
        };
        let lo: f64 = lo
            .trim()
            .parse()
            .map_err(|e| IoError::Invalid(format!("{}bad lower bound: {e}", context())))?;
        let hi: f64 = hi
            .trim()
            .parse()
            .map_err(|e| IoError::Invalid(format!("{}bad upper bound: {e}", context())))?;
        if lo > hi {
            return Err(IoError::Invalid(format!(
                "{}reversed interval {cell:?}",
                context()
            )));
        }
        Ok([lo, hi])
    };

    let mut alternatives = Vec::new();
    let mut matrix = Vec::new();
    for (i, record) in body.iter().enumerate() {
        let row_number = i + 2;
        if record.len() != m + 1 {
            return Err(IoError::Invalid(format!(
                "row {row_number} has {} cells, expected {}",
                record.len(),
                m + 1
            )));
        }
        alternatives.push(record[0].to_string());
        let mut row = Vec::with_capacity(m);
        for j in 0..m {
            row.push(parse_cell(&record[j + 1], row_number, j + 2)?);
        }
        matrix.push(row);
    }

    if weights_row.len() != m + 1 {
        return Err(IoError::Invalid(format!(
            "weights row has {} cells, expected {}",
            weights_row.len(),
            m + 1
        )));
    }
    let weights_row_number = records.len();
    let mut attributes = Vec::with_capacity(m);
    for (j, (name, kind)) in attribute_labels.into_iter().enumerate() {
        let weight_interval = parse_cell(&weights_row[j + 1], weights_row_number, j + 2)?;
        attributes.push(AttributeDocument {
            name,
            kind,
            weight_interval,
        });
    }

    Ok(ProblemDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        alternatives,
        attributes,
        matrix,
        influence_kernel: None,
        influence_greyness: None,
    })
}
