//! On-disk table formats.
//!
//! Two interchangeable representations:
//!
//! * JSON: `{"m": 2, "n": 3, "table": [0,1,1,0,1,0,0,1]}` with optional
//!   `labels` (one string per element, ascending chain order) and
//!   `unplaced` (elements with no chain position, e.g. adjoined neutral
//!   elements);
//! * compact text: first line `m n`, then the `m^n` values, whitespace
//!   separated. Labels and unplaced flags are JSON-only.
//!
//! Values are stored row-major with the first argument most significant.

use serde::{Deserialize, Serialize};

use narylab::table::cell_count;
use narylab::OpTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub m: usize,
    pub n: usize,
    pub table: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unplaced: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Malformed(String),
    WrongLength {
        expected: usize,
        got: usize,
    },
    ValueOutOfRange {
        index: usize,
        value: usize,
        m: usize,
    },
    BadLabels(String),
    BadUnplaced(String),
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Malformed(msg) => write!(f, "malformed table document: {msg}"),
            ParseError::WrongLength { expected, got } => {
                write!(f, "expected {expected} values, got {got}")
            }
            ParseError::ValueOutOfRange { index, value, m } => {
                write!(
                    f,
                    "value {value} at index {index} is out of range for m={m}"
                )
            }
            ParseError::BadLabels(msg) => write!(f, "bad labels: {msg}"),
            ParseError::BadUnplaced(msg) => write!(f, "bad unplaced flags: {msg}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl TableDocument {
    pub fn from_table(table: &OpTable) -> TableDocument {
        TableDocument {
            m: table.size(),
            n: table.arity(),
            table: table.values().to_vec(),
            labels: None,
            unplaced: None,
        }
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> TableDocument {
        self.labels = labels;
        self
    }

    pub fn with_unplaced(mut self, unplaced: Vec<usize>) -> TableDocument {
        self.unplaced = Some(unplaced);
        self
    }

    pub fn to_op_table(&self) -> Result<OpTable, ParseError> {
        OpTable::from_values(self.m, self.n, self.table.clone())
            .map_err(|e| ParseError::Malformed(e.to_string()))
    }

    pub fn has_unplaced(&self) -> bool {
        self.unplaced.as_ref().is_some_and(|u| !u.is_empty())
    }

    fn validate(self) -> Result<TableDocument, ParseError> {
        if self.m == 0 {
            return Err(ParseError::Malformed(
                "carrier size m must be at least 1".into(),
            ));
        }
        let expected =
            cell_count(self.m, self.n).map_err(|e| ParseError::Malformed(e.to_string()))?;
        if self.table.len() != expected {
            return Err(ParseError::WrongLength {
                expected,
                got: self.table.len(),
            });
        }
        for (index, &value) in self.table.iter().enumerate() {
            if value >= self.m {
                return Err(ParseError::ValueOutOfRange {
                    index,
                    value,
                    m: self.m,
                });
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.m {
                return Err(ParseError::BadLabels(format!(
                    "need {} labels, got {}",
                    self.m,
                    labels.len()
                )));
            }
            for (i, a) in labels.iter().enumerate() {
                if labels[..i].contains(a) {
                    return Err(ParseError::BadLabels(format!("duplicate label {a:?}")));
                }
            }
        }
        if let Some(unplaced) = &self.unplaced {
            for &e in unplaced {
                if e >= self.m {
                    return Err(ParseError::BadUnplaced(format!(
                        "element {e} is out of range for m={}",
                        self.m
                    )));
                }
            }
        }
        Ok(self)
    }
}

/// Parse either format, sniffing JSON by its leading brace.
pub fn parse_table(text: &str) -> Result<TableDocument, ParseError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let doc: TableDocument =
            serde_json::from_str(trimmed).map_err(|e| ParseError::Malformed(e.to_string()))?;
        doc.validate()
    } else {
        parse_compact(text)
    }
}

fn parse_compact(text: &str) -> Result<TableDocument, ParseError> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| ParseError::Malformed("empty input".into()))?;
    let mut head = header.split_whitespace();
    let m: usize = head
        .next()
        .ok_or_else(|| ParseError::Malformed("missing carrier size on the first line".into()))?
        .parse()
        .map_err(|_| ParseError::Malformed("carrier size is not an integer".into()))?;
    let n: usize = head
        .next()
        .ok_or_else(|| ParseError::Malformed("missing arity on the first line".into()))?
        .parse()
        .map_err(|_| ParseError::Malformed("arity is not an integer".into()))?;
    if head.next().is_some() {
        return Err(ParseError::Malformed(
            "first line must be exactly \"m n\"".into(),
        ));
    }
    let mut table = Vec::new();
    for token in lines.flat_map(str::split_whitespace) {
        let value: usize = token
            .parse()
            .map_err(|_| ParseError::Malformed(format!("bad value {token:?}")))?;
        table.push(value);
    }
    TableDocument {
        m,
        n,
        table,
        labels: None,
        unplaced: None,
    }
    .validate()
}

pub fn to_json(doc: &TableDocument) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

/// Compact text form; labels and unplaced flags are not representable here.
pub fn to_compact(doc: &TableDocument) -> String {
    let values: Vec<String> = doc.table.iter().map(usize::to_string).collect();
    format!("{} {}\n{}\n", doc.m, doc.n, values.join(" "))
}
