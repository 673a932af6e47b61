//! Machine-readable reports.
//!
//! Every report is a plain struct serialized by field order with no maps and
//! no timing data, so identical invocations print identical bytes whatever
//! the worker count. Text rendering is a line-per-fact view of the same
//! content.

use serde::Serialize;

use narylab::audit::{AuditAssessment, AuditReport, AuditTier};
use narylab::properties::Witness;
use narylab::reduction::{AckermanWitness, DoublingMismatch, IrreducibilityEvidence};
use narylab::Elem;

use crate::document::TableDocument;

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessDoc {
    Associativity {
        tuple: Vec<Elem>,
        window: usize,
        leftmost: Elem,
        grouped: Elem,
    },
    Idempotency {
        element: Elem,
        value: Elem,
    },
    Symmetry {
        tuple: Vec<Elem>,
        position: usize,
        value: Elem,
        swapped: Elem,
    },
    Quasitriviality {
        tuple: Vec<Elem>,
        value: Elem,
    },
    Nondecreasing {
        tuple: Vec<Elem>,
        coordinate: usize,
        value: Elem,
        bumped: Elem,
    },
    Monotonicity {
        coordinate: usize,
        fixed: Vec<Elem>,
        points: [Elem; 3],
        values: [Elem; 3],
    },
    Neutral {
        element: Elem,
        position: usize,
        input: Elem,
        value: Elem,
    },
}

impl From<&Witness> for WitnessDoc {
    fn from(w: &Witness) -> WitnessDoc {
        match w {
            Witness::Associativity {
                tuple,
                window,
                leftmost,
                grouped,
            } => WitnessDoc::Associativity {
                tuple: tuple.clone(),
                window: *window,
                leftmost: *leftmost,
                grouped: *grouped,
            },
            Witness::Idempotency { element, value } => WitnessDoc::Idempotency {
                element: *element,
                value: *value,
            },
            Witness::Symmetry {
                tuple,
                position,
                value,
                swapped,
            } => WitnessDoc::Symmetry {
                tuple: tuple.clone(),
                position: *position,
                value: *value,
                swapped: *swapped,
            },
            Witness::Quasitriviality { tuple, value } => WitnessDoc::Quasitriviality {
                tuple: tuple.clone(),
                value: *value,
            },
            Witness::Nondecreasing {
                tuple,
                coordinate,
                value,
                bumped,
            } => WitnessDoc::Nondecreasing {
                tuple: tuple.clone(),
                coordinate: *coordinate,
                value: *value,
                bumped: *bumped,
            },
            Witness::Monotonicity {
                coordinate,
                fixed,
                points,
                values,
            } => WitnessDoc::Monotonicity {
                coordinate: *coordinate,
                fixed: fixed.clone(),
                points: *points,
                values: *values,
            },
            Witness::Neutral {
                element,
                position,
                input,
                value,
            } => WitnessDoc::Neutral {
                element: *element,
                position: *position,
                input: *input,
                value: *value,
            },
        }
    }
}

impl WitnessDoc {
    fn text(&self) -> String {
        match self {
            WitnessDoc::Associativity {
                tuple,
                window,
                leftmost,
                grouped,
            } => format!("tuple={tuple:?} window={window} leftmost={leftmost} grouped={grouped}"),
            WitnessDoc::Idempotency { element, value } => {
                format!("element={element} value={value}")
            }
            WitnessDoc::Symmetry {
                tuple,
                position,
                value,
                swapped,
            } => {
                format!(
                    "tuple={tuple:?} swap={position},{} value={value} swapped={swapped}",
                    position + 1
                )
            }
            WitnessDoc::Quasitriviality { tuple, value } => {
                format!("tuple={tuple:?} value={value}")
            }
            WitnessDoc::Nondecreasing {
                tuple,
                coordinate,
                value,
                bumped,
            } => {
                format!("tuple={tuple:?} coordinate={coordinate} value={value} bumped={bumped}")
            }
            WitnessDoc::Monotonicity {
                coordinate,
                fixed,
                points,
                values,
            } => format!(
                "coordinate={coordinate} fixed={fixed:?} points={points:?} values={values:?}"
            ),
            WitnessDoc::Neutral {
                element,
                position,
                input,
                value,
            } => format!("element={element} position={position} input={input} value={value}"),
        }
    }
}

fn table_text(doc: &TableDocument) -> String {
    let values: Vec<String> = doc.table.iter().map(usize::to_string).collect();
    let mut s = format!("m={} n={} [{}]", doc.m, doc.n, values.join(","));
    if let Some(labels) = &doc.labels {
        s.push_str(&format!(" labels={labels:?}"));
    }
    if let Some(unplaced) = &doc.unplaced {
        if !unplaced.is_empty() {
            s.push_str(&format!(" unplaced={unplaced:?}"));
        }
    }
    s
}

#[derive(Debug, Serialize)]
pub struct PredicateResult {
    pub property: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub command: &'static str,
    pub table: TableDocument,
    pub requested: Vec<String>,
    pub results: Vec<PredicateResult>,
    pub neutral_elements: Vec<Elem>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct AckermanDoc {
    pub b1: Elem,
    pub b2: Elem,
}

impl From<&AckermanWitness> for AckermanDoc {
    fn from(w: &AckermanWitness) -> Self {
        AckermanDoc { b1: w.b1, b2: w.b2 }
    }
}

#[derive(Debug, Serialize)]
pub struct EvidenceDoc {
    pub oracle_exhausted: bool,
    pub searched_class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ackerman: Option<AckermanDoc>,
}

impl From<&IrreducibilityEvidence> for EvidenceDoc {
    fn from(e: &IrreducibilityEvidence) -> Self {
        EvidenceDoc {
            oracle_exhausted: true,
            searched_class: e.searched_class.to_string(),
            note: e.oracle_note.clone(),
            ackerman: e.ackerman.as_ref().map(AckermanDoc::from),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReduceReport {
    pub command: &'static str,
    pub table: TableDocument,
    pub strategy_requested: String,
    pub g_class: String,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neutral_element: Option<Elem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<TableDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<TableDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<EvidenceDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct DeriveReport {
    pub command: &'static str,
    pub input: TableDocument,
    pub arity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<TableDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct DoublingDoc {
    pub first_placement: usize,
    pub second_placement: usize,
    pub tuple: Vec<Elem>,
    pub first_value: Elem,
    pub second_value: Elem,
}

impl From<&DoublingMismatch> for DoublingDoc {
    fn from(m: &DoublingMismatch) -> Self {
        DoublingDoc {
            first_placement: m.first,
            second_placement: m.second,
            tuple: m.tuple.clone(),
            first_value: m.first_value,
            second_value: m.second_value,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ArityReduceReport {
    pub command: &'static str,
    pub input: TableDocument,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<TableDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<DoublingDoc>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct ExtremalReport {
    pub command: &'static str,
    pub table: TableDocument,
    pub mode: String,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<TableDocument>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct EnumerateReport {
    pub command: &'static str,
    pub m: usize,
    pub n: usize,
    pub class: String,
    pub dedup: &'static str,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tables: Option<Vec<TableDocument>>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub command: &'static str,
    pub table: TableDocument,
    pub g_class: String,
    pub count: usize,
    pub reductions: Vec<TableDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct ViolationDoc {
    pub table: TableDocument,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct TheoremReportDoc {
    pub theorem: String,
    pub tier: &'static str,
    pub description: &'static str,
    pub applicable: bool,
    pub instances: u64,
    pub violations: Vec<ViolationDoc>,
    pub expected_matched: usize,
    pub unexpected: Vec<ViolationDoc>,
    pub missing_expected: Vec<TableDocument>,
    pub ok: bool,
}

impl TheoremReportDoc {
    pub fn build(report: &AuditReport, assessment: &AuditAssessment) -> TheoremReportDoc {
        let violation_doc = |v: &narylab::audit::Violation| ViolationDoc {
            table: TableDocument::from_table(&v.table),
            detail: v.detail.clone(),
        };
        TheoremReportDoc {
            theorem: report.theorem.code().to_string(),
            tier: match report.theorem.tier() {
                AuditTier::Invariant => "invariant",
                AuditTier::ReportOnly => "report-only",
            },
            description: report.theorem.description(),
            applicable: report.applicable,
            instances: report.instances,
            violations: report.violations.iter().map(violation_doc).collect(),
            expected_matched: assessment.expected.len(),
            unexpected: assessment.unexpected.iter().map(violation_doc).collect(),
            missing_expected: assessment
                .missing
                .iter()
                .map(|e| TableDocument {
                    m: e.m,
                    n: e.arity,
                    table: e.values.clone(),
                    labels: None,
                    unplaced: None,
                })
                .collect(),
            ok: !report.applicable || assessment.acceptable(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AuditCmdReport {
    pub command: &'static str,
    pub m: usize,
    pub n: usize,
    pub reports: Vec<TheoremReportDoc>,
    pub ok: bool,
}

/// Line-oriented rendering of each report.
pub trait TextRender {
    fn text(&self) -> String;
}

impl TextRender for CheckReport {
    fn text(&self) -> String {
        let mut out = format!("table {}\n", table_text(&self.table));
        for r in &self.results {
            match &r.witness {
                None if r.holds => out.push_str(&format!("{}: holds\n", r.property)),
                None => out.push_str(&format!("{}: fails\n", r.property)),
                Some(w) => out.push_str(&format!("{}: fails  witness: {}\n", r.property, w.text())),
            }
        }
        out.push_str(&format!("neutral elements: {:?}\n", self.neutral_elements));
        out.push_str(&format!("ok: {}\n", self.ok));
        out
    }
}

impl TextRender for ReduceReport {
    fn text(&self) -> String {
        let mut out = format!(
            "table {}\nstrategy requested: {}\n",
            table_text(&self.table),
            self.strategy_requested
        );
        if !self.g_class.is_empty() {
            out.push_str(&format!("generator class: {}\n", self.g_class));
        }
        out.push_str(&format!("outcome: {}\n", self.outcome));
        if let Some(strategy) = self.strategy {
            out.push_str(&format!("strategy: {strategy}\n"));
        }
        if let Some(e) = self.neutral_element {
            out.push_str(&format!("neutral element: {e}\n"));
        }
        if let Some(g) = &self.g {
            out.push_str(&format!("g {}\n", table_text(g)));
        }
        if let Some(ext) = &self.extension {
            out.push_str(&format!("extension {}\n", table_text(ext)));
        }
        if let Some(ev) = &self.evidence {
            out.push_str(&format!(
                "evidence: oracle exhausted over class {}\n",
                if ev.searched_class.is_empty() {
                    "unrestricted"
                } else {
                    &ev.searched_class
                }
            ));
            if let Some(note) = &ev.note {
                out.push_str(&format!("note: {note}\n"));
            }
            if let Some(a) = &ev.ackerman {
                out.push_str(&format!("parity pair: ({}, {})\n", a.b1, a.b2));
            }
        }
        if let Some(reason) = &self.reason {
            out.push_str(&format!("reason: {reason}\n"));
        }
        out.push_str(&format!("ok: {}\n", self.ok));
        out
    }
}

impl TextRender for DeriveReport {
    fn text(&self) -> String {
        let mut out = format!("input {}\narity: {}\n", table_text(&self.input), self.arity);
        if let Some(result) = &self.result {
            out.push_str(&format!("result {}\n", table_text(result)));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("not associative  witness: {}\n", w.text()));
        }
        out.push_str(&format!("ok: {}\n", self.ok));
        out
    }
}

impl TextRender for ArityReduceReport {
    fn text(&self) -> String {
        let mut out = format!(
            "input {}\noutcome: {}\n",
            table_text(&self.input),
            self.outcome
        );
        if let Some(result) = &self.result {
            out.push_str(&format!("result {}\n", table_text(result)));
        }
        if let Some(m) = &self.mismatch {
            out.push_str(&format!(
                "mismatch: placements {},{} at {:?}: {} vs {}\n",
                m.first_placement, m.second_placement, m.tuple, m.first_value, m.second_value
            ));
        }
        out.push_str(&format!("ok: {}\n", self.ok));
        out
    }
}

impl TextRender for ExtremalReport {
    fn text(&self) -> String {
        let mut out = format!(
            "table {}\nmode: {}\noutcome: {}\n",
            table_text(&self.table),
            self.mode,
            self.outcome
        );
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness {}\n", table_text(w)));
        }
        out.push_str(&format!("ok: {}\n", self.ok));
        out
    }
}

impl TextRender for EnumerateReport {
    fn text(&self) -> String {
        let mut out = format!(
            "m={} n={} class={} dedup={}\ncount: {}\n",
            self.m,
            self.n,
            if self.class.is_empty() {
                "unrestricted"
            } else {
                &self.class
            },
            self.dedup,
            self.count
        );
        if let Some(tables) = &self.tables {
            for t in tables {
                out.push_str(&format!("{}\n", table_text(t)));
            }
        }
        out.push_str(&format!("ok: {}\n", self.ok));
        out
    }
}

impl TextRender for OracleReport {
    fn text(&self) -> String {
        let mut out = format!(
            "table {}\nclass: {}\nreductions: {}\n",
            table_text(&self.table),
            if self.g_class.is_empty() {
                "unrestricted"
            } else {
                &self.g_class
            },
            self.count
        );
        for t in &self.reductions {
            out.push_str(&format!("{}\n", table_text(t)));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("note: {note}\n"));
        }
        out.push_str(&format!("ok: {}\n", self.ok));
        out
    }
}

impl TextRender for AuditCmdReport {
    fn text(&self) -> String {
        let mut out = format!("audit grid m={} n={}\n", self.m, self.n);
        for r in &self.reports {
            if !r.applicable {
                out.push_str(&format!("{}: not applicable at this size\n", r.theorem));
                continue;
            }
            out.push_str(&format!(
                "{} [{}]: instances={} violations={} expected={} unexpected={} missing={} -> {}\n",
                r.theorem,
                r.tier,
                r.instances,
                r.violations.len(),
                r.expected_matched,
                r.unexpected.len(),
                r.missing_expected.len(),
                if r.ok { "ok" } else { "FAIL" }
            ));
            for v in &r.violations {
                out.push_str(&format!(
                    "  violation {}: {}\n",
                    table_text(&v.table),
                    v.detail
                ));
            }
        }
        out.push_str(&format!("ok: {}\n", self.ok));
        out
    }
}
