//! Deterministic text and JSON report emitters.
//!
//! The JSON surface is the machine contract: arrays of flat objects with
//! stable key names, `kappa` serialized as one of `"-inf"`, `"0"`, `"1"`,
//! `"2"` (never a float). Output order equals input order and identical
//! invocations produce identical bytes.

use serde::Serialize;

use lefkappa_core::{ConventionMode, EnumerationReport, RecordOutcome, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct JsonRow {
    id: Option<String>,
    kind: &'static str,
    inputs: String,
    chi: Option<i64>,
    sigma: Option<i64>,
    k_squared: Option<i64>,
    chi_h: Option<String>,
    kappa: Option<&'static str>,
    provenance: Option<String>,
    notes: Vec<String>,
    mode: Option<&'static str>,
    error: Option<String>,
}

fn json_row(outcome: &RecordOutcome) -> JsonRow {
    JsonRow {
        id: outcome.id.clone(),
        kind: outcome.kind.label(),
        inputs: outcome.summary.clone(),
        chi: outcome.chi,
        sigma: outcome.sigma,
        k_squared: outcome.k_squared,
        chi_h: outcome.chi_h.map(|r| r.to_string()),
        kappa: outcome.verdict.as_ref().map(|v| v.dim.label()),
        provenance: outcome.verdict.as_ref().map(|v| v.provenance.label()),
        notes: notes_of(outcome),
        mode: outcome.mode.map(ConventionMode::label),
        error: outcome.error.clone(),
    }
}

fn notes_of(outcome: &RecordOutcome) -> Vec<String> {
    let mut notes: Vec<String> = outcome
        .verdict
        .as_ref()
        .map(|v| v.notes.clone())
        .unwrap_or_default();
    for violation in &outcome.violations {
        notes.push(format!("violation: {violation}"));
    }
    notes
}

fn opt(value: Option<String>) -> String {
    value.unwrap_or_else(|| "-".to_string())
}

fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let push_row = |cells: Vec<String>, out: &mut String| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    push_row(header.iter().map(|h| h.to_string()).collect(), &mut out);
    for row in rows {
        push_row(row.clone(), &mut out);
    }
    out
}

fn notes_cell(outcome: &RecordOutcome) -> String {
    let mut parts = notes_of(outcome);
    if let Some(error) = &outcome.error {
        parts.push(format!("error: {error}"));
    }
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join("; ")
    }
}

fn classify_text_row(outcome: &RecordOutcome) -> Vec<String> {
    vec![
        opt(outcome.id.clone()),
        outcome.kind.label().to_string(),
        outcome.summary.clone(),
        opt(outcome.chi.map(|v| v.to_string())),
        opt(outcome.sigma.map(|v| v.to_string())),
        opt(outcome.k_squared.map(|v| v.to_string())),
        opt(outcome.verdict.as_ref().map(|v| v.dim.label().to_string())),
        opt(outcome.verdict.as_ref().map(|v| v.provenance.label())),
        notes_cell(outcome),
    ]
}

/// Classification rows (the `classify` command and the record table of
/// `check`).
pub fn emit_classification(outcomes: &[RecordOutcome], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let rows: Vec<JsonRow> = outcomes.iter().map(json_row).collect();
            let mut out = serde_json::to_string_pretty(&rows).expect("serializable rows");
            out.push('\n');
            out
        }
        OutputFormat::Text => {
            let header = [
                "id",
                "kind",
                "inputs",
                "chi",
                "sigma",
                "k_squared",
                "kappa",
                "provenance",
                "notes",
            ];
            let rows: Vec<Vec<String>> = outcomes.iter().map(classify_text_row).collect();
            render_table(&header, &rows)
        }
    }
}

/// Invariant rows (`invariants` command): no classification columns.
pub fn emit_invariants(outcomes: &[RecordOutcome], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let rows: Vec<JsonRow> = outcomes.iter().map(json_row).collect();
            let mut out = serde_json::to_string_pretty(&rows).expect("serializable rows");
            out.push('\n');
            out
        }
        OutputFormat::Text => {
            let header = [
                "id",
                "kind",
                "inputs",
                "chi",
                "sigma",
                "k_squared",
                "chi_h",
                "admissible",
                "notes",
            ];
            let rows: Vec<Vec<String>> = outcomes
                .iter()
                .map(|o| {
                    vec![
                        opt(o.id.clone()),
                        o.kind.label().to_string(),
                        o.summary.clone(),
                        opt(o.chi.map(|v| v.to_string())),
                        opt(o.sigma.map(|v| v.to_string())),
                        opt(o.k_squared.map(|v| v.to_string())),
                        opt(o.chi_h.map(|r| r.to_string())),
                        opt(o
                            .chi_h
                            .map(|r| if r.is_integer() { "yes" } else { "no" }.to_string())),
                        notes_cell(o),
                    ]
                })
                .collect();
            render_table(&header, &rows)
        }
    }
}

#[derive(Serialize)]
struct JsonCheckReport {
    records: Vec<JsonRow>,
    failures: Vec<String>,
}

/// Full verification report (`check` command).
pub fn emit_check(report: &VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let payload = JsonCheckReport {
                records: report.outcomes.iter().map(json_row).collect(),
                failures: report.failures.clone(),
            };
            let mut out = serde_json::to_string_pretty(&payload).expect("serializable report");
            out.push('\n');
            out
        }
        OutputFormat::Text => {
            let mut out = emit_classification(&report.outcomes, OutputFormat::Text);
            out.push('\n');
            if report.failures.is_empty() {
                out.push_str("no failures\n");
            } else {
                out.push_str(&format!("failures ({}):\n", report.failures.len()));
                for failure in &report.failures {
                    out.push_str(&format!("  - {failure}\n"));
                }
            }
            out
        }
    }
}

#[derive(Serialize)]
struct JsonEnumParameters {
    g_min: u32,
    g_max: u32,
    n_max: i64,
}

#[derive(Serialize)]
struct JsonEnumRecord {
    g: u32,
    a: i64,
    s: Vec<i64>,
    n: i64,
    sigma: i64,
    k_squared: i64,
    kappa: &'static str,
    provenance: String,
    notes: Vec<String>,
}

#[derive(Serialize)]
struct JsonEnumReport {
    parameters: JsonEnumParameters,
    candidates_visited: u64,
    admissible_count: usize,
    records: Vec<JsonEnumRecord>,
    failures: Vec<String>,
}

/// Enumeration report (`enumerate` command). Worker count and candidate
/// budget are deliberately absent so reruns with different parallelism are
/// byte-identical.
pub fn emit_enumeration(report: &EnumerationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let payload = JsonEnumReport {
                parameters: JsonEnumParameters {
                    g_min: report.params.g_min,
                    g_max: report.params.g_max,
                    n_max: report.params.n_max,
                },
                candidates_visited: report.candidates_visited,
                admissible_count: report.admissible_count,
                records: report
                    .records
                    .iter()
                    .map(|r| JsonEnumRecord {
                        g: r.data.fiber_genus(),
                        a: r.data.nonseparating(),
                        s: r.data.separating().to_vec(),
                        n: r.data.n(),
                        sigma: r.sigma,
                        k_squared: r.k_squared,
                        kappa: r.verdict.dim.label(),
                        provenance: r.verdict.provenance.label(),
                        notes: r.verdict.notes.clone(),
                    })
                    .collect(),
                failures: report.failures.clone(),
            };
            let mut out = serde_json::to_string_pretty(&payload).expect("serializable report");
            out.push('\n');
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "parameters: g_min={} g_max={} n_max={}\ncandidates_visited: {}\nadmissible_count: {}\n",
                report.params.g_min,
                report.params.g_max,
                report.params.n_max,
                report.candidates_visited,
                report.admissible_count
            );
            let header = [
                "g",
                "a",
                "s",
                "n",
                "sigma",
                "k_squared",
                "kappa",
                "provenance",
                "notes",
            ];
            let rows: Vec<Vec<String>> = report
                .records
                .iter()
                .map(|r| {
                    vec![
                        r.data.fiber_genus().to_string(),
                        r.data.nonseparating().to_string(),
                        format!("{:?}", r.data.separating()),
                        r.data.n().to_string(),
                        r.sigma.to_string(),
                        r.k_squared.to_string(),
                        r.verdict.dim.label().to_string(),
                        r.verdict.provenance.label(),
                        if r.verdict.notes.is_empty() {
                            "-".to_string()
                        } else {
                            r.verdict.notes.join("; ")
                        },
                    ]
                })
                .collect();
            out.push_str(&render_table(&header, &rows));
            if report.failures.is_empty() {
                out.push_str("no failures\n");
            } else {
                out.push_str(&format!("failures ({}):\n", report.failures.len()));
                for failure in &report.failures {
                    out.push_str(&format!("  - {failure}\n"));
                }
            }
            out
        }
    }
}

/// One pencil record's conversion result (`convert` command).
#[derive(Clone, Debug, Serialize)]
pub struct ConvertOutcome {
    pub id: Option<String>,
    pub pencil: String,
    /// The genus-`k` fibration over the sphere obtained by blowing up the
    /// base locus.
    pub blow_up: String,
    /// Summary of the same-id fibration record used for the genus
    /// conversion, when one exists.
    pub fibration: Option<String>,
    pub converted_genus: Option<i64>,
    pub pencil_genus: i64,
    pub agrees: Option<bool>,
    pub mode: &'static str,
    pub error: Option<String>,
}

pub fn emit_convert(rows: &[ConvertOutcome], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = serde_json::to_string_pretty(rows).expect("serializable rows");
            out.push('\n');
            out
        }
        OutputFormat::Text => {
            let header = [
                "id",
                "pencil",
                "blow_up",
                "fibration",
                "converted_k",
                "pencil_k",
                "agrees",
                "mode",
                "notes",
            ];
            let text_rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        opt(r.id.clone()),
                        r.pencil.clone(),
                        r.blow_up.clone(),
                        opt(r.fibration.clone()),
                        opt(r.converted_genus.map(|v| v.to_string())),
                        r.pencil_genus.to_string(),
                        opt(r.agrees.map(|v| v.to_string())),
                        r.mode.to_string(),
                        opt(r.error.as_ref().map(|e| format!("error: {e}"))),
                    ]
                })
                .collect();
            render_table(&header, &text_rows)
        }
    }
}
