//! The line-oriented dataset format: parser with per-line error recovery
//! and the canonical emitter.
//!
//! Grammar: blank lines and `#` comments are ignored; every other line is
//! `<kind> key=value ...` with kinds `fibration`, `pencil`, `triple` and
//! `elliptic`. Unknown keys are errors. A malformed line produces exactly
//! one diagnostic and parsing continues with the next line.
//!
//! Emitted datasets start with the versioned header line
//! `# lefkappa-format: 1` and print each record in a fixed canonical key
//! order, so emit-parse round trips are idempotent byte for byte.

use std::fmt;

use lefkappa_core::{
    ConventionMode, EllipticDescriptor, FibrationData, FibrationFlags, PencilData, RecordPayload,
    TripleData,
};

pub const FORMAT_HEADER: &str = "# lefkappa-format: 1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatasetRecord {
    pub id: Option<String>,
    pub payload: RecordPayload,
    pub source_line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParseOutcome {
    pub records: Vec<DatasetRecord>,
    pub diagnostics: Vec<ParseDiagnostic>,
}

pub fn parse_dataset(text: &str) -> ParseOutcome {
    let mut outcome = ParseOutcome::default();
    for (index, raw) in text.lines().enumerate() {
        let line_number = index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_line(line) {
            Ok((id, payload)) => outcome.records.push(DatasetRecord {
                id,
                payload,
                source_line: line_number,
            }),
            Err(message) => outcome.diagnostics.push(ParseDiagnostic {
                line: line_number,
                message,
            }),
        }
    }
    outcome
}

struct Fields {
    entries: Vec<(String, String)>,
}

impl Fields {
    fn new<'a>(tokens: impl Iterator<Item = &'a str>) -> Result<Fields, String> {
        let mut entries: Vec<(String, String)> = Vec::new();
        for token in tokens {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got '{token}'"))?;
            if key.is_empty() {
                return Err(format!("expected key=value, got '{token}'"));
            }
            if entries.iter().any(|(k, _)| k == key) {
                return Err(format!("duplicate key '{key}'"));
            }
            entries.push((key.to_string(), value.to_string()));
        }
        Ok(Fields { entries })
    }

    fn take(&mut self, key: &str) -> Option<String> {
        let position = self.entries.iter().position(|(k, _)| k == key)?;
        Some(self.entries.remove(position).1)
    }

    fn require(&mut self, key: &str, kind: &str) -> Result<String, String> {
        self.take(key)
            .ok_or_else(|| format!("missing required key '{key}' for {kind} record"))
    }

    fn finish(self, kind: &str) -> Result<(), String> {
        match self.entries.first() {
            Some((key, _)) => Err(format!("unknown key '{key}' for {kind} record")),
            None => Ok(()),
        }
    }
}

fn integer(value: &str, key: &str) -> Result<i64, String> {
    value
        .parse::<i64>()
        .map_err(|_| format!("expected integer for {key} (found '{value}')"))
}

fn genus(value: &str, key: &str) -> Result<u32, String> {
    value
        .parse::<u32>()
        .map_err(|_| format!("expected nonnegative integer for {key} (found '{value}')"))
}

fn boolean(value: Option<String>, key: &str, default: bool) -> Result<bool, String> {
    match value.as_deref() {
        None => Ok(default),
        Some("true") => Ok(true),
        Some("false") => Ok(false),
        Some(other) => Err(format!(
            "expected true or false for {key} (found '{other}')"
        )),
    }
}

fn integer_list(value: &str) -> Result<Vec<i64>, String> {
    let inner = value
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| format!("expected bracketed integer list for s (found '{value}')"))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|entry| {
            entry
                .parse::<i64>()
                .map_err(|_| format!("expected integer list entry for s (found '{entry}')"))
        })
        .collect()
}

fn convention_mode(value: &str) -> Result<ConventionMode, String> {
    match value {
        "euler" => Ok(ConventionMode::EulerConsistent),
        "paper-literal" => Ok(ConventionMode::PaperLiteral),
        other => Err(format!(
            "expected euler or paper-literal for mode (found '{other}')"
        )),
    }
}

fn parse_line(line: &str) -> Result<(Option<String>, RecordPayload), String> {
    let mut tokens = line.split_whitespace();
    let kind = tokens.next().expect("line is non-empty");
    let mut fields = Fields::new(tokens)?;
    let id = fields.take("id");
    let payload = match kind {
        "fibration" => parse_fibration(&mut fields)?,
        "pencil" => parse_pencil(&mut fields)?,
        "triple" => parse_triple(&mut fields)?,
        "elliptic" => parse_elliptic(&mut fields)?,
        other => {
            return Err(format!(
                "unknown record kind '{other}'; expected fibration, pencil, triple or elliptic"
            ))
        }
    };
    fields.finish(kind)?;
    Ok((id, payload))
}

fn parse_fibration(fields: &mut Fields) -> Result<RecordPayload, String> {
    let g = genus(&fields.require("g", "fibration")?, "g")?;
    let h = genus(&fields.require("h", "fibration")?, "h")?;
    let a = integer(&fields.require("a", "fibration")?, "a")?;
    let s = match fields.take("s") {
        Some(value) => integer_list(&value)?,
        None => Vec::new(),
    };
    let flags = FibrationFlags {
        hyperelliptic: boolean(fields.take("hyperelliptic"), "hyperelliptic", false)?,
        spin: boolean(fields.take("spin"), "spin", false)?,
        complex: boolean(fields.take("complex"), "complex", false)?,
        minimal: boolean(fields.take("minimal"), "minimal", true)?,
    };
    FibrationData::new(g, h, a, s, flags)
        .map(RecordPayload::Fibration)
        .map_err(|e| e.to_string())
}

fn parse_pencil(fields: &mut Fields) -> Result<RecordPayload, String> {
    let k = integer(&fields.require("k", "pencil")?, "k")?;
    let a = integer(&fields.require("A", "pencil")?, "A")?;
    let b = integer(&fields.require("B", "pencil")?, "B")?;
    let chi = integer(&fields.require("chi", "pencil")?, "chi")?;
    let sigma = integer(&fields.require("sigma", "pencil")?, "sigma")?;
    let k_dot_h = match fields.take("kdh") {
        Some(value) => Some(integer(&value, "kdh")?),
        None => None,
    };
    let minimal = boolean(fields.take("minimal"), "minimal", true)?;
    let mode = match fields.take("mode") {
        Some(value) => Some(convention_mode(&value)?),
        None => None,
    };
    let data = PencilData::new(k, a, b, chi, sigma, k_dot_h).map_err(|e| e.to_string())?;
    Ok(RecordPayload::Pencil {
        data,
        mode,
        minimal,
    })
}

fn parse_triple(fields: &mut Fields) -> Result<RecordPayload, String> {
    let g = genus(&fields.require("g", "triple")?, "g")?;
    let h = genus(&fields.require("h", "triple")?, "h")?;
    let n = integer(&fields.require("n", "triple")?, "n")?;
    if n < 0 {
        return Err(format!("expected nonnegative integer for n (found '{n}')"));
    }
    Ok(RecordPayload::Triple(TripleData { g, h, n }))
}

fn parse_elliptic(fields: &mut Fields) -> Result<RecordPayload, String> {
    let kind = fields.require("kind", "elliptic")?;
    let descriptor = match kind.as_str() {
        "torusbundle" => {
            let h = genus(&fields.require("h", "elliptic")?, "h")?;
            EllipticDescriptor::TorusBundleOverGenus { h }
        }
        "enh" => {
            let n = genus(&fields.require("n", "elliptic")?, "n")?;
            if n == 0 {
                return Err("expected positive integer for n (found '0')".to_string());
            }
            let h = genus(&fields.require("h", "elliptic")?, "h")?;
            EllipticDescriptor::EnH { n, h }
        }
        other => {
            return Err(format!(
                "expected torusbundle or enh for kind (found '{other}')"
            ))
        }
    };
    Ok(RecordPayload::Elliptic(descriptor))
}

fn comma_list(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Canonical single-line form of a record. Optional keys are printed only
/// when they differ from their defaults; the derived `kdh` is never printed.
pub fn emit_record(record: &DatasetRecord) -> String {
    let mut parts: Vec<String> = Vec::new();
    match &record.payload {
        RecordPayload::Fibration(d) => {
            parts.push("fibration".to_string());
            if let Some(id) = &record.id {
                parts.push(format!("id={id}"));
            }
            parts.push(format!("g={}", d.fiber_genus()));
            parts.push(format!("h={}", d.base_genus()));
            parts.push(format!("a={}", d.nonseparating()));
            parts.push(format!("s=[{}]", comma_list(d.separating())));
            if d.flags.hyperelliptic {
                parts.push("hyperelliptic=true".to_string());
            }
            if d.flags.spin {
                parts.push("spin=true".to_string());
            }
            if d.flags.complex {
                parts.push("complex=true".to_string());
            }
            if !d.flags.minimal {
                parts.push("minimal=false".to_string());
            }
        }
        RecordPayload::Pencil {
            data,
            mode,
            minimal,
        } => {
            parts.push("pencil".to_string());
            if let Some(id) = &record.id {
                parts.push(format!("id={id}"));
            }
            parts.push(format!("k={}", data.fiber_genus()));
            parts.push(format!("A={}", data.base_points()));
            parts.push(format!("B={}", data.singular_points()));
            parts.push(format!("chi={}", data.chi()));
            parts.push(format!("sigma={}", data.sigma()));
            if !minimal {
                parts.push("minimal=false".to_string());
            }
            if let Some(mode) = mode {
                parts.push(format!("mode={}", mode.label()));
            }
        }
        RecordPayload::Triple(t) => {
            parts.push("triple".to_string());
            if let Some(id) = &record.id {
                parts.push(format!("id={id}"));
            }
            parts.push(format!("g={}", t.g));
            parts.push(format!("h={}", t.h));
            parts.push(format!("n={}", t.n));
        }
        RecordPayload::Elliptic(descriptor) => {
            parts.push("elliptic".to_string());
            if let Some(id) = &record.id {
                parts.push(format!("id={id}"));
            }
            match descriptor {
                EllipticDescriptor::TorusBundleOverGenus { h } => {
                    parts.push("kind=torusbundle".to_string());
                    parts.push(format!("h={h}"));
                }
                EllipticDescriptor::EnH { n, h } => {
                    parts.push("kind=enh".to_string());
                    parts.push(format!("n={n}"));
                    parts.push(format!("h={h}"));
                }
            }
        }
    }
    parts.join(" ")
}

pub fn emit_dataset(records: &[DatasetRecord]) -> String {
    let mut out = String::from(FORMAT_HEADER);
    out.push('\n');
    for record in records {
        out.push_str(&emit_record(record));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contents(outcome: &ParseOutcome) -> Vec<(Option<String>, RecordPayload)> {
        outcome
            .records
            .iter()
            .map(|r| (r.id.clone(), r.payload.clone()))
            .collect()
    }

    #[test]
    fn grammar_examples() {
        let outcome = parse_dataset("fibration id=M1 g=2 h=1 a=5 s=[0] hyperelliptic=true\n");
        assert!(outcome.diagnostics.is_empty());
        assert_eq!(outcome.records.len(), 1);
        match &outcome.records[0].payload {
            RecordPayload::Fibration(d) => {
                assert_eq!(d.fiber_genus(), 2);
                assert_eq!(d.nonseparating(), 5);
                assert!(d.flags.hyperelliptic);
            }
            other => panic!("unexpected payload {other:?}"),
        }

        let outcome = parse_dataset("triple g=1 h=1 n=0\n");
        assert_eq!(
            outcome.records[0].payload,
            RecordPayload::Triple(TripleData { g: 1, h: 1, n: 0 })
        );

        let outcome = parse_dataset("pencil k=3 A=4 B=36 chi=24 sigma=-16\n");
        match &outcome.records[0].payload {
            RecordPayload::Pencil { data, .. } => {
                assert_eq!(data.fiber_genus(), 3);
                assert_eq!(data.k_dot_h(), 0);
            }
            other => panic!("unexpected payload {other:?}"),
        }
    }

    #[test]
    fn malformed_integer_is_diagnosed_with_its_line() {
        let outcome = parse_dataset("fibration g=2 h=1 a=x\n");
        assert!(outcome.records.is_empty());
        assert_eq!(outcome.diagnostics.len(), 1);
        assert_eq!(outcome.diagnostics[0].line, 1);
        assert!(outcome.diagnostics[0]
            .message
            .starts_with("expected integer for a"));
        assert_eq!(
            outcome.diagnostics[0].to_string(),
            "line 1: expected integer for a (found 'x')"
        );
    }

    #[test]
    fn recovery_continues_past_bad_lines() {
        let text = "triple g=1 h=1 n=0\n\
                    nonsense\n\
                    triple g=2 h=2 n=0\n\
                    triple g=2 h=2\n\
                    # comment\n\
                    \n\
                    pencil k=0 A=1 B=0 chi=3 sigma=1\n";
        let outcome = parse_dataset(text);
        assert_eq!(outcome.records.len(), 3);
        assert_eq!(outcome.diagnostics.len(), 2);
        assert_eq!(outcome.diagnostics[0].line, 2);
        assert_eq!(outcome.diagnostics[1].line, 4);
        assert!(outcome.diagnostics[1]
            .message
            .contains("missing required key 'n'"));
        assert_eq!(outcome.records[2].source_line, 7);
    }

    #[test]
    fn unknown_keys_and_kinds_are_errors() {
        let outcome = parse_dataset("triple g=1 h=1 n=0 zork=1\n");
        assert_eq!(
            outcome.diagnostics[0].message,
            "unknown key 'zork' for triple record"
        );
        let outcome = parse_dataset("zorkogram g=1\n");
        assert!(outcome.diagnostics[0]
            .message
            .contains("unknown record kind"));
        let outcome = parse_dataset("triple g=1 g=2 h=1 n=0\n");
        assert_eq!(outcome.diagnostics[0].message, "duplicate key 'g'");
    }

    #[test]
    fn short_separating_vectors_pad_and_long_ones_error() {
        let outcome = parse_dataset("fibration g=5 h=1 a=0 s=[1]\n");
        match &outcome.records[0].payload {
            RecordPayload::Fibration(d) => assert_eq!(d.separating(), &[1, 0]),
            other => panic!("unexpected payload {other:?}"),
        }
        let outcome = parse_dataset("fibration g=2 h=1 a=0 s=[1,2]\n");
        assert!(outcome.diagnostics[0].message.contains("separating vector"));
    }

    #[test]
    fn pencil_validation_errors_surface_as_diagnostics() {
        let outcome = parse_dataset("pencil k=3 A=0 B=36 chi=24 sigma=-16\n");
        assert!(outcome.diagnostics[0].message.contains("base locus"));
        let outcome = parse_dataset("pencil k=3 A=4 B=36 chi=24 sigma=-16 kdh=5\n");
        assert!(outcome.diagnostics[0].message.contains("disagrees"));
        let outcome = parse_dataset("pencil k=3 A=4 B=36 chi=24 sigma=-16 kdh=0\n");
        assert!(outcome.diagnostics.is_empty());
    }

    #[test]
    fn emit_parse_round_trip_is_idempotent() {
        let text = "\
            fibration id=M1 g=2 h=1 a=5 hyperelliptic=true\n\
            pencil id=P k=3 A=4 B=36 chi=24 sigma=-16 kdh=0 mode=paper-literal\n\
            triple g=3 h=1 n=7\n\
            elliptic kind=enh n=2 h=0\n\
            elliptic id=T2 kind=torusbundle h=1\n\
            fibration g=4 h=1 a=1 s=[0,2] spin=true complex=true minimal=false\n";
        let first = parse_dataset(text);
        assert!(first.diagnostics.is_empty());
        let emitted = emit_dataset(&first.records);
        let second = parse_dataset(&emitted);
        assert!(second.diagnostics.is_empty());
        assert_eq!(contents(&first), contents(&second));
        assert_eq!(emitted, emit_dataset(&second.records));
    }
}
