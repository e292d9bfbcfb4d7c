//! End-to-end behavior of the `lefkappa` binary: exit codes, report shapes,
//! output redirection and the dataset grammar under generated inputs.

use std::io::Write;
use std::process::Command;

use proptest::prelude::*;

use lefkappa_cli::dataset::{emit_dataset, parse_dataset, FORMAT_HEADER};
use lefkappa_core::{
    ConventionMode, EllipticDescriptor, FibrationData, FibrationFlags, PencilData, RecordPayload,
    TripleData,
};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lefkappa"))
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(content.as_bytes()).expect("write temp file");
    file
}

#[test]
fn classify_definition_table_text_columns() {
    let file = write_temp(
        "triple g=0 h=1 n=0\ntriple g=1 h=1 n=0\ntriple g=2 h=1 n=0\ntriple g=2 h=2 n=0\n",
    );
    let output = binary().arg("classify").arg(file.path()).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8(output.stdout).unwrap();
    let header = stdout.lines().next().unwrap();
    let kappa_column = header.find("kappa").unwrap();
    let kappas: Vec<&str> = stdout
        .lines()
        .skip(1)
        .map(|line| line[kappa_column..].split_whitespace().next().unwrap())
        .collect();
    assert_eq!(kappas, vec!["-inf", "0", "1", "2"]);
}

#[test]
fn parse_errors_exit_one_with_line_diagnostics() {
    let file = write_temp("triple g=1 h=1 n=0\nfibration g=2 h=1 a=x\n");
    let output = binary().arg("classify").arg(file.path()).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("line 2: expected integer for a"));
    // The valid record is still classified and emitted.
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("triple"));
}

#[test]
fn paper_literal_mode_flags_the_line_pencil_and_exits_two() {
    let file = write_temp("pencil id=P2 k=0 A=1 B=0 chi=3 sigma=1\n");
    let output = binary()
        .args(["classify", "--mode", "paper-literal"])
        .arg(file.path())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("negative singular-point count -2"));
    // The report is still emitted in full.
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("-inf"));

    // The default mode accepts the same record.
    let output = binary().arg("classify").arg(file.path()).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn check_reports_cross_presentation_mismatches() {
    let file = write_temp("triple id=Y g=1 h=1 n=0\ntriple id=Y g=1 h=2 n=0\n");
    let output = binary()
        .args(["check", "--format", "json"])
        .arg(file.path())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let failures = report["failures"].as_array().unwrap();
    assert_eq!(failures.len(), 1);
    assert!(failures[0]
        .as_str()
        .unwrap()
        .contains("cross-presentation mismatch for id 'Y'"));
}

#[test]
fn check_passes_consistent_multi_presentation_data() {
    let file = write_temp(
        "fibration id=X g=2 h=1 a=5 s=[0] hyperelliptic=true\npencil id=X k=2 A=1 B=10 chi=5 sigma=1\n",
    );
    let output = binary().arg("check").arg(file.path()).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("no failures"));
}

#[test]
fn invariants_reports_chi_h_without_classifying() {
    let file = write_temp(
        "pencil id=K3 k=3 A=4 B=36 chi=24 sigma=-16\nfibration id=M g=2 h=1 a=20 s=[0] hyperelliptic=true\ntriple id=T g=2 h=0 n=5\n",
    );
    let output = binary()
        .args(["invariants", "--format", "json"])
        .arg(file.path())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "{:?}", output);
    let rows: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(rows[0]["chi_h"], "2");
    assert_eq!(rows[0]["kappa"], serde_json::Value::Null);
    assert_eq!(rows[1]["sigma"], -12);
    assert_eq!(rows[1]["k_squared"], 4);
    // Sphere-base triples still report chi; classification is not attempted.
    assert_eq!(rows[2]["chi"], 1);
    assert_eq!(rows[2]["error"], serde_json::Value::Null);
}

#[test]
fn invariants_flags_inadmissible_hyperelliptic_data() {
    let file = write_temp("fibration g=2 h=1 a=1 s=[1] hyperelliptic=true\n");
    let output = binary()
        .arg("invariants")
        .arg(file.path())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("non-integer signature -4/5"));
}

#[test]
fn convert_pairs_records_by_id() {
    let file = write_temp(
        "fibration id=K3 g=1 h=0 a=24 s=[]\npencil id=K3 k=3 A=4 B=36 chi=24 sigma=-16\n",
    );
    let output = binary()
        .args(["convert", "--format", "json"])
        .arg(file.path())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "{:?}", output);
    let rows: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(rows[0]["converted_genus"], 3);
    assert_eq!(rows[0]["pencil_genus"], 3);
    assert_eq!(rows[0]["agrees"], true);
    assert_eq!(rows[0]["mode"], "euler");
    assert!(rows[0]["blow_up"]
        .as_str()
        .unwrap()
        .contains("g=3 h=0 n=36 chi=28"));

    // The literal convention converts to genus 5 and disagrees.
    let output = binary()
        .args(["convert", "--format", "json", "--mode", "paper-literal"])
        .arg(file.path())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let rows: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(rows[0]["converted_genus"], 5);
    assert_eq!(rows[0]["agrees"], false);
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let file = write_temp("triple g=1 h=1 n=0\n");
    let out = tempfile::NamedTempFile::new().unwrap();
    let output = binary()
        .args(["classify", "--format", "json"])
        .arg(file.path())
        .arg("--output")
        .arg(out.path())
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stdout.is_empty());
    let written = std::fs::read_to_string(out.path()).unwrap();
    assert!(written.contains("\"kappa\": \"0\""));
}

#[test]
fn unknown_commands_and_flags_exit_one_with_usage() {
    let output = binary().arg("explode").output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("Usage"));

    let output = binary()
        .args(["classify", "--frobnicate", "x"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));

    let output = binary().arg("--help").output().unwrap();
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn enumerate_respects_the_candidate_budget() {
    let output = binary()
        .args([
            "enumerate",
            "--g-min",
            "2",
            "--g-max",
            "7",
            "--n-max",
            "15",
            "--max-candidates",
            "10",
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("9656 raw candidates"));
}

#[test]
fn emitted_datasets_carry_the_format_header() {
    let outcome = parse_dataset("triple g=1 h=1 n=0\n");
    let emitted = emit_dataset(&outcome.records);
    assert!(emitted.starts_with(FORMAT_HEADER));
    // The header reparses as a comment.
    let reparsed = parse_dataset(&emitted);
    assert_eq!(reparsed.records.len(), 1);
    assert!(reparsed.diagnostics.is_empty());
}

fn arbitrary_payload() -> impl Strategy<Value = RecordPayload> {
    let fibration = (
        0u32..=9,
        0u32..=4,
        0i64..=30,
        proptest::collection::vec(0i64..=6, 0..=4),
        any::<[bool; 4]>(),
    )
        .prop_filter_map("separating vector fits the genus", |(g, h, a, s, flags)| {
            FibrationData::new(
                g,
                h,
                a,
                s,
                FibrationFlags {
                    hyperelliptic: flags[0],
                    spin: flags[1],
                    complex: flags[2],
                    minimal: flags[3],
                },
            )
            .ok()
            .map(RecordPayload::Fibration)
        });
    let pencil = (
        0i64..=8,
        1i64..=20,
        0i64..=60,
        -30i64..=60,
        -30i64..=30,
        proptest::option::of(prop_oneof![
            Just(ConventionMode::EulerConsistent),
            Just(ConventionMode::PaperLiteral)
        ]),
        any::<bool>(),
    )
        .prop_map(
            |(k, a, b, chi, sigma, mode, minimal)| RecordPayload::Pencil {
                data: PencilData::new(k, a, b, chi, sigma, None).expect("valid pencil bounds"),
                mode,
                minimal,
            },
        );
    let triple = (0u32..=9, 0u32..=9, 0i64..=60)
        .prop_map(|(g, h, n)| RecordPayload::Triple(TripleData { g, h, n }));
    let elliptic = prop_oneof![
        (0u32..=5)
            .prop_map(|h| RecordPayload::Elliptic(EllipticDescriptor::TorusBundleOverGenus { h })),
        (1u32..=6, 0u32..=5)
            .prop_map(|(n, h)| RecordPayload::Elliptic(EllipticDescriptor::EnH { n, h })),
    ];
    prop_oneof![fibration, pencil, triple, elliptic]
}

proptest! {
    #[test]
    fn random_records_round_trip_through_the_emitter(
        payloads in proptest::collection::vec(arbitrary_payload(), 0..12),
        ids in proptest::collection::vec(proptest::option::of("[A-Za-z][A-Za-z0-9_-]{0,8}"), 12),
    ) {
        let records: Vec<_> = payloads
            .into_iter()
            .zip(&ids)
            .enumerate()
            .map(|(index, (payload, id))| lefkappa_cli::dataset::DatasetRecord {
                id: id.clone(),
                payload,
                source_line: index + 1,
            })
            .collect();
        let emitted = emit_dataset(&records);
        let parsed = parse_dataset(&emitted);
        prop_assert_eq!(parsed.diagnostics, vec![]);
        prop_assert_eq!(parsed.records.len(), records.len());
        for (parsed, original) in parsed.records.iter().zip(&records) {
            prop_assert_eq!(&parsed.id, &original.id);
            prop_assert_eq!(&parsed.payload, &original.payload);
        }
        // Idempotent canonicalization.
        prop_assert_eq!(emit_dataset(&parsed.records), emitted);
    }
}
