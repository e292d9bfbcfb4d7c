//! Command-line surface: classify, invariants, check, enumerate, convert.
//!
//! Exit codes: 0 on success with no property violations, 1 on any parse or
//! invocation error, 2 on property/consistency violations (the report is
//! still emitted in full).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lefkappa_core::{
    classify_input, enumerate_hyperelliptic_with, fibration_to_pencil_genus, invariants_input,
    verify_dataset, ConventionMode, EnumerationParams, RecordOutcome, RecordPayload, VerifyInput,
    DEFAULT_CANDIDATE_BOUND,
};

use lefkappa_cli::dataset::{parse_dataset, DatasetRecord, ParseOutcome};
use lefkappa_cli::report::{self, ConvertOutcome, OutputFormat};

#[derive(Parser)]
#[command(
    name = "lefkappa",
    version,
    about = "Topological invariants and Kodaira dimensions of Lefschetz fibrations and pencils"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
    /// Convention for the pencil singular-point relation
    #[arg(long, value_enum, default_value_t = ModeArg::Euler, global = true)]
    mode: ModeArg,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(arg: FormatArg) -> OutputFormat {
        match arg {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Euler,
    PaperLiteral,
}

impl From<ModeArg> for ConventionMode {
    fn from(arg: ModeArg) -> ConventionMode {
        match arg {
            ModeArg::Euler => ConventionMode::EulerConsistent,
            ModeArg::PaperLiteral => ConventionMode::PaperLiteral,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable classifier on each record of a dataset
    Classify { file: PathBuf },
    /// Report chi, sigma, K^2 and chi_h only
    Invariants { file: PathBuf },
    /// Classify plus cross-presentation consistency checks
    Check { file: PathBuf },
    /// Exhaustively enumerate admissible hyperelliptic data over the torus
    Enumerate {
        #[arg(long)]
        g_min: u32,
        #[arg(long)]
        g_max: u32,
        #[arg(long)]
        n_max: i64,
        /// Refuse grids with more raw candidates than this
        #[arg(long, default_value_t = DEFAULT_CANDIDATE_BOUND)]
        max_candidates: u64,
        /// Partition the candidate space across this many workers
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Fibration/pencil conversions for pencil records (paired by id)
    Convert { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{err}");
                    ExitCode::from(1)
                }
            };
        }
    };
    let format = OutputFormat::from(cli.format);
    let mode = ConventionMode::from(cli.mode);
    let code = match &cli.command {
        Command::Classify { file } => run_classify(file, mode, format, &cli.output),
        Command::Invariants { file } => run_invariants(file, format, &cli.output),
        Command::Check { file } => run_check(file, mode, format, &cli.output),
        Command::Enumerate {
            g_min,
            g_max,
            n_max,
            max_candidates,
            workers,
        } => run_enumerate(
            EnumerationParams {
                g_min: *g_min,
                g_max: *g_max,
                n_max: *n_max,
                max_candidates: *max_candidates,
                workers: *workers,
            },
            format,
            &cli.output,
        ),
        Command::Convert { file } => run_convert(file, mode, format, &cli.output),
    };
    ExitCode::from(code)
}

fn read_dataset(path: &PathBuf) -> Result<ParseOutcome, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let outcome = parse_dataset(&text);
    for diagnostic in &outcome.diagnostics {
        eprintln!("{diagnostic}");
    }
    Ok(outcome)
}

fn to_inputs(records: &[DatasetRecord]) -> Vec<VerifyInput> {
    records
        .iter()
        .map(|r| VerifyInput {
            id: r.id.clone(),
            payload: r.payload.clone(),
        })
        .collect()
}

fn write_report(content: &str, output: &Option<PathBuf>) -> u8 {
    match output {
        Some(path) => match fs::write(path, content) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("cannot write {}: {e}", path.display());
                1
            }
        },
        None => {
            print!("{content}");
            0
        }
    }
}

fn record_tag(index: usize, outcome: &RecordOutcome) -> String {
    match &outcome.id {
        Some(id) => format!("record {} (id={id})", index + 1),
        None => format!("record {}", index + 1),
    }
}

fn report_outcome_problems(outcomes: &[RecordOutcome]) -> bool {
    let mut problems = false;
    for (index, outcome) in outcomes.iter().enumerate() {
        if let Some(error) = &outcome.error {
            eprintln!("{}: {error}", record_tag(index, outcome));
            problems = true;
        }
        for violation in &outcome.violations {
            eprintln!("{}: {violation}", record_tag(index, outcome));
            problems = true;
        }
    }
    problems
}

fn run_classify(
    file: &PathBuf,
    mode: ConventionMode,
    format: OutputFormat,
    output: &Option<PathBuf>,
) -> u8 {
    let parsed = match read_dataset(file) {
        Ok(parsed) => parsed,
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };
    let outcomes: Vec<RecordOutcome> = to_inputs(&parsed.records)
        .iter()
        .map(|input| classify_input(input, mode))
        .collect();
    let rendered = report::emit_classification(&outcomes, format);
    let write_code = write_report(&rendered, output);
    let problems = report_outcome_problems(&outcomes);
    if write_code != 0 || !parsed.diagnostics.is_empty() {
        1
    } else if problems {
        2
    } else {
        0
    }
}

fn run_invariants(file: &PathBuf, format: OutputFormat, output: &Option<PathBuf>) -> u8 {
    let parsed = match read_dataset(file) {
        Ok(parsed) => parsed,
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };
    let outcomes: Vec<RecordOutcome> = to_inputs(&parsed.records)
        .iter()
        .map(invariants_input)
        .collect();
    let rendered = report::emit_invariants(&outcomes, format);
    let write_code = write_report(&rendered, output);
    let problems = report_outcome_problems(&outcomes);
    if write_code != 0 || !parsed.diagnostics.is_empty() {
        1
    } else if problems {
        2
    } else {
        0
    }
}

fn run_check(
    file: &PathBuf,
    mode: ConventionMode,
    format: OutputFormat,
    output: &Option<PathBuf>,
) -> u8 {
    let parsed = match read_dataset(file) {
        Ok(parsed) => parsed,
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };
    let report = verify_dataset(&to_inputs(&parsed.records), mode);
    let rendered = report::emit_check(&report, format);
    let write_code = write_report(&rendered, output);
    for failure in &report.failures {
        eprintln!("{failure}");
    }
    if write_code != 0 || !parsed.diagnostics.is_empty() {
        1
    } else if report.has_problems() {
        2
    } else {
        0
    }
}

fn run_enumerate(params: EnumerationParams, format: OutputFormat, output: &Option<PathBuf>) -> u8 {
    let report = match enumerate_hyperelliptic_with(&params) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };
    let rendered = report::emit_enumeration(&report, format);
    let write_code = write_report(&rendered, output);
    for failure in &report.failures {
        eprintln!("{failure}");
    }
    if write_code != 0 {
        1
    } else if !report.failures.is_empty() {
        2
    } else {
        0
    }
}

fn run_convert(
    file: &PathBuf,
    mode: ConventionMode,
    format: OutputFormat,
    output: &Option<PathBuf>,
) -> u8 {
    let parsed = match read_dataset(file) {
        Ok(parsed) => parsed,
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };
    let mut rows: Vec<ConvertOutcome> = Vec::new();
    for record in &parsed.records {
        let (data, record_mode) = match &record.payload {
            RecordPayload::Pencil {
                data,
                mode: record_mode,
                ..
            } => (data, *record_mode),
            _ => continue,
        };
        let effective = record_mode.unwrap_or(mode);
        let paired = record.id.as_ref().and_then(|id| {
            parsed.records.iter().find(|other| {
                other.id.as_deref() == Some(id)
                    && matches!(
                        other.payload,
                        RecordPayload::Fibration(_) | RecordPayload::Triple(_)
                    )
            })
        });
        let mut row = ConvertOutcome {
            id: record.id.clone(),
            pencil: record.payload.summary(),
            blow_up: format!(
                "fibration g={} h=0 n={} chi={}",
                data.fiber_genus(),
                data.singular_points(),
                data.chi() + data.base_points()
            ),
            fibration: None,
            converted_genus: None,
            pencil_genus: data.fiber_genus(),
            agrees: None,
            mode: effective.label(),
            error: None,
        };
        if let Some(paired) = paired {
            row.fibration = Some(paired.payload.summary());
            let (g, h, n) = match &paired.payload {
                RecordPayload::Fibration(d) => (d.fiber_genus(), d.base_genus(), d.n()),
                RecordPayload::Triple(t) => (t.g, t.h, t.n),
                _ => unreachable!("paired records are fibrations or triples"),
            };
            match fibration_to_pencil_genus(
                g,
                h,
                n,
                data.base_points(),
                data.singular_points(),
                effective,
            ) {
                Ok(converted) => {
                    row.converted_genus = Some(converted.value);
                    row.agrees = Some(converted.value == data.fiber_genus());
                }
                Err(e) => row.error = Some(e.to_string()),
            }
        }
        rows.push(row);
    }
    let rendered = report::emit_convert(&rows, format);
    let write_code = write_report(&rendered, output);
    let mut problems = false;
    for row in &rows {
        if let Some(error) = &row.error {
            eprintln!("conversion error (id={}): {error}", opt_id(&row.id));
            problems = true;
        }
        if row.agrees == Some(false) {
            eprintln!(
                "conversion mismatch (id={}): converted genus {} vs pencil genus {}",
                opt_id(&row.id),
                row.converted_genus.unwrap_or_default(),
                row.pencil_genus
            );
            problems = true;
        }
    }
    if write_code != 0 || !parsed.diagnostics.is_empty() {
        1
    } else if problems {
        2
    } else {
        0
    }
}

fn opt_id(id: &Option<String>) -> &str {
    id.as_deref().unwrap_or("-")
}
