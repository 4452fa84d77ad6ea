//! Command-line front end shared by the `bpa-integrity` binary.
//!
//! Exit codes are listed in [`exit`]. Machine output (`--format json`) is a
//! single JSON document per invocation with fixed field names.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::apen::{apen_detailed, population_std};
use crate::error::Error;
use crate::evidence::{parse_bpa, MassFunction, DEFAULT_EPSILON_SUM};
use crate::graph::slide;
use crate::measure::{ui_with, UiParams, DEFAULT_M, DEFAULT_R_FACTOR};
use crate::numfmt::format_sig;
use crate::sweep::{sweep_simplex_with, write_sweep};

pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// The BPA parsed but breaks a mass axiom.
    pub const INVALID_BPA: i32 = 1;
    /// Bad flags or arguments.
    pub const USAGE: i32 = 2;
    /// Malformed BPA document or sequence.
    pub const PARSE: i32 = 3;
    /// Fewer than three network nodes.
    pub const TOO_FEW_NODES: i32 = 4;
    pub const IO: i32 = 5;
    /// Sequence too short or tolerance admits no matches.
    pub const COMPUTE: i32 = 6;
}

const HUMAN_DIGITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "bpa-integrity",
    version,
    about = "Integrity uncertainty of basic probability assignments"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Embedding dimension
    #[arg(long, global = true, default_value_t = DEFAULT_M)]
    m: usize,

    /// Tolerance as a multiple of the sequence's standard deviation
    #[arg(long = "r-factor", global = true, default_value_t = DEFAULT_R_FACTOR)]
    r_factor: f64,

    /// Allowed deviation of the mass sum from 1
    #[arg(long = "epsilon-sum", global = true, default_value_t = DEFAULT_EPSILON_SUM)]
    epsilon_sum: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Write results here instead of standard output
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the mass axioms of a BPA file
    Validate { path: PathBuf },
    /// Integrity uncertainty of a BPA file
    Ui { path: PathBuf },
    /// Approximate entropy of a raw sequence
    Apen {
        /// Comma-separated values, e.g. 0.55,0.25,0.2,0
        #[arg(allow_hyphen_values = true, required_unless_present = "file")]
        values: Option<String>,
        /// Read the sequence from a file (comma or whitespace separated)
        #[arg(long, conflicts_with = "values")]
        file: Option<PathBuf>,
        /// Absolute tolerance; overrides --r-factor
        #[arg(long)]
        r: Option<f64>,
    },
    /// Slide (descending logical degree) sequence of a BPA file
    Slide { path: PathBuf },
    /// Sweep the {(A,x),(B,y),(AB,1-x-y),(∅,0)} family over the simplex
    Sweep {
        #[arg(long, default_value_t = 100)]
        resolution: usize,
    },
    /// Rank several BPA files by integrity uncertainty
    Compare {
        #[arg(num_args = 2.., required = true)]
        paths: Vec<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, io::Error),
    Core(Error),
    Usage(String),
    Reported(i32),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::EmptyFrame
        | Error::EmptyLabel
        | Error::DuplicateHypothesis(_)
        | Error::UnknownHypothesis(_)
        | Error::DuplicateMember(_)
        | Error::NonFinite(_) => exit::PARSE,
        Error::InvalidBpa(_) => exit::INVALID_BPA,
        Error::TooFewNodes { .. } => exit::TOO_FEW_NODES,
        Error::InvalidParameter(_) => exit::USAGE,
        Error::SequenceTooShort { .. }
        | Error::EmptySequence
        | Error::LengthMismatch(..)
        | Error::DegenerateTolerance(_) => exit::COMPUTE,
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Io(..) => exit::IO,
            CliError::Core(e) => error_code(e),
            CliError::Usage(_) => exit::USAGE,
            CliError::Reported(code) => *code,
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                exit::USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                exit::SUCCESS
            };
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(()) => exit::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Io(path, err) => {
                    let _ = writeln!(stderr, "error: {}: {err}", path.display());
                }
                CliError::Core(err) => {
                    let _ = writeln!(stderr, "error: {err}");
                }
                CliError::Usage(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                }
                CliError::Reported(_) => {}
            }
            e.code()
        }
    }
}

impl Cli {
    fn params(&self) -> UiParams {
        UiParams {
            m: self.m,
            r_factor: self.r_factor,
            epsilon_sum: self.epsilon_sum,
        }
    }

    fn notice_if_non_normative(&self, stderr: &mut dyn Write) {
        if !self.params().is_normative() {
            let _ = writeln!(
                stderr,
                "notice: non-normative parameters (m = {}, r-factor = {}); the standard measure uses m = {DEFAULT_M}, r-factor = {DEFAULT_R_FACTOR}",
                self.m, self.r_factor
            );
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let mut buf: Vec<u8> = Vec::new();
    let result = match &cli.command {
        Command::Validate { path } => cmd_validate(cli, path, &mut buf),
        Command::Ui { path } => {
            cli.notice_if_non_normative(stderr);
            cmd_ui(cli, path, &mut buf)
        }
        Command::Apen { values, file, r } => {
            if r.is_none() {
                cli.notice_if_non_normative(stderr);
            }
            cmd_apen(cli, values.as_deref(), file.as_deref(), *r, &mut buf)
        }
        Command::Slide { path } => cmd_slide(cli, path, &mut buf),
        Command::Sweep { resolution } => {
            cli.notice_if_non_normative(stderr);
            cmd_sweep(cli, *resolution, &mut buf)
        }
        Command::Compare { paths } => {
            cli.notice_if_non_normative(stderr);
            cmd_compare(cli, paths, &mut buf, stderr)
        }
    };
    // output is emitted even when the command reports a failure
    emit(cli, &buf, stdout)?;
    result
}

fn emit(cli: &Cli, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.output {
        Some(path) if !bytes.is_empty() => {
            fs::write(path, bytes).map_err(|e| CliError::Io(path.clone(), e))
        }
        Some(_) => Ok(()),
        None => stdout
            .write_all(bytes)
            .map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e)),
    }
}

fn load_bpa(path: &Path) -> Result<MassFunction, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    Ok(parse_bpa(&text)?)
}

fn write_json(out: &mut Vec<u8>, value: &impl Serialize) {
    serde_json::to_writer_pretty(&mut *out, value).expect("report serializes");
    out.push(b'\n');
}

fn human(v: f64) -> String {
    format_sig(v, HUMAN_DIGITS)
}

fn join_values(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Serialize)]
struct ValidateReport {
    file: String,
    valid: bool,
    violations: Vec<String>,
}

fn cmd_validate(cli: &Cli, path: &Path, out: &mut Vec<u8>) -> Result<(), CliError> {
    let bpa = load_bpa(path)?;
    let report = bpa.validate(cli.epsilon_sum);
    match cli.format {
        Format::Json => write_json(
            out,
            &ValidateReport {
                file: path.display().to_string(),
                valid: report.is_ok(),
                violations: report.violations.iter().map(ToString::to_string).collect(),
            },
        ),
        Format::Human => {
            if report.is_ok() {
                writeln!(out, "{}: valid", path.display()).unwrap();
            } else {
                writeln!(out, "{}: invalid", path.display()).unwrap();
                for v in &report.violations {
                    writeln!(out, "  - {v}").unwrap();
                }
            }
        }
    }
    if report.is_ok() {
        Ok(())
    } else {
        Err(CliError::Reported(exit::INVALID_BPA))
    }
}

#[derive(Serialize)]
struct UiReport {
    file: String,
    ui: f64,
    signed_apen: f64,
    phi_m: f64,
    phi_m_plus_1: f64,
    m: usize,
    r_factor: f64,
    r: f64,
    std: f64,
    n_nodes: usize,
    slide: Vec<f64>,
    degenerate: bool,
    normative: bool,
}

fn cmd_ui(cli: &Cli, path: &Path, out: &mut Vec<u8>) -> Result<(), CliError> {
    let bpa = load_bpa(path)?;
    let params = cli.params();
    let res = ui_with(&bpa, &params)?;
    match cli.format {
        Format::Json => write_json(
            out,
            &UiReport {
                file: path.display().to_string(),
                ui: res.ui,
                signed_apen: res.signed_apen,
                phi_m: res.phi_m,
                phi_m_plus_1: res.phi_m_plus_1,
                m: params.m,
                r_factor: params.r_factor,
                r: res.r,
                std: res.std,
                n_nodes: res.n_nodes,
                slide: res.slide.values().to_vec(),
                degenerate: res.degenerate,
                normative: params.is_normative(),
            },
        ),
        Format::Human => {
            let m = params.m;
            let rows = [
                ("file", path.display().to_string()),
                ("ui", human(res.ui)),
                ("signed apen", human(res.signed_apen)),
                (&*format!("phi_{m}"), human(res.phi_m)),
                (&*format!("phi_{}", m + 1), human(res.phi_m_plus_1)),
                ("std", human(res.std)),
                ("r", human(res.r)),
                ("nodes", res.n_nodes.to_string()),
                ("slide", join_values(res.slide.values())),
                (
                    "flags",
                    if res.degenerate { "degenerate" } else { "-" }.to_string(),
                ),
            ];
            for (k, v) in rows {
                writeln!(out, "{k:<12} {v}").unwrap();
            }
        }
    }
    Ok(())
}

fn parse_sequence(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .enumerate()
        .map(|(i, s)| {
            s.parse::<f64>().map_err(|e| {
                CliError::Core(Error::Parse {
                    line: 1,
                    column: i + 1,
                    message: format!("value {} `{s}`: {e}", i + 1),
                })
            })
        })
        .collect()
}

#[derive(Serialize)]
struct ApEnReport {
    apen: f64,
    phi_m: f64,
    phi_m_plus_1: f64,
    m: usize,
    r: f64,
    r_factor: Option<f64>,
    std: Option<f64>,
    n: usize,
    degenerate: bool,
}

fn cmd_apen(
    cli: &Cli,
    values: Option<&str>,
    file: Option<&Path>,
    r: Option<f64>,
    out: &mut Vec<u8>,
) -> Result<(), CliError> {
    let text = match (values, file) {
        (_, Some(path)) => {
            fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?
        }
        (Some(v), None) => v.to_string(),
        (None, None) => return Err(CliError::Usage("no sequence given".into())),
    };
    let seq = parse_sequence(&text)?;
    let m = cli.m;
    if m == 0 {
        return Err(CliError::Usage("--m must be >= 1".into()));
    }
    if seq.len() < m + 1 {
        return Err(Error::SequenceTooShort {
            len: seq.len(),
            required: m + 1,
        }
        .into());
    }

    let (report, std) = match r {
        Some(r) => {
            let a = apen_detailed(&seq, m, r)?;
            (
                ApEnReport {
                    apen: a.value,
                    phi_m: a.phi_m,
                    phi_m_plus_1: a.phi_m_plus_1,
                    m,
                    r,
                    r_factor: None,
                    std: None,
                    n: seq.len(),
                    degenerate: false,
                },
                None,
            )
        }
        None => {
            let std = population_std(&seq)?;
            let r = cli.r_factor * std;
            let report = if std == 0.0 {
                ApEnReport {
                    apen: 0.0,
                    phi_m: 0.0,
                    phi_m_plus_1: 0.0,
                    m,
                    r,
                    r_factor: Some(cli.r_factor),
                    std: Some(std),
                    n: seq.len(),
                    degenerate: true,
                }
            } else {
                let a = apen_detailed(&seq, m, r)?;
                ApEnReport {
                    apen: a.value,
                    phi_m: a.phi_m,
                    phi_m_plus_1: a.phi_m_plus_1,
                    m,
                    r,
                    r_factor: Some(cli.r_factor),
                    std: Some(std),
                    n: seq.len(),
                    degenerate: false,
                }
            };
            (report, Some(std))
        }
    };

    match cli.format {
        Format::Json => write_json(out, &report),
        Format::Human => {
            writeln!(out, "{:<12} {}", "apen", human(report.apen)).unwrap();
            writeln!(out, "{:<12} {}", format!("phi_{m}"), human(report.phi_m)).unwrap();
            writeln!(
                out,
                "{:<12} {}",
                format!("phi_{}", m + 1),
                human(report.phi_m_plus_1)
            )
            .unwrap();
            if let Some(std) = std {
                writeln!(out, "{:<12} {}", "std", human(std)).unwrap();
            }
            writeln!(out, "{:<12} {}", "r", human(report.r)).unwrap();
            writeln!(
                out,
                "{:<12} {}",
                "flags",
                if report.degenerate { "degenerate" } else { "-" }
            )
            .unwrap();
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SlideReport {
    file: String,
    slide: Vec<f64>,
}

fn cmd_slide(cli: &Cli, path: &Path, out: &mut Vec<u8>) -> Result<(), CliError> {
    let bpa = load_bpa(path)?;
    let report = bpa.validate(cli.epsilon_sum);
    if !report.is_ok() {
        return Err(Error::InvalidBpa(report).into());
    }
    let seq = slide(&bpa);
    match cli.format {
        Format::Json => write_json(
            out,
            &SlideReport {
                file: path.display().to_string(),
                slide: seq.into_vec(),
            },
        ),
        Format::Human => writeln!(out, "{}", join_values(seq.values())).unwrap(),
    }
    Ok(())
}

fn cmd_sweep(cli: &Cli, resolution: usize, out: &mut Vec<u8>) -> Result<(), CliError> {
    let records = sweep_simplex_with(resolution, &cli.params())?;
    write_sweep(&records, &mut *out).expect("writing to memory");
    Ok(())
}

#[derive(Serialize)]
struct CompareRow {
    file: String,
    n_nodes: Option<usize>,
    ui: Option<f64>,
    degenerate: bool,
    error: Option<String>,
}

#[derive(Serialize)]
struct CompareReport {
    rows: Vec<CompareRow>,
}

fn cmd_compare(
    cli: &Cli,
    paths: &[PathBuf],
    out: &mut Vec<u8>,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    if paths.len() < 2 {
        return Err(CliError::Usage("compare needs at least two files".into()));
    }
    let params = cli.params();
    let mut first_failure = None;
    let mut rows: Vec<CompareRow> = paths
        .iter()
        .map(|path| {
            let file = path.display().to_string();
            let outcome = load_bpa(path).and_then(|bpa| Ok(ui_with(&bpa, &params)?));
            match outcome {
                Ok(res) => CompareRow {
                    file,
                    n_nodes: Some(res.n_nodes),
                    ui: Some(res.ui),
                    degenerate: res.degenerate,
                    error: None,
                },
                Err(e) => {
                    let message = match &e {
                        CliError::Io(_, err) => err.to_string(),
                        CliError::Core(err) => err.to_string(),
                        CliError::Usage(msg) => msg.clone(),
                        CliError::Reported(code) => format!("exit {code}"),
                    };
                    let _ = writeln!(stderr, "error: {file}: {message}");
                    first_failure.get_or_insert(e.code());
                    CompareRow {
                        file,
                        n_nodes: None,
                        ui: None,
                        degenerate: false,
                        error: Some(message),
                    }
                }
            }
        })
        .collect();
    // ascending ui, failures last; stable for ties
    rows.sort_by(|a, b| match (a.ui, b.ui) {
        (Some(x), Some(y)) => x.total_cmp(&y),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => std::cmp::Ordering::Equal,
    });

    match cli.format {
        Format::Json => write_json(out, &CompareReport { rows }),
        Format::Human => {
            let width = rows.iter().map(|r| r.file.len()).max().unwrap_or(4).max(4);
            writeln!(
                out,
                "{:<4} {:<width$} {:>5}  {:<10} flags",
                "rank", "file", "nodes", "ui"
            )
            .unwrap();
            for (i, row) in rows.iter().enumerate() {
                let nodes = row.n_nodes.map_or("-".to_string(), |n| n.to_string());
                let ui = row.ui.map_or("-".to_string(), human);
                let flags = match (&row.error, row.degenerate) {
                    (Some(e), _) => format!("error: {e}"),
                    (None, true) => "degenerate".to_string(),
                    (None, false) => "-".to_string(),
                };
                writeln!(
                    out,
                    "{:<4} {:<width$} {:>5}  {:<10} {flags}",
                    i + 1,
                    row.file,
                    nodes,
                    ui
                )
                .unwrap();
            }
        }
    }
    match first_failure {
        Some(code) => Err(CliError::Reported(code)),
        None => Ok(()),
    }
}
