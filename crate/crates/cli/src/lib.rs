//! Command-line front end for `qsic`.
//!
//! Exit codes: 0 success, 1 corpus mismatch, 2 usage or input syntax
//! (including non-rational coefficients), 3 degenerate pencil, 4
//! proportional forms, 5 all-zero form, 66 unreadable input, 70 internal
//! failure, 73 unwritable output.

pub mod error;
pub mod input;
pub mod report;
pub mod svg;

use clap::{Parser, Subcommand};
use error::{exit, CliError};
use input::{parse_input, parse_rational, InputDocument};
use num_traits::ToPrimitive;
use qsic::classify::classify;
use qsic::{make_pencil, quadric_from_coeffs, Table};
use report::OutputReport;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

pub use svg::render_eigencurve_svg;

#[derive(Parser, Debug)]
#[command(name = "qsic", version, about = "Classify the intersection curve of two quadric surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a quadric pair.
    Classify {
        /// Print a JSON report.
        #[arg(long)]
        json: bool,
        /// Input file, or `-` for stdin.
        file: PathBuf,
    },
    /// Print the observed signature sequence and its canonical key.
    Sequence { file: PathBuf },
    /// Plot the eigenvalue curve of the pencil.
    Eigencurve {
        #[arg(long, value_name = "OUT")]
        svg: PathBuf,
        #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], allow_negative_numbers = true, default_values = ["-5", "5"])]
        range: Vec<String>,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 480)]
        height: u32,
        file: PathBuf,
    },
    /// Classify every example pair of the built-in table.
    Corpus,
}

fn read_input(path: &Path) -> Result<InputDocument, CliError> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::Read { path: path.display().to_string(), message: e.to_string() })?;
    parse_input(&text)
}

fn pencil_of(doc: &InputDocument) -> Result<qsic::Pencil, CliError> {
    let a = quadric_from_coeffs(doc.a.clone())?;
    let b = quadric_from_coeffs(doc.b.clone())?;
    Ok(make_pencil(&a, &b)?)
}

fn cmd_classify(file: &Path, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let res = read_input(file).and_then(|d| classify(&d.a, &d.b).map_err(CliError::from));
    let report = match &res {
        Ok(r) => OutputReport::from_result(r),
        Err(e) => OutputReport::from_error(e),
    };
    let code = res.as_ref().err().map_or(exit::OK, CliError::exit_code);
    if json {
        let _ = out.write_all(report.to_json().as_bytes());
    } else if code == exit::OK {
        let _ = out.write_all(report.to_text().as_bytes());
    } else {
        let _ = err.write_all(report.to_text().as_bytes());
    }
    code
}

fn cmd_sequence(file: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let pencil = pencil_of(&read_input(file)?)?;
    let seq = qsic::build_signature_sequence(&pencil)?;
    let key = qsic::canonicalize(&seq);
    let _ = writeln!(out, "raw: {seq}");
    let _ = writeln!(out, "canonical: {}", key.to_sequence());
    let _ = writeln!(out, "key: {key}");
    Ok(())
}

fn cmd_eigencurve(svg: &Path, range: &[String], width: u32, height: u32, file: &Path) -> Result<(), CliError> {
    let bound = |s: &str| -> Result<f64, CliError> {
        let r = parse_rational(s).map_err(|e| CliError::Precondition(format!("--range: {e}")))?;
        Ok(r.to_f64().unwrap_or(f64::NAN))
    };
    let (lo, hi) = (bound(&range[0])?, bound(&range[1])?);
    let pencil = pencil_of(&read_input(file)?)?;
    let text = render_eigencurve_svg(&pencil, lo, hi, width, height)?;
    std::fs::write(svg, text).map_err(|e| CliError::Write { path: svg.display().to_string(), message: e.to_string() })
}

fn cmd_corpus(out: &mut dyn Write) -> i32 {
    let table = Table::builtin();
    let mut ok = 0;
    for case in table.cases() {
        let (a, b) = case.sample_pair();
        let got = classify(a, b);
        let status = match &got {
            Ok(r) if r.case_id() == case.id => {
                ok += 1;
                "ok".to_string()
            }
            Ok(r) => format!("MISMATCH (got {})", r.case_id()),
            Err(e) => format!("ERROR ({e})"),
        };
        let mut line = format!("case {:>2}  {:<10} {status}", case.id, case.segre.to_string());
        if case.substitute.is_some() {
            let (pa, pb) = &case.representative;
            let listed = classify(pa, pb).map(|r| r.case_id().to_string()).unwrap_or_else(|e| e.to_string());
            line.push_str(&format!("  (substitute pair; listed pair gives case {listed})"));
        }
        let _ = writeln!(out, "{line}");
    }
    let total = table.cases().len();
    let _ = writeln!(out, "{ok}/{total} cases classified correctly");
    if ok == total {
        exit::OK
    } else {
        exit::CORPUS_MISMATCH
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let res = match cli.command {
        Command::Classify { json, file } => return cmd_classify(&file, json, out, err),
        Command::Corpus => return cmd_corpus(out),
        Command::Sequence { file } => cmd_sequence(&file, out),
        Command::Eigencurve { svg, range, width, height, file } => cmd_eigencurve(&svg, &range, width, height, &file),
    };
    match res {
        Ok(()) => exit::OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
