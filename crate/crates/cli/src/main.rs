//! `z22osc`: run the verification suite, print the spectrum, dump operators.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use z22osc::algebra::operators::{operator_by_name, OPERATOR_NAMES};
use z22osc::algebra::TermRecord;
use z22osc::fock::{matrix_of_with_phase, spectrum, Cutoff};
use z22osc::verify::{run_all, ReportRecord};
use z22osc::{Degree, Error};

#[derive(Parser)]
#[command(
    name = "z22osc",
    version,
    about = "Z2xZ2-graded supersymmetric oscillator toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every verification check; exit 1 if any fails.
    Verify {
        /// Boson cutoff for the matrix checks.
        #[arg(long, default_value_t = 6)]
        cutoff: usize,
        /// Highest energy level in the degeneracy count.
        #[arg(long, default_value_t = 5)]
        max_level: u32,
        /// Seed for the random-word oracle check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Include wall-clock timings (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Print the energy levels and their states per sector.
    Spectrum {
        #[arg(long, default_value_t = 4)]
        max_level: u32,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Print the normal form of a named operator, and its matrix if a cutoff is given.
    Op {
        /// One of H00, Q01, Q10, K1, K2, H, Q1, Q2, a1, a2, Z11.
        name: String,
        #[arg(long)]
        cutoff: Option<usize>,
        /// Specializes the formal phase to u = e^{i·phase} in the matrix.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        phase: f64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

/// A failed command: usage errors exit 2, failed checks exit 1.
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Failure {
        Failure::Io(e.into())
    }
}

/// A CSV writer that emits `header` even when no rows follow.
fn csv_writer<W: Write>(out: W, header: &[&str]) -> Result<csv::Writer<W>, Failure> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(header)?;
    Ok(w)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Verify {
            cutoff,
            max_level,
            seed,
            format,
            timings,
        } => verify(&mut out, cutoff, max_level, seed, format, timings),
        Command::Spectrum { max_level, format } => {
            print_spectrum(&mut out, max_level, format).map(|()| true)
        }
        Command::Op {
            name,
            cutoff,
            phase,
            format,
        } => print_op(&mut out, &name, cutoff, phase, format).map(|()| true),
    };
    match result.and_then(|ok| out.flush().map(|()| ok).map_err(Failure::Io)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[derive(Serialize)]
struct VerifyDocument {
    cutoff: usize,
    max_level: u32,
    seed: u64,
    passed: bool,
    checks: Vec<ReportRecord>,
}

#[derive(Serialize)]
struct VerifyRow<'a> {
    check: &'a str,
    status: &'static str,
    exactness: &'a str,
    residual: Option<f64>,
    tolerance: Option<f64>,
    ms: Option<f64>,
}

fn verify(
    out: &mut impl Write,
    cutoff: usize,
    max_level: u32,
    seed: u64,
    format: Format,
    timings: bool,
) -> Result<bool, Failure> {
    eprintln!("running checks: cutoff {cutoff}, max level {max_level}, seed {seed}");
    let reports = run_all(cutoff, max_level, seed)?;
    let passed = reports.iter().all(|r| r.passed());
    let records: Vec<ReportRecord> = reports.iter().map(|r| r.to_record(timings)).collect();
    match format {
        Format::Human => {
            for r in &records {
                let verdict = if r.status == z22osc::verify::Status::Pass {
                    "PASS"
                } else {
                    "FAIL"
                };
                write!(out, "{verdict} {:<20} {}", r.check, r.exactness)?;
                if let (Some(res), Some(tol)) = (r.residual, r.tolerance) {
                    write!(out, " residual {res:.3e} (tol {tol:.0e})")?;
                }
                if let Some(ms) = r.ms {
                    write!(out, " [{ms:.1} ms]")?;
                }
                writeln!(out)?;
                writeln!(out, "     {}", r.anchor)?;
                for note in &r.notes {
                    writeln!(out, "     - {note}")?;
                }
            }
            let n_pass = records
                .iter()
                .filter(|r| r.status == z22osc::verify::Status::Pass)
                .count();
            writeln!(out, "{n_pass}/{} checks passed", records.len())?;
        }
        Format::Json => {
            let doc = VerifyDocument {
                cutoff,
                max_level,
                seed,
                passed,
                checks: records,
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv_writer(
                &mut *out,
                &[
                    "check",
                    "status",
                    "exactness",
                    "residual",
                    "tolerance",
                    "ms",
                ],
            )?;
            for r in &records {
                w.serialize(VerifyRow {
                    check: &r.check,
                    status: match r.status {
                        z22osc::verify::Status::Pass => "pass",
                        z22osc::verify::Status::Fail => "fail",
                    },
                    exactness: &r.exactness,
                    residual: r.residual,
                    tolerance: r.tolerance,
                    ms: r.ms,
                })?;
            }
            w.flush()?;
        }
    }
    if !passed {
        let failed: Vec<_> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.check.as_str())
            .collect();
        eprintln!("failed checks: {}", failed.join(", "));
    }
    Ok(passed)
}

#[derive(Serialize)]
struct SpectrumDocument {
    max_level: u32,
    levels: Vec<LevelEntry>,
}

#[derive(Serialize)]
struct LevelEntry {
    level: u32,
    degeneracy: usize,
    sectors: Vec<SectorEntry>,
}

#[derive(Serialize)]
struct SectorEntry {
    sector: Degree,
    states: Vec<[u32; 4]>,
}

#[derive(Serialize)]
struct SpectrumRow {
    level: u32,
    sector: Degree,
    n_b: u32,
    n_e: u32,
    n_f1: u32,
    n_f2: u32,
}

fn spectrum_levels(max_level: u32) -> Result<Vec<LevelEntry>, Failure> {
    let cutoff = Cutoff::new((max_level as usize + 1).max(2))?;
    let sp = spectrum(cutoff);
    Ok((0..=max_level)
        .map(|level| LevelEntry {
            level,
            degeneracy: sp.degeneracy(level),
            sectors: Degree::ALL
                .iter()
                .map(|&sector| SectorEntry {
                    sector,
                    states: sp
                        .sector_states(level, sector)
                        .iter()
                        .map(|s| s.as_array())
                        .collect(),
                })
                .collect(),
        })
        .collect())
}

fn print_spectrum(out: &mut impl Write, max_level: u32, format: Format) -> Result<(), Failure> {
    let levels = spectrum_levels(max_level)?;
    match format {
        Format::Human => {
            for entry in &levels {
                writeln!(
                    out,
                    "level {} (degeneracy {})",
                    entry.level, entry.degeneracy
                )?;
                for sector in &entry.sectors {
                    let kets: Vec<String> = sector
                        .states
                        .iter()
                        .map(|[b, e, f1, f2]| format!("|{b},{e},{f1},{f2}>"))
                        .collect();
                    let cell = if kets.is_empty() {
                        "-".to_string()
                    } else {
                        kets.join(" ")
                    };
                    writeln!(out, "  {}: {cell}", sector.sector)?;
                }
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &SpectrumDocument { max_level, levels })
                .map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv_writer(
                &mut *out,
                &["level", "sector", "n_b", "n_e", "n_f1", "n_f2"],
            )?;
            for entry in &levels {
                for s in &entry.sectors {
                    for &[n_b, n_e, n_f1, n_f2] in &s.states {
                        w.serialize(SpectrumRow {
                            level: entry.level,
                            sector: s.sector,
                            n_b,
                            n_e,
                            n_f1,
                            n_f2,
                        })?;
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct OpDocument {
    name: String,
    polynomial: Vec<TermRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<serde_json::Value>,
}

#[derive(Serialize)]
struct TermRow {
    word: String,
    re: String,
    im: String,
    upow: i32,
}

#[derive(Serialize)]
struct EntryRow {
    row: usize,
    col: usize,
    re: f64,
    im: f64,
}

fn print_op(
    out: &mut impl Write,
    name: &str,
    cutoff: Option<usize>,
    phase: f64,
    format: Format,
) -> Result<(), Failure> {
    let poly = operator_by_name(name).ok_or_else(|| {
        Failure::Usage(format!(
            "{}; known operators: {}",
            Error::UnknownOperator(name.to_string()),
            OPERATOR_NAMES.join(", ")
        ))
    })?;
    let matrix = match cutoff {
        Some(n) => Some(matrix_of_with_phase(
            &poly,
            Cutoff::new(n)?,
            Complex64::from_polar(1.0, phase),
        )),
        None => None,
    };
    match format {
        Format::Human => {
            writeln!(out, "{name} = {poly}")?;
            if let Some(m) = &matrix {
                writeln!(out, "matrix: dim {}, {} non-zero entries", m.dim(), m.nnz())?;
                for (r, c, v) in m.entries() {
                    writeln!(out, "  ({r}, {c}) {} {:+}i", v.re, v.im)?;
                }
            }
        }
        Format::Json => {
            let doc = OpDocument {
                name: name.to_string(),
                polynomial: poly.to_records(),
                matrix: matrix
                    .map(|m| serde_json::from_str(&m.to_json()))
                    .transpose()
                    .map_err(io::Error::from)?,
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let header: &[&str] = match matrix {
                Some(_) => &["row", "col", "re", "im"],
                None => &["word", "re", "im", "upow"],
            };
            let mut w = csv_writer(&mut *out, header)?;
            match &matrix {
                Some(m) => {
                    for &(row, col, v) in m.entries() {
                        w.serialize(EntryRow {
                            row,
                            col,
                            re: v.re,
                            im: v.im,
                        })?;
                    }
                }
                None => {
                    for record in poly.to_records() {
                        let word: Vec<String> =
                            record.word.iter().map(|g| g.token().to_string()).collect();
                        w.serialize(TermRow {
                            word: word.join(" "),
                            re: record.coeff.re,
                            im: record.coeff.im,
                            upow: record.coeff.upow,
                        })?;
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}
