//! Command-line front end: `list`, `solve`, `verify` and `scan`.
//!
//! JSON is the canonical output; CSV and tables carry the same rows with
//! floats fixed at 12 decimals.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::problems::{find, registry, Params, ProblemError, RadiusProblem, Variant};
use crate::rootfind::{self, RootError, RootResult};
use crate::series::DOMAIN_CAP;
use crate::verification::{
    full_report, paper_match, DiscrepancyRecord, FullReport, PaperMatch, VerifyOptions,
    DEFAULT_SEED,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "bohr-radii",
    version,
    about = "Bohr-type radii for stable harmonic and logharmonic classes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List registered problems whose id contains FILTER.
    List {
        #[arg(default_value = "")]
        filter: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Solve one problem, or all of them.
    Solve {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = rootfind::DEFAULT_TOLERANCE)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Solve and verify everything, listing discrepancies with printed values.
    Verify {
        #[arg(long, default_value_t = rootfind::DEFAULT_TOLERANCE)]
        tol: f64,
        /// Exit nonzero if any printed root is not reproduced.
        #[arg(long)]
        strict_paper: bool,
        /// Seed for the random admissible sequences.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sample F(r), or the class-level functional and its constant, on a grid.
    Scan {
        id: String,
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        #[arg(long, default_value_t = 0.5)]
        to: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
        /// Emit (r, LHS, constant) instead of (r, F).
        #[arg(long)]
        curves: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown problem id `{0}`")]
    UnknownId(String),
    #[error("{id}: {source}")]
    NoSignChange { id: String, source: RootError },
    #[error("{0}")]
    Solve(String),
    #[error("scan range: need 0 <= from < to <= 1 - 1e-9 and points >= 1 (from = {from}, to = {to}, points = {points})")]
    Range { from: f64, to: f64, points: usize },
    #[error("{count} printed roots are not reproduced")]
    PaperMismatch { count: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownId(_) | CliError::Range { .. } => 2,
            CliError::NoSignChange { .. } => 3,
            CliError::PaperMismatch { .. } => 4,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProblemRow {
    pub id: String,
    pub theorem_ref: String,
    pub variant: Variant,
    pub params: Params,
    pub root: Option<f64>,
    pub bracket: Option<[f64; 2]>,
    pub residual: Option<f64>,
    pub unique_certified: Option<bool>,
    pub paper_root: Option<f64>,
    /// `None` until the problem has been solved.
    pub paper_match: Option<PaperMatch>,
    pub flags: Vec<String>,
}

impl ProblemRow {
    fn unsolved(p: &RadiusProblem) -> Self {
        Self {
            id: p.id.clone(),
            theorem_ref: p.theorem_ref.clone(),
            variant: p.variant,
            params: p.params.clone(),
            root: None,
            bracket: None,
            residual: None,
            unique_certified: None,
            paper_root: p.paper_root,
            paper_match: None,
            flags: Vec::new(),
        }
    }

    fn solved(p: &RadiusProblem, r: &RootResult) -> Self {
        let mut row = Self::unsolved(p);
        row.root = Some(r.root);
        row.bracket = Some([r.bracket.0, r.bracket.1]);
        row.residual = Some(r.residual);
        row.unique_certified = Some(r.unique_certified);
        row.paper_match = Some(paper_match(r.root, p.paper_root));
        if row.paper_match == Some(PaperMatch::Mismatch) {
            row.flags.push("paper_mismatch".into());
        }
        if !r.unique_certified {
            row.flags.push("not_monotone".into());
        }
        row
    }
}

/// Canonical document for `list`, `solve` and `verify`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputDocument {
    pub schema_version: u32,
    pub problems: Vec<ProblemRow>,
    pub discrepancies: Vec<DiscrepancyRecord>,
}

impl OutputDocument {
    fn new(problems: Vec<ProblemRow>, discrepancies: Vec<DiscrepancyRecord>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            problems,
            discrepancies,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub r: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constant: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanDocument {
    pub schema_version: u32,
    pub problem_id: String,
    pub curves: bool,
    pub rows: Vec<ScanRow>,
}

fn lookup(id: &str) -> Result<RadiusProblem, CliError> {
    find(id).map_err(|e| match e {
        ProblemError::UnknownProblem(id) => CliError::UnknownId(id),
        other => CliError::Solve(other.to_string()),
    })
}

pub fn cmd_list(filter: &str) -> OutputDocument {
    let rows = registry()
        .iter()
        .filter(|p| p.id.contains(filter))
        .map(ProblemRow::unsolved)
        .collect();
    OutputDocument::new(rows, Vec::new())
}

/// Solves one problem (`Some(id)`) or the whole registry (`None`). Failures
/// in `--all` mode are returned alongside the rows that did solve.
pub fn cmd_solve(
    id: Option<&str>,
    tol: f64,
) -> Result<(OutputDocument, Vec<rootfind::SolveFailure>), CliError> {
    match id {
        Some(id) => {
            let p = lookup(id)?;
            let r = rootfind::solve(&p, tol).map_err(|source| match source {
                RootError::NoSignChange { .. } => CliError::NoSignChange {
                    id: id.to_owned(),
                    source,
                },
                other => CliError::Solve(format!("{id}: {other}")),
            })?;
            Ok((
                OutputDocument::new(vec![ProblemRow::solved(&p, &r)], Vec::new()),
                Vec::new(),
            ))
        }
        None => {
            let problems = registry();
            let mut rows = Vec::new();
            let mut failures = Vec::new();
            for (p, outcome) in problems.iter().zip(rootfind::solve_many(&problems, tol)) {
                match outcome {
                    Ok(r) => rows.push(ProblemRow::solved(p, &r)),
                    Err(f) => {
                        let mut row = ProblemRow::unsolved(p);
                        row.flags.push("solve_failed".into());
                        rows.push(row);
                        failures.push(f);
                    }
                }
            }
            Ok((OutputDocument::new(rows, Vec::new()), failures))
        }
    }
}

/// Runs the full verification and flattens it into an output document.
pub fn cmd_verify(options: &VerifyOptions) -> (OutputDocument, FullReport) {
    let report = full_report(options);
    let rows = registry()
        .iter()
        .map(|p| match (report.solution(&p.id), report.report(&p.id)) {
            (Some(s), Some(v)) => {
                let mut row = ProblemRow::solved(p, s);
                row.flags = v.flags().into_iter().map(String::from).collect();
                row
            }
            _ => {
                let mut row = ProblemRow::unsolved(p);
                row.flags.push("solve_failed".into());
                row
            }
        })
        .collect();
    let doc = OutputDocument::new(rows, report.discrepancies.clone());
    (doc, report)
}

pub fn cmd_scan(
    id: &str,
    from: f64,
    to: f64,
    points: usize,
    curves: bool,
) -> Result<ScanDocument, CliError> {
    if !(from >= 0.0 && from < to && to <= 1.0 - DOMAIN_CAP && points >= 1) {
        return Err(CliError::Range { from, to, points });
    }
    let p = lookup(id)?;
    let class = p.mapping_class();
    let constant = p.conclusion_constant();
    let step = if points > 1 {
        (to - from) / (points - 1) as f64
    } else {
        0.0
    };
    let rows = (0..points)
        .map(|i| {
            let r = if i + 1 == points && points > 1 {
                to
            } else {
                from + i as f64 * step
            };
            if curves {
                ScanRow {
                    r,
                    f: None,
                    lhs: p.functional.class_bound(class, r).ok(),
                    constant: Some(constant),
                }
            } else {
                ScanRow {
                    r,
                    f: p.evaluate(r).ok(),
                    lhs: None,
                    constant: None,
                }
            }
        })
        .collect();
    Ok(ScanDocument {
        schema_version: SCHEMA_VERSION,
        problem_id: p.id,
        curves,
        rows,
    })
}

fn fixed(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.12}")).unwrap_or_default()
}

fn opt_bool(x: Option<bool>) -> String {
    x.map(|b| b.to_string()).unwrap_or_default()
}

fn match_label(m: Option<PaperMatch>) -> &'static str {
    let Some(m) = m else { return "" };
    match m {
        PaperMatch::Match3SF => "Match3SF",
        PaperMatch::Mismatch => "Mismatch",
        PaperMatch::NoClaim => "NoClaim",
    }
}

fn variant_label(v: Variant) -> &'static str {
    match v {
        Variant::PaperLiteral => "PaperLiteral",
        Variant::DerivedCorrected => "DerivedCorrected",
    }
}

const PROBLEM_HEADER: [&str; 12] = [
    "id",
    "theorem_ref",
    "variant",
    "params",
    "root",
    "bracket_lo",
    "bracket_hi",
    "residual",
    "unique_certified",
    "paper_root",
    "paper_match",
    "flags",
];

const DISCREPANCY_HEADER: [&str; 5] = [
    "problem_id",
    "kind",
    "paper_value",
    "computed_value",
    "explanation",
];

fn problem_record(row: &ProblemRow) -> Vec<String> {
    vec![
        row.id.clone(),
        row.theorem_ref.clone(),
        variant_label(row.variant).into(),
        row.params.compact(),
        fixed(row.root),
        fixed(row.bracket.map(|b| b[0])),
        fixed(row.bracket.map(|b| b[1])),
        fixed(row.residual),
        opt_bool(row.unique_certified),
        fixed(row.paper_root),
        match_label(row.paper_match).into(),
        row.flags.join(";"),
    ]
}

fn discrepancy_record(d: &DiscrepancyRecord) -> Vec<String> {
    vec![
        d.problem_id.clone(),
        format!("{:?}", d.kind),
        fixed(Some(d.paper_value)),
        fixed(Some(d.computed_value)),
        d.explanation.clone(),
    ]
}

fn csv_section(
    header: &[&str],
    records: impl Iterator<Item = Vec<String>>,
) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in records {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    out.push_str(&line(
        widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    ));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

/// Renders a problem document. CSV carries the discrepancies as a second
/// header section after a blank line.
pub fn render(doc: &OutputDocument, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(doc)? + "\n"),
        Format::Csv => {
            let mut s = csv_section(&PROBLEM_HEADER, doc.problems.iter().map(problem_record))?;
            if !doc.discrepancies.is_empty() {
                s.push('\n');
                s.push_str(&csv_section(
                    &DISCREPANCY_HEADER,
                    doc.discrepancies.iter().map(discrepancy_record),
                )?);
            }
            Ok(s)
        }
        Format::Table => {
            let header = [
                "id", "variant", "params", "root", "printed", "match", "flags",
            ];
            let rows: Vec<Vec<String>> = doc
                .problems
                .iter()
                .map(|r| {
                    vec![
                        r.id.clone(),
                        variant_label(r.variant).into(),
                        r.params.compact(),
                        fixed(r.root),
                        r.paper_root.map(|v| v.to_string()).unwrap_or_default(),
                        match_label(r.paper_match).into(),
                        r.flags.join(","),
                    ]
                })
                .collect();
            let mut s = table(&header, &rows);
            if !doc.discrepancies.is_empty() {
                s.push_str(&format!("\n{} discrepancies\n", doc.discrepancies.len()));
                let rows: Vec<Vec<String>> =
                    doc.discrepancies.iter().map(discrepancy_record).collect();
                s.push_str(&table(&DISCREPANCY_HEADER, &rows));
            }
            Ok(s)
        }
    }
}

pub fn render_scan(doc: &ScanDocument, format: Format) -> Result<String, CliError> {
    let header: &[&str] = if doc.curves {
        &["r", "lhs", "constant"]
    } else {
        &["r", "F"]
    };
    let records = doc.rows.iter().map(|row| {
        let mut v = vec![fixed(Some(row.r))];
        if doc.curves {
            v.push(fixed(row.lhs));
            v.push(fixed(row.constant));
        } else {
            v.push(fixed(row.f));
        }
        v
    });
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(doc)? + "\n"),
        Format::Csv => csv_section(header, records),
        Format::Table => Ok(table(header, &records.collect::<Vec<_>>())),
    }
}

fn emit(text: &str, output: &OutputArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Executes a parsed command, writing to `stdout` unless `--out` is given.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::List { filter, output } => {
            emit(&render(&cmd_list(&filter), output.format)?, &output, stdout)
        }
        Command::Solve {
            id,
            all,
            tol,
            output,
        } => {
            let (doc, failures) = cmd_solve(if all { None } else { id.as_deref() }, tol)?;
            emit(&render(&doc, output.format)?, &output, stdout)?;
            if let Some(f) = failures
                .iter()
                .find(|f| matches!(f.error, RootError::NoSignChange { .. }))
            {
                return Err(CliError::NoSignChange {
                    id: f.problem_id.clone(),
                    source: f.error.clone(),
                });
            }
            match failures.first() {
                Some(f) => Err(CliError::Solve(f.to_string())),
                None => Ok(()),
            }
        }
        Command::Verify {
            tol,
            strict_paper,
            seed,
            output,
        } => {
            let options = VerifyOptions {
                tol,
                seed,
                ..VerifyOptions::default()
            };
            let (doc, report) = cmd_verify(&options);
            emit(&render(&doc, output.format)?, &output, stdout)?;
            let count = report
                .reports
                .iter()
                .filter(|r| r.paper_match == PaperMatch::Mismatch)
                .count();
            if strict_paper && count > 0 {
                return Err(CliError::PaperMismatch { count });
            }
            match report.failures.first() {
                Some(f) => Err(CliError::Solve(f.to_string())),
                None => Ok(()),
            }
        }
        Command::Scan {
            id,
            from,
            to,
            points,
            curves,
            output,
        } => {
            let doc = cmd_scan(&id, from, to, points, curves)?;
            emit(&render_scan(&doc, output.format)?, &output, stdout)
        }
    }
}

/// Entry point for the binary: parses `std::env::args`, runs, and returns
/// the process exit code.
pub fn main_exit_code() -> i32 {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
