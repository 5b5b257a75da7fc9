//! Argument parsing, error classification and artifact output.

use std::fs;
use std::path::Path;

use orthoconn::exact_arith::parse_rational;
use orthoconn::{Error, Kappa, Permutation, Rational};
use serde_json::Value;
use thiserror::Error as ThisError;

use crate::cli::{Format, Output};

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::DimensionMismatch { .. }
            | Error::ParityMismatch { .. }
            | Error::InvalidParameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn rationals(s: &str) -> CliResult<Vec<Rational>> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).ok_or_else(|| usage(format!("not a rational: {t:?}"))))
        .collect()
}

pub fn naturals(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| usage(format!("not a nonnegative integer: {t:?}"))))
        .collect()
}

/// Checks `values.len()` against `expected` when `--d` fixed it.
pub fn check_len<T>(what: &str, values: &[T], expected: Option<usize>) -> CliResult<()> {
    match expected {
        Some(e) if e != values.len() => {
            Err(usage(format!("--{what} has {} entries, expected {e}", values.len())))
        }
        _ if values.is_empty() => Err(usage(format!("--{what} is empty"))),
        _ => Ok(()),
    }
}

/// `kappa_1..kappa_{d+1}`; `d` is inferred when absent.
pub fn kappa(s: &str, d: Option<usize>) -> CliResult<Kappa> {
    let v = rationals(s)?;
    check_len("kappa", &v, d.map(|d| d + 1))?;
    if v.len() < 2 {
        return Err(usage("--kappa needs at least two entries"));
    }
    Ok(Kappa::new(v)?)
}

pub fn tau(s: &str, m: usize) -> CliResult<Permutation> {
    Ok(Permutation::parse(s, m)?)
}

/// `tau` when given, otherwise every element of `S_m`.
pub fn taus(s: Option<&str>, m: usize) -> CliResult<Vec<Permutation>> {
    match s {
        Some(s) => Ok(vec![tau(s, m)?]),
        None => Ok(Permutation::all(m)),
    }
}

pub fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn grid<T: ToString>(m: &[Vec<T>]) -> Vec<Vec<String>> {
    m.iter().map(|r| strings(r)).collect()
}

/// Rows of `"p/q"` cells under a header of row/column labels.
pub fn csv_grid<L: std::fmt::Debug, T: ToString>(labels: &[L], m: &[Vec<T>]) -> String {
    let mut s = String::from("row");
    for l in labels {
        s.push_str(&format!(",\"{l:?}\""));
    }
    s.push('\n');
    for (l, row) in labels.iter().zip(m) {
        s.push_str(&format!("\"{l:?}\""));
        for c in row {
            s.push(',');
            s.push_str(&c.to_string());
        }
        s.push('\n');
    }
    s
}

/// What a command produces: a JSON document, optionally a CSV rendering,
/// and side artifacts such as diff reports.
pub struct Artifact {
    pub stem: String,
    pub json: Value,
    pub csv: Option<String>,
    pub extra: Vec<(String, String)>,
    /// Set when a verification inside the command failed; output is still written.
    pub failure: Option<String>,
}

impl Artifact {
    pub fn new(stem: impl Into<String>, json: Value) -> Self {
        Self { stem: stem.into(), json, csv: None, extra: Vec::new(), failure: None }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }
}

/// Writes the artifact to `--out` or stdout. Extra artifacts without
/// `--out` go to stderr.
pub fn emit(a: &Artifact, out: &Output) -> CliResult<()> {
    let body = match out.format {
        Format::Json => serde_json::to_string_pretty(&a.json).expect("JSON values serialize") + "\n",
        Format::Csv => a.csv.clone().ok_or_else(|| usage(format!("{} has no CSV form; use --format json", a.stem)))?,
    };
    let ext = match out.format {
        Format::Json => "json",
        Format::Csv => "csv",
    };
    match &out.out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            write(dir, &format!("{}.{ext}", a.stem), &body)?;
            for (name, text) in &a.extra {
                write(dir, name, text)?;
            }
        }
        None => {
            print!("{body}");
            for (name, text) in &a.extra {
                eprintln!("--- {name}");
                eprint!("{text}");
            }
        }
    }
    Ok(())
}

fn write(dir: &Path, name: &str, text: &str) -> CliResult<()> {
    fs::write(dir.join(name), text)?;
    eprintln!("wrote {}", dir.join(name).display());
    Ok(())
}
