//! Report documents and output writing.
//!
//! Every report is a single JSON object whose first key is the request echo;
//! struct field order fixes the key order, and all maps inside the library
//! types are ordered, so identical requests produce byte-identical reports.

use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;

use sidon::{
    AbsoluteValue, DensityReport, FiniteSet, Magnitude, PerturbationTrace, Rational, Verdict,
    WeightVector,
};

use crate::input::CliError;

#[derive(Serialize)]
pub struct VerifyEcho {
    pub command: &'static str,
    pub input: Vec<Rational>,
    pub h: u32,
    pub method: &'static str,
    pub abs: AbsoluteValue,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub request: VerifyEcho,
    pub verdict: Verdict,
}

/// Object form of the perturb input: the sequence plus optional defaults
/// that command-line flags may override.
#[derive(serde::Deserialize)]
pub struct PerturbInput {
    pub alpha: Vec<Rational>,
    #[serde(default)]
    pub epsilons: Option<Vec<Rational>>,
    #[serde(default)]
    pub h: Option<u32>,
    #[serde(default)]
    pub abs: Option<AbsoluteValue>,
}

#[derive(Serialize)]
pub struct PerturbEcho {
    pub command: &'static str,
    pub alpha: Vec<Rational>,
    pub epsilons: Vec<Magnitude>,
    pub h: u32,
    pub abs: AbsoluteValue,
    pub stream: bool,
    pub allow_duplicates: bool,
}

#[derive(Serialize)]
pub struct PerturbReport {
    pub request: PerturbEcho,
    pub beta: Vec<Rational>,
    pub trace: PerturbationTrace,
}

#[derive(Serialize)]
pub struct WeightsEcho {
    pub command: &'static str,
    pub k: usize,
    pub h: u32,
    pub canonical: bool,
}

#[derive(Serialize)]
pub struct WeightsReport {
    pub request: WeightsEcho,
    pub count: usize,
    pub weights: Vec<WeightVector>,
}

#[derive(Serialize)]
pub struct SumsetEcho {
    pub command: &'static str,
    pub op: &'static str,
    pub input: FiniteSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
}

#[derive(Serialize)]
pub struct SumsetReport {
    pub request: SumsetEcho,
    pub result: FiniteSet,
}

#[derive(Serialize)]
pub struct DensityEcho {
    pub command: &'static str,
    pub k: usize,
    pub h: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    pub sampler: String,
    pub seed: u64,
    pub exact: bool,
}

#[derive(Serialize)]
pub struct DensityCliReport {
    pub request: DensityEcho,
    pub report: DensityReport,
}

/// Serializes the report as one JSON line and writes it to stdout or, when
/// a path is given, atomically to that file.
pub fn write_report<T: Serialize>(output: &Option<PathBuf>, report: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string(report)
        .map_err(|e| CliError::Usage(format!("cannot serialize report: {e}")))?;
    text.push('\n');
    write_text(output, &text)
}

/// Writes raw report text; file output goes through a temporary file in the
/// target directory followed by a rename.
pub fn write_text(output: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
            let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or(std::path::Path::new(".")))
                .map_err(|e| CliError::Usage(format!("cannot create temporary file: {e}")))?;
            tmp.write_all(text.as_bytes())
                .map_err(|e| CliError::Usage(format!("cannot write report: {e}")))?;
            tmp.persist(path)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(())
        }
    }
}
