//! Request-stage input handling and the CLI error type.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;

/// CLI failure modes, split by exit code.
///
/// `Usage` covers everything wrong with the request itself — unreadable or
/// unparseable input, bad flag combinations, invalid values — and exits
/// with 2. `Domain` covers failures while executing a well-formed request
/// and exits with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(sidon::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    /// Wraps any displayable request-stage failure.
    pub fn usage(e: impl fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

/// Reads and deserializes a JSON file, naming the path on failure.
pub fn read_json_file<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid JSON in {}: {e}", path.display())))
}

/// Resolves the `--input`/`--inline` pair into a deserialized value.
pub fn read_input_json<T: DeserializeOwned>(
    input: &Option<PathBuf>,
    inline: &Option<String>,
) -> Result<T, CliError> {
    match (input, inline) {
        (Some(path), None) => read_json_file(path),
        (None, Some(text)) => serde_json::from_str(text)
            .map_err(|e| CliError::Usage(format!("invalid inline JSON: {e}"))),
        (None, None) => Err(CliError::Usage(
            "an input is required: pass --input <path> or --inline <json>".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap marks --input and --inline as conflicting"),
    }
}
