//! Commands behind the `sl3tensor` binary.
//!
//! Every command returns a [`Report`]: the JSON envelope, a plain-text
//! rendering and the process exit code. Failures that prevent a result
//! from being produced are [`CliError`]s, which render the same way.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub mod appendix;
pub mod cache;
pub mod commands;

pub use appendix::{appendix, AppendixArgs, Which};
pub use commands::{char_query, decompose, linkage, verify_tables, CharKind};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const FAILURE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const VERIFICATION: u8 = 3;
    pub const UNKNOWN_CHARACTER: u8 = 4;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// The JSON envelope printed with `--json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub errata: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub result: CommandResult,
    pub text: String,
    pub code: u8,
}

impl Report {
    pub fn ok(payload: Value, text: String, errata: Vec<String>) -> Report {
        Report {
            result: CommandResult {
                status: Status::Ok,
                payload,
                errata,
            },
            text,
            code: exit::OK,
        }
    }

    pub fn failed(payload: Value, text: String, errata: Vec<String>, code: u8) -> Report {
        Report {
            result: CommandResult {
                status: Status::Error,
                payload,
                errata,
            },
            text,
            code,
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.result).expect("serializable");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: u8,
    pub message: String,
    pub detail: Value,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: exit::USAGE,
            message: message.into(),
            detail: Value::Null,
        }
    }

    pub fn into_report(self) -> Report {
        let mut payload = json!({ "error": self.message, "code": self.code });
        if !self.detail.is_null() {
            payload["detail"] = self.detail;
        }
        Report::failed(
            payload,
            format!("error: {}\n", self.message),
            Vec::new(),
            self.code,
        )
    }
}

impl From<sl3tensor::Error> for CliError {
    fn from(e: sl3tensor::Error) -> CliError {
        use sl3tensor::Error as E;
        let message = e.to_string();
        match e {
            E::UnknownTiltingCharacter { p, weight } => CliError {
                code: exit::UNKNOWN_CHARACTER,
                message,
                detail: unknown_tilting_detail(p, weight),
            },
            E::UnsupportedPrime(_)
            | E::NotDominant(_)
            | E::NotRestricted { .. }
            | E::UnknownAtom(..)
            | E::InvalidMultiplier(_)
            | E::DonkinPrecondition { .. } => CliError::usage(message),
            _ => CliError {
                code: exit::FAILURE,
                message,
                detail: Value::Null,
            },
        }
    }
}

/// Lists the weights whose characters are fixed by convention, so the
/// caller can see what is covered.
fn unknown_tilting_detail(p: u32, weight: sl3tensor::Weight) -> Value {
    use sl3tensor::characters::{convention_weights, Provenance};
    let conv = sl3tensor::Prime::new(p)
        .map(convention_weights)
        .unwrap_or_default();
    json!({
        "p": p,
        "weight": weight,
        "convention_weights": conv,
        "convention_provenance": Provenance::Convention,
    })
}

impl From<pathalg::Error> for CliError {
    fn from(e: pathalg::Error) -> CliError {
        use pathalg::Error as E;
        let message = e.to_string();
        match e {
            E::UnsupportedField(_)
            | E::UnknownPresentation(_)
            | E::UnknownVertex(_)
            | E::UnknownArrow(_)
            | E::InvalidPresentation(_)
            | E::Json(_) => CliError::usage(message),
            _ => CliError {
                code: exit::FAILURE,
                message,
                detail: Value::Null,
            },
        }
    }
}

pub type CliResult = Result<Report, CliError>;

/// Collapses an error into a report.
pub fn finish(r: CliResult) -> Report {
    r.unwrap_or_else(CliError::into_report)
}
