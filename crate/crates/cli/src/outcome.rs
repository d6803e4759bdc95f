use std::io::Write;
use std::process::ExitCode;

use serde_json::{json, Value};
use svcfc_core::Error;

pub const SUCCESS: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const INPUT: u8 = 2;
pub const CAP: u8 = 3;

/// A finished command with its exit code and both report forms.
pub struct Outcome {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    pub fn new(code: u8, text: String, json: Value) -> Self {
        Outcome { code, text, json }
    }

    pub fn emit(self, as_json: bool) -> ExitCode {
        let mut out = std::io::stdout().lock();
        let _ = if as_json {
            let mut doc = self.json;
            if let Value::Object(map) = &mut doc {
                map.insert("exitCode".into(), json!(self.code));
            }
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            )
        } else {
            out.write_all(self.text.as_bytes())
        };
        ExitCode::from(self.code)
    }
}

/// A command that could not produce a verdict.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: INPUT,
            message: message.into(),
        }
    }

    pub fn emit(self, as_json: bool) -> ExitCode {
        if as_json {
            let doc = json!({ "error": self.message, "exitCode": self.code });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
        } else {
            eprintln!("error: {}", self.message);
        }
        ExitCode::from(self.code)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => CAP,
            Error::ExceedsMaxK(_) | Error::NotProper(..) | Error::Unsatisfied(_) => NEGATIVE,
            _ => INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub type CmdResult = Result<Outcome, Failure>;
