use std::fs;
use std::io::Write;
use std::path::Path;

use qspc_core::json::CoeffDoc;
use qspc_core::Error;

/// Math or domain failure.
pub const EXIT_MATH: u8 = 2;
/// I/O, parse or usage failure.
pub const EXIT_INPUT: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    pub fn math(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_MATH,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Format(_) => Self::input(e.to_string()),
            _ => Self::math(e.to_string()),
        }
    }
}

pub fn read_doc(path: &Path) -> Result<CoeffDoc, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    CoeffDoc::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Writes to `path`, or stdout when absent.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::input(format!("cannot write to stdout: {e}"))),
    }
}
