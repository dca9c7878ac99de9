//! Command-line front end for `mathieu-core`.
//!
//! [`run`] parses an argument vector, evaluates, and writes CSV or JSON
//! records. Exit codes: 0 on success, 2 on usage errors, 1 on evaluation
//! errors (reported as a JSON object on the error stream).

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::Parser;

mod commands;
pub mod parse;
pub mod record;

pub use commands::Cli;
pub use record::{emit, EmitError, Format, Record, Value};

/// Anything that ends a command with exit code 1.
#[derive(Debug)]
pub enum Failure {
    Eval(mathieu_core::Error),
    Emit(EmitError),
    Io(std::io::Error),
    Parameter(String),
}

impl Failure {
    pub fn kind(&self) -> &'static str {
        match self {
            Failure::Eval(e) => e.kind(),
            Failure::Emit(EmitError::NonFinite { .. }) => "non_finite",
            Failure::Emit(EmitError::Schema { .. }) => "schema",
            Failure::Io(_) => "io",
            Failure::Parameter(_) => "parameter",
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Eval(e) => e.fmt(f),
            Failure::Emit(e) => e.fmt(f),
            Failure::Io(e) => write!(f, "io: {e}"),
            Failure::Parameter(m) => write!(f, "parameter: {m}"),
        }
    }
}

impl From<mathieu_core::Error> for Failure {
    fn from(e: mathieu_core::Error) -> Self {
        Failure::Eval(e)
    }
}

impl From<EmitError> for Failure {
    fn from(e: EmitError) -> Self {
        Failure::Emit(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match commands::execute(&cli).and_then(|bytes| deliver(&cli, &bytes, stdout)) {
        Ok(()) => 0,
        Err(failure) => {
            let obj = serde_json::json!({ "error": failure.kind(), "message": failure.to_string() });
            let _ = writeln!(stderr, "{obj}");
            1
        }
    }
}

fn deliver(cli: &Cli, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), Failure> {
    match cli.output().out.as_ref() {
        Some(path) => std::fs::write(path, bytes)?,
        None => {
            stdout.write_all(bytes)?;
            stdout.flush()?;
        }
    }
    Ok(())
}
