use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use sha2::{Digest, Sha256};

/// A line-oriented `key: value` report, printed in insertion order.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.lines.push((key.into(), value.to_string()));
    }

    pub fn verdict(&mut self, name: &str, ok: bool) -> bool {
        self.push(format!("verdict.{name}"), ok);
        ok
    }

    pub fn write_to(&self, out: &mut impl Write) -> io::Result<()> {
        for (k, v) in &self.lines {
            writeln!(out, "{k}: {v}")?;
        }
        Ok(())
    }
}

/// Why a command failed: the exit code and the token printed on the
/// `reason:` line.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub reason: &'static str,
    pub message: String,
}

pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FUEL: i32 = 3;

impl Failure {
    pub fn usage(reason: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            reason,
            message: message.into(),
        }
    }

    pub fn verify(reason: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VERIFY,
            reason,
            message: message.into(),
        }
    }

    pub fn fuel(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_FUEL,
            reason: "fuel_exhausted",
            message: message.into(),
        }
    }
}

/// Reads a file, recording its path and SHA-256 digest in the report.
pub fn read_input(report: &mut Report, name: &str, path: &Path) -> Result<String, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::usage("io_error", format!("{}: {e}", path.display())))?;
    report.push(format!("input.{name}"), path.display());
    report.push(format!("input.{name}.sha256"), hex::encode(Sha256::digest(&bytes)));
    String::from_utf8(bytes).map_err(|_| Failure::usage("parse_error", format!("{}: not UTF-8", path.display())))
}

pub fn write_output(report: &mut Report, name: &str, path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::usage("io_error", format!("{}: {e}", path.display())))?;
    report.push(format!("output.{name}"), path.display());
    Ok(())
}

pub fn list<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let inner: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}
