mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use chern::Error;
use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command};
use commands::Outcome;

const SCHEMA: u32 = 1;

const EXIT_INPUT: u8 = 2;
const EXIT_NOT_STABILIZED: u8 = 3;
const EXIT_UNSUPPORTED: u8 = 4;
const EXIT_ASSERTION: u8 = 5;
const EXIT_RESOURCE: u8 = 6;

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. }
        | Error::DuplicateVariable(_)
        | Error::NotPrime(_)
        | Error::UnknownVariable(_)
        | Error::RingMismatch
        | Error::ZeroPolynomial
        | Error::ZeroIdeal
        | Error::InvalidArgument(_) => EXIT_INPUT,
        Error::NotStabilized { .. } => EXIT_NOT_STABILIZED,
        Error::Unsupported(_) | Error::NonHomogeneous(_) | Error::PositiveDimension(_) | Error::UnitIdeal => {
            EXIT_UNSUPPORTED
        }
        Error::ResourceLimit(_) | Error::Overflow(_) | Error::SamplingFailed(_) => EXIT_RESOURCE,
    }
}

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::Parse { .. } => "parse",
        Error::DuplicateVariable(_) => "duplicate_variable",
        Error::NotPrime(_) => "not_prime",
        Error::UnknownVariable(_) => "unknown_variable",
        Error::RingMismatch => "ring_mismatch",
        Error::ZeroPolynomial => "zero_polynomial",
        Error::ZeroIdeal => "zero_ideal",
        Error::UnitIdeal => "unit_ideal",
        Error::PositiveDimension(_) => "positive_dimension",
        Error::NonHomogeneous(_) => "non_homogeneous",
        Error::Unsupported(_) => "unsupported",
        Error::ResourceLimit(_) => "resource_limit",
        Error::NotStabilized { .. } => "not_stabilized",
        Error::SamplingFailed(_) => "sampling_failed",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Overflow(_) => "overflow",
    }
}

fn error_json(err: &Error) -> Value {
    let mut v = json!({ "kind": error_kind(err), "message": err.to_string() });
    if let Error::NotStabilized { nmax, values } = err {
        v["nmax"] = json!(nmax);
        v["partial_series"] = json!(values);
    }
    v
}

fn run(command: &Command) -> chern::Result<Outcome> {
    match command {
        Command::Gb(a) => commands::gb(a),
        Command::Invariants(a) => commands::invariants(a),
        Command::Decompose(a) => commands::decompose(a),
        Command::Check(a) => commands::check(a),
        Command::VerifyPaper(a) => commands::verify_paper(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = run(&cli.command);
    let elapsed_ms = started.elapsed().as_millis() as u64;

    let mut doc = json!({
        "schema": SCHEMA,
        "tool": { "name": "chern", "version": env!("CARGO_PKG_VERSION") },
        "command": cli.command,
        "timing": { "elapsed_ms": elapsed_ms },
    });
    let code = match &outcome {
        Ok(out) => {
            doc["result"] = out.result.clone();
            doc["passed"] = json!(out.passed);
            if out.passed {
                0
            } else {
                EXIT_ASSERTION
            }
        }
        Err(err) => {
            doc["error"] = error_json(err);
            exit_code(err)
        }
    };

    let text = serde_json::to_string_pretty(&doc).expect("documents serialize");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_RESOURCE);
        }
    }
    let mut stdout = std::io::stdout().lock();
    // A closed pipe on stdout is not an error worth reporting.
    if cli.json {
        let _ = writeln!(stdout, "{text}");
    } else {
        match &outcome {
            Ok(out) => {
                let mut body = render::readable(&out.result);
                if !out.passed {
                    body.push_str("FAILED: at least one asserted property does not hold\n");
                }
                let _ = writeln!(stdout, "{body}elapsed: {elapsed_ms} ms");
            }
            Err(err) => {
                eprintln!("error: {err}");
                if let Error::NotStabilized { values, .. } = err {
                    eprintln!("partial series: {values:?}");
                }
            }
        }
    }
    ExitCode::from(code)
}
