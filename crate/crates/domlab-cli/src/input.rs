//! Input plumbing: file-or-stdin reading and order-preserving parallel
//! line processing.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::Context;
use serde_json::Value;

use crate::{RunStatus, StreamArgs};

pub fn read_to_string(path: Option<&Path>) -> anyhow::Result<(String, String)> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = fs::read_to_string(p)
                .with_context(|| format!("reading {}", p.display()))?;
            Ok((p.display().to_string(), text))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .context("reading standard input")?;
            Ok(("-".to_string(), text))
        }
    }
}

/// Per-line outcome. Parse problems are warnings in non-strict mode;
/// anything in `HardError` makes the whole run exit non-zero.
pub enum LineOut {
    Report(Value),
    Skip,
    ParseError(Value),
    HardError(Value),
}

/// Applies `per_line` to every input line (1-based numbering), printing one
/// JSON object per produced report in input order.
///
/// Lines that are empty or start with ">>" (graph6 corpus headers) are
/// skipped before `per_line` sees them. In strict mode processing is
/// sequential and stops at the first error.
pub fn run_stream(
    stream: &StreamArgs,
    per_line: impl Fn(&str, usize, &str) -> LineOut + Sync,
) -> anyhow::Result<RunStatus> {
    let (source, text) = read_to_string(stream.input.as_deref())?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with(">>"))
        .collect();

    if stream.strict {
        for &(no, line) in &lines {
            match per_line(&source, no, line) {
                LineOut::Report(v) => println!("{v}"),
                LineOut::Skip => {}
                LineOut::ParseError(v) | LineOut::HardError(v) => {
                    println!("{v}");
                    return Ok(RunStatus::StrictAbort);
                }
            }
        }
        return Ok(RunStatus::Clean);
    }

    let outputs = in_pool(stream.jobs, || {
        use rayon::prelude::*;
        lines
            .par_iter()
            .map(|&(no, line)| per_line(&source, no, line))
            .collect::<Vec<_>>()
    })?;

    let mut parse_errors = 0usize;
    let mut hard_errors = 0usize;
    for out in outputs {
        match out {
            LineOut::Report(v) => println!("{v}"),
            LineOut::Skip => {}
            LineOut::ParseError(v) => {
                println!("{v}");
                parse_errors += 1;
            }
            LineOut::HardError(v) => {
                println!("{v}");
                hard_errors += 1;
            }
        }
    }
    Ok(if hard_errors > 0 {
        RunStatus::HardErrors
    } else if parse_errors > 0 {
        RunStatus::ParseWarnings
    } else {
        RunStatus::Clean
    })
}

fn in_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    if jobs == 0 {
        Ok(work())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .context("building worker pool")?;
        Ok(pool.install(work))
    }
}
