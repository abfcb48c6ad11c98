use std::io::Write as _;
use std::path::PathBuf;
use std::time::Duration;

use rayon::prelude::*;
use rayon::ThreadPoolBuilder;
use serde::Serialize;
use serde_json::Value;

use crate::error::CliError;
use crate::io::write_atomic;

/// Machine-readable result of a command.
#[derive(Debug, Serialize)]
pub struct Report<R> {
    pub command: &'static str,
    pub config: Value,
    pub results: Vec<R>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Value>,
}

impl<R: Serialize> Report<R> {
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

/// What a command prints, where, and whether it should exit nonzero after
/// printing.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub output: Option<PathBuf>,
    pub failure: Option<CliError>,
}

impl Outcome {
    pub fn new(text: String, output: Option<PathBuf>) -> Self {
        Self {
            text,
            output,
            failure: None,
        }
    }

    pub fn emit(self) -> Result<Option<CliError>, CliError> {
        match &self.output {
            Some(path) => write_atomic(path, &self.text)?,
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(self.text.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| CliError::Io(e.to_string()))?;
            }
        }
        Ok(self.failure)
    }
}

/// Milliseconds rounded to microseconds.
pub fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

/// Maps `f` over `items` on a pool of `threads` workers (rayon's default
/// when `None`), returning results in input order.
pub fn parallel_map<T, R, F>(threads: Option<usize>, items: &[T], f: F) -> Result<Vec<R>, CliError>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync + Send,
{
    let run = || items.par_iter().enumerate().map(|(i, x)| f(i, x)).collect();
    match threads {
        None => Ok(run()),
        Some(n) => {
            let pool = ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Io(e.to_string()))?;
            Ok(pool.install(run))
        }
    }
}
