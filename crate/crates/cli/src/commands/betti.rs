use std::path::Path;
use std::time::Instant;

use pathhom_core::chains::ChainRecord;
use pathhom_core::general::{betti_with, GeneralConfig};
use pathhom_core::recursive::{full_depth, maximal};
use serde::Serialize;
use serde_json::json;

use crate::args::{BettiArgs, Dim};
use crate::error::CliError;
use crate::io::{read_graph, read_stratified};
use crate::report::{millis, parallel_map, Outcome, Report};

#[derive(Debug, Serialize)]
pub struct BettiRecord {
    pub input: String,
    pub betti: usize,
    pub dimension: usize,
    pub algorithm: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<ChainRecord>>,
}

pub fn run(args: &BettiArgs) -> Result<Outcome, CliError> {
    let jobs = args.input.paired()?;
    if jobs.is_empty() {
        return Err(CliError::Validation("no input files".into()));
    }
    let results = parallel_map(args.exec.threads, &jobs, |_, (input, layers)| {
        one(args, input, layers.as_deref())
    })?
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let report = Report {
        command: "betti",
        config: json!({
            "dim": args.dim.to_string(),
            "track": args.track,
            "guard": args.guard,
            "timings": args.timings,
            "layers": if args.input.layers.is_empty() { "inferred" } else { "file" },
        }),
        results,
        summary: None,
    };
    Ok(Outcome::new(report.render(), args.exec.output.clone()))
}

fn one(args: &BettiArgs, input: &Path, layers: Option<&Path>) -> Result<BettiRecord, CliError> {
    let in_file = |e: CliError| e.in_file(input);
    let (graph, result, elapsed) = match args.dim {
        Dim::Full => {
            let g = read_stratified(input, layers)?;
            let start = Instant::now();
            let r = full_depth(&g, args.track);
            (g.into_graph(), r, start.elapsed())
        }
        Dim::Max => {
            let g = read_graph(input)?;
            let start = Instant::now();
            let r = maximal(&g, args.track).map_err(|e| in_file(e.into()))?;
            (g, r, start.elapsed())
        }
        Dim::P(p) => {
            let g = read_graph(input)?;
            let config = GeneralConfig {
                guard_limit: args.guard.into(),
                track: args.track,
            };
            let start = Instant::now();
            let r = betti_with(&g, p, &config).map_err(|e| in_file(e.into()))?;
            (g, r, start.elapsed())
        }
    };
    Ok(BettiRecord {
        input: input.display().to_string(),
        betti: result.betti,
        dimension: result.dimension,
        algorithm: result.algorithm.name(),
        elapsed_ms: args.timings.then(|| millis(elapsed)),
        basis: result
            .basis
            .map(|b| b.iter().map(|c| c.to_record(&graph)).collect()),
    })
}
