use std::path::PathBuf;
use std::time::{Duration, Instant};

use pathhom_core::general::{betti_with, GeneralConfig};
use pathhom_core::linalg::format_exact;
use pathhom_core::recursive::{full_depth, maximal};
use pathhom_core::sampling::RNG_NAME;
use serde::Serialize;
use serde_json::json;

use crate::args::{CompareArgs, Dim};
use crate::commands::sample::draw;
use crate::error::CliError;
use crate::io::{read_graph, read_stratified};
use crate::report::{millis, parallel_map, Outcome, Report};

#[derive(Debug, Serialize)]
pub struct CompareRecord {
    pub input: String,
    pub dimension: usize,
    pub recursive: usize,
    pub general: usize,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recursive_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub general_ms: Option<f64>,
}

enum Job {
    File(PathBuf, Option<PathBuf>),
    Sample(usize),
}

struct Timed {
    record: CompareRecord,
    recursive: Duration,
    general: Duration,
}

pub fn run(args: &CompareArgs) -> Result<Outcome, CliError> {
    if let Dim::P(_) = args.dim {
        return Err(CliError::Validation(
            "compare takes --dim full or max".into(),
        ));
    }
    let sizes = args.base.resolve()?;
    let jobs: Vec<Job> = match (&sizes, &args.rho) {
        (None, None) if !args.input.inputs.is_empty() => args
            .input
            .paired()?
            .into_iter()
            .map(|(e, l)| Job::File(e, l))
            .collect(),
        (Some(_), Some(_)) if args.input.inputs.is_empty() => {
            (0..args.count).map(Job::Sample).collect()
        }
        _ => {
            return Err(CliError::Validation(
                "give either input files or --sizes/--base with --rho".into(),
            ))
        }
    };
    let timed = parallel_map(args.exec.threads, &jobs, |i, job| {
        one(args, sizes.as_deref().unwrap_or_default(), i, job)
    })?
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;

    let mismatches = timed.iter().filter(|t| !t.record.agree).count();
    let mut summary = json!({
        "count": timed.len(),
        "mismatches": mismatches,
        "agree": mismatches == 0,
    });
    if args.timings {
        let rec: Duration = timed.iter().map(|t| t.recursive).sum();
        let gen: Duration = timed.iter().map(|t| t.general).sum();
        summary["recursive_ms"] = json!(millis(rec));
        summary["general_ms"] = json!(millis(gen));
        summary["speedup"] =
            json!((gen.as_secs_f64() / rec.as_secs_f64().max(1e-9) * 100.0).round() / 100.0);
    }
    let mut config = json!({
        "dim": args.dim.to_string(),
        "guard": args.guard,
        "timings": args.timings,
    });
    if let (Some(sizes), Some(rho)) = (&sizes, &args.rho) {
        config["sizes"] = json!(sizes);
        config["rho"] = json!(format_exact(rho));
        config["count"] = json!(args.count);
        config["seed"] = json!(args.seed);
        config["rng"] = json!(RNG_NAME);
    }
    let report = Report {
        command: "compare",
        config,
        results: timed.into_iter().map(|t| t.record).collect(),
        summary: Some(summary),
    };
    let mut outcome = Outcome::new(report.render(), args.exec.output.clone());
    if mismatches > 0 {
        outcome.failure = Some(CliError::Mismatch(format!(
            "{mismatches} of {} inputs differ",
            jobs.len()
        )));
    }
    Ok(outcome)
}

fn one(args: &CompareArgs, sizes: &[usize], index: usize, job: &Job) -> Result<Timed, CliError> {
    let config = GeneralConfig {
        guard_limit: args.guard.into(),
        track: false,
    };
    let name = match job {
        Job::File(e, _) => e.display().to_string(),
        Job::Sample(i) => format!("sample_{i:04}"),
    };
    let in_file = |e: CliError| match job {
        Job::File(p, _) => e.in_file(p),
        Job::Sample(_) => CliError::Validation(format!("{name}: {e}")),
    };
    let sampled = |i: usize| {
        let rho = args.rho.as_ref().expect("sampling needs rho");
        draw(sizes, rho, args.seed, i, None)
    };

    let (dimension, mut recursive, rec_time, general, gen_time) = match args.dim {
        Dim::Full => {
            let g = match job {
                Job::File(e, l) => read_stratified(e, l.as_deref())?,
                Job::Sample(i) => sampled(*i)?,
            };
            let start = Instant::now();
            let r = full_depth(&g, false).betti;
            let rec_time = start.elapsed();
            let start = Instant::now();
            let b = betti_with(g.graph(), g.depth(), &config).map_err(|e| in_file(e.into()))?;
            (g.depth(), r, rec_time, b.betti, start.elapsed())
        }
        _ => {
            let g = match job {
                Job::File(e, _) => read_graph(e)?,
                Job::Sample(i) => sampled(*i)?.into_graph(),
            };
            let start = Instant::now();
            let r = maximal(&g, false).map_err(|e| in_file(e.into()))?;
            let rec_time = start.elapsed();
            let start = Instant::now();
            let b = betti_with(&g, r.dimension, &config).map_err(|e| in_file(e.into()))?;
            (r.dimension, r.betti, rec_time, b.betti, start.elapsed())
        }
    };
    if args.inject_fault && index == 0 {
        recursive += 1;
    }
    Ok(Timed {
        record: CompareRecord {
            input: name,
            dimension,
            recursive,
            general,
            agree: recursive == general,
            recursive_ms: args.timings.then(|| millis(rec_time)),
            general_ms: args.timings.then(|| millis(gen_time)),
        },
        recursive: rec_time,
        general: gen_time,
    })
}
