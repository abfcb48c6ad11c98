use std::fs;

use pathhom_core::linalg::format_exact;
use pathhom_core::sampling::{edges_per_pair, random_weights, rng_for, sample_subgraph, RNG_NAME};
use pathhom_core::{Rational, StratifiedDigraph};
use serde_json::{json, Value};

use crate::args::{SampleArgs, Weights};
use crate::error::CliError;
use crate::io::write_graph;
use crate::report::{parallel_map, Outcome, Report};

/// Sample `index` of a batch: its own generator stream, edges first, then
/// weights if requested.
pub fn draw(
    sizes: &[usize],
    rho: &Rational,
    seed: u64,
    index: usize,
    weights: Option<Weights>,
) -> Result<StratifiedDigraph, CliError> {
    let mut rng = rng_for(seed, index as u64);
    let g = sample_subgraph(sizes, rho, &mut rng)?;
    Ok(match weights {
        Some(w) => random_weights(&g, w.distribution(), &mut rng),
        None => g,
    })
}

pub fn run(args: &SampleArgs) -> Result<Outcome, CliError> {
    let sizes = args
        .base
        .resolve()?
        .ok_or_else(|| CliError::Validation("give --sizes or --base".into()))?;
    let per_pair = edges_per_pair(&sizes, &args.rho)?;
    fs::create_dir_all(&args.out_dir).map_err(|e| CliError::io(&args.out_dir, e))?;
    let indices: Vec<usize> = (0..args.count).collect();
    let results = parallel_map(
        args.exec.threads,
        &indices,
        |_, &i| -> Result<Value, CliError> {
            let g = draw(&sizes, &args.rho, args.seed, i, args.weights)?;
            let files = write_graph(&args.out_dir.join(format!("sample_{i:04}")), &g)?;
            Ok(json!({
                "input": files[0],
                "layers": files[1],
                "edges": g.graph().edge_count(),
            }))
        },
    )?
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let report = Report {
        command: "sample",
        config: json!({
            "sizes": sizes,
            "rho": format_exact(&args.rho),
            "count": args.count,
            "seed": args.seed,
            "rng": RNG_NAME,
            "weights": args.weights.map(Weights::name),
        }),
        results,
        summary: Some(json!({
            "per_pair": per_pair,
            "edges": per_pair.iter().sum::<usize>(),
        })),
    };
    Ok(Outcome::new(report.render(), args.exec.output.clone()))
}
