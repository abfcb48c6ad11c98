use pathhom_core::graph::{
    extract_longest_subgraph, infer_layers, trim_connected_count, trim_removable,
    weakly_connected_components,
};
use pathhom_core::{Reduced, StratifiedDigraph};
use serde_json::{json, Value};

use crate::args::{Op, PreprocessArgs};
use crate::error::CliError;
use crate::io::{
    format_edge_list, format_layers, read_graph, read_stratified, with_suffix, write_atomic,
    write_graph,
};
use crate::report::{Outcome, Report};

pub fn run(args: &PreprocessArgs) -> Result<Outcome, CliError> {
    let in_file = |e: CliError| e.in_file(&args.input);
    let record = match args.op {
        Op::LongestSubgraph => {
            let g = read_graph(&args.input)?;
            let star = extract_longest_subgraph(&g).map_err(|e| in_file(e.into()))?;
            written(&write_graph(&args.out, &star)?, &star)
        }
        Op::Trim | Op::TrimConnected => {
            let g = read_stratified(&args.input, args.layers.as_deref())?;
            let reduced = match args.op {
                Op::Trim => trim_removable(&g),
                _ => trim_connected_count(&g),
            };
            match reduced {
                Reduced::Graph(t) => written(&write_graph(&args.out, &t)?, &t),
                Reduced::TrivialFullDepth => json!({
                    "files": [],
                    "trivial": true,
                    "depth": g.depth(),
                }),
            }
        }
        Op::Components => {
            let g = read_graph(&args.input)?;
            let parts = weakly_connected_components(&g);
            let mut files = Vec::with_capacity(parts.len());
            for (i, part) in parts.iter().enumerate() {
                let mut name = args.out.as_os_str().to_owned();
                name.push(format!("_{i}"));
                let path = with_suffix(name.as_ref(), "edges");
                write_atomic(&path, &format_edge_list(part))?;
                files.push(json!({
                    "file": path.display().to_string(),
                    "vertices": part.vertex_count(),
                    "edges": part.edge_count(),
                }));
            }
            json!({ "components": parts.len(), "files": files })
        }
        Op::InferLayers => {
            let g = read_graph(&args.input)?;
            let s = infer_layers(&g).map_err(|e| in_file(e.into()))?;
            let path = with_suffix(&args.out, "layers");
            write_atomic(&path, &format_layers(&s))?;
            json!({
                "files": [path.display().to_string()],
                "depth": s.depth(),
                "layer_sizes": s.layer_sizes(),
            })
        }
    };
    let report = Report {
        command: "preprocess",
        config: json!({
            "op": args.op.name(),
            "input": args.input.display().to_string(),
            "layers": args.layers.as_ref().map(|p| p.display().to_string()),
        }),
        results: vec![record],
        summary: None,
    };
    Ok(Outcome::new(report.render(), args.output.clone()))
}

fn written(files: &[String], g: &StratifiedDigraph) -> Value {
    json!({
        "files": files,
        "trivial": false,
        "vertices": g.graph().vertex_count(),
        "edges": g.graph().edge_count(),
        "depth": g.depth(),
        "layer_sizes": g.layer_sizes(),
    })
}
