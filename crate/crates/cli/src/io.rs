//! Edge-list and layers files.
//!
//! An edge list has one record per line: `u v` or `u v weight`, or a single
//! `v` for a vertex without edges. Everything after `#` is a comment.
//! Vertex labels are whitespace-free tokens; weights are exact decimals or
//! `num/den`. Either every edge has a weight or none does.
//!
//! A layers file lists layer `i` on its `i`-th non-blank line.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use pathhom_core::graph::{infer_layers, DigraphBuilder, StratifiedDigraph, Vertex};
use pathhom_core::linalg::{format_exact, parse_rational};
use pathhom_core::{Digraph, GraphError};

use crate::error::CliError;

fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split_once('#').map_or(line, |(b, _)| b);
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub fn parse_edge_list(text: &str) -> Result<Digraph, CliError> {
    let mut builder = DigraphBuilder::new();
    for (line, tokens) in records(text) {
        match tokens[..] {
            [v] => {
                builder.add_vertex(v);
            }
            [u, v] => {
                builder.add_edge(u, v, None);
            }
            [u, v, w] => {
                let w =
                    parse_rational(w).map_err(|e| CliError::Parse(format!("line {line}: {e}")))?;
                builder.add_edge(u, v, Some(w));
            }
            _ => {
                return Err(CliError::Parse(format!(
                    "line {line}: expected `u v [weight]`, found {} fields",
                    tokens.len()
                )))
            }
        }
    }
    Ok(builder.build()?)
}

/// Edges in vertex order, then vertices without edges.
pub fn format_edge_list(g: &Digraph) -> String {
    let mut out = String::new();
    let weights = g.weights();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        out.push_str(g.label(u));
        out.push(' ');
        out.push_str(g.label(v));
        if let Some(w) = weights {
            out.push(' ');
            out.push_str(&format_exact(&w[i]));
        }
        out.push('\n');
    }
    for &v in g.vertices() {
        if g.succ(v).is_empty() && g.pred(v).is_empty() {
            out.push_str(g.label(v));
            out.push('\n');
        }
    }
    out
}

pub fn parse_layers(text: &str, g: &Digraph) -> Result<StratifiedDigraph, CliError> {
    let layers = records(text)
        .map(|(_, tokens)| {
            tokens
                .into_iter()
                .map(|t| {
                    g.vertex_by_label(t)
                        .ok_or_else(|| GraphError::UnknownVertex(t.to_string()))
                })
                .collect::<Result<Vec<Vertex>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StratifiedDigraph::new(g.clone(), layers)?)
}

pub fn format_layers(g: &StratifiedDigraph) -> String {
    let mut out = String::new();
    for layer in g.layers() {
        let labels: Vec<&str> = layer.iter().map(|&v| g.graph().label(v)).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn read_graph(path: &Path) -> Result<Digraph, CliError> {
    parse_edge_list(&read_text(path)?).map_err(|e| e.in_file(path))
}

/// Reads `edges`, stratified by `layers` when given and by longest-path
/// depth otherwise.
pub fn read_stratified(edges: &Path, layers: Option<&Path>) -> Result<StratifiedDigraph, CliError> {
    let g = read_graph(edges)?;
    match layers {
        Some(path) => parse_layers(&read_text(path)?, &g).map_err(|e| e.in_file(path)),
        None => infer_layers(&g).map_err(|e| CliError::from(e).in_file(edges)),
    }
}

/// Writes through a temporary file in the target directory and renames it
/// into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(path, e))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

/// `prefix` with `.ext` appended, keeping any dots already in it.
pub fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

/// Writes `prefix.edges` and `prefix.layers`; returns their paths.
pub fn write_graph(prefix: &Path, g: &StratifiedDigraph) -> Result<Vec<String>, CliError> {
    let edges = with_suffix(prefix, "edges");
    let layers = with_suffix(prefix, "layers");
    write_atomic(&edges, &format_edge_list(g.graph()))?;
    write_atomic(&layers, &format_layers(g))?;
    Ok(vec![
        edges.display().to_string(),
        layers.display().to_string(),
    ])
}
