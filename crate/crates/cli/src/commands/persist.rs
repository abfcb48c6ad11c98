use num_traits::ToPrimitive;
use pathhom_core::linalg::format_exact;
use pathhom_core::{PersistenceCurve, Rational};
use serde_json::json;

use crate::args::{CurveFormat, PersistArgs};
use crate::error::CliError;
use crate::io::read_stratified;
use crate::report::Outcome;

pub fn run(args: &PersistArgs) -> Result<Outcome, CliError> {
    let g = read_stratified(&args.input, args.layers.as_deref())?;
    let curve = pathhom_core::persistence::persistence_curve(&g, args.baseline)
        .map_err(|e| CliError::from(e).in_file(&args.input))?;
    let text = match args.format {
        CurveFormat::Csv => render_csv(&curve),
        CurveFormat::Json => render_json(&curve),
        CurveFormat::Dat => render_dat(&curve),
    };
    Ok(Outcome::new(text, args.output.clone()))
}

fn rows(curve: &PersistenceCurve) -> impl Iterator<Item = &(Rational, usize)> {
    curve.baseline.iter().chain(&curve.points)
}

/// `threshold,betti` with exact thresholds; the baseline, if any, first.
pub fn render_csv(curve: &PersistenceCurve) -> String {
    let mut out = String::from("threshold,betti\n");
    for (t, b) in rows(curve) {
        out.push_str(&format!("{},{b}\n", format_exact(t)));
    }
    out
}

pub fn render_json(curve: &PersistenceCurve) -> String {
    let point = |(t, b): &(Rational, usize)| json!({ "threshold": format_exact(t), "betti": b });
    let value = json!({
        "points": curve.points.iter().map(point).collect::<Vec<_>>(),
        "baseline": curve.baseline.as_ref().map(point),
    });
    let mut text = serde_json::to_string_pretty(&value).expect("curve serializes");
    text.push('\n');
    text
}

/// Two whitespace-separated columns with floating-point thresholds.
pub fn render_dat(curve: &PersistenceCurve) -> String {
    let mut out = String::from("# threshold betti\n");
    for (t, b) in rows(curve) {
        let x = t.to_f64().unwrap_or(f64::NAN);
        out.push_str(&format!("{x} {b}\n"));
    }
    out
}
