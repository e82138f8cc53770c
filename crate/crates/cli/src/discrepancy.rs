use std::path::Path;

use pct_core::pctengine::{discrepancy_audit, DiscrepancyReport};
use pct_core::MassKind;
use rayon::prelude::*;
use serde_json::json;

use crate::config::{Format, MassSpec, RunConfig};
use crate::error::CliError;
use crate::output::{self, csv_row, indexed_path};
use crate::system::build_all;
use crate::SCHEMA_VERSION;

const DEFAULT_POINTS: usize = 201;

fn csv(r: &DiscrepancyReport<f64>) -> String {
    let mut out = String::from(
        "x,pipeline,printed,abs_diff,pipeline_leading,printed_leading,pipeline_correction,printed_correction\n",
    );
    for row in &r.rows {
        out.push_str(&csv_row([
            row.x,
            row.pipeline,
            row.printed,
            row.deviation(),
            row.pipeline_leading,
            row.printed_leading,
            row.pipeline_correction,
            row.printed_correction,
        ]));
        out.push('\n');
    }
    out
}

fn summary(label: &str, r: &DiscrepancyReport<f64>) -> serde_json::Value {
    json!({
        "label": label,
        "verdict": r.verdict.name(),
        "max_deviation": r.max_deviation,
        "leading_verdict": r.leading_verdict.name(),
        "max_leading_deviation": r.max_leading_deviation,
        "correction_finding": r.correction.name(),
        "max_correction_deviation": r.max_correction_deviation,
    })
}

/// Compares the pipeline's target potential with the printed closed forms.
/// Verdicts are reported, never turned into a failing exit code.
pub fn run(cfg: &RunConfig, out: Option<&Path>) -> Result<(), CliError> {
    for (prefix, s) in cfg.systems()? {
        if matches!(s.mass, MassSpec::Custom { .. }) {
            return Err(CliError::config(
                format!("{prefix}mass.kind"),
                "no printed target potential exists for custom profiles",
            ));
        }
    }
    let systems = build_all(cfg)?;
    debug_assert!(systems.iter().all(|b| b.target.profile().kind() != MassKind::Custom));
    let points = cfg.grid.n_points.unwrap_or(DEFAULT_POINTS);
    let reports = systems
        .par_iter()
        .map(|b| discrepancy_audit(&b.target, points).map_err(CliError::numeric))
        .collect::<Result<Vec<_>, _>>()?;
    for (b, r) in systems.iter().zip(&reports) {
        eprintln!(
            "{}: {} (max {:.3e}); leading {}; correction {}",
            b.label,
            r.verdict.name(),
            r.max_deviation,
            r.leading_verdict.name(),
            r.correction.name()
        );
    }
    match cfg.output.format {
        Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "match_tolerance": pct_core::pctengine::MATCH_TOLERANCE,
                "systems": systems.iter().zip(&reports).map(|(b, r)| {
                    let mut s = summary(&b.label, r);
                    s["rows"] = r.rows.iter().map(|row| json!({
                        "x": row.x,
                        "pipeline": row.pipeline,
                        "printed": row.printed,
                        "abs_diff": row.deviation(),
                        "pipeline_leading": row.pipeline_leading,
                        "printed_leading": row.printed_leading,
                        "pipeline_correction": row.pipeline_correction,
                        "printed_correction": row.printed_correction,
                    })).collect();
                    s
                }).collect::<Vec<_>>(),
            });
            let mut text = serde_json::to_string_pretty(&doc).expect("finite values");
            text.push('\n');
            output::write(out, &text)
        }
        Format::Csv => match out {
            None if reports.len() > 1 => Err(CliError::config(
                "output.path",
                "a batch writes one CSV per system and needs an output path",
            )),
            None => output::write(None, &csv(&reports[0])),
            Some(base) => {
                for (i, r) in reports.iter().enumerate() {
                    output::write(Some(&indexed_path(base, i, reports.len())), &csv(r))?;
                }
                Ok(())
            }
        },
    }
}
