use std::path::Path;

use rayon::prelude::*;
use serde_json::json;

use crate::config::{Format, RunConfig};
use crate::error::CliError;
use crate::output::{self, csv_row, indexed_path, sidecar_path};
use crate::system::{build_all, grid_points, Built};
use crate::SCHEMA_VERSION;

struct Table {
    label: String,
    spectrum: Vec<f64>,
    columns: Vec<(String, Vec<f64>)>,
}

fn tabulate(b: &Built, cfg: &RunConfig) -> Result<Table, CliError> {
    let t = &b.target;
    let n = grid_points(t, &cfg.grid)?;
    let grid = t.grid(n).map_err(CliError::numeric)?;
    let xs: Vec<f64> = grid.points().collect();
    let eval = |f: &dyn Fn(f64) -> pct_core::Result<f64>| -> Result<Vec<f64>, CliError> {
        xs.iter().map(|&x| f(x).map_err(CliError::numeric)).collect()
    };
    let mut columns = vec![
        ("x".to_string(), xs.clone()),
        ("m".to_string(), eval(&|x| t.mass_at(x))?),
        ("f".to_string(), eval(&|x| Ok(t.mapping().forward(x)?))?),
        ("V".to_string(), eval(&|x| t.target_potential_at(x))?),
    ];
    for k in 0..cfg.grid.levels {
        let psi = t
            .wavefunction_on(&grid, k as i64)
            .map_err(CliError::numeric)?
            .normalized();
        columns.push((format!("psi{k}"), psi.into_values()));
    }
    Ok(Table {
        label: b.label.clone(),
        spectrum: t.reference().spectrum().energies,
        columns,
    })
}

fn csv(table: &Table) -> String {
    let names: Vec<&str> = table.columns.iter().map(|(n, _)| n.as_str()).collect();
    let mut out = names.join(",");
    out.push('\n');
    for i in 0..table.columns[0].1.len() {
        out.push_str(&csv_row(table.columns.iter().map(|(_, c)| c[i])));
        out.push('\n');
    }
    out
}

fn spectrum_csv(table: &Table) -> String {
    let mut out = String::from("n,energy\n");
    for (n, e) in table.spectrum.iter().enumerate() {
        out.push_str(&format!("{n},{}\n", output::num(*e)));
    }
    out
}

/// Samples `x, m, f, V, psi0..` on each system's grid and writes the
/// tables together with the closed-form spectra.
pub fn run(cfg: &RunConfig, out: Option<&Path>) -> Result<(), CliError> {
    let systems = build_all(cfg)?;
    let tables = systems
        .par_iter()
        .map(|b| tabulate(b, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    match cfg.output.format {
        Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "systems": tables.iter().map(|t| {
                    let mut cols = serde_json::Map::new();
                    for (name, values) in &t.columns {
                        cols.insert(name.clone(), json!(values));
                    }
                    json!({ "label": t.label, "spectrum": t.spectrum, "columns": cols })
                }).collect::<Vec<_>>(),
            });
            let mut text = serde_json::to_string_pretty(&doc).expect("finite values");
            text.push('\n');
            output::write(out, &text)
        }
        Format::Csv => match out {
            None if tables.len() > 1 => Err(CliError::config(
                "output.path",
                "a batch writes one CSV per system and needs an output path",
            )),
            None => {
                let t = &tables[0];
                eprintln!("spectrum of {}: {:?}", t.label, t.spectrum);
                output::write(None, &csv(t))
            }
            Some(base) => {
                for (i, t) in tables.iter().enumerate() {
                    let path = indexed_path(base, i, tables.len());
                    output::write(Some(&path), &csv(t))?;
                    output::write(Some(&sidecar_path(&path, "spectrum")), &spectrum_csv(t))?;
                }
                Ok(())
            }
        },
    }
}
