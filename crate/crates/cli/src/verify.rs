use std::path::Path;

use pct_core::eigensolver::overlap;
use pct_core::{MassKind, Target};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output;
use crate::system::{build_all, grid_points, Built};
use crate::SCHEMA_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LevelCheck {
    pub n: usize,
    pub closed_form: f64,
    pub numerical: f64,
    pub rel_error: f64,
    pub status: Status,
}

#[derive(Debug, Serialize)]
pub struct ResidualCheck {
    pub n: usize,
    pub residual: f64,
    pub status: Status,
}

#[derive(Debug, Serialize)]
pub struct Orthonormality {
    pub matrix: Vec<Vec<f64>>,
    pub max_deviation: f64,
    pub status: Status,
}

#[derive(Debug, Serialize)]
pub struct Reduction {
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<f64>,
    pub status: Status,
}

#[derive(Debug, Serialize)]
pub struct SystemReport {
    pub label: String,
    pub domain: [f64; 2],
    pub reference_center: f64,
    pub n_points: usize,
    pub step: f64,
    pub residual_points: usize,
    pub levels: Vec<LevelCheck>,
    pub residuals: Vec<ResidualCheck>,
    pub orthonormality: Orthonormality,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q1_reduction: Option<Reduction>,
    pub status: Status,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tolerances: crate::config::ChecksSpec,
    pub systems: Vec<SystemReport>,
    pub status: Status,
}

fn residual_points(t: &Target, y_step: f64) -> Result<usize, CliError> {
    let d = t.domain();
    let by_h = ((d.hi - d.lo) / 1e-3).ceil() as usize + 1;
    Ok(by_h.max(t.suggest_points(y_step).map_err(CliError::numeric)?))
}

fn check(b: &Built, cfg: &RunConfig) -> Result<SystemReport, CliError> {
    let t = &b.target;
    let checks = &cfg.checks;
    let k = cfg.grid.levels;
    let n_points = grid_points(t, &cfg.grid)?;
    let grid = t.grid(n_points).map_err(CliError::numeric)?;
    let solved = t.solve(&grid, k).map_err(CliError::numeric)?;
    let levels = (0..k)
        .map(|n| {
            let closed_form = t.target_energy(n as i64).map_err(CliError::numeric)?;
            let numerical = solved.energies[n];
            let rel_error = ((numerical - closed_form) / closed_form).abs();
            Ok(LevelCheck {
                n,
                closed_form,
                numerical,
                rel_error,
                status: Status::of(rel_error < checks.energy_rel_tol),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let rp = residual_points(t, checks.residual_y_step)?;
    let fine = t.grid(rp).map_err(CliError::numeric)?;
    let residuals = (0..k)
        .map(|n| {
            let residual = t.wavefunction_residual(&fine, n as i64).map_err(CliError::numeric)?;
            Ok(ResidualCheck {
                n,
                residual,
                status: Status::of(residual < checks.residual_tol),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let states = (0..k)
        .map(|n| Ok(t.wavefunction_on(&fine, n as i64).map_err(CliError::numeric)?.normalized()))
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut matrix = vec![vec![0.0; k]; k];
    let mut max_deviation = 0.0f64;
    for i in 0..k {
        for j in 0..k {
            let o = overlap(&states[i], &states[j]).map_err(CliError::numeric)?;
            matrix[i][j] = o;
            max_deviation = max_deviation.max((o - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    let orthonormality = Orthonormality {
        matrix,
        max_deviation,
        status: Status::of(max_deviation < checks.orthonormality_tol),
    };

    let q1_reduction = if checks.q1_reduction {
        let p = t.profile();
        Some(if p.kind() != MassKind::Custom && p.q() == 1.0 {
            let d = t.domain();
            let xs: Vec<f64> = (0..200).map(|i| d.lo + d.width() * (i as f64 + 0.5) / 200.0).collect();
            let dev = pct_core::pctengine::q1_reduction_deviation(t, &xs, k).map_err(CliError::numeric)?;
            Reduction {
                applicable: true,
                max_deviation: Some(dev),
                status: Status::of(dev < checks.q1_tol),
            }
        } else {
            Reduction {
                applicable: false,
                max_deviation: None,
                status: Status::Pass,
            }
        })
    } else {
        None
    };

    let ok = levels.iter().all(|l| l.status == Status::Pass)
        && residuals.iter().all(|r| r.status == Status::Pass)
        && orthonormality.status == Status::Pass
        && q1_reduction.as_ref().is_none_or(|r| r.status == Status::Pass);
    let d = t.domain();
    Ok(SystemReport {
        label: b.label.clone(),
        domain: [d.lo, d.hi],
        reference_center: t.reference().center(),
        n_points,
        step: grid.step(),
        residual_points: rp,
        levels,
        residuals,
        orthonormality,
        q1_reduction,
        status: Status::of(ok),
    })
}

/// Runs every check and writes the JSON report. Returns the overall status.
pub fn run(cfg: &RunConfig, out: Option<&Path>) -> Result<Status, CliError> {
    let systems = build_all(cfg)?;
    let reports = systems
        .par_iter()
        .map(|b| check(b, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    for r in &reports {
        let worst = r.levels.iter().map(|l| l.rel_error).fold(0.0, f64::max);
        eprintln!(
            "{} {} (max energy rel error {worst:.2e})",
            if r.status == Status::Pass { "PASS" } else { "FAIL" },
            r.label
        );
    }
    let status = Status::of(reports.iter().all(|r| r.status == Status::Pass));
    let report = Report {
        schema_version: SCHEMA_VERSION,
        tolerances: cfg.checks.clone(),
        systems: reports,
        status,
    };
    let mut text = serde_json::to_string_pretty(&report).expect("finite values");
    text.push('\n');
    output::write(out, &text)?;
    Ok(status)
}
