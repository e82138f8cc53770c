//! The JSON run configuration.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// One experiment: either a single `mass` + `reference` pair or a batch of
/// `systems`, sharing the grid, output and check settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass: Option<MassSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<ReferenceSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub systems: Vec<SystemSpec>,
    #[serde(default)]
    pub grid: GridSpec,
    #[serde(default)]
    pub output: OutputSpec,
    #[serde(default)]
    pub checks: ChecksSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub mass: MassSpec,
    pub reference: ReferenceSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MassSpec {
    AsymptoticallyVanishing {
        alpha: f64,
        q: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain: Option<[f64; 2]>,
    },
    TanhSq {
        alpha: f64,
        q: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain: Option<[f64; 2]>,
    },
    CothSq {
        alpha: f64,
        q: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain: Option<[f64; 2]>,
    },
    Custom {
        expression: String,
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        params: BTreeMap<String, f64>,
        domain: [f64; 2],
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ReferenceSpec {
    Morse {
        depth: f64,
        alpha: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        center: Option<Center>,
    },
    PoschlTeller {
        depth: f64,
        alpha: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        center: Option<Center>,
    },
    Hulthen {
        strength: f64,
        alpha: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        center: Option<Center>,
    },
}

impl ReferenceSpec {
    pub fn center(&self) -> Option<Center> {
        match self {
            ReferenceSpec::Morse { center, .. }
            | ReferenceSpec::PoschlTeller { center, .. }
            | ReferenceSpec::Hulthen { center, .. } => *center,
        }
    }
}

/// Reference center: a number, or `"auto"` to move the decay window into
/// the well-behaved part of a hyperbolic mass profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Center {
    Value(f64),
    Keyword(CenterKeyword),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CenterKeyword {
    Auto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    /// Fixed grid size; when absent the size follows from `y_step`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_points: Option<usize>,
    #[serde(default = "default_y_step")]
    pub y_step: f64,
    #[serde(default = "default_levels")]
    pub levels: usize,
    #[serde(default = "default_decay_tol")]
    pub decay_tol: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            n_points: None,
            y_step: default_y_step(),
            levels: default_levels(),
            decay_tol: default_decay_tol(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default)]
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChecksSpec {
    #[serde(default = "default_energy_tol")]
    pub energy_rel_tol: f64,
    #[serde(default = "default_residual_tol")]
    pub residual_tol: f64,
    #[serde(default = "default_orthonormality_tol")]
    pub orthonormality_tol: f64,
    /// Reference-coordinate spacing of the grid used for residuals and
    /// overlaps of the analytic states.
    #[serde(default = "default_residual_y_step")]
    pub residual_y_step: f64,
    #[serde(default)]
    pub q1_reduction: bool,
    #[serde(default = "default_q1_tol")]
    pub q1_tol: f64,
}

impl Default for ChecksSpec {
    fn default() -> Self {
        Self {
            energy_rel_tol: default_energy_tol(),
            residual_tol: default_residual_tol(),
            orthonormality_tol: default_orthonormality_tol(),
            residual_y_step: default_residual_y_step(),
            q1_reduction: false,
            q1_tol: default_q1_tol(),
        }
    }
}

fn default_y_step() -> f64 {
    0.005
}
fn default_levels() -> usize {
    3
}
fn default_decay_tol() -> f64 {
    1e-8
}
fn default_energy_tol() -> f64 {
    1e-3
}
fn default_residual_tol() -> f64 {
    1e-4
}
fn default_orthonormality_tol() -> f64 {
    1e-3
}
fn default_residual_y_step() -> f64 {
    0.002
}
fn default_q1_tol() -> f64 {
    1e-12
}

impl RunConfig {
    /// Parses a config, reporting the field path of the first offending
    /// value.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let cfg: RunConfig = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            CliError::config(path, e.into_inner())
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// The systems to run, each with its field-path prefix.
    pub fn systems(&self) -> Result<Vec<(String, SystemSpec)>, CliError> {
        match (&self.mass, &self.reference, self.systems.is_empty()) {
            (Some(m), Some(r), true) => Ok(vec![(
                String::new(),
                SystemSpec {
                    label: None,
                    mass: m.clone(),
                    reference: r.clone(),
                },
            )]),
            (None, None, false) => Ok(self
                .systems
                .iter()
                .enumerate()
                .map(|(i, s)| (format!("systems[{i}]."), s.clone()))
                .collect()),
            (None, None, true) => Err(CliError::config(".", "need `mass` and `reference`, or `systems`")),
            (_, _, false) => Err(CliError::config("systems", "cannot be combined with top-level `mass`/`reference`")),
            (None, Some(_), true) => Err(CliError::config("mass", "missing field")),
            (Some(_), None, true) => Err(CliError::config("reference", "missing field")),
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        for (prefix, s) in self.systems()? {
            validate_mass(&format!("{prefix}mass"), &s.mass)?;
            validate_reference(&format!("{prefix}reference"), &s.reference)?;
        }
        let g = &self.grid;
        if let Some(n) = g.n_points {
            if n < 16 {
                return Err(CliError::config("grid.n_points", format!("{n} is below the minimum of 16")));
            }
        }
        positive("grid.y_step", g.y_step)?;
        positive("grid.decay_tol", g.decay_tol)?;
        if g.levels == 0 {
            return Err(CliError::config("grid.levels", "must be at least 1"));
        }
        let c = &self.checks;
        positive("checks.energy_rel_tol", c.energy_rel_tol)?;
        positive("checks.residual_tol", c.residual_tol)?;
        positive("checks.orthonormality_tol", c.orthonormality_tol)?;
        positive("checks.residual_y_step", c.residual_y_step)?;
        positive("checks.q1_tol", c.q1_tol)?;
        Ok(())
    }
}

fn positive(path: &str, v: f64) -> Result<(), CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(CliError::config(path, format!("{v} must be finite and > 0")))
    }
}

fn finite(path: &str, v: f64) -> Result<(), CliError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(CliError::config(path, format!("{v} must be finite")))
    }
}

fn validate_domain(path: &str, d: &[f64; 2]) -> Result<(), CliError> {
    if d[0].is_finite() && d[1].is_finite() && d[0] < d[1] {
        Ok(())
    } else {
        Err(CliError::config(path, format!("[{}, {}] must be finite with lo < hi", d[0], d[1])))
    }
}

fn validate_mass(prefix: &str, m: &MassSpec) -> Result<(), CliError> {
    match m {
        MassSpec::AsymptoticallyVanishing { alpha, q, domain }
        | MassSpec::TanhSq { alpha, q, domain }
        | MassSpec::CothSq { alpha, q, domain } => {
            positive(&format!("{prefix}.alpha"), *alpha)?;
            positive(&format!("{prefix}.q"), *q)?;
            if let Some(d) = domain {
                validate_domain(&format!("{prefix}.domain"), d)?;
            }
        }
        MassSpec::Custom {
            expression,
            params,
            domain,
        } => {
            pct_core::exprlang::parse(expression)
                .map_err(|e| CliError::config(format!("{prefix}.expression"), e))?;
            for (k, v) in params {
                finite(&format!("{prefix}.params.{k}"), *v)?;
            }
            validate_domain(&format!("{prefix}.domain"), domain)?;
        }
    }
    Ok(())
}

fn validate_reference(prefix: &str, r: &ReferenceSpec) -> Result<(), CliError> {
    let (name, strength, alpha) = match r {
        ReferenceSpec::Morse { depth, alpha, .. } => ("depth", depth, alpha),
        ReferenceSpec::PoschlTeller { depth, alpha, .. } => ("depth", depth, alpha),
        ReferenceSpec::Hulthen { strength, alpha, .. } => ("strength", strength, alpha),
    };
    positive(&format!("{prefix}.{name}"), *strength)?;
    positive(&format!("{prefix}.alpha"), *alpha)?;
    if let Some(Center::Value(c)) = r.center() {
        finite(&format!("{prefix}.center"), c)?;
    }
    Ok(())
}
