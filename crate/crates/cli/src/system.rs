//! Turns validated specs into target systems.

use pct_core::exprlang::parse;
use pct_core::massmodel::MassError;
use pct_core::pctengine::{fit_reference_center, TargetError};
use pct_core::refpotentials::ReferenceError;
use pct_core::{
    Error, Hulthen, Interval, MassKind, Morse, Params, PoschlTeller, Profile, Reference, Target,
};

use crate::config::{Center, GridSpec, MassSpec, ReferenceSpec, RunConfig, SystemSpec};
use crate::error::CliError;

/// A ready-to-evaluate system with its display label.
#[derive(Debug, Clone)]
pub struct Built {
    pub label: String,
    pub spec: SystemSpec,
    pub target: Target,
}

pub fn build_all(cfg: &RunConfig) -> Result<Vec<Built>, CliError> {
    cfg.systems()?
        .into_iter()
        .map(|(prefix, spec)| build(&prefix, spec, &cfg.grid))
        .collect()
}

fn label_of(spec: &SystemSpec) -> String {
    if let Some(l) = &spec.label {
        return l.clone();
    }
    let r = match spec.reference {
        ReferenceSpec::Morse { .. } => "morse",
        ReferenceSpec::PoschlTeller { .. } => "poschl_teller",
        ReferenceSpec::Hulthen { .. } => "hulthen",
    };
    match &spec.mass {
        MassSpec::AsymptoticallyVanishing { q, .. } => format!("asymptotically_vanishing/{r}/q={q}"),
        MassSpec::TanhSq { q, .. } => format!("tanh_sq/{r}/q={q}"),
        MassSpec::CothSq { q, .. } => format!("coth_sq/{r}/q={q}"),
        MassSpec::Custom { .. } => format!("custom/{r}"),
    }
}

fn profile(prefix: &str, m: &MassSpec) -> Result<Profile, CliError> {
    let path = format!("{prefix}mass");
    let mass_err = |e: Error| match e {
        Error::Mass(MassError::InvalidParameter { name, .. }) => {
            CliError::config(format!("{path}.{name}"), e)
        }
        Error::Mass(MassError::InvalidDomain { .. }) => CliError::config(format!("{path}.domain"), e),
        Error::Expr(_) | Error::Mass(MassError::Expr(_)) => {
            CliError::config(format!("{path}.expression"), e)
        }
        _ => CliError::config(path.clone(), e),
    };
    let built_in = |kind, alpha, q| Profile::built_in_kind(kind, alpha, q).map_err(|e| mass_err(e.into()));
    match m {
        MassSpec::AsymptoticallyVanishing { alpha, q, .. } => {
            built_in(MassKind::AsymptoticallyVanishing, *alpha, *q)
        }
        MassSpec::TanhSq { alpha, q, .. } => built_in(MassKind::TanhSq, *alpha, *q),
        MassSpec::CothSq { alpha, q, .. } => built_in(MassKind::CothSq, *alpha, *q),
        MassSpec::Custom {
            expression,
            params,
            domain,
        } => {
            let expr = parse(expression).map_err(|e| mass_err(e.into()))?;
            let params: Params = params.clone();
            Profile::custom(expr, params, Interval::closed(domain[0], domain[1]))
                .map_err(|e| mass_err(e.into()))
        }
    }
}

fn reference(prefix: &str, r: &ReferenceSpec) -> Result<Reference, CliError> {
    let path = format!("{prefix}reference");
    let err = |e: ReferenceError| {
        let field = match &e {
            ReferenceError::InvalidParameter { name: "alpha", .. } => "alpha",
            ReferenceError::InvalidParameter { name: "V0", .. } => "strength",
            ReferenceError::InvalidParameter { .. } => "depth",
            _ => "",
        };
        let full = if field.is_empty() { path.clone() } else { format!("{path}.{field}") };
        CliError::config(full, e)
    };
    let sys: Reference = match r {
        ReferenceSpec::Morse { depth, alpha, .. } => Morse::new(*depth, *alpha).map_err(err)?.into(),
        ReferenceSpec::PoschlTeller { depth, alpha, .. } => {
            PoschlTeller::new(*depth, *alpha).map_err(err)?.into()
        }
        ReferenceSpec::Hulthen { strength, alpha, .. } => {
            Hulthen::new(*strength, *alpha).map_err(err)?.into()
        }
    };
    match r.center() {
        Some(Center::Value(c)) => sys.with_center(c).map_err(err),
        _ => Ok(sys),
    }
}

fn build(prefix: &str, spec: SystemSpec, grid: &GridSpec) -> Result<Built, CliError> {
    let profile = profile(prefix, &spec.mass)?;
    let mut reference = reference(prefix, &spec.reference)?;
    let count = reference.level_count();
    if grid.levels > count {
        return Err(CliError::config(
            "grid.levels",
            format!("{} levels requested but `{prefix}reference` binds only {count}", grid.levels),
        ));
    }
    if matches!(spec.reference.center(), Some(Center::Keyword(_))) {
        reference = fit_reference_center(&profile, reference, grid.levels, grid.decay_tol)
            .map_err(|e| CliError::config(format!("{prefix}reference.center"), e))?;
    }
    let domain = match &spec.mass {
        MassSpec::AsymptoticallyVanishing { domain, .. }
        | MassSpec::TanhSq { domain, .. }
        | MassSpec::CothSq { domain, .. } => *domain,
        MassSpec::Custom { domain, .. } => Some(*domain),
    };
    let target = match domain {
        Some([lo, hi]) => Target::new(&profile, reference, lo, hi),
        None => Target::auto(&profile, reference, grid.levels, grid.decay_tol),
    }
    .map_err(|e| {
        let field = match &e {
            Error::Target(TargetError::ImageTooSmall { .. }) => "reference.center",
            _ => "mass.domain",
        };
        CliError::config(format!("{prefix}{field}"), e)
    })?;
    Ok(Built {
        label: label_of(&spec),
        spec,
        target,
    })
}

/// Grid size for the eigenvalue solve and the transform table.
pub fn grid_points(t: &Target, grid: &GridSpec) -> Result<usize, CliError> {
    match grid.n_points {
        Some(n) => Ok(n),
        None => t.suggest_points(grid.y_step).map_err(CliError::numeric),
    }
}
