#![allow(dead_code)]

use pct_core::pctengine::fit_reference_center;
use pct_core::{Hulthen, MassKind, Morse, Params, PoschlTeller, Profile, Reference, Target};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const QS: [f64; 3] = [0.5, 1.0, 2.0];
pub const DECAY_TOL: f64 = 1e-8;
pub const LEVELS: usize = 3;

/// Grid density for eigenvalue runs, in reference-coordinate units.
pub const EIGEN_Y_STEP: f64 = 0.005;
/// Grid density for wavefunction residuals and overlaps.
pub const RESIDUAL_Y_STEP: f64 = 0.002;

pub fn references() -> [Reference; 3] {
    [
        Morse::new(8.0, 1.0).unwrap().into(),
        PoschlTeller::new(6.0, 1.0).unwrap().into(),
        Hulthen::new(2.0, 0.5).unwrap().into(),
    ]
}

/// Profile steepness used for each built-in family. The vanishing mass maps
/// y to x exponentially, so a larger alpha keeps its x-domains compact.
pub fn profile_alpha(kind: MassKind) -> f64 {
    match kind {
        MassKind::AsymptoticallyVanishing => 8.0,
        _ => 1.0,
    }
}

pub fn target(kind: MassKind, q: f64, reference: Reference) -> Target {
    let p = Profile::built_in_kind(kind, profile_alpha(kind), q).unwrap();
    let r = fit_reference_center(&p, reference, LEVELS, DECAY_TOL).unwrap();
    Target::auto(&p, r, LEVELS, DECAY_TOL).unwrap()
}

/// All 27 (mass, reference, q) combinations.
pub fn all_targets() -> Vec<(String, Target)> {
    let mut out = Vec::new();
    for kind in MassKind::BUILT_IN {
        for q in QS {
            for r in references() {
                let label = format!("{}/{}/q={q}", kind.name(), r.kind().name());
                out.push((label, target(kind, q, r)));
            }
        }
    }
    out
}

/// Grid size for residual-type checks: spacing at most 1e-3 in x and
/// `RESIDUAL_Y_STEP` in y.
pub fn residual_points(t: &Target) -> usize {
    let d = t.domain();
    let by_h = ((d.hi - d.lo) / 1e-3).ceil() as usize + 1;
    by_h.max(t.suggest_points(RESIDUAL_Y_STEP).unwrap())
}

/// `C(n + t, n - k)` for real `t`.
fn gen_binomial(top_shift: f64, lower_k: usize, count: usize) -> f64 {
    (1..=count).fold(1.0, |acc, j| acc * (top_shift + lower_k as f64 + j as f64) / j as f64)
}

/// Explicit sum `Σ (-1)^k C(n+t, n-k) z^k / k!`.
pub fn laguerre_series(n: usize, t: f64, z: f64) -> f64 {
    let mut sum = 0.0;
    let mut fact = 1.0;
    for k in 0..=n {
        if k > 0 {
            fact *= k as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * gen_binomial(t, k, n - k) * z.powi(k as i32) / fact;
    }
    sum
}

/// Explicit sum `Σ C(n+a, n-s) C(n+b, s) ((z-1)/2)^s ((z+1)/2)^(n-s)`.
pub fn jacobi_series(n: usize, a: f64, b: f64, z: f64) -> f64 {
    let mut sum = 0.0;
    for s in 0..=n {
        let c1 = gen_binomial(a, s, n - s);
        let c2 = gen_binomial(b, n - s, s);
        sum += c1 * c2 * ((z - 1.0) / 2.0).powi(s as i32) * ((z + 1.0) / 2.0).powi((n - s) as i32);
    }
    sum
}

/// Smooth, strictly positive mass expression on [-2, 2] with its parameters.
pub fn random_profile_source(rng: &mut ChaCha8Rng) -> (String, Params) {
    let c0 = rng.gen_range(0.5..2.0);
    let c1 = rng.gen_range(0.1..1.0);
    let c2 = rng.gen_range(0.05..0.5);
    let b = rng.gen_range(0.3..2.0);
    let s = rng.gen_range(-1.0..1.0);
    let src = match rng.gen_range(0..6) {
        0 => format!("{c0:.6} + {c1:.6}*exp(-{b:.6}*(x - {s:.6})^2)"),
        1 => format!("{c0:.6} + {c1:.6}*tanh({b:.6}*x)^2 + {c2:.6}*x"),
        2 => format!("{c0:.6} + {c1:.6}*cos({b:.6}*x)^2 + {c2:.6}*x^2"),
        3 => format!("({c0:.6} + {c1:.6}*x^2)/(1 + {c2:.6}*x^2)"),
        4 => format!("{c0:.6}*coshq({b:.6}*x)^2"),
        _ => format!("{c0:.6} + {c1:.6}*sechq({b:.6}*(x - {s:.6}))^2 + {c2:.6}*sin(x)^2"),
    };
    let mut params = Params::new();
    params.insert("q".into(), rng.gen_range(0.3..3.0));
    (src, params)
}

fn random_term(rng: &mut ChaCha8Rng, depth: u32) -> String {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..3) {
            0 => "x".into(),
            1 => "a".into(),
            _ => format!("{:.4}", rng.gen_range(0.2..2.0)),
        };
    }
    let u = random_term(rng, depth - 1);
    let v = random_term(rng, depth - 1);
    match rng.gen_range(0..16) {
        0 => format!("({u} + {v})"),
        1 => format!("({u} - {v})"),
        2 => format!("({u} * {v})"),
        3 => format!("({u} / (1.5 + ({v})^2))"),
        4 => format!("sin({u})"),
        5 => format!("cos({u})"),
        6 => format!("tanh({u})"),
        7 => format!("exp(0.3*{u})"),
        8 => format!("ln(2 + ({u})^2)"),
        9 => format!("sqrt(1 + ({u})^2)"),
        10 => format!("({u})^3"),
        11 => format!("sinhq(0.5*{u})"),
        12 => format!("coshq(0.5*{u})"),
        13 => format!("tanhq({u})"),
        14 => format!("sechq({u})"),
        _ => format!("-({u})^2"),
    }
}

/// Random expression in `x` over the parameters `a` and `q`.
pub fn random_expression(rng: &mut ChaCha8Rng) -> String {
    random_term(rng, 3)
}

pub fn corpus_params() -> Params {
    let mut p = Params::new();
    p.insert("a".into(), 1.3);
    p.insert("q".into(), 0.7);
    p
}
