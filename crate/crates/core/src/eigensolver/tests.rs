use std::f64::consts::PI;

use super::*;

type R = Result<f64, Error>;

fn zero(_: f64) -> R {
    Ok(0.0)
}

fn harmonic(y: f64) -> R {
    Ok(0.5 * y * y)
}

#[test]
fn particle_in_a_box() {
    let g = Grid::new(0.0, 1.0, 2001).unwrap();
    let r = solve_constant_mass(zero, &g, 3).unwrap();
    for (n, e) in r.energies.iter().enumerate() {
        let exact = ((n + 1) as f64 * PI).powi(2) / 2.0;
        assert!((e - exact).abs() / exact < 1e-5, "{n}: {e} vs {exact}");
    }
}

#[test]
fn harmonic_oscillator() {
    let g = Grid::new(-12.0, 12.0, 4001).unwrap();
    let r = solve_constant_mass(harmonic, &g, 4).unwrap();
    for (n, e) in r.energies.iter().enumerate() {
        assert!((e - (n as f64 + 0.5)).abs() < 1e-4, "{n}: {e}");
    }
    for (n, s) in r.states.iter().enumerate() {
        assert_eq!(node_count(s, 1e-6), n);
        assert!((s.norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn second_order_convergence() {
    let err = |n: usize| {
        let g = Grid::new(-10.0, 10.0, n).unwrap();
        let r = solve_constant_mass(harmonic, &g, 1).unwrap();
        (r.energies[0] - 0.5).abs()
    };
    let ratio = err(501) / err(1001);
    assert!((ratio - 4.0).abs() < 0.1, "ratio {ratio}");
}

#[test]
fn unit_mass_matches_constant_solver_bit_for_bit() {
    let g = Grid::new(-8.0, 8.0, 801).unwrap();
    let a = solve_constant_mass(harmonic, &g, 4).unwrap();
    let b = solve_effective_mass(|_| Ok::<_, Error>(1.0), harmonic, &g, 4).unwrap();
    assert_eq!(a.energies, b.energies);
    for (x, y) in a.states.iter().zip(&b.states) {
        assert_eq!(x.values(), y.values());
    }
    assert_eq!(b.treatment, MassTreatment::Effective);
}

#[test]
fn heavy_mass_scales_box_levels() {
    let g = Grid::new(0.0, 1.0, 1001).unwrap();
    let light = solve_constant_mass(zero, &g, 3).unwrap();
    let heavy = solve_effective_mass(|_| Ok::<_, Error>(4.0), zero, &g, 3).unwrap();
    for (l, h) in light.energies.iter().zip(&heavy.energies) {
        assert!((h - l / 4.0).abs() < 1e-12 * l);
    }
}

#[test]
fn states_are_orthonormal() {
    let g = Grid::new(-10.0, 10.0, 2001).unwrap();
    let r = solve_constant_mass(|y: f64| Ok::<_, Error>(0.5 * y * y + 0.3 * y.powi(3) / (1.0 + y * y)), &g, 4)
        .unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let o = overlap(&r.states[i], &r.states[j]).unwrap();
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((o - want).abs() < 1e-10, "{i}{j}: {o}");
        }
    }
}

#[test]
fn symmetric_potential_gives_parity_states() {
    let g = Grid::new(-6.0, 6.0, 1201).unwrap();
    let r = solve_constant_mass(harmonic, &g, 2).unwrap();
    let v0 = r.states[0].values();
    let v1 = r.states[1].values();
    let n = v0.len();
    for i in 0..n {
        assert!((v0[i] - v0[n - 1 - i]).abs() < 1e-9);
        assert!((v1[i] + v1[n - 1 - i]).abs() < 1e-9);
    }
    assert!(v0[n / 2] > 0.0);
}

#[test]
fn residual_of_numerical_state_and_wrong_energy() {
    let g = Grid::new(-8.0, 8.0, 3201).unwrap();
    let unit = |_: f64| Ok::<_, Error>(Jet2::new(1.0, 0.0, 0.0));
    let r = solve_constant_mass(harmonic, &g, 1).unwrap();
    let good = residual_norm(unit, harmonic, &r.states[0], r.energies[0]).unwrap();
    assert!(good < 1e-4, "{good}");
    let bad = residual_norm(unit, harmonic, &r.states[0], r.energies[0] + 0.1).unwrap();
    assert!((bad - 0.2).abs() < 0.02, "{bad}");
}

#[test]
fn errors() {
    assert!(matches!(Grid::new(0.0, 1.0, 10), Err(EigenError::TooFewPoints { .. })));
    assert!(matches!(Grid::new(1.0, 1.0, 100), Err(EigenError::InvalidBounds { .. })));
    let g = Grid::new(0.0, 1.0, 20).unwrap();
    assert!(matches!(
        solve_constant_mass(zero, &g, 19),
        Err(Error::Eigen(EigenError::TooManyLevels { .. }))
    ));
    assert!(matches!(
        solve_constant_mass(zero, &g, 0),
        Err(Error::Eigen(EigenError::NoLevels))
    ));
    assert!(matches!(
        solve_constant_mass(|_| Ok::<_, Error>(f64::NAN), &g, 1),
        Err(Error::Eigen(EigenError::NonFinite { .. }))
    ));
    assert!(matches!(
        solve_effective_mass(|x: f64| Ok::<_, Error>(x - 0.5), zero, &g, 1),
        Err(Error::Eigen(EigenError::NonPositiveMass { .. }))
    ));
    let other = Grid::new(0.0, 2.0, 20).unwrap();
    let a = GridFunction::sample(&g, Ok::<_, Error>).unwrap();
    let b = GridFunction::sample(&other, Ok::<_, Error>).unwrap();
    assert_eq!(overlap(&a, &b), Err(EigenError::GridMismatch));
}

#[test]
fn single_precision_box() {
    let g = Grid::new(0.0f32, 1.0, 101).unwrap();
    let r = solve_constant_mass(|_| Ok::<_, Error>(0.0f32), &g, 2).unwrap();
    let exact = PI as f32 * PI as f32 / 2.0;
    assert!((r.energies[0] - exact).abs() / exact < 1e-3, "{:?}", r.energies);
}
