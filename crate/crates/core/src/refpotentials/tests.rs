use super::*;

fn systems() -> Vec<ReferenceSystem<f64>> {
    vec![
        Morse::new(8.0, 1.0).unwrap().into(),
        PoschlTeller::new(6.0, 1.0).unwrap().into(),
        Hulthen::new(2.0, 0.5).unwrap().into(),
        Morse::new(3.3, 0.7).unwrap().with_center(1.5).into(),
        PoschlTeller::new(2.2, 1.3).unwrap().with_center(-0.4).into(),
        Hulthen::new(5.0, 1.2).unwrap().with_center(0.3).into(),
    ]
}

fn residual(sys: &ReferenceSystem<f64>, n: usize, y: f64) -> f64 {
    let h = 1e-3;
    let phi = |y: f64| sys.eigenfunction_at(n as i64, y).unwrap();
    let d2 = (-phi(y + 2.0 * h) + 16.0 * phi(y + h) - 30.0 * phi(y) + 16.0 * phi(y - h)
        - phi(y - 2.0 * h))
        / (12.0 * h * h);
    let e = sys.closed_form_energy(n as i64).unwrap();
    d2 + 2.0 * (e - sys.potential_at(y).unwrap()) * phi(y)
}

#[test]
fn documented_levels() {
    let m = ReferenceSystem::from(Morse::new(8.0, 1.0).unwrap());
    assert_eq!(m.spectrum().energies, vec![-6.125, -3.125, -1.125, -0.125]);
    let pt = ReferenceSystem::from(PoschlTeller::new(6.0, 1.0).unwrap());
    assert_eq!(pt.spectrum().energies, vec![-4.5, -2.0, -0.5]);
    let h = ReferenceSystem::from(Hulthen::new(2.0f64, 0.5).unwrap());
    let e = h.spectrum().energies;
    assert_eq!(e.len(), 3);
    assert!((e[0] + 7.03125).abs() < 1e-14);
    assert!((e[1] + 1.125).abs() < 1e-14);
    assert!((e[2] + 0.1701388888888889).abs() < 1e-14);
}

#[test]
fn eigenfunctions_solve_the_equation() {
    for sys in systems() {
        let (lo, hi) = sys.support_window(sys.level_count().min(3), 1e-6).unwrap();
        for n in 0..sys.level_count().min(3) {
            let scale = (0..=200)
                .map(|i| lo + (hi - lo) * i as f64 / 200.0)
                .map(|y| sys.eigenfunction_at(n as i64, y).unwrap().abs())
                .fold(0.0, f64::max);
            for i in 1..40 {
                let y = lo + 0.01 + (hi - lo - 0.02) * i as f64 / 40.0;
                let r = residual(&sys, n, y);
                assert!(r.abs() < 1e-5 * scale, "{:?} n={n} y={y} r={r}", sys.kind());
            }
        }
    }
}

#[test]
fn node_counts_match_level_index() {
    for sys in systems() {
        let (lo, hi) = sys.support_window(sys.level_count().min(3), 1e-8).unwrap();
        for n in 0..sys.level_count().min(3) {
            let vals: Vec<f64> = (1..4000)
                .map(|i| lo + (hi - lo) * i as f64 / 4000.0)
                .map(|y| sys.eigenfunction_at(n as i64, y).unwrap())
                .collect();
            let peak = vals.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            let sig: Vec<f64> = vals.into_iter().filter(|v| v.abs() > 1e-6 * peak).collect();
            let nodes = sig.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
            assert_eq!(nodes, n, "{:?}", sys.kind());
        }
    }
}

#[test]
fn level_bookkeeping() {
    let m = Morse::new(8.0, 1.0).unwrap();
    assert_eq!(m.level_count(), 4);
    let sys = ReferenceSystem::from(m);
    assert!(sys.closed_form_energy(3).is_ok());
    assert!(matches!(
        sys.closed_form_energy(4),
        Err(ReferenceError::LevelOutOfRange { n: 4, count: 4 })
    ));
    assert!(sys.closed_form_energy(-1).is_err());

    // integer well strength: the level at the threshold is excluded
    let pt = PoschlTeller::new(6.0, 1.0).unwrap();
    assert_eq!(pt.level_count(), 3);
    let h = Hulthen::new(8.0, 1.0).unwrap();
    assert_eq!(h.level_count(), 3);

    // Morse threshold state: D̄ - n - ½ = 0 exactly
    let thr = ReferenceSystem::from(Morse::new(0.5 * 2.5 * 2.5, 1.0).unwrap());
    assert_eq!(thr.closed_form_energy(2).unwrap(), 0.0);
    assert_eq!(thr.spectrum().len(), 2);
}

#[test]
fn invalid_parameters() {
    assert!(Morse::new(0.1, 1.0).is_err());
    assert!(Morse::new(-1.0, 1.0).is_err());
    assert!(PoschlTeller::new(1.0, 0.0).is_err());
    assert!(Hulthen::new(0.4, 1.0).is_err());
    assert!(Hulthen::new(f64::NAN, 1.0).is_err());
    let h = ReferenceSystem::from(Hulthen::new(2.0f64, 0.5).unwrap());
    assert!(matches!(h.potential_at(0.0), Err(ReferenceError::OutOfDomain { .. })));
    assert_eq!(h.eigenfunction_at(0, 0.0).unwrap(), 0.0);
    assert!(h.eigenfunction_at(0, -0.1).is_err());
}

#[test]
fn center_shift_translates() {
    let base = ReferenceSystem::from(PoschlTeller::new(6.0f64, 1.0).unwrap());
    let moved = base.with_center(2.5).unwrap();
    for y in [-1.0, 0.0, 0.7, 3.1] {
        assert!((base.potential_at(y).unwrap() - moved.potential_at(y + 2.5).unwrap()).abs() < 1e-14);
        assert!(
            (base.eigenfunction_at(1, y).unwrap() - moved.eigenfunction_at(1, y + 2.5).unwrap())
                .abs()
                < 1e-14
        );
    }
    assert_eq!(base.spectrum(), moved.spectrum());
}

#[test]
fn turning_points_sit_on_the_level() {
    for sys in systems() {
        let e = sys.closed_form_energy(0).unwrap();
        let (l, r) = sys.turning_points(e);
        assert!((sys.potential_at(r).unwrap() - e).abs() < 1e-10);
        if sys.kind() != ReferenceKind::Hulthen {
            assert!((sys.potential_at(l).unwrap() - e).abs() < 1e-10);
        } else {
            assert_eq!(l, sys.center());
        }
    }
}

#[test]
fn support_window_contains_decay() {
    for sys in systems() {
        let k = sys.level_count().min(3);
        let (lo, hi) = sys.support_window(k, 1e-8).unwrap();
        for n in 0..k {
            let peak = (0..=2000)
                .map(|i| lo + (hi - lo) * i as f64 / 2000.0)
                .map(|y| sys.eigenfunction_at(n as i64, y).unwrap().abs())
                .fold(0.0, f64::max);
            let tail = sys.eigenfunction_at(n as i64, hi + 0.5).unwrap().abs();
            assert!(tail < 1e-8 * peak);
            if sys.kind() != ReferenceKind::Hulthen {
                assert!(sys.eigenfunction_at(n as i64, lo - 0.5).unwrap().abs() < 1e-8 * peak);
            }
        }
    }
}

#[test]
fn single_precision() {
    let m = ReferenceSystem::from(Morse::new(8.0f32, 1.0).unwrap());
    assert_eq!(m.closed_form_energy(0).unwrap(), -6.125f32);
    assert!(m.eigenfunction_at(1, 0.3f32).unwrap().is_finite());
}
