use evtper::{
    avg_per_chernoff, avg_per_evt, avg_per_exact_series, avg_per_montecarlo,
    avg_per_montecarlo_with, avg_per_quadrature, avg_per_threshold_bound, builtin_scheme,
    norming_constants, omega0_model, omega0_numeric, specfun::EULER_GAMMA, Builtin, Execution,
    FadingChannel, ModulationScheme, Omega0Model, Omega0Source, PerFunction,
};
use proptest::prelude::*;

fn scheme(b: Builtin) -> ModulationScheme {
    builtin_scheme(b).unwrap()
}

fn quad(s: &ModulationScheme, n: u64, ch: &FadingChannel, tol: f64) -> f64 {
    avg_per_quadrature(s, n, ch, PerFunction::Exact, tol)
        .unwrap()
        .value
}

#[test]
fn series_equals_quadrature() {
    for s in [scheme(Builtin::Fsk), scheme(Builtin::Dpsk)] {
        for n in [1, 2, 5, 10, 20, 50] {
            for g in [0.5, 5.0, 50.0] {
                let ch = FadingChannel::rayleigh(g).unwrap();
                let series = avg_per_exact_series(&s, n, &ch).unwrap();
                let q = quad(&s, n, &ch, 1e-10);
                assert!(
                    (series - q).abs() <= 1e-6,
                    "{s} N={n} g={g}: {series} vs {q}"
                );
            }
        }
    }
}

#[test]
fn quadrature_halving_tolerance() {
    let s = scheme(Builtin::Mqam(16));
    for m in [0.5, 1.0, 2.5] {
        for g in [1.0, 30.0, 1000.0] {
            let ch = FadingChannel::new(m, g).unwrap();
            for tol in [1e-6, 1e-8, 1e-10] {
                let a = quad(&s, 256, &ch, tol);
                let b = quad(&s, 256, &ch, tol / 2.0);
                assert!((a - b).abs() <= tol, "m={m} g={g} tol={tol}");
            }
        }
    }
}

#[test]
fn montecarlo_agrees_with_quadrature() {
    let cases = [
        (scheme(Builtin::Bpsk), 32, 1.0, 10.0),
        (scheme(Builtin::Fsk), 256, 1.0, 100.0),
        (scheme(Builtin::Mqam(16)), 1024, 2.0, 300.0),
    ];
    for (s, n, m, g) in cases {
        let ch = FadingChannel::new(m, g).unwrap();
        let q = quad(&s, n, &ch, 1e-9);
        let mc = avg_per_montecarlo(&s, n, &ch, 400_000, 7).unwrap();
        assert!(
            (mc.mean - q).abs() <= 3.0 * mc.std_error,
            "{s} N={n}: mc {} ± {} vs {q}",
            mc.mean,
            mc.std_error
        );
    }
}

#[test]
fn montecarlo_independent_of_execution() {
    let s = scheme(Builtin::Bpsk);
    let ch = FadingChannel::rayleigh(10.0).unwrap();
    let a = avg_per_montecarlo_with(&s, 32, &ch, 300_001, 99, Execution::Sequential).unwrap();
    let b = avg_per_montecarlo_with(&s, 32, &ch, 300_001, 99, Execution::Parallel).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.draws, 300_001);
}

#[test]
fn omega0_examples() {
    let fsk = scheme(Builtin::Fsk);
    let w = omega0_numeric(&fsk, 256, 1e-10).unwrap().value;
    let c = norming_constants(&fsk, 256).unwrap();
    let asym = c.location + EULER_GAMMA * c.scale;
    assert!(((w - asym) / asym).abs() < 0.02);
    let bpsk = scheme(Builtin::Bpsk);
    assert!((omega0_numeric(&bpsk, 1, 1e-10).unwrap().value - 0.25).abs() < 1e-9);
    for b in [
        Builtin::Fsk,
        Builtin::Dpsk,
        Builtin::Bpsk,
        Builtin::Mqam(16),
        Builtin::Mqam(64),
    ] {
        let s = scheme(b);
        let lo = omega0_numeric(&s, 64, 1e-10).unwrap().value;
        let hi = omega0_numeric(&s, 256, 1e-10).unwrap().value;
        assert!(lo < hi, "{s}");
    }
}

#[test]
fn omega0_model_examples() {
    let fsk = scheme(Builtin::Fsk);
    let liu = Omega0Model::liu_analytic(&fsk);
    assert_eq!(liu.source, Omega0Source::LiuAnalytic);
    assert!((omega0_model(&liu, 256).unwrap().value - 10.8585).abs() < 1e-4);
    let qam16 = scheme(Builtin::Mqam(16));
    let wu = Omega0Model::wu_fitted(&qam16).unwrap();
    assert!((omega0_model(&wu, 256).unwrap().value - 9.168).abs() < 1e-3);
    assert!((omega0_model(&wu, 1024).unwrap().value - 12.396).abs() < 5e-3);
    // fitted constants go negative for short packets
    assert!(omega0_model(&wu, 4).unwrap().non_positive);
    assert!(Omega0Model::wu_fitted(&fsk).is_none());
    assert!(omega0_model(&liu, 1).is_err());
}

#[test]
fn threshold_bound_upper_bounds_oracle() {
    let fsk = scheme(Builtin::Fsk);
    let w = omega0_numeric(&fsk, 256, 1e-10).unwrap().value;
    for db in 0..=30 {
        let g = 10f64.powf(db as f64 / 10.0);
        let ch = FadingChannel::rayleigh(g).unwrap();
        let bound = avg_per_threshold_bound(w, g).unwrap();
        assert!(bound >= quad(&fsk, 256, &ch, 1e-10), "{db} dB");
    }
    assert!((avg_per_threshold_bound(5.0, 5.0).unwrap() - 0.632_120_6).abs() < 1e-7);
    assert!(avg_per_threshold_bound(0.0, 5.0).is_err());
}

#[test]
fn chernoff_examples() {
    let bpsk = scheme(Builtin::Bpsk);
    for i in 0..400 {
        let g = i as f64 * 0.05;
        let q = bpsk.ber(g).unwrap();
        let ch = 0.5 * (-g).exp();
        assert!(ch >= q, "g={g}");
    }
    let ch = FadingChannel::rayleigh(10.0).unwrap();
    let c = avg_per_chernoff(&bpsk, 32, &ch, 1e-10).unwrap();
    assert!(c >= quad(&bpsk, 32, &ch, 1e-10));
    // N > 64 goes through quadrature
    let c_long = avg_per_chernoff(&bpsk, 256, &ch, 1e-10).unwrap();
    assert!(c_long > c && c_long <= 1.0);
}

#[test]
fn evt_close_to_oracle_for_long_packets() {
    let fsk = scheme(Builtin::Fsk);
    let ch = FadingChannel::rayleigh(100.0).unwrap();
    let e = avg_per_evt(&fsk, 256, &ch).unwrap().value;
    let g = avg_per_quadrature(&fsk, 256, &ch, PerFunction::Gumbel, 1e-11)
        .unwrap()
        .value;
    assert!((e - g).abs() <= 1e-8);
    assert!((e - quad(&fsk, 256, &ch, 1e-10)).abs() < 4e-4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn liu_equals_gumbel_mean(k in 0.05f64..4.0, c in 0.05f64..2.0, n in 64u64..100_000) {
        let s = ModulationScheme::new("x", evtper::BerForm::ExpForm, c, k).unwrap();
        let w = omega0_model(&Omega0Model::liu_analytic(&s), n).unwrap().value;
        let nc = norming_constants(&s, n).unwrap();
        let target = nc.location + EULER_GAMMA * nc.scale;
        prop_assert!((w - target).abs() <= 1e-12 * target.abs().max(1.0));
    }

    #[test]
    fn oracle_outputs_in_unit_interval(idx in 0usize..4, n in 1u64..2000, m in 0.5f64..4.0, db in -5.0f64..40.0) {
        let s = [scheme(Builtin::Fsk), scheme(Builtin::Dpsk), scheme(Builtin::Bpsk), scheme(Builtin::Mqam(16))][idx].clone();
        let ch = FadingChannel::new(m, 10f64.powf(db / 10.0)).unwrap();
        let r = avg_per_quadrature(&s, n, &ch, PerFunction::Exact, 1e-8).unwrap();
        prop_assert!((0.0..=1.0).contains(&r.value));
        prop_assert!(r.abs_error_estimate >= 0.0);
    }

    #[test]
    fn threshold_bound_in_unit_interval(w in 1e-3f64..1e3, g in 1e-3f64..1e6) {
        let b = avg_per_threshold_bound(w, g).unwrap();
        prop_assert!((0.0..=1.0).contains(&b));
    }
}
