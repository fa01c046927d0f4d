mod common;

use common::fixtures;
use evtper::specfun::{erf_inv, gamma, ln_gamma, polygamma, q_function, EULER_GAMMA};
use proptest::prelude::*;

fn rel(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

/// Maclaurin series `erf x = 2/√π · e^{-x²} Σ 2ⁿ x^{2n+1} / (2n+1)!!`.
/// All terms are positive, so it is accurate for the moderate `x` used here.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0.0;
    while term > 1e-18 * sum {
        n += 1.0;
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
    }
    2.0 / std::f64::consts::PI.sqrt() * (-x2).exp() * sum
}

#[test]
fn q_function_fixtures() {
    for &(x, want) in fixtures::Q {
        let got = q_function(x).unwrap();
        // relative accuracy wherever the value is representable, absolute
        // 1e-300 only once the tail underflows
        let ok = rel(got, want) <= 1e-12 || (got - want).abs() <= 1e-300;
        assert!(ok, "Q({x}) = {got}, want {want}");
    }
    assert_eq!(q_function(0.0).unwrap(), 0.5);
    assert!((q_function(2.828_427_1).unwrap() - 2.3389e-3).abs() < 1e-7);
    let x = 1.7;
    assert!((q_function(-x).unwrap() - (1.0 - q_function(x).unwrap())).abs() < 1e-15);
}

#[test]
fn erf_inv_fixtures() {
    for &(p, want) in fixtures::ERF_INV {
        let got = erf_inv(p).unwrap();
        assert!(rel(got, want) <= 1e-13, "erf_inv({p}) = {got}, want {want}");
    }
    for &(k, want) in fixtures::ERF_INV_TAIL {
        let p = 1.0 - 2f64.powi(-k);
        let got = erf_inv(p).unwrap();
        assert!(
            rel(got, want) <= 1e-13,
            "erf_inv(1-2^-{k}) = {got}, want {want}"
        );
    }
    assert_eq!(erf_inv(0.0).unwrap(), 0.0);
    assert!((erf_inv(libm::erf(1.25)).unwrap() - 1.25).abs() < 1e-10);
    let v = erf_inv(0.998_046_875).unwrap();
    assert!((libm::erf(v) - 0.998_046_875).abs() < 1e-12);
}

#[test]
fn erf_inv_round_trips_through_series_erf() {
    for p in [0.9999, 0.9, 0.5, 0.1, 0.0, -0.1, -0.5, -0.9, -0.9999] {
        let x = erf_inv(p).unwrap();
        let back = x.signum() * erf_series(x.abs());
        assert!((back - p).abs() <= 1e-10, "p={p} back={back}");
    }
}

#[test]
fn gamma_fixtures() {
    for &(x, g, lg) in fixtures::GAMMA {
        assert!(rel(gamma(x).unwrap(), g) <= 1e-13, "gamma({x})");
        let got = ln_gamma(x).unwrap();
        assert!(
            (got - lg).abs() <= 1e-13 * lg.abs().max(1.0),
            "ln_gamma({x})"
        );
    }
    assert_eq!(gamma(1.0).unwrap(), 1.0);
    assert!((gamma(0.5).unwrap() - 1.772_453_9).abs() < 1e-7);
    assert!((gamma(1.02).unwrap() - 0.988_844_2).abs() < 1e-6);
}

#[test]
fn polygamma_fixtures() {
    for &(n, x, want) in fixtures::POLYGAMMA {
        let got = polygamma(n, x).unwrap();
        let tol = if n <= 8 { 1e-10 } else { 1e-9 };
        assert!(rel(got, want) <= tol, "psi_{n}({x}) = {got}, want {want}");
    }
    assert!((polygamma(0, 1.0).unwrap() + 0.577_215_7).abs() < 1e-6);
    assert!((polygamma(0, 1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
    let pi2_6 = std::f64::consts::PI.powi(2) / 6.0;
    assert!(rel(polygamma(1, 1.0).unwrap(), pi2_6) < 1e-14);
    assert!((polygamma(0, 2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-14);
}

#[test]
fn domain_errors() {
    assert!(q_function(f64::NAN).is_err());
    assert!(q_function(f64::INFINITY).is_err());
    assert!(erf_inv(1.0).is_err());
    assert!(erf_inv(-1.0).is_err());
    assert!(gamma(0.0).is_err());
    assert!(ln_gamma(-2.5).is_err());
    assert!(polygamma(0, 0.0).is_err());
    assert!(polygamma(17, 1.0).is_err());
}

proptest! {
    #[test]
    fn q_reflection(x in -8.0f64..8.0) {
        let s = q_function(x).unwrap() + q_function(-x).unwrap();
        prop_assert!((s - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn q_strictly_decreasing(x in -8.0f64..37.0, dx in 1e-3f64..1.0) {
        prop_assert!(q_function(x).unwrap() > q_function(x + dx).unwrap());
    }

    #[test]
    fn erf_inv_round_trip(p in -0.999_999_999_999f64..0.999_999_999_999) {
        let back = libm::erf(erf_inv(p).unwrap());
        prop_assert!((back - p).abs() <= 1e-12 * p.abs().max(1e-300) + 1e-300);
    }

    #[test]
    fn gamma_recurrence(x in 0.5f64..20.0) {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!(rel(lhs, rhs) <= 1e-12);
    }

    #[test]
    fn polygamma_recurrence(n in 0usize..=16, x in 0.5f64..40.0) {
        let lhs = polygamma(n, x + 1.0).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let fact: f64 = (1..=n).map(|i| i as f64).product();
        let base = polygamma(n, x).unwrap();
            let rhs = base + sign * fact / x.powi(n as i32 + 1);
            // measured against the largest term: at small x the identity cancels
            let scale = lhs.abs().max(base.abs());
        prop_assert!((lhs - rhs).abs() <= 1e-9 * scale, "n={} x={} {} {}", n, x, lhs, rhs);
    }
}
