//! Earlier approximations of the average PER used as comparison baselines.
//!
//! * exact binomial series for exp-form BER in Rayleigh fading,
//! * the threshold upper bound `1 - exp(-ω₀/γ̄)` (Rayleigh),
//! * log-linear models `ω₀ ≈ k₁ ln N + k₂` (analytic and fitted),
//! * the Chernoff substitution `Q(x) ≤ exp(-x²/2)/2` for Q-form BER.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::fading::FadingChannel;
use crate::modulation::{builtin_scheme, BerForm, Builtin, ModulationScheme};
use crate::oracle::{average_over_fading, avg_per_quadrature, PerFunction};
use crate::specfun::EULER_GAMMA;

/// Longest packet for which the alternating binomial series is evaluated.
pub const MAX_SERIES_N: u64 = 64;

/// Baseline family, used as result provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaselineKind {
    ExactSeries,
    ThresholdNumeric,
    ThresholdLiu,
    ThresholdWu,
    Chernoff,
}

impl fmt::Display for BaselineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaselineKind::ExactSeries => "series",
            BaselineKind::ThresholdNumeric => "threshold-numeric",
            BaselineKind::ThresholdLiu => "threshold-liu",
            BaselineKind::ThresholdWu => "threshold-wu",
            BaselineKind::Chernoff => "chernoff",
        })
    }
}

/// Where the coefficients of an `ω₀` model came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Omega0Source {
    /// `k₁ = 1/k_m`, `k₂ = (γ_e + ln c_m)/k_m`.
    LiuAnalytic,
    /// Coefficients fitted to simulations, looked up per scheme.
    WuFitted,
    Numeric,
}

/// `ω₀ ≈ k1 · ln N + k2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Omega0Model {
    pub k1: f64,
    pub k2: f64,
    pub source: Omega0Source,
}

/// Fitted `(k1, k2)` pairs for uncoded schemes.
const WU_FITTED: &[(Builtin, f64, f64)] = &[(Builtin::Mqam(16), 2.327, -3.736)];

impl Omega0Model {
    /// Analytic constants. Q-form schemes are first mapped to their
    /// Chernoff exp-form equivalent.
    pub fn liu_analytic(scheme: &ModulationScheme) -> Self {
        let s = scheme.chernoff_equivalent();
        Omega0Model {
            k1: 1.0 / s.k_m(),
            k2: (EULER_GAMMA + s.c_m().ln()) / s.k_m(),
            source: Omega0Source::LiuAnalytic,
        }
    }

    /// Fitted constants, if the table has an entry for this scheme.
    pub fn wu_fitted(scheme: &ModulationScheme) -> Option<Self> {
        WU_FITTED.iter().find_map(|&(which, k1, k2)| {
            let known = builtin_scheme(which).ok()?;
            (known.form == scheme.form
                && known.c_m() == scheme.c_m()
                && known.k_m() == scheme.k_m())
            .then_some(Omega0Model {
                k1,
                k2,
                source: Omega0Source::WuFitted,
            })
        })
    }
}

/// `ω₀` from a log-linear model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Omega0Estimate {
    pub value: f64,
    /// Set when the model produced a non-positive threshold (small `N`).
    pub non_positive: bool,
}

/// Evaluates `k1 · ln N + k2` (natural log).
pub fn omega0_model(model: &Omega0Model, n: u64) -> Result<Omega0Estimate> {
    if n < 2 {
        return domain(format!("ω₀ model needs N >= 2, got {n}"));
    }
    let value = model.k1 * (n as f64).ln() + model.k2;
    Ok(Omega0Estimate {
        value,
        non_positive: value <= 0.0,
    })
}

/// Threshold bound `1 - exp(-ω₀/γ̄)` on the Rayleigh average PER.
pub fn avg_per_threshold_bound(omega0: f64, gamma_bar: f64) -> Result<f64> {
    if !(omega0 > 0.0) {
        return domain(format!("ω₀ = {omega0} must be positive"));
    }
    if !(gamma_bar > 0.0) {
        return domain(format!("average SNR {gamma_bar} must be positive"));
    }
    Ok(-(-omega0 / gamma_bar).exp_m1())
}

/// Double-double value `hi + lo`.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    fn from_u64(x: u64) -> Self {
        let hi = x as f64;
        let lo = (x as i128 - hi as i128) as f64;
        Dd::quick(hi, lo)
    }

    fn quick(a: f64, b: f64) -> Self {
        let s = a + b;
        Dd {
            hi: s,
            lo: b - (s - a),
        }
    }

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        Dd {
            hi: s,
            lo: (a - (s - bb)) + (b - bb),
        }
    }

    fn add(self, o: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, o.hi);
        let t = Dd::two_sum(self.lo, o.lo);
        let r = Dd::quick(s.hi, s.lo + t.hi);
        Dd::quick(r.hi, r.lo + t.lo)
    }

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        Dd::quick(p, e + (self.hi * o.lo + self.lo * o.hi))
    }

    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul(Dd::from_f64(q1)).neg());
        let q2 = r.hi / o.hi;
        let r = r.add(o.mul(Dd::from_f64(q2)).neg());
        let q3 = r.hi / o.hi;
        Dd::quick(q1, q2).add(Dd::from_f64(q3))
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Exact Rayleigh average PER for exp-form BER via the binomial expansion
/// `1 - Σ_n C(N,n) (-c_m)^n / (1 + n k_m γ̄)`.
///
/// The alternating terms grow like `C(N, N/2) c_m^{N/2}`, so the sum is
/// carried in double-double arithmetic and refused above [`MAX_SERIES_N`].
pub fn avg_per_exact_series(scheme: &ModulationScheme, n: u64, ch: &FadingChannel) -> Result<f64> {
    if scheme.form != BerForm::ExpForm {
        return Err(Error::Config(
            "exact series requires an exp-form BER scheme".into(),
        ));
    }
    if ch.m() != 1.0 {
        return Err(Error::Config(format!(
            "exact series requires Rayleigh fading (m = 1), got m = {}",
            ch.m()
        )));
    }
    if n == 0 {
        return domain("packet length N must be at least 1");
    }
    if n > MAX_SERIES_N {
        return Err(Error::Stability(format!(
            "alternating binomial series is numerically unusable for N = {n} > {MAX_SERIES_N}"
        )));
    }
    let neg_c = Dd::from_f64(-scheme.c_m());
    let k_gb = {
        let p = scheme.k_m() * ch.gamma_bar();
        Dd::quick(p, scheme.k_m().mul_add(ch.gamma_bar(), -p))
    };
    let one = Dd::from_f64(1.0);
    let mut binom: u64 = 1;
    let mut c_pow = one;
    let mut sum = Dd::from_f64(0.0);
    for k in 0..=n {
        let denom = one.add(k_gb.mul(Dd::from_u64(k)));
        let term = Dd::from_u64(binom).mul(c_pow).div(denom);
        sum = sum.add(term);
        // C(n, k+1) = C(n, k) (n - k) / (k + 1), exact in u128
        binom = (binom as u128 * (n - k) as u128 / (k + 1) as u128) as u64;
        c_pow = c_pow.mul(neg_c);
    }
    Ok(one.add(sum.neg()).to_f64().clamp(0.0, 1.0))
}

/// Average PER after replacing a Q-form BER by its Chernoff bound.
///
/// Rayleigh only. Uses the exact series for `N <= 64` and quadrature of the
/// substituted exact PER beyond that.
pub fn avg_per_chernoff(
    scheme: &ModulationScheme,
    n: u64,
    ch: &FadingChannel,
    tol: f64,
) -> Result<f64> {
    if scheme.form != BerForm::QForm {
        return Err(Error::Config(
            "Chernoff baseline requires a Q-form BER scheme".into(),
        ));
    }
    if ch.m() != 1.0 {
        return Err(Error::Config(format!(
            "Chernoff baseline requires Rayleigh fading (m = 1), got m = {}",
            ch.m()
        )));
    }
    let bound = scheme.chernoff_equivalent();
    if n <= MAX_SERIES_N {
        avg_per_exact_series(&bound, n, ch)
    } else {
        Ok(avg_per_quadrature(&bound, n, ch, PerFunction::Exact, tol)?.value)
    }
}

/// Average PER for a user-supplied BER function, for plugging in other
/// Q-function approximations.
pub fn avg_per_substituted<B>(ber: B, n: u64, ch: &FadingChannel, tol: f64) -> Result<f64>
where
    B: Fn(f64) -> f64,
{
    if n == 0 {
        return domain("packet length N must be at least 1");
    }
    let nf = n as f64;
    let per = |g: f64| {
        let b = ber(g);
        if b >= 1.0 {
            1.0
        } else {
            -(nf * (-b).ln_1p()).exp_m1()
        }
    };
    Ok(average_over_fading(ch, per, &[], tol)?
        .value
        .clamp(0.0, 1.0))
}
