//! Average packet error rate over Nakagami-m block fading.
//!
//! With the Gumbel approximation of the AWGN PER and a gamma-distributed
//! SNR, the averaging integral becomes a Laplace transform:
//!
//! ```text
//! P̄ ≈ 1 - s^m / Γ(m) · (-1)^(m-1) · d^(m-1)/ds^(m-1) [ e^{-s a} Γ(1 + s b) / s ],   s = m / γ̄
//! ```
//!
//! For integer `m` the derivative is evaluated exactly with the Leibniz
//! rule. Writing `h(s) = f(s) g(s)` with `f = exp(u)`,
//! `u(s) = -a s + lnΓ(1 + b s)` and `g = 1/s`:
//!
//! * `u'(s) = -a + b ψ(1 + b s)`, `u^(n)(s) = b^n ψ^(n-1)(1 + b s)` for `n >= 2`
//! * `f^(n) = Σ_{k<n} C(n-1, k) u^(k+1) f^(n-1-k)`
//! * `g^(k) = (-1)^k k! / s^(k+1)`
//!
//! Rearranged, `1 - P̄ = e^u Σ_k φ_k (-s)^k / k!` with `f^(k) = e^u φ_k`,
//! so the PER is formed as `-expm1(u) - e^u Σ_{k>=1} ...`. That keeps
//! relative accuracy when the average PER is small.

use crate::awgn::{norming_constants, NormingConstants};
use crate::baselines::BaselineKind;
use crate::error::{domain, Error, Result};
use crate::modulation::ModulationScheme;
use crate::oracle::{avg_per_quadrature, PerFunction};
use crate::specfun::{ln_gamma, polygamma, MAX_POLYGAMMA_ORDER};

/// Highest derivative order of the Laplace transform that can be evaluated.
pub const MAX_DERIVATIVE_ORDER: usize = 15;

/// Largest integer fading parameter handled by the closed-form path.
pub const MAX_INTEGER_M: u32 = (MAX_DERIVATIVE_ORDER + 1) as u32;

/// Tolerance used when non-integer `m` is routed to quadrature.
pub const FRACTIONAL_M_TOL: f64 = 1e-10;

/// Nakagami-m block-fading channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadingChannel {
    m: f64,
    gamma_bar: f64,
}

impl FadingChannel {
    /// `m >= 0.5`; `gamma_bar` is the linear average SNR and must be positive.
    pub fn new(m: f64, gamma_bar: f64) -> Result<Self> {
        if !(m >= 0.5) || !m.is_finite() {
            return domain(format!("fading parameter m = {m} must satisfy m >= 0.5"));
        }
        if !(gamma_bar > 0.0) || !gamma_bar.is_finite() {
            return domain(format!(
                "average SNR {gamma_bar} must be positive and finite"
            ));
        }
        Ok(Self { m, gamma_bar })
    }

    /// Rayleigh fading (`m = 1`).
    pub fn rayleigh(gamma_bar: f64) -> Result<Self> {
        Self::new(1.0, gamma_bar)
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn gamma_bar(&self) -> f64 {
        self.gamma_bar
    }

    /// `Some(m)` when the fading parameter is a positive integer.
    pub fn integer_m(&self) -> Option<u32> {
        (self.m.fract() == 0.0 && self.m <= u32::MAX as f64).then_some(self.m as u32)
    }
}

/// Value of the SNR density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Density {
    Value(f64),
    /// The density diverges (only at `γ = 0` with `m < 1`).
    Singular,
}

impl Density {
    /// Numeric value, with `+∞` for a singular point.
    pub fn value(self) -> f64 {
        match self {
            Density::Value(v) => v,
            Density::Singular => f64::INFINITY,
        }
    }
}

/// How an average PER was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AvgPerMethod {
    ClosedFormEvt,
    QuadratureOracle,
    MonteCarloOracle,
    Baseline(BaselineKind),
}

/// Gamma density of the instantaneous SNR under Nakagami-m fading.
pub fn nakagami_pdf(ch: &FadingChannel, gamma: f64) -> Result<Density> {
    if !(gamma >= 0.0) {
        return domain(format!("SNR {gamma} must be non-negative"));
    }
    let m = ch.m;
    if gamma == 0.0 {
        return Ok(if m < 1.0 {
            Density::Singular
        } else if m == 1.0 {
            Density::Value(1.0 / ch.gamma_bar)
        } else {
            Density::Value(0.0)
        });
    }
    if gamma.is_infinite() {
        return Ok(Density::Value(0.0));
    }
    let ln = m * (m / ch.gamma_bar).ln() + (m - 1.0) * gamma.ln()
        - ln_gamma(m)?
        - m * gamma / ch.gamma_bar;
    Ok(Density::Value(ln.exp()))
}

/// `u^(n)(s)` for `n = 1..=order`, index 0 unused.
fn exponent_derivatives(c: &NormingConstants, s: f64, order: usize) -> Result<Vec<f64>> {
    let arg = 1.0 + c.scale * s;
    let mut du = vec![0.0; order + 1];
    let mut b_pow = c.scale;
    for (n, slot) in du.iter_mut().enumerate().skip(1) {
        let psi = polygamma(n - 1, arg)?;
        *slot = b_pow * psi;
        if n == 1 {
            *slot -= c.location;
        }
        b_pow *= c.scale;
    }
    Ok(du)
}

/// `φ_n` with `f^(n) = e^u φ_n`, for `n = 0..=order`.
fn normalized_exp_derivatives(du: &[f64], order: usize) -> Vec<f64> {
    let mut phi = vec![0.0; order + 1];
    phi[0] = 1.0;
    for n in 1..=order {
        let mut binom = 1.0; // C(n-1, k)
        let mut acc = 0.0;
        for k in 0..n {
            acc += binom * du[k + 1] * phi[n - 1 - k];
            binom = binom * (n - 1 - k) as f64 / (k + 1) as f64;
        }
        phi[n] = acc;
    }
    phi
}

fn check_laplace_args(c: &NormingConstants, s: f64, order: usize) -> Result<()> {
    if order > MAX_DERIVATIVE_ORDER {
        return Err(Error::UnsupportedOrder(order));
    }
    if !(s > 0.0) || !s.is_finite() {
        return domain(format!("Laplace variable s = {s} must be positive"));
    }
    if !(1.0 + s * c.scale > 0.0) {
        return domain("1 + s·b_N must be positive");
    }
    debug_assert!(order <= MAX_POLYGAMMA_ORDER + 1);
    Ok(())
}

/// `d^order/ds^order [ e^{-s a_N} Γ(1 + s b_N) / s ]`.
pub fn gumbel_laplace_derivative(c: &NormingConstants, s: f64, order: usize) -> Result<f64> {
    check_laplace_args(c, s, order)?;
    let u = -c.location * s + ln_gamma(1.0 + c.scale * s)?;
    let du = exponent_derivatives(c, s, order)?;
    let phi = normalized_exp_derivatives(&du, order);
    // Leibniz: Σ C(order, k) f^(k) g^(order-k), g^(j) = (-1)^j j! / s^(j+1)
    let mut sum = 0.0;
    let mut binom = 1.0;
    for (k, phi_k) in phi.iter().enumerate() {
        let j = order - k;
        let j_fact: f64 = (1..=j).map(|i| i as f64).product();
        let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
        let g_j = sign * j_fact / s.powi(j as i32 + 1);
        sum += binom * phi_k * g_j;
        binom = binom * (order - k) as f64 / (k + 1) as f64;
    }
    Ok(u.exp() * sum)
}

/// Average PER computed by an approximation, with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AvgPer {
    pub value: f64,
    pub method: AvgPerMethod,
    /// Present for numerically integrated values.
    pub abs_error_estimate: Option<f64>,
}

fn finish(per: f64) -> Result<f64> {
    const SLACK: f64 = 1e-12;
    if !(-SLACK..=1.0 + SLACK).contains(&per) {
        return Err(Error::Internal(format!(
            "average PER {per} outside [0, 1]: sign error, or the Gumbel law puts \
             too much mass below zero SNR for the closed form (a_N not large \
             compared to b_N at this average SNR)"
        )));
    }
    Ok(per.clamp(0.0, 1.0))
}

fn integer_m_or_err(ch: &FadingChannel) -> Result<u32> {
    match ch.integer_m() {
        Some(m) if (1..=MAX_INTEGER_M).contains(&m) => Ok(m),
        _ => Err(Error::Config(format!(
            "closed-form path needs integer m in [1, {MAX_INTEGER_M}], got {}",
            ch.m
        ))),
    }
}

/// Extreme-value closed form evaluated through the generic Leibniz
/// recursion, valid for integer `m` in `[1, 16]`.
///
/// The value is returned unchecked. The transform integrates the Gumbel law
/// over the whole real line, so when its mass below `γ = 0` is not
/// negligible (small `a_N / b_N`, low average SNR, `m > 1`) the result can
/// leave `[0, 1]`; [`avg_per_evt`] rejects such values.
pub fn avg_per_evt_generic(scheme: &ModulationScheme, n: u64, ch: &FadingChannel) -> Result<f64> {
    let m = integer_m_or_err(ch)?;
    let c = norming_constants(scheme, n)?;
    let s = m as f64 / ch.gamma_bar;
    let order = (m - 1) as usize;
    check_laplace_args(&c, s, order)?;
    let u = -c.location * s + ln_gamma(1.0 + c.scale * s)?;
    let du = exponent_derivatives(&c, s, order)?;
    let phi = normalized_exp_derivatives(&du, order);
    let mut correction = 0.0;
    let mut scale = 1.0; // (-s)^k / k!
    for (k, phi_k) in phi.iter().enumerate().skip(1) {
        scale *= -s / k as f64;
        correction += phi_k * scale;
    }
    Ok(-u.exp_m1() - u.exp() * correction)
}

/// Same transform as [`avg_per_evt_generic`], summed as the tail
/// `e^u Σ_{k>=m} φ_k (-s)^k / k!` of the expansion of `1 = e^{u(0)}` about
/// `s`. The terms are small and nearly all positive when `s·a_N` is small,
/// which is exactly where `1 - Σ_{k<m}` cancels. `None` if the series has
/// not converged by the highest available derivative order.
fn evt_tail_series(c: &NormingConstants, s: f64, m: u32) -> Result<Option<f64>> {
    const MAX_ORDER: usize = MAX_POLYGAMMA_ORDER + 1;
    if s * (c.location.abs() + 4.0 * c.scale) > 0.5 || m as usize >= MAX_ORDER {
        return Ok(None);
    }
    let u = -c.location * s + ln_gamma(1.0 + c.scale * s)?;
    let du = exponent_derivatives(c, s, MAX_ORDER)?;
    let phi = normalized_exp_derivatives(&du, MAX_ORDER);
    let mut sum = 0.0;
    let mut scale = 1.0;
    for (k, phi_k) in phi.iter().enumerate().skip(1) {
        scale *= -s / k as f64;
        if k < m as usize {
            continue;
        }
        let term = phi_k * scale;
        sum += term;
        if k > m as usize && term.abs() <= 1e-17 * sum.abs() {
            return Ok(Some(u.exp() * sum));
        }
    }
    Ok(None)
}

/// Dedicated closed forms for `m = 1, 2, 3`, unchecked like
/// [`avg_per_evt_generic`].
pub fn avg_per_evt_closed_form(
    scheme: &ModulationScheme,
    n: u64,
    ch: &FadingChannel,
) -> Result<f64> {
    let m = integer_m_or_err(ch)?;
    let c = norming_constants(scheme, n)?;
    let (a, b, g) = (c.location, c.scale, ch.gamma_bar);
    let per = match m {
        1 => -(-a / g + ln_gamma(1.0 + b / g)?).exp_m1(),
        2 => {
            let x = 2.0 * b / g;
            let u = -2.0 * a / g + ln_gamma(1.0 + x)?;
            let psi = polygamma(0, 1.0 + x)?;
            -u.exp_m1() - u.exp() * (2.0 * a / g - x * psi)
        }
        3 => {
            let x = 3.0 * b / g;
            let u = -3.0 * a / g + ln_gamma(1.0 + x)?;
            let psi = polygamma(0, 1.0 + x)?;
            let psi1 = polygamma(1, 1.0 + x)?;
            let g2 = g * g;
            let bracket = 9.0 * a * a / g2 + 6.0 * a / g + 9.0 * b * b / g2 * psi1
                - 6.0 * b / g * psi
                + 9.0 * b * b / g2 * psi * psi
                - 18.0 * a * b / g2 * psi;
            -u.exp_m1() - 0.5 * u.exp() * bracket
        }
        _ => {
            return Err(Error::Config(format!(
                "dedicated closed form exists only for m = 1, 2, 3 (got {m})"
            )))
        }
    };
    Ok(per)
}

/// Average PER from the extreme-value approximation.
///
/// Integer `m <= 3` uses the dedicated closed forms, integer `m` up to 16
/// the generic recursion (both switch to a cancellation-free series at high
/// average SNR), and non-integer `m` falls back to adaptive
/// quadrature of the Gumbel integrand (reported in `method`).
pub fn avg_per_evt(scheme: &ModulationScheme, n: u64, ch: &FadingChannel) -> Result<AvgPer> {
    if let Some(m @ 1..=MAX_INTEGER_M) = ch.integer_m() {
        let c = norming_constants(scheme, n)?;
        if let Some(per) = evt_tail_series(&c, m as f64 / ch.gamma_bar, m)? {
            return Ok(AvgPer {
                value: finish(per)?,
                method: AvgPerMethod::ClosedFormEvt,
                abs_error_estimate: None,
            });
        }
    }
    match ch.integer_m() {
        Some(1..=3) => Ok(AvgPer {
            value: finish(avg_per_evt_closed_form(scheme, n, ch)?)?,
            method: AvgPerMethod::ClosedFormEvt,
            abs_error_estimate: None,
        }),
        Some(m) if m <= MAX_INTEGER_M => Ok(AvgPer {
            value: finish(avg_per_evt_generic(scheme, n, ch)?)?,
            method: AvgPerMethod::ClosedFormEvt,
            abs_error_estimate: None,
        }),
        Some(_) => Err(Error::Config(format!(
            "integer m above {MAX_INTEGER_M} is not supported"
        ))),
        None => {
            let q = avg_per_quadrature(scheme, n, ch, PerFunction::Gumbel, FRACTIONAL_M_TOL)?;
            Ok(AvgPer {
                value: q.value,
                method: AvgPerMethod::QuadratureOracle,
                abs_error_estimate: Some(q.abs_error_estimate),
            })
        }
    }
}
