//! Packet error rate in the AWGN channel.
//!
//! The exact PER of an `N`-bit uncoded packet is `1 - (1 - ber(γ))^N`. For
//! large `N` it is well approximated by the Gumbel law for the minimum,
//!
//! ```text
//! PER(γ) ≈ 1 - exp(-exp(-(γ - a_N) / b_N))
//! ```
//!
//! where `(a_N, b_N)` are the norming constants of the maximum of `N·c_m`
//! i.i.d. variables drawn from the standard normal (Q-form BER) or the
//! exponential (exp-form BER) distribution, mapped into the SNR domain.

use crate::error::{domain, Result};
use crate::modulation::{BerForm, ModulationScheme};
use crate::specfun::{erf_inv, q_function};

/// Gumbel location/scale pair in the (linear) SNR domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormingConstants {
    /// `a_N`
    pub location: f64,
    /// `b_N`, always positive.
    pub scale: f64,
}

impl NormingConstants {
    /// Gumbel-minimum PER at SNR `gamma`.
    pub fn per(&self, gamma: f64) -> f64 {
        let z = (-(gamma - self.location) / self.scale).exp();
        -(-z).exp_m1()
    }
}

fn check_length(n: u64) -> Result<()> {
    if n == 0 {
        return domain("packet length N must be at least 1");
    }
    Ok(())
}

/// Exact AWGN packet error rate `1 - (1 - ber)^N`.
///
/// Evaluated as `-expm1(N · log1p(-ber))` so that `PER ≈ N·ber` keeps full
/// relative precision when the BER is tiny.
pub fn per_awgn_exact(scheme: &ModulationScheme, n: u64, gamma: f64) -> Result<f64> {
    check_length(n)?;
    let ber = scheme.ber(gamma)?;
    if ber >= 1.0 {
        return Ok(1.0);
    }
    Ok(-(n as f64 * (-ber).ln_1p()).exp_m1())
}

/// Norming constants `(a_N, b_N)` for `scheme` and packet length `n`.
///
/// Exp-form: `a_N = ln(N c_m)/k_m`, `b_N = 1/k_m` (needs `N c_m > 1`).
/// Q-form: `a_N = (2/k_m) erfinv(1 - 2/(N c_m))^2` and
/// `b_N = (2/k_m) erfinv(1 - 2/(N c_m e))^2 - a_N` (needs `N c_m > 2`).
pub fn norming_constants(scheme: &ModulationScheme, n: u64) -> Result<NormingConstants> {
    check_length(n)?;
    let effective = n as f64 * scheme.c_m();
    let k = scheme.k_m();
    match scheme.form {
        BerForm::ExpForm => {
            if !(effective > 1.0) {
                return domain(format!(
                    "norming constants for exp-form BER need N·c_m > 1 (got N·c_m = {effective})"
                ));
            }
            Ok(NormingConstants {
                location: effective.ln() / k,
                scale: 1.0 / k,
            })
        }
        BerForm::QForm => {
            if !(effective > 2.0) {
                return domain(format!(
                    "norming constants for Q-form BER need N·c_m > 2 (got N·c_m = {effective})"
                ));
            }
            let x_loc = erf_inv(1.0 - 2.0 / effective)?;
            let x_scale = erf_inv(1.0 - 2.0 / (effective * std::f64::consts::E))?;
            let location = 2.0 / k * x_loc * x_loc;
            let scale = 2.0 / k * x_scale * x_scale - location;
            if !(scale > 0.0) {
                return Err(crate::Error::Internal(format!(
                    "non-positive Gumbel scale {scale} for N·c_m = {effective}"
                )));
            }
            Ok(NormingConstants { location, scale })
        }
    }
}

/// Gumbel (extreme value) approximation of the AWGN packet error rate.
pub fn per_awgn_gumbel(scheme: &ModulationScheme, n: u64, gamma: f64) -> Result<f64> {
    if !(gamma >= 0.0) {
        return domain(format!("SNR {gamma} must be non-negative"));
    }
    Ok(norming_constants(scheme, n)?.per(gamma))
}

/// Intermediate approximation `1 - F(x)^(N c_m)` in which the `c_m`
/// prefactor has been moved into the exponent (`F` is the standard normal
/// or exponential CDF). The Gumbel law approximates this expression.
pub fn per_awgn_power(scheme: &ModulationScheme, n: u64, gamma: f64) -> Result<f64> {
    check_length(n)?;
    if !(gamma >= 0.0) {
        return domain(format!("SNR {gamma} must be non-negative"));
    }
    let tail = match scheme.form {
        BerForm::QForm => q_function((scheme.k_m() * gamma).sqrt())?,
        BerForm::ExpForm => (-scheme.k_m() * gamma).exp(),
    };
    let exponent = n as f64 * scheme.c_m();
    Ok(-(exponent * (-tail).ln_1p()).exp_m1())
}
