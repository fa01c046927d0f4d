//! Reference values for the average PER: adaptive quadrature of the exact
//! averaging integral, a Rao-Blackwellized Monte Carlo estimator, and the
//! numerically integrated inverse coding gain `ω₀ = ∫ PER(γ) dγ`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};

use crate::awgn::{norming_constants, per_awgn_exact};
use crate::error::{domain, Error, Result};
use crate::fading::FadingChannel;
use crate::modulation::ModulationScheme;
use crate::par::{map_indexed, Execution};
use crate::quadrature::{integrate_semi_infinite, DEFAULT_BUDGET};
use crate::specfun::ln_gamma;

pub use crate::quadrature::QuadResult;

/// Name of the generator behind [`avg_per_montecarlo`].
pub const MC_RNG_ALGORITHM: &str = "ChaCha8 (rand_chacha), stream = chunk index";

/// Draws handled by one RNG stream.
pub const MC_CHUNK: usize = 1 << 16;

/// Smallest tolerance accepted for PER averages.
pub const MIN_AVG_TOL: f64 = 1e-12;

/// Smallest tolerance accepted for `ω₀`.
pub const MIN_OMEGA0_TOL: f64 = 1e-10;

/// Which AWGN PER function is averaged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerFunction {
    /// `1 - (1 - ber)^N`
    Exact,
    /// Gumbel-minimum approximation.
    Gumbel,
}

/// Monte Carlo estimate of an average PER.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McResult {
    pub mean: f64,
    /// `sample_std / sqrt(draws)`
    pub std_error: f64,
    pub draws: u64,
    pub seed: u64,
}

/// `E[f(γ)]` for `γ` gamma-distributed per `ch`, by adaptive quadrature.
///
/// `scales` are extra SNR values near which `f` changes quickly; the
/// average SNR is always included.
pub fn average_over_fading<F>(
    ch: &FadingChannel,
    f: F,
    scales: &[f64],
    tol: f64,
) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    if !(tol >= MIN_AVG_TOL) {
        return domain(format!("quadrature tolerance {tol} below {MIN_AVG_TOL}"));
    }
    let m = ch.m();
    let gb = ch.gamma_bar();
    let log_norm = m * (m / gb).ln() - ln_gamma(m)?;
    let integrand = |g: f64| {
        if g <= 0.0 {
            return 0.0;
        }
        let pdf = (log_norm + (m - 1.0) * g.ln() - m * g / gb).exp();
        if pdf == 0.0 {
            0.0
        } else {
            f(g) * pdf
        }
    };
    let mut all_scales = vec![gb];
    all_scales.extend(scales.iter().copied().filter(|s| *s > 0.0 && s.is_finite()));
    integrate_semi_infinite(&integrand, &all_scales, tol, DEFAULT_BUDGET)
}

/// Average PER over Nakagami-m fading by adaptive Gauss–Kronrod quadrature.
pub fn avg_per_quadrature(
    scheme: &ModulationScheme,
    n: u64,
    ch: &FadingChannel,
    per_fn: PerFunction,
    tol: f64,
) -> Result<QuadResult> {
    let mut scales = Vec::new();
    let norming = norming_constants(scheme, n);
    if let Ok(c) = norming {
        scales.push(c.location);
        scales.push(c.location + 4.0 * c.scale);
    }
    scales.push(1.0 / scheme.k_m());
    let mut result = match per_fn {
        PerFunction::Exact => average_over_fading(
            ch,
            |g| per_awgn_exact(scheme, n, g).unwrap_or(f64::NAN),
            &scales,
            tol,
        )?,
        PerFunction::Gumbel => {
            let c = norming?;
            average_over_fading(ch, |g| c.per(g), &scales, tol)?
        }
    };
    result.value = result.value.clamp(0.0, 1.0);
    Ok(result)
}

#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        let mean = self.mean + delta * other.count as f64 / count as f64;
        let m2 = self.m2
            + other.m2
            + delta * delta * (self.count as f64 * other.count as f64) / count as f64;
        Moments { count, mean, m2 }
    }
}

/// Monte Carlo average PER using the default execution strategy.
pub fn avg_per_montecarlo(
    scheme: &ModulationScheme,
    n: u64,
    ch: &FadingChannel,
    draws: u64,
    seed: u64,
) -> Result<McResult> {
    avg_per_montecarlo_with(scheme, n, ch, draws, seed, Execution::default())
}

/// Monte Carlo average PER: draws the SNR from `Gamma(m, γ̄/m)` and
/// averages the exact AWGN PER (no per-bit sampling).
///
/// Draws are split into chunks of [`MC_CHUNK`]; chunk `i` uses ChaCha8
/// seeded with `seed` on stream `i`. Chunk statistics are merged in index
/// order, so the result is identical for every execution strategy and
/// thread count.
pub fn avg_per_montecarlo_with(
    scheme: &ModulationScheme,
    n: u64,
    ch: &FadingChannel,
    draws: u64,
    seed: u64,
    exec: Execution,
) -> Result<McResult> {
    if draws < 1000 {
        return domain(format!(
            "Monte Carlo needs at least 1000 draws, got {draws}"
        ));
    }
    if n == 0 {
        return domain("packet length N must be at least 1");
    }
    let dist = Gamma::new(ch.m(), ch.gamma_bar() / ch.m())
        .map_err(|e| Error::Domain(format!("gamma distribution: {e}")))?;
    let chunk = MC_CHUNK as u64;
    let chunks = draws.div_ceil(chunk) as usize;
    let parts = map_indexed(exec, chunks, |i| {
        let start = i as u64 * chunk;
        let len = chunk.min(draws - start);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let mut acc = Moments::default();
        for _ in 0..len {
            let gamma: f64 = dist.sample(&mut rng);
            // n >= 1 and gamma >= 0, so this cannot fail
            acc.push(per_awgn_exact(scheme, n, gamma).unwrap_or(f64::NAN));
        }
        acc
    });
    let total = parts.into_iter().fold(Moments::default(), Moments::merge);
    let variance = if total.count > 1 {
        total.m2 / (total.count - 1) as f64
    } else {
        0.0
    };
    Ok(McResult {
        mean: total.mean,
        std_error: (variance / total.count as f64).sqrt(),
        draws,
        seed,
    })
}

/// `ω₀ = ∫₀^∞ PER_exact(γ) dγ`, the threshold of the Rayleigh upper bound.
pub fn omega0_numeric(scheme: &ModulationScheme, n: u64, tol: f64) -> Result<QuadResult> {
    if !(tol >= MIN_OMEGA0_TOL) {
        return domain(format!("ω₀ tolerance {tol} below {MIN_OMEGA0_TOL}"));
    }
    if n == 0 {
        return domain("packet length N must be at least 1");
    }
    let k = scheme.k_m();
    let mut scales = vec![1.0 / k, (1.0 + (1.0 + n as f64 * scheme.c_m()).ln()) / k];
    if let Ok(c) = norming_constants(scheme, n) {
        scales.push(c.location);
    }
    let f = |g: f64| per_awgn_exact(scheme, n, g).unwrap_or(f64::NAN);
    integrate_semi_infinite(&f, &scales, tol, DEFAULT_BUDGET)
}
