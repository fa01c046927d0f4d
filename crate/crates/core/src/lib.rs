//! Packet error rate (PER) of uncoded modulations in AWGN and Nakagami-m
//! block-fading channels.
//!
//! The AWGN PER `1 - (1 - ber(γ))^N` is approximated by a Gumbel law whose
//! norming constants depend on the BER family, the modulation constants and
//! the packet length. Averaging the Gumbel form over a gamma-distributed SNR
//! gives a closed form for every integer fading parameter. The crate also
//! ships independent reference engines (quadrature, Monte Carlo) and the
//! usual baselines, so the approximation error can be measured.
//!
//! ```
//! use evtper::{avg_per_evt, builtin_scheme, Builtin, FadingChannel};
//!
//! let fsk = builtin_scheme(Builtin::Fsk).unwrap();
//! let ch = FadingChannel::rayleigh(100.0).unwrap();
//! let per = avg_per_evt(&fsk, 256, &ch).unwrap();
//! assert!((per.value - 0.1026).abs() < 1e-3);
//! ```

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod awgn;
pub mod baselines;
pub mod error;
pub mod fading;
pub mod modulation;
pub mod oracle;
pub mod par;
pub mod quadrature;
pub mod specfun;

pub use awgn::{
    norming_constants, per_awgn_exact, per_awgn_gumbel, per_awgn_power, NormingConstants,
};
pub use baselines::{
    avg_per_chernoff, avg_per_exact_series, avg_per_substituted, avg_per_threshold_bound,
    omega0_model, BaselineKind, Omega0Estimate, Omega0Model, Omega0Source,
};
pub use error::{Error, Result};
pub use fading::{
    avg_per_evt, avg_per_evt_closed_form, avg_per_evt_generic, gumbel_laplace_derivative,
    nakagami_pdf, AvgPer, AvgPerMethod, Density, FadingChannel,
};
pub use modulation::{builtin_scheme, BerForm, Builtin, ModulationScheme};
pub use oracle::{
    avg_per_montecarlo, avg_per_montecarlo_with, avg_per_quadrature, omega0_numeric, McResult,
    PerFunction, QuadResult,
};
pub use par::Execution;
