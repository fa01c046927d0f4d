//! Uncoded modulation schemes and their instantaneous bit error rates.
//!
//! Every scheme falls in one of two families:
//!
//! * Q-form: `ber(γ) = c · Q(sqrt(k γ))` (coherent BPSK, M-PSK, M-QAM, ...)
//! * exp-form: `ber(γ) = c · exp(-k γ)` (non-coherent FSK, DPSK)
//!
//! SNR arguments are linear, never dB.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::specfun::q_function;

/// Functional family of the BER expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BerForm {
    /// `c · Q(sqrt(k γ))`
    QForm,
    /// `c · exp(-k γ)`
    ExpForm,
}

impl fmt::Display for BerForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BerForm::QForm => f.write_str("q"),
            BerForm::ExpForm => f.write_str("exp"),
        }
    }
}

impl FromStr for BerForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" | "qform" => Ok(BerForm::QForm),
            "exp" | "expform" => Ok(BerForm::ExpForm),
            other => Err(Error::Config(format!("unknown BER form '{other}'"))),
        }
    }
}

/// Named builtin schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Fsk,
    Dpsk,
    Bpsk,
    /// Square M-QAM with the given constellation size.
    Mqam(u32),
}

/// A modulation scheme: BER family plus the constants `c_m` and `k_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModulationScheme {
    pub name: String,
    pub form: BerForm,
    c: f64,
    k: f64,
}

impl ModulationScheme {
    /// Builds a custom scheme. Both constants must be positive and finite.
    pub fn new(name: impl Into<String>, form: BerForm, c_m: f64, k_m: f64) -> Result<Self> {
        if !(c_m > 0.0 && c_m.is_finite()) || !(k_m > 0.0 && k_m.is_finite()) {
            return Err(Error::Config(format!(
                "modulation constants must be positive and finite (c_m={c_m}, k_m={k_m})"
            )));
        }
        Ok(Self {
            name: name.into(),
            form,
            c: c_m,
            k: k_m,
        })
    }

    pub fn c_m(&self) -> f64 {
        self.c
    }

    pub fn k_m(&self) -> f64 {
        self.k
    }

    /// Instantaneous bit error rate at linear SNR `gamma`.
    pub fn ber(&self, gamma: f64) -> Result<f64> {
        if !(gamma >= 0.0) {
            return domain(format!("ber: SNR {gamma} must be non-negative"));
        }
        match self.form {
            BerForm::QForm => {
                if gamma.is_infinite() {
                    return Ok(0.0);
                }
                Ok(self.c * q_function((self.k * gamma).sqrt())?)
            }
            BerForm::ExpForm => Ok(self.c * (-self.k * gamma).exp()),
        }
    }

    /// The exp-form scheme obtained by replacing `Q(x)` with its Chernoff
    /// bound `exp(-x^2/2) / 2`. Exp-form schemes are returned unchanged.
    pub fn chernoff_equivalent(&self) -> ModulationScheme {
        match self.form {
            BerForm::ExpForm => self.clone(),
            BerForm::QForm => ModulationScheme {
                name: format!("{}-chernoff", self.name),
                form: BerForm::ExpForm,
                c: 0.5 * self.c,
                k: 0.5 * self.k,
            },
        }
    }

    /// CLI-style identifier: `fsk`, `qam16`, or `custom:<form>,<c>,<k>`.
    pub fn selector(&self) -> String {
        match self.name.as_str() {
            "fsk" | "dpsk" | "bpsk" => self.name.clone(),
            n if n.starts_with("qam") => self.name.clone(),
            _ => format!("custom:{},{},{}", self.form, self.c, self.k),
        }
    }
}

impl fmt::Display for ModulationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}, c_m={}, k_m={})",
            self.name, self.form, self.c, self.k
        )
    }
}

/// Returns one of the builtin schemes.
///
/// M-QAM uses `c_m = (4/k)(1 - 1/sqrt M)`, `k_m = 3k/(M-1)` with
/// `k = log2 M`; only square constellations (`M = 4^j`, `M >= 4`) are
/// accepted.
pub fn builtin_scheme(which: Builtin) -> Result<ModulationScheme> {
    match which {
        Builtin::Fsk => ModulationScheme::new("fsk", BerForm::ExpForm, 0.5, 0.5),
        Builtin::Dpsk => ModulationScheme::new("dpsk", BerForm::ExpForm, 0.5, 1.0),
        Builtin::Bpsk => ModulationScheme::new("bpsk", BerForm::QForm, 1.0, 2.0),
        Builtin::Mqam(m) => {
            // power of four: a single set bit at an even position
            if m < 4 || !m.is_power_of_two() || m.trailing_zeros() % 2 != 0 {
                return Err(Error::Config(format!(
                    "M-QAM requires a square constellation M = 4^j >= 4, got {m}"
                )));
            }
            let bits = m.trailing_zeros() as f64;
            let mf = m as f64;
            let c_m = 4.0 / bits * (1.0 - 1.0 / mf.sqrt());
            let k_m = 3.0 * bits / (mf - 1.0);
            ModulationScheme::new(format!("qam{m}"), BerForm::QForm, c_m, k_m)
        }
    }
}

impl FromStr for ModulationScheme {
    type Err = Error;

    /// Parses `fsk`, `dpsk`, `bpsk`, `qam<M>` or `custom:<form>,<c>,<k>`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("custom:") {
            let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(Error::Config(format!(
                    "custom scheme must be 'custom:<form>,<c>,<k>', got '{s}'"
                )));
            }
            let form: BerForm = parts[0].parse()?;
            let parse = |v: &str| {
                v.parse::<f64>()
                    .map_err(|_| Error::Config(format!("invalid number '{v}' in '{s}'")))
            };
            return ModulationScheme::new("custom", form, parse(parts[1])?, parse(parts[2])?);
        }
        match lower.as_str() {
            "fsk" => builtin_scheme(Builtin::Fsk),
            "dpsk" => builtin_scheme(Builtin::Dpsk),
            "bpsk" => builtin_scheme(Builtin::Bpsk),
            other => {
                let m = other
                    .strip_prefix("qam")
                    .and_then(|m| m.parse::<u32>().ok())
                    .ok_or_else(|| Error::Config(format!("unknown scheme '{s}'")))?;
                builtin_scheme(Builtin::Mqam(m))
            }
        }
    }
}
