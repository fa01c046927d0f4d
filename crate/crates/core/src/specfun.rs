//! Special functions: Gaussian Q-function, inverse error function,
//! (log-)gamma and polygamma of integer order.
//!
//! `erf`, `erfc`, `tgamma` and `lgamma` come from [`libm`]; the inverse
//! error function and the polygamma family are implemented here.

use crate::error::{domain, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Largest polygamma order accepted by [`polygamma`].
pub const MAX_POLYGAMMA_ORDER: usize = 16;

/// Upper-tail probability of the standard normal distribution,
/// `Q(x) = P(Z > x) = erfc(x / sqrt 2) / 2`.
pub fn q_function(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return domain(format!("q_function: non-finite argument {x}"));
    }
    Ok(0.5 * libm::erfc(x * std::f64::consts::FRAC_1_SQRT_2))
}

/// Standard normal CDF, `1 - Q(x)`.
pub fn normal_cdf(x: f64) -> Result<f64> {
    q_function(-x)
}

/// Inverse of the error function on `(-1, 1)`.
///
/// A single-precision rational guess is polished with Halley steps on
/// `erf` (central region) or `erfc` (tails). In the tails the residual is
/// taken against `1 - |p|`, which is exact in floating point for
/// `|p| >= 0.5`, so the result keeps full relative accuracy as `|p| -> 1`.
pub fn erf_inv(p: f64) -> Result<f64> {
    if !(p > -1.0 && p < 1.0) {
        return domain(format!("erf_inv: argument {p} outside (-1, 1)"));
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    let a = p.abs();
    let mut x = giles_guess(a);

    let two_over_sqrt_pi = std::f64::consts::FRAC_2_SQRT_PI;
    let tail = a > 0.5;
    let q = 1.0 - a;
    for _ in 0..6 {
        let residual = if tail {
            // d/dx erfc = -2/sqrt(pi) e^{-x^2}
            -(libm::erfc(x) - q)
        } else {
            libm::erf(x) - a
        };
        let slope = two_over_sqrt_pi * (-x * x).exp();
        let t = residual / slope;
        // Halley: f''/f' = -2x for both erf and erfc.
        let step = t / (1.0 + x * t);
        x -= step;
        if step.abs() <= 4.0 * f64::EPSILON * x.abs() {
            break;
        }
    }
    Ok(x.copysign(p))
}

/// Single-precision erfinv guess (Giles' rational approximation).
fn giles_guess(a: f64) -> f64 {
    let mut w = -((1.0 - a) * (1.0 + a)).ln();
    let poly = if w < 5.0 {
        w -= 2.5;
        [
            2.810_226_36e-08,
            3.432_739_39e-07,
            -3.523_387_7e-06,
            -4.391_506_54e-06,
            0.000_218_580_87,
            -0.001_253_725_03,
            -0.004_177_681_64,
            0.246_640_727,
            1.501_409_41,
        ]
        .iter()
        .fold(0.0, |acc, c| acc * w + c)
    } else {
        w = w.sqrt() - 3.0;
        [
            -0.000_200_214_257,
            0.000_100_950_558,
            0.001_349_343_22,
            -0.003_673_428_44,
            0.005_739_507_73,
            -0.007_622_461_3,
            0.009_438_870_47,
            1.001_674_06,
            2.832_976_82,
        ]
        .iter()
        .fold(0.0, |acc, c| acc * w + c)
    };
    poly * a
}

/// Gamma function for `x > 0`.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("gamma: argument {x} must be positive and finite"));
    }
    Ok(libm::tgamma(x))
}

/// Natural log of the gamma function for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!(
            "ln_gamma: argument {x} must be positive and finite"
        ));
    }
    Ok(libm::lgamma(x))
}

/// Bernoulli numbers B_2, B_4, ..., B_28.
const BERNOULLI_EVEN: [f64; 14] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
];

/// Polygamma function `psi^(n)(x)`: `n = 0` is digamma, `n = 1` trigamma.
///
/// For `n >= 1` this evaluates `(-1)^(n+1) n! zeta(n+1, x)` where the
/// Hurwitz zeta is summed directly up to a shifted argument and finished
/// with the Euler–Maclaurin tail. Digamma uses the same shift and its
/// asymptotic series.
pub fn polygamma(n: usize, x: f64) -> Result<f64> {
    if n > MAX_POLYGAMMA_ORDER {
        return domain(format!(
            "polygamma: order {n} exceeds maximum {MAX_POLYGAMMA_ORDER}"
        ));
    }
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!(
            "polygamma: argument {x} must be positive and finite"
        ));
    }
    if n == 0 {
        return Ok(digamma_unchecked(x));
    }
    let zeta = hurwitz_zeta_int(n + 1, x);
    let factorial: f64 = (1..=n).map(|k| k as f64).product();
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * factorial * zeta)
}

pub fn digamma(x: f64) -> Result<f64> {
    polygamma(0, x)
}

pub fn trigamma(x: f64) -> Result<f64> {
    polygamma(1, x)
}

fn digamma_unchecked(mut x: f64) -> f64 {
    let mut shift = 0.0;
    while x < 12.0 {
        shift += 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2;
    let mut series = 0.0;
    for (j, b) in BERNOULLI_EVEN.iter().enumerate().take(10) {
        let two_j = 2.0 * (j as f64 + 1.0);
        series += b / two_j * pow;
        pow *= inv2;
    }
    x.ln() - 0.5 / x - series - shift
}

/// Hurwitz zeta `zeta(s, a)` for integer `s >= 2` and `a > 0`.
fn hurwitz_zeta_int(s: usize, a: f64) -> f64 {
    let sf = s as f64;
    let threshold = 20.0 + sf;
    let mut head = 0.0;
    let mut x = a;
    while x < threshold {
        head += x.powi(-(s as i32));
        x += 1.0;
    }
    // Euler–Maclaurin tail at the shifted argument.
    let x_pow_s = x.powi(-(s as i32));
    let mut tail = x * x_pow_s / (sf - 1.0) + 0.5 * x_pow_s;
    // term_j = B_2j / (2j)! * s (s+1) ... (s+2j-2) * x^{-s-2j+1}
    let inv_x = 1.0 / x;
    let mut rising = sf; // s (s+1) ... (s+2j-2)
    let mut factorial = 2.0; // (2j)!
    let mut power = x_pow_s * inv_x; // x^{-s-2j+1}
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let jf = (j + 1) as f64;
        let term = b / factorial * rising * power;
        tail += term;
        if term.abs() < 1e-18 * tail.abs() {
            break;
        }
        rising *= (sf + 2.0 * jf - 1.0) * (sf + 2.0 * jf);
        factorial *= (2.0 * jf + 1.0) * (2.0 * jf + 2.0);
        power *= inv_x * inv_x;
    }
    head + tail
}
