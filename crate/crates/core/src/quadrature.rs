//! Globally adaptive Gauss–Kronrod (7/15) integration over finite panels and
//! over `[0, ∞)` split at geometric breakpoints.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Default cap on integrand evaluations.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Outcome of a numerical integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// One 15-point Kronrod rule on `[lo, hi]` with the QUADPACK error scaling.
fn kronrod15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<Segment> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = kronrod.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    if !kronrod.is_finite() {
        return Err(Error::Domain(format!(
            "integrand is not finite on [{lo}, {hi}]"
        )));
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = kronrod * half;
    let res_abs = abs_sum * half.abs();
    let res_asc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Segment {
        lo,
        hi,
        value,
        error,
    })
}

/// Integrates `f` over consecutive panels `[p0,p1], [p1,p2], ...`, bisecting
/// the segment with the largest error estimate until the summed estimate
/// drops below `tol` or `budget` evaluations are spent.
pub fn integrate_panels<F: Fn(f64) -> f64>(
    f: &F,
    breakpoints: &[f64],
    tol: f64,
    budget: usize,
) -> Result<QuadResult> {
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    for w in breakpoints.windows(2) {
        if w[1] > w[0] {
            heap.push(kronrod15(f, w[0], w[1])?);
            evaluations += 15;
        }
    }
    let mut run_error = totals(&heap).1;
    loop {
        if run_error <= tol {
            let (value, error) = totals(&heap);
            if error <= tol {
                return Ok(QuadResult {
                    value,
                    abs_error_estimate: error,
                    evaluations,
                });
            }
            run_error = error;
        }
        let worst = match heap.peek() {
            Some(s) => *s,
            None => {
                return Ok(QuadResult {
                    value: 0.0,
                    abs_error_estimate: 0.0,
                    evaluations,
                })
            }
        };
        let mid = 0.5 * (worst.lo + worst.hi);
        if evaluations + 30 > budget || !(mid > worst.lo && mid < worst.hi) {
            let (value, error) = totals(&heap);
            return Err(Error::Convergence {
                best: value,
                abs_error: error,
                evaluations,
            });
        }
        heap.pop();
        let left = kronrod15(f, worst.lo, mid)?;
        let right = kronrod15(f, mid, worst.hi)?;
        run_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        evaluations += 30;
    }
}

fn totals(heap: &BinaryHeap<Segment>) -> (f64, f64) {
    // Sum in a fixed order so the result does not depend on heap layout.
    let mut segs: Vec<&Segment> = heap.iter().collect();
    segs.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    let value = segs.iter().map(|s| s.value).sum();
    let error = segs.iter().map(|s| s.error).sum();
    (value, error)
}

/// Integrates `f` over `[0, ∞)`.
///
/// Panels are laid out at `scale · 2^j` for every scale in `scales`
/// (`j = -12 ..= 3`), then extended by doubling until a panel contributes
/// less than `tol / 10` beyond the last scale. The integrand must be
/// non-negative for the tail rule to be meaningful.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: &F,
    scales: &[f64],
    tol: f64,
    budget: usize,
) -> Result<QuadResult> {
    let mut points: Vec<f64> = vec![0.0];
    for &s in scales.iter().filter(|s| s.is_finite() && **s > 0.0) {
        for j in -12..=3 {
            points.push(s * 2f64.powi(j));
        }
    }
    points.sort_by(f64::total_cmp);
    points.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());
    if points.len() < 2 {
        points.push(1.0);
    }

    let mut last = *points.last().unwrap();
    let mut probes = 0;
    for _ in 0..400 {
        let next = 2.0 * last;
        let seg = kronrod15(f, last, next)?;
        probes += 15;
        points.push(next);
        last = next;
        if seg.value.abs() + seg.error < 0.1 * tol {
            break;
        }
        if !next.is_finite() {
            break;
        }
    }
    let mut result = integrate_panels(f, &points, tol, budget.saturating_sub(probes))?;
    result.evaluations += probes;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let r = integrate_panels(&|x: f64| x * x * x, &[0.0, 2.0], 1e-12, 10_000).unwrap();
        assert!((r.value - 4.0).abs() < 1e-13);
    }

    #[test]
    fn exponential_tail() {
        let r =
            integrate_semi_infinite(&|x: f64| (-x).exp(), &[1.0], 1e-12, DEFAULT_BUDGET).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn integrable_singularity_at_origin() {
        // ∫ x^{-1/2} e^{-x} = sqrt(pi)
        let r = integrate_semi_infinite(
            &|x: f64| x.powf(-0.5) * (-x).exp(),
            &[1.0],
            1e-10,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(
            (r.value - std::f64::consts::PI.sqrt()).abs() < 1e-9,
            "{r:?}"
        );
    }

    #[test]
    fn budget_exhaustion_reports_best_estimate() {
        let err =
            integrate_panels(&|x: f64| (1.0 / x).sin(), &[1e-6, 1.0], 1e-14, 200).unwrap_err();
        assert!(matches!(err, Error::Convergence { .. }));
    }
}
