//! Command implementations behind the `evtper` binary.
//!
//! Each command builds its result in memory and then serializes it as CSV:
//! `#`-prefixed metadata lines, a header row, one row per SNR point.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use evtper::{
    avg_per_chernoff, avg_per_evt, avg_per_exact_series, avg_per_montecarlo_with,
    avg_per_quadrature, avg_per_threshold_bound, norming_constants, omega0_model, omega0_numeric,
    AvgPerMethod, BaselineKind, BerForm, Execution, FadingChannel, ModulationScheme, Omega0Model,
    PerFunction,
};
use thiserror::Error;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Failure of a CLI command, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] evtper::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 for usage and domain errors, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(evtper::Error::Convergence { .. })
            | CliError::Library(evtper::Error::Internal(_)) => 3,
            CliError::Io(_) | CliError::Csv(_) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}

/// Average-PER evaluation method selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Evt,
    Quad,
    Mc,
    Series,
    ThresholdNumeric,
    ThresholdLiu,
    ThresholdWu,
    Chernoff,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Evt,
        Method::Quad,
        Method::Mc,
        Method::Series,
        Method::ThresholdNumeric,
        Method::ThresholdLiu,
        Method::ThresholdWu,
        Method::Chernoff,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Evt => "evt",
            Method::Quad => "quad",
            Method::Mc => "mc",
            Method::Series => "series",
            Method::ThresholdNumeric => "threshold-numeric",
            Method::ThresholdLiu => "threshold-liu",
            Method::ThresholdWu => "threshold-wu",
            Method::Chernoff => "chernoff",
        }
    }

    pub fn provenance(self) -> AvgPerMethod {
        match self {
            Method::Evt => AvgPerMethod::ClosedFormEvt,
            Method::Quad => AvgPerMethod::QuadratureOracle,
            Method::Mc => AvgPerMethod::MonteCarloOracle,
            Method::Series => AvgPerMethod::Baseline(BaselineKind::ExactSeries),
            Method::ThresholdNumeric => AvgPerMethod::Baseline(BaselineKind::ThresholdNumeric),
            Method::ThresholdLiu => AvgPerMethod::Baseline(BaselineKind::ThresholdLiu),
            Method::ThresholdWu => AvgPerMethod::Baseline(BaselineKind::ThresholdWu),
            Method::Chernoff => AvgPerMethod::Baseline(BaselineKind::Chernoff),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s.trim())
            .ok_or_else(|| {
                let known: Vec<_> = Method::ALL.iter().map(|m| m.as_str()).collect();
                CliError::Usage(format!(
                    "unknown method '{s}' (expected one of {})",
                    known.join(", ")
                ))
            })
    }
}

/// Parses a comma-separated method list.
pub fn parse_methods(s: &str) -> Result<Vec<Method>> {
    let methods = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Method>>>()?;
    if methods.is_empty() {
        return usage("--methods must name at least one method");
    }
    let mut seen = Vec::new();
    for m in &methods {
        if seen.contains(m) {
            return usage(format!("method '{m}' listed twice"));
        }
        seen.push(*m);
    }
    Ok(methods)
}

/// SNR sweep in dB: `start:stop:step`, both ends inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnrRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl SnrRange {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return usage("SNR range must be finite");
        }
        if start > stop {
            return usage(format!("SNR range start {start} exceeds stop {stop}"));
        }
        if step <= 0.0 {
            return usage(format!("SNR step {step} must be positive"));
        }
        Ok(Self { start, stop, step })
    }

    /// Grid points `start + i·step` up to `stop` (with a 1e-9 step slack).
    pub fn points(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| self.start + i as f64 * self.step)
            .collect()
    }
}

impl FromStr for SnrRange {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let nums = parts
            .iter()
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<Vec<f64>, _>>()
            .map_err(|_| CliError::Usage(format!("invalid SNR range '{s}'")))?;
        match nums.as_slice() {
            [start, stop, step] => SnrRange::new(*start, *stop, *step),
            [start, stop] => SnrRange::new(*start, *stop, 1.0),
            [single] => SnrRange::new(*single, *single, 1.0),
            _ => usage(format!("SNR range must be start:stop:step, got '{s}'")),
        }
    }
}

impl fmt::Display for SnrRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

/// dB to linear power ratio.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Everything a `curve` or `compare` run depends on.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub scheme: ModulationScheme,
    pub n: u64,
    pub m: f64,
    pub snr_db: SnrRange,
    pub methods: Vec<Method>,
    pub tol: f64,
    pub draws: u64,
    pub seed: u64,
}

impl RunConfig {
    /// Rejects scheme/method/channel combinations up front.
    pub fn validate(&self) -> Result<()> {
        if self.methods.is_empty() {
            return usage("at least one method is required");
        }
        if self.n == 0 {
            return usage("--n must be at least 1");
        }
        FadingChannel::new(self.m, 1.0)?;
        let rayleigh = self.m == 1.0;
        for method in &self.methods {
            match method {
                Method::Evt => {
                    norming_constants(&self.scheme, self.n)?;
                }
                Method::Quad | Method::ThresholdNumeric if self.tol < 1e-12 => {
                    return usage(format!("--tol {} is below 1e-12", self.tol));
                }
                Method::Mc if self.draws < 1000 => {
                    return usage(format!("--draws {} is below 1000", self.draws));
                }
                Method::Series => {
                    if self.scheme.form != BerForm::ExpForm {
                        return usage("method 'series' requires an exp-form scheme (fsk, dpsk)");
                    }
                    if !rayleigh {
                        return usage("method 'series' requires --m 1");
                    }
                    if self.n > evtper::baselines::MAX_SERIES_N {
                        return usage(format!(
                            "method 'series' is limited to N <= {}",
                            evtper::baselines::MAX_SERIES_N
                        ));
                    }
                }
                Method::Chernoff => {
                    if self.scheme.form != BerForm::QForm {
                        return usage("method 'chernoff' requires a Q-form scheme");
                    }
                    if !rayleigh {
                        return usage("method 'chernoff' requires --m 1");
                    }
                }
                Method::ThresholdNumeric | Method::ThresholdLiu | Method::ThresholdWu => {
                    if !rayleigh {
                        return usage(format!("method '{method}' requires --m 1"));
                    }
                    if *method != Method::ThresholdNumeric && self.n < 2 {
                        return usage(format!("method '{method}' requires N >= 2"));
                    }
                    if *method == Method::ThresholdWu
                        && Omega0Model::wu_fitted(&self.scheme).is_none()
                    {
                        return usage(format!(
                            "no fitted ω₀ constants for scheme '{}'",
                            self.scheme.name
                        ));
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn echo(&self, command: &str) -> Vec<(String, String)> {
        let methods: Vec<_> = self.methods.iter().map(|m| m.as_str()).collect();
        let mut meta = vec![
            (
                "generator".to_string(),
                format!("evtper-cli {VERSION} (evtper {})", evtper_version()),
            ),
            ("command".into(), command.into()),
            ("scheme".into(), self.scheme.selector()),
            ("form".into(), self.scheme.form.to_string()),
            ("c_m".into(), self.scheme.c_m().to_string()),
            ("k_m".into(), self.scheme.k_m().to_string()),
            ("n".into(), self.n.to_string()),
            ("m".into(), self.m.to_string()),
            ("snr_db".into(), self.snr_db.to_string()),
            ("methods".into(), methods.join(",")),
            ("tol".into(), format!("{:e}", self.tol)),
        ];
        if self.methods.contains(&Method::Mc) {
            meta.push(("draws".into(), self.draws.to_string()));
            meta.push(("seed".into(), self.seed.to_string()));
            meta.push(("rng".into(), evtper::oracle::MC_RNG_ALGORITHM.into()));
        }
        meta
    }
}

fn evtper_version() -> &'static str {
    // both crates are versioned together in this workspace
    VERSION
}

/// Per-point seed for Monte Carlo sweeps.
pub fn point_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64)
        .wrapping_add(1)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Values shared by all points of a sweep.
struct SweepContext {
    omega0_numeric: Option<f64>,
    omega0_liu: Option<f64>,
    omega0_wu: Option<f64>,
}

impl SweepContext {
    fn new(cfg: &RunConfig) -> Result<Self> {
        let want = |m: Method| cfg.methods.contains(&m);
        let omega0_numeric = if want(Method::ThresholdNumeric) {
            Some(
                omega0_numeric(
                    &cfg.scheme,
                    cfg.n,
                    cfg.tol.max(evtper::oracle::MIN_OMEGA0_TOL),
                )?
                .value,
            )
        } else {
            None
        };
        let omega0_liu = if want(Method::ThresholdLiu) {
            Some(omega0_model(&Omega0Model::liu_analytic(&cfg.scheme), cfg.n)?.value)
        } else {
            None
        };
        let omega0_wu = match Omega0Model::wu_fitted(&cfg.scheme) {
            Some(model) if want(Method::ThresholdWu) => Some(omega0_model(&model, cfg.n)?.value),
            _ => None,
        };
        Ok(Self {
            omega0_numeric,
            omega0_liu,
            omega0_wu,
        })
    }
}

/// One method's value at one SNR point.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Eval {
    per: f64,
    std_error: Option<f64>,
}

fn evaluate(
    cfg: &RunConfig,
    ctx: &SweepContext,
    method: Method,
    index: usize,
    snr_db: f64,
    exec: Execution,
) -> Result<Eval> {
    let ch = FadingChannel::new(cfg.m, db_to_linear(snr_db))?;
    let plain = |per: f64| Eval {
        per,
        std_error: None,
    };
    let threshold = |omega0: Option<f64>| -> Result<Eval> {
        let w = omega0.expect("ω₀ computed for requested threshold method");
        Ok(plain(avg_per_threshold_bound(w, ch.gamma_bar())?))
    };
    match method {
        Method::Evt => Ok(plain(avg_per_evt(&cfg.scheme, cfg.n, &ch)?.value)),
        Method::Quad => Ok(plain(
            avg_per_quadrature(&cfg.scheme, cfg.n, &ch, PerFunction::Exact, cfg.tol)?.value,
        )),
        Method::Mc => {
            let r = avg_per_montecarlo_with(
                &cfg.scheme,
                cfg.n,
                &ch,
                cfg.draws,
                point_seed(cfg.seed, index),
                exec,
            )?;
            Ok(Eval {
                per: r.mean,
                std_error: Some(r.std_error),
            })
        }
        Method::Series => Ok(plain(avg_per_exact_series(&cfg.scheme, cfg.n, &ch)?)),
        Method::Chernoff => Ok(plain(avg_per_chernoff(&cfg.scheme, cfg.n, &ch, cfg.tol)?)),
        Method::ThresholdNumeric => threshold(ctx.omega0_numeric),
        Method::ThresholdLiu => threshold(ctx.omega0_liu),
        Method::ThresholdWu => threshold(ctx.omega0_wu),
    }
}

/// One row of a PER curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    pub snr_db: f64,
    /// One value per method, in the curve's method order.
    pub per: Vec<f64>,
    /// Monte Carlo standard error, when `mc` is among the methods.
    pub mc_std_error: Option<f64>,
}

/// Average PER against average SNR for one or more methods.
#[derive(Debug, Clone, PartialEq)]
pub struct PerCurve {
    pub meta: Vec<(String, String)>,
    pub methods: Vec<Method>,
    pub points: Vec<CurvePoint>,
}

fn sweep(cfg: &RunConfig, exec: Execution) -> Result<Vec<CurvePoint>> {
    cfg.validate()?;
    let ctx = SweepContext::new(cfg)?;
    let grid = cfg.snr_db.points();
    let rows = evtper::par::map_indexed(exec, grid.len(), |i| -> Result<CurvePoint> {
        let snr_db = grid[i];
        let mut per = Vec::with_capacity(cfg.methods.len());
        let mut mc_std_error = None;
        for &method in &cfg.methods {
            let e = evaluate(cfg, &ctx, method, i, snr_db, exec)?;
            if method == Method::Mc {
                mc_std_error = e.std_error;
            }
            per.push(e.per);
        }
        Ok(CurvePoint {
            snr_db,
            per,
            mc_std_error,
        })
    });
    rows.into_iter().collect()
}

fn provenance_meta(cfg: &RunConfig) -> Vec<(String, String)> {
    cfg.methods
        .iter()
        .map(|&m| {
            let how = match m {
                Method::Evt if cfg.m.fract() != 0.0 => {
                    format!("{:?} (non-integer m)", AvgPerMethod::QuadratureOracle)
                }
                _ => format!("{:?}", m.provenance()),
            };
            (format!("provenance.{m}"), how)
        })
        .collect()
}

/// `curve`: average PER over the SNR sweep for every requested method.
pub fn cmd_curve(cfg: &RunConfig, exec: Execution) -> Result<PerCurve> {
    let points = sweep(cfg, exec)?;
    let mut meta = cfg.echo("curve");
    meta.extend(provenance_meta(cfg));
    Ok(PerCurve {
        meta,
        methods: cfg.methods.clone(),
        points,
    })
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// 10 significant digits in plain decimal where practical.
pub fn fmt_sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let decimals = 9 - x.abs().log10().floor() as i32;
    if (0..=12).contains(&decimals) {
        format!("{:.*}", decimals as usize, x)
    } else {
        format!("{x:.9e}")
    }
}

fn write_meta<W: Write>(out: &mut W, meta: &[(String, String)]) -> io::Result<()> {
    for (k, v) in meta {
        writeln!(out, "# {k}={v}")?;
    }
    Ok(())
}

/// Serializes a curve: metadata lines, header, one row per point.
pub fn write_curve_csv<W: Write>(curve: &PerCurve, mut out: W) -> Result<()> {
    write_meta(&mut out, &curve.meta)?;
    let has_mc = curve.methods.contains(&Method::Mc);
    let mut wtr = csv::Writer::from_writer(out);
    let mut header = vec!["snr_db".to_string()];
    header.extend(curve.methods.iter().map(|m| format!("per_{m}")));
    if has_mc {
        header.push("stderr_mc".into());
    }
    wtr.write_record(&header)?;
    for p in &curve.points {
        let mut row = vec![p.snr_db.to_string()];
        row.extend(p.per.iter().map(|v| fmt_f64(*v)));
        if has_mc {
            row.push(p.mc_std_error.map(fmt_f64).unwrap_or_default());
        }
        wtr.write_record(&row)?;
    }
    wtr.flush()?;
    Ok(())
}

/// Parses the output of [`write_curve_csv`].
pub fn parse_curve_csv(text: &str) -> Result<PerCurve> {
    let mut meta = Vec::new();
    for line in text.lines().take_while(|l| l.starts_with('#')) {
        let body = line.trim_start_matches('#').trim();
        if let Some((k, v)) = body.split_once('=') {
            meta.push((k.to_string(), v.to_string()));
        }
    }
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = rdr.headers()?.clone();
    let mut methods = Vec::new();
    let mut mc_col = None;
    for (i, h) in headers.iter().enumerate() {
        if let Some(name) = h.strip_prefix("per_") {
            methods.push(name.parse::<Method>()?);
        } else if h == "stderr_mc" {
            mc_col = Some(i);
        } else if h != "snr_db" {
            return usage(format!("unexpected column '{h}'"));
        }
    }
    let num = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| CliError::Usage(format!("invalid number '{s}'")))
    };
    let mut points = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let snr_db = num(&rec[0])?;
        let per = (1..=methods.len())
            .map(|i| num(&rec[i]))
            .collect::<Result<Vec<f64>>>()?;
        let mc_std_error = match mc_col {
            Some(i) if !rec[i].is_empty() => Some(num(&rec[i])?),
            _ => None,
        };
        points.push(CurvePoint {
            snr_db,
            per,
            mc_std_error,
        });
    }
    Ok(PerCurve {
        meta,
        methods,
        points,
    })
}

/// Error statistics of one approximation against the quadrature oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorSummary {
    pub method: Method,
    pub max_abs: f64,
    pub mean_abs: f64,
    pub max_rel: f64,
}

/// Output of `compare`.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub curve: PerCurve,
    /// Approximation methods (everything except `quad`), in curve order.
    pub approximations: Vec<Method>,
    pub summaries: Vec<ErrorSummary>,
}

impl Comparison {
    pub fn summary(&self, method: Method) -> Option<&ErrorSummary> {
        self.summaries.iter().find(|s| s.method == method)
    }
}

/// `compare`: absolute error of each approximation against `quad`.
pub fn cmd_compare(cfg: &RunConfig, exec: Execution) -> Result<Comparison> {
    let oracle_col = match cfg.methods.iter().position(|m| *m == Method::Quad) {
        Some(i) => i,
        None => return usage("compare needs 'quad' among --methods as the reference"),
    };
    let approximations: Vec<Method> = cfg
        .methods
        .iter()
        .copied()
        .filter(|m| *m != Method::Quad)
        .collect();
    if approximations.is_empty() {
        return usage("compare needs at least one method besides 'quad'");
    }
    let points = sweep(cfg, exec)?;
    let mut summaries = Vec::new();
    for &method in &approximations {
        let col = cfg.methods.iter().position(|m| *m == method).unwrap();
        let mut max_abs: f64 = 0.0;
        let mut sum_abs = 0.0;
        let mut max_rel: f64 = 0.0;
        for p in &points {
            let oracle = p.per[oracle_col];
            let err = (p.per[col] - oracle).abs();
            max_abs = max_abs.max(err);
            sum_abs += err;
            if oracle > 0.0 {
                max_rel = max_rel.max(err / oracle);
            }
        }
        summaries.push(ErrorSummary {
            method,
            max_abs,
            mean_abs: sum_abs / points.len().max(1) as f64,
            max_rel,
        });
    }
    let mut meta = cfg.echo("compare");
    meta.extend(provenance_meta(cfg));
    Ok(Comparison {
        curve: PerCurve {
            meta,
            methods: cfg.methods.clone(),
            points,
        },
        approximations,
        summaries,
    })
}

/// Serializes a comparison: per-point values and absolute errors, then
/// `#summary` lines.
pub fn write_compare_csv<W: Write>(cmp: &Comparison, mut out: W) -> Result<()> {
    let curve = &cmp.curve;
    write_meta(&mut out, &curve.meta)?;
    let oracle_col = curve
        .methods
        .iter()
        .position(|m| *m == Method::Quad)
        .unwrap();
    let cols: Vec<usize> = cmp
        .approximations
        .iter()
        .map(|a| curve.methods.iter().position(|m| m == a).unwrap())
        .collect();
    {
        let mut wtr = csv::Writer::from_writer(&mut out);
        let mut header = vec!["snr_db".to_string(), "per_quad".to_string()];
        for a in &cmp.approximations {
            header.push(format!("per_{a}"));
            header.push(format!("abserr_{a}"));
        }
        wtr.write_record(&header)?;
        for p in &curve.points {
            let oracle = p.per[oracle_col];
            let mut row = vec![p.snr_db.to_string(), fmt_f64(oracle)];
            for &c in &cols {
                row.push(fmt_f64(p.per[c]));
                row.push(fmt_f64((p.per[c] - oracle).abs()));
            }
            wtr.write_record(&row)?;
        }
        wtr.flush()?;
    }
    writeln!(out, "#summary,method,max_abs_err,mean_abs_err,max_rel_err")?;
    for s in &cmp.summaries {
        writeln!(
            out,
            "#summary,{},{},{},{}",
            s.method,
            fmt_f64(s.max_abs),
            fmt_f64(s.mean_abs),
            fmt_f64(s.max_rel)
        )?;
    }
    Ok(())
}

/// Output of `constants`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantsRow {
    pub scheme: String,
    pub n: u64,
    pub a_n: f64,
    pub b_n: f64,
    pub omega0_numeric: f64,
    pub omega0_liu: Option<f64>,
    pub omega0_wu: Option<f64>,
}

/// `constants`: norming constants and the available `ω₀` estimates.
pub fn cmd_constants(scheme: &ModulationScheme, n: u64, tol: f64) -> Result<ConstantsRow> {
    let c = norming_constants(scheme, n)?;
    let numeric = omega0_numeric(scheme, n, tol.max(evtper::oracle::MIN_OMEGA0_TOL))?.value;
    let liu = if n >= 2 {
        Some(omega0_model(&Omega0Model::liu_analytic(scheme), n)?.value)
    } else {
        None
    };
    let wu = match Omega0Model::wu_fitted(scheme) {
        Some(model) if n >= 2 => Some(omega0_model(&model, n)?.value),
        _ => None,
    };
    Ok(ConstantsRow {
        scheme: scheme.selector(),
        n,
        a_n: c.location,
        b_n: c.scale,
        omega0_numeric: numeric,
        omega0_liu: liu,
        omega0_wu: wu,
    })
}

pub fn write_constants_csv<W: Write>(row: &ConstantsRow, mut out: W) -> Result<()> {
    writeln!(out, "# generator=evtper-cli {VERSION}")?;
    writeln!(out, "# command=constants")?;
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record([
        "scheme",
        "n",
        "a_n",
        "b_n",
        "omega0_numeric",
        "omega0_liu",
        "omega0_wu",
    ])?;
    let opt = |v: Option<f64>| v.map(fmt_sig10).unwrap_or_default();
    wtr.write_record([
        row.scheme.clone(),
        row.n.to_string(),
        fmt_sig10(row.a_n),
        fmt_sig10(row.b_n),
        fmt_sig10(row.omega0_numeric),
        opt(row.omega0_liu),
        opt(row.omega0_wu),
    ])?;
    wtr.flush()?;
    Ok(())
}
