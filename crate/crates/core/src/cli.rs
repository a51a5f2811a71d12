//! The `copula-ot` command line.
//!
//! Every subcommand builds a deterministic report (JSON, CSV or an aligned
//! plain table) and an exit code. [`run`] does all the work and returns both,
//! so the binary only prints them.
//!
//! Exit codes: 0 ok, 1 a cross-check failed, 2 input error, 3 missing
//! hypothesis flag, 4 capacity guard exceeded.

use std::fmt::Write as _;
use std::fs::File;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::copula::{default_resolution, validate_copula, CopulaFn};
use crate::dist_core::Distribution1D;
use crate::error::Error;
use crate::oracle::{
    self, DiscreteCoupling, OracleLimits, PointMeasure, TransportInstance, MAX_ENUMERATION_SIDE,
};
use crate::wasserstein::{self, DistanceReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;

/// Default relative tolerance for disagreements between exact methods.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Environment variable overriding [`DEFAULT_TOLERANCE`].
pub const TOLERANCE_ENV: &str = "COPULA_OT_TOLERANCE";

const SHARED_COPULA_HYPOTHESIS: &str = "distnd assumes both samples are drawn from joint laws that share one copula \
(the same dependence structure, possibly different margins). Under that hypothesis W_p^p with the l_p ground \
norm is the sum of the per-coordinate W_p^p. It cannot be verified from the margins; pass \
--assume-shared-copula to accept it.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Parser)]
#[command(
    name = "copula-ot",
    version,
    about = "Wasserstein distances through the comonotonicity copula"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: GlobalOptions,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOptions {
    /// Wasserstein order p ≥ 1
    #[arg(long = "p", global = true, default_value_t = 1.0)]
    pub p: f64,

    /// Ground-norm order q ≥ 1 on R^d (defaults to p)
    #[arg(long = "q", global = true)]
    pub q: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    /// Largest number of atoms per side handed to the exact oracle
    #[arg(long = "oracle-max-atoms", global = true, default_value_t = 64)]
    pub oracle_max_atoms: usize,

    /// Relative tolerance for method disagreement (overrides COPULA_OT_TOLERANCE)
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// W_p between two one-dimensional inputs by every applicable method
    Dist1d { first: String, second: String },
    /// W_p on R^d for two multi-column sample files under the shared-copula hypothesis
    Distnd {
        first: String,
        second: String,
        #[arg(long = "assume-shared-copula")]
        assume_shared_copula: bool,
    },
    /// Grid validation of a built-in copula (M, W or Pi)
    CheckCopula {
        label: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long)]
        resolution: Option<usize>,
    },
    /// Cost of every extreme coupling of two small inputs against the comonotone plan
    OracleCompare { first: String, second: String },
    /// Tail terms x^r (1 - F(x)) and x^r F(-x) on a grid
    DiagnoseTails {
        input: String,
        #[arg(long = "r", default_value_t = 1.0)]
        r: f64,
        /// Comma-separated increasing positive grid, e.g. 1,2,5
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<f64>,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity(_) => EXIT_CAPACITY,
            Error::Precondition(_) | Error::Domain(_) | Error::Construction(_) => EXIT_INPUT,
            _ => EXIT_CHECK_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Tabular view of a report, used by the csv and plain formats.
struct Report {
    command: &'static str,
    data: Value,
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    notices: Vec<String>,
    code: i32,
}

/// Runs one invocation. `tolerance_env` is the value of [`TOLERANCE_ENV`], if set.
pub fn run<I, T>(args: I, tolerance_env: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&config, tolerance_env) {
        Ok(report) => {
            let stderr = report
                .notices
                .iter()
                .map(|n| format!("notice: {n}\n"))
                .collect();
            Outcome {
                code: report.code,
                stdout: render(&report, config.options.format),
                stderr,
            }
        }
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn execute(config: &RunConfig, tolerance_env: Option<&str>) -> Result<Report, Failure> {
    let opts = &config.options;
    if !(opts.p >= 1.0 && opts.p.is_finite()) {
        return Err(Failure::input(format!(
            "--p must be a finite real ≥ 1, got {}",
            opts.p
        )));
    }
    let q = opts.q.unwrap_or(opts.p);
    if !(q >= 1.0) {
        return Err(Failure::input(format!("--q must be ≥ 1, got {q}")));
    }
    let tolerance = match (opts.tolerance, tolerance_env) {
        (Some(t), _) => t,
        (None, Some(s)) => s
            .trim()
            .parse::<f64>()
            .map_err(|_| Failure::input(format!("{TOLERANCE_ENV}={s:?} is not a number")))?,
        (None, None) => DEFAULT_TOLERANCE,
    };
    if !(tolerance >= 0.0 && tolerance.is_finite()) {
        return Err(Failure::input(format!(
            "tolerance must be a nonnegative real, got {tolerance}"
        )));
    }
    let limits = OracleLimits {
        max_rows: opts.oracle_max_atoms,
        max_cols: opts.oracle_max_atoms,
    };

    match &config.command {
        Command::Dist1d { first, second } => cmd_dist1d(first, second, opts.p, tolerance, limits),
        Command::Distnd {
            first,
            second,
            assume_shared_copula,
        } => cmd_distnd(
            first,
            second,
            opts.p,
            q,
            *assume_shared_copula,
            tolerance,
            limits,
        ),
        Command::CheckCopula {
            label,
            dim,
            resolution,
        } => cmd_check_copula(label, *dim, *resolution),
        Command::OracleCompare { first, second } => {
            cmd_oracle_compare(first, second, opts.p, tolerance, limits)
        }
        Command::DiagnoseTails { input, r, grid } => cmd_diagnose_tails(input, *r, grid),
    }
}

fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let doc = json!({
                "command": report.command,
                "data": report.data,
                "notices": report.notices,
                "metadata": { "tool": "copula-ot", "version": env!("CARGO_PKG_VERSION") },
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&report.headers).expect("in-memory write");
            for row in &report.rows {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
        OutputFormat::Plain => {
            let mut widths: Vec<usize> = report.headers.iter().map(|h| h.len()).collect();
            for row in &report.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let mut out = String::new();
            let line = |cells: Vec<&str>, out: &mut String| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                let _ = writeln!(out, "{}", padded.join("  ").trim_end());
            };
            line(report.headers.clone(), &mut out);
            for row in &report.rows {
                line(row.iter().map(String::as_str).collect(), &mut out);
            }
            for n in &report.notices {
                let _ = writeln!(out, "# {n}");
            }
            out
        }
    }
}

fn num(x: f64) -> String {
    format!("{x}")
}

/// Numeric CSV: comma separated, '.' decimals, optional header detected by a
/// non-numeric first row. Every row must have the same width.
pub fn read_numeric_csv(path: &Path) -> Result<Vec<Vec<f64>>, Error> {
    let file =
        File::open(path).map_err(|e| Error::Construction(format!("{}: {e}", path.display())))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(file);
    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Construction(format!("{}: {e}", path.display())))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(values) => rows.push(values),
            Err(_) if line == 0 => continue,
            Err(_) => {
                return Err(Error::Construction(format!(
                    "{}: row {} is not numeric",
                    path.display(),
                    line + 1
                )))
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::Construction(format!(
            "{}: no data rows",
            path.display()
        )));
    }
    Ok(rows)
}

/// Inline specs: `normal:MEAN,SD`, `uniform:A,B`, `exponential:RATE`,
/// `dirac:X`, `atoms:X1,X2,...` (equal weights).
pub fn parse_inline_spec(spec: &str) -> Option<Result<Distribution1D, Error>> {
    let (name, rest) = spec.split_once(':')?;
    let params: Result<Vec<f64>, _> = rest.split(',').map(|s| s.trim().parse::<f64>()).collect();
    let Ok(params) = params else {
        return Some(Err(Error::Construction(format!(
            "bad parameters in {spec:?}"
        ))));
    };
    let arity = |n: usize| -> Result<(), Error> {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::Construction(format!(
                "{name} takes {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    Some(match name {
        "normal" => arity(2).and_then(|_| Distribution1D::normal(params[0], params[1])),
        "uniform" => arity(2).and_then(|_| Distribution1D::uniform(params[0], params[1])),
        "exponential" => arity(1).and_then(|_| Distribution1D::exponential(params[0])),
        "dirac" => arity(1).and_then(|_| Distribution1D::dirac(params[0])),
        "atoms" => Distribution1D::from_samples(&params),
        other => Err(Error::Construction(format!(
            "unknown distribution {other:?}"
        ))),
    })
}

/// A one-column sample file, or an inline spec when no such file exists.
fn load_1d(input: &str) -> Result<Distribution1D, Failure> {
    let path = PathBuf::from(input);
    if !path.exists() {
        if let Some(parsed) = parse_inline_spec(input) {
            return parsed.map_err(Failure::from);
        }
        return Err(Failure::input(format!("{input}: no such file")));
    }
    let rows = read_numeric_csv(&path)?;
    if rows.iter().any(|r| r.len() != 1) {
        return Err(Failure::input(format!(
            "{input}: expected one value per line"
        )));
    }
    let samples: Vec<f64> = rows.into_iter().map(|r| r[0]).collect();
    Ok(Distribution1D::from_samples(&samples)?)
}

fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn method_entry(r: &DistanceReport) -> Value {
    json!({ "w_p": r.value, "w_p_pow_p": r.value_pth_power, "error_bound": r.error_bound })
}

fn cmd_dist1d(
    first: &str,
    second: &str,
    p: f64,
    tolerance: f64,
    limits: OracleLimits,
) -> Result<Report, Failure> {
    let f = load_1d(first)?;
    let g = load_1d(second)?;
    let mut notices = Vec::new();

    let primary = wasserstein::wasserstein_1d(&f, &g, p)?;
    let mut methods = vec![("quantile_integral", primary.clone())];
    if p == 1.0 {
        methods.push(("cdf_area", wasserstein::w1_cdf_area(&f, &g)?));
    }
    match wasserstein::oracle_distance_1d(&f, &g, p, limits) {
        Ok(r) => methods.push(("oracle", r)),
        Err(Error::Capacity(msg)) => notices.push(format!("oracle omitted: {msg}")),
        Err(Error::Domain(msg)) => notices.push(format!("oracle omitted: {msg}")),
        Err(e) => return Err(e.into()),
    }

    // Disagreement is measured on W_p^p, relative to the larger value.
    let mut disagreement: f64 = 0.0;
    let mut within = true;
    for (_, r) in &methods[1..] {
        let gap = relative_gap(r.value_pth_power, primary.value_pth_power);
        disagreement = disagreement.max(gap);
        let allowed = tolerance
            + (r.error_bound + primary.error_bound)
                / primary.value_pth_power.abs().max(f64::MIN_POSITIVE);
        if gap > allowed {
            within = false;
        }
    }
    if !within {
        notices.push(format!(
            "methods disagree by {disagreement:e} (tolerance {tolerance:e})"
        ));
    }

    let mut breakdown = serde_json::Map::new();
    for (name, r) in &methods {
        breakdown.insert((*name).to_string(), method_entry(r));
    }
    let data = json!({
        "p": p,
        "w_p": primary.value,
        "w_p_pow_p": primary.value_pth_power,
        "methods": Value::Object(breakdown),
        "max_method_disagreement": disagreement,
        "tolerance": tolerance,
        "within_tolerance": within,
    });
    let rows = methods
        .iter()
        .map(|(name, r)| {
            vec![
                name.to_string(),
                num(r.value),
                num(r.value_pth_power),
                num(r.error_bound),
            ]
        })
        .collect();
    Ok(Report {
        command: "dist1d",
        data,
        headers: vec!["method", "w_p", "w_p_pow_p", "error_bound"],
        rows,
        notices,
        code: if within { EXIT_OK } else { EXIT_CHECK_FAILED },
    })
}

fn load_nd(input: &str) -> Result<Vec<Vec<f64>>, Failure> {
    let path = PathBuf::from(input);
    if !path.exists() {
        return Err(Failure::input(format!("{input}: no such file")));
    }
    let rows = read_numeric_csv(&path)?;
    Ok(rows)
}

fn columns(rows: &[Vec<f64>]) -> Result<Vec<Distribution1D>, Failure> {
    let d = rows[0].len();
    (0..d)
        .map(|k| {
            let col: Vec<f64> = rows.iter().map(|r| r[k]).collect();
            Distribution1D::from_samples(&col).map_err(Failure::from)
        })
        .collect()
}

fn empirical_points(rows: &[Vec<f64>]) -> Result<PointMeasure, Error> {
    let w = 1.0 / rows.len() as f64;
    let mut weights = vec![w; rows.len()];
    // Exact total so the measure passes the unit-mass check for any n.
    let rest: f64 = weights[1..].iter().sum();
    weights[0] = 1.0 - rest;
    PointMeasure::new(rows.to_vec(), weights)
}

fn cmd_distnd(
    first: &str,
    second: &str,
    p: f64,
    q: f64,
    assume_shared_copula: bool,
    tolerance: f64,
    limits: OracleLimits,
) -> Result<Report, Failure> {
    if !assume_shared_copula {
        return Err(Failure {
            code: EXIT_HYPOTHESIS,
            message: SHARED_COPULA_HYPOTHESIS.to_string(),
        });
    }
    let a = load_nd(first)?;
    let b = load_nd(second)?;
    let (da, db) = (a[0].len(), b[0].len());
    if da != db {
        return Err(Failure::input(format!(
            "{first} has {da} columns but {second} has {db}"
        )));
    }
    let fm = columns(&a)?;
    let gm = columns(&b)?;
    let report = wasserstein::wasserstein_shared_copula(&fm, &gm, p, q)?;
    let mut notices = Vec::new();

    let mut oracle_value = None;
    let mut consistent = true;
    let instance = empirical_points(&a)
        .and_then(|pa| empirical_points(&b).map(|pb| (pa, pb)))
        .and_then(|(pa, pb)| TransportInstance::new(pa, pb, p, q));
    match instance.and_then(|inst| oracle::solve_exact_with(&inst, limits)) {
        Ok(sol) => {
            oracle_value = Some(sol.value);
            match report.bracket {
                None => {
                    let gap = relative_gap(sol.value, report.value_pth_power);
                    if gap > tolerance {
                        consistent = false;
                        notices.push(format!(
                            "oracle on the sample rows differs from the coordinate sum by {gap:e}; \
                             the samples do not share a copula"
                        ));
                    }
                }
                Some(br) => {
                    let slack = tolerance * br.upper.abs().max(1.0);
                    if sol.value < br.lower - slack || sol.value > br.upper + slack {
                        consistent = false;
                        notices.push(
                            "oracle value falls outside the norm-equivalence bracket".to_string(),
                        );
                    }
                }
            }
        }
        Err(Error::Capacity(msg)) => notices.push(format!("oracle omitted: {msg}")),
        Err(e) => return Err(e.into()),
    }

    let data = json!({
        "p": p,
        "q": q,
        "dim": da,
        "assume_shared_copula": true,
        "per_coordinate_w_p_pow_p": report.components,
        "w_p_pow_p": report.value_pth_power,
        "w_p": report.value,
        "exact": report.exact,
        "bracket": report.bracket,
        "oracle_w_pq_pow_p": oracle_value,
        "consistent": consistent,
    });
    let mut rows: Vec<Vec<String>> = report
        .components
        .iter()
        .enumerate()
        .map(|(k, c)| vec![format!("coordinate_{}", k + 1), num(*c)])
        .collect();
    rows.push(vec!["total_w_p_pow_p".into(), num(report.value_pth_power)]);
    rows.push(vec!["total_w_p".into(), num(report.value)]);
    if let Some(br) = report.bracket {
        rows.push(vec!["bracket_lower".into(), num(br.lower)]);
        rows.push(vec!["bracket_upper".into(), num(br.upper)]);
    }
    if let Some(v) = oracle_value {
        rows.push(vec!["oracle".into(), num(v)]);
    }
    Ok(Report {
        command: "distnd",
        data,
        headers: vec!["quantity", "value"],
        rows,
        notices,
        code: if consistent {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
    })
}

fn cmd_check_copula(label: &str, dim: usize, resolution: Option<usize>) -> Result<Report, Failure> {
    let c = CopulaFn::builtin(label, dim).map_err(|e| Failure::input(e.to_string()))?;
    let resolution = resolution.unwrap_or_else(|| default_resolution(dim));
    let report = validate_copula(&c, resolution)?;
    let rows = report
        .checks()
        .iter()
        .map(|chk| {
            let axiom = serde_json::to_value(chk.axiom).expect("enum serializes");
            let witness = chk
                .witness
                .as_ref()
                .map(|w| match &w.upper {
                    Some(hi) => format!("{:?}..{:?} = {}", w.lower, hi, w.value),
                    None => format!("{:?} = {}", w.lower, w.value),
                })
                .unwrap_or_default();
            vec![
                axiom.as_str().unwrap_or_default().to_string(),
                if chk.passed {
                    "pass".into()
                } else {
                    "fail".into()
                },
                chk.violations.to_string(),
                witness,
            ]
        })
        .collect();
    let data = json!({ "passed": report.passed(), "report": report });
    Ok(Report {
        command: "check-copula",
        data,
        headers: vec!["axiom", "result", "violations", "witness"],
        rows,
        notices: Vec::new(),
        code: EXIT_OK,
    })
}

fn cmd_oracle_compare(
    first: &str,
    second: &str,
    p: f64,
    tolerance: f64,
    limits: OracleLimits,
) -> Result<Report, Failure> {
    let f = load_1d(first)?;
    let g = load_1d(second)?;
    let (Some(a), Some(b)) = (f.as_discrete(), g.as_discrete()) else {
        return Err(Failure::input(
            "oracle-compare needs sample files or discrete specs",
        ));
    };
    if a.len() > MAX_ENUMERATION_SIDE || b.len() > MAX_ENUMERATION_SIDE {
        return Err(Failure {
            code: EXIT_CAPACITY,
            message: format!(
                "vertex enumeration is limited to {MAX_ENUMERATION_SIDE} atoms per side, got {}×{}",
                a.len(),
                b.len()
            ),
        });
    }
    let (pa, pb) = (
        PointMeasure::from_discrete(a),
        PointMeasure::from_discrete(b),
    );
    let vertices = oracle::enumerate_extreme_couplings(&pa, &pb)?;
    let comonotone = oracle::monotone_plan_1d(a, b);
    let functional = |c: &DiscreteCoupling| -> Result<f64, Failure> {
        if p > 1.0 {
            Ok(wasserstein::dall_aglio_functional(c, p)?)
        } else {
            Ok(c.cost(p, p))
        }
    };
    let m_value = functional(&comonotone)?;
    let exact = oracle::solve_exact_with(&TransportInstance::from_1d(a, b, p)?, limits)?;

    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut min_gap = f64::INFINITY;
    for (k, c) in vertices.iter().enumerate() {
        let value = functional(c)?;
        let is_comonotone = c
            .mass()
            .iter()
            .flatten()
            .zip(comonotone.mass().iter().flatten())
            .all(|(x, y)| (x - y).abs() <= 1e-12);
        min_gap = min_gap.min(value - m_value);
        entries.push(
            json!({ "index": k, "value": value, "comonotone": is_comonotone, "mass": c.mass() }),
        );
        rows.push(vec![
            k.to_string(),
            num(value),
            if is_comonotone {
                "*".into()
            } else {
                String::new()
            },
        ]);
    }
    let scale = m_value.abs().max(1.0);
    let minimal = min_gap >= -wasserstein::MINIMALITY_TOL * scale;
    let oracle_agrees = (exact.value - m_value).abs() <= tolerance * scale;
    let mut notices = Vec::new();
    if !minimal {
        notices.push(format!(
            "an extreme coupling beats the comonotone plan by {:e}",
            -min_gap
        ));
    }
    if !oracle_agrees {
        notices.push(format!(
            "oracle value {} differs from the comonotone value {m_value}",
            exact.value
        ));
    }
    let data = json!({
        "p": p,
        "comonotone_value": m_value,
        "oracle_value": exact.value,
        "couplings": entries,
        "min_gap": min_gap,
        "comonotone_minimal": minimal,
    });
    Ok(Report {
        command: "oracle-compare",
        data,
        headers: vec!["coupling", "value", "comonotone"],
        rows,
        notices,
        code: if minimal && oracle_agrees {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
    })
}

fn cmd_diagnose_tails(input: &str, r: f64, grid: &[f64]) -> Result<Report, Failure> {
    let d = load_1d(input)?;
    let rows = d.tail_decay_diagnostic(r, grid)?;
    let table = rows
        .iter()
        .map(|t| vec![num(t.x), num(t.upper), num(t.lower)])
        .collect();
    Ok(Report {
        command: "diagnose-tails",
        data: json!({ "r": r, "rows": rows }),
        headers: vec!["x", "upper", "lower"],
        rows: table,
        notices: Vec::new(),
        code: EXIT_OK,
    })
}
