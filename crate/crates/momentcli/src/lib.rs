//! Command-line front end: exact moment tables, asymptotic formulas, comparison
//! runs, transformation-law suites, the Garvan inequality scan and the spt identity.
//!
//! [`run`] takes a validated [`RunConfig`], writes one artifact (CSV or JSON) and
//! reports whether every assertion of the invoked suite held.
//!
//! ```
//! use momentcli::{parse_n_range, Command, RunConfig};
//!
//! assert_eq!(parse_n_range("1..10:3").unwrap(), vec![1, 4, 7, 10]);
//! let mut cfg = RunConfig::new(Command::Moments);
//! cfg.t_mod = Some(1);
//! cfg.r = Some(2);
//! cfg.n_max = Some(4);
//! let out = momentcli::render(&cfg).unwrap();
//! assert!(out.passed);
//! // m_1^2(n) = 2n·p(n)
//! assert!(out.body.ends_with("1,2,4,40\n"));
//! ```

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::Context;
use mockforms::{verify_transformation_seeded, Case, Report, DEFAULT_SEED};
use num_bigint::BigInt;
use serde::Serialize;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "MOMENTCLI_OUT_DIR";
/// Trials per law when `--trials` is absent.
pub const DEFAULT_TRIALS: usize = 20;
/// Scan range when `--n` is absent.
pub const DEFAULT_SCAN_RANGE: (u64, u64) = (1, 1500);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Moments,
    Asymptotic,
    Compare,
    Verify,
    Scan,
    SptCheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Moments => "moments",
            Command::Asymptotic => "asymptotic",
            Command::Compare => "compare",
            Command::Verify => "verify",
            Command::Scan => "scan",
            Command::SptCheck => "spt-check",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(ConfigError(format!("--format must be csv or json, got {s:?}"))),
        }
    }
}

/// A rejected configuration; the message names the violated constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn reject<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub t_mod: Option<u32>,
    pub r: Option<u32>,
    /// Explicit list of `n` (see [`parse_n_range`]).
    pub n: Option<Vec<u64>>,
    pub n_max: Option<usize>,
    /// Restricts `verify` to one law; all laws otherwise.
    pub case: Option<Case>,
    pub trials: usize,
    pub seed: u64,
    /// Multiplies every suite tolerance.
    pub tol_scale: f64,
    pub format: Format,
    /// Output file; overrides `out_dir`.
    pub out: Option<PathBuf>,
    /// Directory for `<command>.<ext>` when `out` is absent; stdout when both are absent.
    pub out_dir: Option<PathBuf>,
    pub threads: Option<usize>,
    /// Working precision in bits for the multiprecision main term.
    pub prec: u32,
    pub progress: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            t_mod: None,
            r: None,
            n: None,
            n_max: None,
            case: None,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            tol_scale: 1.0,
            format: Format::Csv,
            out: None,
            out_dir: None,
            threads: None,
            prec: asymp::THEOREM_A_PREC,
            progress: false,
        }
    }

    fn need_t(&self) -> Result<u32, ConfigError> {
        let t = match self.t_mod {
            Some(t) => t,
            None => return reject(format!("{} requires --T", self.command.name())),
        };
        if t % 2 == 0 || !(1..=23).contains(&t) {
            return reject(format!("--T must be odd with 1 ≤ T ≤ 23, got {t}"));
        }
        Ok(t)
    }

    fn need_r(&self, even: bool) -> Result<u32, ConfigError> {
        let r = match self.r {
            Some(r) => r,
            None => return reject(format!("{} requires --r", self.command.name())),
        };
        if even && (r == 0 || r % 2 == 1) {
            return reject(format!("--r must be a positive even integer for {}, got {r}", self.command.name()));
        }
        Ok(r)
    }

    fn need_n(&self) -> Result<&[u64], ConfigError> {
        match &self.n {
            Some(ns) if ns.is_empty() => reject("--n must list at least one value"),
            Some(ns) if ns.contains(&0) => reject("--n values must be at least 1"),
            Some(ns) => Ok(ns),
            None => reject(format!("{} requires --n", self.command.name())),
        }
    }

    fn need_n_max(&self) -> Result<usize, ConfigError> {
        match self.n_max {
            Some(0) => reject("--n-max must be at least 1"),
            Some(n) => Ok(n),
            None => reject(format!("{} requires --n-max", self.command.name())),
        }
    }

    /// Checks every constraint the invoked command relies on.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.tol_scale > 0.0 && self.tol_scale.is_finite()) {
            return reject(format!("--tol-scale must be positive and finite, got {}", self.tol_scale));
        }
        if self.threads == Some(0) {
            return reject("--threads must be at least 1");
        }
        if self.prec < 64 {
            return reject(format!("--prec must be at least 64 bits, got {}", self.prec));
        }
        match self.command {
            Command::Moments => {
                self.need_t()?;
                self.need_r(false)?;
                if self.n.is_some() && self.n_max.is_some() {
                    return reject("moments takes either --n or --n-max, not both");
                }
                if self.n.is_some() {
                    self.need_n()?;
                } else {
                    self.need_n_max()?;
                }
            }
            Command::Asymptotic | Command::Compare => {
                self.need_t()?;
                self.need_r(true)?;
                self.need_n()?;
            }
            Command::Verify => {
                if self.trials == 0 {
                    return reject("--trials must be at least 1");
                }
            }
            Command::Scan => {
                if self.need_t()? < 3 {
                    return reject("scan compares T−2 with T, so --T must be at least 3");
                }
                self.need_r(true)?;
                if let Some(ns) = &self.n {
                    if ns.len() != 1 && !is_contiguous(ns) {
                        return reject("scan takes a contiguous range --n lo..hi");
                    }
                    self.need_n()?;
                }
            }
            Command::SptCheck => {
                let n = self.need_n_max()?;
                if n as u64 > qexact::SPT_ORACLE_LIMIT {
                    return reject(format!(
                        "--n-max must not exceed {} for spt-check (enumeration cost), got {n}",
                        qexact::SPT_ORACLE_LIMIT
                    ));
                }
            }
        }
        Ok(())
    }
}

fn is_contiguous(ns: &[u64]) -> bool {
    ns.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Parses `a,b,c` or `lo..hi[:step]` (inclusive) into a list of `n`.
pub fn parse_n_range(s: &str) -> Result<Vec<u64>, ConfigError> {
    let bad = |what: &str| ConfigError(format!("--n {what}: {s:?}"));
    if let Some((lo, rest)) = s.split_once("..") {
        let (hi, step) = match rest.split_once(':') {
            Some((hi, step)) => (hi, step.trim().parse::<u64>().map_err(|_| bad("has an invalid step"))?),
            None => (rest, 1),
        };
        let lo: u64 = lo.trim().parse().map_err(|_| bad("has an invalid lower bound"))?;
        let hi: u64 = hi.trim().parse().map_err(|_| bad("has an invalid upper bound"))?;
        if step == 0 {
            return Err(bad("needs a positive step"));
        }
        if lo > hi {
            return Err(bad("has lower bound above upper bound"));
        }
        return Ok((lo..=hi).step_by(step as usize).collect());
    }
    s.split(',')
        .map(|v| v.trim().parse::<u64>().map_err(|_| bad("is not a comma list of integers")))
        .collect()
}

/// A rendered artifact and the suite verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct Rendered {
    pub body: String,
    pub passed: bool,
}

/// Result of [`run`]: the verdict and where the artifact went.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub passed: bool,
    pub path: Option<PathBuf>,
}

impl RunOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

/// Failure of [`run`]; invalid configurations map to exit status 2.
#[derive(Debug)]
pub enum RunError {
    Config(ConfigError),
    Compute(anyhow::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => 2,
            RunError::Compute(_) => 1,
        }
    }
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Config(e) => write!(f, "invalid configuration: {e}"),
            RunError::Compute(e) => write!(f, "{e:#}"),
        }
    }
}

impl std::error::Error for RunError {}

impl From<ConfigError> for RunError {
    fn from(e: ConfigError) -> Self {
        RunError::Config(e)
    }
}

impl From<anyhow::Error> for RunError {
    fn from(e: anyhow::Error) -> Self {
        RunError::Compute(e)
    }
}

/// Validates, computes, and writes the artifact to `out`, `out_dir/<command>.<ext>` or stdout.
pub fn run(config: &RunConfig) -> Result<RunOutcome, RunError> {
    let rendered = render(config)?;
    let path = config
        .out
        .clone()
        .or_else(|| config.out_dir.as_ref().map(|d| d.join(format!("{}.{}", config.command.name(), config.format.extension()))));
    match &path {
        Some(p) => write_file(p, &rendered.body).map_err(RunError::Compute)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(rendered.body.as_bytes())
                .and_then(|_| stdout.flush())
                .context("writing to stdout")?;
        }
    }
    Ok(RunOutcome { passed: rendered.passed, path })
}

fn write_file(path: &Path, body: &str) -> anyhow::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(path, body).with_context(|| format!("writing {}", path.display()))
}

/// Validates and computes without touching the filesystem.
pub fn render(config: &RunConfig) -> Result<Rendered, RunError> {
    config.validate()?;
    let progress = |msg: String| {
        if config.progress {
            eprintln!("[{}] {msg}", config.command.name());
        }
    };
    let rendered = match config.command {
        Command::Moments => moments(config, progress)?,
        Command::Asymptotic => asymptotic(config, progress)?,
        Command::Compare => compare(config, progress)?,
        Command::Verify => verify(config, progress)?,
        Command::Scan => scan(config, progress)?,
        Command::SptCheck => spt_check(config, progress)?,
    };
    Ok(rendered)
}

/// Floats in CSV carry 17 significant digits.
pub fn float17(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_body(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| anyhow::anyhow!("{e}"))?)?)
}

fn json_body<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct MomentRow {
    #[serde(rename = "T")]
    t_mod: u32,
    r: u32,
    n: u64,
    moment: String,
}

fn moments(c: &RunConfig, progress: impl Fn(String)) -> anyhow::Result<Rendered> {
    let (t, r) = (c.t_mod.unwrap_or(1), c.r.unwrap_or(0));
    let ns: Vec<u64> = match &c.n {
        Some(ns) => ns.clone(),
        None => (0..=c.n_max.unwrap_or(0) as u64).collect(),
    };
    let n_max = ns.iter().copied().max().unwrap_or(0) as usize;
    progress(format!("exact table T={t} r={r} to n={n_max}"));
    let table = qexact::moment_table(t as i64, r, n_max)?;
    let rows: Vec<MomentRow> = ns
        .iter()
        .map(|&n| MomentRow { t_mod: t, r, n, moment: table.value(n as usize).to_string() })
        .collect();
    let body = match c.format {
        Format::Csv => csv_body(
            &["T", "r", "n", "moment"],
            rows.iter().map(|m| vec![m.t_mod.to_string(), m.r.to_string(), m.n.to_string(), m.moment.clone()]),
        )?,
        Format::Json => json_body(&rows)?,
    };
    Ok(Rendered { body, passed: true })
}

#[derive(Serialize)]
struct AsymptoticRow {
    #[serde(rename = "T")]
    t_mod: u32,
    r: u32,
    n: u64,
    mu_part: f64,
    mordell_part: f64,
    #[serde(rename = "thmA_main")]
    thm_a_main: f64,
    #[serde(rename = "thmB_leading")]
    thm_b_leading: f64,
    dropped_terms: usize,
}

fn asymptotic(c: &RunConfig, progress: impl Fn(String)) -> anyhow::Result<Rendered> {
    let (t, r) = (c.t_mod.unwrap_or(1), c.r.unwrap_or(2));
    let mut rows = Vec::new();
    for &n in c.n.as_deref().unwrap_or(&[]) {
        progress(format!("main term T={t} r={r} n={n}"));
        let q = asymp::AsymptoticQuery::new(t, r, n)?;
        let b = asymp::theorem_a_main(&q, c.prec)?;
        rows.push(AsymptoticRow {
            t_mod: t,
            r,
            n,
            mu_part: b.mu_part.to_f64(),
            mordell_part: b.mordell_part.to_f64(),
            thm_a_main: b.total_f64(),
            thm_b_leading: asymp::theorem_b_leading(r, n),
            dropped_terms: b.dropped_terms,
        });
    }
    let body = match c.format {
        Format::Csv => csv_body(
            &["T", "r", "n", "mu_part", "mordell_part", "thmA_main", "thmB_leading", "dropped_terms"],
            rows.iter().map(|a| {
                vec![
                    a.t_mod.to_string(),
                    a.r.to_string(),
                    a.n.to_string(),
                    float17(a.mu_part),
                    float17(a.mordell_part),
                    float17(a.thm_a_main),
                    float17(a.thm_b_leading),
                    a.dropped_terms.to_string(),
                ]
            }),
        )?,
        Format::Json => json_body(&rows)?,
    };
    Ok(Rendered { body, passed: true })
}

fn compare(c: &RunConfig, progress: impl Fn(String)) -> anyhow::Result<Rendered> {
    let (t, r) = (c.t_mod.unwrap_or(1), c.r.unwrap_or(2));
    let ns = c.n.as_deref().unwrap_or(&[]);
    progress(format!("comparing T={t} r={r} at {} values of n", ns.len()));
    let rows = asymp::comparison_rows(t, r, ns, c.prec)?;
    let body = match c.format {
        Format::Csv => csv_body(
            &["T", "r", "n", "exact", "thmA_main", "thmB_leading", "rel_err_A", "rel_err_B"],
            rows.iter().map(|row| {
                vec![
                    row.t_mod.to_string(),
                    row.r.to_string(),
                    row.n.to_string(),
                    row.exact.clone(),
                    float17(row.thm_a_main),
                    float17(row.thm_b_leading),
                    float17(row.rel_err_a),
                    float17(row.rel_err_b),
                ]
            }),
        )?,
        Format::Json => json_body(&rows)?,
    };
    Ok(Rendered { body, passed: true })
}

fn verify(c: &RunConfig, progress: impl Fn(String)) -> anyhow::Result<Rendered> {
    let cases: Vec<Case> = match c.case {
        Some(case) => vec![case],
        None => Case::ALL.to_vec(),
    };
    let reports: Vec<Report> = cases
        .iter()
        .map(|&case| {
            progress(format!("{} with {} trials", case.name(), c.trials));
            verify_transformation_seeded(case, c.trials, case.default_tolerance() * c.tol_scale, c.seed)
        })
        .collect();
    let passed = reports.iter().all(|r| r.passed);
    let body = match c.format {
        Format::Csv => csv_body(
            &["case", "seed", "trials", "checks", "tolerance", "max_rel_err", "passed"],
            reports.iter().map(|r| {
                vec![
                    r.case.name().to_string(),
                    r.seed.to_string(),
                    r.trials.to_string(),
                    r.checks.to_string(),
                    float17(r.tolerance),
                    float17(r.max_rel_err),
                    r.passed.to_string(),
                ]
            }),
        )?,
        Format::Json => json_body(&reports)?,
    };
    Ok(Rendered { body, passed })
}

fn scan(c: &RunConfig, progress: impl Fn(String)) -> anyhow::Result<Rendered> {
    let (t, r) = (c.t_mod.unwrap_or(3), c.r.unwrap_or(2));
    let (lo, hi) = match c.n.as_deref() {
        Some(ns) if !ns.is_empty() => (ns[0], ns[ns.len() - 1]),
        _ => DEFAULT_SCAN_RANGE,
    };
    progress(format!("m_{}^{r} > m_{t}^{r} on [{lo}, {hi}]", t - 2));
    let report = asymp::garvan_scan(t, r, lo as usize, hi as usize)?;
    let passed = report.n0.is_some();
    let body = match c.format {
        Format::Csv => csv_body(
            &["T", "r", "n_lo", "n_hi", "n0", "violations"],
            [vec![
                report.t_mod.to_string(),
                report.r.to_string(),
                report.n_lo.to_string(),
                report.n_hi.to_string(),
                report.n0.map_or(String::new(), |v| v.to_string()),
                report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
            ]],
        )?,
        Format::Json => json_body(&report)?,
    };
    Ok(Rendered { body, passed })
}

#[derive(Serialize)]
struct SptRow {
    n: u64,
    spt: String,
    m1_2: String,
    m3_2: String,
    holds: bool,
}

fn spt_check(c: &RunConfig, progress: impl Fn(String)) -> anyhow::Result<Rendered> {
    let n_max = c.n_max.unwrap_or(1);
    progress(format!("2·spt(n) = m_1^2(n) − m_3^2(n) for n ≤ {n_max}"));
    let crank = qexact::moment_table(1, 2, n_max)?;
    let rank = qexact::moment_table(3, 2, n_max)?;
    let rows = (1..=n_max)
        .map(|n| {
            let spt = qexact::spt_oracle(n as u64)?;
            let (m1, m3) = (crank.value(n), rank.value(n));
            Ok(SptRow {
                n: n as u64,
                holds: BigInt::from(2) * &spt == m1 - m3,
                spt: spt.to_string(),
                m1_2: m1.to_string(),
                m3_2: m3.to_string(),
            })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let passed = rows.iter().all(|r| r.holds);
    let body = match c.format {
        Format::Csv => csv_body(
            &["n", "spt", "m1_2", "m3_2", "holds"],
            rows.iter().map(|r| vec![r.n.to_string(), r.spt.clone(), r.m1_2.clone(), r.m3_2.clone(), r.holds.to_string()]),
        )?,
        Format::Json => json_body(&rows)?,
    };
    Ok(Rendered { body, passed })
}

/// Caps the global rayon pool; a no-op if the pool is already built.
pub fn apply_thread_cap(threads: Option<usize>) {
    if let Some(n) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}
