use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mockforms::Case;
use momentcli::{apply_thread_cap, parse_n_range, Command, Format, RunConfig, OUT_DIR_ENV};

#[derive(Parser)]
#[command(name = "momentcli", version, about = "Exact rank/crank moments, their asymptotics and verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, global = true, default_value = "csv", value_parser = parse_format)]
    format: Format,
    /// Output file (overrides --out-dir)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory receiving <command>.<ext>; stdout when unset
    #[arg(long, global = true, env = OUT_DIR_ENV)]
    out_dir: Option<PathBuf>,
    /// Cap on worker threads
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Suppress progress lines on stderr
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Args)]
struct Target {
    /// Modulus T (odd, 1..=23)
    #[arg(long = "T")]
    t: Option<u32>,
    /// Moment order r
    #[arg(long)]
    r: Option<u32>,
    /// Comma list or lo..hi[:step]
    #[arg(long, value_parser = parse_n)]
    n: Option<NList>,
    /// Largest n of an exact table
    #[arg(long)]
    n_max: Option<usize>,
    /// Working precision in bits for the main term
    #[arg(long, default_value_t = asymp::THEOREM_A_PREC)]
    prec: u32,
}

#[derive(Subcommand)]
enum Sub {
    /// Exact moment table m_T^r(n)
    Moments(Target),
    /// Multiprecision main term and leading asymptotic
    Asymptotic(Target),
    /// Exact values against both asymptotic formulas
    Compare(Target),
    /// Randomized transformation-law suites
    Verify {
        /// One law; every law when absent
        #[arg(long, value_parser = parse_case)]
        case: Option<Case>,
        #[arg(long, default_value_t = momentcli::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = mockforms::DEFAULT_SEED)]
        seed: u64,
        /// Multiplier applied to every suite tolerance
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
    },
    /// Exact check of m_{T-2}^r(n) > m_T^r(n) over a range
    Scan(Target),
    /// 2·spt(n) = m_1^2(n) − m_3^2(n) against enumeration
    SptCheck(Target),
}

#[derive(Clone)]
struct NList(Vec<u64>);

fn parse_n(s: &str) -> Result<NList, String> {
    parse_n_range(s).map(NList).map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: momentcli::ConfigError| e.to_string())
}

fn parse_case(s: &str) -> Result<Case, String> {
    s.parse().map_err(|e: mockforms::MockError| e.to_string())
}

fn config(cli: Cli) -> RunConfig {
    let mut verify = None;
    let (command, target) = match cli.command {
        Sub::Moments(t) => (Command::Moments, Some(t)),
        Sub::Asymptotic(t) => (Command::Asymptotic, Some(t)),
        Sub::Compare(t) => (Command::Compare, Some(t)),
        Sub::Scan(t) => (Command::Scan, Some(t)),
        Sub::SptCheck(t) => (Command::SptCheck, Some(t)),
        Sub::Verify { case, trials, seed, tol_scale } => {
            verify = Some((case, trials, seed, tol_scale));
            (Command::Verify, None)
        }
    };
    let mut cfg = RunConfig::new(command);
    if let Some(t) = target {
        cfg.t_mod = t.t;
        cfg.r = t.r;
        cfg.n = t.n.map(|l| l.0);
        cfg.n_max = t.n_max;
        cfg.prec = t.prec;
    }
    if let Some((case, trials, seed, tol_scale)) = verify {
        cfg.case = case;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.tol_scale = tol_scale;
    }
    cfg.format = cli.common.format;
    cfg.out = cli.common.out;
    cfg.out_dir = cli.common.out_dir;
    cfg.threads = cli.common.threads;
    cfg.progress = !cli.common.quiet;
    cfg
}

fn main() -> ExitCode {
    let cfg = config(Cli::parse());
    apply_thread_cap(cfg.threads);
    match momentcli::run(&cfg) {
        Ok(outcome) => {
            if let Some(p) = &outcome.path {
                if cfg.progress {
                    eprintln!("wrote {}", p.display());
                }
            }
            if !outcome.passed {
                eprintln!("{}: assertion failed", cfg.command.name());
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("momentcli: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
