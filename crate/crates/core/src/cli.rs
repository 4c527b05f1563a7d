//! The `dedekind` command line: `eval` and `check-laws`.

use clap::{Parser, Subcommand};

use crate::expr::{compile, const_fold, parse, ExprError};
use crate::laws::{check_all, render_reports, LawConfig};
use crate::rational::Rat;
use crate::real::{render_interval, Budget};

#[derive(Debug, Parser)]
#[command(name = "dedekind", version, about = "Exact real arithmetic with guaranteed enclosures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression to a guaranteed enclosure.
    Eval {
        expr: String,
        /// Significant decimal digits to print.
        #[arg(long, default_value_t = 30)]
        digits: u32,
        /// Width target for the enclosure, as a constant expression (e.g. 1/1000 or 2^-60).
        #[arg(long, env = "DEDEKIND_EPS")]
        eps: Option<String>,
        /// Print the exact rational bounds "lo hi" instead of decimals.
        #[arg(long)]
        interval: bool,
        /// Refinement budget for sign witnesses and comparisons.
        #[arg(long, env = "DEDEKIND_BUDGET", default_value_t = Budget::DEFAULT.0)]
        budget: u32,
    },
    /// Check the exponent and logarithm laws on random rational cases.
    CheckLaws {
        /// Random cases per law
        #[arg(long, default_value_t = 100)]
        cases: u64,
        /// Seed for the case generator; equal seeds give identical reports
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tolerance for comparing the two sides of each law
        #[arg(long, env = "DEDEKIND_EPS", default_value = "2^-40")]
        eps: String,
        /// Refinement budget for sign witnesses and comparisons
        #[arg(long, env = "DEDEKIND_BUDGET", default_value_t = Budget::DEFAULT.0)]
        budget: u32,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Output {
        Output { code, stdout: String::new(), stderr }
    }
}

pub const EXIT_LAW_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Output::ok(text) } else { Output::fail(code, text) };
        }
    };
    match cli.command {
        Command::Eval { expr, digits, eps, interval, budget } => {
            cmd_eval(&expr, digits, eps.as_deref(), interval, Budget(budget))
        }
        Command::CheckLaws { cases, seed, eps, budget } => cmd_check_laws(cases, seed, &eps, Budget(budget)),
    }
}

/// A positive rational given as a constant expression.
fn parse_eps(text: &str) -> Result<Rat, String> {
    let node = parse(text).map_err(|e| format!("invalid --eps {text:?}: {e}"))?;
    match const_fold(&node).const_value() {
        Some(q) if q.is_positive() => Ok(q),
        _ => Err(format!("invalid --eps {text:?}: expected a positive rational constant")),
    }
}

fn cmd_eval(src: &str, digits: u32, eps: Option<&str>, interval: bool, budget: Budget) -> Output {
    let eps = match eps.map(parse_eps).transpose() {
        Ok(e) => e,
        Err(msg) => return Output::fail(EXIT_PARSE, format!("error: {msg}\n")),
    };
    let node = match parse(src) {
        Ok(n) => n,
        Err(e) => return Output::fail(EXIT_PARSE, format!("error: {e}\n")),
    };
    let compiled = match compile(&node, budget) {
        Ok(c) => c,
        Err(e) => return domain_failure(src, ExprError::Domain(e)),
    };
    let result = match (interval, eps) {
        (true, eps) => {
            let eps = eps.unwrap_or_else(|| decimal_eps(digits));
            compiled.approximate(&eps).map(|iv| format!("{} {}\n", iv.lo(), iv.hi()))
        }
        (false, Some(eps)) => compiled
            .approximate(&eps)
            .map(|iv| format!("{}\n", render_interval(&iv, digits))),
        (false, None) => compiled.render(digits).map(|s| format!("{s}\n")),
    };
    match result {
        Ok(text) => Output::ok(text),
        Err(e) => domain_failure(src, ExprError::Domain(e)),
    }
}

fn decimal_eps(digits: u32) -> Rat {
    let p = num_traits::pow(num_bigint::BigInt::from(10), digits as usize);
    Rat::new(1, p)
}

fn domain_failure(src: &str, e: ExprError) -> Output {
    let detail = match &e {
        ExprError::Domain(d) => {
            let text = src.get(d.span.start..d.span.end).unwrap_or("");
            format!("error: {e} (in `{text}`)\n")
        }
        ExprError::Syntax(_) => format!("error: {e}\n"),
    };
    Output::fail(EXIT_DOMAIN, detail)
}

fn cmd_check_laws(cases: u64, seed: u64, eps: &str, budget: Budget) -> Output {
    let eps = match parse_eps(eps) {
        Ok(e) => e,
        Err(msg) => return Output::fail(EXIT_PARSE, format!("error: {msg}\n")),
    };
    let reports = check_all(&LawConfig { cases, seed, eps, budget });
    let text = render_reports(&reports);
    let code = if reports.iter().all(|r| r.passed()) { 0 } else { EXIT_LAW_FAILED };
    Output { code, stdout: text, stderr: String::new() }
}
