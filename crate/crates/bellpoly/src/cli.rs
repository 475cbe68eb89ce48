//! The `bellpoly` command-line front end.
//!
//! Four subcommands: `table` (family rows), `eval` (exact point values),
//! `verify` (identity suite), `reduce` (cross-route reduction checks).
//!
//! Exit codes: 0 success, 1 internal error, 2 invalid parameters (including
//! generating functions with a pole at t = 0), 3 verification failure.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::families::{build_table, FamilyKind, FamilySpec};
use crate::identities::{
    run_suite, verify_reduction, Grid, ReductionCheck, ReductionReport, Status, TheoremId,
    VerifyReport,
};
use crate::rational::Rational;
use crate::render::{render_eval, render_reductions, render_table, render_verify, OutputFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_BAD_PARAMS: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "bellpoly",
    about = "Exact Bell/Apostol-type polynomial families and identity verification",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name (e.g. bell-number, bell-apostol, apostol-bernoulli).
    #[arg(long)]
    family: String,
    /// Order parameter of the family.
    #[arg(long)]
    alpha: Option<u32>,
    /// Exact rational lambda, e.g. "3/2" or "-1".
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Integer exponent of the 2^eta factor.
    #[arg(long, allow_hyphen_values = true, value_parser = clap::value_parser!(i64).range(ETA_RANGE))]
    eta: Option<i64>,
    /// Nonnegative exponent of the t^delta factor.
    #[arg(long)]
    delta: Option<u32>,
}

// Enough for any sane exponent; keeps 2^eta from exhausting memory on typos.
const ETA_RANGE: std::ops::RangeInclusive<i64> = -4096..=4096;

#[derive(Subcommand)]
enum Command {
    /// Print rows of a polynomial family.
    Table {
        #[command(flatten)]
        family: FamilyArgs,
        /// Inclusive row range "a..b" (a single "n" is shorthand for "n..n").
        #[arg(long)]
        n: String,
        /// Output format: text, json, csv, latex.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Evaluate one family member at an exact rational point.
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        /// Row index n.
        #[arg(long)]
        n: usize,
        /// Value for X1 (default 0).
        #[arg(long, allow_hyphen_values = true)]
        x1: Option<String>,
        /// Value for X2 (default 0).
        #[arg(long, allow_hyphen_values = true)]
        x2: Option<String>,
        /// Output format: text, json, csv, latex.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Verify identities over a parameter grid.
    Verify {
        /// Theorem id (3.3, 3.3-printed, 3.4, 3.5, 3.6, 4.1, 4.2, 4.4, 4.5,
        /// 4.7, 4.7-printed, 5.1, 5.3), "reductions", or "all".
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Restrict the alpha grid (comma-separated list).
        #[arg(long)]
        alpha: Option<String>,
        /// Restrict the second alpha of theorem 4.1 (comma-separated list).
        #[arg(long)]
        alpha2: Option<String>,
        /// Restrict the lambda grid (comma-separated exact rationals).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Restrict the eta grid (comma-separated integers).
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
        /// Restrict the delta grid (comma-separated nonnegative integers).
        #[arg(long)]
        delta: Option<String>,
        /// Verify each identity for all n <= nmax.
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        /// Output format: text, json, csv, latex.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Cross-check the named reduction between two independent routes.
    Reduce {
        /// One of: bernoulli, euler, genocchi, remark2, remark3, all.
        #[arg(long)]
        check: String,
        /// Check each reduction for all n <= nmax.
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        /// Output format: text, json, csv, latex.
        #[arg(long, default_value = "text")]
        format: String,
    },
}

/// Entry point used by `main`: real process arguments and streams.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI against explicit arguments and output streams; returns the
/// process exit code. Kept stream-generic so tests can capture both outputs.
pub fn run(
    args: impl IntoIterator<Item = String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_BAD_PARAMS
                }
            };
        }
    };

    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(CmdError::BadParams(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_BAD_PARAMS
        }
        Err(CmdError::Io) => EXIT_INTERNAL,
    }
}

enum CmdError {
    BadParams(String),
    Io,
}

impl From<std::io::Error> for CmdError {
    fn from(_: std::io::Error) -> Self {
        CmdError::Io
    }
}

fn bad(msg: impl Into<String>) -> CmdError {
    CmdError::BadParams(msg.into())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, CmdError> {
    match cmd {
        Command::Table { family, n, format } => {
            let spec = parse_spec(&family)?;
            let format = parse_format(&format)?;
            let (lo, hi) = parse_range(&n)?;
            let mut table = build_table(&spec, hi).map_err(domain_error)?;
            table.rows.drain(..lo);
            out.write_all(render_table(&table, format).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Eval {
            family,
            n,
            x1,
            x2,
            format,
        } => {
            let spec = parse_spec(&family)?;
            let format = parse_format(&format)?;
            let x1 = parse_rational_flag(x1.as_deref().unwrap_or("0"), "--x1")?;
            let x2 = parse_rational_flag(x2.as_deref().unwrap_or("0"), "--x2")?;
            let table = build_table(&spec, n).map_err(domain_error)?;
            let poly = &table.rows[n].1;
            let value = poly.eval(&x1, &x2);
            out.write_all(render_eval(&spec, n, &x1, &x2, &value, format).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            theorem,
            alpha,
            alpha2,
            lambda,
            eta,
            delta,
            nmax,
            format,
        } => {
            let format = parse_format(&format)?;
            if theorem == "reductions" {
                if alpha.is_some()
                    || alpha2.is_some()
                    || lambda.is_some()
                    || eta.is_some()
                    || delta.is_some()
                {
                    return Err(bad("grid overrides do not apply to --theorem reductions \
                         (its parameter grids are fixed by the checks)"));
                }
                let mut reports = Vec::new();
                for check in ReductionCheck::ALL {
                    reports.extend(verify_reduction(check, nmax));
                }
                return emit_reductions(&reports, nmax, format, out);
            }
            let theorems: Vec<TheoremId> = if theorem == "all" {
                TheoremId::MAIN_SUITE.to_vec()
            } else {
                vec![TheoremId::parse(&theorem)
                    .ok_or_else(|| bad(format!("unknown theorem `{theorem}`")))?]
            };
            let grid = override_grid(alpha, alpha2, lambda, eta, delta)?;
            let reports = run_suite(&theorems, &grid, nmax);
            emit_verify(&reports, nmax, format, out)
        }
        Command::Reduce {
            check,
            nmax,
            format,
        } => {
            let format = parse_format(&format)?;
            let checks: Vec<ReductionCheck> = if check == "all" {
                ReductionCheck::ALL.to_vec()
            } else {
                vec![ReductionCheck::parse(&check)
                    .ok_or_else(|| bad(format!("unknown reduction check `{check}`")))?]
            };
            let mut reports = Vec::new();
            for c in checks {
                reports.extend(verify_reduction(c, nmax));
            }
            emit_reductions(&reports, nmax, format, out)
        }
    }
}

fn emit_verify(
    reports: &[VerifyReport],
    nmax: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CmdError> {
    out.write_all(render_verify(reports, nmax, format).as_bytes())?;
    if reports.iter().any(|r| r.status == Status::Fail) {
        Ok(EXIT_VERIFY_FAILED)
    } else {
        Ok(EXIT_OK)
    }
}

fn emit_reductions(
    reports: &[ReductionReport],
    nmax: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CmdError> {
    out.write_all(render_reductions(reports, nmax, format).as_bytes())?;
    if reports.iter().any(|r| r.status == Status::Fail) {
        Ok(EXIT_VERIFY_FAILED)
    } else {
        Ok(EXIT_OK)
    }
}

fn domain_error(e: Error) -> CmdError {
    bad(e.to_string())
}

fn parse_spec(args: &FamilyArgs) -> Result<FamilySpec, CmdError> {
    let kind = FamilyKind::parse(&args.family).ok_or_else(|| {
        bad(format!(
            "unknown family `{}` (known: {})",
            args.family,
            FamilyKind::ALL.map(|k| k.name()).join(", ")
        ))
    })?;
    let lambda = args
        .lambda
        .as_deref()
        .map(|s| parse_rational_flag(s, "--lambda"))
        .transpose()?;
    FamilySpec::build(kind, args.alpha, lambda, args.eta, args.delta).map_err(bad)
}

fn parse_format(s: &str) -> Result<OutputFormat, CmdError> {
    OutputFormat::parse(s)
        .ok_or_else(|| bad(format!("unknown format `{s}` (text, json, csv, latex)")))
}

fn parse_rational_flag(s: &str, flag: &str) -> Result<Rational, CmdError> {
    s.parse().map_err(|_| {
        bad(format!(
            "{flag}: `{s}` is not an exact rational (use `p` or `p/q`)"
        ))
    })
}

fn parse_range(s: &str) -> Result<(usize, usize), CmdError> {
    let err = || bad(format!("--n: `{s}` is not an inclusive range `a..b`"));
    if let Some((a, b)) = s.split_once("..") {
        let lo: usize = a.parse().map_err(|_| err())?;
        let hi: usize = b.parse().map_err(|_| err())?;
        if lo > hi {
            return Err(bad(format!("--n: empty range `{s}` (need a <= b)")));
        }
        Ok((lo, hi))
    } else {
        let n: usize = s.parse().map_err(|_| err())?;
        Ok((n, n))
    }
}

fn parse_list<T>(
    s: &str,
    what: &str,
    parse: impl Fn(&str) -> Option<T>,
) -> Result<Vec<T>, CmdError> {
    let mut items = Vec::new();
    for part in s.split(',') {
        items
            .push(parse(part.trim()).ok_or_else(|| bad(format!("{what}: `{part}` is not valid")))?);
    }
    if items.is_empty() {
        return Err(bad(format!("{what}: empty list")));
    }
    Ok(items)
}

fn override_grid(
    alpha: Option<String>,
    alpha2: Option<String>,
    lambda: Option<String>,
    eta: Option<String>,
    delta: Option<String>,
) -> Result<Grid, CmdError> {
    let mut grid = Grid::default_grid();
    let mut alphas_overridden = false;
    if let Some(s) = alpha {
        grid.alphas = parse_list(&s, "--alpha", |p| p.parse().ok())?;
        alphas_overridden = true;
    }
    let alpha2_list: Option<Vec<u32>> = alpha2
        .map(|s| parse_list(&s, "--alpha2", |p| p.parse().ok()))
        .transpose()?;
    // Pairs for 4.1: the default pair set unless either alpha axis is
    // overridden, in which case the cartesian product of the two lists.
    if alphas_overridden || alpha2_list.is_some() {
        let a1 = grid.alphas.clone();
        let a2 = alpha2_list.unwrap_or_else(|| a1.clone());
        grid.alpha_pairs = a1
            .iter()
            .flat_map(|&x| a2.iter().map(move |&y| (x, y)))
            .collect();
    }
    if let Some(s) = lambda {
        grid.lambdas = parse_list(&s, "--lambda", |p| p.parse().ok())?;
    }
    if let Some(s) = eta {
        grid.etas = parse_list(&s, "--eta", |p| {
            p.parse().ok().filter(|e| ETA_RANGE.contains(e))
        })?;
    }
    if let Some(s) = delta {
        grid.deltas = parse_list(&s, "--delta", |p| p.parse().ok())?;
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv =
            std::iter::once("bellpoly".to_owned()).chain(args.iter().map(|s| (*s).to_owned()));
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn table_bell_numbers_csv() {
        let (code, out, _) = run_cli(&[
            "table",
            "--family",
            "bell-number",
            "--n",
            "0..5",
            "--format",
            "csv",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "n,value\n0,1\n1,1\n2,2\n3,5\n4,15\n5,52\n");
    }

    #[test]
    fn table_bell_apostol_alpha_zero() {
        let (code, out, _) = run_cli(&[
            "table",
            "--family",
            "bell-apostol",
            "--alpha",
            "0",
            "--n",
            "0..2",
        ]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[1], "0: 1");
        assert_eq!(lines[2], "1: X1 + X2");
        assert_eq!(lines[3], "2: X1^2 + 2*X1*X2 + X2^2 + X2");
    }

    #[test]
    fn table_apostol_bernoulli_single_row() {
        let (code, out, _) = run_cli(&[
            "table",
            "--family",
            "apostol-bernoulli",
            "--alpha",
            "1",
            "--lambda",
            "1",
            "--n",
            "2..2",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("2: X1^2 - X1 + 1/6"));
    }

    #[test]
    fn eval_bivariate_at_rational_point() {
        let (code, out, _) = run_cli(&[
            "eval",
            "--family",
            "bell-bivariate",
            "--n",
            "1",
            "--x1",
            "1/2",
            "--x2",
            "1/3",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "5/6\n");
    }

    #[test]
    fn eval_defaults_to_origin() {
        let (code, out, _) = run_cli(&[
            "eval",
            "--family",
            "bell-classical",
            "--n",
            "2",
            "--x2",
            "1",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "2\n");
    }

    #[test]
    fn pole_is_a_parameter_error() {
        let (code, _, err) = run_cli(&[
            "table",
            "--family",
            "apostol-type",
            "--alpha",
            "1",
            "--lambda",
            "-1",
            "--delta",
            "0",
            "--n",
            "0..3",
        ]);
        assert_eq!(code, EXIT_BAD_PARAMS);
        assert!(err.contains("pole at t=0"), "stderr: {err}");
    }

    #[test]
    fn irrelevant_parameter_is_rejected() {
        let (code, _, err) = run_cli(&[
            "table",
            "--family",
            "bell-number",
            "--alpha",
            "2",
            "--n",
            "0..3",
        ]);
        assert_eq!(code, EXIT_BAD_PARAMS);
        assert!(err.contains("does not take --alpha"));
    }

    #[test]
    fn unknown_family_and_format_and_range() {
        let (code, _, err) = run_cli(&["table", "--family", "nope", "--n", "0..3"]);
        assert_eq!(code, EXIT_BAD_PARAMS);
        assert!(err.contains("unknown family"));

        let (code, _, err) = run_cli(&[
            "table",
            "--family",
            "bell-number",
            "--n",
            "0..3",
            "--format",
            "yaml",
        ]);
        assert_eq!(code, EXIT_BAD_PARAMS);
        assert!(err.contains("unknown format"));

        let (code, _, err) = run_cli(&["table", "--family", "bell-number", "--n", "5..2"]);
        assert_eq!(code, EXIT_BAD_PARAMS);
        assert!(err.contains("empty range"));

        let (code, _, err) = run_cli(&["table", "--family", "bell-number", "--n", "x"]);
        assert_eq!(code, EXIT_BAD_PARAMS);
        assert!(err.contains("not an inclusive range"));
    }

    #[test]
    fn bad_rational_flag() {
        let (code, _, err) = run_cli(&[
            "eval",
            "--family",
            "bell-bivariate",
            "--n",
            "1",
            "--x1",
            "0.5",
        ]);
        assert_eq!(code, EXIT_BAD_PARAMS);
        assert!(err.contains("not an exact rational"));
    }

    #[test]
    fn clap_usage_error_is_exit_2_and_help_is_exit_0() {
        let (code, _, _) = run_cli(&["frobnicate"]);
        assert_eq!(code, EXIT_BAD_PARAMS);

        let (code, out, _) = run_cli(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("table"));
    }

    #[test]
    fn verify_single_theorem_small_grid() {
        let (code, out, _) = run_cli(&[
            "verify",
            "--theorem",
            "5.1",
            "--alpha",
            "0,1",
            "--lambda",
            "1",
            "--eta",
            "0",
            "--delta",
            "0",
            "--nmax",
            "6",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("pass=2 fail=0 skip=0"), "out: {out}");
    }

    #[test]
    fn verify_singular_point_skips_cleanly() {
        let (code, out, _) = run_cli(&[
            "verify",
            "--theorem",
            "4.5",
            "--lambda",
            "-1",
            "--delta",
            "0",
            "--nmax",
            "4",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("SKIP"));
        assert!(out.contains("pole at t=0"));
    }

    #[test]
    fn verify_printed_form_fails_with_exit_3() {
        let (code, out, _) = run_cli(&[
            "verify",
            "--theorem",
            "3.3-printed",
            "--alpha",
            "1",
            "--lambda",
            "1",
            "--eta",
            "1",
            "--delta",
            "0",
            "--nmax",
            "4",
        ]);
        assert_eq!(code, EXIT_VERIFY_FAILED);
        assert!(out.contains("FAIL"));
        assert!(out.contains("first failure at n=2"));
    }

    #[test]
    fn verify_unknown_theorem() {
        let (code, _, err) = run_cli(&["verify", "--theorem", "9.9"]);
        assert_eq!(code, EXIT_BAD_PARAMS);
        assert!(err.contains("unknown theorem"));
    }

    #[test]
    fn reduce_all_checks_pass() {
        let (code, out, _) = run_cli(&["reduce", "--check", "genocchi", "--nmax", "6"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("fail=0"));

        let (code, _, err) = run_cli(&["reduce", "--check", "nonsense"]);
        assert_eq!(code, EXIT_BAD_PARAMS);
        assert!(err.contains("unknown reduction check"));
    }

    #[test]
    fn reduce_genocchi_nmax_zero() {
        let (code, out, _) = run_cli(&["reduce", "--check", "genocchi", "--nmax", "0"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("pass="));
        assert!(out.contains("fail=0"));
    }

    #[test]
    fn io_failure_is_internal_error() {
        struct Failing;
        impl Write for Failing {
            fn write(&mut self, _: &[u8]) -> std::io::Result<usize> {
                Err(std::io::Error::other("sink closed"))
            }
            fn flush(&mut self) -> std::io::Result<()> {
                Ok(())
            }
        }
        let argv = [
            "bellpoly",
            "table",
            "--family",
            "bell-number",
            "--n",
            "0..2",
        ]
        .map(String::from);
        let mut err = Vec::new();
        let code = run(argv, &mut Failing, &mut err);
        assert_eq!(code, EXIT_INTERNAL);
    }
}
