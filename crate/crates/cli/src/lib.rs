//! Command-line front end: `mul`, `trace`, `verify` and `bench`.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 when `verify`
//! finds a mismatch or invariant failure. Only the requested payload goes to
//! stdout; diagnostics go to stderr.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use incmul::bench::{render_bench_json, render_bench_text};
use incmul::trace_io::{render_report_json, render_report_text};
use incmul::{
    compare_algorithms, exhaustive_check, random_check, render_trace_json, render_trace_text,
    Algorithm, Base, Natural, VerifyReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "incmul",
    version,
    about = "Exact base-b multiplication with step traces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the product A × B
    Mul(OperandArgs),
    /// Print every step of the multiplication
    Trace {
        #[command(flatten)]
        operands: OperandArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check both algorithms against an independent oracle
    Verify(VerifyArgs),
    /// Compare operation counts and timings of both algorithms
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct OperandArgs {
    /// Multiplicand
    a: String,
    /// Multiplier
    b: String,
    #[arg(long, default_value_t = 10, value_parser = base_arg)]
    base: u32,
    #[arg(long, value_enum, default_value_t = AlgoArg::Incremental)]
    algo: AlgoArg,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check every pair 0 <= x, y < LIMIT
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    limit: Option<u64>,
    /// Base for --limit; restricts --random to a single base
    #[arg(long, value_parser = base_arg)]
    base: Option<u32>,
    /// Check seeded random pairs instead
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 10_000, requires = "random")]
    trials: usize,
    #[arg(long, default_value_t = 64, requires = "random")]
    max_digits: usize,
    #[arg(long, default_value_t = 0, requires = "random")]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct BenchArgs {
    a: String,
    b: String,
    #[arg(long, default_value_t = 10, value_parser = base_arg)]
    base: u32,
    #[arg(long, default_value_t = 101)]
    reps: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgoArg {
    Incremental,
    Schoolbook,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Incremental => Algorithm::Incremental,
            AlgoArg::Schoolbook => Algorithm::Schoolbook,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn base_arg(s: &str) -> Result<u32, String> {
    let v: u32 = s.parse().map_err(|_| format!("{s:?} is not a base"))?;
    Base::new(v).map(Base::get).map_err(|e| e.to_string())
}

/// Failure inside a subcommand, mapped to an exit code.
enum Failure {
    Usage(String),
    Mismatch,
}

impl From<incmul::Error> for Failure {
    fn from(e: incmul::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn operands(a: &str, b: &str, base: u32) -> Result<(Natural, Natural), Failure> {
    let base = Base::new(base)?;
    let a = Natural::parse(a, base).map_err(|e| Failure::Usage(format!("operand A: {e}")))?;
    let b = Natural::parse(b, base).map_err(|e| Failure::Usage(format!("operand B: {e}")))?;
    Ok((a, b))
}

fn verify_outcome(report: &VerifyReport) -> Result<(), Failure> {
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn exit_code(result: Result<(), Failure>, err: &mut dyn Write) -> i32 {
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch) => {
            let _ = writeln!(err, "error: verification found mismatches");
            EXIT_MISMATCH
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("write failed: {e}"));
    match command {
        Command::Mul(args) => {
            let (a, b) = operands(&args.a, &args.b, args.base)?;
            let product = incmul::multiply(&a, &b, args.algo.into())?;
            writeln!(out, "{product}").map_err(io)?;
        }
        Command::Trace {
            operands: args,
            format,
        } => {
            let (a, b) = operands(&args.a, &args.b, args.base)?;
            let trace = incmul::algorithms::run(&a, &b, args.algo.into())?;
            let text = match format {
                Format::Text => render_trace_text(&trace),
                Format::Json => render_trace_json(&trace),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
        }
        Command::Verify(args) => {
            let report = if args.random {
                let bases: Vec<Base> = match args.base {
                    Some(b) => vec![Base::new(b)?],
                    None => Base::all().collect(),
                };
                random_check(args.trials, args.max_digits, &bases, args.seed)?
            } else {
                let limit = args.limit.expect("clap requires --limit without --random");
                exhaustive_check(limit, args.base.unwrap_or(10))?
            };
            let text = match args.format {
                Format::Text => render_report_text(&report),
                Format::Json => render_report_json(&report),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            if args.format == Format::Json {
                writeln!(err, "elapsed: {:.3}s", report.elapsed.as_secs_f64()).map_err(io)?;
            }
            verify_outcome(&report)?;
        }
        Command::Bench(args) => {
            let (a, b) = operands(&args.a, &args.b, args.base)?;
            let report = compare_algorithms(&a, &b, args.reps)?;
            let text = match args.format {
                Format::Text => render_bench_text(&report),
                Format::Json => render_bench_json(&report),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
        }
    }
    Ok(())
}

/// Runs the tool on `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = dispatch(cli.command, out, err);
    exit_code(result, err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("incmul").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            call(&["mul", "1234", "567"]),
            (0, "699678\n".into(), String::new())
        );
        assert_eq!(call(&["mul", "ff", "ff", "--base", "16"]).1, "fe01\n");
        assert_eq!(
            call(&["mul", "FF", "ff", "--base", "16", "--algo", "schoolbook"]).1,
            "fe01\n"
        );
        assert_eq!(call(&["mul", "000", "5"]).1, "0\n");
    }

    #[test]
    fn usage_errors_exit_one() {
        for args in [
            &["mul", "12"][..],
            &["mul", "-5", "3"],
            &["mul", "1.5", "3"],
            &["mul", "12", "ab"],
            &["mul", "1", "1", "--base", "37"],
            &["mul", "1", "1", "--base", "1"],
            &["mul", "1", "1", "--algo", "karatsuba"],
            &["trace", "1", "1", "--format", "xml"],
            &["verify"],
            &["verify", "--limit", "0"],
            &["verify", "--limit", "3", "--random"],
            &["bench", "1", "2", "--reps", "0"],
            &["frobnicate"],
            &[],
        ] {
            let (code, out, err) = call(args);
            assert_eq!(code, EXIT_USAGE, "{args:?}");
            assert!(out.is_empty(), "{args:?} wrote to stdout");
            assert!(!err.is_empty(), "{args:?} gave no diagnostic");
        }
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("trace"));
        assert!(err.is_empty());
    }

    #[test]
    fn verify_limit_text() {
        let (code, out, _) = call(&["verify", "--limit", "12", "--base", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("pairs checked: 144\n"));
        assert!(out.ends_with("PASS\n"));
    }

    #[test]
    fn verify_random_json_is_reproducible() {
        let args = [
            "verify",
            "--random",
            "--trials",
            "50",
            "--max-digits",
            "8",
            "--seed",
            "9",
            "--format",
            "json",
        ];
        let (code, first, _) = call(&args);
        assert_eq!(code, 0);
        assert_eq!(call(&args).1, first);
        assert!(first.contains(r#""pairs_checked":50"#));
    }

    #[test]
    fn failed_verification_exits_two() {
        use incmul::oracle::Mismatch;
        let n = |s| Natural::parse(s, Base::DECIMAL).unwrap();
        let mut report = incmul::exhaustive_check(2, 10).unwrap();
        assert_eq!(exit_code(verify_outcome(&report), &mut Vec::new()), EXIT_OK);

        report.mismatches.push(Mismatch {
            a: n("12"),
            b: n("34"),
            expected: n("408"),
            incremental: n("418"),
            schoolbook: n("408"),
            oracle: n("408"),
        });
        let mut err = Vec::new();
        assert_eq!(exit_code(verify_outcome(&report), &mut err), EXIT_MISMATCH);
        assert!(String::from_utf8(err).unwrap().contains("mismatches"));
        let text = render_report_text(&report);
        assert!(text.contains("12 × 34: expected 408, incremental 418"));
        assert!(text.ends_with("FAIL\n"));
        assert!(render_report_json(&report).contains(r#""passed":false"#));
    }

    #[test]
    fn bench_reports_both_algorithms() {
        let (code, out, _) = call(&["bench", "1234", "567", "--reps", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("incremental"));
        assert!(out.contains("schoolbook"));
    }
}
