use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use exact_reals::bench::{run_benchmarks, Suite};
use exact_reals::digits::format_digits;
use exact_reals::elementary::{Elementary, SeriesRadius};
use exact_reals::error::Error;
use exact_reals::expr;
use exact_reals::rational::parse_rational;

const EXIT_PARSE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "exact-reals",
    version,
    about = "Exact real arithmetic to any number of digits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression to N decimal places.
    Eval(EvalArgs),
    /// Time the cosine-of-Fibonacci-ratio workload.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Settings {
    /// Give up proving a divisor or logarithm argument nonzero after K halvings.
    #[arg(long, value_name = "K", default_value_t = 5000)]
    max_halvings: u32,

    /// Series radius, written 2^-K or as a rational in (0, 1/2].
    #[arg(long, value_name = "R", value_parser = parse_radius)]
    radius: Option<SeriesRadius>,
}

impl Settings {
    fn context(&self) -> Elementary {
        Elementary::new(
            self.radius.clone().unwrap_or_default(),
            Some(self.max_halvings),
        )
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Number of digits after the decimal point.
    #[arg(long, short = 'd', value_name = "N")]
    digits: usize,

    /// Print the mantissa form `Mx10^-N` instead of a decimal.
    #[arg(long)]
    raw: bool,

    /// Read the expression from a file.
    #[arg(long, value_name = "PATH", conflicts_with = "expression")]
    file: Option<PathBuf>,

    #[arg(
        value_name = "EXPR",
        required_unless_present = "file",
        allow_hyphen_values = true
    )]
    expression: Option<String>,

    #[command(flatten)]
    settings: Settings,
}

#[derive(Args)]
struct BenchArgs {
    /// table1 or smoke.
    #[arg(long, default_value = "table1")]
    suite: Suite,

    #[arg(long, short = 'd', value_name = "N", default_value_t = 1000)]
    digits: usize,

    #[command(flatten)]
    settings: Settings,
}

fn parse_radius(text: &str) -> Result<SeriesRadius, String> {
    let text = text.trim();
    let value = match text.strip_prefix("2^-") {
        Some(k) => {
            let k: u32 = k.parse().map_err(|_| format!("bad exponent in {text:?}"))?;
            return SeriesRadius::pow2(k).map_err(|e| e.to_string());
        }
        None => parse_rational(text).ok_or_else(|| format!("not a rational: {text:?}"))?,
    };
    SeriesRadius::new(value).map_err(|e| e.to_string())
}

fn report_parse_error(source: &str, err: &expr::ParseError) {
    eprintln!("error: {err}");
    if !source.contains('\n') {
        let column = source[..err.offset.min(source.len())].chars().count();
        eprintln!("  {source}");
        eprintln!("  {}^", " ".repeat(column));
    }
}

fn eval(args: EvalArgs) -> ExitCode {
    let source = match (&args.file, args.expression) {
        (Some(path), _) => match std::fs::read_to_string(path) {
            Ok(text) => text.trim().to_string(),
            Err(err) => {
                eprintln!("error: cannot read {}: {err}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        },
        (None, Some(text)) => text,
        (None, None) => unreachable!("clap requires one of them"),
    };
    let parsed = match expr::parse(&source) {
        Ok(e) => e,
        Err(err) => {
            report_parse_error(&source, &err);
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let ctx = args.settings.context();
    let value = match expr::evaluate(&parsed, &ctx) {
        Ok(v) => v,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(match err {
                Error::Parse(_) => EXIT_PARSE,
                Error::Domain(_) | Error::CannotSeparate { .. } => EXIT_DOMAIN,
                _ => EXIT_USAGE,
            });
        }
    };
    let out = format_digits(&value, args.digits);
    if args.raw {
        println!("{}", out.raw());
    } else {
        println!("{out}");
    }
    ExitCode::SUCCESS
}

fn bench(args: BenchArgs) -> ExitCode {
    let ctx = args.settings.context();
    for report in run_benchmarks(args.suite, args.digits, &ctx) {
        println!("{report}");
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Eval(args) => eval(args),
        Command::Bench(args) => bench(args),
    }
}
