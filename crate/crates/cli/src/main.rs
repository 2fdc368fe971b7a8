use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use capelli_core::capelli::ElementName;
use capelli_core::coeff::parse_rat;
use capelli_core::lemmas::LEMMA_IDS;
use capelli_core::verify::{default_suite, run_checks, AlgebraArg, CheckKind, CheckReport, CheckSpec, Status};
use capelli_core::{Rat, RatMatrix};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "capelli", version, about = "Exact checks of Capelli-type central elements in U(gl), U(o) and U(sp)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a single check.
    Verify(VerifyArgs),
    /// Run the built-in desk-scale suite.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List element names and lemma ids.
    List,
}

#[derive(Parser)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_with::<CheckKind>)]
    check: CheckKind,
    #[arg(long, value_parser = parse_with::<AlgebraArg>, default_value = "gl")]
    algebra: AlgebraArg,
    #[arg(long = "N")]
    n: Option<usize>,
    /// Minor size; half the minor size for pfaffian and hafnian.
    #[arg(long)]
    k: Option<usize>,
    /// Comma-separated highest weight, e.g. 2,1,0.
    #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
    lambda: Option<Lambda>,
    /// Named element (see `capelli list`) or a generator such as E[1,2].
    #[arg(long)]
    element: Option<String>,
    #[arg(long)]
    lemma: Option<String>,
    /// CSV file with a symmetric S or alternating J replacing the standard form.
    #[arg(long)]
    form_matrix: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Substitute a rational value for u (fast smoke mode).
    #[arg(long, value_parser = parse_one_rat, allow_hyphen_values = true)]
    u_rational: Option<Rat>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_with<T: std::str::FromStr<Err = capelli_core::Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: capelli_core::Error| e.to_string())
}

fn parse_one_rat(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

#[derive(Clone)]
struct Lambda(Vec<Rat>);

fn parse_lambda(s: &str) -> Result<Lambda, String> {
    s.split(',').map(|p| parse_one_rat(p.trim())).collect::<Result<_, _>>().map(Lambda)
}

fn print_report(r: &CheckReport, format: Format) {
    match format {
        Format::Text => println!("{r}"),
        Format::Json => println!("{}", r.to_json()),
    }
}

/// Prints every report and returns the exit code: 0 when nothing failed, 1 on
/// a failing check, 2 on invalid parameters.
fn finish(results: Vec<capelli_core::Result<CheckReport>>, format: Format) -> ExitCode {
    let mut code = 0;
    for r in results {
        match r {
            Ok(r) => {
                if r.status == Status::Fail {
                    code = code.max(1);
                }
                print_report(&r, format);
            }
            Err(e) => {
                eprintln!("error: {e}");
                code = 2;
            }
        }
    }
    ExitCode::from(code)
}

fn verify(args: VerifyArgs) -> ExitCode {
    let form = match &args.form_matrix {
        None => None,
        Some(path) => match fs::read_to_string(path).map_err(|e| e.to_string()).and_then(|s| {
            RatMatrix::parse_csv(&s).map_err(|e| e.to_string())
        }) {
            Ok(m) => Some(m),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
    };
    let spec = CheckSpec {
        kind: args.check,
        algebra: args.algebra,
        n: args.n,
        k: args.k,
        lambda: args.lambda.map(|l| l.0),
        element: args.element,
        lemma: args.lemma,
        form,
        seed: args.seed,
        u_value: args.u_rational,
    };
    finish(run_checks(&[spec]), args.format)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => verify(args),
        Command::Suite { seed, format } => finish(run_checks(&default_suite(seed)), format),
        Command::List => {
            println!("elements:");
            for e in ElementName::all() {
                println!("  {e}");
            }
            println!("lemmas:");
            for id in LEMMA_IDS {
                println!("  {id}");
            }
            ExitCode::SUCCESS
        }
    }
}
