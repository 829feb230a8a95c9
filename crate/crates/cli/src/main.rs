//! `skein`: command-line front end for the cubic skein module library.
//!
//! Exit status: 0 on success (including report-only scans), 1 on usage or
//! parse errors, 2 when a hard assertion fails, 3 on internal errors.
//! `SKEIN_THREADS` caps the worker pool used by `scan`.

mod commands;
mod failure;
mod scan;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use failure::Failure;

pub const THREADS_VAR: &str = "SKEIN_THREADS";

#[derive(Parser, Debug)]
#[command(name = "skein", version, about = "Exact computations in the cubic (4,inf) skein module")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClosureArg {
    Num,
    Den,
    /// Odd-length codes close with the numerator, even-length ones with the denominator.
    Auto,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ambient {
    S3,
    Annulus,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignsArg {
    Consistent,
    Printed,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    HopfDivisibility,
    Col7,
    PretzelBridge,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Hard assertion for Hopf divisibility on grids up to length 4 and entry 4,
    /// report-only otherwise.
    Auto,
    Assert,
    Report,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct LinkInput {
    /// Conway code such as "[3,2]".
    #[arg(long)]
    code: Option<String>,
    /// Pretzel code such as "P(2,1,-3)"; always closed with the numerator.
    #[arg(long)]
    pretzel: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct MirrorInput {
    #[arg(long)]
    code: Option<String>,
    /// A polynomial in the canonical grammar.
    #[arg(long)]
    poly: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a rational or pretzel link.
    Eval {
        #[command(flatten)]
        input: LinkInput,
        #[arg(long, value_enum, default_value_t = ClosureArg::Auto)]
        closure: ClosureArg,
    },
    /// scale_a*[A] - scale_b*[B], optionally divided by a named relation.
    Relation {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value = "1")]
        scale_a: String,
        #[arg(long, default_value = "1")]
        scale_b: String,
        /// "hopf", a catalog name such as "R_tr+", "@file", or a polynomial.
        #[arg(long)]
        divide_by: Option<String>,
    },
    /// Exact division of two polynomials (operands as for --divide-by).
    Divide {
        #[arg(long)]
        num: String,
        #[arg(long)]
        den: String,
        /// Exit with status 2 unless the division is exact.
        #[arg(long)]
        require: bool,
    },
    /// Mirror image: the negated code with its value, or phi applied to a polynomial.
    Mirror {
        #[command(flatten)]
        input: MirrorInput,
    },
    /// The (2,n) torus link in S^3 or in the thickened annulus.
    Torus {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Ambient::S3)]
        ambient: Ambient,
    },
    /// Evaluate a pretzel link and report the terminal cases used.
    Pretzel {
        /// Pretzel code such as "P(2,1,-3)".
        code: String,
        /// Column expansion order as a comma-separated permutation, e.g. "2,0,1".
        #[arg(long)]
        order: Option<String>,
    },
    /// Reduce a 3-tangle word to the 40-element basis.
    Reduce3 {
        /// Generators S1 S2 S1i S2i U1 U2 separated by spaces.
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = SignsArg::Consistent)]
        signs: SignsArg,
    },
    /// Count Fox p-colorings of a rational link.
    Color {
        #[arg(long)]
        code: String,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = ClosureArg::Auto)]
        closure: ClosureArg,
    },
    /// Run a conjecture scan over a grid of standard codes; writes a JSON report.
    Scan {
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_len: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_entry: u64,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Write the report here and print a one-line summary instead.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// List the named relations.
    Catalog {
        /// Also compare the transcribed corpus against computed values.
        #[arg(long)]
        check: bool,
    },
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::usage(format!("{THREADS_VAR} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Internal(e.into()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let f = cli.format;
    match cli.command {
        Command::Eval { input, closure } => commands::eval(f, &input, closure),
        Command::Relation { a, b, scale_a, scale_b, divide_by } => {
            commands::relation(f, &a, &b, &scale_a, &scale_b, divide_by.as_deref())
        }
        Command::Divide { num, den, require } => commands::divide(f, &num, &den, require),
        Command::Mirror { input } => commands::mirror(f, &input),
        Command::Torus { n, ambient } => commands::torus(f, n, ambient),
        Command::Pretzel { code, order } => commands::pretzel(f, &code, order.as_deref()),
        Command::Reduce3 { word, signs } => commands::reduce3(f, &word, signs),
        Command::Color { code, p, closure } => commands::color(f, &code, p, closure),
        Command::Scan { check, max_len, max_entry, mode, out } => {
            configure_threads()?;
            scan::run(check, max_len as usize, max_entry as i64, mode, out.as_deref())
        }
        Command::Catalog { check } => commands::catalog(f, check),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
