mod cache;
mod claims;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Format;

#[derive(Parser, Debug)]
#[command(
    name = "ncforms",
    version,
    about = "Verify congruences and Galois data for a space of noncongruence cuspforms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format; `text` is a terse human summary.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory holding the point-count cache.
    #[arg(long, global = true, default_value = ".ncforms-cache")]
    pub cache_dir: PathBuf,
    /// Recompute point counts, checking any cached ones against the result.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    /// p-adic precision M for congruence checks (default: just enough).
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    /// Largest coefficient index used by congruence checks.
    #[arg(long, global = true, default_value_t = 600)]
    pub nmax: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Series {
    T,
    H1,
    H2,
    H1Cube,
    H2Cube,
    E6,
    R2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print q-expansion coefficients.
    Expand {
        #[arg(long, value_enum)]
        series: Series,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Print nonzero coefficients of the level 432 newform.
    Newform {
        #[arg(long, default_value_t = 60)]
        terms: usize,
    },
    /// Frobenius quartics and their quadratic factors.
    Frobpoly {
        #[arg(long, value_parser = commands::parse_a, default_value = "2")]
        a: i64,
        #[arg(long, value_parser = commands::parse_prime, conflicts_with = "primes")]
        prime: Option<u64>,
        #[arg(long, value_parser = commands::parse_primes)]
        primes: Option<commands::PrimeList>,
    },
    /// Compare computed Euler factors with the published tables.
    Tables {
        #[arg(long, value_parser = commands::parse_a, default_value = "2")]
        a: i64,
        #[arg(long, value_parser = commands::parse_primes, default_value = "5..59")]
        primes: commands::PrimeList,
    },
    /// Three-term congruences for the eigenbasis at one prime.
    AsdCheck {
        #[arg(long, value_parser = commands::parse_prime)]
        prime: u64,
    },
    /// Operator algebra, numeric slash action and eigenbasis convention.
    QmCheck {
        #[arg(long, default_value_t = 400)]
        terms: usize,
    },
    /// Sample the explicit isogeny over F_{p^2}.
    IsogenyCheck {
        #[arg(long, value_parser = commands::parse_primes, default_value = "13,17,29")]
        primes: commands::PrimeList,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Cubic and quartic twist relations between Euler factors.
    TwistCheck {
        #[arg(long, value_parser = commands::parse_primes, default_value = "5..59")]
        primes: commands::PrimeList,
    },
    /// Every check, one report.
    VerifyAll,
    /// List the claim registry.
    Claims,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let g = &cli.global;
    let out = match cli.command {
        Command::Expand { series, terms } => commands::expand(series, terms, g)?,
        Command::Newform { terms } => commands::newform(terms, g)?,
        Command::Frobpoly { a, prime, primes } => {
            let ps = match (prime, primes) {
                (Some(p), _) => vec![p],
                (None, Some(l)) => l.0,
                (None, None) => commands::PrimeList::default_table().0,
            };
            commands::frobpoly(a, &ps, g)?
        }
        Command::Tables { a, primes } => commands::tables(a, &primes.0, g)?,
        Command::AsdCheck { prime } => commands::asd_check(prime, g)?,
        Command::QmCheck { terms } => commands::qm_check(terms, g)?,
        Command::IsogenyCheck { primes, trials } => commands::isogeny_check(&primes.0, trials, g)?,
        Command::TwistCheck { primes } => commands::twist_check(&primes.0, g)?,
        Command::VerifyAll => commands::verify_all(g)?,
        Command::Claims => commands::claims(g)?,
    };
    print!("{}", out.text);
    Ok(out.pass)
}
