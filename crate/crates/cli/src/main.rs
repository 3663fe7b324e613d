//! Command-line front end for the species enumeration library.
//!
//! Subcommands: `count` (count tables per graph family), `cycle-index`
//! (dump a named series in the cache text format), `eval` (evaluate a
//! species expression), and `verify` (compare the pipeline against the
//! brute-force oracle and the labeled cross-checks).
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure, 3
//! internal algebra error.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use species_core::error::Error;
use species_core::oracle::{self, OracleFamily};
use species_core::species::{
    self, fast_bipartite_ogfs, labeled_bicolored, labeled_blocks_egf, SpeciesCatalog, SpeciesName,
};
use species_core::{dsl, PowerSeries};

const EXIT_USAGE: i32 = 1;
const EXIT_VERIFY: i32 = 2;
const EXIT_ALGEBRA: i32 = 3;

#[derive(Parser)]
#[command(
    name = "species",
    about = "Exact enumeration of bicolored and bipartite graphs and bipartite blocks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of counts for a graph family
    Count {
        /// Family: bicolored, connected-bicolored, bipartite,
        /// connected-bipartite, blocks, labeled-bicolored, labeled-blocks
        #[arg(long)]
        species: String,
        /// Largest vertex count to report
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        /// Output format
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        /// Directory for persisted cycle indices
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Print a named cycle index in the serialization format
    CycleIndex {
        /// Series name: X, E, Eplus, Omega, BCe, BCtau, CBCe, CBCtau, CBP, BP, NBP
        #[arg(long)]
        species: String,
        /// Truncation degree
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        /// Directory for persisted cycle indices
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Evaluate a species expression and print the resulting series
    Eval {
        /// Expression, e.g. "Omega(Eplus)" or "X*CBP' - X"
        expression: String,
        /// Truncation degree
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        /// Also print the ordinary generating function coefficients
        #[arg(long)]
        ogf: bool,
        /// Directory for persisted cycle indices
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Check the pipeline against brute-force counts and labeled formulas
    Verify {
        /// Largest vertex count for the exhaustive comparisons (at most 7)
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(1..=7))]
        limit: u8,
        /// Largest vertex count for the labeled cross-checks
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        /// Directory for persisted cycle indices
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
    Json,
}

/// The families `count` understands; distinct from the catalog names,
/// which address raw series.
#[derive(Clone, Copy, PartialEq, Eq)]
enum CountFamily {
    Bicolored,
    ConnectedBicolored,
    Bipartite,
    ConnectedBipartite,
    Blocks,
    LabeledBicolored,
    LabeledBlocks,
}

impl CountFamily {
    const ALL: [CountFamily; 7] = [
        CountFamily::Bicolored,
        CountFamily::ConnectedBicolored,
        CountFamily::Bipartite,
        CountFamily::ConnectedBipartite,
        CountFamily::Blocks,
        CountFamily::LabeledBicolored,
        CountFamily::LabeledBlocks,
    ];

    fn as_str(&self) -> &'static str {
        match self {
            CountFamily::Bicolored => "bicolored",
            CountFamily::ConnectedBicolored => "connected-bicolored",
            CountFamily::Bipartite => "bipartite",
            CountFamily::ConnectedBipartite => "connected-bipartite",
            CountFamily::Blocks => "blocks",
            CountFamily::LabeledBicolored => "labeled-bicolored",
            CountFamily::LabeledBlocks => "labeled-blocks",
        }
    }
}

impl FromStr for CountFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<CountFamily, Error> {
        CountFamily::ALL
            .iter()
            .copied()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for CountFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                std::process::exit(0);
            }
            let _ = err.print();
            std::process::exit(EXIT_USAGE);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    };
    std::process::exit(code);
}

/// Usage-level mistakes (bad names, malformed expressions, guard
/// violations) exit 1; failures inside the algebra itself exit 3.
fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::UnknownName(_)
        | Error::Parse { .. }
        | Error::OracleLimit { .. }
        | Error::ConstantTermInComposition
        | Error::InverseNotApplicable
        | Error::MobiusOfZero => EXIT_USAGE,
        Error::NotDivisibleByP1 { .. } | Error::NonIntegerCoefficient { .. } | Error::Cache(_) => {
            EXIT_ALGEBRA
        }
    }
}

fn catalog_for(cache_dir: Option<PathBuf>) -> SpeciesCatalog {
    match cache_dir {
        Some(dir) => SpeciesCatalog::with_cache_dir(dir),
        None => SpeciesCatalog::new(),
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Count { species, max_n, format, cache_dir } => {
            let family: CountFamily = species.parse()?;
            let counts = family_counts(family, max_n, &catalog_for(cache_dir))?;
            print_counts(family, max_n, &counts, format);
            Ok(0)
        }
        Command::CycleIndex { species, max_n, cache_dir } => {
            let name: SpeciesName = species.parse()?;
            let series = catalog_for(cache_dir).cycle_index(name, max_n)?;
            print!("{}", series.to_cache_text());
            Ok(0)
        }
        Command::Eval { expression, max_n, ogf, cache_dir } => {
            let expr = dsl::parse(&expression)?;
            let series = dsl::evaluate_with(&catalog_for(cache_dir), &expr, max_n)?;
            println!("{}", dsl::format(&series));
            if ogf {
                let coefficients = series.ogf(max_n);
                let rendered: Vec<String> = (0..=max_n)
                    .map(|d| {
                        let c = coefficients.coefficient(d);
                        if c.denom() == &BigInt::from(1) {
                            c.numer().to_string()
                        } else {
                            format!("{}/{}", c.numer(), c.denom())
                        }
                    })
                    .collect();
                println!("{}", rendered.join(" "));
            }
            Ok(0)
        }
        Command::Verify { limit, max_n, cache_dir } => {
            run_verify(limit as usize, max_n, &catalog_for(cache_dir))
        }
    }
}

/// Counts for 1..=max_n. Unlabeled families other than blocks go through
/// the generating-function fast path; blocks always go through the full
/// cycle-index pipeline.
fn family_counts(
    family: CountFamily,
    max_n: u32,
    catalog: &SpeciesCatalog,
) -> Result<Vec<BigInt>, Error> {
    let series_counts = |series: &PowerSeries| -> Result<Vec<BigInt>, Error> {
        (1..=max_n).map(|n| series.integer_coefficient(n)).collect()
    };
    match family {
        CountFamily::Bicolored => series_counts(&fast_bipartite_ogfs(max_n).f_e),
        CountFamily::ConnectedBicolored => series_counts(&fast_bipartite_ogfs(max_n).g_e),
        CountFamily::Bipartite => series_counts(&fast_bipartite_ogfs(max_n).b),
        CountFamily::ConnectedBipartite => series_counts(&fast_bipartite_ogfs(max_n).c),
        CountFamily::Blocks => {
            let blocks = catalog.nbp(max_n)?;
            series_counts(&blocks.ogf(max_n))
        }
        CountFamily::LabeledBicolored => Ok((1..=max_n).map(labeled_bicolored).collect()),
        CountFamily::LabeledBlocks => {
            let egf = labeled_blocks_egf(max_n);
            (1..=max_n).map(|n| egf.labeled_count(n)).collect()
        }
    }
}

#[derive(Serialize)]
struct CountReport<'a> {
    species: &'a str,
    max_n: u32,
    counts: Vec<CountRow>,
}

#[derive(Serialize)]
struct CountRow {
    n: u32,
    count: String,
}

fn print_counts(family: CountFamily, max_n: u32, counts: &[BigInt], format: OutputFormat) {
    match format {
        OutputFormat::Table => {
            let width = max_n.to_string().len();
            for (i, count) in counts.iter().enumerate() {
                println!("{:>width$}  {}", i + 1, count);
            }
        }
        OutputFormat::Csv => {
            println!("n,count");
            for (i, count) in counts.iter().enumerate() {
                println!("{},{}", i + 1, count);
            }
        }
        OutputFormat::Json => {
            let report = CountReport {
                species: family.as_str(),
                max_n,
                counts: counts
                    .iter()
                    .enumerate()
                    .map(|(i, count)| CountRow { n: i as u32 + 1, count: count.to_string() })
                    .collect(),
            };
            println!("{}", serde_json::to_string(&report).expect("serializable report"));
        }
    }
}

fn run_verify(limit: usize, max_n: u32, catalog: &SpeciesCatalog) -> Result<i32, Error> {
    let truncation = limit as u32;
    let mut failures: Vec<String> = Vec::new();

    let series_for = |family: OracleFamily| -> Result<Vec<BigInt>, Error> {
        let name = match family {
            OracleFamily::Bicolored => SpeciesName::BcE,
            OracleFamily::BicoloredTauSymmetric => SpeciesName::BcTau,
            OracleFamily::ConnectedBicolored => SpeciesName::CbcE,
            OracleFamily::Bipartite => SpeciesName::Bp,
            OracleFamily::ConnectedBipartite => SpeciesName::Cbp,
            OracleFamily::BipartiteBlock => SpeciesName::Nbp,
        };
        catalog.cycle_index(name, truncation)?.ogf(truncation).integer_coefficients()
    };

    for family in OracleFamily::ALL {
        let coefficients = series_for(family)?;
        for check in oracle::check_against_oracle(family, &coefficients, limit)? {
            if check.passed() {
                println!("PASS  {:<24} n={}  count={}", check.family.as_str(), check.n, check.expected);
            } else {
                println!(
                    "FAIL  {:<24} n={}  expected={}  actual={}",
                    check.family.as_str(),
                    check.n,
                    check.expected,
                    check.actual
                );
                failures.push(format!(
                    "({}, {}, {}, {})",
                    check.family, check.n, check.expected, check.actual
                ));
            }
        }
    }

    let bicolored_egf = species::bc_e(max_n).egf(max_n);
    for n in 1..=max_n {
        let actual = bicolored_egf.labeled_count(n)?;
        let expected = labeled_bicolored(n);
        if actual == expected {
            println!("PASS  {:<24} n={}  count={}", "labeled-bicolored", n, expected);
        } else {
            println!(
                "FAIL  {:<24} n={}  expected={}  actual={}",
                "labeled-bicolored", n, expected, actual
            );
            failures.push(format!("(labeled-bicolored, {n}, {expected}, {actual})"));
        }
    }

    let blocks_egf = catalog.nbp(max_n)?.egf(max_n);
    let reference = labeled_blocks_egf(max_n);
    for n in 1..=max_n {
        let actual = blocks_egf.labeled_count(n)?;
        let expected = reference.labeled_count(n)?;
        if actual == expected {
            println!("PASS  {:<24} n={}  count={}", "labeled-blocks", n, expected);
        } else {
            println!(
                "FAIL  {:<24} n={}  expected={}  actual={}",
                "labeled-blocks", n, expected, actual
            );
            failures.push(format!("(labeled-blocks, {n}, {expected}, {actual})"));
        }
    }

    if failures.is_empty() {
        println!("all checks passed");
        Ok(0)
    } else {
        eprintln!("first mismatch: {}", failures[0]);
        Ok(EXIT_VERIFY)
    }
}
