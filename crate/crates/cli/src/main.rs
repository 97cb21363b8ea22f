//! `qwalg`: check, classify, transform and search finite implication algebras.
//!
//! Exit codes: 0 on success, 1 when the verdict is negative (see each
//! command's help), 2 on usage, input or parse errors.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use qwalg::axioms::parse_requirements;
use qwalg::format::{parse_bytes, ParsedAlgebra};
use qwalg::report::{self, ReportDocument, Signature, StructureQuery};
use qwalg::search::{enumerate, find_counterexample_with, SearchConfig};
use qwalg::transforms::{to_implication, to_product};
use qwalg::{fixtures, AxiomId, FiniteAlgebra, ProductAlgebra, Requirement};

#[derive(Parser)]
#[command(
    name = "qwalg",
    version,
    about = "Finite quantum-Wajsberg and related algebras"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for searches.
    #[arg(long, global = true, env = "QWALG_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check axioms (all by default). Exits 1 if any fails.
    Check {
        /// Algebra file, or the name of a bundled fixture.
        file: String,
        /// Axiom or class to check; classes expand to their axioms.
        #[arg(long = "axiom", value_name = "ID")]
        axioms: Vec<String>,
    },
    /// Report every axiom and class verdict.
    Classify { file: String },
    /// Print the derived operation tables.
    Derive { file: String },
    /// Check registered theorems (all by default). Exits 1 if an applicable one fails.
    Verify {
        file: String,
        #[arg(long = "theorem", value_name = "ID")]
        theorems: Vec<String>,
    },
    /// Convert between the implication and product signatures.
    Transform {
        file: String,
        #[arg(long, value_parser = ["product", "implication"])]
        to: String,
    },
    /// Enumerate models of one order up to isomorphism.
    Search {
        #[arg(long)]
        order: usize,
        /// Comma-separated axioms or classes that must hold.
        #[arg(long, default_value = "")]
        satisfy: String,
        /// Comma-separated axioms or classes that must each fail.
        #[arg(long, default_value = "")]
        refute: String,
        #[arg(long)]
        max_models: Option<usize>,
        /// Time budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Report every normalized table instead of one per isomorphism class.
        #[arg(long)]
        all_labelings: bool,
    },
    /// Find the smallest model satisfying and refuting the given requirements.
    /// Exits 1 if none is found.
    Counterexample {
        #[arg(long, default_value = "")]
        satisfy: String,
        #[arg(long, default_value = "")]
        refute: String,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Test two algebras for isomorphism. Exits 1 if they are not isomorphic.
    Iso { first: String, second: String },
    /// Ideals, filters and meanders of the product form.
    Structures {
        file: String,
        #[command(subcommand)]
        query: Query,
    },
}

#[derive(Subcommand)]
enum Query {
    /// Every q-ideal and its first meander.
    Ideals,
    /// Every filter.
    Filters,
    /// The first meander of a subset.
    Meander {
        /// Comma-separated element names or indices.
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
    },
}

/// An error that maps to exit code 2.
struct Failure(String);

impl<E: fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn load(file: &str) -> Result<ParsedAlgebra, Failure> {
    let path = PathBuf::from(file);
    let bytes = match std::fs::read(&path) {
        Ok(b) => b,
        Err(e) => match fixtures::source(file) {
            Some(src) => src.as_bytes().to_vec(),
            None => return Err(Failure(format!("{file}: {e}"))),
        },
    };
    parse_bytes(&bytes).map_err(|e| Failure(format!("{file}: {e}")))
}

fn implication(file: &str) -> Result<FiniteAlgebra, Failure> {
    match load(file)? {
        ParsedAlgebra::Implication(a) => Ok(a),
        ParsedAlgebra::Product(p) => {
            Ok(to_implication(&p).map_err(|e| Failure(format!("{file}: {e}")))?)
        }
    }
}

fn product(file: &str) -> Result<ProductAlgebra, Failure> {
    match load(file)? {
        ParsedAlgebra::Product(p) => Ok(p),
        ParsedAlgebra::Implication(a) => {
            Ok(to_product(&a).map_err(|e| Failure(format!("{file}: {e}")))?)
        }
    }
}

fn requirements(list: &str) -> Result<Vec<Requirement>, Failure> {
    Ok(parse_requirements(list)?)
}

fn budget(seconds: Option<f64>) -> Result<Option<Duration>, Failure> {
    seconds
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| Failure(format!("invalid budget {s}"))))
        .transpose()
}

fn run(cli: &Cli) -> Result<ReportDocument, Failure> {
    Ok(match &cli.command {
        Command::Check { file, axioms } => {
            let a = implication(file)?;
            let mut ids: Vec<AxiomId> = Vec::new();
            for name in axioms {
                let r: Requirement = name.parse()?;
                ids.extend(
                    r.axioms()
                        .iter()
                        .filter(|x| !ids.contains(x))
                        .collect::<Vec<_>>(),
                );
            }
            report::check(&a, &ids)?
        }
        Command::Classify { file } => report::classify(&implication(file)?)?,
        Command::Derive { file } => report::derive(&implication(file)?),
        Command::Verify { file, theorems } => report::verify(&implication(file)?, theorems)?,
        Command::Transform { file, to } => {
            let to: Signature = to.parse()?;
            report::transform(&load(file)?, to)?
        }
        Command::Search {
            order,
            satisfy,
            refute,
            max_models,
            budget: seconds,
            all_labelings,
        } => {
            let satisfy = requirements(satisfy)?;
            let refute = requirements(refute)?;
            let mut config = SearchConfig::new(*order)
                .satisfy(satisfy.iter().copied())
                .refute(refute.iter().copied());
            config.max_models = *max_models;
            config.time_budget = budget(*seconds)?;
            config.canonical_only = !all_labelings;
            config.threads = cli.threads;
            let stream = enumerate(&config)?;
            report::search(&stream, &satisfy, &refute)?
        }
        Command::Counterexample {
            satisfy,
            refute,
            max_order,
            budget: seconds,
        } => {
            let satisfy = requirements(satisfy)?;
            let refute = requirements(refute)?;
            let mut template = SearchConfig::new(1)
                .satisfy(satisfy.iter().copied())
                .refute(refute.iter().copied());
            template.time_budget = budget(*seconds)?;
            template.threads = cli.threads;
            template.validate()?;
            let found = find_counterexample_with(&template, *max_order)?;
            report::counterexample(&found, &satisfy, &refute)?
        }
        Command::Iso { first, second } => report::iso(&implication(first)?, &implication(second)?)?,
        Command::Structures { file, query } => {
            let p = product(file)?;
            let query = match query {
                Query::Ideals => StructureQuery::Ideals,
                Query::Filters => StructureQuery::Filters,
                Query::Meander { set } => StructureQuery::Meander(set.clone()),
            };
            report::structures(&p, &query)?
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(doc) => {
            if cli.json {
                println!("{}", doc.to_json());
            } else {
                print!("{doc}");
            }
            if doc.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("qwalg: {msg}");
            ExitCode::from(2)
        }
    }
}
