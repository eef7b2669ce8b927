use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use defeasible_alc::oracle::{OracleConfig, DEFAULT_MAX_ATOMS, DEFAULT_MAX_DOMAIN};
use defeasible_alc::report::{self, exit_code, CliResult, Engine, Limits, Method};
use defeasible_alc::tableau::DEFAULT_MAX_EXPANSIONS;
use defeasible_alc::{parse_concept, parse_kb, parse_query, Error};

/// Defeasible reasoning over ALC knowledge bases with typicality inclusions.
#[derive(Parser)]
#[command(name = "defeasible-alc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse the KB and check ABox consistency.
    Check {
        #[command(flatten)]
        common: Common,
    },
    /// Rank of a concept, with the strata of the TBox.
    Rank {
        #[command(flatten)]
        common: Common,
        concept: String,
    },
    /// Decide a query `C <= D` or `T(C) <= D`.
    Entails {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "rc")]
        method: Method,
        /// Print every base and its verdict (mp and lex).
        #[arg(long)]
        explain: bool,
        query: String,
    },
    /// List the maximal bases for a concept.
    Bases {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "mp")]
        method: Method,
        concept: String,
    },
}

#[derive(Args)]
struct Common {
    kb_file: PathBuf,
    #[arg(long)]
    json: bool,
    /// Tableau expansion budget.
    #[arg(long, env = "DEFEASIBLE_ALC_MAX_NODES", default_value_t = DEFAULT_MAX_EXPANSIONS)]
    max_nodes: usize,
    /// Atom bound of the oracle methods.
    #[arg(long, default_value_t = DEFAULT_MAX_ATOMS)]
    max_atoms: usize,
    /// Domain bound of the oracle methods.
    #[arg(long, default_value_t = DEFAULT_MAX_DOMAIN)]
    max_domain: usize,
}

impl Common {
    fn limits(&self) -> Limits {
        Limits {
            max_nodes: self.max_nodes,
            oracle: OracleConfig {
                max_atoms: self.max_atoms,
                max_domain: self.max_domain,
                ..OracleConfig::default()
            },
        }
    }
}

enum Failure {
    Io(String),
    Reasoning(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Reasoning(e)
    }
}

fn run(command: &Command) -> Result<(CliResult, bool), Failure> {
    let common = match command {
        Command::Check { common }
        | Command::Rank { common, .. }
        | Command::Entails { common, .. }
        | Command::Bases { common, .. } => common,
    };
    let text = std::fs::read_to_string(&common.kb_file)
        .map_err(|e| Failure::Io(format!("{}: {e}", common.kb_file.display())))?;
    let kb = parse_kb(&text)?;
    let limits = common.limits();
    let result = match command {
        Command::Check { .. } => report::check(&kb, &limits)?,
        Command::Rank { concept, .. } => {
            let c = parse_concept(concept)?;
            Engine::new(kb, limits)?.rank(&c)?
        }
        Command::Entails {
            method,
            explain,
            query,
            ..
        } => {
            let q = parse_query(query)?;
            let mut r = Engine::new(kb, limits)?.entails(*method, &q)?;
            r.explain = *explain;
            r
        }
        Command::Bases {
            method, concept, ..
        } => {
            let c = parse_concept(concept)?;
            Engine::new(kb, limits)?.bases(*method, &c)?
        }
    };
    Ok((result, common.json))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli.command) {
        Ok((mut result, json)) => {
            result.elapsed_ms = start.elapsed().as_millis() as u64;
            if json {
                println!("{}", result.to_json());
            } else {
                print!("{result}");
            }
            if result.abox_consistent == Some(false) {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Reasoning(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
