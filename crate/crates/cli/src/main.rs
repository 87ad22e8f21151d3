use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wpn_core::oracle::{count_binary_pn_with_bound, verify_suite, SuiteConfig, BINARY_PN_BOUND, SUITES};
use wpn_core::{
    classify, equivalence_class, pn_set, prefix_normal_form, profile, WeightMeasure, Word, DEFAULT_LIMIT,
};

mod render;

#[derive(Parser)]
#[command(name = "wpn", version, about = "Weighted prefix normal words")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Lines,
}

#[derive(Subcommand)]
enum Command {
    /// Print every classification flag of a measure, including a gap witness.
    Classify {
        measure: PathBuf,
        /// Word-length bound of the brute-force cross-check.
        #[arg(long, default_value_t = 6)]
        check_len: usize,
    },
    /// Print the prefix-weight and factor-weight functions of a word.
    Weights { measure: PathBuf, word: String },
    /// Print the prefix normal form of a word.
    Pnf { measure: PathBuf, word: String },
    /// Print the factor-weight equivalence class of a word.
    Class {
        measure: PathBuf,
        word: String,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u64,
    },
    /// Print the prefix normal words equivalent to a word.
    Pnset {
        measure: PathBuf,
        word: String,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u64,
    },
    /// Run a verification suite; `all` runs every suite.
    Verify {
        suite: String,
        #[arg(long, env = "WPN_SEED", default_value_t = SuiteConfig::default().seed)]
        seed: u64,
        #[arg(long)]
        max_len: Option<usize>,
        /// Randomised cases for the per-word suites.
        #[arg(long)]
        cases: Option<usize>,
        /// Corpus size for the per-measure suites.
        #[arg(long)]
        measures: Option<usize>,
    },
    /// Count prefix normal binary words of length n.
    CountBinaryPn {
        n: usize,
        #[arg(long, default_value_t = BINARY_PN_BOUND)]
        bound: usize,
    },
}

/// An exit status with its message: 1 for domain errors, 2 for usage and
/// parse errors.
struct Failure {
    code: u8,
    message: String,
}

impl From<wpn_core::Error> for Failure {
    fn from(e: wpn_core::Error) -> Self {
        Failure {
            code: if e.is_usage() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn load(path: &Path) -> Result<WeightMeasure, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    WeightMeasure::parse(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_with_word(path: &Path, word: &str) -> Result<(WeightMeasure, Word), Failure> {
    let m = load(path)?;
    let w = m.alphabet().parse_word(word)?;
    Ok((m, w))
}

/// Returns the rendered output and whether the run counts as a success.
fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let format = cli.format;
    let out = match cli.command {
        Command::Classify { measure, check_len } => {
            let m = load(&measure)?;
            render::classification(&m, &classify(&m, check_len), format)
        }
        Command::Weights { measure, word } => {
            let (m, w) = load_with_word(&measure, &word)?;
            render::weights(&m, &profile(&m, &w), format)
        }
        Command::Pnf { measure, word } => {
            let (m, w) = load_with_word(&measure, &word)?;
            render::normal_form(&m, &prefix_normal_form(&m, &w), format)
        }
        Command::Class { measure, word, limit } => {
            let (m, w) = load_with_word(&measure, &word)?;
            render::words(&m, &equivalence_class(&m, &w, limit)?, format)
        }
        Command::Pnset { measure, word, limit } => {
            let (m, w) = load_with_word(&measure, &word)?;
            render::words(&m, &pn_set(&m, &w, limit)?, format)
        }
        Command::Verify {
            suite,
            seed,
            max_len,
            cases,
            measures,
        } => {
            let mut config = SuiteConfig::with_seed(seed);
            config.max_len = max_len;
            config.cases = cases.unwrap_or(config.cases);
            config.measures = measures.unwrap_or(config.measures);
            let ids: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut out = String::new();
            let mut passed = true;
            for id in ids {
                let report = verify_suite(id, &config)?;
                passed &= report.passed();
                out.push_str(&match format {
                    Format::Text => report.render_text(),
                    Format::Lines => report.render_lines(),
                });
            }
            return Ok((out, passed));
        }
        Command::CountBinaryPn { n, bound } => {
            let count = count_binary_pn_with_bound(n, bound)?;
            match format {
                Format::Text => format!("{count}\n"),
                Format::Lines => format!("COUNT {n} {count}\n"),
            }
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, passed)) => {
            let _ = io::stdout().write_all(out.as_bytes());
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("wpn: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
