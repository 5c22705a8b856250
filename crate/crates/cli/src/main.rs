use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::complex::Complex64;

use yhlink::adelic::DivisorChain;
use yhlink::Error;
use yhlink_cli::{exit_code, parse_subset, run, BraidSource, Command, Format, JobSpec, Suite, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "yhlink", version, about = "Framed link invariants from Yokonuma-Hecke algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Relations,
    Markov,
    Skein,
    Esystem,
    AdelicCoherence,
    All,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Braid word, e.g. "3: 1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// File with one `name;braidword` record per line.
    #[arg(long)]
    corpus: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the invariant of a braid closure.
    Invariant {
        #[arg(long)]
        d: u32,
        /// Comma separated subset of Z/d, e.g. 0,2.
        #[arg(long)]
        subset: String,
        #[command(flatten)]
        source: Source,
        /// Evaluate numerically at this u (complex, e.g. 0.5+1i).
        #[arg(long, requires = "eval_z", allow_hyphen_values = true)]
        eval_u: Option<String>,
        #[arg(long, requires = "eval_u", allow_hyphen_values = true)]
        eval_z: Option<String>,
    },
    /// Markov trace of a braid, generic or specialized at a subset.
    Trace {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        subset: Option<String>,
        #[command(flatten)]
        source: Source,
    },
    /// Solutions of the E-system coming from subsets of Z/d.
    Esystem {
        #[arg(long)]
        d: u32,
        #[arg(long, conflicts_with = "subset")]
        enumerate: bool,
        #[arg(long, required_unless_present = "enumerate")]
        subset: Option<String>,
    },
    /// Run a property suite with seeded random inputs.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, env = "YHLINK_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random samples per check group.
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Per-level invariants along a divisor chain, as a JSON array.
    Adelic {
        /// e.g. 2,4,8
        #[arg(long)]
        chain: String,
        #[arg(long)]
        subset: String,
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
    },
}

fn complex(flag: &str, s: &str) -> Result<Complex64, Error> {
    Complex64::from_str(s.trim()).map_err(|_| Error::Invalid(format!("--{flag}: malformed complex number '{s}'")))
}

fn source(s: Source) -> Result<BraidSource, Error> {
    match (s.braid, s.corpus) {
        (Some(w), _) => Ok(BraidSource::Inline(w)),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
            Ok(BraidSource::Corpus { path, text })
        }
        (None, None) => Err(Error::Invalid("one of --braid or --corpus is required".into())),
    }
}

fn job(cli: Cli) -> Result<JobSpec, Error> {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let command = match cli.command {
        Cmd::Invariant { d, subset, source: src, eval_u, eval_z } => {
            let eval = match (eval_u, eval_z) {
                (Some(u), Some(z)) => Some((complex("eval-u", &u)?, complex("eval-z", &z)?)),
                _ => None,
            };
            Command::Invariant { d, subset: parse_subset(&subset)?, source: source(src)?, eval }
        }
        Cmd::Trace { d, subset, source: src } => {
            Command::Trace { d, subset: subset.as_deref().map(parse_subset).transpose()?, source: source(src)? }
        }
        Cmd::Esystem { d, enumerate, subset } => {
            let subset = if enumerate { None } else { subset.as_deref().map(parse_subset).transpose()? };
            Command::Esystem { d, subset }
        }
        Cmd::Verify { suite, seed, count } => {
            let suite = match suite {
                SuiteArg::Relations => Suite::Relations,
                SuiteArg::Markov => Suite::Markov,
                SuiteArg::Skein => Suite::Skein,
                SuiteArg::Esystem => Suite::Esystem,
                SuiteArg::AdelicCoherence => Suite::AdelicCoherence,
                SuiteArg::All => Suite::All,
            };
            Command::Verify { suite, seed, count }
        }
        Cmd::Adelic { chain, subset, braid } => {
            Command::Adelic { chain: DivisorChain::from_str(&chain)?, subset: parse_subset(&subset)?, braid }
        }
    };
    Ok(JobSpec { command, format })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let out = match job(cli) {
        Ok(spec) => run(&spec),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e) as u8);
        }
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
