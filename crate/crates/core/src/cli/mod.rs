//! Input parsing and the command-line front end.

mod parse;

pub use parse::{parse_polynomial, parse_system, ParseError, ParseErrorKind, System};

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::arith::{MonomialOrder, Polynomial};
use crate::engine::{self, Algorithm, EngineConfig, EngineError, ReductionConfig};
use crate::oracle;
use crate::pairs::SelectionStrategy;
use crate::signatures::ModuleOrderKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_LOOP_LIMIT: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Buchberger,
    F5b,
    F5m,
    F5top,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grlex,
    Grevlex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Grlex => MonomialOrder::Grlex,
            OrderArg::Grevlex => MonomialOrder::Grevlex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    MindegMaxpair,
    Minpair,
    Fifo,
}

impl From<StrategyArg> for SelectionStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::MindegMaxpair => SelectionStrategy::MinDegMaxPair,
            StrategyArg::Minpair => SelectionStrategy::MinPair,
            StrategyArg::Fifo => SelectionStrategy::Fifo,
        }
    }
}

/// Compute a Groebner basis of a polynomial system.
#[derive(Debug, Parser)]
#[command(name = "f5b", version)]
pub struct Cli {
    /// System file; `-` reads standard input.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "f5b")]
    pub algorithm: AlgorithmArg,
    /// Overrides the order given in the file.
    #[arg(long, value_enum)]
    pub order: Option<OrderArg>,
    #[arg(long, value_enum, default_value = "mindeg-maxpair")]
    pub strategy: StrategyArg,
    /// Print the reduced Groebner basis instead of the raw output.
    #[arg(long)]
    pub reduce_output: bool,
    /// Write one JSON record per main-loop selection to this file.
    #[arg(long, value_name = "PATH")]
    pub trace: Option<PathBuf>,
    /// Reduce every rejected pair by the final basis (f5m only).
    #[arg(long)]
    pub verify_rejected: bool,
    /// Print criterion and reduction counters.
    #[arg(long)]
    pub stats: bool,
    /// Disable conditions 3 and 4 of F5-reduction.
    #[arg(long)]
    pub no_cond34: bool,
    #[arg(long, value_name = "N", default_value_t = 1_000_000)]
    pub max_loops: usize,
}

fn input_error(err: &mut dyn Write, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_INPUT
}

fn read_input(path: &PathBuf) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

/// Parses `args` (program name first) and runs; returns the exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let text = match read_input(&cli.input) {
        Ok(t) => t,
        Err(e) => return input_error(err, format_args!("{}: {e}", cli.input.display())),
    };
    execute(&cli, &text, out, err)
}

/// Runs a parsed command line on the contents of a system file.
pub fn execute(cli: &Cli, text: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if cli.verify_rejected && cli.algorithm != AlgorithmArg::F5m {
        return input_error(err, "--verify-rejected needs --algorithm f5m");
    }
    if cli.algorithm == AlgorithmArg::Buchberger {
        for (set, flag) in [(cli.trace.is_some(), "--trace"), (cli.stats, "--stats"), (cli.no_cond34, "--no-cond34")] {
            if set {
                return input_error(err, format_args!("{flag} is not available with --algorithm buchberger"));
            }
        }
    }
    let system = match parse_system(text) {
        Ok(s) => s,
        Err(e) => return input_error(err, format_args!("{}: {e}", cli.input.display())),
    };
    let generators: Vec<Polynomial> = match cli.order {
        Some(o) => {
            let ring = system.ring.with_order(o.into());
            system.generators.iter().map(|f| f.with_ring(&ring).expect("same variables")).collect()
        }
        None => system.generators,
    };

    let basis = match cli.algorithm {
        AlgorithmArg::Buchberger => oracle::buchberger(&generators),
        _ => {
            let cfg = EngineConfig {
                algorithm: if cli.algorithm == AlgorithmArg::F5m { Algorithm::F5m } else { Algorithm::F5b },
                mode: if cli.algorithm == AlgorithmArg::F5top { ModuleOrderKind::Top } else { ModuleOrderKind::Pot },
                strategy: cli.strategy.into(),
                reduction: ReductionConfig { cond3: !cli.no_cond34, cond4: !cli.no_cond34, ..ReductionConfig::default() },
                max_loops: cli.max_loops,
                ..EngineConfig::default()
            };
            let result = match engine::run(&generators, &cfg) {
                Ok(r) => r,
                Err(e @ EngineError::LoopLimit { .. }) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_LOOP_LIMIT;
                }
                Err(e) => return input_error(err, e),
            };
            if let Some(path) = &cli.trace {
                let written = fs::File::create(path)
                    .and_then(|f| engine::write_jsonl(&result.trace, io::BufWriter::new(f)));
                if let Err(e) = written {
                    return input_error(err, format_args!("{}: {e}", path.display()));
                }
            }
            let basis = result.polynomials();
            let basis = if cli.reduce_output { oracle::reduced_gb(&basis) } else { basis };
            for f in &basis {
                let _ = writeln!(out, "{f}");
            }
            if cli.stats {
                let _ = write!(out, "\n{}", engine::collect_stats(&result).to_block());
            }
            if cli.verify_rejected {
                let report = engine::verify_rejected(&result);
                let _ = writeln!(out, "\n{}", report.summary());
                if !report.all_zero() {
                    for p in report.pairs.iter().filter(|p| !p.reduces_to_zero()) {
                        let _ = writeln!(
                            err,
                            "rejected pair {} does not reduce to 0: remainder {}",
                            p.pair.display(),
                            p.reduction.output.poly
                        );
                    }
                    return EXIT_VERIFY;
                }
            }
            return EXIT_OK;
        }
    };
    let basis = if cli.reduce_output { oracle::reduced_gb(&basis) } else { basis };
    for f in &basis {
        let _ = writeln!(out, "{f}");
    }
    EXIT_OK
}
