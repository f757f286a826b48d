//! The `leftcorner` command line.
//!
//! ```text
//! leftcorner validate <file>
//! leftcorner relations <file>
//! leftcorner recognize --algo <lc|plr|elr|pseudo-elr|cp> [--trace] [--budget N] <file> -- <tokens>...
//! leftcorner table --algo <cp|cp-nofilter|elr|elr-si|elr-naive> <file> -- <tokens>...
//! leftcorner compare [--oracle] <file> -- <tokens>...
//! leftcorner sentences --max N <file>
//! ```
//!
//! Exit codes: 0 accepted or ok, 1 rejected, 2 usage or grammar error,
//! 3 search budget exhausted.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::automata::{explore, Algorithm, DEFAULT_BUDGET};
use crate::error::Error;
use crate::grammar::{augment_with, parse_grammar, validate, AugmentedGrammar};
use crate::oracle;
use crate::render::render_trace;
use crate::tabular::{tabular_cp, tabular_elr, ElrVariant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn error(message: impl std::fmt::Display) -> Self {
        CommandOutput {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "leftcorner", version, about = "Left-corner family recognizers and charts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgoArg {
    Lc,
    Plr,
    Elr,
    PseudoElr,
    Cp,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Lc => Algorithm::Lc,
            AlgoArg::Plr => Algorithm::Plr,
            AlgoArg::Elr => Algorithm::Elr,
            AlgoArg::PseudoElr => Algorithm::PseudoElr,
            AlgoArg::Cp => Algorithm::Cp,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableArg {
    Cp,
    CpNofilter,
    Elr,
    ElrSi,
    ElrNaive,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a grammar file and list its diagnostics.
    Validate {
        file: PathBuf,
        #[arg(long)]
        allow_cyclic: bool,
    },
    /// Print the left-corner relation and its reflexive-transitive closure.
    Relations {
        file: PathBuf,
        #[arg(long)]
        allow_cyclic: bool,
    },
    /// Run one automaton on the tokens after `--`.
    Recognize {
        #[arg(long, value_enum)]
        algo: AlgoArg,
        /// Print one accepting run.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        allow_cyclic: bool,
        file: PathBuf,
        #[arg(last = true)]
        tokens: Vec<String>,
    },
    /// Print the chart of a tabular algorithm.
    Table {
        #[arg(long, value_enum)]
        algo: TableArg,
        file: PathBuf,
        #[arg(last = true)]
        tokens: Vec<String>,
    },
    /// Run every automaton and chart on the same input and tabulate the
    /// counters.
    Compare {
        /// Add a row for the brute-force oracle and check agreement.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        file: PathBuf,
        #[arg(last = true)]
        tokens: Vec<String>,
    },
    /// List every sentence of at most N tokens.
    Sentences {
        #[arg(long)]
        max: usize,
        file: PathBuf,
    },
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandOutput {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match cli.command {
        Command::Validate { file, allow_cyclic } => cmd_validate(&file, allow_cyclic),
        Command::Relations { file, allow_cyclic } => with_grammar(&file, allow_cyclic, cmd_relations),
        Command::Recognize {
            algo,
            trace,
            budget,
            allow_cyclic,
            file,
            tokens,
        } => with_grammar(&file, allow_cyclic, |g| {
            cmd_recognize(g, algo.into(), trace, budget, &tokens)
        }),
        Command::Table { algo, file, tokens } => with_grammar(&file, false, |g| cmd_table(g, algo, &tokens)),
        Command::Compare {
            oracle,
            budget,
            file,
            tokens,
        } => with_grammar(&file, false, |g| cmd_compare(g, oracle, budget, &tokens)),
        Command::Sentences { max, file } => with_grammar(&file, false, |g| cmd_sentences(g, max)),
    }
}

fn read(file: &Path) -> Result<String, CommandOutput> {
    std::fs::read_to_string(file)
        .map_err(|e| CommandOutput::error(format!("cannot read {}: {e}", file.display())))
}

fn with_grammar(
    file: &Path,
    allow_cyclic: bool,
    f: impl FnOnce(&AugmentedGrammar) -> CommandOutput,
) -> CommandOutput {
    let text = match read(file) {
        Ok(t) => t,
        Err(out) => return out,
    };
    let grammar = match parse_grammar(&text) {
        Ok(g) => g,
        Err(e) => return CommandOutput::error(format!("{}: {e}", file.display())),
    };
    match augment_with(&grammar, allow_cyclic) {
        Ok(g) => f(&g),
        Err(e) => {
            let mut out = CommandOutput::error(format!("{}: {e}", file.display()));
            for d in validate(&grammar).errors() {
                let _ = writeln!(out.stderr, "  {d}");
            }
            out
        }
    }
}

fn cmd_validate(file: &Path, allow_cyclic: bool) -> CommandOutput {
    let text = match read(file) {
        Ok(t) => t,
        Err(out) => return out,
    };
    let grammar = match parse_grammar(&text) {
        Ok(g) => g,
        Err(e) => return CommandOutput::error(format!("{}: {e}", file.display())),
    };
    let report = validate(&grammar);
    let mut out = CommandOutput::default();
    let mut failed = false;
    for d in &report.diagnostics {
        let tolerated = allow_cyclic && d.code == crate::grammar::DiagnosticCode::UnitCycle;
        let level = if d.code.is_error() && !tolerated {
            failed = true;
            "error"
        } else {
            "warning"
        };
        let _ = writeln!(out.stdout, "{level}: {d}");
    }
    if failed {
        out.code = EXIT_ERROR;
    } else {
        out.stdout.push_str("ok\n");
    }
    out
}

fn cmd_relations(g: &AugmentedGrammar) -> CommandOutput {
    let mut out = CommandOutput::default();
    out.stdout.push_str("# left-corner\n");
    for line in g.left_corner_relation().render(g) {
        let _ = writeln!(out.stdout, "{line}");
    }
    out.stdout.push_str("# reflexive-transitive closure\n");
    for line in g.left_corner_star_relation().render(g) {
        let _ = writeln!(out.stdout, "{line}");
    }
    out
}

fn cmd_recognize(g: &AugmentedGrammar, algo: Algorithm, trace: bool, budget: usize, tokens: &[String]) -> CommandOutput {
    let input = match g.tokenize(tokens) {
        Ok(i) => i,
        Err(e) => return CommandOutput::error(e),
    };
    let exploration = match explore(algo, g, tokens, budget) {
        Ok(x) => x,
        Err(e) => return CommandOutput::error(e),
    };
    let r = exploration.result;
    if r.budget_exhausted {
        return CommandOutput {
            code: EXIT_BUDGET,
            stdout: String::new(),
            stderr: format!("error: {}\n", Error::BudgetExhausted { budget }),
        };
    }
    let mut out = CommandOutput::default();
    if trace {
        if let Some(t) = exploration.accepting_trace() {
            for line in render_trace(g, &input, &t) {
                let _ = writeln!(out.stdout, "{line}");
            }
        }
    }
    let _ = writeln!(
        out.stdout,
        "algo={} accepted={} configurations={} max_frontier={} choice_points={}",
        algo, r.accepted, r.configurations_explored, r.max_frontier, r.choice_points
    );
    out.code = if r.accepted { EXIT_OK } else { EXIT_REJECTED };
    out
}

fn cmd_table(g: &AugmentedGrammar, algo: TableArg, tokens: &[String]) -> CommandOutput {
    let result = match algo {
        TableArg::Cp => tabular_cp(g, tokens, true).map(|r| (r.dump(g), r.accepted)),
        TableArg::CpNofilter => tabular_cp(g, tokens, false).map(|r| (r.dump(g), r.accepted)),
        TableArg::Elr => tabular_elr(g, tokens, ElrVariant::Merged).map(|r| (r.dump(g), r.accepted)),
        TableArg::ElrSi => tabular_elr(g, tokens, ElrVariant::PredictSets).map(|r| (r.dump(g), r.accepted)),
        TableArg::ElrNaive => tabular_elr(g, tokens, ElrVariant::Naive).map(|r| (r.dump(g), r.accepted)),
    };
    match result {
        Ok((dump, accepted)) => CommandOutput {
            code: if accepted { EXIT_OK } else { EXIT_REJECTED },
            stdout: dump,
            stderr: String::new(),
        },
        Err(e) => CommandOutput::error(e),
    }
}

struct Row {
    algo: String,
    accepted: bool,
    explored: String,
    choice_points: String,
    duplicates: String,
}

fn cmd_compare(g: &AugmentedGrammar, with_oracle: bool, budget: usize, tokens: &[String]) -> CommandOutput {
    if let Err(e) = g.tokenize(tokens) {
        return CommandOutput::error(e);
    }
    let mut rows = Vec::new();
    for algo in Algorithm::ALL {
        let x = match explore(algo, g, tokens, budget) {
            Ok(x) => x,
            Err(e) => return CommandOutput::error(e),
        };
        if x.result.budget_exhausted {
            return CommandOutput {
                code: EXIT_BUDGET,
                stdout: String::new(),
                stderr: format!("error: {algo}: {}\n", Error::BudgetExhausted { budget }),
            };
        }
        rows.push(Row {
            algo: algo.name().to_string(),
            accepted: x.result.accepted,
            explored: x.result.configurations_explored.to_string(),
            choice_points: x.result.choice_points.to_string(),
            duplicates: "-".into(),
        });
    }
    for filter in [true, false] {
        let r = tabular_cp(g, tokens, filter).expect("tokens already checked");
        rows.push(Row {
            algo: format!("table:{}", r.algorithm),
            accepted: r.accepted,
            explored: r.items_added.to_string(),
            choice_points: "-".into(),
            duplicates: "-".into(),
        });
    }
    for variant in ElrVariant::ALL {
        let r = tabular_elr(g, tokens, variant).expect("tokens already checked");
        rows.push(Row {
            algo: format!("table:{}", r.algorithm),
            accepted: r.accepted,
            explored: r.items_added.to_string(),
            choice_points: "-".into(),
            duplicates: if variant == ElrVariant::Naive {
                r.duplicate_prefix_cells().len().to_string()
            } else {
                "-".into()
            },
        });
    }
    if with_oracle {
        match oracle::derives(g, tokens) {
            Ok(accepted) => rows.push(Row {
                algo: "oracle".into(),
                accepted,
                explored: "-".into(),
                choice_points: "-".into(),
                duplicates: "-".into(),
            }),
            Err(e) => return CommandOutput::error(e),
        }
    }

    let mut out = CommandOutput::default();
    let _ = writeln!(
        out.stdout,
        "{:<18} {:<9} {:>10} {:>14} {:>16}",
        "algo", "accepted", "explored", "choice_points", "duplicate_cells"
    );
    for r in &rows {
        let _ = writeln!(
            out.stdout,
            "{:<18} {:<9} {:>10} {:>14} {:>16}",
            r.algo, r.accepted, r.explored, r.choice_points, r.duplicates
        );
    }
    let accepted = rows[0].accepted;
    if rows.iter().any(|r| r.accepted != accepted) {
        out.stderr.push_str("error: algorithms disagree\n");
        out.code = EXIT_ERROR;
    } else {
        out.code = if accepted { EXIT_OK } else { EXIT_REJECTED };
    }
    out
}

fn cmd_sentences(g: &AugmentedGrammar, max: usize) -> CommandOutput {
    match oracle::sentences_up_to(g, max) {
        Ok(sentences) => {
            let mut out = CommandOutput::default();
            for s in sentences {
                let _ = writeln!(out.stdout, "{}", s.join(" "));
            }
            out
        }
        Err(e) => CommandOutput::error(e),
    }
}
