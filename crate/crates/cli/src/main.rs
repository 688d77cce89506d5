//! `delaygame`: solve, decide, simulate and refute delay games from the shell.
//!
//! Verdicts are reported on standard output with exit code 0; non-zero exit
//! codes are reserved for operational failures (1 usage, 2 parse or
//! validation, 3 resource guard).

mod load;
mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use delaygames::delay::DelayFunction;
use delaygames::examples::{self, ExampleId};
use delaygames::harness::{
    lasso_verify, refute_separation, replay_play, Refutation, RefuteOptions, Separation,
};
use delaygames::solvers::{decide_omnipotent_ht_i, decide_omnipotent_rc_o, solve_delay_free};
use delaygames::strategy::{uniformity_check, Strategy};
use delaygames::{harness, Player};
use serde_json::json;

use load::{load_condition, load_dpa, load_skip_oracle, load_strategy};
use output::{play_json, print_play, print_report, Format};

#[derive(Parser)]
#[command(name = "delaygame", version, about = "Delay games with parity winning conditions")]
struct Cli {
    /// Output format of the report.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlayerArg {
    #[value(name = "I")]
    I,
    #[value(name = "O")]
    O,
}

impl From<PlayerArg> for Player {
    fn from(p: PlayerArg) -> Player {
        match p {
            PlayerArg::I => Player::I,
            PlayerArg::O => Player::O,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve the delay-free game and optionally write O's winning r.c. strategy.
    SolveDelayFree {
        /// Parity automaton file, or `builtin:<example>`.
        #[arg(long)]
        dpa: String,
        #[arg(long, value_name = "OUT")]
        emit_strategy: Option<PathBuf>,
    },
    /// Decide whether a player has an omnipotent strategy.
    Decide {
        #[arg(long, value_enum, ignore_case = true)]
        player: PlayerArg,
        #[arg(long)]
        dpa: String,
        /// Largest constant lookahead searched when deciding for player I.
        #[arg(long, default_value_t = 4)]
        max_lookahead: usize,
        /// Certify that the lookahead bound suffices, making negative answers conclusive.
        #[arg(long)]
        conclusive_bound: bool,
        /// Write O's witness strategy, when there is one.
        #[arg(long, value_name = "OUT")]
        emit_strategy: Option<PathBuf>,
    },
    /// Play two strategies against each other.
    Simulate {
        /// Parity automaton or monitor file, or `builtin:<example>`.
        #[arg(long)]
        dpa: String,
        #[arg(long)]
        strat_i: String,
        #[arg(long)]
        strat_o: String,
        /// Delay function, e.g. `2,1;1`.
        #[arg(long, value_parser = parse_delay)]
        f: DelayFunction,
        #[arg(long)]
        rounds: usize,
    },
    /// Search for a delay function and opponent behaviour that beat a strategy.
    Refute {
        #[arg(long, value_parser = parse_separation)]
        example: Separation,
        /// Mealy strategy file, or `builtin:<example>`.
        #[arg(long)]
        strategy: String,
        #[arg(long, default_value_t = RefuteOptions::default().max_first_delay)]
        max_first_delay: usize,
        #[arg(long, default_value_t = RefuteOptions::default().max_moves)]
        max_moves: usize,
        #[arg(long, default_value_t = RefuteOptions::default().horizon)]
        horizon: usize,
    },
    /// Bounded uniformity check of a skip-game strategy (an h.t. machine).
    CheckUniform {
        #[arg(long)]
        strategy: String,
        #[arg(long)]
        depth: usize,
    },
    /// List or export the built-in examples.
    #[command(subcommand)]
    Examples(ExamplesCommand),
}

#[derive(Subcommand)]
enum ExamplesCommand {
    List,
    Export {
        #[arg(value_parser = parse_example)]
        id: ExampleId,
        dir: PathBuf,
    },
}

fn parse_delay(s: &str) -> Result<DelayFunction, String> {
    s.parse().map_err(|e: delaygames::Error| e.to_string())
}

fn parse_separation(s: &str) -> Result<Separation, String> {
    s.parse().map_err(|e: delaygames::Error| e.to_string())
}

fn parse_example(s: &str) -> Result<ExampleId, String> {
    s.parse().map_err(|e: delaygames::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let guard = e
                .chain()
                .filter_map(|c| c.downcast_ref::<delaygames::Error>())
                .any(|c| c.is_resource_guard());
            ExitCode::from(if guard { 3 } else { 2 })
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let format = cli.format;
    match &cli.command {
        Command::SolveDelayFree { dpa, emit_strategy } => {
            let a = load_dpa(dpa)?;
            let report = solve_delay_free(&a);
            let written = emit(emit_strategy.as_deref(), report.witness.as_ref())?;
            print_report(format, &report.record(written));
        }
        Command::Decide {
            player,
            dpa,
            max_lookahead,
            conclusive_bound,
            emit_strategy,
        } => {
            let a = load_dpa(dpa)?;
            let report = match Player::from(*player) {
                Player::I => decide_omnipotent_ht_i(&a, *max_lookahead, *conclusive_bound)?,
                Player::O => decide_omnipotent_rc_o(&a),
            };
            let written = emit(emit_strategy.as_deref(), report.witness.as_ref())?;
            print_report(format, &report.record(written));
        }
        Command::Simulate {
            dpa,
            strat_i,
            strat_o,
            f,
            rounds,
        } => simulate(format, dpa, strat_i, strat_o, f, *rounds)?,
        Command::Refute {
            example,
            strategy,
            max_first_delay,
            max_moves,
            horizon,
        } => {
            let opts = RefuteOptions {
                max_first_delay: *max_first_delay,
                max_moves: *max_moves,
                horizon: *horizon,
                ..RefuteOptions::default()
            };
            refute(format, *example, strategy, &opts)?
        }
        Command::CheckUniform { strategy, depth } => {
            let (tau, output) = load_skip_oracle(strategy)?;
            let result = uniformity_check(&tau, &output, *depth)?;
            output::print_uniformity(format, &result, &output, *depth);
        }
        Command::Examples(ExamplesCommand::List) => {
            output::print_examples(format);
        }
        Command::Examples(ExamplesCommand::Export { id, dir }) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let mut written = Vec::new();
            for (name, text) in examples::export(*id) {
                let path = dir.join(name);
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                written.push(path.display().to_string());
            }
            let note = (*id == ExampleId::L2)
                .then_some("the strategy is not finite-state; use `--strategy builtin:L2`");
            match format {
                Format::Json => println!(
                    "{}",
                    json!({ "example": id.to_string(), "files": written, "note": note })
                ),
                Format::Text => {
                    for path in &written {
                        println!("wrote {path}");
                    }
                    if let Some(note) = note {
                        println!("note: {note}");
                    }
                }
            }
        }
    }
    Ok(())
}

/// Writes the witness when requested and present; returns the written path.
fn emit(
    path: Option<&Path>,
    witness: Option<&delaygames::strategy::MealyStrategy>,
) -> anyhow::Result<Option<String>> {
    match (path, witness) {
        (Some(path), Some(m)) => {
            fs::write(path, m.to_text()).with_context(|| format!("writing {}", path.display()))?;
            Ok(Some(path.display().to_string()))
        }
        _ => Ok(None),
    }
}

fn simulate(
    format: Format,
    cond: &str,
    strat_i: &str,
    strat_o: &str,
    f: &DelayFunction,
    rounds: usize,
) -> anyhow::Result<()> {
    let cond = load_condition(cond)?;
    let si = load_strategy(strat_i)?;
    let so = load_strategy(strat_o)?;
    for (s, name, player) in [(&si, strat_i, Player::I), (&so, strat_o, Player::O)] {
        if s.strategy.player() != player {
            bail!(
                "`{name}` is an {} strategy, which belongs to player {}",
                s.strategy.kind(),
                s.strategy.player()
            );
        }
        s.require_alphabets(cond.input(), cond.output(), name)?;
    }
    let input = si.strategy.as_input()?;
    let output = so.strategy.as_output()?;
    let play = harness::simulate_play(input.as_ref(), output.as_ref(), f, rounds)?;
    let winner = if si.finite_state && so.finite_state && f.tail() == 1 {
        Some(lasso_verify(input.as_ref(), output.as_ref(), f, &cond)?)
    } else {
        None
    };
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "play": play_json(&play, cond.input(), cond.output()),
                "lasso_winner": winner.map(|p| p.to_string()),
            })
        ),
        Format::Text => {
            print_play(&play, cond.input(), cond.output());
            match winner {
                Some(p) => println!("lasso winner: {p}"),
                None => println!(
                    "lasso winner: not computed (needs finite-state strategies and tail 1)"
                ),
            }
        }
    }
    Ok(())
}

fn refute(
    format: Format,
    which: Separation,
    strategy: &str,
    opts: &RefuteOptions,
) -> anyhow::Result<()> {
    let cond = which.condition();
    let loaded = load_strategy(strategy)?;
    if loaded.strategy.kind() != which.kind() {
        bail!(
            "{which} refutes {} strategies, but `{strategy}` is {}",
            which.kind(),
            loaded.strategy.kind()
        );
    }
    loaded.require_alphabets(cond.input(), cond.output(), strategy)?;
    let s: &Strategy = &loaded.strategy;
    match refute_separation(which, s, opts)? {
        Refutation::Defeat(d) => {
            let play = replay_play(s, &d)?;
            let opponent_alphabet = match which.owner() {
                Player::I => cond.output(),
                Player::O => cond.input(),
            };
            output::print_defeat(
                format,
                which,
                &d,
                &play,
                opponent_alphabet,
                cond.input(),
                cond.output(),
            );
        }
        Refutation::Inconclusive { reason } => match format {
            Format::Json => println!(
                "{}",
                json!({ "example": which.to_string(), "result": "inconclusive", "reason": reason })
            ),
            Format::Text => println!("inconclusive: {reason}"),
        },
    }
    Ok(())
}
