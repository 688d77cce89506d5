//! Resolution of condition and strategy arguments: a file path, or
//! `builtin:<example>` for the built-in examples.

use std::fs;

use anyhow::{bail, Context};
use delaygames::automata::{Alphabet, Condition, Dpa, SafetyCounterMonitor};
use delaygames::examples::{self, ExampleId};
use delaygames::strategy::{skip_oracle_from_mealy, MealyStrategy, SkipOracle, Strategy};

const BUILTIN: &str = "builtin:";

fn builtin(arg: &str) -> anyhow::Result<Option<ExampleId>> {
    match arg.strip_prefix(BUILTIN) {
        Some(name) => Ok(Some(name.parse()?)),
        None => Ok(None),
    }
}

fn read(path: &str) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

pub fn load_condition(arg: &str) -> anyhow::Result<Condition> {
    if let Some(id) = builtin(arg)? {
        return Ok(examples::make_condition(id));
    }
    let text = read(arg)?;
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let cond = if header == Some("monitor") {
        Condition::Counter(SafetyCounterMonitor::parse(&text).with_context(|| arg.to_string())?)
    } else {
        Condition::Parity(Dpa::parse(&text).with_context(|| arg.to_string())?)
    };
    Ok(cond)
}

pub fn load_dpa(arg: &str) -> anyhow::Result<Dpa> {
    match load_condition(arg)? {
        Condition::Parity(a) => Ok(a),
        Condition::Counter(_) => bail!("`{arg}` is a counter monitor; this command needs a parity automaton"),
    }
}

/// A strategy together with the alphabets it was written for.
pub struct LoadedStrategy {
    pub strategy: Strategy,
    /// Whether the strategy has finitely many states (and hence a runner).
    pub finite_state: bool,
    pub input: Alphabet,
    pub output: Alphabet,
}

impl LoadedStrategy {
    pub fn require_alphabets(
        &self,
        input: &Alphabet,
        output: &Alphabet,
        name: &str,
    ) -> anyhow::Result<()> {
        if &self.input != input || &self.output != output {
            bail!(
                "`{name}` is over input {{{}}} and output {{{}}}, the condition over {{{}}} and {{{}}}",
                self.input.symbols().join(","),
                self.output.symbols().join(","),
                input.symbols().join(","),
                output.symbols().join(","),
            );
        }
        Ok(())
    }
}

pub fn load_strategy(arg: &str) -> anyhow::Result<LoadedStrategy> {
    if let Some(id) = builtin(arg)? {
        let cond = examples::make_condition(id);
        return Ok(LoadedStrategy {
            strategy: examples::make_strategy(id),
            finite_state: id != ExampleId::L2,
            input: cond.input().clone(),
            output: cond.output().clone(),
        });
    }
    let m = load_mealy(arg)?;
    Ok(LoadedStrategy {
        input: m.input().clone(),
        output: m.output().clone(),
        strategy: Strategy::mealy(m),
        finite_state: true,
    })
}

fn load_mealy(path: &str) -> anyhow::Result<MealyStrategy> {
    MealyStrategy::parse(&read(path)?).with_context(|| path.to_string())
}

/// A skip-game strategy of Player I and the output alphabet its histories
/// range over. `builtin:L0` is the skip strategy of the first example.
pub fn load_skip_oracle(arg: &str) -> anyhow::Result<(SkipOracle, Alphabet)> {
    if let Some(id) = builtin(arg)? {
        if id != ExampleId::L0 {
            bail!("only builtin:L0 has a built-in skip-game strategy");
        }
        let output = examples::make_condition(id).output().clone();
        return Ok((examples::l0_skip_strategy(), output));
    }
    let m = load_mealy(arg)?;
    Ok((skip_oracle_from_mealy(&m)?, m.output().clone()))
}
