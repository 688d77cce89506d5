//! Built-in winning conditions and the witness strategies that go with them.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::automata::{Alphabet, Condition, Dpa, Letter, SafetyCounterMonitor};
use crate::delay::SkipSymbol;
use crate::error::{Error, Result};
use crate::strategy::{
    Emission, InfiniteWord, InputStrategy, InputView, MealyStrategy, SkipOracle, Strategy,
    StrategyKind, UltimatelyPeriodicWord,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExampleId {
    L0,
    L1,
    L2,
    L3,
}

impl ExampleId {
    pub const ALL: [ExampleId; 4] = [ExampleId::L0, ExampleId::L1, ExampleId::L2, ExampleId::L3];

    pub fn description(self) -> &'static str {
        match self {
            ExampleId::L0 => "β(0) must equal the first non-a letter of α (O wins on α = a^ω)",
            ExampleId::L1 => "O wins iff α ≠ (ab)^ω",
            ExampleId::L2 => "I wins iff α ∈ a^n0 β(0) a^n1 β(1) Σ^ω with n1 > n0",
            ExampleId::L3 => "O must produce β = (ab)^ω (single input letter)",
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExampleId::L0 => "L0",
            ExampleId::L1 => "L1",
            ExampleId::L2 => "L2",
            ExampleId::L3 => "L3",
        })
    }
}

impl FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "L0" => Ok(ExampleId::L0),
            "L1" => Ok(ExampleId::L1),
            "L2" => Ok(ExampleId::L2),
            "L3" => Ok(ExampleId::L3),
            _ => Err(Error::invalid("example", format!("unknown example `{s}`"))),
        }
    }
}

fn alphabet(symbols: &[&str]) -> Alphabet {
    Alphabet::new(symbols.iter().copied()).expect("built-in alphabet")
}

/// `{a,b,c}` × `{b,c}`, shared by L0 and L2.
fn abc_bc() -> (Alphabet, Alphabet) {
    (alphabet(&["a", "b", "c"]), alphabet(&["b", "c"]))
}

/// The output letter `v` read as an input letter with the same symbol.
fn as_input(input: &Alphabet, output: &Alphabet, v: Letter) -> Letter {
    input
        .letter(output.symbol(v))
        .expect("output symbols are input symbols")
}

pub fn make_condition(id: ExampleId) -> Condition {
    match id {
        ExampleId::L0 => Condition::Parity(l0_automaton()),
        ExampleId::L1 => Condition::Parity(l1_automaton()),
        ExampleId::L2 => Condition::Counter(l2_monitor()),
        ExampleId::L3 => Condition::Parity(l3_automaton()),
    }
}

/// States: init, wait_b, wait_c, matched (sink), mismatched (sink).
pub fn l0_automaton() -> Dpa {
    let (input, output) = abc_bc();
    let a = input.require("a").unwrap();
    let (i2, o2) = (input.clone(), output.clone());
    let compare = move |x: Letter, b: Letter| {
        if i2.symbol(x) == o2.symbol(b) {
            3
        } else {
            4
        }
    };
    Dpa::from_fn(
        input,
        output,
        0,
        vec![0, 0, 0, 0, 1],
        move |q, x, b| match q {
            0 if x == a => 1 + b,
            0 => compare(x, b),
            1 | 2 if x == a => q,
            1 | 2 => compare(x, q - 1),
            _ => q,
        },
    )
    .expect("L0 automaton")
}

/// States: expect a, expect b (both odd), deviated (even sink).
pub fn l1_automaton() -> Dpa {
    let input = alphabet(&["a", "b"]);
    let output = alphabet(&["b", "c"]);
    Dpa::from_fn(input, output, 0, vec![1, 1, 0], |q, x, _| match q {
        0 | 1 if x == q => 1 - q,
        _ => 2,
    })
    .expect("L1 automaton")
}

pub fn l2_monitor() -> SafetyCounterMonitor {
    let (input, output) = abc_bc();
    SafetyCounterMonitor::new(input, output, "a").expect("L2 monitor")
}

/// States: expect a, expect b, deviated (odd sink).
pub fn l3_automaton() -> Dpa {
    let input = alphabet(&["a"]);
    let output = alphabet(&["a", "b"]);
    Dpa::from_fn(input, output, 0, vec![0, 0, 1], |q, _, b| match q {
        0 | 1 if b == q => 1 - q,
        _ => 2,
    })
    .expect("L3 automaton")
}

/// O wins iff `β(i) = α(i+1)` for every `i`, over `{a,b}` × `{a,b}`.
///
/// States: init, pending a, pending b, bad (odd sink).
pub fn echo_automaton() -> Dpa {
    let ab = alphabet(&["a", "b"]);
    Dpa::from_fn(ab.clone(), ab, 0, vec![0, 0, 0, 1], |q, x, b| match q {
        0 => 1 + b,
        1 | 2 if x == q - 1 => 1 + b,
        _ => 3,
    })
    .expect("echo automaton")
}

pub fn make_strategy(id: ExampleId) -> Strategy {
    match id {
        ExampleId::L0 => Strategy::mealy(l0_strategy()),
        ExampleId::L1 => Strategy::mealy(l1_strategy()),
        ExampleId::L2 => Strategy::Input(Arc::new(L2Strategy::new())),
        ExampleId::L3 => Strategy::mealy(l3_strategy()),
    }
}

fn word(head: Vec<Letter>, period: Vec<Letter>) -> Emission {
    Emission::Word(UltimatelyPeriodicWord::new(head, period).expect("non-empty period"))
}

/// `τ(ε) = a^ω`, `τ(bx) = c^ω`, `τ(cx) = b^ω`.
pub fn l0_strategy() -> MealyStrategy {
    let (input, output) = abc_bc();
    MealyStrategy::from_fn(
        StrategyKind::Ot,
        input,
        output,
        0,
        vec![
            word(vec![], vec![0]),
            word(vec![], vec![2]),
            word(vec![], vec![1]),
        ],
        |q, t| match (q, t) {
            (0, "b") => 1,
            (0, "c") => 2,
            _ => q,
        },
    )
    .expect("L0 strategy")
}

/// `τ(x, n) = (ab)^ω` for even `n`, `(ba)^ω` for odd `n`.
pub fn l1_strategy() -> MealyStrategy {
    MealyStrategy::from_fn(
        StrategyKind::Lc,
        alphabet(&["a", "b"]),
        alphabet(&["b", "c"]),
        0,
        vec![word(vec![], vec![0, 1]), word(vec![], vec![1, 0])],
        |q, t| if t == "#" { 1 - q } else { q },
    )
    .expect("L1 strategy")
}

/// `σ(x, i) = a` for even `i`, `b` for odd `i`: the stream `x(0..=i) # ⋯`
/// is tracked modulo two until the separator, then frozen.
pub fn l3_strategy() -> MealyStrategy {
    let sym = |l| Emission::Symbol(SkipSymbol::Letter(l));
    MealyStrategy::from_fn(
        StrategyKind::Rc,
        alphabet(&["a"]),
        alphabet(&["a", "b"]),
        0,
        vec![sym(0), sym(0), sym(0), sym(1)],
        |q, t| match (q, t) {
            (0, "a") => 1,
            (1, "a") => 0,
            (1, "#") => 2,
            (0, "#") => 3,
            _ => q,
        },
    )
    .expect("L3 strategy")
}

/// Player I's strategy on L2, seeing both move histories:
/// - `x = ε`: `a^ω`
/// - `|x| = 1`: `x(0) a^ω`
/// - `|x| > 1` and `y = a^n x(0) a^k`: `a^{max(0, n−k+1)} x(1) a^ω`
/// - otherwise `a^ω`.
#[derive(Debug, Clone)]
pub struct L2Strategy {
    input: Alphabet,
    output: Alphabet,
}

impl L2Strategy {
    pub fn new() -> Self {
        let (input, output) = abc_bc();
        L2Strategy { input, output }
    }

    fn answer(&self, x: &[Letter], y: &[Letter]) -> UltimatelyPeriodicWord {
        let a = 0;
        let lift = |v| as_input(&self.input, &self.output, v);
        let word = |head: Vec<Letter>| UltimatelyPeriodicWord::new(head, vec![a]).unwrap();
        match x {
            [] => word(vec![]),
            [v] => word(vec![lift(*v)]),
            [v0, v1, ..] => {
                let n = y.iter().take_while(|&&l| l == a).count();
                let rest = &y[n..];
                match rest.split_first() {
                    Some((&l, tail)) if l == lift(*v0) && tail.iter().all(|&l| l == a) => {
                        let k = tail.len();
                        let mut head = vec![a; (n + 1).saturating_sub(k)];
                        head.push(lift(*v1));
                        word(head)
                    }
                    _ => word(vec![]),
                }
            }
        }
    }
}

impl Default for L2Strategy {
    fn default() -> Self {
        L2Strategy::new()
    }
}

impl InputStrategy for L2Strategy {
    fn kind(&self) -> StrategyKind {
        StrategyKind::Iot
    }

    fn respond(&self, view: &InputView<'_>) -> Result<InfiniteWord> {
        match view {
            InputView::Iot { outputs, inputs } => {
                Ok(InfiniteWord::Periodic(self.answer(outputs, inputs)))
            }
            other => Err(crate::strategy::view_mismatch(
                StrategyKind::Iot,
                other.kind(),
            )),
        }
    }
}

/// Player I's strategy in the skip game of L0: `a` until O commits to a
/// letter, then the other letter of `{b, c}` forever.
pub fn l0_skip_strategy() -> SkipOracle {
    Arc::new(|w: &[SkipSymbol]| {
        Ok(match w.iter().find_map(|s| s.letter()) {
            None => 0,
            // output b (0) → input c (2); output c (1) → input b (1)
            Some(b) => 2 - b,
        })
    })
}

/// Skip-game O strategy on the echo automaton: skip once, then copy I's
/// latest letter.
pub fn echo_skip_machine() -> MealyStrategy {
    let ab = alphabet(&["a", "b"]);
    let sym = Emission::Symbol;
    MealyStrategy::from_fn(
        StrategyKind::It,
        ab.clone(),
        ab,
        0,
        vec![
            sym(SkipSymbol::Skip),
            sym(SkipSymbol::Skip),
            sym(SkipSymbol::Letter(0)),
            sym(SkipSymbol::Letter(1)),
        ],
        |q, t| match (q, t) {
            (0, _) => 1,
            (_, "a") => 2,
            _ => 3,
        },
    )
    .expect("echo machine")
}

/// Skips forever.
pub fn all_skip_machine() -> MealyStrategy {
    let ab = alphabet(&["a", "b"]);
    MealyStrategy::from_fn(
        StrategyKind::It,
        ab.clone(),
        ab,
        0,
        vec![Emission::Symbol(SkipSymbol::Skip)],
        |_, _| 0,
    )
    .expect("all-skip machine")
}

/// The condition and, when it is finite-state, the strategy in their file
/// formats, keyed by file name.
pub fn export(id: ExampleId) -> Vec<(String, String)> {
    let mut files = vec![match make_condition(id) {
        Condition::Parity(a) => ("condition.dpa".to_string(), a.to_text()),
        Condition::Counter(m) => ("condition.monitor".to_string(), m.to_text()),
    }];
    let strategy = match id {
        ExampleId::L0 => Some(l0_strategy()),
        ExampleId::L1 => Some(l1_strategy()),
        ExampleId::L2 => None,
        ExampleId::L3 => Some(l3_strategy()),
    };
    if let Some(m) = strategy {
        files.push(("strategy.mealy".to_string(), m.to_text()));
    }
    files
}
