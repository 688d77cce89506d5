use std::fmt;
use std::sync::Arc;

use crate::automata::Letter;
use crate::error::{Error, Result};
use crate::strategy::{InfiniteWord, StrategyKind};
use crate::Player;

/// What a Player-I strategy observes before round `i`, restricted to its kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputView<'a> {
    Ot {
        outputs: &'a [Letter],
    },
    Lc {
        outputs: &'a [Letter],
        count: usize,
    },
    Iot {
        outputs: &'a [Letter],
        inputs: &'a [Letter],
    },
    Ht {
        outputs: &'a [Letter],
        delays: &'a [usize],
    },
}

impl<'a> InputView<'a> {
    /// Projects the full history (O's moves, I's letters, delay values) onto
    /// what `kind` may see.
    pub fn project(
        kind: StrategyKind,
        outputs: &'a [Letter],
        inputs: &'a [Letter],
        delays: &'a [usize],
    ) -> Result<Self> {
        kind.require_player(Player::I)?;
        Ok(match kind {
            StrategyKind::Ot => InputView::Ot { outputs },
            StrategyKind::Lc => InputView::Lc {
                outputs,
                count: inputs.len(),
            },
            StrategyKind::Iot => InputView::Iot { outputs, inputs },
            StrategyKind::Ht => InputView::Ht { outputs, delays },
            StrategyKind::It | StrategyKind::Rc => unreachable!(),
        })
    }

    pub fn kind(&self) -> StrategyKind {
        match self {
            InputView::Ot { .. } => StrategyKind::Ot,
            InputView::Lc { .. } => StrategyKind::Lc,
            InputView::Iot { .. } => StrategyKind::Iot,
            InputView::Ht { .. } => StrategyKind::Ht,
        }
    }

    pub fn outputs(&self) -> &'a [Letter] {
        match *self {
            InputView::Ot { outputs }
            | InputView::Lc { outputs, .. }
            | InputView::Iot { outputs, .. }
            | InputView::Ht { outputs, .. } => outputs,
        }
    }
}

/// What a Player-O strategy observes in round `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputView<'a> {
    It { inputs: &'a [Letter] },
    Rc { inputs: &'a [Letter], round: usize },
}

impl<'a> OutputView<'a> {
    pub fn project(kind: StrategyKind, inputs: &'a [Letter], round: usize) -> Result<Self> {
        kind.require_player(Player::O)?;
        Ok(match kind {
            StrategyKind::It => OutputView::It { inputs },
            _ => OutputView::Rc { inputs, round },
        })
    }

    pub fn kind(&self) -> StrategyKind {
        match self {
            OutputView::It { .. } => StrategyKind::It,
            OutputView::Rc { .. } => StrategyKind::Rc,
        }
    }

    pub fn inputs(&self) -> &'a [Letter] {
        match *self {
            OutputView::It { inputs } | OutputView::Rc { inputs, .. } => inputs,
        }
    }
}

pub(crate) fn view_mismatch(expected: StrategyKind, got: StrategyKind) -> Error {
    Error::Oracle(format!("{expected} strategy queried with a {got} view"))
}

/// Hashable snapshot of a finite-state runner; equal keys mean equal future behaviour.
pub type RunnerKey = Vec<usize>;

/// Incremental, finite-state execution of a Player-I strategy.
pub trait InputRunner: Send {
    /// Letters for the current round, given its delay value `n`.
    fn play(&mut self, n: usize) -> Result<Vec<Letter>>;
    /// Records O's answer for the current round.
    fn observe(&mut self, v: Letter);
    fn key(&self) -> RunnerKey;
    fn boxed_clone(&self) -> Box<dyn InputRunner>;
}

/// Incremental, finite-state execution of a Player-O strategy.
pub trait OutputRunner: Send {
    /// Feeds the letters delivered in the current round and returns O's answer.
    fn play(&mut self, letters: &[Letter]) -> Result<Letter>;
    fn key(&self) -> RunnerKey;
    fn boxed_clone(&self) -> Box<dyn OutputRunner>;
}

pub trait InputStrategy: Send + Sync {
    fn kind(&self) -> StrategyKind;
    fn respond(&self, view: &InputView<'_>) -> Result<InfiniteWord>;

    /// A finite-state runner, when the strategy has one.
    fn runner(&self) -> Option<Box<dyn InputRunner>> {
        None
    }
}

pub trait OutputStrategy: Send + Sync {
    fn kind(&self) -> StrategyKind;
    fn respond(&self, view: &OutputView<'_>) -> Result<Letter>;

    fn runner(&self) -> Option<Box<dyn OutputRunner>> {
        None
    }
}

/// A strategy of either player.
#[derive(Clone)]
pub enum Strategy {
    Input(Arc<dyn InputStrategy>),
    Output(Arc<dyn OutputStrategy>),
}

impl Strategy {
    pub fn kind(&self) -> StrategyKind {
        match self {
            Strategy::Input(s) => s.kind(),
            Strategy::Output(s) => s.kind(),
        }
    }

    pub fn player(&self) -> Player {
        self.kind().player()
    }

    pub fn as_input(&self) -> Result<&Arc<dyn InputStrategy>> {
        match self {
            Strategy::Input(s) => Ok(s),
            Strategy::Output(s) => Err(Error::KindMismatch {
                kind: s.kind().to_string(),
                player: Player::I.to_string(),
            }),
        }
    }

    pub fn as_output(&self) -> Result<&Arc<dyn OutputStrategy>> {
        match self {
            Strategy::Output(s) => Ok(s),
            Strategy::Input(s) => Err(Error::KindMismatch {
                kind: s.kind().to_string(),
                player: Player::O.to_string(),
            }),
        }
    }
}

impl fmt::Debug for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Strategy({})", self.kind())
    }
}

/// Player I's move in round `|outputs|`: the first `n` letters of his answer.
pub fn input_move(
    s: &dyn InputStrategy,
    outputs: &[Letter],
    inputs: &[Letter],
    delays: &[usize],
    n: usize,
) -> Result<Vec<Letter>> {
    let view = InputView::project(s.kind(), outputs, inputs, delays)?;
    s.respond(&view)?.prefix(n)
}

/// Player O's move in round `round` after the input letters `inputs`.
pub fn output_move(s: &dyn OutputStrategy, inputs: &[Letter], round: usize) -> Result<Letter> {
    let view = OutputView::project(s.kind(), inputs, round)?;
    s.respond(&view)
}
