use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::automata::Letter;
use crate::error::Result;
use crate::strategy::interface::view_mismatch;
use crate::strategy::{
    InfiniteWord, InputStrategy, InputView, OutputStrategy, OutputView, StrategyKind,
};
use crate::Player;

type InputFn = dyn Fn(&InputView<'_>) -> Result<InfiniteWord> + Send + Sync;
type OutputFn = dyn Fn(&OutputView<'_>) -> Result<Letter> + Send + Sync;

/// Key identifying a query: O's moves plus the kind-specific extra component.
type Query = (Vec<Letter>, Vec<usize>);

/// A Player-I strategy given by a function, with memoized answers.
///
/// Memoization pins every answer, so refuters that probe the strategy see a
/// stable function even if the closure is not pure. First-time queries from
/// several threads are serialized by the internal lock.
pub struct InputOracle {
    kind: StrategyKind,
    f: Box<InputFn>,
    memo: Mutex<HashMap<Query, InfiniteWord>>,
}

impl InputOracle {
    pub fn new(
        kind: StrategyKind,
        f: impl Fn(&InputView<'_>) -> Result<InfiniteWord> + Send + Sync + 'static,
    ) -> Result<Self> {
        kind.require_player(Player::I)?;
        Ok(InputOracle {
            kind,
            f: Box::new(f),
            memo: Mutex::new(HashMap::new()),
        })
    }
}

fn input_query(view: &InputView<'_>) -> Query {
    let extra = match *view {
        InputView::Ot { .. } => Vec::new(),
        InputView::Lc { count, .. } => vec![count],
        InputView::Iot { inputs, .. } => inputs.to_vec(),
        InputView::Ht { delays, .. } => delays.to_vec(),
    };
    (view.outputs().to_vec(), extra)
}

impl InputStrategy for InputOracle {
    fn kind(&self) -> StrategyKind {
        self.kind
    }

    fn respond(&self, view: &InputView<'_>) -> Result<InfiniteWord> {
        if view.kind() != self.kind {
            return Err(view_mismatch(self.kind, view.kind()));
        }
        let key = input_query(view);
        if let Some(w) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(w.clone());
        }
        let w = (self.f)(view)?;
        Ok(self
            .memo
            .lock()
            .expect("memo lock")
            .entry(key)
            .or_insert(w)
            .clone())
    }
}

impl fmt::Debug for InputOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InputOracle({})", self.kind)
    }
}

/// A Player-O strategy given by a function, with memoized answers.
pub struct OutputOracle {
    kind: StrategyKind,
    f: Box<OutputFn>,
    memo: Mutex<HashMap<(Vec<Letter>, usize), Letter>>,
}

impl OutputOracle {
    pub fn new(
        kind: StrategyKind,
        f: impl Fn(&OutputView<'_>) -> Result<Letter> + Send + Sync + 'static,
    ) -> Result<Self> {
        kind.require_player(Player::O)?;
        Ok(OutputOracle {
            kind,
            f: Box::new(f),
            memo: Mutex::new(HashMap::new()),
        })
    }
}

impl OutputStrategy for OutputOracle {
    fn kind(&self) -> StrategyKind {
        self.kind
    }

    fn respond(&self, view: &OutputView<'_>) -> Result<Letter> {
        if view.kind() != self.kind {
            return Err(view_mismatch(self.kind, view.kind()));
        }
        let round = match *view {
            OutputView::It { .. } => 0,
            OutputView::Rc { round, .. } => round,
        };
        let key = (view.inputs().to_vec(), round);
        if let Some(&b) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(b);
        }
        let b = (self.f)(view)?;
        Ok(*self.memo.lock().expect("memo lock").entry(key).or_insert(b))
    }
}

impl fmt::Debug for OutputOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OutputOracle({})", self.kind)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Arc;

    use super::*;
    use crate::strategy::UltimatelyPeriodicWord;

    #[test]
    fn answers_are_pinned() {
        let calls = Arc::new(AtomicUsize::new(0));
        let c = calls.clone();
        let o = OutputOracle::new(StrategyKind::It, move |_| {
            Ok(c.fetch_add(1, Ordering::SeqCst) % 2)
        })
        .unwrap();
        let v = OutputView::It { inputs: &[0, 1] };
        assert_eq!(o.respond(&v).unwrap(), o.respond(&v).unwrap());
        assert_eq!(calls.load(Ordering::SeqCst), 1);
    }

    #[test]
    fn kind_is_checked() {
        assert!(
            InputOracle::new(StrategyKind::Rc, |_| Ok(UltimatelyPeriodicWord::constant(
                0
            )
            .into()))
            .is_err()
        );
        let o = InputOracle::new(StrategyKind::Ot, |_| {
            Ok(UltimatelyPeriodicWord::constant(0).into())
        })
        .unwrap();
        assert!(o
            .respond(&InputView::Lc {
                outputs: &[],
                count: 0
            })
            .is_err());
    }
}
