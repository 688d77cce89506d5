use std::sync::Arc;

use crate::automata::Letter;
use crate::error::{Error, Result};
use crate::strategy::interface::view_mismatch;
use crate::strategy::{
    input_move, InfiniteWord, InputRunner, InputStrategy, InputView, OutputRunner, OutputStrategy,
    OutputView, Strategy, StrategyKind,
};

/// Wraps `s` as a strategy of the more informed kind `to`, inducing the same plays.
pub fn promote(s: &Strategy, to: StrategyKind) -> Result<Strategy> {
    if !s.kind().can_promote_to(to) {
        return Err(Error::InvalidPromotion {
            from: s.kind().to_string(),
            to: to.to_string(),
        });
    }
    Ok(match s {
        Strategy::Input(inner) => Strategy::Input(Arc::new(PromotedInput {
            inner: inner.clone(),
            kind: to,
        })),
        Strategy::Output(inner) => Strategy::Output(Arc::new(PromotedOutput {
            inner: inner.clone(),
            kind: to,
        })),
    })
}

struct PromotedInput {
    inner: Arc<dyn InputStrategy>,
    kind: StrategyKind,
}

impl PromotedInput {
    /// His own letters, replayed from O's moves and the delay values.
    fn reconstruct(&self, outputs: &[Letter], delays: &[usize]) -> Result<Vec<Letter>> {
        let mut inputs = Vec::new();
        for j in 0..delays.len() {
            let u = input_move(
                self.inner.as_ref(),
                &outputs[..j],
                &inputs,
                &delays[..j],
                delays[j],
            )?;
            inputs.extend(u);
        }
        Ok(inputs)
    }
}

impl InputStrategy for PromotedInput {
    fn kind(&self) -> StrategyKind {
        self.kind
    }

    fn respond(&self, view: &InputView<'_>) -> Result<InfiniteWord> {
        if view.kind() != self.kind {
            return Err(view_mismatch(self.kind, view.kind()));
        }
        let outputs = view.outputs();
        let replayed;
        let (count, inputs): (usize, Option<&[Letter]>) = match *view {
            InputView::Lc { count, .. } => (count, None),
            InputView::Iot { inputs, .. } => (inputs.len(), Some(inputs)),
            InputView::Ht { delays, .. } => {
                if delays.len() != outputs.len() {
                    return Err(Error::Oracle("history length mismatch".into()));
                }
                replayed = self.reconstruct(outputs, delays)?;
                (delays.iter().sum(), Some(&replayed[..]))
            }
            InputView::Ot { .. } => unreachable!("OT is never a promotion target"),
        };
        let inner_view = match self.inner.kind() {
            StrategyKind::Ot => InputView::Ot { outputs },
            StrategyKind::Lc => InputView::Lc { outputs, count },
            StrategyKind::Iot => InputView::Iot {
                outputs,
                inputs: inputs.expect("IOT promotes only to HT"),
            },
            k => return Err(view_mismatch(k, self.kind)),
        };
        self.inner.respond(&inner_view)
    }

    fn runner(&self) -> Option<Box<dyn InputRunner>> {
        self.inner.runner()
    }
}

struct PromotedOutput {
    inner: Arc<dyn OutputStrategy>,
    kind: StrategyKind,
}

impl OutputStrategy for PromotedOutput {
    fn kind(&self) -> StrategyKind {
        self.kind
    }

    fn respond(&self, view: &OutputView<'_>) -> Result<Letter> {
        if view.kind() != self.kind {
            return Err(view_mismatch(self.kind, view.kind()));
        }
        self.inner.respond(&OutputView::It {
            inputs: view.inputs(),
        })
    }

    fn runner(&self) -> Option<Box<dyn OutputRunner>> {
        self.inner.runner()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::{InputOracle, OutputOracle, UltimatelyPeriodicWord};

    fn const_a() -> Strategy {
        Strategy::Input(Arc::new(
            InputOracle::new(StrategyKind::Ot, |_| {
                Ok(UltimatelyPeriodicWord::constant(0).into())
            })
            .unwrap(),
        ))
    }

    #[test]
    fn direction_is_checked() {
        let lc = promote(&const_a(), StrategyKind::Lc).unwrap();
        assert!(matches!(
            promote(&lc, StrategyKind::Ot),
            Err(Error::InvalidPromotion { .. })
        ));
        assert!(promote(&const_a(), StrategyKind::Rc).is_err());
        let it = Strategy::Output(Arc::new(
            OutputOracle::new(StrategyKind::It, |_| Ok(0)).unwrap(),
        ));
        assert_eq!(
            promote(&it, StrategyKind::Rc).unwrap().kind(),
            StrategyKind::Rc
        );
    }

    #[test]
    fn ot_to_lc_ignores_counter() {
        let lc = promote(&const_a(), StrategyKind::Lc).unwrap();
        let w = lc
            .as_input()
            .unwrap()
            .respond(&InputView::Lc {
                outputs: &[1],
                count: 7,
            })
            .unwrap();
        assert_eq!(w.prefix(3).unwrap(), vec![0, 0, 0]);
    }
}
