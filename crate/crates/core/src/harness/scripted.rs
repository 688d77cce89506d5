use std::sync::Arc;

use crate::automata::Letter;
use crate::error::{Error, Result};
use crate::strategy::{
    InfiniteWord, InputRunner, InputStrategy, InputView, OutputRunner, OutputStrategy, OutputView,
    RunnerKey, StrategyKind,
};

/// Player O playing a fixed word; the last letter repeats forever.
#[derive(Debug, Clone)]
pub struct ScriptedOutput {
    moves: Vec<Letter>,
}

impl ScriptedOutput {
    pub fn new(moves: Vec<Letter>) -> Result<Self> {
        if moves.is_empty() {
            return Err(Error::invalid("script", "move word must be nonempty"));
        }
        Ok(ScriptedOutput { moves })
    }

    pub fn moves(&self) -> &[Letter] {
        &self.moves
    }

    fn at(&self, round: usize) -> Letter {
        self.moves[round.min(self.moves.len() - 1)]
    }
}

impl OutputStrategy for ScriptedOutput {
    fn kind(&self) -> StrategyKind {
        StrategyKind::Rc
    }

    fn respond(&self, view: &OutputView<'_>) -> Result<Letter> {
        match view {
            OutputView::Rc { round, .. } => Ok(self.at(*round)),
            OutputView::It { .. } => Err(crate::strategy::view_mismatch(
                StrategyKind::Rc,
                StrategyKind::It,
            )),
        }
    }

    fn runner(&self) -> Option<Box<dyn OutputRunner>> {
        Some(Box::new(ScriptRunner {
            script: self.clone(),
            round: 0,
        }))
    }
}

#[derive(Clone)]
struct ScriptRunner {
    script: ScriptedOutput,
    round: usize,
}

impl OutputRunner for ScriptRunner {
    fn play(&mut self, _letters: &[Letter]) -> Result<Letter> {
        let v = self.script.at(self.round);
        self.round += 1;
        Ok(v)
    }

    fn key(&self) -> RunnerKey {
        vec![self.round.min(self.script.moves.len() - 1)]
    }

    fn boxed_clone(&self) -> Box<dyn OutputRunner> {
        Box::new(self.clone())
    }
}

/// Player I delivering a fixed word; the last letter repeats forever.
#[derive(Debug, Clone)]
pub struct ScriptedInput {
    word: Arc<Vec<Letter>>,
}

impl ScriptedInput {
    pub fn new(word: Vec<Letter>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::invalid("script", "input word must be nonempty"));
        }
        Ok(ScriptedInput {
            word: Arc::new(word),
        })
    }
}

impl InputStrategy for ScriptedInput {
    fn kind(&self) -> StrategyKind {
        StrategyKind::Ht
    }

    fn respond(&self, view: &InputView<'_>) -> Result<InfiniteWord> {
        let offset: usize = match view {
            InputView::Ht { delays, .. } => delays.iter().sum(),
            other => {
                return Err(crate::strategy::view_mismatch(
                    StrategyKind::Ht,
                    other.kind(),
                ))
            }
        };
        let word = Arc::clone(&self.word);
        Ok(InfiniteWord::lazy(move |n| {
            Ok(word[(offset + n).min(word.len() - 1)])
        }))
    }

    fn runner(&self) -> Option<Box<dyn InputRunner>> {
        Some(Box::new(ScriptedInputRunner {
            word: Arc::clone(&self.word),
            pos: 0,
        }))
    }
}

#[derive(Clone)]
struct ScriptedInputRunner {
    word: Arc<Vec<Letter>>,
    pos: usize,
}

impl InputRunner for ScriptedInputRunner {
    fn play(&mut self, n: usize) -> Result<Vec<Letter>> {
        let out = (self.pos..self.pos + n)
            .map(|p| self.word[p.min(self.word.len() - 1)])
            .collect();
        self.pos += n;
        Ok(out)
    }

    fn observe(&mut self, _v: Letter) {}

    fn key(&self) -> RunnerKey {
        vec![self.pos.min(self.word.len() - 1)]
    }

    fn boxed_clone(&self) -> Box<dyn InputRunner> {
        Box::new(self.clone())
    }
}
