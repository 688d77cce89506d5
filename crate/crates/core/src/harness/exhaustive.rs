use crate::automata::{CondState, Condition, Letter};
use crate::delay::{DelayFunction, PlayRecord};
use crate::error::Result;
use crate::harness::simulate::check_letters;
use crate::strategy::{
    input_move, output_move, words_of_length, InputStrategy, OutputStrategy, Strategy,
};
use crate::Player;

/// Outcome of a bounded check over all opponent behaviours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WinCheck {
    /// No explored prefix is lost, and every branch was decided or the
    /// owner can only lose through a bad prefix.
    Pass,
    /// A play prefix consistent with the strategy that the owner has lost.
    Counterplay(PlayRecord),
    /// Some branches reached the depth bound undecided, and the condition
    /// does not make the owner's losses prefix-detectable.
    Inconclusive { undecided: usize },
}

type Rounds = Vec<(Vec<Letter>, Letter)>;

struct Search<'a> {
    cond: &'a Condition,
    f: &'a DelayFunction,
    depth: usize,
    undecided: usize,
}

/// Explores every opponent move sequence up to `depth` rounds.
///
/// When Player I owns the strategy, input letters he has already delivered
/// past the bound are still paired with every possible answer before a
/// branch counts as undecided: those letters are fixed regardless of how the
/// play continues.
pub fn bounded_exhaustive_win_check(
    s: &Strategy,
    owner: Player,
    cond: &Condition,
    f: &DelayFunction,
    depth: usize,
) -> Result<WinCheck> {
    s.kind().require_player(owner)?;
    let mut search = Search {
        cond,
        f,
        depth,
        undecided: 0,
    };
    let mut rounds = Vec::new();
    let found = match s {
        Strategy::Input(si) => search.explore_i(si.as_ref(), 0, &mut rounds, cond.start(), None)?,
        Strategy::Output(so) => search.explore_o(so.as_ref(), 0, &mut rounds, cond.start())?,
    };
    Ok(match found {
        Some(rounds) => WinCheck::Counterplay(PlayRecord::from_rounds(f.clone(), rounds)?),
        None if search.undecided == 0 || cond.is_safety_for(owner) => WinCheck::Pass,
        None => WinCheck::Inconclusive {
            undecided: search.undecided,
        },
    })
}

fn history(rounds: &Rounds) -> (Vec<Letter>, Vec<Letter>) {
    let inputs = rounds.iter().flat_map(|(u, _)| u.iter().copied()).collect();
    let outputs = rounds.iter().map(|&(_, v)| v).collect();
    (inputs, outputs)
}

impl Search<'_> {
    fn explore_i(
        &mut self,
        si: &dyn InputStrategy,
        i: usize,
        rounds: &mut Rounds,
        state: CondState,
        limit: Option<usize>,
    ) -> Result<Option<Rounds>> {
        let (mut inputs, outputs) = history(rounds);
        let limit = if i >= self.depth {
            Some(limit.unwrap_or(inputs.len()))
        } else {
            limit
        };
        if limit.is_some_and(|l| i >= l) {
            self.undecided += 1;
            return Ok(None);
        }
        let delays: Vec<usize> = (0..i).map(|j| self.f.value(j)).collect();
        let u = input_move(si, &outputs, &inputs, &delays, self.f.value(i))?;
        check_letters(&u, self.cond.input(), "player I")?;
        inputs.extend(&u);
        let x = inputs[i];
        for b in self.cond.output().letters() {
            let next = self.cond.step(&state, x, b);
            rounds.push((u.clone(), b));
            match self.cond.settled_winner(&next) {
                Some(Player::I) => {}
                Some(Player::O) => return Ok(Some(rounds.clone())),
                None => {
                    if let Some(c) = self.explore_i(si, i + 1, rounds, next, limit)? {
                        return Ok(Some(c));
                    }
                }
            }
            rounds.pop();
        }
        Ok(None)
    }

    fn explore_o(
        &mut self,
        so: &dyn OutputStrategy,
        i: usize,
        rounds: &mut Rounds,
        state: CondState,
    ) -> Result<Option<Rounds>> {
        if i >= self.depth {
            self.undecided += 1;
            return Ok(None);
        }
        let (inputs, _) = history(rounds);
        for u in words_of_length(self.cond.input().len(), self.f.value(i)) {
            let mut seen = inputs.clone();
            seen.extend(&u);
            let v = output_move(so, &seen, i)?;
            check_letters(&[v], self.cond.output(), "player O")?;
            let next = self.cond.step(&state, seen[i], v);
            rounds.push((u, v));
            match self.cond.settled_winner(&next) {
                Some(Player::O) => {}
                Some(Player::I) => return Ok(Some(rounds.clone())),
                None => {
                    if let Some(c) = self.explore_o(so, i + 1, rounds, next)? {
                        return Ok(Some(c));
                    }
                }
            }
            rounds.pop();
        }
        Ok(None)
    }
}
