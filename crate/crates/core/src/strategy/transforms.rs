use std::collections::VecDeque;
use std::sync::Arc;

use crate::automata::Letter;
use crate::delay::{shift_encode_history, DelayFunction, SkipSymbol};
use crate::error::{Error, Result};
use crate::strategy::interface::view_mismatch;
use crate::strategy::mealy::{Emission, Obs};
use crate::strategy::{
    InfiniteWord, InputOracle, InputView, MealyStrategy, OutputOracle, OutputRunner,
    OutputStrategy, OutputView, RunnerKey, StrategyKind,
};

/// A Player-O strategy for the delay-free game: input prefix ↦ output letter.
pub type DelayFreeOracle = Arc<dyn Fn(&[Letter]) -> Result<Letter> + Send + Sync>;

/// A Player-I strategy for the skip game: O's skip word so far ↦ next input letter.
pub type SkipOracle = Arc<dyn Fn(&[SkipSymbol]) -> Result<Letter> + Send + Sync>;

/// The round-counting strategy answering round `i` with `σ′(x(0)⋯x(i))`,
/// ignoring the lookahead beyond the current round.
pub fn rc_from_delay_free(sigma: DelayFreeOracle) -> OutputOracle {
    OutputOracle::new(StrategyKind::Rc, move |view| match *view {
        OutputView::Rc { inputs, round } => {
            if inputs.len() <= round {
                return Err(Error::Oracle(format!(
                    "round {round} queried with only {} input letters",
                    inputs.len()
                )));
            }
            sigma(&inputs[..=round])
        }
        OutputView::It { .. } => Err(view_mismatch(StrategyKind::Rc, StrategyKind::It)),
    })
    .expect("RC is a Player-O kind")
}

/// Lifts a strategy for `f` to `f′ ⊒ f`: in round `i` only the first
/// `Σ_{j≤i} f(j)` input letters are passed on.
pub fn lift_monotone(
    sigma: Arc<dyn OutputStrategy>,
    f: &DelayFunction,
    f_prime: &DelayFunction,
) -> Result<Arc<dyn OutputStrategy>> {
    if !f.leq(f_prime) {
        return Err(Error::Precondition(format!(
            "{f} is not below {f_prime} in the lookahead order"
        )));
    }
    Ok(Arc::new(Lifted {
        inner: sigma,
        f: f.clone(),
    }))
}

struct Lifted {
    inner: Arc<dyn OutputStrategy>,
    f: DelayFunction,
}

impl OutputStrategy for Lifted {
    fn kind(&self) -> StrategyKind {
        StrategyKind::Rc
    }

    fn respond(&self, view: &OutputView<'_>) -> Result<Letter> {
        let (inputs, round) = match *view {
            OutputView::Rc { inputs, round } => (inputs, round),
            OutputView::It { .. } => return Err(view_mismatch(StrategyKind::Rc, StrategyKind::It)),
        };
        let visible = self.f.cumulative(round);
        if inputs.len() < visible {
            return Err(Error::Oracle(format!(
                "round {round} needs {visible} input letters, got {}",
                inputs.len()
            )));
        }
        let inner_view = OutputView::project(self.inner.kind(), &inputs[..visible], round)?;
        self.inner.respond(&inner_view)
    }

    fn runner(&self) -> Option<Box<dyn OutputRunner>> {
        Some(Box::new(LiftedRunner {
            inner: self.inner.runner()?,
            f: self.f.clone(),
            round: 0,
            buffer: VecDeque::new(),
        }))
    }
}

struct LiftedRunner {
    inner: Box<dyn OutputRunner>,
    f: DelayFunction,
    round: usize,
    buffer: VecDeque<Letter>,
}

impl OutputRunner for LiftedRunner {
    fn play(&mut self, letters: &[Letter]) -> Result<Letter> {
        self.buffer.extend(letters);
        let n = self.f.value(self.round);
        if self.buffer.len() < n {
            return Err(Error::Oracle(
                "lifted strategy starved of input letters".into(),
            ));
        }
        let forwarded: Vec<Letter> = self.buffer.drain(..n).collect();
        self.round += 1;
        self.inner.play(&forwarded)
    }

    fn key(&self) -> RunnerKey {
        let inner = self.inner.key();
        let mut k = vec![self.round.min(self.f.prefix().len()), inner.len()];
        k.extend(inner);
        k.extend(&self.buffer);
        k
    }

    fn boxed_clone(&self) -> Box<dyn OutputRunner> {
        Box::new(LiftedRunner {
            inner: self.inner.boxed_clone(),
            f: self.f.clone(),
            round: self.round,
            buffer: self.buffer.clone(),
        })
    }
}

/// The history-tracking strategy `τ(x, n_0⋯n_{i−1}) = τ′(x′) τ′(x′▷) τ′(x′▷▷) ⋯`
/// with `x′ = ▷^{n_0−1} x(0) ⋯ ▷^{n_{i−1}−1} x(i−1)`.
pub fn ht_from_skip_strategy(tau: SkipOracle) -> InputOracle {
    InputOracle::new(StrategyKind::Ht, move |view| match *view {
        InputView::Ht { outputs, delays } => {
            if outputs.len() != delays.len() {
                return Err(Error::Oracle(format!(
                    "{} moves but {} delay values",
                    outputs.len(),
                    delays.len()
                )));
            }
            let x = shift_encode_history(outputs, delays);
            let tau = tau.clone();
            Ok(InfiniteWord::lazy(move |j| {
                let mut w = x.clone();
                w.extend(std::iter::repeat_n(SkipSymbol::Skip, j));
                tau(&w)
            }))
        }
        other => Err(view_mismatch(StrategyKind::Ht, other.kind())),
    })
    .expect("HT is a Player-I kind")
}

/// Reads an HT machine as a skip-game strategy: the answer to `w` is the
/// first letter emitted after reading `w`.
pub fn skip_oracle_from_mealy(m: &MealyStrategy) -> Result<SkipOracle> {
    if m.kind() != StrategyKind::Ht {
        return Err(Error::KindMismatch {
            kind: m.kind().to_string(),
            player: "skip game (HT machine expected)".into(),
        });
    }
    let m = m.clone();
    Ok(Arc::new(move |w: &[SkipSymbol]| {
        match m.emission(m.run_skip_word(w)) {
            Emission::Word(u) => Ok(u.letter_at(0)),
            Emission::Symbol(_) => unreachable!("HT machines emit words"),
        }
    }))
}

/// Result of translating a skip-game strategy for Player O into a delay game.
pub struct SkipTranslation {
    /// `ℓ_i` for every computed `i`.
    pub ell: Vec<usize>,
    /// Delay function, exact on the computed rounds and 1 afterwards.
    pub f: DelayFunction,
    pub strategy: Arc<SkipDerived>,
}

/// Computes `ℓ_0..ℓ_{rounds−1}` for the skip-game machine `sigma` (IT kind,
/// emitting `Σ_O ∪ {▷}`) and the induced delay function and strategy.
///
/// `ℓ_i` is the largest number of rounds after which some play has seen at
/// most `i` non-skip answers, found as a longest path in the product of the
/// machine with a capped counter.
pub fn skip_strategy_to_delay_o(sigma: &MealyStrategy, rounds: usize) -> Result<SkipTranslation> {
    if sigma.kind() != StrategyKind::It {
        return Err(Error::KindMismatch {
            kind: sigma.kind().to_string(),
            player: "skip game (IT machine expected)".into(),
        });
    }
    let mut ell = Vec::with_capacity(rounds);
    for i in 0..rounds.max(1) {
        ell.push(longest_sparse_run(sigma, i)?);
    }
    let mut prefix = vec![ell[0] + 1];
    for w in ell.windows(2) {
        prefix.push(w[1] - w[0]);
    }
    prefix.truncate(rounds.max(1));
    let f = DelayFunction::new(prefix, 1)?;
    let strategy = Arc::new(SkipDerived {
        machine: sigma.clone(),
        f: f.clone(),
    });
    Ok(SkipTranslation { ell, f, strategy })
}

fn emits_letter(m: &MealyStrategy, q: usize) -> bool {
    matches!(m.emission(q), Emission::Symbol(SkipSymbol::Letter(_)))
}

fn longest_sparse_run(m: &MealyStrategy, cap: usize) -> Result<usize> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done(usize),
    }
    let n = m.state_count();
    let letters = m.input().len();
    let mut mark = vec![Mark::New; n * (cap + 1)];
    // iterative DFS: (node, next letter to try, best so far)
    let start = m.initial() * (cap + 1);
    let mut stack: Vec<(usize, usize, usize)> = vec![(start, 0, 0)];
    mark[start] = Mark::Open;
    while let Some(top) = stack.last_mut() {
        let (node, next, best) = *top;
        if next == letters {
            mark[node] = Mark::Done(best);
            stack.pop();
            if let Some(parent) = stack.last_mut() {
                parent.2 = parent.2.max(best + 1);
            }
            continue;
        }
        top.1 += 1;
        let (q, c) = (node / (cap + 1), node % (cap + 1));
        let q2 = m.step(q, Obs::In(next));
        let c2 = c + usize::from(emits_letter(m, q2));
        if c2 > cap {
            continue;
        }
        let child = q2 * (cap + 1) + c2;
        match mark[child] {
            Mark::Open => return Err(Error::SkipDivergent(cap)),
            Mark::Done(len) => {
                let top = stack.last_mut().expect("nonempty");
                top.2 = top.2.max(len + 1);
            }
            Mark::New => {
                mark[child] = Mark::Open;
                stack.push((child, 0, 0));
            }
        }
    }
    match mark[start] {
        Mark::Done(len) => Ok(len),
        _ => unreachable!("search finished"),
    }
}

/// `σ(u_0⋯u_i)` = the `i`-th non-skip answer of the skip-game machine on `u_0⋯u_i`.
pub struct SkipDerived {
    machine: MealyStrategy,
    f: DelayFunction,
}

impl SkipDerived {
    fn answers(&self, inputs: &[Letter]) -> Vec<Letter> {
        let m = &self.machine;
        let mut q = m.initial();
        let mut out = Vec::new();
        for &a in inputs {
            q = m.step(q, Obs::In(a));
            if let Emission::Symbol(SkipSymbol::Letter(b)) = m.emission(q) {
                out.push(*b);
            }
        }
        out
    }
}

impl OutputStrategy for SkipDerived {
    fn kind(&self) -> StrategyKind {
        StrategyKind::It
    }

    fn respond(&self, view: &OutputView<'_>) -> Result<Letter> {
        let inputs = match *view {
            OutputView::It { inputs } => inputs,
            OutputView::Rc { .. } => return Err(view_mismatch(StrategyKind::It, StrategyKind::Rc)),
        };
        let i = self.f.round_with_cumulative(inputs.len()).ok_or_else(|| {
            Error::Oracle(format!(
                "{} letters do not end a round of {}",
                inputs.len(),
                self.f
            ))
        })?;
        self.answers(inputs)
            .get(i)
            .copied()
            .ok_or_else(|| Error::Oracle(format!("no answer {i} determined yet")))
    }

    fn runner(&self) -> Option<Box<dyn OutputRunner>> {
        Some(Box::new(SkipDerivedRunner {
            machine: self.machine.clone(),
            state: self.machine.initial(),
            queue: VecDeque::new(),
        }))
    }
}

#[derive(Clone)]
struct SkipDerivedRunner {
    machine: MealyStrategy,
    state: usize,
    queue: VecDeque<Letter>,
}

impl OutputRunner for SkipDerivedRunner {
    fn play(&mut self, letters: &[Letter]) -> Result<Letter> {
        for &a in letters {
            self.state = self.machine.step(self.state, Obs::In(a));
            if let Emission::Symbol(SkipSymbol::Letter(b)) = self.machine.emission(self.state) {
                self.queue.push_back(*b);
            }
        }
        self.queue
            .pop_front()
            .ok_or_else(|| Error::Oracle("skip-game machine has not answered yet".into()))
    }

    fn key(&self) -> RunnerKey {
        let mut k = vec![self.state];
        k.extend(&self.queue);
        k
    }

    fn boxed_clone(&self) -> Box<dyn OutputRunner> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::delay::SkipSymbol::{Letter as L, Skip};
    use crate::strategy::InputStrategy;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn sym(s: SkipSymbol) -> Emission {
        Emission::Symbol(s)
    }

    /// init, W (after the first letter, skips), A/B (echo the current letter).
    fn echo_machine() -> MealyStrategy {
        MealyStrategy::from_fn(
            StrategyKind::It,
            ab(),
            ab(),
            0,
            vec![sym(Skip), sym(Skip), sym(L(0)), sym(L(1))],
            |q, t| match (q, t) {
                (0, _) => 1,
                (_, "a") => 2,
                _ => 3,
            },
        )
        .unwrap()
    }

    #[test]
    fn echo_machine_needs_one_extra_letter() {
        let t = skip_strategy_to_delay_o(&echo_machine(), 5).unwrap();
        assert_eq!(t.ell, vec![1, 2, 3, 4, 5]);
        assert_eq!(t.f, "2;1".parse().unwrap());
        // round 0 sees two letters and answers the second one
        let v = t
            .strategy
            .respond(&OutputView::It { inputs: &[0, 1] })
            .unwrap();
        assert_eq!(v, 1);
    }

    #[test]
    fn skip_free_machine_gives_delay_free() {
        let m = MealyStrategy::from_fn(StrategyKind::It, ab(), ab(), 0, vec![sym(L(0))], |_, _| 0)
            .unwrap();
        let t = skip_strategy_to_delay_o(&m, 4).unwrap();
        assert_eq!(t.ell, vec![0, 1, 2, 3]);
        assert_eq!(t.f, DelayFunction::delay_free());
    }

    #[test]
    fn all_skip_loop_diverges() {
        let m = MealyStrategy::from_fn(StrategyKind::It, ab(), ab(), 0, vec![sym(Skip)], |_, _| 0)
            .unwrap();
        assert!(matches!(
            skip_strategy_to_delay_o(&m, 3),
            Err(Error::SkipDivergent(0))
        ));
    }

    #[test]
    fn rc_uses_current_round_prefix() {
        let last: DelayFreeOracle = Arc::new(|x: &[Letter]| Ok(*x.last().unwrap_or(&0)));
        let s = rc_from_delay_free(last);
        assert_eq!(
            s.respond(&OutputView::Rc {
                inputs: &[0, 1, 2],
                round: 0
            })
            .unwrap(),
            0
        );
        assert_eq!(
            s.respond(&OutputView::Rc {
                inputs: &[0, 1, 2],
                round: 2
            })
            .unwrap(),
            2
        );
        assert!(s
            .respond(&OutputView::Rc {
                inputs: &[0],
                round: 1
            })
            .is_err());
    }

    #[test]
    fn lift_checks_order() {
        let s: Arc<dyn OutputStrategy> =
            Arc::new(rc_from_delay_free(Arc::new(|_: &[Letter]| Ok(0))));
        let f3: DelayFunction = "3;1".parse().unwrap();
        assert!(lift_monotone(s.clone(), &f3, &DelayFunction::delay_free()).is_err());
        let lifted = lift_monotone(s, &DelayFunction::delay_free(), &f3).unwrap();
        assert_eq!(
            lifted
                .respond(&OutputView::Rc {
                    inputs: &[1, 1, 1],
                    round: 0
                })
                .unwrap(),
            0
        );
    }

    #[test]
    fn ht_letters_follow_skip_extension() {
        let tau: SkipOracle = Arc::new(|w: &[SkipSymbol]| Ok(w.len() % 2));
        let s = ht_from_skip_strategy(tau);
        let w = s
            .respond(&InputView::Ht {
                outputs: &[0],
                delays: &[3],
            })
            .unwrap();
        // x' = ▷▷b has length 3
        assert_eq!(w.prefix(3).unwrap(), vec![1, 0, 1]);
        assert!(s
            .respond(&InputView::Ht {
                outputs: &[0],
                delays: &[]
            })
            .is_err());
    }
}
