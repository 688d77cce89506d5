use std::collections::VecDeque;

use crate::automata::{Alphabet, Letter, SEPARATOR_TOKEN, SKIP_TOKEN};
use crate::delay::SkipSymbol;
use crate::error::{Error, Result};
use crate::strategy::interface::view_mismatch;
use crate::strategy::{
    InfiniteWord, InputRunner, InputStrategy, InputView, OutputRunner, OutputStrategy, OutputView,
    RunnerKey, StrategyKind, UltimatelyPeriodicWord,
};
use crate::Player;

/// What a state emits: a word (Player I kinds) or a single symbol (Player O kinds).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Emission {
    Word(UltimatelyPeriodicWord),
    Symbol(SkipSymbol),
}

/// A single observed token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obs {
    Out(Letter),
    In(Letter),
    Sep,
    Skip,
}

/// A finite-state strategy: the observation stream of a query is read from
/// the initial state and the answer is emitted by the state reached.
///
/// Observation streams per kind, for O's moves `x`, I's letters `y`, round `i`:
/// `OT: x`, `LC: x #^n`, `IOT: x # y`, `HT: ▷^{f(0)-1} x(0) ▷^{f(1)-1} x(1) ⋯`,
/// `IT: y`, `RC: y(0)⋯y(i) # y(i+1)⋯`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MealyStrategy {
    kind: StrategyKind,
    input: Alphabet,
    output: Alphabet,
    tokens: Vec<String>,
    initial: usize,
    trans: Vec<usize>,
    emit: Vec<Emission>,
    out_tok: Vec<usize>,
    in_tok: Vec<usize>,
    sep_tok: Option<usize>,
    skip_tok: Option<usize>,
}

/// The observation tokens of `kind`, in canonical order.
pub fn observation_tokens(kind: StrategyKind, input: &Alphabet, output: &Alphabet) -> Vec<String> {
    let mut tokens: Vec<String> = Vec::new();
    let mut add = |s: &str| {
        if !tokens.iter().any(|t| t == s) {
            tokens.push(s.to_string());
        }
    };
    match kind {
        StrategyKind::It | StrategyKind::Rc => input.symbols().iter().for_each(|s| add(s)),
        _ => output.symbols().iter().for_each(|s| add(s)),
    }
    match kind {
        StrategyKind::Lc | StrategyKind::Rc => add(SEPARATOR_TOKEN),
        StrategyKind::Iot => {
            add(SEPARATOR_TOKEN);
            input.symbols().iter().for_each(|s| add(s));
        }
        StrategyKind::Ht => add(SKIP_TOKEN),
        StrategyKind::Ot | StrategyKind::It => {}
    }
    tokens
}

impl MealyStrategy {
    /// `trans[q][t]` is the successor of `q` on token `t` of
    /// [`observation_tokens`].
    pub fn new(
        kind: StrategyKind,
        input: Alphabet,
        output: Alphabet,
        initial: usize,
        trans: Vec<Vec<usize>>,
        emit: Vec<Emission>,
    ) -> Result<Self> {
        let tokens = observation_tokens(kind, &input, &output);
        let n = emit.len();
        if n == 0 || trans.len() != n || initial >= n {
            return Err(Error::invalid(
                "mealy strategy",
                "state tables are inconsistent",
            ));
        }
        for (q, row) in trans.iter().enumerate() {
            if row.len() != tokens.len() {
                return Err(Error::NonTotal(format!("state {q}")));
            }
            if row.iter().any(|&p| p >= n) {
                return Err(Error::invalid(
                    "mealy strategy",
                    format!("transition from {q} out of range"),
                ));
            }
        }
        for (q, e) in emit.iter().enumerate() {
            let ok = match (kind.player(), e) {
                (Player::I, Emission::Word(w)) => w
                    .head()
                    .iter()
                    .chain(w.period())
                    .all(|&a| input.contains(a)),
                (Player::O, Emission::Symbol(SkipSymbol::Letter(b))) => output.contains(*b),
                (Player::O, Emission::Symbol(SkipSymbol::Skip)) => true,
                _ => false,
            };
            if !ok {
                return Err(Error::invalid(
                    "mealy strategy",
                    format!("bad emission at state {q}"),
                ));
            }
        }
        let find = |s: &str| tokens.iter().position(|t| t == s);
        let out_tok = output
            .symbols()
            .iter()
            .map(|s| find(s).unwrap_or(usize::MAX))
            .collect();
        let in_tok = input
            .symbols()
            .iter()
            .map(|s| find(s).unwrap_or(usize::MAX))
            .collect();
        let sep_tok = find(SEPARATOR_TOKEN);
        let skip_tok = find(SKIP_TOKEN);
        Ok(MealyStrategy {
            kind,
            input,
            output,
            initial,
            trans: trans.concat(),
            emit,
            out_tok,
            in_tok,
            sep_tok,
            skip_tok,
            tokens,
        })
    }

    /// Builds a machine from a transition function on token symbols.
    pub fn from_fn(
        kind: StrategyKind,
        input: Alphabet,
        output: Alphabet,
        initial: usize,
        emit: Vec<Emission>,
        trans: impl Fn(usize, &str) -> usize,
    ) -> Result<Self> {
        let tokens = observation_tokens(kind, &input, &output);
        let table = (0..emit.len())
            .map(|q| tokens.iter().map(|t| trans(q, t)).collect())
            .collect();
        MealyStrategy::new(kind, input, output, initial, table, emit)
    }

    pub fn kind(&self) -> StrategyKind {
        self.kind
    }

    pub fn input(&self) -> &Alphabet {
        &self.input
    }

    pub fn output(&self) -> &Alphabet {
        &self.output
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn state_count(&self) -> usize {
        self.emit.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn emission(&self, q: usize) -> &Emission {
        &self.emit[q]
    }

    pub fn successor(&self, q: usize, token: usize) -> usize {
        self.trans[q * self.tokens.len() + token]
    }

    fn token(&self, obs: Obs) -> usize {
        let t = match obs {
            Obs::Out(b) => self.out_tok.get(b).copied(),
            Obs::In(a) => self.in_tok.get(a).copied(),
            Obs::Sep => self.sep_tok,
            Obs::Skip => self.skip_tok,
        };
        match t {
            Some(t) if t != usize::MAX => t,
            _ => panic!("{obs:?} is not observable by a {} strategy", self.kind),
        }
    }

    pub fn step(&self, q: usize, obs: Obs) -> usize {
        self.successor(q, self.token(obs))
    }

    pub fn run(&self, q: usize, stream: impl IntoIterator<Item = Obs>) -> usize {
        stream.into_iter().fold(q, |q, o| self.step(q, o))
    }

    /// True when the machine may only be used as a skip-game strategy.
    pub fn emits_skip(&self) -> bool {
        self.emit
            .iter()
            .any(|e| matches!(e, Emission::Symbol(SkipSymbol::Skip)))
    }

    fn word_at(&self, q: usize) -> &UltimatelyPeriodicWord {
        match &self.emit[q] {
            Emission::Word(w) => w,
            Emission::Symbol(_) => unreachable!("validated on construction"),
        }
    }

    fn letter_at(&self, q: usize) -> Result<Letter> {
        match self.emit[q] {
            Emission::Symbol(SkipSymbol::Letter(b)) => Ok(b),
            Emission::Symbol(SkipSymbol::Skip) => Err(Error::Oracle(format!(
                "state {q} emits the skip symbol in a delay game"
            ))),
            Emission::Word(_) => unreachable!("validated on construction"),
        }
    }

    /// Symbol emitted after reading a word of `Σ_I` (skip-game use).
    pub fn skip_response(&self, inputs: &[Letter]) -> SkipSymbol {
        let q = self.run(self.initial, inputs.iter().map(|&a| Obs::In(a)));
        match self.emit[q] {
            Emission::Symbol(s) => s,
            Emission::Word(ref w) => SkipSymbol::Letter(w.letter_at(0)),
        }
    }

    /// State reached on a skip word (HT machines used as skip-game strategies).
    pub fn run_skip_word(&self, word: &[SkipSymbol]) -> usize {
        self.run(
            self.initial,
            word.iter().map(|s| match s {
                SkipSymbol::Skip => Obs::Skip,
                SkipSymbol::Letter(b) => Obs::Out(*b),
            }),
        )
    }

    fn input_state(&self, view: &InputView<'_>) -> Result<usize> {
        if view.kind() != self.kind {
            return Err(view_mismatch(self.kind, view.kind()));
        }
        let outs = view.outputs().iter().map(|&b| Obs::Out(b));
        let q = self.run(self.initial, outs.clone());
        Ok(match *view {
            InputView::Ot { .. } => q,
            InputView::Lc { count, .. } => self.run(q, std::iter::repeat_n(Obs::Sep, count)),
            InputView::Iot { inputs, .. } => self.run(
                q,
                std::iter::once(Obs::Sep).chain(inputs.iter().map(|&a| Obs::In(a))),
            ),
            InputView::Ht { outputs, delays } => {
                if delays.len() != outputs.len() {
                    return Err(Error::Oracle(format!(
                        "history has {} delay values for {} moves",
                        delays.len(),
                        outputs.len()
                    )));
                }
                let mut q = self.initial;
                for (&b, &n) in outputs.iter().zip(delays) {
                    q = self.run(q, std::iter::repeat_n(Obs::Skip, n.saturating_sub(1)));
                    q = self.step(q, Obs::Out(b));
                }
                q
            }
        })
    }

    fn output_state(&self, view: &OutputView<'_>) -> Result<usize> {
        if view.kind() != self.kind {
            return Err(view_mismatch(self.kind, view.kind()));
        }
        Ok(match *view {
            OutputView::It { inputs } => self.run(self.initial, inputs.iter().map(|&a| Obs::In(a))),
            OutputView::Rc { inputs, round } => {
                if round >= inputs.len() {
                    return Err(Error::Oracle(format!(
                        "round {round} queried with only {} input letters",
                        inputs.len()
                    )));
                }
                let (now, ahead) = inputs.split_at(round + 1);
                let stream = now
                    .iter()
                    .map(|&a| Obs::In(a))
                    .chain(std::iter::once(Obs::Sep))
                    .chain(ahead.iter().map(|&a| Obs::In(a)));
                self.run(self.initial, stream)
            }
        })
    }

    fn sep_power(&self, g: &[usize], n: usize) -> Vec<usize> {
        g.iter()
            .map(|&p| self.run(p, std::iter::repeat_n(Obs::Sep, n)))
            .collect()
    }
}

impl InputStrategy for MealyStrategy {
    fn kind(&self) -> StrategyKind {
        self.kind
    }

    fn respond(&self, view: &InputView<'_>) -> Result<InfiniteWord> {
        if self.kind.player() != Player::I {
            return Err(view_mismatch(self.kind, view.kind()));
        }
        let q = self.input_state(view)?;
        Ok(self.word_at(q).clone().into())
    }

    fn runner(&self) -> Option<Box<dyn InputRunner>> {
        if self.kind.player() != Player::I {
            return None;
        }
        let identity: Vec<usize> = (0..self.state_count()).collect();
        let g = match self.kind {
            StrategyKind::Iot => identity.iter().map(|&p| self.step(p, Obs::Sep)).collect(),
            _ => identity,
        };
        Some(Box::new(MealyInputRunner {
            m: self.clone(),
            s: self.initial,
            g,
        }))
    }
}

impl OutputStrategy for MealyStrategy {
    fn kind(&self) -> StrategyKind {
        self.kind
    }

    fn respond(&self, view: &OutputView<'_>) -> Result<Letter> {
        if self.kind.player() != Player::O {
            return Err(view_mismatch(self.kind, view.kind()));
        }
        let q = self.output_state(view)?;
        self.letter_at(q)
    }

    fn runner(&self) -> Option<Box<dyn OutputRunner>> {
        if self.kind.player() != Player::O {
            return None;
        }
        Some(Box::new(MealyOutputRunner {
            m: self.clone(),
            s: self.initial,
            pending: VecDeque::new(),
        }))
    }
}

/// `s`: state after O's moves (after the shift encoding for HT);
/// `g`: state transformation of the suffix (`#^n` for LC, `# y` for IOT).
#[derive(Clone)]
struct MealyInputRunner {
    m: MealyStrategy,
    s: usize,
    g: Vec<usize>,
}

impl InputRunner for MealyInputRunner {
    fn play(&mut self, n: usize) -> Result<Vec<Letter>> {
        let q = match self.m.kind {
            StrategyKind::Lc | StrategyKind::Iot => self.g[self.s],
            _ => self.s,
        };
        let u = self.m.word_at(q).prefix(n);
        match self.m.kind {
            StrategyKind::Lc => self.g = self.m.sep_power(&self.g, n),
            StrategyKind::Iot => {
                for &a in &u {
                    for p in self.g.iter_mut() {
                        *p = self.m.step(*p, Obs::In(a));
                    }
                }
            }
            StrategyKind::Ht => {
                self.s = self.m.run(self.s, std::iter::repeat_n(Obs::Skip, n - 1));
            }
            _ => {}
        }
        Ok(u)
    }

    fn observe(&mut self, v: Letter) {
        self.s = self.m.step(self.s, Obs::Out(v));
    }

    fn key(&self) -> RunnerKey {
        match self.m.kind {
            StrategyKind::Lc | StrategyKind::Iot => {
                let mut k = vec![self.s];
                k.extend(&self.g);
                k
            }
            _ => vec![self.s],
        }
    }

    fn boxed_clone(&self) -> Box<dyn InputRunner> {
        Box::new(self.clone())
    }
}

/// `s`: state after the letters up to the current round (all letters for IT);
/// `pending`: letters beyond the current round (RC only).
#[derive(Clone)]
struct MealyOutputRunner {
    m: MealyStrategy,
    s: usize,
    pending: VecDeque<Letter>,
}

impl OutputRunner for MealyOutputRunner {
    fn play(&mut self, letters: &[Letter]) -> Result<Letter> {
        match self.m.kind {
            StrategyKind::It => {
                self.s = self.m.run(self.s, letters.iter().map(|&a| Obs::In(a)));
                self.m.letter_at(self.s)
            }
            _ => {
                self.pending.extend(letters);
                let a = self
                    .pending
                    .pop_front()
                    .ok_or_else(|| Error::Oracle("round without input letters".into()))?;
                self.s = self.m.step(self.s, Obs::In(a));
                let q = self.m.run(
                    self.m.step(self.s, Obs::Sep),
                    self.pending.iter().map(|&a| Obs::In(a)),
                );
                self.m.letter_at(q)
            }
        }
    }

    fn key(&self) -> RunnerKey {
        let mut k = vec![self.s, self.pending.len()];
        k.extend(&self.pending);
        k
    }

    fn boxed_clone(&self) -> Box<dyn OutputRunner> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bc() -> Alphabet {
        Alphabet::new(["b", "c"]).unwrap()
    }

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn word(h: &[Letter], p: &[Letter]) -> Emission {
        Emission::Word(UltimatelyPeriodicWord::new(h.to_vec(), p.to_vec()).unwrap())
    }

    #[test]
    fn token_sets_per_kind() {
        let abc = Alphabet::new(["a", "b", "c"]).unwrap();
        assert_eq!(
            observation_tokens(StrategyKind::Iot, &abc, &bc()),
            ["b", "c", "#", "a"]
        );
        assert_eq!(
            observation_tokens(StrategyKind::Ht, &abc, &bc()),
            ["b", "c", "▷"]
        );
        assert_eq!(
            observation_tokens(StrategyKind::Rc, &abc, &bc()),
            ["a", "b", "c", "#"]
        );
    }

    #[test]
    fn lc_machine_counts_letters() {
        // toggles on every delivered letter
        let m = MealyStrategy::from_fn(
            StrategyKind::Lc,
            ab(),
            bc(),
            0,
            vec![word(&[], &[0, 1]), word(&[], &[1, 0])],
            |q, t| if t == "#" { 1 - q } else { q },
        )
        .unwrap();
        let w = InputStrategy::respond(
            &m,
            &InputView::Lc {
                outputs: &[0],
                count: 3,
            },
        )
        .unwrap();
        assert_eq!(w.prefix(2).unwrap(), vec![1, 0]);
        let mut r = InputStrategy::runner(&m).unwrap();
        assert_eq!(r.play(3).unwrap(), vec![0, 1, 0]);
        r.observe(1);
        assert_eq!(r.play(1).unwrap(), vec![1]);
    }

    #[test]
    fn rc_runner_matches_respond() {
        // emits b iff the letter at the round position is b
        let m = MealyStrategy::from_fn(
            StrategyKind::Rc,
            ab(),
            ab(),
            0,
            vec![
                Emission::Symbol(SkipSymbol::Letter(0)),
                Emission::Symbol(SkipSymbol::Letter(0)),
                Emission::Symbol(SkipSymbol::Letter(0)),
                Emission::Symbol(SkipSymbol::Letter(1)),
            ],
            |q, t| match (q, t) {
                (0 | 1, "a") => 0,
                (0 | 1, "b") => 1,
                (0, "#") => 2,
                (1, "#") => 3,
                (q, _) => q,
            },
        )
        .unwrap();
        let inputs = [0, 1, 1, 0, 0];
        let mut r = OutputStrategy::runner(&m).unwrap();
        let rounds: [&[Letter]; 3] = [&inputs[..3], &inputs[3..4], &inputs[4..5]];
        let mut seen = 0;
        for (i, u) in rounds.iter().enumerate() {
            seen += u.len();
            let expect = OutputStrategy::respond(
                &m,
                &OutputView::Rc {
                    inputs: &inputs[..seen],
                    round: i,
                },
            )
            .unwrap();
            assert_eq!(r.play(u).unwrap(), expect);
        }
    }

    #[test]
    fn rejects_wrong_emissions() {
        let bad = MealyStrategy::new(
            StrategyKind::It,
            ab(),
            bc(),
            0,
            vec![vec![0, 0]],
            vec![word(&[], &[0])],
        );
        assert!(bad.is_err());
    }
}
