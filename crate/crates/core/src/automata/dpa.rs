use std::collections::HashSet;
use std::fmt::Write as _;

use crate::automata::{Alphabet, Lasso, Letter};
use crate::error::{Error, Result};
use crate::Player;

pub type State = usize;

/// A deterministic parity automaton over `Σ_I × Σ_O` with priorities on states.
///
/// A run is accepting when the largest priority visited infinitely often is
/// even. The transition function is total; this is checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dpa {
    input: Alphabet,
    output: Alphabet,
    initial: State,
    priority: Vec<u32>,
    /// Indexed by `(q * |Σ_I| + a) * |Σ_O| + b`.
    delta: Vec<State>,
    /// `settled[q]` is the winner of every run passing through `q`, if fixed.
    settled: Vec<Option<Player>>,
}

impl Dpa {
    pub fn new(
        input: Alphabet,
        output: Alphabet,
        initial: State,
        priority: Vec<u32>,
        delta: Vec<State>,
    ) -> Result<Self> {
        let n = priority.len();
        if n == 0 {
            return Err(Error::invalid("automaton", "at least one state required"));
        }
        if initial >= n {
            return Err(Error::Undeclared {
                what: "state",
                name: initial.to_string(),
            });
        }
        if delta.len() != n * input.len() * output.len() {
            return Err(Error::NonTotal(format!(
                "expected {} transitions, got {}",
                n * input.len() * output.len(),
                delta.len()
            )));
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= n) {
            return Err(Error::Undeclared {
                what: "state",
                name: bad.to_string(),
            });
        }
        let mut dpa = Dpa {
            input,
            output,
            initial,
            priority,
            delta,
            settled: Vec::new(),
        };
        dpa.settled = dpa.compute_settled();
        Ok(dpa)
    }

    /// Builds an automaton from a transition closure `(q, a, b) -> q'`.
    pub fn from_fn(
        input: Alphabet,
        output: Alphabet,
        initial: State,
        priority: Vec<u32>,
        delta: impl Fn(State, Letter, Letter) -> State,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(priority.len() * input.len() * output.len());
        for q in 0..priority.len() {
            for a in input.letters() {
                for b in output.letters() {
                    table.push(delta(q, a, b));
                }
            }
        }
        Dpa::new(input, output, initial, priority, table)
    }

    pub fn input(&self) -> &Alphabet {
        &self.input
    }

    pub fn output(&self) -> &Alphabet {
        &self.output
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self, q: State) -> u32 {
        self.priority[q]
    }

    pub fn priorities(&self) -> &[u32] {
        &self.priority
    }

    /// Unchecked transition lookup for internal hot loops.
    #[inline]
    pub(crate) fn delta(&self, q: State, a: Letter, b: Letter) -> State {
        self.delta[(q * self.input.len() + a) * self.output.len() + b]
    }

    /// The successor of `q` on the pair `(a, b)`.
    pub fn step(&self, q: State, a: Letter, b: Letter) -> Result<State> {
        if q >= self.state_count() {
            return Err(Error::Undeclared {
                what: "state",
                name: q.to_string(),
            });
        }
        if !self.input.contains(a) || !self.output.contains(b) {
            return Err(Error::invalid(
                "letter",
                format!("pair ({a}, {b}) outside the alphabet"),
            ));
        }
        Ok(self.delta(q, a, b))
    }

    /// Runs the automaton on a finite word of pairs.
    pub fn run(&self, from: State, word: &[(Letter, Letter)]) -> Result<State> {
        word.iter().try_fold(from, |q, &(a, b)| self.step(q, a, b))
    }

    /// Decides acceptance of `stem · cycle^ω`.
    ///
    /// The run is advanced until the pair (automaton state, position within
    /// the cycle) repeats; the run segment between the two occurrences is
    /// the recurring part and its maximal priority decides.
    pub fn accepts_lasso(&self, lasso: &Lasso) -> Result<bool> {
        let q = self.run(self.initial, lasso.stem())?;
        let cycle = lasso.cycle();
        for &(a, b) in cycle {
            if !self.input.contains(a) || !self.output.contains(b) {
                return Err(Error::invalid(
                    "letter",
                    format!("pair ({a}, {b}) outside the alphabet"),
                ));
            }
        }
        // seen[q * |cycle| + pos] = step index at which (q, pos) was first visited
        let mut seen = vec![usize::MAX; self.state_count() * cycle.len()];
        let mut trace = Vec::new();
        let (mut q, mut pos, mut step) = (q, 0usize, 0usize);
        loop {
            let key = q * cycle.len() + pos;
            if seen[key] != usize::MAX {
                let max = trace[seen[key]..].iter().copied().max().unwrap_or(0);
                return Ok(max % 2 == 0);
            }
            seen[key] = step;
            trace.push(self.priority[q]);
            let (a, b) = cycle[pos];
            q = self.delta(q, a, b);
            pos = (pos + 1) % cycle.len();
            step += 1;
        }
    }

    /// The automaton accepting exactly the complement language.
    pub fn complement(&self) -> Dpa {
        let mut c = self.clone();
        for p in &mut c.priority {
            *p += 1;
        }
        c.settled = c.compute_settled();
        c
    }

    /// The winner every run through `q` is bound to, if `q` only reaches
    /// priorities of a single parity.
    pub fn settled_winner(&self, q: State) -> Option<Player> {
        self.settled[q]
    }

    fn successors(&self, q: State) -> impl Iterator<Item = State> + '_ {
        let width = self.input.len() * self.output.len();
        self.delta[q * width..(q + 1) * width].iter().copied()
    }

    fn compute_settled(&self) -> Vec<Option<Player>> {
        (0..self.state_count())
            .map(|q| {
                let mut seen = HashSet::from([q]);
                let mut stack = vec![q];
                let (mut even, mut odd) = (false, false);
                while let Some(s) = stack.pop() {
                    if self.priority[s].is_multiple_of(2) {
                        even = true;
                    } else {
                        odd = true;
                    }
                    for t in self.successors(s) {
                        if seen.insert(t) {
                            stack.push(t);
                        }
                    }
                }
                match (even, odd) {
                    (true, false) => Some(Player::O),
                    (false, true) => Some(Player::I),
                    _ => None,
                }
            })
            .collect()
    }

    /// True if every state that is not settled has a priority favouring `player`,
    /// i.e. `player` can only lose by reaching a state settled for the opponent.
    pub fn is_safety_for(&self, player: Player) -> bool {
        (0..self.state_count())
            .all(|q| self.settled[q].is_some() || Player::of_priority(self.priority[q]) == player)
    }

    /// Parses the line-based automaton format.
    pub fn parse(text: &str) -> Result<Self> {
        parse_dpa(text)
    }

    /// Serializes in the line-based automaton format.
    pub fn to_text(&self) -> String {
        let mut out = String::from("dpa\n");
        let _ = writeln!(out, "sigmaI {}", self.input.symbols().join(" "));
        let _ = writeln!(out, "sigmaO {}", self.output.symbols().join(" "));
        let _ = writeln!(out, "states {}", self.state_count());
        let _ = writeln!(out, "init {}", self.initial);
        for (q, p) in self.priority.iter().enumerate() {
            let _ = writeln!(out, "prio {q} {p}");
        }
        for q in 0..self.state_count() {
            for a in self.input.letters() {
                for b in self.output.letters() {
                    let _ = writeln!(
                        out,
                        "trans {q} {} {} {}",
                        self.input.symbol(a),
                        self.output.symbol(b),
                        self.delta(q, a, b)
                    );
                }
            }
        }
        out
    }
}

fn parse_dpa(text: &str) -> Result<Dpa> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::syntax(1, "empty input"))?;
    if header != "dpa" {
        return Err(Error::syntax(
            line,
            format!("expected `dpa`, found `{header}`"),
        ));
    }

    let mut input: Option<Alphabet> = None;
    let mut output: Option<Alphabet> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<(usize, String)> = None;
    let mut prio: Vec<Option<u32>> = Vec::new();
    let mut delta: Vec<Option<State>> = Vec::new();

    let parse_state = |line: usize, tok: &str, states: Option<usize>| -> Result<State> {
        let n =
            states.ok_or_else(|| Error::syntax(line, "`states` must precede state references"))?;
        let q: usize = tok
            .parse()
            .map_err(|_| Error::syntax(line, format!("invalid state `{tok}`")))?;
        if q >= n {
            return Err(Error::Undeclared {
                what: "state",
                name: tok.to_string(),
            });
        }
        Ok(q)
    };

    for (line, content) in lines {
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "sigmaI" | "sigmaO" => {
                let alphabet = Alphabet::new(toks[1..].iter().copied())
                    .map_err(|e| Error::syntax(line, e.to_string()))?;
                let slot = if toks[0] == "sigmaI" {
                    &mut input
                } else {
                    &mut output
                };
                if slot.replace(alphabet).is_some() {
                    return Err(Error::syntax(line, format!("duplicate `{}` line", toks[0])));
                }
            }
            "states" => {
                if toks.len() != 2 {
                    return Err(Error::syntax(line, "expected `states <n>`"));
                }
                let n: usize = toks[1]
                    .parse()
                    .map_err(|_| Error::syntax(line, "invalid state count"))?;
                if n == 0 {
                    return Err(Error::syntax(line, "state count must be positive"));
                }
                if states.replace(n).is_some() {
                    return Err(Error::syntax(line, "duplicate `states` line"));
                }
                prio = vec![None; n];
            }
            "init" => {
                if toks.len() != 2 {
                    return Err(Error::syntax(line, "expected `init <q>`"));
                }
                let q = parse_state(line, toks[1], states)?;
                if initial.replace((q, toks[1].to_string())).is_some() {
                    return Err(Error::syntax(line, "duplicate `init` line"));
                }
            }
            "prio" => {
                if toks.len() != 3 {
                    return Err(Error::syntax(line, "expected `prio <q> <p>`"));
                }
                let q = parse_state(line, toks[1], states)?;
                let p: u32 = toks[2]
                    .parse()
                    .map_err(|_| Error::syntax(line, format!("invalid priority `{}`", toks[2])))?;
                if prio[q].replace(p).is_some() {
                    return Err(Error::syntax(
                        line,
                        format!("duplicate priority for state {q}"),
                    ));
                }
            }
            "trans" => {
                if toks.len() != 5 {
                    return Err(Error::syntax(line, "expected `trans <q> <a> <b> <q'>`"));
                }
                let (ia, oa) = match (&input, &output) {
                    (Some(i), Some(o)) => (i, o),
                    _ => return Err(Error::syntax(line, "alphabets must precede transitions")),
                };
                let q = parse_state(line, toks[1], states)?;
                let a = ia.require(toks[2])?;
                let b = oa.require(toks[3])?;
                let t = parse_state(line, toks[4], states)?;
                let n = states.unwrap_or(0);
                if delta.is_empty() {
                    delta = vec![None; n * ia.len() * oa.len()];
                }
                let idx = (q * ia.len() + a) * oa.len() + b;
                if delta[idx].replace(t).is_some() {
                    return Err(Error::Duplicate(format!("({q}, {}, {})", toks[2], toks[3])));
                }
            }
            other => return Err(Error::syntax(line, format!("unknown directive `{other}`"))),
        }
    }

    let input = input.ok_or_else(|| Error::syntax(0, "missing `sigmaI` line"))?;
    let output = output.ok_or_else(|| Error::syntax(0, "missing `sigmaO` line"))?;
    let n = states.ok_or_else(|| Error::syntax(0, "missing `states` line"))?;
    let (initial, _) = initial.ok_or_else(|| Error::syntax(0, "missing `init` line"))?;
    let priority = prio
        .iter()
        .enumerate()
        .map(|(q, p)| {
            p.ok_or_else(|| Error::invalid("automaton", format!("state {q} has no priority")))
        })
        .collect::<Result<Vec<_>>>()?;
    if delta.is_empty() {
        delta = vec![None; n * input.len() * output.len()];
    }
    let mut table = Vec::with_capacity(delta.len());
    for (idx, t) in delta.iter().enumerate() {
        match t {
            Some(t) => table.push(*t),
            None => {
                let b = idx % output.len();
                let a = (idx / output.len()) % input.len();
                let q = idx / (output.len() * input.len());
                return Err(Error::NonTotal(format!(
                    "({q}, {}, {})",
                    input.symbol(a),
                    output.symbol(b)
                )));
            }
        }
    }
    Dpa::new(input, output, initial, priority, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIVIAL: &str = "dpa\nsigmaI a b\nsigmaO x y\nstates 1\ninit 0\nprio 0 0\n\
        trans 0 a x 0\ntrans 0 a y 0\ntrans 0 b x 0\ntrans 0 b y 0\n";

    fn single(priority: u32) -> Dpa {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        Dpa::from_fn(ab.clone(), ab, 0, vec![priority], |_, _, _| 0).unwrap()
    }

    #[test]
    fn parses_smallest_total_automaton() {
        let a = Dpa::parse(TRIVIAL).unwrap();
        assert_eq!(a.state_count(), 1);
        assert_eq!(Dpa::parse(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn missing_transition_is_non_total() {
        let text = TRIVIAL.replace("trans 0 b y 0\n", "");
        match Dpa::parse(&text) {
            Err(Error::NonTotal(msg)) => assert!(msg.contains("b, y")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_transition_rejected() {
        let text = format!("{TRIVIAL}trans 0 a x 0\n");
        assert!(matches!(Dpa::parse(&text), Err(Error::Duplicate(_))));
    }

    #[test]
    fn undeclared_symbol_and_state() {
        let text = TRIVIAL.replace("trans 0 a x 0", "trans 0 z x 0");
        assert!(matches!(
            Dpa::parse(&text),
            Err(Error::Undeclared { what: "symbol", .. })
        ));
        let text = TRIVIAL.replace("trans 0 a x 0", "trans 0 a x 3");
        assert!(matches!(
            Dpa::parse(&text),
            Err(Error::Undeclared { what: "state", .. })
        ));
    }

    #[test]
    fn syntax_error_carries_line() {
        let text = "dpa\n# comment\nsigmaI a\nbogus\n";
        match Dpa::parse(text) {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_priority_rejected() {
        let text = TRIVIAL.replace("prio 0 0\n", "");
        assert!(matches!(Dpa::parse(&text), Err(Error::Invalid { .. })));
    }

    #[test]
    fn single_state_acceptance() {
        let l = Lasso::new(vec![(0, 1)], vec![(1, 0), (0, 0)]).unwrap();
        assert!(single(0).accepts_lasso(&l).unwrap());
        assert!(!single(1).accepts_lasso(&l).unwrap());
        assert_eq!(single(0).step(0, 1, 1).unwrap(), 0);
    }

    #[test]
    fn complement_shifts_priorities() {
        let c = single(0).complement();
        assert_eq!(c.priority(0), 1);
        let l = Lasso::new(vec![], vec![(0, 0)]).unwrap();
        assert!(!c.accepts_lasso(&l).unwrap());
        assert!(c.complement().accepts_lasso(&l).unwrap());
    }

    #[test]
    fn step_validates_arguments() {
        let a = single(0);
        assert!(a.step(1, 0, 0).is_err());
        assert!(a.step(0, 2, 0).is_err());
    }

    #[test]
    fn settled_states() {
        assert_eq!(single(0).settled_winner(0), Some(Player::O));
        assert_eq!(single(3).settled_winner(0), Some(Player::I));
    }
}
