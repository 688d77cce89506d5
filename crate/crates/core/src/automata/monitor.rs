use crate::automata::{Alphabet, Lasso, Letter};
use crate::error::{Error, Result};
use crate::Player;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Control {
    /// Counting the leading filler block.
    FirstBlock,
    /// Counting the second filler block down against the first one.
    SecondBlock,
    /// The pattern can no longer occur; absorbing.
    Satisfied,
    /// The pattern occurred; absorbing.
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonitorState {
    pub control: Control,
    pub counter: u64,
    /// Set once the second block is strictly longer than the first.
    pub exceeded: bool,
    /// The first two output letters, recorded as they arrive.
    pub echoes: [Option<Letter>; 2],
    pub seen: u8,
}

/// One-counter safety monitor for the block-echo condition.
///
/// The monitor is violated exactly when the input word starts with
/// `fill^{n0} β(0) fill^{n1} β(1)` with `n1 > n0`, where `β(0), β(1)` are the
/// first two output letters read as input symbols. Output letters must differ
/// from the filler. Player O wins a play iff the monitor is never violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SafetyCounterMonitor {
    input: Alphabet,
    output: Alphabet,
    filler: Letter,
    /// Input letter carrying the same symbol as each output letter.
    echo: Vec<Option<Letter>>,
}

impl SafetyCounterMonitor {
    pub fn new(input: Alphabet, output: Alphabet, filler: &str) -> Result<Self> {
        let filler = input.require(filler)?;
        if output.letter(input.symbol(filler)).is_some() {
            return Err(Error::invalid(
                "monitor",
                "the filler symbol must not be an output symbol",
            ));
        }
        let echo = output.symbols().iter().map(|s| input.letter(s)).collect();
        Ok(SafetyCounterMonitor {
            input,
            output,
            filler,
            echo,
        })
    }

    pub fn input(&self) -> &Alphabet {
        &self.input
    }

    pub fn output(&self) -> &Alphabet {
        &self.output
    }

    pub fn filler(&self) -> Letter {
        self.filler
    }

    /// `monitor`, `sigmaI ...`, `sigmaO ...`, `filler <sym>`.
    pub fn to_text(&self) -> String {
        format!(
            "monitor\nsigmaI {}\nsigmaO {}\nfiller {}\n",
            self.input.symbols().join(" "),
            self.output.symbols().join(" "),
            self.input.symbol(self.filler)
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        match lines.next() {
            Some((_, "monitor")) => {}
            Some((line, other)) => {
                return Err(Error::syntax(
                    line,
                    format!("expected `monitor`, found `{other}`"),
                ))
            }
            None => return Err(Error::syntax(1, "empty input")),
        }
        let (mut input, mut output, mut filler) = (None, None, None);
        for (line, content) in lines {
            let toks: Vec<&str> = content.split_whitespace().collect();
            match toks[0] {
                "sigmaI" => {
                    input = Some(
                        Alphabet::new(toks[1..].iter().copied())
                            .map_err(|e| Error::syntax(line, e.to_string()))?,
                    )
                }
                "sigmaO" => {
                    output = Some(
                        Alphabet::new(toks[1..].iter().copied())
                            .map_err(|e| Error::syntax(line, e.to_string()))?,
                    )
                }
                "filler" if toks.len() == 2 => filler = Some(toks[1].to_string()),
                other => return Err(Error::syntax(line, format!("unexpected `{other}`"))),
            }
        }
        let missing = |what: &str| Error::syntax(0, format!("missing `{what}` line"));
        SafetyCounterMonitor::new(
            input.ok_or_else(|| missing("sigmaI"))?,
            output.ok_or_else(|| missing("sigmaO"))?,
            &filler.ok_or_else(|| missing("filler"))?,
        )
    }

    pub fn start(&self) -> MonitorState {
        MonitorState {
            control: Control::FirstBlock,
            counter: 0,
            exceeded: false,
            echoes: [None, None],
            seen: 0,
        }
    }

    pub fn step(&self, state: &MonitorState, a: Letter, b: Letter) -> MonitorState {
        let mut s = state.clone();
        if matches!(s.control, Control::Satisfied | Control::Violated) {
            return s;
        }
        if (s.seen as usize) < 2 {
            s.echoes[s.seen as usize] = Some(b);
            s.seen += 1;
        }
        let echoes =
            |slot: usize, s: &MonitorState| s.echoes[slot].and_then(|b| self.echo[b]) == Some(a);
        match s.control {
            Control::FirstBlock if a == self.filler => s.counter += 1,
            Control::FirstBlock => {
                s.control = if echoes(0, &s) {
                    Control::SecondBlock
                } else {
                    Control::Satisfied
                };
            }
            Control::SecondBlock if a == self.filler => {
                if s.counter > 0 {
                    s.counter -= 1;
                } else {
                    s.exceeded = true;
                }
            }
            Control::SecondBlock => {
                s.control = if s.exceeded && echoes(1, &s) {
                    Control::Violated
                } else {
                    Control::Satisfied
                };
            }
            Control::Satisfied | Control::Violated => unreachable!(),
        }
        s
    }

    pub fn run(&self, word: &[(Letter, Letter)]) -> MonitorState {
        word.iter()
            .fold(self.start(), |s, &(a, b)| self.step(&s, a, b))
    }

    pub fn is_violated(&self, state: &MonitorState) -> bool {
        state.control == Control::Violated
    }

    pub fn settled_winner(&self, state: &MonitorState) -> Option<Player> {
        match state.control {
            Control::Satisfied => Some(Player::O),
            Control::Violated => Some(Player::I),
            _ => None,
        }
    }

    /// Winner of the ultimately periodic play `lasso`.
    ///
    /// Control only changes on non-filler input letters, so once a full pass
    /// over the cycle leaves the control unchanged it never changes again
    /// and the monitor is never violated.
    pub fn lasso_winner(&self, lasso: &Lasso) -> Player {
        let mut s = self.run(lasso.stem());
        loop {
            let before = s.control;
            for &(a, b) in lasso.cycle() {
                s = self.step(&s, a, b);
            }
            if let Some(w) = self.settled_winner(&s) {
                return w;
            }
            if s.control == before {
                return Player::O;
            }
        }
    }
}
