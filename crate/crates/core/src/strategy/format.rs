//! Line-based Mealy strategy format:
//!
//! ```text
//! mealy OT
//! sigmaI a b c
//! sigmaO b c
//! obs b c
//! states 3
//! init 0
//! emitword 0 |a
//! obstrans 0 b 1
//! ```
//!
//! `emitword <q> <head>|<period>` for Player-I kinds, `emit <q> <sym>` for
//! Player-O kinds (`▷` allowed for skip-game machines). `obstrans` must be
//! total over the `obs` tokens. Lines starting with `#` are comments.

use std::fmt::Write as _;

use crate::automata::{Alphabet, SKIP_TOKEN};
use crate::delay::SkipSymbol;
use crate::error::{Error, Result};
use crate::strategy::mealy::{observation_tokens, Emission};
use crate::strategy::{MealyStrategy, StrategyKind, UltimatelyPeriodicWord};
use crate::Player;

impl MealyStrategy {
    pub fn parse(text: &str) -> Result<Self> {
        parse_mealy(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("mealy {}\n", self.kind());
        let _ = writeln!(out, "sigmaI {}", self.input().symbols().join(" "));
        let _ = writeln!(out, "sigmaO {}", self.output().symbols().join(" "));
        let _ = writeln!(out, "obs {}", self.tokens().join(" "));
        let _ = writeln!(out, "states {}", self.state_count());
        let _ = writeln!(out, "init {}", self.initial());
        for q in 0..self.state_count() {
            match self.emission(q) {
                Emission::Word(w) => {
                    let _ = writeln!(out, "emitword {q} {}", w.render(self.input()));
                }
                Emission::Symbol(s) => {
                    let _ = writeln!(out, "emit {q} {}", s.display(self.output()));
                }
            }
        }
        for q in 0..self.state_count() {
            for (t, tok) in self.tokens().iter().enumerate() {
                let _ = writeln!(out, "obstrans {q} {tok} {}", self.successor(q, t));
            }
        }
        out
    }
}

fn parse_mealy(text: &str) -> Result<MealyStrategy> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::syntax(1, "empty input"))?;
    let kind: StrategyKind = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["mealy", k] => k
            .parse()
            .map_err(|e: Error| Error::syntax(line, e.to_string()))?,
        _ => {
            return Err(Error::syntax(
                line,
                format!("expected `mealy <kind>`, found `{header}`"),
            ))
        }
    };

    let mut input: Option<Alphabet> = None;
    let mut output: Option<Alphabet> = None;
    let mut obs: Option<(usize, Vec<String>)> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<usize> = None;
    let mut emits: Vec<Option<(usize, String, bool)>> = Vec::new();
    let mut trans: Vec<(usize, usize, String, usize)> = Vec::new();

    let state = |line: usize, tok: &str, states: Option<usize>| -> Result<usize> {
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
            "obs" => {
                let set = toks[1..].iter().map(|s| s.to_string()).collect();
                if obs.replace((line, set)).is_some() {
                    return Err(Error::syntax(line, "duplicate `obs` line"));
                }
            }
            "states" => {
                let n: usize = match toks[..] {
                    [_, n] => n
                        .parse()
                        .map_err(|_| Error::syntax(line, "invalid state count"))?,
                    _ => return Err(Error::syntax(line, "expected `states <n>`")),
                };
                if n == 0 {
                    return Err(Error::syntax(line, "state count must be positive"));
                }
                if states.replace(n).is_some() {
                    return Err(Error::syntax(line, "duplicate `states` line"));
                }
                emits = vec![None; n];
            }
            "init" => {
                let q = match toks[..] {
                    [_, q] => state(line, q, states)?,
                    _ => return Err(Error::syntax(line, "expected `init <q>`")),
                };
                if initial.replace(q).is_some() {
                    return Err(Error::syntax(line, "duplicate `init` line"));
                }
            }
            "emit" | "emitword" => {
                let (q, value) = match toks[..] {
                    [_, q, v] => (state(line, q, states)?, v),
                    _ => {
                        return Err(Error::syntax(
                            line,
                            format!("expected `{} <q> <value>`", toks[0]),
                        ))
                    }
                };
                let wants_word = kind.player() == Player::I;
                if (toks[0] == "emitword") != wants_word {
                    return Err(Error::syntax(
                        line,
                        format!("`{}` is not allowed for {kind} strategies", toks[0]),
                    ));
                }
                if emits[q]
                    .replace((line, value.to_string(), wants_word))
                    .is_some()
                {
                    return Err(Error::Duplicate(format!("emission of state {q}")));
                }
            }
            "obstrans" => match toks[..] {
                [_, q, t, p] => {
                    let q = state(line, q, states)?;
                    let p = state(line, p, states)?;
                    trans.push((line, q, t.to_string(), p));
                }
                _ => return Err(Error::syntax(line, "expected `obstrans <q> <sym> <q'>`")),
            },
            other => return Err(Error::syntax(line, format!("unknown directive `{other}`"))),
        }
    }

    let input = input.ok_or_else(|| Error::syntax(0, "missing `sigmaI` line"))?;
    let output = output.ok_or_else(|| Error::syntax(0, "missing `sigmaO` line"))?;
    let n = states.ok_or_else(|| Error::syntax(0, "missing `states` line"))?;
    let initial = initial.ok_or_else(|| Error::syntax(0, "missing `init` line"))?;
    let tokens = observation_tokens(kind, &input, &output);
    let (obs_line, declared) = obs.ok_or_else(|| Error::syntax(0, "missing `obs` line"))?;
    let mut sorted_decl = declared.clone();
    sorted_decl.sort();
    let mut sorted_tok = tokens.clone();
    sorted_tok.sort();
    if sorted_decl != sorted_tok {
        return Err(Error::syntax(
            obs_line,
            format!("{kind} strategies observe exactly `{}`", tokens.join(" ")),
        ));
    }

    let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; tokens.len()]; n];
    for (line, q, t, p) in trans {
        let ti = tokens
            .iter()
            .position(|x| *x == t)
            .ok_or_else(|| Error::Undeclared {
                what: "observation symbol",
                name: format!("{t} (line {line})"),
            })?;
        if table[q][ti].replace(p).is_some() {
            return Err(Error::Duplicate(format!("({q}, {t})")));
        }
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(q, row)| {
            row.into_iter()
                .enumerate()
                .map(|(ti, p)| p.ok_or_else(|| Error::NonTotal(format!("({q}, {})", tokens[ti]))))
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let emit = emits
        .into_iter()
        .enumerate()
        .map(|(q, e)| {
            let (line, value, word) = e.ok_or_else(|| {
                Error::invalid("mealy strategy", format!("state {q} has no emission"))
            })?;
            let wrap = |e: Error| Error::syntax(line, e.to_string());
            if word {
                UltimatelyPeriodicWord::parse(&value, &input)
                    .map(Emission::Word)
                    .map_err(wrap)
            } else if value == SKIP_TOKEN {
                Ok(Emission::Symbol(SkipSymbol::Skip))
            } else {
                output
                    .require(&value)
                    .map(|b| Emission::Symbol(SkipSymbol::Letter(b)))
                    .map_err(wrap)
            }
        })
        .collect::<Result<Vec<_>>>()?;

    MealyStrategy::new(kind, input, output, initial, table, emit)
}
