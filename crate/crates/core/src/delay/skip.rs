use std::fmt;

use crate::automata::{Alphabet, Letter, SKIP_TOKEN};
use crate::delay::DelayFunction;
use crate::error::Result;

/// A letter of `Σ_O ∪ {▷}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SkipSymbol {
    Skip,
    Letter(Letter),
}

impl SkipSymbol {
    pub fn letter(self) -> Option<Letter> {
        match self {
            SkipSymbol::Skip => None,
            SkipSymbol::Letter(l) => Some(l),
        }
    }

    pub fn is_skip(self) -> bool {
        self == SkipSymbol::Skip
    }

    /// All symbols over `alphabet`, skip first.
    pub fn all(alphabet: &Alphabet) -> Vec<SkipSymbol> {
        std::iter::once(SkipSymbol::Skip)
            .chain(alphabet.letters().map(SkipSymbol::Letter))
            .collect()
    }

    pub fn display<'a>(self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplaySkip(self, alphabet)
    }
}

struct DisplaySkip<'a>(SkipSymbol, &'a Alphabet);

impl fmt::Display for DisplaySkip<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            SkipSymbol::Skip => f.write_str(SKIP_TOKEN),
            SkipSymbol::Letter(l) => f.write_str(self.1.symbol(l)),
        }
    }
}

pub type SkipWord = Vec<SkipSymbol>;

/// `▷^{f(0)−1} β(0) ▷^{f(1)−1} β(1) ⋯ ▷^{f(k)−1} β(k)` for `k = |β| − 1`.
pub fn shift_encode(beta: &[Letter], f: &DelayFunction) -> SkipWord {
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        out.extend(std::iter::repeat_n(SkipSymbol::Skip, f.value(i) - 1));
        out.push(SkipSymbol::Letter(b));
    }
    out
}

/// Encodes an output word against an explicit history of delay values.
pub fn shift_encode_history(beta: &[Letter], delays: &[usize]) -> SkipWord {
    let mut out = Vec::new();
    for (&b, &n) in beta.iter().zip(delays) {
        out.extend(std::iter::repeat_n(SkipSymbol::Skip, n.saturating_sub(1)));
        out.push(SkipSymbol::Letter(b));
    }
    out
}

/// The morphism deleting every `▷`.
pub fn skip_erase(word: &[SkipSymbol]) -> Vec<Letter> {
    word.iter().filter_map(|s| s.letter()).collect()
}

/// Renders a skip word with `▷` for skips.
pub fn render_skip_word(word: &[SkipSymbol], alphabet: &Alphabet) -> String {
    let parts: Vec<String> = word
        .iter()
        .map(|s| s.display(alphabet).to_string())
        .collect();
    if alphabet.is_compact() {
        parts.concat()
    } else {
        parts.join(".")
    }
}

/// Parses a skip word; `▷` denotes the skip symbol.
pub fn parse_skip_word(text: &str, alphabet: &Alphabet) -> Result<SkipWord> {
    let tokens: Vec<String> = if text.contains('.') {
        text.split('.').map(str::to_string).collect()
    } else {
        text.chars().map(|c| c.to_string()).collect()
    };
    tokens
        .iter()
        .filter(|t| !t.is_empty())
        .map(|t| {
            if t == SKIP_TOKEN {
                Ok(SkipSymbol::Skip)
            } else {
                alphabet.require(t).map(SkipSymbol::Letter)
            }
        })
        .collect()
}
