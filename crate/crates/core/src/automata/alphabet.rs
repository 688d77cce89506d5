use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol inside an [`Alphabet`].
pub type Letter = usize;

/// Tokens with a fixed meaning in strategy encodings; never valid alphabet symbols.
pub const SKIP_TOKEN: &str = "▷";
pub const SEPARATOR_TOKEN: &str = "#";

/// A nonempty finite ordered set of printable symbols.
///
/// Iteration order is declaration order; every enumeration in the crate
/// walks letters in this order.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::invalid("alphabet", "alphabet must be nonempty"));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(|c| c.is_whitespace() || c == '|' || c == '.') {
                return Err(Error::invalid(
                    "alphabet",
                    format!("symbol `{s}` is not printable"),
                ));
            }
            if s == SKIP_TOKEN || s == SEPARATOR_TOKEN {
                return Err(Error::invalid(
                    "alphabet",
                    format!("symbol `{s}` is reserved"),
                ));
            }
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::invalid(
                    "alphabet",
                    format!("duplicate symbol `{s}`"),
                ));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn letters(&self) -> std::ops::Range<Letter> {
        0..self.symbols.len()
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn letter(&self, symbol: &str) -> Option<Letter> {
        self.index.get(symbol).copied()
    }

    /// Looks up a symbol, failing with an "undeclared symbol" error.
    pub fn require(&self, symbol: &str) -> Result<Letter> {
        self.letter(symbol).ok_or_else(|| Error::Undeclared {
            what: "symbol",
            name: symbol.to_string(),
        })
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter < self.symbols.len()
    }

    /// True when every symbol is a single character, so words can be
    /// written without separators.
    pub fn is_compact(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Renders a word; single-character alphabets concatenate, others use `.`.
    pub fn render(&self, word: &[Letter]) -> String {
        let parts: Vec<&str> = word.iter().map(|&l| self.symbol(l)).collect();
        if self.is_compact() {
            parts.concat()
        } else {
            parts.join(".")
        }
    }

    /// Parses a word written by [`Alphabet::render`].
    pub fn parse_word(&self, text: &str) -> Result<Vec<Letter>> {
        if text.is_empty() {
            return Ok(Vec::new());
        }
        if text.contains('.') {
            text.split('.').map(|s| self.require(s)).collect()
        } else if let Some(l) = self.letter(text) {
            Ok(vec![l])
        } else {
            text.chars()
                .map(|c| self.require(c.encode_utf8(&mut [0u8; 4])))
                .collect()
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.symbols).finish()
    }
}
