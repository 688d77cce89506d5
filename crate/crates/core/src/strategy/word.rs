use std::fmt;
use std::sync::Arc;

use crate::automata::{Alphabet, Letter};
use crate::error::{Error, Result};

/// `head · period^ω`, kept in canonical form (primitive period, shortest head)
/// so that structural equality is equality of infinite words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UltimatelyPeriodicWord {
    head: Vec<Letter>,
    period: Vec<Letter>,
}

impl UltimatelyPeriodicWord {
    pub fn new(mut head: Vec<Letter>, mut period: Vec<Letter>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::invalid(
                "ultimately periodic word",
                "period must be nonempty",
            ));
        }
        let n = period.len();
        if let Some(d) = (1..n).find(|&d| n.is_multiple_of(d) && (d..n).all(|i| period[i] == period[i - d]))
        {
            period.truncate(d);
        }
        while head.last().is_some() && head.last() == period.last() {
            head.pop();
            period.rotate_right(1);
        }
        Ok(UltimatelyPeriodicWord { head, period })
    }

    pub fn constant(letter: Letter) -> Self {
        UltimatelyPeriodicWord {
            head: Vec::new(),
            period: vec![letter],
        }
    }

    pub fn head(&self) -> &[Letter] {
        &self.head
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    pub fn letter_at(&self, n: usize) -> Letter {
        if n < self.head.len() {
            self.head[n]
        } else {
            self.period[(n - self.head.len()) % self.period.len()]
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<Letter> {
        (0..len).map(|n| self.letter_at(n)).collect()
    }

    /// `head|period` in the alphabet's word syntax.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        format!(
            "{}|{}",
            alphabet.render(&self.head),
            alphabet.render(&self.period)
        )
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let (head, period) = text.split_once('|').ok_or_else(|| {
            Error::invalid("ultimately periodic word", format!("`{text}` lacks `|`"))
        })?;
        UltimatelyPeriodicWord::new(alphabet.parse_word(head)?, alphabet.parse_word(period)?)
    }

    /// All distinct words with `|head| ≤ max_head` and `1 ≤ |period| ≤ max_period`.
    pub fn enumerate(alphabet: &Alphabet, max_head: usize, max_period: usize) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::new();
        for p in 1..=max_period {
            for period in words_of_length(alphabet.len(), p) {
                for h in 0..=max_head {
                    for head in words_of_length(alphabet.len(), h) {
                        let w = UltimatelyPeriodicWord::new(head, period.clone())
                            .expect("nonempty period");
                        if !out.contains(&w) {
                            out.push(w);
                        }
                    }
                }
            }
        }
        out
    }
}

/// All words of length `len` over `0..size`, in lexicographic order.
pub(crate) fn words_of_length(size: usize, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..size).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

type LetterFn = dyn Fn(usize) -> Result<Letter> + Send + Sync;

/// An infinite word over Σ_I, either finitely represented or evaluated on demand.
#[derive(Clone)]
pub enum InfiniteWord {
    Periodic(UltimatelyPeriodicWord),
    Lazy(Arc<LetterFn>),
}

impl InfiniteWord {
    pub fn lazy(f: impl Fn(usize) -> Result<Letter> + Send + Sync + 'static) -> Self {
        InfiniteWord::Lazy(Arc::new(f))
    }

    pub fn letter_at(&self, n: usize) -> Result<Letter> {
        match self {
            InfiniteWord::Periodic(w) => Ok(w.letter_at(n)),
            InfiniteWord::Lazy(f) => f(n),
        }
    }

    pub fn prefix(&self, len: usize) -> Result<Vec<Letter>> {
        (0..len).map(|n| self.letter_at(n)).collect()
    }
}

impl From<UltimatelyPeriodicWord> for InfiniteWord {
    fn from(value: UltimatelyPeriodicWord) -> Self {
        InfiniteWord::Periodic(value)
    }
}

impl fmt::Debug for InfiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfiniteWord::Periodic(w) => w.fmt(f),
            InfiniteWord::Lazy(_) => f.write_str("InfiniteWord::Lazy(..)"),
        }
    }
}
