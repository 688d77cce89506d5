use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An eventually constant delay function `f: ℕ → ℕ₊`.
///
/// `f(i) = prefix[i]` for `i < prefix.len()` and `f(i) = tail` afterwards.
/// Trailing prefix entries equal to the tail are absorbed on construction,
/// so structural equality is equality of functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DelayFunction {
    prefix: Vec<usize>,
    tail: usize,
}

impl DelayFunction {
    pub fn new(mut prefix: Vec<usize>, tail: usize) -> Result<Self> {
        if tail == 0 || prefix.contains(&0) {
            return Err(Error::invalid(
                "delay function",
                "all values must be positive",
            ));
        }
        while prefix.last() == Some(&tail) {
            prefix.pop();
        }
        Ok(DelayFunction { prefix, tail })
    }

    /// The constant function `i ↦ c`.
    pub fn constant(c: usize) -> Result<Self> {
        DelayFunction::new(Vec::new(), c)
    }

    /// The delay-free function `i ↦ 1`.
    pub fn delay_free() -> Self {
        DelayFunction {
            prefix: Vec::new(),
            tail: 1,
        }
    }

    /// Constant initial lookahead `k`: `f(0) = k + 1`, `f(i) = 1` afterwards.
    pub fn lookahead(k: usize) -> Self {
        DelayFunction::new(vec![k + 1], 1).expect("positive values")
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    pub fn value(&self, i: usize) -> usize {
        self.prefix.get(i).copied().unwrap_or(self.tail)
    }

    /// `Σ_{j=0}^{i} f(j)`.
    pub fn cumulative(&self, i: usize) -> usize {
        let m = self.prefix.len();
        if i < m {
            self.prefix[..=i].iter().sum()
        } else {
            self.prefix.iter().sum::<usize>() + (i + 1 - m) * self.tail
        }
    }

    /// Number of letters delivered before round `i`: `Σ_{j<i} f(j)`.
    pub fn delivered_before(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.cumulative(i - 1)
        }
    }

    /// The round `i` with `cumulative(i) == letters`, if there is one.
    pub fn round_with_cumulative(&self, letters: usize) -> Option<usize> {
        let m = self.prefix.len();
        let mut acc = 0;
        for (i, v) in self.prefix.iter().enumerate() {
            acc += v;
            if acc == letters {
                return Some(i);
            }
            if acc > letters {
                return None;
            }
        }
        let rest = letters.checked_sub(acc)?;
        if rest == 0 || rest % self.tail != 0 {
            return None;
        }
        Some(m + rest / self.tail - 1)
    }

    /// The lookahead order: `self ⊑ other` iff every cumulative sum of
    /// `self` is at most the corresponding sum of `other`.
    ///
    /// Past both prefixes the difference of cumulative sums changes by
    /// `other.tail - self.tail` per round, so checking up to the longer
    /// prefix and comparing tails decides the order exactly.
    pub fn leq(&self, other: &DelayFunction) -> bool {
        let horizon = self.prefix.len().max(other.prefix.len());
        (0..=horizon).all(|i| self.cumulative(i) <= other.cumulative(i)) && self.tail <= other.tail
    }

    /// Largest number of extra letters ever held back: `max_i Σ_{j≤i} (f(j) − 1)`
    /// when the tail is 1; `None` when the lookahead grows without bound.
    pub fn max_extra_lookahead(&self) -> Option<usize> {
        if self.tail != 1 {
            return None;
        }
        Some(self.prefix.iter().map(|v| v - 1).sum())
    }
}

impl fmt::Display for DelayFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.prefix.iter().map(ToString::to_string).collect();
        write!(f, "{};{}", parts.join(","), self.tail)
    }
}

impl FromStr for DelayFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::invalid(
                "delay function",
                format!("`{s}` is not of the form `v0,v1,...;t`"),
            )
        };
        let (prefix, tail) = s.trim().split_once(';').ok_or_else(bad)?;
        let tail: usize = tail.trim().parse().map_err(|_| bad())?;
        let prefix = if prefix.trim().is_empty() {
            Vec::new()
        } else {
            prefix
                .split(',')
                .map(|v| v.trim().parse().map_err(|_| bad()))
                .collect::<Result<Vec<usize>>>()?
        };
        DelayFunction::new(prefix, tail)
    }
}

impl TryFrom<String> for DelayFunction {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        value.parse()
    }
}

impl From<DelayFunction> for String {
    fn from(value: DelayFunction) -> Self {
        value.to_string()
    }
}
