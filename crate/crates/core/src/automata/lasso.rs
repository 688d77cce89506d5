use crate::automata::Letter;
use crate::error::{Error, Result};

/// A pair of an input letter and an output letter.
pub type Pair = (Letter, Letter);

/// An ultimately periodic word `stem · cycle^ω` over the paired alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lasso {
    stem: Vec<Pair>,
    cycle: Vec<Pair>,
}

impl Lasso {
    pub fn new(stem: Vec<Pair>, cycle: Vec<Pair>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::invalid("lasso", "cycle must be nonempty"));
        }
        Ok(Lasso { stem, cycle })
    }

    pub fn stem(&self) -> &[Pair] {
        &self.stem
    }

    pub fn cycle(&self) -> &[Pair] {
        &self.cycle
    }

    pub fn at(&self, n: usize) -> Pair {
        if n < self.stem.len() {
            self.stem[n]
        } else {
            self.cycle[(n - self.stem.len()) % self.cycle.len()]
        }
    }

    /// Pairs two ultimately periodic words position by position.
    pub fn zip(
        alpha_stem: &[Letter],
        alpha_cycle: &[Letter],
        beta_stem: &[Letter],
        beta_cycle: &[Letter],
    ) -> Result<Self> {
        if alpha_cycle.is_empty() || beta_cycle.is_empty() {
            return Err(Error::invalid("lasso", "cycle must be nonempty"));
        }
        let stem_len = alpha_stem.len().max(beta_stem.len());
        let cycle_len = lcm(alpha_cycle.len(), beta_cycle.len());
        let letter = |stem: &[Letter], cycle: &[Letter], n: usize| {
            if n < stem.len() {
                stem[n]
            } else {
                cycle[(n - stem.len()) % cycle.len()]
            }
        };
        let pair = |n| {
            (
                letter(alpha_stem, alpha_cycle, n),
                letter(beta_stem, beta_cycle, n),
            )
        };
        let stem = (0..stem_len).map(pair).collect();
        let cycle = (stem_len..stem_len + cycle_len).map(pair).collect();
        Lasso::new(stem, cycle)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
