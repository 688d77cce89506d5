use std::collections::HashMap;

use crate::automata::{Alphabet, Letter};
use crate::delay::{skip_erase, SkipSymbol, SkipWord};
use crate::error::Result;
use crate::strategy::SkipOracle;

/// Outcome of a bounded uniformity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Uniformity {
    Pass,
    /// Two equivalent histories answered differently.
    Violation {
        first: SkipWord,
        second: SkipWord,
    },
}

struct Memo<'a> {
    tau: &'a SkipOracle,
    cache: HashMap<SkipWord, Letter>,
}

impl Memo<'_> {
    fn get(&mut self, w: &[SkipSymbol]) -> Result<Letter> {
        if let Some(&a) = self.cache.get(w) {
            return Ok(a);
        }
        let a = (self.tau)(w)?;
        self.cache.insert(w.to_vec(), a);
        Ok(a)
    }

    /// Answers on the proper prefixes of `w`, shortest first.
    fn prefix_answers(&mut self, w: &[SkipSymbol]) -> Result<Vec<Letter>> {
        (0..w.len()).map(|k| self.get(&w[..k])).collect()
    }
}

/// `x0 ≈ x1`: equal length, equal skip-erased image, equal answers on all
/// equal-length proper prefixes.
pub fn equivalent(tau: &SkipOracle, x0: &[SkipSymbol], x1: &[SkipSymbol]) -> Result<bool> {
    if x0.len() != x1.len() || skip_erase(x0) != skip_erase(x1) {
        return Ok(false);
    }
    for k in 0..x0.len() {
        if tau(&x0[..k])? != tau(&x1[..k])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches all histories of length ≤ `depth` over `Σ_O ∪ {▷}` for two
/// equivalent ones answered differently. Bounded evidence only.
pub fn uniformity_check(tau: &SkipOracle, output: &Alphabet, depth: usize) -> Result<Uniformity> {
    let symbols = SkipSymbol::all(output);
    let mut memo = Memo {
        tau,
        cache: HashMap::new(),
    };
    let mut layer: Vec<SkipWord> = vec![Vec::new()];
    for len in 0..=depth {
        if len > 0 {
            layer = layer
                .iter()
                .flat_map(|w| {
                    symbols.iter().map(move |&s| {
                        let mut w = w.clone();
                        w.push(s);
                        w
                    })
                })
                .collect();
        }
        let mut classes: HashMap<(Vec<Letter>, Vec<Letter>), (usize, Letter)> = HashMap::new();
        for (idx, w) in layer.iter().enumerate() {
            let key = (skip_erase(w), memo.prefix_answers(w)?);
            let answer = memo.get(w)?;
            match classes.get(&key) {
                Some(&(rep, a)) if a != answer => {
                    return Ok(Uniformity::Violation {
                        first: layer[rep].clone(),
                        second: w.clone(),
                    })
                }
                Some(_) => {}
                None => {
                    classes.insert(key, (idx, answer));
                }
            }
        }
    }
    Ok(Uniformity::Pass)
}
