use crate::automata::{Letter, Pair};
use crate::delay::DelayFunction;
use crate::error::{Error, Result};

/// A finite play prefix `(u_0, v_0) (u_1, v_1) ⋯` under a delay function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayRecord {
    f: DelayFunction,
    rounds: Vec<(Vec<Letter>, Letter)>,
}

impl PlayRecord {
    pub fn new(f: DelayFunction) -> Self {
        PlayRecord {
            f,
            rounds: Vec::new(),
        }
    }

    pub fn from_rounds(f: DelayFunction, rounds: Vec<(Vec<Letter>, Letter)>) -> Result<Self> {
        let mut play = PlayRecord::new(f);
        for (u, v) in rounds {
            play.push(u, v)?;
        }
        Ok(play)
    }

    /// Appends a round; `u` must have length `f(i)`.
    pub fn push(&mut self, u: Vec<Letter>, v: Letter) -> Result<()> {
        let i = self.rounds.len();
        if u.len() != self.f.value(i) {
            return Err(Error::invalid(
                "play",
                format!(
                    "round {i} needs {} input letters, got {}",
                    self.f.value(i),
                    u.len()
                ),
            ));
        }
        self.rounds.push((u, v));
        Ok(())
    }

    pub fn delay(&self) -> &DelayFunction {
        &self.f
    }

    pub fn rounds(&self) -> &[(Vec<Letter>, Letter)] {
        &self.rounds
    }

    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }

    /// The first `n` rounds.
    pub fn truncated(&self, n: usize) -> PlayRecord {
        PlayRecord {
            f: self.f.clone(),
            rounds: self.rounds[..n.min(self.rounds.len())].to_vec(),
        }
    }

    /// All input letters delivered so far, `u_0 u_1 ⋯`.
    pub fn alpha(&self) -> Vec<Letter> {
        self.rounds
            .iter()
            .flat_map(|(u, _)| u.iter().copied())
            .collect()
    }

    /// All output letters, `v_0 v_1 ⋯`.
    pub fn beta(&self) -> Vec<Letter> {
        self.rounds.iter().map(|&(_, v)| v).collect()
    }

    /// Delivered input letters not yet paired with an output letter.
    pub fn lookahead(&self) -> Vec<Letter> {
        let alpha = self.alpha();
        alpha[self.rounds.len()..].to_vec()
    }

    /// The outcome prefix determined so far: one pair per round.
    pub fn outcome(&self) -> Vec<Pair> {
        self.alpha().into_iter().zip(self.beta()).collect()
    }
}
