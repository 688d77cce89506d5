use std::fmt;

use serde::{Deserialize, Serialize};

use crate::strategy::MealyStrategy;
use crate::Player;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    OWinsDelayFree,
    IWinsDelayFree,
    OWinsWithLookahead,
    IWinsUpToBound,
    OmnipotentHtStrategy,
    NoOmnipotentHtStrategy,
    OmnipotentRcStrategy,
    NoOmnipotentRcStrategy,
}

impl Verdict {
    /// The player the verdict declares winning (at the searched bound).
    pub fn winner(self) -> Player {
        match self {
            Verdict::OWinsDelayFree
            | Verdict::OWinsWithLookahead
            | Verdict::NoOmnipotentHtStrategy
            | Verdict::OmnipotentRcStrategy => Player::O,
            _ => Player::I,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::OWinsDelayFree => "player O wins the delay-free game",
            Verdict::IWinsDelayFree => "player I wins the delay-free game",
            Verdict::OWinsWithLookahead => "player O wins with bounded lookahead",
            Verdict::IWinsUpToBound => "player I wins for every lookahead up to the bound",
            Verdict::OmnipotentHtStrategy => "omnipotent h.t. strategy exists",
            Verdict::NoOmnipotentHtStrategy => {
                "no omnipotent h.t. strategy: player O wins for some delay function"
            }
            Verdict::OmnipotentRcStrategy => "omnipotent r.c. strategy exists",
            Verdict::NoOmnipotentRcStrategy => {
                "no omnipotent r.c. strategy: player I wins the delay-free game"
            }
        })
    }
}

/// Result of a decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionReport {
    pub verdict: Verdict,
    /// Lookahead of the witness, or of the searched bound.
    pub k: Option<usize>,
    /// Extracted Player-O strategy, present exactly when the verdict has O winning.
    pub witness: Option<MealyStrategy>,
    pub conclusive: bool,
    pub searched_bound: usize,
}

impl DecisionReport {
    pub fn record(&self, strategy_file: Option<String>) -> ReportRecord {
        ReportRecord {
            verdict: self.verdict,
            winner: self.verdict.winner(),
            message: self.verdict.to_string(),
            k: self.k,
            conclusive: self.conclusive,
            searched_bound: self.searched_bound,
            strategy_file,
        }
    }
}

/// Serializable form of a [`DecisionReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub verdict: Verdict,
    pub winner: Player,
    pub message: String,
    pub k: Option<usize>,
    pub conclusive: bool,
    pub searched_bound: usize,
    pub strategy_file: Option<String>,
}
