//! Delay games with ω-regular winning conditions.
//!
//! In a delay game `Γ_f(L)` Player I supplies `f(i)` input letters in round
//! `i` and Player O answers with a single output letter; Player O wins when
//! the paired outcome lies in `L`. This crate solves such games for
//! conditions given by deterministic parity automata, decides whether either
//! player has a strategy that wins for every delay function, extracts
//! finite-state strategies, and checks the behaviour of the different
//! strategy classes on concrete plays.

pub mod automata;
pub mod delay;
mod error;
pub mod examples;
pub mod harness;
pub mod parity;
pub mod solvers;
pub mod strategy;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use error::{Error, Result};

/// The two players: I supplies input letters, O answers with output letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    I,
    O,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::I => Player::O,
            Player::O => Player::I,
        }
    }

    /// The player favoured by a priority under the max-even convention.
    pub fn of_priority(p: u32) -> Player {
        if p.is_multiple_of(2) {
            Player::O
        } else {
            Player::I
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::I => "I",
            Player::O => "O",
        })
    }
}

impl std::str::FromStr for Player {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" => Ok(Player::I),
            "O" | "o" => Ok(Player::O),
            _ => Err(Error::invalid(
                "player",
                format!("`{s}` is neither I nor O"),
            )),
        }
    }
}
