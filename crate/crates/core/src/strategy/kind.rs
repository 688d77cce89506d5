use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Player;

/// The information a strategy observes.
///
/// Player I: `Ot` sees O's moves, `Lc` additionally the number of letters he
/// delivered, `Iot` O's moves and his own letters, `Ht` O's moves and the
/// delay values so far. Player O: `It` sees the delivered input letters,
/// `Rc` additionally the round index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StrategyKind {
    #[serde(rename = "OT")]
    Ot,
    #[serde(rename = "LC")]
    Lc,
    #[serde(rename = "IOT")]
    Iot,
    #[serde(rename = "HT")]
    Ht,
    #[serde(rename = "IT")]
    It,
    #[serde(rename = "RC")]
    Rc,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 6] = [
        StrategyKind::Ot,
        StrategyKind::Lc,
        StrategyKind::Iot,
        StrategyKind::Ht,
        StrategyKind::It,
        StrategyKind::Rc,
    ];

    pub fn player(self) -> Player {
        match self {
            StrategyKind::Ot | StrategyKind::Lc | StrategyKind::Iot | StrategyKind::Ht => Player::I,
            StrategyKind::It | StrategyKind::Rc => Player::O,
        }
    }

    /// Position in the player's information chain `OT < LC < IOT < HT`, `IT < RC`.
    fn rank(self) -> u8 {
        match self {
            StrategyKind::Ot | StrategyKind::It => 0,
            StrategyKind::Lc | StrategyKind::Rc => 1,
            StrategyKind::Iot => 2,
            StrategyKind::Ht => 3,
        }
    }

    /// True when `to` observes strictly more than `self` (same player).
    pub fn can_promote_to(self, to: StrategyKind) -> bool {
        self.player() == to.player() && self.rank() < to.rank()
    }

    pub fn require_player(self, player: Player) -> Result<()> {
        if self.player() == player {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                kind: self.to_string(),
                player: player.to_string(),
            })
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrategyKind::Ot => "OT",
            StrategyKind::Lc => "LC",
            StrategyKind::Iot => "IOT",
            StrategyKind::Ht => "HT",
            StrategyKind::It => "IT",
            StrategyKind::Rc => "RC",
        })
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrategyKind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid("strategy kind", format!("unknown kind `{s}`")))
    }
}
