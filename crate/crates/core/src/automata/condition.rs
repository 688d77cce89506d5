use crate::automata::{Alphabet, Dpa, Lasso, Letter, MonitorState, SafetyCounterMonitor, State};
use crate::error::Result;
use crate::Player;

/// A winning condition for Player O: a parity automaton or a counter monitor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    Parity(Dpa),
    Counter(SafetyCounterMonitor),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CondState {
    Parity(State),
    Counter(MonitorState),
}

impl Condition {
    pub fn input(&self) -> &Alphabet {
        match self {
            Condition::Parity(a) => a.input(),
            Condition::Counter(m) => m.input(),
        }
    }

    pub fn output(&self) -> &Alphabet {
        match self {
            Condition::Parity(a) => a.output(),
            Condition::Counter(m) => m.output(),
        }
    }

    pub fn as_dpa(&self) -> Option<&Dpa> {
        match self {
            Condition::Parity(a) => Some(a),
            Condition::Counter(_) => None,
        }
    }

    pub fn start(&self) -> CondState {
        match self {
            Condition::Parity(a) => CondState::Parity(a.initial()),
            Condition::Counter(m) => CondState::Counter(m.start()),
        }
    }

    pub fn step(&self, state: &CondState, a: Letter, b: Letter) -> CondState {
        match (self, state) {
            (Condition::Parity(dpa), CondState::Parity(q)) => {
                CondState::Parity(dpa.delta(*q, a, b))
            }
            (Condition::Counter(m), CondState::Counter(s)) => CondState::Counter(m.step(s, a, b)),
            _ => panic!("condition state does not belong to this condition"),
        }
    }

    pub fn run(&self, word: &[(Letter, Letter)]) -> CondState {
        word.iter()
            .fold(self.start(), |s, &(a, b)| self.step(&s, a, b))
    }

    /// The player every continuation from `state` is won by, if already fixed.
    pub fn settled_winner(&self, state: &CondState) -> Option<Player> {
        match (self, state) {
            (Condition::Parity(dpa), CondState::Parity(q)) => dpa.settled_winner(*q),
            (Condition::Counter(m), CondState::Counter(s)) => m.settled_winner(s),
            _ => panic!("condition state does not belong to this condition"),
        }
    }

    /// True when `player` can only lose through a finite bad prefix.
    pub fn is_safety_for(&self, player: Player) -> bool {
        match self {
            Condition::Parity(dpa) => dpa.is_safety_for(player),
            Condition::Counter(_) => player == Player::O,
        }
    }

    /// The winner of an ultimately periodic play.
    pub fn lasso_winner(&self, lasso: &Lasso) -> Result<Player> {
        match self {
            Condition::Parity(dpa) => Ok(if dpa.accepts_lasso(lasso)? {
                Player::O
            } else {
                Player::I
            }),
            Condition::Counter(m) => Ok(m.lasso_winner(lasso)),
        }
    }
}

impl From<Dpa> for Condition {
    fn from(value: Dpa) -> Self {
        Condition::Parity(value)
    }
}

impl From<SafetyCounterMonitor> for Condition {
    fn from(value: SafetyCounterMonitor) -> Self {
        Condition::Counter(value)
    }
}
