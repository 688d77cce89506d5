//! Deterministic parity automata, the one-counter safety monitor, and
//! ultimately periodic words over paired alphabets.

mod alphabet;
mod condition;
mod dpa;
mod lasso;
mod monitor;

pub use alphabet::{Alphabet, Letter, SEPARATOR_TOKEN, SKIP_TOKEN};
pub use condition::{CondState, Condition};
pub use dpa::{Dpa, State};
pub use lasso::{Lasso, Pair};
pub use monitor::{Control, MonitorState, SafetyCounterMonitor};
