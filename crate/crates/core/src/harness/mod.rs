//! Play simulation, exact verification of finite-state plays, bounded
//! exhaustive win checking, and executable refuters for the separation
//! examples.

mod exhaustive;
mod lasso;
mod refute;
mod scripted;
mod simulate;

pub use exhaustive::{bounded_exhaustive_win_check, WinCheck};
pub use lasso::{lasso_verify, scripted_lasso, LASSO_CONFIG_LIMIT};
pub use refute::{
    refute_separation, replay_defeat, replay_play, Certificate, Defeat, Refutation, RefuteOptions,
    Separation,
};
pub use scripted::{ScriptedInput, ScriptedOutput};
pub use simulate::simulate_play;
