//! Decision procedures for parity winning conditions: delay-free solving,
//! bounded-lookahead solving, and the omnipotent-strategy questions.

mod arenas;
mod decide;
mod extract;
mod report;

pub use arenas::{
    build_delay_free_game, build_lookahead_game, LookaheadGame, LOOKAHEAD_VERTEX_LIMIT,
};
pub use decide::{
    decide_exists_delay_o, decide_omnipotent_ht_i, decide_omnipotent_rc_o, lookahead_strategy,
    o_wins_lookahead, solve_delay_free, solve_lookahead,
};
pub use extract::{lookahead_mealy, rc_mealy};
pub use report::{DecisionReport, ReportRecord, Verdict};
