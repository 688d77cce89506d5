//! Strategy classes, finite-state realizations, and strategy transformers.

mod consistency;
mod enumerate;
mod format;
mod interface;
mod kind;
mod mealy;
mod oracle;
mod promote;
mod transforms;
mod uniformity;
mod word;

pub use consistency::check_consistency;
pub use enumerate::{enumerate_mealy, letter_emissions, word_emissions};
pub(crate) use interface::view_mismatch;
pub use interface::{
    input_move, output_move, InputRunner, InputStrategy, InputView, OutputRunner, OutputStrategy,
    OutputView, RunnerKey, Strategy,
};
pub use kind::StrategyKind;
pub use mealy::{observation_tokens, Emission, MealyStrategy, Obs};
pub use oracle::{InputOracle, OutputOracle};
pub use promote::promote;
pub use transforms::{
    ht_from_skip_strategy, lift_monotone, rc_from_delay_free, skip_oracle_from_mealy,
    skip_strategy_to_delay_o, DelayFreeOracle, SkipDerived, SkipOracle, SkipTranslation,
};
pub use uniformity::{equivalent, uniformity_check, Uniformity};
pub(crate) use word::words_of_length;
pub use word::{InfiniteWord, UltimatelyPeriodicWord};

use std::sync::Arc;

impl Strategy {
    pub fn mealy(m: MealyStrategy) -> Strategy {
        match m.kind().player() {
            crate::Player::I => Strategy::Input(Arc::new(m)),
            crate::Player::O => Strategy::Output(Arc::new(m)),
        }
    }
}
