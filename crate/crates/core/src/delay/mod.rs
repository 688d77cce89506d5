//! Delay functions, plays, and the skip-symbol encoding of delays.

mod function;
mod play;
mod skip;

pub use function::DelayFunction;
pub use play::PlayRecord;
pub use skip::{
    parse_skip_word, render_skip_word, shift_encode, shift_encode_history, skip_erase, SkipSymbol,
    SkipWord,
};
