use crate::delay::PlayRecord;
use crate::error::Result;
use crate::strategy::{input_move, output_move, Strategy};
use crate::Player;

/// True iff every recorded round of `play` agrees with `s`.
pub fn check_consistency(play: &PlayRecord, s: &Strategy, player: Player) -> Result<bool> {
    s.kind().require_player(player)?;
    let f = play.delay();
    let mut outputs = Vec::new();
    let mut inputs = Vec::new();
    let mut delays = Vec::new();
    for (i, (u, v)) in play.rounds().iter().enumerate() {
        match s {
            Strategy::Input(t) => {
                if input_move(t.as_ref(), &outputs, &inputs, &delays, u.len())? != *u {
                    return Ok(false);
                }
            }
            Strategy::Output(o) => {
                let mut seen = inputs.clone();
                seen.extend(u);
                if output_move(o.as_ref(), &seen, i)? != *v {
                    return Ok(false);
                }
            }
        }
        outputs.push(*v);
        inputs.extend(u);
        delays.push(f.value(i));
    }
    Ok(true)
}
