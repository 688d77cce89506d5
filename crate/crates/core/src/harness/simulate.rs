use crate::automata::{Alphabet, Letter};
use crate::delay::{DelayFunction, PlayRecord};
use crate::error::{Error, Result};
use crate::strategy::{input_move, output_move, InputStrategy, OutputStrategy};

pub(crate) fn check_letters(letters: &[Letter], alphabet: &Alphabet, who: &str) -> Result<()> {
    match letters.iter().find(|&&l| !alphabet.contains(l)) {
        Some(l) => Err(Error::Oracle(format!(
            "{who} produced letter index {l} outside an alphabet of size {}",
            alphabet.len()
        ))),
        None => Ok(()),
    }
}

/// The unique play of `rounds` rounds consistent with both strategies.
pub fn simulate_play(
    si: &dyn InputStrategy,
    so: &dyn OutputStrategy,
    f: &DelayFunction,
    rounds: usize,
) -> Result<PlayRecord> {
    let mut play = PlayRecord::new(f.clone());
    let mut inputs = Vec::new();
    let mut outputs = Vec::new();
    let mut delays = Vec::new();
    for i in 0..rounds {
        let n = f.value(i);
        let u = input_move(si, &outputs, &inputs, &delays, n)?;
        inputs.extend(&u);
        let v = output_move(so, &inputs, i)?;
        outputs.push(v);
        delays.push(n);
        play.push(u, v)?;
    }
    Ok(play)
}
