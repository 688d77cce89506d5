use crate::automata::Alphabet;
use crate::delay::SkipSymbol;
use crate::error::{Error, Result};
use crate::strategy::mealy::{observation_tokens, Emission};
use crate::strategy::{MealyStrategy, StrategyKind, UltimatelyPeriodicWord};

/// Upper bound on the number of transition tables inspected per state count.
const TABLE_LIMIT: usize = 1 << 20;

/// Emissions `head·period^ω` with bounded head and period lengths.
pub fn word_emissions(input: &Alphabet, max_head: usize, max_period: usize) -> Vec<Emission> {
    UltimatelyPeriodicWord::enumerate(input, max_head, max_period)
        .into_iter()
        .map(Emission::Word)
        .collect()
}

/// One emission per output letter.
pub fn letter_emissions(output: &Alphabet) -> Vec<Emission> {
    output
        .letters()
        .map(|b| Emission::Symbol(SkipSymbol::Letter(b)))
        .collect()
}

/// Every machine of `kind` with at most `max_states` states and emissions
/// drawn from `emissions`, up to renaming of states: states are numbered in
/// breadth-first discovery order from state 0 and all are reachable.
pub fn enumerate_mealy(
    kind: StrategyKind,
    input: &Alphabet,
    output: &Alphabet,
    max_states: usize,
    emissions: &[Emission],
) -> Result<Vec<MealyStrategy>> {
    let tokens = observation_tokens(kind, input, output).len();
    let mut out = Vec::new();
    for n in 1..=max_states {
        let cells = n * tokens;
        let tables = n
            .checked_pow(cells as u32)
            .filter(|&t| t <= TABLE_LIMIT)
            .ok_or_else(|| {
                Error::SizeGuard(format!("{n}-state {kind} machines over {tokens} tokens"))
            })?;
        let emits = emissions
            .len()
            .checked_pow(n as u32)
            .ok_or_else(|| Error::SizeGuard("too many emission assignments".into()))?;
        for code in 0..tables {
            let mut flat = Vec::with_capacity(cells);
            let mut c = code;
            for _ in 0..cells {
                flat.push(c % n);
                c /= n;
            }
            let table: Vec<Vec<usize>> = flat.chunks(tokens).map(<[usize]>::to_vec).collect();
            if !is_canonical(&table) {
                continue;
            }
            for e in 0..emits {
                let mut c = e;
                let emit = (0..n)
                    .map(|_| {
                        let x = emissions[c % emissions.len()].clone();
                        c /= emissions.len();
                        x
                    })
                    .collect();
                out.push(MealyStrategy::new(
                    kind,
                    input.clone(),
                    output.clone(),
                    0,
                    table.clone(),
                    emit,
                )?);
            }
        }
    }
    Ok(out)
}

/// True when BFS from state 0 (tokens in order) discovers states as 0, 1, 2, ….
fn is_canonical(table: &[Vec<usize>]) -> bool {
    let mut next = 1;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let q = queue[head];
        head += 1;
        for &p in &table[q] {
            if p == next {
                queue.push(p);
                next += 1;
            } else if p > next {
                return false;
            }
        }
    }
    next == table.len()
}
