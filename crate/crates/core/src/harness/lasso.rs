use std::collections::HashMap;

use crate::automata::{Condition, Lasso, Letter};
use crate::delay::DelayFunction;
use crate::error::{Error, Result};
use crate::harness::simulate::check_letters;
use crate::strategy::{InputStrategy, OutputStrategy, RunnerKey};
use crate::Player;

/// Defensive bound on the number of joint configurations visited.
pub const LASSO_CONFIG_LIMIT: usize = 1 << 20;

type Config = (usize, RunnerKey, RunnerKey, Vec<Letter>);

/// The exact winner of the play between two finite-state strategies.
///
/// With `f` eventually 1 the lookahead buffer has constant size past the
/// prefix of `f`, so the joint configuration (position clipped to the
/// prefix, both runner states, buffer) must repeat; the outcome between the
/// two occurrences is the cycle of a lasso.
pub fn lasso_verify(
    si: &dyn InputStrategy,
    so: &dyn OutputStrategy,
    f: &DelayFunction,
    cond: &Condition,
) -> Result<Player> {
    if f.tail() != 1 {
        return Err(Error::Precondition(format!(
            "exact verification needs a delay function with tail 1, got {f}"
        )));
    }
    let mut ri = si
        .runner()
        .ok_or_else(|| Error::Precondition("player I strategy is not finite-state".into()))?;
    let mut ro = so
        .runner()
        .ok_or_else(|| Error::Precondition("player O strategy is not finite-state".into()))?;
    let prefix = f.prefix().len();
    let mut seen: HashMap<Config, usize> = HashMap::new();
    let mut alpha: Vec<Letter> = Vec::new();
    let mut beta: Vec<Letter> = Vec::new();
    for i in 0.. {
        let config = (i.min(prefix), ri.key(), ro.key(), alpha[i..].to_vec());
        if let Some(&i0) = seen.get(&config) {
            let outcome: Vec<_> = alpha.iter().copied().zip(beta.iter().copied()).collect();
            let lasso = Lasso::new(outcome[..i0].to_vec(), outcome[i0..i].to_vec())?;
            return cond.lasso_winner(&lasso);
        }
        if seen.len() >= LASSO_CONFIG_LIMIT {
            return Err(Error::SizeGuard(format!(
                "no repeated configuration within {LASSO_CONFIG_LIMIT} rounds"
            )));
        }
        seen.insert(config, i);
        let u = ri.play(f.value(i))?;
        check_letters(&u, cond.input(), "player I")?;
        alpha.extend(&u);
        let v = ro.play(&u)?;
        check_letters(&[v], cond.output(), "player O")?;
        ri.observe(v);
        beta.push(v);
    }
    unreachable!()
}

/// The winner of the play of a finite-state Player-I strategy against the
/// fixed O word `moves` (last letter repeated), for any tail of `f`.
pub fn scripted_lasso(
    si: &dyn InputStrategy,
    f: &DelayFunction,
    moves: &[Letter],
    cond: &Condition,
) -> Result<Player> {
    let Some(&last) = moves.last() else {
        return Err(Error::invalid("script", "move word must be nonempty"));
    };
    check_letters(moves, cond.output(), "script")?;
    let mut ri = si
        .runner()
        .ok_or_else(|| Error::Precondition("player I strategy is not finite-state".into()))?;
    let prefix = f.prefix().len();
    let mut seen: HashMap<(usize, RunnerKey, usize), (usize, usize)> = HashMap::new();
    let mut alpha: Vec<Letter> = Vec::new();
    for i in 0.. {
        let at = i.min(moves.len() - 1);
        let config = (i.min(prefix), ri.key(), at);
        if let Some(&(_, c0)) = seen.get(&config) {
            let lasso = Lasso::zip(
                &alpha[..c0],
                &alpha[c0..],
                &moves[..moves.len() - 1],
                &[last],
            )?;
            return cond.lasso_winner(&lasso);
        }
        if seen.len() >= LASSO_CONFIG_LIMIT {
            return Err(Error::SizeGuard(format!(
                "no repeated configuration within {LASSO_CONFIG_LIMIT} rounds"
            )));
        }
        seen.insert(config, (i, alpha.len()));
        let u = ri.play(f.value(i))?;
        check_letters(&u, cond.input(), "player I")?;
        alpha.extend(&u);
        ri.observe(moves[at]);
    }
    unreachable!()
}
