use crate::automata::Dpa;
use crate::error::Result;
use crate::parity::{solve_zielonka, SolveResult};
use crate::solvers::extract::{lookahead_mealy, rc_mealy};
use crate::solvers::{build_lookahead_game, DecisionReport, LookaheadGame, Verdict};
use crate::strategy::MealyStrategy;
use crate::Player;

/// Solves the buffer game for `f_k`.
pub fn solve_lookahead(a: &Dpa, k: usize) -> Result<(LookaheadGame, SolveResult)> {
    let shape = build_lookahead_game(a, k)?;
    let result = solve_zielonka(&shape.game);
    Ok((shape, result))
}

pub fn o_wins_lookahead(a: &Dpa, k: usize) -> Result<bool> {
    let (shape, result) = solve_lookahead(a, k)?;
    Ok(result.winner(shape.game.initial()) == Player::O)
}

/// O's winning strategy for `f_k` as an input-tracking machine, if she wins.
pub fn lookahead_strategy(a: &Dpa, k: usize) -> Result<Option<MealyStrategy>> {
    let (shape, result) = solve_lookahead(a, k)?;
    Ok((result.winner(shape.game.initial()) == Player::O)
        .then(|| lookahead_mealy(a, &shape, &result)))
}

/// Solves `Γ(L(A))`; when O wins, the witness is an omnipotent r.c. strategy.
pub fn solve_delay_free(a: &Dpa) -> DecisionReport {
    let (shape, result) = solve_lookahead(a, 0).expect("delay-free arena is small");
    let o_wins = result.winner(shape.game.initial()) == Player::O;
    DecisionReport {
        verdict: if o_wins {
            Verdict::OWinsDelayFree
        } else {
            Verdict::IWinsDelayFree
        },
        k: Some(0),
        witness: o_wins.then(|| rc_mealy(a, &shape, &result)),
        conclusive: true,
        searched_bound: 0,
    }
}

/// Does O win `Γ_f(L(A))` for some `f` with extra lookahead at most `k_cap`?
///
/// One solve at `k_cap` decides the question for the whole family (more
/// lookahead never hurts O); when she wins, the least sufficient `k` is
/// found by binary search and her strategy for `f_k` extracted. A negative
/// answer is conclusive only if the caller certifies that `k_cap` reaches a
/// lookahead bound known to suffice.
pub fn decide_exists_delay_o(
    a: &Dpa,
    k_cap: usize,
    certified_bound: bool,
) -> Result<DecisionReport> {
    if !o_wins_lookahead(a, k_cap)? {
        return Ok(DecisionReport {
            verdict: Verdict::IWinsUpToBound,
            k: None,
            witness: None,
            conclusive: certified_bound,
            searched_bound: k_cap,
        });
    }
    let (mut lo, mut hi) = (0, k_cap);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if o_wins_lookahead(a, mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(DecisionReport {
        verdict: Verdict::OWinsWithLookahead,
        k: Some(lo),
        witness: lookahead_strategy(a, lo)?,
        conclusive: true,
        searched_bound: k_cap,
    })
}

/// Does Player I have an omnipotent h.t. strategy? Holds iff O wins no `Γ_f`.
pub fn decide_omnipotent_ht_i(
    a: &Dpa,
    k_cap: usize,
    certified_bound: bool,
) -> Result<DecisionReport> {
    let mut report = decide_exists_delay_o(a, k_cap, certified_bound)?;
    report.verdict = match report.verdict {
        Verdict::OWinsWithLookahead => Verdict::NoOmnipotentHtStrategy,
        _ => Verdict::OmnipotentHtStrategy,
    };
    Ok(report)
}

/// Does Player O have an omnipotent r.c. strategy? Holds iff she wins `Γ(L(A))`.
pub fn decide_omnipotent_rc_o(a: &Dpa) -> DecisionReport {
    let mut report = solve_delay_free(a);
    report.verdict = match report.verdict {
        Verdict::OWinsDelayFree => Verdict::OmnipotentRcStrategy,
        _ => Verdict::NoOmnipotentRcStrategy,
    };
    report
}
