use crate::error::{Error, Result};
use crate::parity::{ParityGame, SolveResult};
use crate::Player;

/// Default vertex bound for [`brute_force_winner`].
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// Winning regions by enumerating Player O's positional strategies.
///
/// Parity games are positionally determined, so O wins from `v` iff some
/// positional strategy of hers wins from `v` against every counter-play;
/// the latter is a one-player question answered by cycle search.
pub fn brute_force_winner(game: &ParityGame) -> Result<SolveResult> {
    brute_force_winner_bounded(game, BRUTE_FORCE_LIMIT)
}

pub fn brute_force_winner_bounded(game: &ParityGame, limit: usize) -> Result<SolveResult> {
    let n = game.vertex_count();
    if n > limit {
        return Err(Error::SizeGuard(format!(
            "brute-force oracle limited to {limit} vertices, game has {n}"
        )));
    }
    let o_vertices: Vec<usize> = (0..n).filter(|&v| game.owner(v) == Player::O).collect();
    let mut pick = vec![0usize; o_vertices.len()];
    let mut win_o = vec![false; n];
    loop {
        let mut fixed: Vec<Option<usize>> = vec![None; n];
        for (k, &v) in o_vertices.iter().enumerate() {
            fixed[v] = Some(pick[k]);
        }
        let i_wins = opponent_wins(game, &fixed, Player::I);
        for v in 0..n {
            if !i_wins[v] {
                win_o[v] = true;
            }
        }
        // next strategy in mixed-radix order
        let mut k = 0;
        loop {
            if k == o_vertices.len() {
                let winner = win_o
                    .iter()
                    .map(|&w| if w { Player::O } else { Player::I })
                    .collect();
                return Ok(SolveResult::new(winner, vec![None; n]));
            }
            pick[k] += 1;
            if pick[k] < game.edges(o_vertices[k]).len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// With the edges in `fixed` forced, the vertices from which `mover` (who
/// resolves every unfixed vertex) can produce a play won by `mover`.
pub(crate) fn opponent_wins(
    game: &ParityGame,
    fixed: &[Option<usize>],
    mover: Player,
) -> Vec<bool> {
    let n = game.vertex_count();
    let succ = |v: usize| -> Vec<usize> {
        match fixed[v] {
            Some(e) => vec![game.edges(v)[e].target],
            None => game.edges(v).iter().map(|e| e.target).collect(),
        }
    };
    // vertices of a winning priority lying on a cycle through smaller-or-equal priorities
    let mut good = vec![false; n];
    for v in 0..n {
        let p = game.priority(v);
        if Player::of_priority(p) != mover {
            continue;
        }
        let mut seen = vec![false; n];
        let mut stack = succ(v);
        while let Some(u) = stack.pop() {
            if game.priority(u) > p || seen[u] {
                continue;
            }
            if u == v {
                good[v] = true;
                break;
            }
            seen[u] = true;
            stack.extend(succ(u));
        }
    }
    // everything that can reach a good vertex
    let mut wins = good.clone();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if !wins[v] && succ(v).iter().any(|&u| wins[u]) {
                wins[v] = true;
                changed = true;
            }
        }
    }
    wins
}
