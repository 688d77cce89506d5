//! Finite parity games: Zielonka's algorithm and a brute-force oracle.

mod brute;
mod game;
mod zielonka;

pub use brute::{brute_force_winner, brute_force_winner_bounded, BRUTE_FORCE_LIMIT};
pub use game::{Edge, ParityGame, SolveResult};
pub use zielonka::solve_zielonka;

use crate::Player;

/// Checks that the positional strategy of `player` recorded in `result`
/// wins from every vertex of her region against every counter-play.
pub fn strategy_is_winning(game: &ParityGame, result: &SolveResult, player: Player) -> bool {
    let n = game.vertex_count();
    let fixed: Vec<Option<usize>> = (0..n)
        .map(|v| {
            if game.owner(v) == player && result.winner(v) == player {
                result.choice(v)
            } else {
                None
            }
        })
        .collect();
    if (0..n).any(|v| game.owner(v) == player && result.winner(v) == player && fixed[v].is_none()) {
        return false;
    }
    let opponent = brute::opponent_wins(game, &fixed, player.opponent());
    (0..n).all(|v| result.winner(v) != player || !opponent[v])
}
