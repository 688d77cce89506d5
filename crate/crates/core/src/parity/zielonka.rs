use std::collections::VecDeque;

use crate::parity::{ParityGame, SolveResult};
use crate::Player;

/// Solves a parity game with Zielonka's recursive algorithm.
///
/// Attractor strategies take the lowest-index edge into the attractor, and
/// vertices of the top priority take their lowest-index edge inside the
/// region, so the extracted strategies are deterministic.
pub fn solve_zielonka(game: &ParityGame) -> SolveResult {
    let n = game.vertex_count();
    let mut solver = Solver {
        game,
        pred: game.predecessors(),
        choice: vec![None; n],
    };
    let mask = vec![true; n];
    let (win_o, _) = solver.solve(&mask);
    let winner: Vec<Player> = (0..n)
        .map(|v| if win_o[v] { Player::O } else { Player::I })
        .collect();
    let choice = (0..n)
        .map(|v| {
            if game.owner(v) == winner[v] {
                solver.choice[v]
            } else {
                None
            }
        })
        .collect();
    SolveResult::new(winner, choice)
}

struct Solver<'a> {
    game: &'a ParityGame,
    pred: Vec<Vec<usize>>,
    choice: Vec<Option<usize>>,
}

impl Solver<'_> {
    /// Returns (region of O, region of I) within `mask`.
    fn solve(&mut self, mask: &[bool]) -> (Vec<bool>, Vec<bool>) {
        let n = mask.len();
        let Some(top) = (0..n)
            .filter(|&v| mask[v])
            .map(|v| self.game.priority(v))
            .max()
        else {
            return (vec![false; n], vec![false; n]);
        };
        let p = Player::of_priority(top);
        let targets: Vec<bool> = (0..n)
            .map(|v| mask[v] && self.game.priority(v) == top)
            .collect();
        let attr = self.attractor(mask, &targets, p);
        let rest: Vec<bool> = (0..n).map(|v| mask[v] && !attr[v]).collect();
        let (w_o, w_i) = self.solve(&rest);
        let (_, w_q) = split(p, w_o, w_i);

        if !w_q.iter().any(|&b| b) {
            // p wins everything: top vertices stay inside the mask
            for v in 0..n {
                if targets[v] && self.game.owner(v) == p {
                    self.choice[v] = self.game.edges(v).iter().position(|e| mask[e.target]);
                }
            }
            let w_p = (0..n).map(|v| mask[v]).collect();
            return join(p, w_p, vec![false; n]);
        }

        let q = p.opponent();
        let b = self.attractor(mask, &w_q, q);
        let rest: Vec<bool> = (0..n).map(|v| mask[v] && !b[v]).collect();
        let (w_o, w_i) = self.solve(&rest);
        let (w_p2, w_q2) = split(p, w_o, w_i);
        let w_q: Vec<bool> = (0..n).map(|v| w_q2[v] || b[v]).collect();
        join(p, w_p2, w_q)
    }

    /// The attractor of `player` to `targets` inside `mask`; records the
    /// attracting edge for every newly attracted vertex of `player`.
    fn attractor(&mut self, mask: &[bool], targets: &[bool], player: Player) -> Vec<bool> {
        let game = self.game;
        let n = mask.len();
        let mut attr = targets.to_vec();
        let mut remaining: Vec<usize> = (0..n)
            .map(|v| {
                if mask[v] {
                    game.edges(v).iter().filter(|e| mask[e.target]).count()
                } else {
                    0
                }
            })
            .collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| targets[v]).collect();
        while let Some(u) = queue.pop_front() {
            for &v in &self.pred[u] {
                if !mask[v] || attr[v] {
                    continue;
                }
                if game.owner(v) == player {
                    // the edge to `u`, which is already attracted; picking the
                    // edge after marking `v` could select a self-loop
                    self.choice[v] = game
                        .edges(v)
                        .iter()
                        .position(|e| e.target != v && attr[e.target] && mask[e.target]);
                    attr[v] = true;
                    queue.push_back(v);
                } else {
                    remaining[v] -= 1;
                    if remaining[v] == 0 {
                        attr[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        attr
    }
}

fn split(p: Player, w_o: Vec<bool>, w_i: Vec<bool>) -> (Vec<bool>, Vec<bool>) {
    match p {
        Player::O => (w_o, w_i),
        Player::I => (w_i, w_o),
    }
}

fn join(p: Player, w_p: Vec<bool>, w_q: Vec<bool>) -> (Vec<bool>, Vec<bool>) {
    split(p, w_p, w_q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parity::{strategy_is_winning, Edge};

    #[test]
    fn attractor_strategy_leaves_self_loop() {
        // v1 (O, odd) can loop on itself or move to the even sink v0
        let g = ParityGame::new(
            vec![Player::I, Player::O],
            vec![2, 1],
            vec![
                vec![Edge {
                    label: 0,
                    target: 0,
                }],
                vec![
                    Edge {
                        label: 0,
                        target: 1,
                    },
                    Edge {
                        label: 1,
                        target: 0,
                    },
                ],
            ],
            0,
        )
        .unwrap();
        let r = solve_zielonka(&g);
        assert_eq!(r.choice(1), Some(1));
        assert!(strategy_is_winning(&g, &r, Player::O));
    }
}
