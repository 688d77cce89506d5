use crate::automata::{Dpa, Letter, State};
use crate::error::{Error, Result};
use crate::parity::{Edge, ParityGame};
use crate::Player;

/// Largest lookahead arena that will be built.
pub const LOOKAHEAD_VERTEX_LIMIT: usize = 1 << 21;

/// The delay-free game `Γ(L(A))` as a parity game.
///
/// Vertex `q·(1+|Σ_I|)` is `(q, pickI)`, vertex `q·(1+|Σ_I|) + 1 + a` is
/// `(q, a, pickO)`; every vertex carries the priority of its state. The
/// arena has `|Q|·(1+|Σ_I|)` vertices.
pub fn build_delay_free_game(a: &Dpa) -> ParityGame {
    build_lookahead_game(a, 0)
        .expect("delay-free arena is linear in the automaton")
        .game
}

/// The game `Γ_{f_k}(L(A))` for `f_k = (k+1; 1)`, played on buffered input.
#[derive(Debug, Clone)]
pub struct LookaheadGame {
    pub game: ParityGame,
    pub k: usize,
    sigma: usize,
    /// `offsets[j]` = number of words shorter than `j`.
    offsets: Vec<usize>,
}

impl LookaheadGame {
    /// Number of buffer contents, `Σ_{j≤k+1} |Σ_I|^j`.
    pub fn buffer_count(&self) -> usize {
        self.offsets[self.k + 2]
    }

    pub fn vertex(&self, q: State, w: &[Letter]) -> usize {
        q * self.buffer_count() + word_id(&self.offsets, self.sigma, w)
    }

    pub fn decode(&self, v: usize) -> (State, Vec<Letter>) {
        let (q, id) = (v / self.buffer_count(), v % self.buffer_count());
        let len = (0..=self.k + 1)
            .rev()
            .find(|&j| self.offsets[j] <= id)
            .expect("valid id");
        let mut rank = id - self.offsets[len];
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = rank % self.sigma;
            rank /= self.sigma;
        }
        (q, w)
    }
}

fn word_id(offsets: &[usize], sigma: usize, w: &[Letter]) -> usize {
    offsets[w.len()] + w.iter().fold(0, |acc, &a| acc * sigma + a)
}

/// Vertices `(q, w)` with `|w| ≤ k+1`: Player I appends letters while
/// `|w| ≤ k`; at `|w| = k+1` Player O answers `b` and the automaton consumes
/// the buffer head. For `k = 0` this is exactly [`build_delay_free_game`].
pub fn build_lookahead_game(a: &Dpa, k: usize) -> Result<LookaheadGame> {
    let sigma = a.input().len();
    let mut offsets = vec![0usize];
    let mut layer = 1usize;
    for _ in 0..=k + 1 {
        let next = offsets.last().unwrap().checked_add(layer);
        offsets.push(next.ok_or_else(|| Error::SizeGuard(format!("lookahead {k}")))?);
        layer = layer.saturating_mul(sigma);
    }
    let buffers = offsets[k + 2];
    let n = buffers
        .checked_mul(a.state_count())
        .filter(|&n| n <= LOOKAHEAD_VERTEX_LIMIT)
        .ok_or_else(|| {
            Error::SizeGuard(format!(
                "lookahead {k} needs more than {LOOKAHEAD_VERTEX_LIMIT} vertices"
            ))
        })?;
    let mut shape = LookaheadGame {
        game: ParityGame::new(
            vec![Player::I],
            vec![0],
            vec![vec![Edge {
                label: 0,
                target: 0,
            }]],
            0,
        )?,
        k,
        sigma,
        offsets,
    };
    let mut owner = Vec::with_capacity(n);
    let mut priority = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n);
    for v in 0..n {
        let (q, w) = shape.decode(v);
        priority.push(a.priority(q));
        if w.len() <= k {
            owner.push(Player::I);
            edges.push(
                a.input()
                    .letters()
                    .map(|x| {
                        let mut w2 = w.clone();
                        w2.push(x);
                        Edge {
                            label: x,
                            target: shape.vertex(q, &w2),
                        }
                    })
                    .collect(),
            );
        } else {
            owner.push(Player::O);
            edges.push(
                a.output()
                    .letters()
                    .map(|b| Edge {
                        label: b,
                        target: shape.vertex(a.delta(q, w[0], b), &w[1..]),
                    })
                    .collect(),
            );
        }
    }
    let initial = shape.vertex(a.initial(), &[]);
    shape.game = ParityGame::new(owner, priority, edges, initial)?;
    Ok(shape)
}
