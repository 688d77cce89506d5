use crate::error::{Error, Result};
use crate::Player;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    /// Move label, e.g. the letter chosen by the vertex owner.
    pub label: usize,
    pub target: usize,
}

/// A finite two-player parity game (max-even: O wins when the largest
/// priority seen infinitely often is even).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityGame {
    owner: Vec<Player>,
    priority: Vec<u32>,
    edges: Vec<Vec<Edge>>,
    initial: usize,
}

impl ParityGame {
    pub fn new(
        owner: Vec<Player>,
        priority: Vec<u32>,
        edges: Vec<Vec<Edge>>,
        initial: usize,
    ) -> Result<Self> {
        let n = owner.len();
        if priority.len() != n || edges.len() != n {
            return Err(Error::invalid(
                "parity game",
                "vertex tables have different lengths",
            ));
        }
        if n == 0 || initial >= n {
            return Err(Error::invalid("parity game", "initial vertex out of range"));
        }
        for (v, out) in edges.iter().enumerate() {
            if out.is_empty() {
                return Err(Error::invalid(
                    "parity game",
                    format!("vertex {v} is a dead end"),
                ));
            }
            if let Some(e) = out.iter().find(|e| e.target >= n) {
                return Err(Error::invalid(
                    "parity game",
                    format!("edge {v} -> {} out of range", e.target),
                ));
            }
        }
        Ok(ParityGame {
            owner,
            priority,
            edges,
            initial,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.owner.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    pub fn owner(&self, v: usize) -> Player {
        self.owner[v]
    }

    pub fn priority(&self, v: usize) -> u32 {
        self.priority[v]
    }

    pub fn edges(&self, v: usize) -> &[Edge] {
        &self.edges[v]
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub(crate) fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.vertex_count()];
        for (v, out) in self.edges.iter().enumerate() {
            for e in out {
                pred[e.target].push(v);
            }
        }
        pred
    }
}

/// Winning regions and positional strategies of a solved game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    winner: Vec<Player>,
    /// Index into `edges(v)`, set exactly for vertices owned by their winner.
    choice: Vec<Option<usize>>,
}

impl SolveResult {
    pub(crate) fn new(winner: Vec<Player>, choice: Vec<Option<usize>>) -> Self {
        SolveResult { winner, choice }
    }

    pub fn winner(&self, v: usize) -> Player {
        self.winner[v]
    }

    pub fn winners(&self) -> &[Player] {
        &self.winner
    }

    pub fn region(&self, player: Player) -> Vec<usize> {
        (0..self.winner.len())
            .filter(|&v| self.winner[v] == player)
            .collect()
    }

    /// The edge index the region owner takes at `v`, if `v` is hers.
    pub fn choice(&self, v: usize) -> Option<usize> {
        self.choice[v]
    }

    pub fn has_strategies(&self) -> bool {
        self.choice.iter().any(Option::is_some)
    }
}
