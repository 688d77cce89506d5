#![allow(dead_code)]

use delaygames::automata::{Alphabet, Dpa};
use delaygames::parity::{Edge, ParityGame};
use delaygames::Player;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ab() -> Alphabet {
    Alphabet::new(["a", "b"]).unwrap()
}

/// A random parity game with 1..=`max_vertices` vertices and out-degree 1..=2.
pub fn random_game(rng: &mut impl Rng, max_vertices: usize) -> ParityGame {
    let n = rng.gen_range(1..=max_vertices);
    let owner = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Player::I
            } else {
                Player::O
            }
        })
        .collect();
    let priority = (0..n).map(|_| rng.gen_range(0..5)).collect();
    let edges = (0..n)
        .map(|_| {
            let mut out: Vec<Edge> = Vec::new();
            for label in 0..rng.gen_range(1..=2) {
                let target = rng.gen_range(0..n);
                if out.iter().all(|e| e.target != target) {
                    out.push(Edge { label, target });
                }
            }
            out
        })
        .collect();
    ParityGame::new(owner, priority, edges, 0).unwrap()
}

/// A random complete automaton over `{a,b}` × `{a,b}`.
pub fn random_dpa(rng: &mut impl Rng, states: usize) -> Dpa {
    let priority: Vec<u32> = (0..states).map(|_| rng.gen_range(0..4)).collect();
    let table: Vec<usize> = (0..states * 4).map(|_| rng.gen_range(0..states)).collect();
    Dpa::from_fn(ab(), ab(), 0, priority, |q, a, b| table[q * 4 + a * 2 + b]).unwrap()
}

/// The random automaton suite shared by several checks.
pub fn automaton_suite(count: usize) -> Vec<Dpa> {
    let mut r = rng(0x5eed);
    (0..count).map(|_| random_dpa(&mut r, 3)).collect()
}

pub mod arb {
    use super::ab;
    use delaygames::automata::{Dpa, Lasso};
    use delaygames::delay::{DelayFunction, SkipSymbol};
    use delaygames::parity::{Edge, ParityGame};
    use delaygames::strategy::{Emission, MealyStrategy, StrategyKind, UltimatelyPeriodicWord};
    use delaygames::Player;
    use proptest::collection::vec;
    use proptest::prelude::*;

    pub fn dpa(max_states: usize) -> impl Strategy<Value = Dpa> {
        (1..=max_states)
            .prop_flat_map(|n| (vec(0u32..4, n), vec(0..n, n * 4)))
            .prop_map(|(p, t)| {
                Dpa::from_fn(ab(), ab(), 0, p, |q, a, b| t[q * 4 + a * 2 + b]).unwrap()
            })
    }

    /// Automata whose only odd state is an absorbing sink.
    pub fn safety_dpa(max_states: usize) -> impl Strategy<Value = Dpa> {
        (1..=max_states)
            .prop_flat_map(|n| vec(0..=n, n * 4).prop_map(move |t| (n, t)))
            .prop_map(|(n, t)| {
                let mut p = vec![0; n];
                p.push(1);
                Dpa::from_fn(ab(), ab(), 0, p, |q, a, b| {
                    if q == n {
                        n
                    } else {
                        t[q * 4 + a * 2 + b]
                    }
                })
                .unwrap()
            })
    }

    pub fn game(max_vertices: usize) -> impl Strategy<Value = ParityGame> {
        (1..=max_vertices)
            .prop_flat_map(|n| {
                (
                    vec(any::<bool>(), n),
                    vec(0u32..5, n),
                    vec(vec(0..n, 1..=2), n),
                )
            })
            .prop_map(|(owner, priority, targets)| {
                let owner = owner
                    .into_iter()
                    .map(|o| if o { Player::O } else { Player::I })
                    .collect();
                let edges = targets
                    .into_iter()
                    .map(|ts| {
                        let mut out: Vec<Edge> = Vec::new();
                        for t in ts {
                            if out.iter().all(|e| e.target != t) {
                                out.push(Edge {
                                    label: out.len(),
                                    target: t,
                                });
                            }
                        }
                        out
                    })
                    .collect();
                ParityGame::new(owner, priority, edges, 0).unwrap()
            })
    }

    pub fn delay() -> impl Strategy<Value = DelayFunction> {
        (vec(1usize..4, 0..4), 1usize..3).prop_map(|(p, t)| DelayFunction::new(p, t).unwrap())
    }

    /// Delay functions that are eventually 1.
    pub fn delay_tail1() -> impl Strategy<Value = DelayFunction> {
        vec(1usize..4, 0..4).prop_map(|p| DelayFunction::new(p, 1).unwrap())
    }

    pub fn pairs(min: usize, max: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
        vec((0usize..2, 0usize..2), min..=max)
    }

    pub fn lasso() -> impl Strategy<Value = Lasso> {
        (pairs(0, 4), pairs(1, 4)).prop_map(|(s, c)| Lasso::new(s, c).unwrap())
    }

    pub fn skip_word(max: usize) -> impl Strategy<Value = Vec<SkipSymbol>> {
        vec(
            (0usize..3).prop_map(|x| {
                if x == 0 {
                    SkipSymbol::Skip
                } else {
                    SkipSymbol::Letter(x - 1)
                }
            }),
            0..=max,
        )
    }

    fn emission(kind: StrategyKind, skip: bool) -> BoxedStrategy<Emission> {
        if kind.player() == Player::I {
            let words = UltimatelyPeriodicWord::enumerate(&ab(), 1, 2);
            (0..words.len())
                .prop_map(move |i| Emission::Word(words[i].clone()))
                .boxed()
        } else {
            let top = if skip { 3 } else { 2 };
            (0usize..top)
                .prop_map(|x| {
                    Emission::Symbol(if x == 2 {
                        SkipSymbol::Skip
                    } else {
                        SkipSymbol::Letter(x)
                    })
                })
                .boxed()
        }
    }

    /// A random machine over `{a,b}` × `{a,b}`; O machines emit `▷` only if `skip`.
    pub fn mealy(
        kind: StrategyKind,
        max_states: usize,
        skip: bool,
    ) -> impl Strategy<Value = MealyStrategy> {
        let tokens = delaygames::strategy::observation_tokens(kind, &ab(), &ab()).len();
        (1..=max_states)
            .prop_flat_map(move |n| (vec(vec(0..n, tokens), n), vec(emission(kind, skip), n)))
            .prop_map(move |(trans, emit)| {
                MealyStrategy::new(kind, ab(), ab(), 0, trans, emit).unwrap()
            })
    }
}
