use crate::automata::{Dpa, SEPARATOR_TOKEN};
use crate::delay::SkipSymbol;
use crate::parity::SolveResult;
use crate::solvers::LookaheadGame;
use crate::strategy::{Emission, MealyStrategy, StrategyKind};

/// O's move at an O-vertex of the buffer game: the chosen edge label, or the
/// first letter where she has no winning choice.
fn choice_label(shape: &LookaheadGame, result: &SolveResult, v: usize) -> usize {
    let e = result.choice(v).unwrap_or(0);
    shape.game.edges(v)[e].label
}

/// Buffer-game vertex reached by reading input `a` at `v`: at an O-vertex O
/// answers first, then the letter is appended.
fn advance(a: &Dpa, shape: &LookaheadGame, result: &SolveResult, v: usize, x: usize) -> usize {
    let (q, w) = shape.decode(v);
    let (q, mut w) = if w.len() == shape.k + 1 {
        let b = choice_label(shape, result, v);
        (a.delta(q, w[0], b), w[1..].to_vec())
    } else {
        (q, w)
    };
    w.push(x);
    shape.vertex(q, &w)
}

fn emission(shape: &LookaheadGame, result: &SolveResult, v: usize) -> Emission {
    let (_, w) = shape.decode(v);
    let b = if w.len() == shape.k + 1 {
        choice_label(shape, result, v)
    } else {
        0
    };
    Emission::Symbol(SkipSymbol::Letter(b))
}

/// Input-tracking machine playing O's positional strategy of the buffer game
/// for `f_k`; its states are the arena vertices.
pub fn lookahead_mealy(a: &Dpa, shape: &LookaheadGame, result: &SolveResult) -> MealyStrategy {
    let n = shape.game.vertex_count();
    let emit = (0..n).map(|v| emission(shape, result, v)).collect();
    MealyStrategy::from_fn(
        StrategyKind::It,
        a.input().clone(),
        a.output().clone(),
        shape.game.initial(),
        emit,
        |v, t| {
            advance(
                a,
                shape,
                result,
                v,
                a.input().letter(t).expect("input token"),
            )
        },
    )
    .expect("well-formed by construction")
}

/// Round-counting machine playing O's positional strategy of the delay-free
/// game: it tracks the arena on the letters up to the current round and
/// freezes at `#`, ignoring the lookahead behind it. States `v` (tracking)
/// and `n + v` (frozen).
pub fn rc_mealy(a: &Dpa, shape: &LookaheadGame, result: &SolveResult) -> MealyStrategy {
    debug_assert_eq!(shape.k, 0);
    let n = shape.game.vertex_count();
    let emit = (0..2 * n).map(|v| emission(shape, result, v % n)).collect();
    MealyStrategy::from_fn(
        StrategyKind::Rc,
        a.input().clone(),
        a.output().clone(),
        shape.game.initial(),
        emit,
        |s, t| {
            if s >= n {
                s
            } else if t == SEPARATOR_TOKEN {
                n + s
            } else {
                advance(
                    a,
                    shape,
                    result,
                    s,
                    a.input().letter(t).expect("input token"),
                )
            }
        },
    )
    .expect("well-formed by construction")
}
