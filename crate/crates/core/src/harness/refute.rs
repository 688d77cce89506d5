use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::automata::{Condition, Letter};
use crate::delay::{DelayFunction, PlayRecord};
use crate::error::{Error, Result};
use crate::examples::{make_condition, ExampleId};
use crate::harness::simulate::check_letters;
use crate::harness::{lasso_verify, scripted_lasso, simulate_play, ScriptedInput, ScriptedOutput};
use crate::strategy::{
    output_move, words_of_length, InputStrategy, InputView, Strategy, StrategyKind,
};
use crate::Player;

/// How a defeat is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// The outcome after `horizon` rounds is already lost for the owner.
    BadPrefix,
    /// The ultimately periodic play against the scripted opponent is lost.
    LassoLoss,
}

/// A delay function and opponent behaviour under which a strategy loses.
///
/// `opponent_moves` is replayed with its last letter repeated: Player O's
/// letters when refuting a Player-I strategy, Player I's input word
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Defeat {
    pub f: DelayFunction,
    pub opponent_moves: Vec<Letter>,
    pub horizon: usize,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    Defeat(Defeat),
    Inconclusive { reason: String },
}

/// The three separating examples and the strategy class each one defeats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Separation {
    L1VsOt,
    L2VsLc,
    L3VsIt,
}

impl Separation {
    pub const ALL: [Separation; 3] = [Separation::L1VsOt, Separation::L2VsLc, Separation::L3VsIt];

    pub fn example(self) -> ExampleId {
        match self {
            Separation::L1VsOt => ExampleId::L1,
            Separation::L2VsLc => ExampleId::L2,
            Separation::L3VsIt => ExampleId::L3,
        }
    }

    /// The strategy class being refuted.
    pub fn kind(self) -> StrategyKind {
        match self {
            Separation::L1VsOt => StrategyKind::Ot,
            Separation::L2VsLc => StrategyKind::Lc,
            Separation::L3VsIt => StrategyKind::It,
        }
    }

    pub fn owner(self) -> Player {
        self.kind().player()
    }

    pub fn condition(self) -> Condition {
        make_condition(self.example())
    }
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-vs-{}", self.example(), self.kind())
    }
}

impl FromStr for Separation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = s.split('-').next().unwrap_or_default();
        let sep = match id.parse::<ExampleId>() {
            Ok(ExampleId::L1) => Separation::L1VsOt,
            Ok(ExampleId::L2) => Separation::L2VsLc,
            Ok(ExampleId::L3) => Separation::L3VsIt,
            _ => {
                return Err(Error::invalid(
                    "separation",
                    format!("`{s}` is not one of L1, L2, L3"),
                ))
            }
        };
        if s.contains('-') && !s.eq_ignore_ascii_case(&sep.to_string()) {
            return Err(Error::invalid(
                "separation",
                format!("unknown separation `{s}`"),
            ));
        }
        Ok(sep)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefuteOptions {
    /// Letters inspected when probing an infinite-word answer.
    pub probe_depth: usize,
    /// Rounds simulated per candidate in the L2 family search.
    pub horizon: usize,
    /// Largest `f(0)` tried in the L2 family search.
    pub max_first_delay: usize,
    /// Longest O move word tried in the L2 family search.
    pub max_moves: usize,
}

impl Default for RefuteOptions {
    fn default() -> Self {
        RefuteOptions {
            probe_depth: 64,
            horizon: 24,
            max_first_delay: 8,
            max_moves: 3,
        }
    }
}

/// Searches for a [`Defeat`] of `s` on the separation's condition; every
/// defeat returned has been replayed successfully.
pub fn refute_separation(
    which: Separation,
    s: &Strategy,
    opts: &RefuteOptions,
) -> Result<Refutation> {
    if s.kind() != which.kind() {
        return Err(Error::Precondition(format!(
            "{which} refutes {} strategies, got {}",
            which.kind(),
            s.kind()
        )));
    }
    let cond = which.condition();
    let found = match which {
        Separation::L1VsOt => Some(refute_l1(s.as_input()?.as_ref(), &cond, opts)?),
        Separation::L2VsLc => refute_l2(s.as_input()?.as_ref(), &cond, opts)?,
        Separation::L3VsIt => Some(refute_l3(s, &cond)?),
    };
    match found {
        Some(d) => {
            if !replay_defeat(which, s, &d)? {
                return Err(Error::Oracle(format!(
                    "{which}: defeat under f = {} does not replay",
                    d.f
                )));
            }
            Ok(Refutation::Defeat(d))
        }
        None => Ok(Refutation::Inconclusive {
            reason: format!(
                "no defeat within f(0) ≤ {}, move words of length ≤ {}, {} rounds",
                opts.max_first_delay, opts.max_moves, opts.horizon
            ),
        }),
    }
}

/// Re-simulates the recorded behaviour and checks its certificate.
pub fn replay_defeat(which: Separation, s: &Strategy, d: &Defeat) -> Result<bool> {
    let cond = which.condition();
    let owner = s.player();
    match d.certificate {
        Certificate::BadPrefix => {
            let play = replay_play(s, d)?;
            check_letters(&play.alpha(), cond.input(), "player I")?;
            check_letters(&play.beta(), cond.output(), "player O")?;
            let state = cond.run(&play.outcome());
            Ok(cond.settled_winner(&state) == Some(owner.opponent()))
        }
        Certificate::LassoLoss => {
            let winner = match s {
                Strategy::Input(si) => scripted_lasso(si.as_ref(), &d.f, &d.opponent_moves, &cond)?,
                Strategy::Output(so) => {
                    let si = ScriptedInput::new(d.opponent_moves.clone())?;
                    lasso_verify(&si, so.as_ref(), &d.f, &cond)?
                }
            };
            Ok(winner == owner.opponent())
        }
    }
}

/// The play of `s` against the scripted opponent of `d`, over `d.horizon` rounds.
pub fn replay_play(s: &Strategy, d: &Defeat) -> Result<PlayRecord> {
    match s {
        Strategy::Input(si) => {
            let so = ScriptedOutput::new(d.opponent_moves.clone())?;
            simulate_play(si.as_ref(), &so, &d.f, d.horizon)
        }
        Strategy::Output(so) => {
            let si = ScriptedInput::new(d.opponent_moves.clone())?;
            simulate_play(&si, so.as_ref(), &d.f, d.horizon)
        }
    }
}

fn probe(
    si: &dyn InputStrategy,
    view: &InputView<'_>,
    cond: &Condition,
    depth: usize,
) -> Result<Vec<Letter>> {
    let w = si.respond(view)?.prefix(depth)?;
    check_letters(&w, cond.input(), "player I")?;
    Ok(w)
}

/// I must produce `(ab)^ω`. A deviation of `τ(ε)` at index `d` is exposed by
/// `f(0) = d + 1`; otherwise the first letter of `τ(b)` lands at position
/// `f(0)` and is wrong for `f(0)` of one parity.
fn refute_l1(si: &dyn InputStrategy, cond: &Condition, opts: &RefuteOptions) -> Result<Defeat> {
    let depth = opts.probe_depth.max(2);
    let first = probe(si, &InputView::Ot { outputs: &[] }, cond, depth)?;
    let expected = |j: usize| (j % 2) as Letter;
    if let Some(d) = (0..depth).find(|&j| first[j] != expected(j)) {
        return Ok(Defeat {
            f: DelayFunction::new(vec![d + 1], 1)?,
            opponent_moves: vec![0],
            horizon: d + 1,
            certificate: Certificate::BadPrefix,
        });
    }
    let next = probe(si, &InputView::Ot { outputs: &[0] }, cond, 1)?[0];
    // position f(0) needs a for even f(0), b for odd f(0)
    let f0 = if next == expected(1) { 2 } else { 1 };
    Ok(Defeat {
        f: DelayFunction::new(vec![f0], 1)?,
        opponent_moves: vec![0],
        horizon: f0 + 1,
        certificate: Certificate::BadPrefix,
    })
}

/// A non-`a` letter in `τ(ε, 0)` is answered with the other output letter;
/// otherwise the delay functions `f(0) = m` with tail 1 and `f ≡ 2` are
/// searched together with short O move words.
fn refute_l2(
    si: &dyn InputStrategy,
    cond: &Condition,
    opts: &RefuteOptions,
) -> Result<Option<Defeat>> {
    let a = cond.input().require("a")?;
    let first = probe(
        si,
        &InputView::Lc {
            outputs: &[],
            count: 0,
        },
        cond,
        opts.probe_depth.max(1),
    )?;
    if let Some(p) = first.iter().position(|&l| l != a) {
        let y = cond.input().symbol(first[p]);
        let other = cond
            .output()
            .letters()
            .find(|&b| cond.output().symbol(b) != y)
            .expect("two output letters");
        return Ok(Some(Defeat {
            f: DelayFunction::new(vec![p + 1], 1)?,
            opponent_moves: vec![other],
            horizon: p + 1,
            certificate: Certificate::BadPrefix,
        }));
    }

    let mut family = vec![DelayFunction::constant(2)?];
    for m in 2..=opts.max_first_delay.max(2) {
        family.push(DelayFunction::new(vec![m], 1)?);
    }
    family.push(DelayFunction::delay_free());
    let finite_state = si.runner().is_some();
    let outputs = cond.output().len();
    for f in &family {
        for len in 1..=opts.max_moves.max(1) {
            for moves in words_of_length(outputs, len) {
                let so = ScriptedOutput::new(moves.clone())?;
                let play = simulate_play(si, &so, f, opts.horizon)?;
                check_letters(&play.alpha(), cond.input(), "player I")?;
                let mut state = cond.start();
                for (r, (x, v)) in play.outcome().into_iter().enumerate() {
                    state = cond.step(&state, x, v);
                    if cond.settled_winner(&state) == Some(Player::O) {
                        return Ok(Some(Defeat {
                            f: f.clone(),
                            opponent_moves: moves,
                            horizon: r + 1,
                            certificate: Certificate::BadPrefix,
                        }));
                    }
                }
                if finite_state && scripted_lasso(si, f, &moves, cond)? == Player::O {
                    return Ok(Some(Defeat {
                        f: f.clone(),
                        opponent_moves: moves,
                        horizon: opts.horizon,
                        certificate: Certificate::LassoLoss,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// With a single input letter an i.t. strategy cannot tell rounds apart
/// from lookahead: `σ(aa) = b` fails round 0 under `f = (2;1)`, and
/// `σ(aa) = a` fails round 1 without delay.
fn refute_l3(s: &Strategy, cond: &Condition) -> Result<Defeat> {
    let so = s.as_output()?;
    let a = cond.input().require("a")?;
    let answer = output_move(so.as_ref(), &[a, a], 0)?;
    check_letters(&[answer], cond.output(), "player O")?;
    let f = if cond.output().symbol(answer) == "b" {
        DelayFunction::new(vec![2], 1)?
    } else {
        DelayFunction::new(vec![1, 1], 1)?
    };
    let horizon = if f.value(0) == 2 { 1 } else { 2 };
    Ok(Defeat {
        opponent_moves: vec![a; f.cumulative(horizon - 1)],
        f,
        horizon,
        certificate: Certificate::BadPrefix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::make_strategy;
    use crate::strategy::{Emission, MealyStrategy, OutputOracle, UltimatelyPeriodicWord};
    use std::sync::Arc;

    fn defeat(r: Refutation) -> Defeat {
        match r {
            Refutation::Defeat(d) => d,
            other => panic!("expected a defeat, got {other:?}"),
        }
    }

    #[test]
    fn names() {
        for s in Separation::ALL {
            assert_eq!(s.to_string().parse::<Separation>().unwrap(), s);
        }
        assert_eq!("l2".parse::<Separation>().unwrap(), Separation::L2VsLc);
        assert!("L1-vs-IT".parse::<Separation>().is_err());
        assert_eq!(Separation::L3VsIt.to_string(), "L3-vs-IT");
    }

    #[test]
    fn l1_refutes_a_omega_at_index_one() {
        let cond = make_condition(ExampleId::L1);
        let m = MealyStrategy::from_fn(
            StrategyKind::Ot,
            cond.input().clone(),
            cond.output().clone(),
            0,
            vec![Emission::Word(UltimatelyPeriodicWord::constant(0))],
            |_, _| 0,
        )
        .unwrap();
        let d = defeat(
            refute_separation(
                Separation::L1VsOt,
                &Strategy::mealy(m),
                &RefuteOptions::default(),
            )
            .unwrap(),
        );
        assert_eq!(d.f.value(0), 2);
        assert_eq!(d.certificate, Certificate::BadPrefix);
    }

    #[test]
    fn l3_refutes_constant_a() {
        let sigma = OutputOracle::new(StrategyKind::It, |_| Ok(0)).unwrap();
        let s = Strategy::Output(Arc::new(sigma));
        let d =
            defeat(refute_separation(Separation::L3VsIt, &s, &RefuteOptions::default()).unwrap());
        assert_eq!(d.f.to_string(), ";1");
        assert_eq!(d.horizon, 2);
        let play = replay_play(&s, &d).unwrap();
        assert_eq!(play.beta(), vec![0, 0]);
    }

    #[test]
    fn l3_refutes_b_on_two_letters() {
        let sigma = OutputOracle::new(StrategyKind::It, |v| {
            Ok(if v.inputs().len() >= 2 { 1 } else { 0 })
        })
        .unwrap();
        let d = defeat(
            refute_separation(
                Separation::L3VsIt,
                &Strategy::Output(Arc::new(sigma)),
                &RefuteOptions::default(),
            )
            .unwrap(),
        );
        assert_eq!(d.f.to_string(), "2;1");
        assert_eq!(d.horizon, 1);
    }

    #[test]
    fn l2_refutes_a_omega_by_lasso() {
        let cond = make_condition(ExampleId::L2);
        let m = MealyStrategy::from_fn(
            StrategyKind::Lc,
            cond.input().clone(),
            cond.output().clone(),
            0,
            vec![Emission::Word(UltimatelyPeriodicWord::constant(0))],
            |_, _| 0,
        )
        .unwrap();
        let d = defeat(
            refute_separation(
                Separation::L2VsLc,
                &Strategy::mealy(m),
                &RefuteOptions::default(),
            )
            .unwrap(),
        );
        assert_eq!(d.certificate, Certificate::LassoLoss);
    }

    #[test]
    fn l2_refutes_early_letter() {
        let cond = make_condition(ExampleId::L2);
        // a b a^ω from the start
        let m = MealyStrategy::from_fn(
            StrategyKind::Lc,
            cond.input().clone(),
            cond.output().clone(),
            0,
            vec![Emission::Word(
                UltimatelyPeriodicWord::new(vec![0, 1], vec![0]).unwrap(),
            )],
            |_, _| 0,
        )
        .unwrap();
        let d = defeat(
            refute_separation(
                Separation::L2VsLc,
                &Strategy::mealy(m),
                &RefuteOptions::default(),
            )
            .unwrap(),
        );
        assert_eq!(d.f.value(0), 2);
        assert_eq!(d.opponent_moves, vec![1]);
    }

    #[test]
    fn wrong_kind_rejected() {
        let s = make_strategy(ExampleId::L0);
        assert!(refute_separation(Separation::L2VsLc, &s, &RefuteOptions::default()).is_err());
    }

    #[test]
    fn defeat_serializes() {
        let d = Defeat {
            f: "2;1".parse().unwrap(),
            opponent_moves: vec![0, 0],
            horizon: 1,
            certificate: Certificate::BadPrefix,
        };
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.contains("\"bad_prefix\""));
        assert_eq!(serde_json::from_str::<Defeat>(&json).unwrap(), d);
    }
}
