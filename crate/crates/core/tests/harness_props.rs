mod common;

use common::arb;
use delaygames::automata::{Condition, Lasso, Letter, Pair};
use delaygames::delay::DelayFunction;
use delaygames::examples::{l2_monitor, make_condition, make_strategy, ExampleId};
use delaygames::harness::{
    bounded_exhaustive_win_check, lasso_verify, refute_separation, replay_defeat, simulate_play,
    Refutation, RefuteOptions, ScriptedInput, Separation, WinCheck,
};
use delaygames::strategy::{MealyStrategy, Strategy as GameStrategy, StrategyKind};
use delaygames::Player;
use proptest::prelude::*;

fn o_kind() -> impl Strategy<Value = StrategyKind> {
    prop_oneof![Just(StrategyKind::It), Just(StrategyKind::Rc)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// On conditions where O can only lose through a bad prefix, a passing
    /// bounded check means no finite-state I strategy beats her, and a
    /// counterplay's input word beats her exactly.
    #[test]
    fn lasso_agrees_with_exhaustive_check(
        a in arb::safety_dpa(3),
        so in o_kind().prop_flat_map(|k| arb::mealy(k, 2, false)),
        si in arb::mealy(StrategyKind::Ot, 2, false),
        f in arb::delay_tail1(),
    ) {
        let cond = Condition::Parity(a);
        let so_strategy = GameStrategy::mealy(so.clone());
        let exact = lasso_verify(&si, &so, &f, &cond).unwrap();
        // on this condition I wins exactly through a bad prefix
        let play = simulate_play(&si, &so, &f, 64).unwrap();
        let outcome = play.outcome();
        let bad = (0..outcome.len())
            .find(|&r| cond.settled_winner(&cond.run(&outcome[..=r])) == Some(Player::I));
        prop_assert_eq!(exact == Player::I, bad.is_some());
        if let Some(r) = bad {
            let deep = bounded_exhaustive_win_check(&so_strategy, Player::O, &cond, &f, r + 1).unwrap();
            prop_assert!(matches!(deep, WinCheck::Counterplay(_)));
        }
        match bounded_exhaustive_win_check(&so_strategy, Player::O, &cond, &f, 5).unwrap() {
            WinCheck::Pass => prop_assert!(bad.is_none_or(|r| r >= 5)),
            WinCheck::Counterplay(p) => {
                let script = ScriptedInput::new(p.alpha()).unwrap();
                prop_assert_eq!(lasso_verify(&script, &so, &f, &cond).unwrap(), Player::I);
            }
            WinCheck::Inconclusive { .. } => prop_assert!(false, "safety condition was inconclusive"),
        }
    }

    #[test]
    fn l1_refutations_replay(m in arb::mealy(StrategyKind::Ot, 3, false)) {
        let m = relabel(m, ExampleId::L1);
        let s = GameStrategy::mealy(m);
        match refute_separation(Separation::L1VsOt, &s, &RefuteOptions::default()).unwrap() {
            Refutation::Defeat(d) => prop_assert!(replay_defeat(Separation::L1VsOt, &s, &d).unwrap()),
            Refutation::Inconclusive { reason } => prop_assert!(false, "{reason}"),
        }
    }
}

/// The same machine table over the example's alphabets.
fn relabel(m: MealyStrategy, id: ExampleId) -> MealyStrategy {
    let cond = make_condition(id);
    let text = m
        .to_text()
        .replace(
            "sigmaO a b",
            &format!("sigmaO {}", cond.output().symbols().join(" ")),
        )
        .replace("obs a b", "obs b c");
    let text = text
        .lines()
        .map(|l| {
            if let Some(rest) = l.strip_prefix("obstrans ") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let tok = match parts[1] {
                    "a" => "b",
                    "b" => "c",
                    t => t,
                };
                format!("obstrans {} {} {}", parts[0], tok, parts[2])
            } else {
                l.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    MealyStrategy::parse(&text).unwrap()
}

#[test]
fn example_strategies_pass_sampled_delays() {
    for id in ExampleId::ALL {
        let cond = make_condition(id);
        let s = make_strategy(id);
        for spec in [";1", "2;1", "3;1", "2,2;1", "5,1,2;1"] {
            let f: DelayFunction = spec.parse().unwrap();
            let got = bounded_exhaustive_win_check(&s, s.player(), &cond, &f, 8).unwrap();
            assert_eq!(got, WinCheck::Pass, "{id} under f = {spec}");
        }
    }
}

/// All lassos over `pairs` with stem + cycle length at most `max`.
fn lassos(pairs: &[Pair], max: usize) -> Vec<Lasso> {
    let mut words: Vec<Vec<Pair>> = vec![vec![]];
    let mut all = vec![vec![]];
    for _ in 0..max {
        words = words
            .iter()
            .flat_map(|w| {
                pairs.iter().map(move |&p| {
                    let mut w = w.clone();
                    w.push(p);
                    w
                })
            })
            .collect();
        all.extend(words.iter().cloned());
    }
    let mut out = Vec::new();
    for w in &all {
        for split in 0..w.len() {
            out.push(Lasso::new(w[..split].to_vec(), w[split..].to_vec()).unwrap());
        }
    }
    out
}

/// Does the component selected by `pick` equal `(x y)^ω`?
fn is_alternation(l: &Lasso, pick: impl Fn(Pair) -> Letter, x: Letter, y: Letter) -> bool {
    let horizon = l.stem().len() + 2 * l.cycle().len();
    (0..horizon).all(|n| pick(l.at(n)) == if n % 2 == 0 { x } else { y })
}

#[test]
fn l1_and_l3_match_their_definitions() {
    let l1 = make_condition(ExampleId::L1);
    let pairs: Vec<Pair> = (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).collect();
    for l in lassos(&pairs, 6) {
        let o_wins = !is_alternation(&l, |p| p.0, 0, 1);
        assert_eq!(l1.lasso_winner(&l).unwrap() == Player::O, o_wins, "{l:?}");
    }
    let l3 = make_condition(ExampleId::L3);
    for l in lassos(&[(0, 0), (0, 1)], 6) {
        let o_wins = is_alternation(&l, |p| p.1, 0, 1);
        assert_eq!(l3.lasso_winner(&l).unwrap() == Player::O, o_wins, "{l:?}");
    }
}

/// Prefix membership in `a^n0 β(0) a^n1 β(1) Σ^ω` with `n1 > n0`, read off
/// the definition (letters compared by symbol).
fn l2_pattern_complete(alpha: &[&str], beta: &[&str]) -> bool {
    let Some(n0) = alpha.iter().position(|&x| x != "a") else {
        return false;
    };
    if beta.is_empty() || alpha[n0] != beta[0] {
        return false;
    }
    let n1 = alpha[n0 + 1..].iter().take_while(|&&x| x == "a").count();
    let at = n0 + 1 + n1;
    at < alpha.len() && beta.len() > 1 && alpha[at] == beta[1] && n1 > n0
}

/// Can some extension of the prefix still complete the pattern?
fn l2_pattern_possible(alpha: &[&str], beta: &[&str]) -> bool {
    let Some(n0) = alpha.iter().position(|&x| x != "a") else {
        return true;
    };
    if beta.is_empty() || alpha[n0] != beta[0] {
        return false;
    }
    let tail = &alpha[n0 + 1..];
    match tail.iter().position(|&x| x != "a") {
        None => true,
        Some(n1) => n1 > n0 && (beta.len() < 2 || tail[n1] == beta[1]),
    }
}

#[test]
fn l2_monitor_matches_definition_up_to_length_8() {
    let m = l2_monitor();
    let cond = Condition::Counter(m.clone());
    let (input, output) = (m.input().clone(), m.output().clone());
    // depth-first over all outcome prefixes, carrying the monitor state
    let mut stack = vec![(Vec::<Pair>::new(), cond.start())];
    let mut checked = 0usize;
    while let Some((word, state)) = stack.pop() {
        let alpha: Vec<&str> = word.iter().map(|p| input.symbol(p.0)).collect();
        let beta: Vec<&str> = word.iter().map(|p| output.symbol(p.1)).collect();
        let settled = cond.settled_winner(&state);
        assert_eq!(
            settled == Some(Player::I),
            l2_pattern_complete(&alpha, &beta),
            "{alpha:?} {beta:?}"
        );
        if settled == Some(Player::O) {
            assert!(!l2_pattern_possible(&alpha, &beta), "{alpha:?} {beta:?}");
        }
        checked += 1;
        if word.len() == 8 || settled.is_some() {
            continue;
        }
        for a in input.letters() {
            for b in output.letters() {
                let mut w = word.clone();
                w.push((a, b));
                stack.push((w, cond.step(&state, a, b)));
            }
        }
    }
    assert!(checked > 10_000);
}
