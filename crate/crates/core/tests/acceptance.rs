//! End-to-end acceptance checks; prints one PASS/FAIL line per criterion.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use common::{ab, automaton_suite, random_game, rng};
use delaygames::automata::{Alphabet, Condition};
use delaygames::delay::{DelayFunction, SkipSymbol};
use delaygames::examples::{
    all_skip_machine, echo_automaton, echo_skip_machine, l0_automaton, l0_skip_strategy,
    l1_strategy, l3_strategy, make_condition, make_strategy, ExampleId,
};
use delaygames::harness::{
    bounded_exhaustive_win_check, lasso_verify, refute_separation, replay_defeat, Refutation,
    RefuteOptions, Separation, WinCheck,
};
use delaygames::parity::{brute_force_winner, solve_zielonka, ParityGame};
use delaygames::solvers::{
    build_delay_free_game, build_lookahead_game, decide_omnipotent_ht_i, decide_omnipotent_rc_o,
    lookahead_strategy, o_wins_lookahead, Verdict,
};
use delaygames::strategy::{
    enumerate_mealy, equivalent, ht_from_skip_strategy, letter_emissions, lift_monotone,
    skip_strategy_to_delay_o, uniformity_check, word_emissions, MealyStrategy, OutputOracle,
    OutputStrategy, SkipOracle, Strategy, StrategyKind, Uniformity,
};
use delaygames::{Error, Player};

const SUITE: usize = 200;

fn f(spec: &str) -> DelayFunction {
    spec.parse().unwrap()
}

/// Every finite-state o.t. strategy of Player I with at most `states` states.
fn ot_strategies(
    input: &Alphabet,
    output: &Alphabet,
    states: usize,
    head: usize,
    period: usize,
) -> Vec<MealyStrategy> {
    enumerate_mealy(
        StrategyKind::Ot,
        input,
        output,
        states,
        &word_emissions(input, head, period),
    )
    .unwrap()
}

/// Every finite-state Player-I strategy over `{a,b}` × `{a,b}` with at most
/// two states, of all four kinds.
fn small_i_strategies() -> Vec<MealyStrategy> {
    let mut out = Vec::new();
    for kind in [
        StrategyKind::Ot,
        StrategyKind::Lc,
        StrategyKind::Iot,
        StrategyKind::Ht,
    ] {
        out.extend(enumerate_mealy(kind, &ab(), &ab(), 2, &word_emissions(&ab(), 1, 2)).unwrap());
    }
    out
}

fn same_winners(g: &ParityGame) {
    let z = solve_zielonka(g);
    let b = brute_force_winner(g).unwrap();
    for v in 0..g.vertex_count() {
        assert_eq!(z.winner(v), b.winner(v), "vertex {v} of {g:?}");
    }
}

fn o_wins_against_all(
    so: &dyn OutputStrategy,
    strategies: &[MealyStrategy],
    delays: &[DelayFunction],
    cond: &Condition,
) {
    for f in delays {
        for si in strategies {
            let w = lasso_verify(si, so, f, cond).unwrap();
            assert_eq!(w, Player::O, "f = {f}, I strategy:\n{}", si.to_text());
        }
    }
}

fn criterion_1() -> String {
    let mut r = rng(1);
    for _ in 0..500 {
        same_winners(&random_game(&mut r, 4));
    }
    for a in automaton_suite(SUITE) {
        same_winners(&build_delay_free_game(&a));
    }
    format!("500 random games, {SUITE} delay-free arenas")
}

fn criterion_2() -> String {
    let i_strategies = small_i_strategies();
    let delays = [f(";1"), f("2;1"), f("1,3;1")];
    let mut yes = 0;
    for a in automaton_suite(SUITE) {
        let g = build_delay_free_game(&a);
        let o_wins = solve_zielonka(&g).winner(g.initial()) == Player::O;
        let report = decide_omnipotent_rc_o(&a);
        assert_eq!(report.verdict == Verdict::OmnipotentRcStrategy, o_wins);
        if o_wins {
            yes += 1;
            let w = report.witness.expect("witness");
            assert_eq!(w.kind(), StrategyKind::Rc);
            o_wins_against_all(&w, &i_strategies, &delays, &Condition::Parity(a));
        }
    }
    assert!(yes > 0, "suite has no O-winning instance");
    format!(
        "{yes}/{SUITE} automata with an omnipotent r.c. strategy, each checked against {} I-strategies",
        i_strategies.len()
    )
}

fn criterion_3() -> String {
    let i_strategies = small_i_strategies();
    let mut lifted_checks = 0;
    for a in automaton_suite(SUITE) {
        let cond = Condition::Parity(a.clone());
        for k in 0..=2 {
            if !o_wins_lookahead(&a, k).unwrap() {
                continue;
            }
            assert!(
                o_wins_lookahead(&a, k + 1).unwrap(),
                "lost at k+1 = {}",
                k + 1
            );
            let sigma = lookahead_strategy(&a, k)
                .unwrap()
                .expect("winning strategy");
            let (fk, fk1) = (DelayFunction::lookahead(k), DelayFunction::lookahead(k + 1));
            let lifted = lift_monotone(Arc::new(sigma), &fk, &fk1).unwrap();
            o_wins_against_all(lifted.as_ref(), &i_strategies, &[fk1], &cond);
            lifted_checks += 1;
        }
    }
    assert!(lifted_checks > 0);
    format!(
        "{lifted_checks} lifted strategies, each checked against {} I-strategies",
        i_strategies.len()
    )
}

fn criterion_4() -> String {
    let cond = make_condition(ExampleId::L0);
    let s = make_strategy(ExampleId::L0);
    for spec in [";1", "3;1", "2,2;1", "5;1"] {
        let got = bounded_exhaustive_win_check(&s, Player::I, &cond, &f(spec), 5).unwrap();
        assert_eq!(got, WinCheck::Pass, "f = {spec}");
    }
    let report = decide_omnipotent_ht_i(&l0_automaton(), 4, false).unwrap();
    assert_eq!(report.verdict, Verdict::OmnipotentHtStrategy);
    assert!(!report.conclusive);
    "4 delay functions at depth 5; h.t. verdict up to k = 4".to_string()
}

fn defeated(which: Separation, s: &Strategy) {
    match refute_separation(which, s, &RefuteOptions::default()).unwrap() {
        Refutation::Defeat(d) => assert!(replay_defeat(which, s, &d).unwrap()),
        Refutation::Inconclusive { reason } => panic!("{which} inconclusive: {reason}"),
    }
}

fn criterion_5() -> String {
    let cond = make_condition(ExampleId::L1);
    let (input, output) = (cond.input().clone(), cond.output().clone());
    let mut o_strategies = Vec::new();
    for kind in [StrategyKind::It, StrategyKind::Rc] {
        o_strategies
            .extend(enumerate_mealy(kind, &input, &output, 1, &letter_emissions(&output)).unwrap());
    }
    let l1 = l1_strategy();
    for spec in [";1", "2;1", "3;1"] {
        for so in &o_strategies {
            assert_eq!(lasso_verify(&l1, so, &f(spec), &cond).unwrap(), Player::I);
        }
    }
    let candidates = ot_strategies(&input, &output, 3, 1, 2);
    assert!(candidates.len() > 1000);
    for m in &candidates {
        defeated(Separation::L1VsOt, &Strategy::mealy(m.clone()));
    }
    format!("{} o.t. machines defeated", candidates.len())
}

fn criterion_6() -> String {
    let cond = make_condition(ExampleId::L2);
    let s = make_strategy(ExampleId::L2);
    for spec in [";1", "2;1", "4;1", "2,2,2,2;1"] {
        let got = bounded_exhaustive_win_check(&s, Player::I, &cond, &f(spec), 8).unwrap();
        assert_eq!(got, WinCheck::Pass, "f = {spec}");
    }
    let (input, output) = (cond.input(), cond.output());
    let candidates = enumerate_mealy(
        StrategyKind::Lc,
        input,
        output,
        2,
        &word_emissions(input, 1, 1),
    )
    .unwrap();
    assert!(candidates.len() > 100);
    for m in &candidates {
        defeated(Separation::L2VsLc, &Strategy::mealy(m.clone()));
    }
    format!("{} l.c. machines defeated", candidates.len())
}

fn criterion_7() -> String {
    let cond = make_condition(ExampleId::L3);
    let (input, output) = (cond.input().clone(), cond.output().clone());
    let i_strategies = ot_strategies(&input, &output, 2, 1, 1);
    o_wins_against_all(
        &l3_strategy(),
        &i_strategies,
        &[f(";1"), f("2;1"), f("1,3;1")],
        &cond,
    );
    let mut candidates: Vec<Strategy> = enumerate_mealy(
        StrategyKind::It,
        &input,
        &output,
        2,
        &letter_emissions(&output),
    )
    .unwrap()
    .into_iter()
    .map(Strategy::mealy)
    .collect();
    for oracle in [
        OutputOracle::new(StrategyKind::It, |_| Ok(0)).unwrap(),
        OutputOracle::new(StrategyKind::It, |_| Ok(1)).unwrap(),
        OutputOracle::new(StrategyKind::It, |v| Ok((v.inputs().len() + 1) % 2)).unwrap(),
        OutputOracle::new(StrategyKind::It, |v| Ok(v.inputs().len() % 2)).unwrap(),
    ] {
        candidates.push(Strategy::Output(Arc::new(oracle)));
    }
    for s in &candidates {
        defeated(Separation::L3VsIt, s);
    }
    format!("{} i.t. strategies defeated", candidates.len())
}

fn criterion_8() -> String {
    let cond = make_condition(ExampleId::L0);
    let ht = Strategy::Input(Arc::new(ht_from_skip_strategy(l0_skip_strategy())));
    for spec in [";1", "2;1", "3,1,2;1"] {
        let got = bounded_exhaustive_win_check(&ht, Player::I, &cond, &f(spec), 8).unwrap();
        assert_eq!(got, WinCheck::Pass, "f = {spec}");
    }

    let t = skip_strategy_to_delay_o(&echo_skip_machine(), 8).unwrap();
    assert_eq!(t.ell[0], 1);
    assert_eq!(t.f.value(0), 2);
    let echo = Condition::Parity(echo_automaton());
    o_wins_against_all(
        t.strategy.as_ref(),
        &ot_strategies(&ab(), &ab(), 2, 1, 2),
        std::slice::from_ref(&t.f),
        &echo,
    );

    assert!(matches!(
        skip_strategy_to_delay_o(&all_skip_machine(), 8),
        Err(Error::SkipDivergent(_))
    ));
    format!("translated delay f = {}", t.f)
}

fn criterion_9() -> String {
    let bc = Alphabet::new(["b", "c"]).unwrap();
    let erased = |w: &[SkipSymbol]| w.iter().filter_map(|s| s.letter()).collect::<Vec<_>>();
    let uniform: Vec<SkipOracle> = vec![
        Arc::new(|_: &[SkipSymbol]| Ok(0)),
        l0_skip_strategy(),
        Arc::new(move |w: &[SkipSymbol]| Ok((w.len() + erased(w).len()) % 3)),
        Arc::new(move |w: &[SkipSymbol]| {
            Ok(if w.len().is_multiple_of(2) {
                erased(w).last().map_or(0, |&l| l + 1)
            } else {
                0
            })
        }),
    ];
    for tau in &uniform {
        assert_eq!(uniformity_check(tau, &bc, 5).unwrap(), Uniformity::Pass);
    }
    let sensitive: SkipOracle =
        Arc::new(|w: &[SkipSymbol]| Ok(usize::from(w.len() >= 2 && w[0] != SkipSymbol::Skip)));
    match uniformity_check(&sensitive, &bc, 5).unwrap() {
        Uniformity::Violation { first, second } => {
            assert!(equivalent(&sensitive, &first, &second).unwrap());
            assert_ne!(sensitive(&first).unwrap(), sensitive(&second).unwrap());
        }
        Uniformity::Pass => panic!("violation not found"),
    }
    format!("{} uniform strategies, 1 violation", uniform.len())
}

fn criterion_10() -> String {
    for a in automaton_suite(SUITE) {
        let g = build_delay_free_game(&a);
        let expected = a.state_count() * (1 + a.input().len());
        assert_eq!(g.vertex_count(), expected);
        let shaped = build_lookahead_game(&a, 0).unwrap();
        assert_eq!(shaped.game, g);
    }
    format!("{SUITE} automata")
}

/// Written straight to stdout so the lines show up without `--nocapture`.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> String); 10] = [
        ("solver agrees with brute force", criterion_1),
        ("r.c. omnipotence iff O wins without delay", criterion_2),
        ("more lookahead never hurts O", criterion_3),
        ("L0: o.t. strategy wins for every f", criterion_4),
        ("L1: l.c. beats o.t.", criterion_5),
        ("L2: i.o.t. beats l.c.", criterion_6),
        ("L3: r.c. beats i.t.", criterion_7),
        ("skip-game translations", criterion_8),
        ("uniformity checker", criterion_9),
        ("arena sizes and k = 0 isomorphism", criterion_10),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = Vec::new();
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => report(format!(
                "criterion {}: PASS  {name}: {detail} ({secs:.1}s)",
                n + 1
            )),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                report(format!(
                    "criterion {}: FAIL  {name} ({secs:.1}s): {msg}",
                    n + 1
                ));
                failed.push(n + 1);
            }
        }
    }
    let _ = std::panic::take_hook();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
