//! Text and JSON rendering of command results.

use clap::ValueEnum;
use delaygames::automata::Alphabet;
use delaygames::delay::{render_skip_word, PlayRecord};
use delaygames::examples::ExampleId;
use delaygames::harness::{Certificate, Defeat, Separation};
use delaygames::solvers::{ReportRecord, Verdict};
use delaygames::strategy::Uniformity;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// `yes`/`no` for the omnipotent-existence verdicts.
fn existence(v: Verdict) -> Option<&'static str> {
    match v {
        Verdict::OmnipotentHtStrategy | Verdict::OmnipotentRcStrategy => Some("yes"),
        Verdict::NoOmnipotentHtStrategy | Verdict::NoOmnipotentRcStrategy => Some("no"),
        _ => None,
    }
}

pub fn print_report(format: Format, r: &ReportRecord) {
    if format == Format::Json {
        println!("{}", serde_json::to_string(r).expect("report serializes"));
        return;
    }
    let bound = if r.conclusive { "" } else { " (up to bound)" };
    println!("verdict: {}{bound}", r.message);
    if let Some(answer) = existence(r.verdict) {
        println!("exists: {answer}");
    }
    println!("winner: {}", r.winner);
    println!("conclusive: {}", if r.conclusive { "yes" } else { "no" });
    if let Some(k) = r.k {
        println!("lookahead: {k}");
    }
    println!("searched bound: {}", r.searched_bound);
    if let Some(path) = &r.strategy_file {
        println!("strategy written to {path}");
    }
}

pub fn play_json(play: &PlayRecord, input: &Alphabet, output: &Alphabet) -> Value {
    let rounds: Vec<Value> = play
        .rounds()
        .iter()
        .map(|(u, v)| json!({ "u": input.render(u), "v": output.symbol(*v) }))
        .collect();
    json!({
        "f": play.delay().to_string(),
        "rounds": rounds,
        "alpha": input.render(&play.alpha()),
        "beta": output.render(&play.beta()),
    })
}

pub fn print_play(play: &PlayRecord, input: &Alphabet, output: &Alphabet) {
    println!("f: {}", play.delay());
    for (i, (u, v)) in play.rounds().iter().enumerate() {
        println!("round {i}: u = {}  v = {}", input.render(u), output.symbol(*v));
    }
    println!("alpha: {}", input.render(&play.alpha()));
    println!("beta: {}", output.render(&play.beta()));
}

pub fn print_defeat(
    format: Format,
    which: Separation,
    d: &Defeat,
    play: &PlayRecord,
    opponent: &Alphabet,
    input: &Alphabet,
    output: &Alphabet,
) {
    let moves = opponent.render(&d.opponent_moves);
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "example": which.to_string(),
                "result": "defeat",
                "defeat": d,
                "opponent_word": moves,
                "play": play_json(play, input, output),
            })
        ),
        Format::Text => {
            println!("defeat ({which})");
            println!("f: {}", d.f);
            println!("opponent moves: {moves} (last letter repeated)");
            println!("horizon: {}", d.horizon);
            println!(
                "certificate: {}",
                match d.certificate {
                    Certificate::BadPrefix => "losing prefix",
                    Certificate::LassoLoss => "losing lasso",
                }
            );
            println!("alpha: {}", input.render(&play.alpha()));
            println!("beta: {}", output.render(&play.beta()));
        }
    }
}

pub fn print_uniformity(format: Format, result: &Uniformity, output: &Alphabet, depth: usize) {
    match (format, result) {
        (Format::Json, Uniformity::Pass) => {
            println!("{}", json!({ "result": "pass", "depth": depth }))
        }
        (Format::Json, Uniformity::Violation { first, second }) => println!(
            "{}",
            json!({
                "result": "violation",
                "depth": depth,
                "first": render_skip_word(first, output),
                "second": render_skip_word(second, output),
            })
        ),
        (Format::Text, Uniformity::Pass) => {
            println!("pass: no non-uniform pair of histories up to length {depth}")
        }
        (Format::Text, Uniformity::Violation { first, second }) => {
            println!("violation: equivalent histories answered differently");
            println!("first: {}", render_skip_word(first, output));
            println!("second: {}", render_skip_word(second, output));
        }
    }
}

pub fn print_examples(format: Format) {
    match format {
        Format::Json => {
            let list: Vec<Value> = ExampleId::ALL
                .iter()
                .map(|id| json!({ "id": id.to_string(), "description": id.description() }))
                .collect();
            println!("{}", Value::Array(list));
        }
        Format::Text => {
            for id in ExampleId::ALL {
                println!("{id}  {}", id.description());
            }
        }
    }
}
