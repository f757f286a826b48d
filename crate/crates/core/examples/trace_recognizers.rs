//! Prints an accepting run of each automaton on G1.
//!
//! ```text
//! cargo run --example trace_recognizers [tokens...]
//! ```

use leftcorner::automata::{explore, Algorithm, DEFAULT_BUDGET};
use leftcorner::corpus::g1;
use leftcorner::render::render_trace;

fn main() -> leftcorner::Result<()> {
    let g = g1();
    let mut tokens: Vec<String> = std::env::args().skip(1).collect();
    if tokens.is_empty() {
        tokens = ["a", "*", "a"].map(String::from).to_vec();
    }
    let terms = g.tokenize(&tokens)?;

    for algo in Algorithm::ALL {
        let x = explore(algo, &g, &tokens, DEFAULT_BUDGET)?;
        let r = x.result;
        println!(
            "== {algo}: accepted={} configurations={} choice_points={}",
            r.accepted, r.configurations_explored, r.choice_points
        );
        match x.accepting_trace() {
            Some(trace) => {
                for line in render_trace(&g, &terms, &trace) {
                    println!("{line}");
                }
            }
            None => println!("furthest position reached: {}", x.max_pos()),
        }
        println!();
    }
    Ok(())
}
