//! Runs every automaton and chart over a set of generated grammars and
//! reports average work per input, checking each verdict against the
//! oracle.
//!
//! ```text
//! cargo run --release --example compare_algorithms [grammars] [max_len]
//! ```

use std::collections::BTreeMap;

use leftcorner::automata::{explore_terms, Algorithm, DEFAULT_BUDGET};
use leftcorner::corpus::{all_token_sequences, sweep_corpus, token_names};
use leftcorner::oracle::derives;
use leftcorner::tabular::{tabular_cp_ordered, tabular_elr_ordered, AgendaOrder, ElrVariant};

#[derive(Default)]
struct Totals {
    work: usize,
    choice_points: usize,
    runs: usize,
    wrong: usize,
}

fn main() {
    let mut args = std::env::args().skip(1);
    let grammars: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let max_len: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);

    let mut totals: BTreeMap<String, Totals> = BTreeMap::new();
    let mut add = |name: &str, work: usize, choice_points: usize, ok: bool| {
        let t = totals.entry(name.to_string()).or_default();
        t.work += work;
        t.choice_points += choice_points;
        t.runs += 1;
        t.wrong += usize::from(!ok);
    };

    for entry in sweep_corpus(grammars) {
        let g = &entry.grammar;
        for seq in all_token_sequences(g, max_len) {
            let expected = derives(g, &token_names(g, &seq)).expect("tokens come from the grammar");
            for algo in Algorithm::ALL {
                let r = explore_terms(algo, g, &seq, DEFAULT_BUDGET).result;
                add(algo.name(), r.configurations_explored, r.choice_points, r.accepted == expected);
            }
            for filter in [true, false] {
                let r = tabular_cp_ordered(g, &seq, filter, AgendaOrder::Fifo);
                add(&format!("table:{}", r.algorithm), r.items_added, 0, r.accepted == expected);
            }
            for variant in ElrVariant::ALL {
                let r = tabular_elr_ordered(g, &seq, variant, AgendaOrder::Fifo);
                add(&format!("table:{}", r.algorithm), r.items_added, 0, r.accepted == expected);
            }
        }
    }

    println!("{:<18} {:>8} {:>14} {:>16} {:>6}", "algo", "runs", "work/input", "choices/input", "wrong");
    for (name, t) in &totals {
        println!(
            "{name:<18} {:>8} {:>14.2} {:>16.2} {:>6}",
            t.runs,
            t.work as f64 / t.runs as f64,
            t.choice_points as f64 / t.runs as f64,
            t.wrong
        );
    }
}
