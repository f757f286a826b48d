#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use leftcorner::automata::explore_terms;
use leftcorner::corpus::{all_token_sequences, token_names, CorpusEntry};
use leftcorner::grammar::{AugmentedGrammar, PrefixId, Term};
use leftcorner::oracle;
use leftcorner::render::render_stack;
use leftcorner::tabular::{tabular_cp_ordered, tabular_elr_ordered, AgendaOrder, ChartResult, ElrVariant};
use leftcorner::{Algorithm, Configuration, ElrItem, DEFAULT_BUDGET};

pub fn words(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

pub fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(manifest_path(&format!("tests/golden/{name}"))).unwrap()
}

/// `"<stack> | <rest>"` as in the golden files.
pub fn render_row(g: &AugmentedGrammar, input: &[Term], c: &Configuration) -> String {
    let rest: Vec<&str> = input[c.pos..].iter().map(|&t| g.t_name(t)).collect();
    let stack = render_stack(g, &c.stack);
    if rest.is_empty() {
        format!("{stack} |")
    } else {
        format!("{stack} | {}", rest.join(" "))
    }
}

/// Cells holding two items `[Δ1 -> α]`, `[Δ2 -> α]`.
pub fn same_prefix_pairs(chart: &ChartResult<ElrItem>) -> Vec<((usize, usize), ElrItem, ElrItem)> {
    let mut out = Vec::new();
    for (cell, items) in chart.chart.cells() {
        let items: Vec<&ElrItem> = items.iter().collect();
        for (k, a) in items.iter().enumerate() {
            for b in &items[k + 1..] {
                if a.prefix == b.prefix {
                    out.push((cell, (*a).clone(), (*b).clone()));
                }
            }
        }
    }
    out
}

/// The CP items obtained by dropping `Δ` from every item of every cell.
pub fn drop_delta(chart: &ChartResult<ElrItem>) -> BTreeSet<((usize, usize), PrefixId)> {
    chart
        .chart
        .cells()
        .flat_map(|(cell, items)| items.iter().map(move |it| (cell, it.prefix)))
        .collect()
}

#[derive(Debug, Default)]
pub struct SweepReport {
    pub grammars: usize,
    pub inputs: usize,
    /// Disagreements with the oracle, as readable descriptions.
    pub disagreements: Vec<String>,
    pub budget_exhaustions: Vec<String>,
    pub uniqueness_violations: Vec<String>,
    pub variant_mismatches: Vec<String>,
    pub superset_violations: Vec<String>,
    /// `(grammar, input, naive items, merged items)` where the naive chart
    /// has two overlapping `Δ` for one `α` in one cell.
    pub naive_witnesses: Vec<(String, String, usize, usize)>,
}

/// Runs every automaton and chart against the oracle on every token sequence
/// of length at most `max_len`.
pub fn sweep(corpus: &[CorpusEntry], max_len: usize) -> SweepReport {
    let mut report = SweepReport {
        grammars: corpus.len(),
        ..SweepReport::default()
    };
    for entry in corpus {
        let g = &entry.grammar;
        for seq in all_token_sequences(g, max_len) {
            report.inputs += 1;
            let names = token_names(g, &seq);
            let label = format!("{} [{}]", entry.name, names.join(" "));
            let expected = oracle::derives(g, &names).unwrap();

            let mut verdicts: Vec<(String, bool)> = Vec::new();
            for algo in Algorithm::ALL {
                let x = explore_terms(algo, g, &seq, DEFAULT_BUDGET);
                if x.result.budget_exhausted {
                    report.budget_exhaustions.push(format!("{algo} on {label}"));
                }
                verdicts.push((algo.name().to_string(), x.result.accepted));
            }
            let cp = tabular_cp_ordered(g, &seq, true, AgendaOrder::Fifo);
            let cp_nf = tabular_cp_ordered(g, &seq, false, AgendaOrder::Fifo);
            let merged = tabular_elr_ordered(g, &seq, ElrVariant::Merged, AgendaOrder::Fifo);
            let si = tabular_elr_ordered(g, &seq, ElrVariant::PredictSets, AgendaOrder::Fifo);
            let naive = tabular_elr_ordered(g, &seq, ElrVariant::Naive, AgendaOrder::Fifo);
            for r in [&cp, &cp_nf] {
                verdicts.push((format!("table:{}", r.algorithm), r.accepted));
            }
            for r in [&merged, &si, &naive] {
                verdicts.push((format!("table:{}", r.algorithm), r.accepted));
            }
            for (name, accepted) in verdicts {
                if accepted != expected {
                    report
                        .disagreements
                        .push(format!("{name} says {accepted}, oracle says {expected} on {label}"));
                }
            }

            for r in [&merged, &si] {
                for (cell, a, b) in same_prefix_pairs(r) {
                    report.uniqueness_violations.push(format!(
                        "{} T{cell:?} holds {} and {} on {label}",
                        r.algorithm,
                        g.render_nt_set(&a.delta),
                        g.render_nt_set(&b.delta)
                    ));
                }
            }
            if merged.chart != si.chart {
                report.variant_mismatches.push(label.clone());
            }
            let cp_items: BTreeSet<((usize, usize), PrefixId)> = cp
                .chart
                .cells()
                .flat_map(|(cell, items)| items.iter().map(move |it| (cell, it.prefix)))
                .collect();
            if !drop_delta(&merged).is_subset(&cp_items) {
                report.superset_violations.push(label.clone());
            }
            let overlapping = same_prefix_pairs(&naive)
                .iter()
                .any(|(_, a, b)| a.delta.intersects(&b.delta));
            if overlapping && naive.items_added > merged.items_added {
                report
                    .naive_witnesses
                    .push((entry.name.clone(), names.join(" "), naive.items_added, merged.items_added));
            }
        }
    }
    report
}
