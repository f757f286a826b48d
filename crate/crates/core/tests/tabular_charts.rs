mod common;

use std::collections::BTreeSet;

use common::{golden, same_prefix_pairs, words};
use leftcorner::corpus::{all_token_sequences, g1, overlap, sweep_corpus, token_names};
use leftcorner::grammar::{AugmentedGrammar, Nt, NtSet, Sym};
use leftcorner::oracle::viable_prefix;
use leftcorner::tabular::{
    predict_set, tabular_cp, tabular_cp_ordered, tabular_elr, AgendaOrder, Chart, ElrVariant,
};
use leftcorner::{CpItem, ElrItem, Error};

fn cp_item(g: &AugmentedGrammar, syms: &[&str]) -> CpItem {
    let syms: Vec<Sym> = syms
        .iter()
        .map(|s| match s.strip_prefix('\'') {
            Some(t) => Sym::T(g.terminal(t.trim_end_matches('\'')).unwrap()),
            None => Sym::N(g.nonterminal(s).unwrap()),
        })
        .collect();
    CpItem {
        prefix: g.find_prefix(&syms).unwrap(),
    }
}

fn nts(g: &AugmentedGrammar, names: &[&str]) -> NtSet {
    names.iter().map(|n| g.nonterminal(n).unwrap()).collect()
}

#[test]
fn figure_one() {
    let g = g1();
    let r = tabular_cp(&g, &words("a + a ^ a"), true).unwrap();
    assert!(!r.accepted);
    assert_eq!(r.dump(&g), golden("figure1.txt"));
    assert_eq!(r.chart.render_table(&g), golden("figure1_table.txt"));
}

#[test]
fn filtered_cp_accepts_a_times_a() {
    let g = g1();
    let r = tabular_cp(&g, &words("a * a"), true).unwrap();
    assert!(r.accepted);
    assert!(r.chart.contains(0, 3, &cp_item(&g, &["E"])));
    assert!(leftcorner::oracle::derives(&g, &words("a * a")).unwrap());
}

#[test]
fn unfiltered_cp_contains_filtered_cp() {
    let g = g1();
    let input = words("a + a ^ a");
    let filtered = tabular_cp(&g, &input, true).unwrap();
    let unfiltered = tabular_cp(&g, &input, false).unwrap();
    assert!(!unfiltered.accepted);
    assert!(unfiltered.items_added > filtered.items_added);
    for ((j, i), items) in filtered.chart.cells() {
        assert!(items.is_subset(&unfiltered.chart.cell_set(j, i)), "T[{j},{i}]");
    }
}

#[test]
fn empty_input() {
    let g = g1();
    let cp = tabular_cp(&g, &Vec::<String>::new(), true).unwrap();
    assert!(!cp.accepted);
    assert_eq!(cp.dump(&g), "n=0 algo=cp accepted=false\nT[0,0]: [->]\n");
    let elr = tabular_elr(&g, &Vec::<String>::new(), ElrVariant::PredictSets).unwrap();
    assert_eq!(elr.predict_sets.len(), 1);
    assert_eq!(elr.predict_sets[0].nonterminals, nts(&g, &["E", "T", "F"]));
}

#[test]
fn unknown_tokens_are_rejected() {
    let g = g1();
    assert!(matches!(
        tabular_cp(&g, &words("a - a"), true),
        Err(Error::UnknownToken { position: 1, .. })
    ));
}

/// `S_i` by the set comprehension, with `∠*` found by path search.
fn predict_set_by_definition(g: &AugmentedGrammar, chart: &Chart<ElrItem>, i: usize) -> NtSet {
    let corner = |d: Nt, c: Nt| -> bool {
        let mut seen = BTreeSet::from([c]);
        let mut stack = vec![c];
        while let Some(x) = stack.pop() {
            if x == d {
                return true;
            }
            for p in g.productions().iter().filter(|p| p.lhs == x) {
                if let Some(Sym::N(y)) = p.rhs.first() {
                    if seen.insert(*y) {
                        stack.push(*y);
                    }
                }
            }
        }
        false
    };
    let mut out = NtSet::new();
    for (_, item) in chart.column(i) {
        let beta = g.prefix_syms(item.prefix);
        for p in g.productions() {
            if !item.delta.contains(p.lhs) || !p.rhs.starts_with(beta) {
                continue;
            }
            if let Some(Sym::N(c)) = p.rhs.get(beta.len()) {
                for d in g.nonterminals() {
                    if corner(d, *c) {
                        out.insert(d);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn predict_sets_of_g1() {
    let g = g1();
    let r = tabular_elr(&g, &words("a * a"), ElrVariant::PredictSets).unwrap();
    let sets: Vec<NtSet> = r.predict_sets.iter().map(|s| s.nonterminals.clone()).collect();
    // after `a` every continuation is a terminal; after `a *` an F is due
    assert_eq!(sets, vec![nts(&g, &["E", "T", "F"]), NtSet::new(), nts(&g, &["F"]), NtSet::new()]);
    for (i, s) in sets.iter().enumerate() {
        assert_eq!(s, &predict_set_by_definition(&g, &r.chart, i));
        assert_eq!(&predict_set(&r.chart, &g, i).unwrap().nonterminals, s);
    }
    let merged = tabular_elr(&g, &words("a * a"), ElrVariant::Merged).unwrap();
    assert_eq!(merged.chart, r.chart);
}

#[test]
fn empty_column_has_empty_predict_set() {
    let g = g1();
    let r = tabular_elr(&g, &words("a a"), ElrVariant::Merged).unwrap();
    assert_eq!(r.chart.column(2).count(), 0);
    assert!(predict_set(&r.chart, &g, 2).unwrap().nonterminals.is_empty());
}

#[test]
fn predict_set_needs_complete_column() {
    let g = g1();
    let chart: Chart<ElrItem> = Chart::new(2);
    assert_eq!(predict_set(&chart, &g, 0), Err(Error::ColumnIncomplete { column: 0 }));
    let r = tabular_elr(&g, &words("a"), ElrVariant::Merged).unwrap();
    assert!(predict_set(&r.chart, &g, 1).is_ok());
    assert_eq!(predict_set(&r.chart, &g, 2), Err(Error::ColumnIncomplete { column: 2 }));
}

#[test]
fn predict_sets_match_definition_on_corpus() {
    for entry in sweep_corpus(6) {
        let g = &entry.grammar;
        for seq in all_token_sequences(g, 3) {
            let names = token_names(g, &seq);
            let r = tabular_elr(g, &names, ElrVariant::PredictSets).unwrap();
            for (i, s) in r.predict_sets.iter().enumerate() {
                assert_eq!(s.nonterminals, predict_set_by_definition(g, &r.chart, i), "{} {names:?}", entry.name);
            }
        }
    }
}

#[test]
fn naive_elr_duplicates_a_subderivation() {
    let g = overlap();
    let input = words("x a");
    let naive = tabular_elr(&g, &input, ElrVariant::Naive).unwrap();
    let merged = tabular_elr(&g, &input, ElrVariant::Merged).unwrap();
    let a = Sym::T(g.terminal("a").unwrap());
    let a_prefix = g.find_prefix(&[a]).unwrap();
    let deltas: BTreeSet<String> = naive
        .chart
        .cell(1, 2)
        .filter(|it| it.prefix == a_prefix)
        .map(|it| g.render_nt_set(&it.delta))
        .collect();
    assert_eq!(deltas, BTreeSet::from(["{A,C}".to_string(), "{C}".to_string()]));
    assert_eq!(naive.duplicate_prefix_cells(), vec![(1, 2)]);
    assert!(same_prefix_pairs(&merged).is_empty());
    assert!(naive.items_added > merged.items_added);
    assert!(naive.accepted && merged.accepted);
}

/// With a left-recursive start symbol, `[{S'} -> S]` and `[{S} -> S]` would
/// share a cell; the merged variants hold them as one item.
#[test]
fn start_symbol_items_are_merged() {
    let g = g1();
    let input = words("a * a");
    let merged = tabular_elr(&g, &input, ElrVariant::Merged).unwrap();
    let naive = tabular_elr(&g, &input, ElrVariant::Naive).unwrap();
    let e = g.find_prefix(&[Sym::N(g.start())]).unwrap();
    let in_cell = |r: &leftcorner::tabular::ChartResult<ElrItem>| -> Vec<String> {
        r.chart
            .cell(0, 1)
            .filter(|it| it.prefix == e)
            .map(|it| g.render_nt_set(&it.delta))
            .collect()
    };
    assert_eq!(in_cell(&merged), vec!["{E,E'}"]);
    let mut naive_sets = in_cell(&naive);
    naive_sets.sort();
    assert_eq!(naive_sets, vec!["{E'}", "{E}"]);
}

#[test]
fn merged_elr_has_correct_prefix_property() {
    for entry in sweep_corpus(8) {
        let g = &entry.grammar;
        for seq in all_token_sequences(g, 4) {
            let names = token_names(g, &seq);
            let r = tabular_elr(g, &names, ElrVariant::Merged).unwrap();
            let furthest = r.chart.cells().map(|((_, i), _)| i).max().unwrap();
            assert!(
                viable_prefix(g, &names[..furthest]).unwrap(),
                "{} {names:?} reaches column {furthest}",
                entry.name
            );
        }
    }
}

#[test]
fn provenance_is_consistent() {
    let g = g1();
    for filter in [true, false] {
        let r = tabular_cp_ordered(&g, &g.tokenize(&words("a + a * a")).unwrap(), filter, AgendaOrder::Lifo);
        assert_eq!(r.provenance.len(), r.items_added);
        for p in &r.provenance {
            assert!(r.chart.contains(p.cell.0, p.cell.1, &p.item));
            assert!(p.clause <= 4);
            assert!(p.antecedents.iter().all(|&(j, i)| j <= i && i <= p.cell.1));
        }
        assert_eq!(r.provenance[0].clause, 0);
    }
}
