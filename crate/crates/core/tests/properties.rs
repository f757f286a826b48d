use std::collections::BTreeSet;

use proptest::prelude::*;

use leftcorner::automata::{explore_terms, Algorithm, DEFAULT_BUDGET};
use leftcorner::corpus::{random_grammars, token_names, GeneratorConfig};
use leftcorner::grammar::{augment, AugmentedGrammar, PrefixId, Term};
use leftcorner::oracle::{derives, sentences_up_to, viable_prefix};
use leftcorner::tabular::{tabular_cp_ordered, tabular_elr_ordered, AgendaOrder, ElrVariant};
use leftcorner::Item;

fn grammar(seed: u64) -> AugmentedGrammar {
    let g = random_grammars(seed, 1, &GeneratorConfig::default()).remove(0);
    augment(&g).unwrap()
}

fn input(g: &AugmentedGrammar, picks: &[usize]) -> Vec<Term> {
    let terms: Vec<Term> = g.terminals().collect();
    picks.iter().map(|&k| terms[k % terms.len()]).collect()
}

/// A sentence of `g` when there is one of at most five tokens, so that
/// accepted inputs are well represented.
fn sentence_or(g: &AugmentedGrammar, pick: usize, fallback: Vec<Term>) -> Vec<Term> {
    let sentences: Vec<Vec<String>> = sentences_up_to(g, 5).unwrap().into_iter().collect();
    if sentences.is_empty() || pick.is_multiple_of(2) {
        return fallback;
    }
    g.tokenize(&sentences[pick % sentences.len()]).unwrap()
}

fn prefix_of(item: &Item, g: &AugmentedGrammar) -> PrefixId {
    g.find_prefix(item.alpha(g)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn recognizers_agree_with_oracle(seed in 0u64..10_000, picks in prop::collection::vec(0usize..8, 0..6), pick in 0usize..64) {
        let g = grammar(seed);
        let seq = sentence_or(&g, pick, input(&g, &picks));
        let names = token_names(&g, &seq);
        let expected = derives(&g, &names).unwrap();
        for algo in Algorithm::ALL {
            let x = explore_terms(algo, &g, &seq, DEFAULT_BUDGET);
            prop_assert!(!x.result.budget_exhausted, "{} did not terminate", algo);
            prop_assert_eq!(x.result.accepted, expected, "{} on {:?}", algo, names);
        }
        for filter in [true, false] {
            prop_assert_eq!(tabular_cp_ordered(&g, &seq, filter, AgendaOrder::Fifo).accepted, expected);
        }
        for variant in ElrVariant::ALL {
            prop_assert_eq!(tabular_elr_ordered(&g, &seq, variant, AgendaOrder::Fifo).accepted, expected);
        }
    }

    #[test]
    fn filtered_automata_keep_correct_prefixes(seed in 0u64..10_000, picks in prop::collection::vec(0usize..8, 0..6)) {
        let g = grammar(seed);
        let seq = input(&g, &picks);
        let names = token_names(&g, &seq);
        for algo in [Algorithm::Lc, Algorithm::Plr, Algorithm::Elr] {
            let x = explore_terms(algo, &g, &seq, DEFAULT_BUDGET);
            let positions: BTreeSet<usize> = x.visited().iter().map(|c| c.pos).collect();
            for p in positions {
                prop_assert!(viable_prefix(&g, &names[..p]).unwrap(), "{} read {:?}", algo, &names[..p]);
            }
        }
    }

    #[test]
    fn pseudo_elr_covers_elr(seed in 0u64..10_000, picks in prop::collection::vec(0usize..8, 0..6)) {
        let g = grammar(seed);
        let seq = input(&g, &picks);
        let project = |algo| -> BTreeSet<(usize, Vec<PrefixId>)> {
            explore_terms(algo, &g, &seq, DEFAULT_BUDGET)
                .visited()
                .iter()
                .map(|c| (c.pos, c.stack.iter().map(|it| prefix_of(it, &g)).collect()))
                .collect()
        };
        let elr = project(Algorithm::Elr);
        let pseudo = project(Algorithm::PseudoElr);
        prop_assert!(elr.is_subset(&pseudo));
    }

    #[test]
    fn oracle_is_self_consistent(seed in 0u64..10_000, picks in prop::collection::vec(0usize..8, 0..5), extra in prop::collection::vec(0usize..8, 0..2)) {
        let g = grammar(seed);
        let w = token_names(&g, &input(&g, &picks));
        let mut wx = w.clone();
        wx.extend(token_names(&g, &input(&g, &extra)));
        let in_language = derives(&g, &w).unwrap();
        let sentences = sentences_up_to(&g, w.len()).unwrap();
        prop_assert_eq!(in_language, sentences.contains(&w));
        if in_language {
            prop_assert!(viable_prefix(&g, &w).unwrap());
        }
        if viable_prefix(&g, &wx).unwrap() {
            prop_assert!(viable_prefix(&g, &w).unwrap());
        }
    }

    #[test]
    fn elr_variants_and_orders(seed in 0u64..10_000, picks in prop::collection::vec(0usize..8, 0..6), order_seed in any::<u64>()) {
        let g = grammar(seed);
        let seq = input(&g, &picks);
        let merged = tabular_elr_ordered(&g, &seq, ElrVariant::Merged, AgendaOrder::Fifo);
        let si = tabular_elr_ordered(&g, &seq, ElrVariant::PredictSets, AgendaOrder::Shuffled(order_seed));
        prop_assert_eq!(&merged.chart, &si.chart);
        prop_assert!(merged.duplicate_prefix_cells().is_empty());
        let naive = tabular_elr_ordered(&g, &seq, ElrVariant::Naive, AgendaOrder::Lifo);
        prop_assert!(naive.items_added >= merged.items_added);
    }
}
