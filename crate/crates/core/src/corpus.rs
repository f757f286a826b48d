//! Test grammars: two fixtures and a seeded generator of small random
//! grammars.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grammar::{augment, parse_grammar, validate, AugmentedGrammar, Grammar, Rule, Symbol, Term};

pub const G1_SOURCE: &str = include_str!("../grammars/g1.cfg");
pub const OVERLAP_SOURCE: &str = include_str!("../grammars/overlap.cfg");

/// Seed of the random part of [`sweep_corpus`].
pub const SWEEP_SEED: u64 = 0x1c_2024;

/// `E -> E '+' T | T '^' E | T`, `T -> T '*' F | T '**' F | F`, `F -> 'a'`.
pub fn g1() -> AugmentedGrammar {
    augment(&parse_grammar(G1_SOURCE).expect("fixture parses")).expect("fixture is valid")
}

/// A grammar on which one token is predicted by two items of the same
/// column with different lookahead nonterminals.
pub fn overlap() -> AugmentedGrammar {
    augment(&parse_grammar(OVERLAP_SOURCE).expect("fixture parses")).expect("fixture is valid")
}

const NONTERMINALS: [&str; 6] = ["S", "A", "B", "C", "D", "F"];
const TERMINALS: [&str; 3] = ["a", "b", "c"];

#[derive(Debug, Clone, Copy)]
pub struct GeneratorConfig {
    pub max_nonterminals: usize,
    pub max_rules: usize,
    pub max_rhs: usize,
    pub min_terminals: usize,
    pub max_terminals: usize,
    /// Chance that a new right-hand side starts with a prefix of an earlier
    /// one.
    pub prefix_reuse: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            max_nonterminals: 6,
            max_rules: 10,
            max_rhs: 3,
            min_terminals: 2,
            max_terminals: 3,
            prefix_reuse: 0.35,
        }
    }
}

/// One candidate grammar. It may fail validation; [`random_grammars`] keeps
/// only those that pass without any diagnostic.
pub fn random_grammar(rng: &mut impl Rng, cfg: &GeneratorConfig) -> Grammar {
    let nt_count = rng.gen_range(2..=cfg.max_nonterminals.max(2));
    let t_count = rng.gen_range(cfg.min_terminals..=cfg.max_terminals);
    let nts = &NONTERMINALS[..nt_count];
    let ts = &TERMINALS[..t_count];
    let rule_count = rng.gen_range(nt_count..=cfg.max_rules.max(nt_count));

    let random_symbol = |rng: &mut ChaCha8Rng| -> Symbol {
        if rng.gen_bool(0.5) {
            Symbol::terminal(*ts.choose(rng).unwrap())
        } else {
            Symbol::nonterminal(*nts.choose(rng).unwrap())
        }
    };

    let mut inner = ChaCha8Rng::seed_from_u64(rng.gen());
    let mut rules: Vec<Rule> = Vec::new();
    for k in 0..rule_count {
        // every nonterminal gets at least one rule
        let lhs = if k < nt_count {
            nts[k]
        } else {
            *nts.choose(&mut inner).unwrap()
        };
        let len = inner.gen_range(1..=cfg.max_rhs);
        let mut rhs: Vec<Symbol> = Vec::new();
        if !rules.is_empty() && inner.gen_bool(cfg.prefix_reuse) {
            let donor = &rules[inner.gen_range(0..rules.len())].rhs;
            let keep = inner.gen_range(1..=donor.len().min(len));
            rhs.extend_from_slice(&donor[..keep]);
        }
        while rhs.len() < len {
            rhs.push(random_symbol(&mut inner));
        }
        let rule = Rule::new(lhs, rhs);
        if !rules.contains(&rule) {
            rules.push(rule);
        }
    }
    Grammar::from_rules("S", rules)
}

/// `count` grammars that validate with no errors and no warnings, drawn
/// deterministically from `seed`.
pub fn random_grammars(seed: u64, count: usize, cfg: &GeneratorConfig) -> Vec<Grammar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let g = random_grammar(&mut rng, cfg);
        let report = validate(&g);
        if report.ok && report.diagnostics.is_empty() {
            out.push(g);
        }
    }
    out
}

/// A named grammar of the sweep corpus.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub grammar: AugmentedGrammar,
}

/// G1, the overlap fixture and `random` generated grammars.
pub fn sweep_corpus(random: usize) -> Vec<CorpusEntry> {
    let mut out = vec![
        CorpusEntry {
            name: "g1".into(),
            grammar: g1(),
        },
        CorpusEntry {
            name: "overlap".into(),
            grammar: overlap(),
        },
    ];
    for (k, g) in random_grammars(SWEEP_SEED, random, &GeneratorConfig::default())
        .into_iter()
        .enumerate()
    {
        out.push(CorpusEntry {
            name: format!("random-{k:02}"),
            grammar: augment(&g).expect("generated grammars are validated"),
        });
    }
    out
}

/// Every sequence of `0..=max_len` terminals of `g`, shortest first.
pub fn all_token_sequences(g: &AugmentedGrammar, max_len: usize) -> Vec<Vec<Term>> {
    let terms: Vec<Term> = g.terminals().collect();
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<Term>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|seq| {
                terms.iter().map(move |&t| {
                    let mut next = seq.clone();
                    next.push(t);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Token names of a sequence of interned terminals.
pub fn token_names(g: &AugmentedGrammar, seq: &[Term]) -> Vec<String> {
    seq.iter().map(|&t| g.t_name(t).to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_load() {
        assert_eq!(g1().productions().len(), 8);
        assert_eq!(overlap().productions().len(), 9);
    }

    #[test]
    fn generator_respects_bounds() {
        let cfg = GeneratorConfig::default();
        for g in random_grammars(7, 30, &cfg) {
            assert!(g.nonterminals.len() <= 6);
            assert!(g.rules.len() <= 10);
            assert!(g.rules.iter().all(|r| (1..=3).contains(&r.rhs.len())));
            assert!(g.terminals.len() <= 3);
            assert!(validate(&g).diagnostics.is_empty());
        }
    }

    #[test]
    fn generator_is_deterministic() {
        let cfg = GeneratorConfig::default();
        let a: Vec<String> = random_grammars(3, 5, &cfg).iter().map(Grammar::to_source).collect();
        let b: Vec<String> = random_grammars(3, 5, &cfg).iter().map(Grammar::to_source).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn token_sequences_are_exhaustive() {
        let g = g1();
        // G1 has five terminals
        let seqs = all_token_sequences(&g, 2);
        assert_eq!(seqs.len(), 1 + 5 + 25);
        assert!(seqs[0].is_empty());
    }
}
