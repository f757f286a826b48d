//! Brute-force membership, viable-prefix and sentence enumeration by
//! exhaustive leftmost derivation.
//!
//! The oracle reads only the base grammar's rules and uses none of the
//! precomputed tables of [`AugmentedGrammar`], so it stays independent of the
//! recognizers it is used to check.
//!
//! A search state is a leftmost sentential form `w·γ` where `w` is a prefix
//! of the input already matched and `γ` starts with a nonterminal. Since no
//! rule has an empty right-hand side, every symbol of `γ` yields at least one
//! token, which bounds `|γ|` by the number of tokens still unmatched.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::grammar::{AugmentedGrammar, Grammar, Symbol};

/// Largest `max_tokens` accepted by [`sentences_up_to`].
pub const MAX_SENTENCE_TOKENS: usize = 10;

/// Distinct sentential forms one query may visit.
pub const NODE_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Sym {
    T(u32),
    N(u32),
}

struct Rules {
    start: u32,
    by_lhs: Vec<Vec<Vec<Sym>>>,
    productive: Vec<bool>,
    terminals: HashMap<String, u32>,
    terminal_names: Vec<String>,
}

impl Rules {
    fn new(g: &Grammar) -> Self {
        let mut nts: HashMap<&str, u32> = HashMap::new();
        for name in g.nonterminals.iter().map(String::as_str).chain([g.start.as_str()]) {
            let next = nts.len() as u32;
            nts.entry(name).or_insert(next);
        }
        let mut terminals: HashMap<String, u32> = HashMap::new();
        let mut terminal_names = Vec::new();
        for t in &g.terminals {
            terminals.insert(t.clone(), terminal_names.len() as u32);
            terminal_names.push(t.clone());
        }
        let mut by_lhs = vec![Vec::new(); nts.len()];
        for rule in &g.rules {
            let Some(&lhs) = nts.get(rule.lhs.as_str()) else { continue };
            let rhs: Option<Vec<Sym>> = rule
                .rhs
                .iter()
                .map(|s| match s {
                    Symbol::Terminal(t) => terminals.get(t).map(|&i| Sym::T(i)),
                    Symbol::Nonterminal(n) => nts.get(n.as_str()).map(|&i| Sym::N(i)),
                })
                .collect();
            // rules mentioning unknown symbols can never complete
            if let Some(rhs) = rhs {
                by_lhs[lhs as usize].push(rhs);
            }
        }
        let mut productive = vec![false; nts.len()];
        loop {
            let mut changed = false;
            for (a, rules) in by_lhs.iter().enumerate() {
                if productive[a] {
                    continue;
                }
                let ok = rules.iter().any(|rhs| {
                    rhs.iter().all(|s| match *s {
                        Sym::T(_) => true,
                        Sym::N(b) => productive[b as usize],
                    })
                });
                if ok {
                    productive[a] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Rules {
            start: nts[g.start.as_str()],
            by_lhs,
            productive,
            terminals,
            terminal_names,
        }
    }

    fn tokens<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Vec<u32>> {
        tokens
            .iter()
            .enumerate()
            .map(|(position, t)| {
                self.terminals.get(t.as_ref()).copied().ok_or_else(|| Error::UnknownToken {
                    token: t.as_ref().to_string(),
                    position,
                })
            })
            .collect()
    }

    fn is_productive(&self, s: Sym) -> bool {
        match s {
            Sym::T(_) => true,
            Sym::N(a) => self.productive[a as usize],
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// The form must derive exactly the tokens.
    Whole,
    /// The form must derive the tokens followed by anything.
    Prefix,
}

/// Strips matched terminals off the front of `rest`. Returns `None` when a
/// terminal disagrees with the input or the state can no longer succeed, and
/// `Some(true)` when the state is accepting.
fn normalize(rules: &Rules, tokens: &[u32], mode: Mode, k: &mut usize, rest: &mut Vec<Sym>) -> Option<bool> {
    let m = tokens.len();
    let mut lead = 0;
    while let Some(&Sym::T(t)) = rest.get(lead) {
        if *k == m {
            break;
        }
        if tokens[*k] != t {
            return None;
        }
        *k += 1;
        lead += 1;
    }
    rest.drain(..lead);
    match mode {
        Mode::Whole => {
            if rest.len() > m - *k {
                return None;
            }
            Some(rest.is_empty() && *k == m)
        }
        Mode::Prefix => {
            let room = m - *k;
            if rest.len() > room {
                // the dropped tail only has to derive something
                if !rest[room..].iter().all(|&s| rules.is_productive(s)) {
                    return None;
                }
                rest.truncate(room);
            }
            if *k == m {
                return Some(rest.iter().all(|&s| rules.is_productive(s)));
            }
            Some(false)
        }
    }
}

fn search(rules: &Rules, tokens: &[u32], mode: Mode) -> Result<bool> {
    let mut seen: HashSet<(usize, Vec<Sym>)> = HashSet::new();
    let mut queue: VecDeque<(usize, Vec<Sym>)> = VecDeque::new();

    let mut k = 0;
    let mut rest = vec![Sym::N(rules.start)];
    match normalize(rules, tokens, mode, &mut k, &mut rest) {
        Some(true) => return Ok(true),
        Some(false) => {
            seen.insert((k, rest.clone()));
            queue.push_back((k, rest));
        }
        None => return Ok(false),
    }

    while let Some((k, rest)) = queue.pop_front() {
        let Some(&Sym::N(a)) = rest.first() else { continue };
        for rhs in &rules.by_lhs[a as usize] {
            let mut k2 = k;
            let mut next: Vec<Sym> = rhs.iter().chain(&rest[1..]).copied().collect();
            match normalize(rules, tokens, mode, &mut k2, &mut next) {
                Some(true) => return Ok(true),
                Some(false) => {
                    if seen.insert((k2, next.clone())) {
                        if seen.len() > NODE_BUDGET {
                            return Err(Error::LimitExceeded(format!(
                                "more than {NODE_BUDGET} sentential forms"
                            )));
                        }
                        queue.push_back((k2, next));
                    }
                }
                None => {}
            }
        }
    }
    Ok(false)
}

/// Whether the start symbol derives exactly `tokens`.
pub fn derives<S: AsRef<str>>(g: &AugmentedGrammar, tokens: &[S]) -> Result<bool> {
    let rules = Rules::new(g.base());
    let tokens = rules.tokens(tokens)?;
    search(&rules, &tokens, Mode::Whole)
}

/// Whether some sentence of the language starts with `tokens`.
pub fn viable_prefix<S: AsRef<str>>(g: &AugmentedGrammar, tokens: &[S]) -> Result<bool> {
    let rules = Rules::new(g.base());
    let tokens = rules.tokens(tokens)?;
    search(&rules, &tokens, Mode::Prefix)
}

/// Every sentence of at most `max_tokens` tokens.
pub fn sentences_up_to(g: &AugmentedGrammar, max_tokens: usize) -> Result<BTreeSet<Vec<String>>> {
    if max_tokens > MAX_SENTENCE_TOKENS {
        return Err(Error::LimitExceeded(format!(
            "sentences are enumerated up to {MAX_SENTENCE_TOKENS} tokens, not {max_tokens}"
        )));
    }
    let rules = Rules::new(g.base());
    let mut out = BTreeSet::new();
    let mut seen: HashSet<Vec<Sym>> = HashSet::new();
    let mut queue = VecDeque::from([vec![Sym::N(rules.start)]]);
    seen.insert(queue[0].clone());

    while let Some(form) = queue.pop_front() {
        let Some(at) = form.iter().position(|s| matches!(s, Sym::N(_))) else {
            out.insert(
                form.iter()
                    .map(|s| match *s {
                        Sym::T(t) => rules.terminal_names[t as usize].clone(),
                        Sym::N(_) => unreachable!(),
                    })
                    .collect(),
            );
            continue;
        };
        let Sym::N(a) = form[at] else { unreachable!() };
        for rhs in &rules.by_lhs[a as usize] {
            if form.len() - 1 + rhs.len() > max_tokens {
                continue;
            }
            let next: Vec<Sym> = form[..at]
                .iter()
                .chain(rhs)
                .chain(&form[at + 1..])
                .copied()
                .collect();
            if seen.insert(next.clone()) {
                if seen.len() > NODE_BUDGET {
                    return Err(Error::LimitExceeded(format!(
                        "more than {NODE_BUDGET} sentential forms"
                    )));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}
