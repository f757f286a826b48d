//! Nondeterministic push-down recognizers, simulated by exhaustive
//! breadth-first search over configurations.
//!
//! Each [`Algorithm`] supplies four clauses relating a configuration to its
//! one-step successors. Clauses 1 and 2 read the next token; clauses 3 and 4
//! rewrite the top of the stack after a constituent has been completed. The
//! search deduplicates configurations by value, so its outcome does not
//! depend on the order clauses fire in; the order only picks which of
//! several equally short accepting runs is reported.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grammar::{AugmentedGrammar, Nt, NtSet, PrefixId, Sym, Term};
use crate::items::{CpItem, ElrItem, Item, ItemKind, LcItem, PlrItem};

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Lc,
    Plr,
    Elr,
    PseudoElr,
    Cp,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Lc,
        Algorithm::Plr,
        Algorithm::Elr,
        Algorithm::PseudoElr,
        Algorithm::Cp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Lc => "lc",
            Algorithm::Plr => "plr",
            Algorithm::Elr => "elr",
            Algorithm::PseudoElr => "pseudo-elr",
            Algorithm::Cp => "cp",
        }
    }

    pub fn item_kind(self) -> ItemKind {
        match self {
            Algorithm::Lc => ItemKind::Lc,
            Algorithm::Plr => ItemKind::Plr,
            Algorithm::Elr | Algorithm::PseudoElr => ItemKind::Elr,
            Algorithm::Cp => ItemKind::Cp,
        }
    }

    pub fn init(self, g: &AugmentedGrammar) -> Item {
        let s_prime = g.start_prime();
        match self {
            Algorithm::Lc => Item::Lc(LcItem {
                rule: start_rule(g),
                dot: 0,
            }),
            Algorithm::Plr => Item::Plr(PlrItem {
                lhs: s_prime,
                prefix: PrefixId::EMPTY,
            }),
            Algorithm::Elr | Algorithm::PseudoElr => Item::Elr(ElrItem {
                delta: NtSet::singleton(s_prime),
                prefix: PrefixId::EMPTY,
            }),
            Algorithm::Cp => Item::Cp(CpItem {
                prefix: PrefixId::EMPTY,
            }),
        }
    }

    pub fn fin(self, g: &AugmentedGrammar) -> Item {
        let s_prime = g.start_prime();
        let s = g
            .find_prefix(&[Sym::N(g.start())])
            .expect("S' -> S is a rule");
        match self {
            Algorithm::Lc => Item::Lc(LcItem {
                rule: start_rule(g),
                dot: 1,
            }),
            Algorithm::Plr => Item::Plr(PlrItem {
                lhs: s_prime,
                prefix: s,
            }),
            Algorithm::Elr | Algorithm::PseudoElr => Item::Elr(ElrItem {
                delta: NtSet::singleton(s_prime),
                prefix: s,
            }),
            Algorithm::Cp => Item::Cp(CpItem { prefix: s }),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}`"))
    }
}

fn start_rule(g: &AugmentedGrammar) -> usize {
    g.productions().len() - 1
}

/// A stack of items plus the number of tokens consumed so far.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    /// Bottom first.
    pub stack: Vec<Item>,
    pub pos: usize,
}

impl Configuration {
    pub fn initial(algo: Algorithm, g: &AugmentedGrammar) -> Self {
        Configuration {
            stack: vec![algo.init(g)],
            pos: 0,
        }
    }

    pub fn is_final(&self, algo: Algorithm, g: &AugmentedGrammar, n: usize) -> bool {
        self.pos == n && self.stack.len() == 1 && self.stack[0] == algo.fin(g)
    }
}

/// A successor together with the clause (1..=4) that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Successor {
    pub clause: u8,
    pub config: Configuration,
}

enum Step {
    /// Push an item, consuming one token.
    Push(Item),
    /// Replace the top, consuming one token.
    Shift(Item),
    /// Replace the top.
    Replace(Item),
    /// Replace the top two items by one.
    Reduce(Item),
}

/// All configurations reachable from `c` in one step, in clause order and,
/// within a clause, in rule order.
pub fn successors(
    algo: Algorithm,
    g: &AugmentedGrammar,
    input: &[Term],
    c: &Configuration,
) -> Result<Vec<Successor>> {
    let kind = algo.item_kind();
    if c.stack.is_empty() || c.stack.iter().any(|it| it.kind() != kind) {
        return Err(Error::KindMismatch {
            expected: kind.name(),
        });
    }
    Ok(expand(algo, g, input, c))
}

fn expand(algo: Algorithm, g: &AugmentedGrammar, input: &[Term], c: &Configuration) -> Vec<Successor> {
    let next = input.get(c.pos).copied();
    let mut steps: Vec<(u8, Step)> = Vec::new();
    let top = c.stack.last().expect("stack is never empty");
    let below = c.stack.len().checked_sub(2).map(|i| &c.stack[i]);
    match algo {
        Algorithm::Lc => lc_steps(g, next, top, below, &mut steps),
        Algorithm::Plr => plr_steps(g, next, top, below, &mut steps),
        Algorithm::Elr => elr_steps(g, next, top, below, false, &mut steps),
        Algorithm::PseudoElr => elr_steps(g, next, top, below, true, &mut steps),
        Algorithm::Cp => cp_steps(g, next, top, below, &mut steps),
    }

    let mut out: Vec<Successor> = Vec::with_capacity(steps.len());
    for (clause, step) in steps {
        let mut stack = c.stack.clone();
        let mut pos = c.pos;
        match step {
            Step::Push(it) => {
                stack.push(it);
                pos += 1;
            }
            Step::Shift(it) => {
                *stack.last_mut().unwrap() = it;
                pos += 1;
            }
            Step::Replace(it) => *stack.last_mut().unwrap() = it,
            Step::Reduce(it) => {
                stack.pop();
                *stack.last_mut().unwrap() = it;
            }
        }
        let config = Configuration { stack, pos };
        if !out.iter().any(|s| s.config == config) {
            out.push(Successor { clause, config });
        }
    }
    out
}

fn as_lc(it: &Item) -> &LcItem {
    match it {
        Item::Lc(x) => x,
        _ => unreachable!("kind checked"),
    }
}

fn as_plr(it: &Item) -> &PlrItem {
    match it {
        Item::Plr(x) => x,
        _ => unreachable!("kind checked"),
    }
}

fn as_elr(it: &Item) -> &ElrItem {
    match it {
        Item::Elr(x) => x,
        _ => unreachable!("kind checked"),
    }
}

fn as_cp(it: &Item) -> &CpItem {
    match it {
        Item::Cp(x) => x,
        _ => unreachable!("kind checked"),
    }
}

/// Indices of the rules whose right-hand side starts with `sym`.
fn rules_starting_with(g: &AugmentedGrammar, sym: Sym) -> impl Iterator<Item = usize> + '_ {
    g.productions()
        .iter()
        .enumerate()
        .filter(move |(_, p)| p.rhs.first() == Some(&sym))
        .map(|(i, _)| i)
}

/// Distinct left-hand sides of rules starting with `sym`, in rule order,
/// restricted to `allowed`.
fn lhs_in_rule_order(g: &AugmentedGrammar, sym: Sym, allowed: &NtSet) -> Vec<Nt> {
    let mut out: Vec<Nt> = Vec::new();
    for r in rules_starting_with(g, sym) {
        let a = g.productions()[r].lhs;
        if allowed.contains(a) && !out.contains(&a) {
            out.push(a);
        }
    }
    out
}

fn lc_steps(
    g: &AugmentedGrammar,
    next: Option<Term>,
    top: &Item,
    below: Option<&Item>,
    steps: &mut Vec<(u8, Step)>,
) {
    let top = as_lc(top);
    if let Some(a) = next {
        // 1: push [A -> a • α] for A ∠* C
        if let Some(Sym::N(c)) = top.next(g) {
            let corners = g.corners_of(c);
            for r in rules_starting_with(g, Sym::T(a)) {
                if corners.contains(g.productions()[r].lhs) {
                    steps.push((1, Step::Push(Item::Lc(LcItem { rule: r, dot: 1 }))));
                }
            }
        }
        // 2: move the dot over a
        if top.next(g) == Some(Sym::T(a)) {
            steps.push((
                2,
                Step::Shift(Item::Lc(LcItem {
                    rule: top.rule,
                    dot: top.dot + 1,
                })),
            ));
        }
    }
    let Some(below) = below.map(as_lc) else {
        return;
    };
    if !top.is_complete(g) {
        return;
    }
    let a = top.lhs(g);
    if let Some(Sym::N(c)) = below.next(g) {
        // 3: replace [A -> α •] by [D -> A • δ] for D ∠* C
        let corners = g.corners_of(c);
        for r in rules_starting_with(g, Sym::N(a)) {
            if corners.contains(g.productions()[r].lhs) {
                steps.push((3, Step::Replace(Item::Lc(LcItem { rule: r, dot: 1 }))));
            }
        }
        // 4: [B -> β • A γ][A -> α •] becomes [B -> β A • γ]
        if c == a {
            steps.push((
                4,
                Step::Reduce(Item::Lc(LcItem {
                    rule: below.rule,
                    dot: below.dot + 1,
                })),
            ));
        }
    }
}

fn plr_steps(
    g: &AugmentedGrammar,
    next: Option<Term>,
    top: &Item,
    below: Option<&Item>,
    steps: &mut Vec<(u8, Step)>,
) {
    let top = *as_plr(top);
    if let Some(a) = next {
        // 1
        let predicted = g.predicted_after(top.prefix, Some(&NtSet::singleton(top.lhs)));
        let prefix = g.extend_prefix(PrefixId::EMPTY, Sym::T(a));
        if let Some(prefix) = prefix {
            for lhs in lhs_in_rule_order(g, Sym::T(a), &predicted) {
                steps.push((1, Step::Push(Item::Plr(PlrItem { lhs, prefix }))));
            }
        }
        // 2
        if let Some(child) = g.extend_prefix(top.prefix, Sym::T(a)) {
            if g.lhs_with_prefix(child).contains(top.lhs) {
                steps.push((
                    2,
                    Step::Shift(Item::Plr(PlrItem {
                        lhs: top.lhs,
                        prefix: child,
                    })),
                ));
            }
        }
    }
    let Some(below) = below.map(as_plr) else {
        return;
    };
    let a = top.lhs;
    if !g.completed_by(top.prefix).contains(&a) {
        return;
    }
    // 3
    let predicted = g.predicted_after(below.prefix, Some(&NtSet::singleton(below.lhs)));
    if let Some(prefix) = g.extend_prefix(PrefixId::EMPTY, Sym::N(a)) {
        for lhs in lhs_in_rule_order(g, Sym::N(a), &predicted) {
            steps.push((3, Step::Replace(Item::Plr(PlrItem { lhs, prefix }))));
        }
    }
    // 4
    if let Some(child) = g.extend_prefix(below.prefix, Sym::N(a)) {
        if g.lhs_with_prefix(child).contains(below.lhs) {
            steps.push((
                4,
                Step::Reduce(Item::Plr(PlrItem {
                    lhs: below.lhs,
                    prefix: child,
                })),
            ));
        }
    }
}

/// ELR, or pseudo-ELR when `pseudo` is set: the latter drops the `B ∈ Δ`
/// condition from clauses 1 and 3.
fn elr_steps(
    g: &AugmentedGrammar,
    next: Option<Term>,
    top: &Item,
    below: Option<&Item>,
    pseudo: bool,
    steps: &mut Vec<(u8, Step)>,
) {
    let top = as_elr(top);
    if let Some(a) = next {
        // 1
        let filter = (!pseudo).then_some(&top.delta);
        let delta = g
            .lhs_starting_with(Sym::T(a))
            .intersection(&g.predicted_after(top.prefix, filter));
        if !delta.is_empty() {
            let prefix = g.extend_prefix(PrefixId::EMPTY, Sym::T(a)).unwrap();
            steps.push((1, Step::Push(Item::Elr(ElrItem { delta, prefix }))));
        }
        // 2
        if let Some(child) = g.extend_prefix(top.prefix, Sym::T(a)) {
            let delta = top.delta.intersection(g.lhs_with_prefix(child));
            if !delta.is_empty() {
                steps.push((2, Step::Shift(Item::Elr(ElrItem { delta, prefix: child }))));
            }
        }
    }
    let Some(below) = below.map(as_elr) else {
        return;
    };
    let filter = (!pseudo).then_some(&below.delta);
    let predicted = g.predicted_after(below.prefix, filter);
    let completed: Vec<Nt> = g
        .completed_by(top.prefix)
        .iter()
        .copied()
        .filter(|&a| top.delta.contains(a))
        .collect();
    // 3
    for &a in &completed {
        let delta = g.lhs_starting_with(Sym::N(a)).intersection(&predicted);
        if !delta.is_empty() {
            let prefix = g.extend_prefix(PrefixId::EMPTY, Sym::N(a)).unwrap();
            steps.push((3, Step::Replace(Item::Elr(ElrItem { delta, prefix }))));
        }
    }
    // 4
    for &a in &completed {
        if let Some(child) = g.extend_prefix(below.prefix, Sym::N(a)) {
            let delta = below.delta.intersection(g.lhs_with_prefix(child));
            if !delta.is_empty() {
                steps.push((4, Step::Reduce(Item::Elr(ElrItem { delta, prefix: child }))));
            }
        }
    }
}

fn cp_steps(
    g: &AugmentedGrammar,
    next: Option<Term>,
    top: &Item,
    below: Option<&Item>,
    steps: &mut Vec<(u8, Step)>,
) {
    let top = *as_cp(top);
    if let Some(a) = next {
        // 1
        let predicted = g.predicted_after(top.prefix, None);
        if g.lhs_starting_with(Sym::T(a)).intersects(&predicted) {
            let prefix = g.extend_prefix(PrefixId::EMPTY, Sym::T(a)).unwrap();
            steps.push((1, Step::Push(Item::Cp(CpItem { prefix }))));
        }
        // 2
        if let Some(prefix) = g.extend_prefix(top.prefix, Sym::T(a)) {
            steps.push((2, Step::Shift(Item::Cp(CpItem { prefix }))));
        }
    }
    let Some(below) = below.map(as_cp) else {
        return;
    };
    let completed = g.completed_by(top.prefix);
    // 3
    let predicted = g.predicted_after(below.prefix, None);
    for &a in completed {
        if g.lhs_starting_with(Sym::N(a)).intersects(&predicted) {
            let prefix = g.extend_prefix(PrefixId::EMPTY, Sym::N(a)).unwrap();
            steps.push((3, Step::Replace(Item::Cp(CpItem { prefix }))));
        }
    }
    // 4
    for &a in completed {
        if let Some(prefix) = g.extend_prefix(below.prefix, Sym::N(a)) {
            steps.push((4, Step::Reduce(Item::Cp(CpItem { prefix }))));
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecognitionResult {
    pub accepted: bool,
    /// Distinct configurations discovered.
    pub configurations_explored: usize,
    pub max_frontier: usize,
    /// Expanded configurations with two or more distinct successors.
    pub choice_points: usize,
    pub budget_exhausted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// `None` for the initial configuration.
    pub clause: Option<u8>,
    pub config: Configuration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub algorithm: Algorithm,
    pub steps: Vec<TraceStep>,
}

impl Trace {
    /// Number of `⊢` steps, not counting the initial configuration.
    pub fn len(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clauses(&self) -> Vec<u8> {
        self.steps.iter().filter_map(|s| s.clause).collect()
    }
}

/// The complete outcome of a search: every configuration visited, in
/// discovery order, with the BFS tree that reached it.
#[derive(Debug, Clone)]
pub struct Exploration {
    pub algorithm: Algorithm,
    pub result: RecognitionResult,
    visited: Vec<Configuration>,
    parents: Vec<Option<(usize, u8)>>,
    accepting: Option<usize>,
}

impl Exploration {
    pub fn visited(&self) -> &[Configuration] {
        &self.visited
    }

    /// Highest input position of any visited configuration.
    pub fn max_pos(&self) -> usize {
        self.visited.iter().map(|c| c.pos).max().unwrap_or(0)
    }

    pub fn accepting_trace(&self) -> Option<Trace> {
        let mut at = self.accepting?;
        let mut steps = Vec::new();
        loop {
            let parent = self.parents[at];
            steps.push(TraceStep {
                clause: parent.map(|(_, clause)| clause),
                config: self.visited[at].clone(),
            });
            match parent {
                Some((p, _)) => at = p,
                None => break,
            }
        }
        steps.reverse();
        Some(Trace {
            algorithm: self.algorithm,
            steps,
        })
    }
}

/// Breadth-first search of the whole configuration space reachable from
/// `(Init, input)`, stopping early only when `budget` distinct
/// configurations have been discovered.
pub fn explore<S: AsRef<str>>(
    algo: Algorithm,
    g: &AugmentedGrammar,
    input: &[S],
    budget: usize,
) -> Result<Exploration> {
    let input = g.tokenize(input)?;
    Ok(explore_terms(algo, g, &input, budget))
}

pub fn explore_terms(algo: Algorithm, g: &AugmentedGrammar, input: &[Term], budget: usize) -> Exploration {
    let n = input.len();
    let init = Configuration::initial(algo, g);
    let mut index: HashMap<Configuration, usize> = HashMap::new();
    let mut visited = vec![init.clone()];
    let mut parents = vec![None];
    let mut accepting = init.is_final(algo, g, n).then_some(0);
    index.insert(init, 0);

    let mut queue = VecDeque::from([0usize]);
    let mut max_frontier = 1;
    let mut choice_points = 0;
    let mut out_of_budget = false;

    'search: while let Some(at) = queue.pop_front() {
        let succs = expand(algo, g, input, &visited[at]);
        if succs.len() >= 2 {
            choice_points += 1;
        }
        for Successor { clause, config } in succs {
            if index.contains_key(&config) {
                continue;
            }
            if visited.len() >= budget {
                out_of_budget = true;
                break 'search;
            }
            let id = visited.len();
            if accepting.is_none() && config.is_final(algo, g, n) {
                accepting = Some(id);
            }
            index.insert(config.clone(), id);
            visited.push(config);
            parents.push(Some((at, clause)));
            queue.push_back(id);
        }
        max_frontier = max_frontier.max(queue.len());
    }

    let accepted = accepting.is_some();
    Exploration {
        algorithm: algo,
        result: RecognitionResult {
            accepted,
            configurations_explored: visited.len(),
            max_frontier,
            choice_points,
            budget_exhausted: out_of_budget && !accepted,
        },
        visited,
        parents,
        accepting,
    }
}

/// Decides `(Init, input) ⊢* (Fin, ε)`.
pub fn recognize<S: AsRef<str>>(
    algo: Algorithm,
    g: &AugmentedGrammar,
    input: &[S],
    budget: usize,
) -> Result<RecognitionResult> {
    let result = explore(algo, g, input, budget)?.result;
    if result.budget_exhausted {
        return Err(Error::BudgetExhausted { budget });
    }
    Ok(result)
}

/// One shortest accepting run, or `None` when the input is rejected.
pub fn accepting_trace<S: AsRef<str>>(
    algo: Algorithm,
    g: &AugmentedGrammar,
    input: &[S],
    budget: usize,
) -> Result<Option<Trace>> {
    let exploration = explore(algo, g, input, budget)?;
    if exploration.result.budget_exhausted {
        return Err(Error::BudgetExhausted { budget });
    }
    Ok(exploration.accepting_trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::g1;
    use crate::render::render_stack;

    fn stack(g: &AugmentedGrammar, c: &Configuration) -> String {
        render_stack(g, &c.stack)
    }

    #[test]
    fn lc_first_step_on_g1() {
        let g = g1();
        let input = g.tokenize(&["a", "*", "a"]).unwrap();
        let succ = successors(Algorithm::Lc, &g, &input, &Configuration::initial(Algorithm::Lc, &g)).unwrap();
        assert_eq!(succ.len(), 1);
        assert_eq!(succ[0].clause, 1);
        assert_eq!(succ[0].config.pos, 1);
        assert_eq!(stack(&g, &succ[0].config), "[E' -> • E][F -> 'a' •]");
    }

    #[test]
    fn lc_unit_reduction_has_four_choices() {
        let g = g1();
        let input = g.tokenize(&["a", "*", "a"]).unwrap();
        let t_f = g
            .productions()
            .iter()
            .position(|p| p.lhs == g.nonterminal("T").unwrap() && p.rhs.len() == 1)
            .unwrap();
        let c = Configuration {
            stack: vec![Algorithm::Lc.init(&g), Item::Lc(LcItem { rule: t_f, dot: 1 })],
            pos: 1,
        };
        let succ = successors(Algorithm::Lc, &g, &input, &c).unwrap();
        let got: Vec<(u8, String)> = succ.iter().map(|s| (s.clause, stack(&g, &s.config))).collect();
        assert_eq!(
            got,
            vec![
                (3, "[E' -> • E][E -> T • '^' E]".to_string()),
                (3, "[E' -> • E][E -> T •]".to_string()),
                (3, "[E' -> • E][T -> T • '*' F]".to_string()),
                (3, "[E' -> • E][T -> T • '**' F]".to_string()),
            ]
        );
    }

    #[test]
    fn elr_merges_t_and_e() {
        let g = g1();
        let input = g.tokenize(&["a", "*", "a"]).unwrap();
        let t = g.nonterminal("T").unwrap();
        let f = g.nonterminal("F").unwrap();
        let c = Configuration {
            stack: vec![
                Algorithm::Elr.init(&g),
                Item::Elr(ElrItem {
                    delta: NtSet::singleton(t),
                    prefix: g.find_prefix(&[Sym::N(f)]).unwrap(),
                }),
            ],
            pos: 1,
        };
        let succ = successors(Algorithm::Elr, &g, &input, &c).unwrap();
        assert_eq!(succ.len(), 1);
        assert_eq!(succ[0].clause, 3);
        assert_eq!(stack(&g, &succ[0].config), "[{E'} ->][{E,T} -> T]");
    }

    #[test]
    fn kind_mismatch() {
        let g = g1();
        let c = Configuration::initial(Algorithm::Cp, &g);
        assert_eq!(
            successors(Algorithm::Lc, &g, &[], &c),
            Err(Error::KindMismatch { expected: "LC" })
        );
        // pseudo-ELR shares the ELR item kind
        let c = Configuration::initial(Algorithm::Elr, &g);
        assert!(successors(Algorithm::PseudoElr, &g, &[], &c).is_ok());
    }

    #[test]
    fn basic_outcomes() {
        let g = g1();
        assert!(recognize(Algorithm::Lc, &g, &["a", "*", "a"], DEFAULT_BUDGET).unwrap().accepted);
        assert!(!recognize(Algorithm::Cp, &g, &["a", "+", "a", "^", "a"], DEFAULT_BUDGET).unwrap().accepted);
        let empty: [&str; 0] = [];
        assert!(!recognize(Algorithm::Elr, &g, &empty, DEFAULT_BUDGET).unwrap().accepted);
        assert!(matches!(
            recognize(Algorithm::Lc, &g, &["b"], DEFAULT_BUDGET),
            Err(Error::UnknownToken { .. })
        ));
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let g = g1();
        let input = ["a", "+", "a", "+", "a"];
        assert_eq!(
            recognize(Algorithm::Lc, &g, &input, 3),
            Err(Error::BudgetExhausted { budget: 3 })
        );
        let ex = explore(Algorithm::Lc, &g, &input, 3).unwrap();
        assert!(ex.result.budget_exhausted);
        assert_eq!(ex.result.configurations_explored, 3);
    }

    #[test]
    fn algorithm_names_round_trip() {
        for algo in Algorithm::ALL {
            assert_eq!(algo.name().parse::<Algorithm>(), Ok(algo));
        }
        assert!("lr".parse::<Algorithm>().is_err());
    }
}
