use std::collections::{BTreeMap, HashMap};

use super::relation::{closure_of, left_corner_pairs, Relation};
use super::validate::{productive_nonterminals, unit_cycles, validate, DiagnosticCode};
use super::{Grammar, Nt, NtSet, Sym, Symbol, Term};
use crate::error::{Error, Result};

/// A rule of `P†` over interned symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Production {
    pub lhs: Nt,
    pub rhs: Vec<Sym>,
}

/// Identifies one distinct right-hand-side prefix of `P†` (the empty prefix
/// included). Prefixes are interned in a trie, so equal prefixes share an id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrefixId(pub(crate) u32);

impl PrefixId {
    pub const EMPTY: PrefixId = PrefixId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone)]
struct PrefixNode {
    syms: Vec<Sym>,
    children: BTreeMap<Sym, PrefixId>,
    /// `{A | A -> αβ ∈ P†}` for this prefix `α`.
    lhs: NtSet,
    /// `{A | A -> α ∈ P†}`, in rule order.
    complete: Vec<Nt>,
}

/// A validated grammar extended with a fresh start symbol `S'` and the rule
/// `S' -> S`, with symbols interned and the left-corner relation precomputed.
#[derive(Debug, Clone)]
pub struct AugmentedGrammar {
    base: Grammar,
    nt_names: Vec<String>,
    t_names: Vec<String>,
    nt_ids: HashMap<String, Nt>,
    t_ids: HashMap<String, Term>,
    productions: Vec<Production>,
    start: Nt,
    start_prime: Nt,
    prefixes: Vec<PrefixNode>,
    left_corner: Relation,
    left_corner_star: Relation,
    productive: Vec<bool>,
}

/// Augments a grammar that passes [`validate`].
pub fn augment(g: &Grammar) -> Result<AugmentedGrammar> {
    augment_with(g, false)
}

/// Like [`augment`], but with `allow_cyclic` unit-rule cycles are tolerated.
/// Automata over a cyclic grammar may not terminate; bound them with a budget.
pub fn augment_with(g: &Grammar, allow_cyclic: bool) -> Result<AugmentedGrammar> {
    let report = validate(g);
    let blocking: Vec<String> = report
        .errors()
        .filter(|d| !(allow_cyclic && d.code == DiagnosticCode::UnitCycle))
        .map(|d| d.to_string())
        .collect();
    if !blocking.is_empty() {
        return Err(Error::InvalidGrammar(blocking.join("; ")));
    }
    Ok(AugmentedGrammar::build(g))
}

impl AugmentedGrammar {
    fn build(base: &Grammar) -> Self {
        let mut fresh = format!("{}'", base.start);
        while base.nonterminals.contains(&fresh) || base.terminals.contains(&fresh) {
            fresh.push('\'');
        }

        let mut nt_names: Vec<String> = base.nonterminals.iter().cloned().collect();
        nt_names.push(fresh);
        let t_names: Vec<String> = base.terminals.iter().cloned().collect();
        let nt_ids: HashMap<String, Nt> = nt_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), Nt(i as u32)))
            .collect();
        let t_ids: HashMap<String, Term> = t_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), Term(i as u32)))
            .collect();

        let start = nt_ids[&base.start];
        let start_prime = Nt((nt_names.len() - 1) as u32);

        let mut productions: Vec<Production> = base
            .rules
            .iter()
            .map(|r| Production {
                lhs: nt_ids[&r.lhs],
                rhs: r
                    .rhs
                    .iter()
                    .map(|s| match s {
                        Symbol::Terminal(t) => Sym::T(t_ids[t]),
                        Symbol::Nonterminal(n) => Sym::N(nt_ids[n]),
                    })
                    .collect(),
            })
            .collect();
        productions.push(Production {
            lhs: start_prime,
            rhs: vec![Sym::N(start)],
        });

        let prefixes = build_prefixes(&productions);
        let nt_count = nt_names.len();
        let left_corner = Relation::from_pairs(nt_count, left_corner_pairs(&productions));
        let left_corner_star = closure_of(&left_corner);

        let productive_names = productive_nonterminals(base);
        let mut productive: Vec<bool> = nt_names
            .iter()
            .map(|n| productive_names.contains(n))
            .collect();
        productive[start_prime.index()] = productive[start.index()];

        AugmentedGrammar {
            base: base.clone(),
            nt_names,
            t_names,
            nt_ids,
            t_ids,
            productions,
            start,
            start_prime,
            prefixes,
            left_corner,
            left_corner_star,
            productive,
        }
    }

    pub fn base(&self) -> &Grammar {
        &self.base
    }

    /// Erases `S'` and its rule, recovering the original grammar.
    pub fn into_base(self) -> Grammar {
        self.base
    }

    pub fn start(&self) -> Nt {
        self.start
    }

    pub fn start_prime(&self) -> Nt {
        self.start_prime
    }

    pub fn start_prime_name(&self) -> &str {
        self.nt_name(self.start_prime)
    }

    /// `P†`: the base rules in source order followed by `S' -> S`.
    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    pub fn nonterminal_count(&self) -> usize {
        self.nt_names.len()
    }

    pub fn nonterminals(&self) -> impl Iterator<Item = Nt> {
        (0..self.nt_names.len() as u32).map(Nt)
    }

    pub fn terminals(&self) -> impl Iterator<Item = Term> {
        (0..self.t_names.len() as u32).map(Term)
    }

    pub fn nt_name(&self, a: Nt) -> &str {
        &self.nt_names[a.index()]
    }

    pub fn t_name(&self, a: Term) -> &str {
        &self.t_names[a.index()]
    }

    pub fn nonterminal(&self, name: &str) -> Option<Nt> {
        self.nt_ids.get(name).copied()
    }

    pub fn terminal(&self, name: &str) -> Option<Term> {
        self.t_ids.get(name).copied()
    }

    pub fn symbol(&self, sym: &Symbol) -> Option<Sym> {
        match sym {
            Symbol::Terminal(t) => self.terminal(t).map(Sym::T),
            Symbol::Nonterminal(n) => self.nonterminal(n).map(Sym::N),
        }
    }

    /// Maps input tokens to terminals, failing on the first unknown one.
    pub fn tokenize<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Vec<Term>> {
        tokens
            .iter()
            .enumerate()
            .map(|(position, tok)| {
                self.terminal(tok.as_ref()).ok_or_else(|| Error::UnknownToken {
                    token: tok.as_ref().to_string(),
                    position,
                })
            })
            .collect()
    }

    pub fn render_sym(&self, sym: Sym) -> String {
        match sym {
            Sym::T(t) => format!("'{}'", self.t_name(t)),
            Sym::N(a) => self.nt_name(a).to_string(),
        }
    }

    pub fn render_syms(&self, syms: &[Sym]) -> String {
        syms.iter()
            .map(|&s| self.render_sym(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// `{A, B}` with names sorted alphabetically.
    pub fn render_nt_set(&self, set: &NtSet) -> String {
        let mut names: Vec<&str> = set.iter().map(|a| self.nt_name(a)).collect();
        names.sort_unstable();
        format!("{{{}}}", names.join(","))
    }

    pub fn is_productive(&self, a: Nt) -> bool {
        self.productive[a.index()]
    }

    pub fn has_unit_cycles(&self) -> bool {
        !unit_cycles(&self.base).is_empty()
    }

    /// `∠`, as computed at augmentation time.
    pub fn left_corner_relation(&self) -> &Relation {
        &self.left_corner
    }

    /// `∠*`, as computed at augmentation time.
    pub fn left_corner_star_relation(&self) -> &Relation {
        &self.left_corner_star
    }

    /// `{D | D ∠* c}`.
    pub fn corners_of(&self, c: Nt) -> &NtSet {
        self.left_corner_star.corners_of(c)
    }

    // Prefix trie.

    pub fn prefix_count(&self) -> usize {
        self.prefixes.len()
    }

    pub fn prefix_ids(&self) -> impl Iterator<Item = PrefixId> {
        (0..self.prefixes.len() as u32).map(PrefixId)
    }

    pub fn prefix_syms(&self, p: PrefixId) -> &[Sym] {
        &self.prefixes[p.index()].syms
    }

    pub fn find_prefix(&self, syms: &[Sym]) -> Option<PrefixId> {
        syms.iter()
            .try_fold(PrefixId::EMPTY, |p, &s| self.extend_prefix(p, s))
    }

    /// `αX`, if some rule of `P†` has it as a prefix.
    pub fn extend_prefix(&self, p: PrefixId, sym: Sym) -> Option<PrefixId> {
        self.prefixes[p.index()].children.get(&sym).copied()
    }

    /// `{A | A -> αβ ∈ P†}` for `α = p`.
    pub fn lhs_with_prefix(&self, p: PrefixId) -> &NtSet {
        &self.prefixes[p.index()].lhs
    }

    /// `{A | A -> α ∈ P†}` for `α = p`, in rule order.
    pub fn completed_by(&self, p: PrefixId) -> &[Nt] {
        &self.prefixes[p.index()].complete
    }

    /// Nonterminals `C` with `B -> βCγ ∈ P†` for `β = p` and `B` admitted by
    /// `filter` (every `B` when `filter` is `None`).
    pub fn expected_after<'a>(
        &'a self,
        p: PrefixId,
        filter: Option<&'a NtSet>,
    ) -> impl Iterator<Item = Nt> + 'a {
        self.prefixes[p.index()]
            .children
            .iter()
            .filter_map(move |(&sym, &child)| {
                let c = sym.as_nonterminal()?;
                let lhs = self.lhs_with_prefix(child);
                match filter {
                    Some(f) if !lhs.intersects(f) => None,
                    _ => Some(c),
                }
            })
    }

    /// `{D | ∃ B -> βCγ ∈ P† [B ∈ filter ∧ D ∠* C]}` for `β = p`.
    pub fn predicted_after(&self, p: PrefixId, filter: Option<&NtSet>) -> NtSet {
        let mut out = NtSet::new();
        for c in self.expected_after(p, filter) {
            out.extend_from(self.corners_of(c));
        }
        out
    }

    /// `{A | A -> Xα ∈ P†}`.
    pub fn lhs_starting_with(&self, sym: Sym) -> NtSet {
        self.extend_prefix(PrefixId::EMPTY, sym)
            .map(|p| self.lhs_with_prefix(p).clone())
            .unwrap_or_default()
    }
}

fn build_prefixes(productions: &[Production]) -> Vec<PrefixNode> {
    let mut nodes = vec![PrefixNode {
        syms: Vec::new(),
        children: BTreeMap::new(),
        lhs: NtSet::new(),
        complete: Vec::new(),
    }];
    for prod in productions {
        let mut cur = 0usize;
        nodes[cur].lhs.insert(prod.lhs);
        for (i, &sym) in prod.rhs.iter().enumerate() {
            let next = match nodes[cur].children.get(&sym) {
                Some(&id) => id.index(),
                None => {
                    let id = nodes.len();
                    nodes.push(PrefixNode {
                        syms: prod.rhs[..=i].to_vec(),
                        children: BTreeMap::new(),
                        lhs: NtSet::new(),
                        complete: Vec::new(),
                    });
                    nodes[cur].children.insert(sym, PrefixId(id as u32));
                    id
                }
            };
            cur = next;
            nodes[cur].lhs.insert(prod.lhs);
        }
        if !nodes[cur].complete.contains(&prod.lhs) {
            nodes[cur].complete.push(prod.lhs);
        }
    }
    nodes
}
