//! Context-free grammars: the source-level [`Grammar`], its augmented and
//! interned form [`AugmentedGrammar`], and the analyses the recognizers need
//! (left-corner relation, validation, common prefixes).

mod augmented;
mod parse;
mod relation;
mod validate;

use std::collections::BTreeSet;
use std::fmt;

pub use augmented::{augment, augment_with, AugmentedGrammar, Production, PrefixId};
pub use parse::parse_grammar;
pub use relation::{common_prefix_pairs, left_corner, left_corner_star, CommonPrefix, Relation};
pub use validate::{validate, Diagnostic, DiagnosticCode, ValidationReport};

/// A grammar symbol as written in source.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Terminal(String),
    Nonterminal(String),
}

impl Symbol {
    pub fn terminal(name: impl Into<String>) -> Self {
        Symbol::Terminal(name.into())
    }

    pub fn nonterminal(name: impl Into<String>) -> Self {
        Symbol::Nonterminal(name.into())
    }

    pub fn name(&self) -> &str {
        match self {
            Symbol::Terminal(n) | Symbol::Nonterminal(n) => n,
        }
    }

    pub fn is_terminal(&self) -> bool {
        matches!(self, Symbol::Terminal(_))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Terminal(n) => write!(f, "'{n}'"),
            Symbol::Nonterminal(n) => f.write_str(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub lhs: String,
    pub rhs: Vec<Symbol>,
}

impl Rule {
    pub fn new(lhs: impl Into<String>, rhs: Vec<Symbol>) -> Self {
        Rule {
            lhs: lhs.into(),
            rhs,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ->", self.lhs)?;
        for sym in &self.rhs {
            write!(f, " {sym}")?;
        }
        Ok(())
    }
}

/// A grammar `(T, N, P, S)` with rules kept in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammar {
    pub terminals: BTreeSet<String>,
    pub nonterminals: BTreeSet<String>,
    pub rules: Vec<Rule>,
    pub start: String,
}

impl Grammar {
    /// Builds a grammar whose symbol sets are exactly the symbols used by
    /// `rules`: every left-hand side is a nonterminal, every quoted symbol a
    /// terminal. Nonterminals that only occur on right-hand sides are left
    /// undeclared.
    pub fn from_rules(start: impl Into<String>, rules: Vec<Rule>) -> Self {
        let nonterminals = rules.iter().map(|r| r.lhs.clone()).collect();
        let terminals = rules
            .iter()
            .flat_map(|r| r.rhs.iter())
            .filter_map(|s| match s {
                Symbol::Terminal(t) => Some(t.clone()),
                Symbol::Nonterminal(_) => None,
            })
            .collect();
        Grammar {
            terminals,
            nonterminals,
            rules,
            start: start.into(),
        }
    }

    pub fn rules_for<'a>(&'a self, lhs: &'a str) -> impl Iterator<Item = &'a Rule> + 'a {
        self.rules.iter().filter(move |r| r.lhs == lhs)
    }

    /// Renders the grammar in the text format accepted by [`parse_grammar`].
    pub fn to_source(&self) -> String {
        let mut out = format!("start {}\n", self.start);
        for rule in &self.rules {
            out.push_str(&rule.to_string());
            out.push('\n');
        }
        out
    }
}

/// Interned nonterminal of an [`AugmentedGrammar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nt(pub(crate) u32);

/// Interned terminal of an [`AugmentedGrammar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term(pub(crate) u32);

impl Nt {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl Term {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Interned grammar symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    T(Term),
    N(Nt),
}

impl Sym {
    pub fn as_nonterminal(self) -> Option<Nt> {
        match self {
            Sym::N(a) => Some(a),
            Sym::T(_) => None,
        }
    }
}

/// A set of nonterminals in canonical (sorted) order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NtSet(BTreeSet<Nt>);

impl NtSet {
    pub fn new() -> Self {
        NtSet(BTreeSet::new())
    }

    pub fn singleton(a: Nt) -> Self {
        NtSet(BTreeSet::from([a]))
    }

    pub fn insert(&mut self, a: Nt) -> bool {
        self.0.insert(a)
    }

    pub fn contains(&self, a: Nt) -> bool {
        self.0.contains(&a)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = Nt> + '_ {
        self.0.iter().copied()
    }

    pub fn extend_from(&mut self, other: &NtSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn intersection(&self, other: &NtSet) -> NtSet {
        NtSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn intersects(&self, other: &NtSet) -> bool {
        self.0.iter().any(|a| other.0.contains(a))
    }

    pub fn is_subset(&self, other: &NtSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn retain(&mut self, f: impl FnMut(&Nt) -> bool) {
        self.0.retain(f)
    }
}

impl FromIterator<Nt> for NtSet {
    fn from_iter<I: IntoIterator<Item = Nt>>(iter: I) -> Self {
        NtSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a NtSet {
    type Item = &'a Nt;
    type IntoIter = std::collections::btree_set::Iter<'a, Nt>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
