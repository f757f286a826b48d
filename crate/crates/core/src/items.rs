//! Item universes of the four recognizer families.
//!
//! * [`LcItem`]: a dotted rule `[A -> α • β]` (left-corner).
//! * [`PlrItem`]: `[A -> α]`, all dotted items of `A` sharing the prefix `α`.
//! * [`ElrItem`]: `[Δ -> α]`, the same for every `A ∈ Δ` at once.
//! * [`CpItem`]: `[-> α]`, the prefix alone.
//!
//! PLR, ELR and CP items refer to their prefix through a [`PrefixId`], so
//! equal prefixes compare equal without comparing symbol sequences.

use std::collections::BTreeSet;

use crate::grammar::{AugmentedGrammar, Nt, NtSet, PrefixId, Sym};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LcItem {
    /// Index into [`AugmentedGrammar::productions`].
    pub rule: usize,
    pub dot: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlrItem {
    pub lhs: Nt,
    pub prefix: PrefixId,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElrItem {
    pub delta: NtSet,
    pub prefix: PrefixId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CpItem {
    pub prefix: PrefixId,
}

/// A stack symbol of any of the automata.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Item {
    Lc(LcItem),
    Plr(PlrItem),
    Elr(ElrItem),
    Cp(CpItem),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ItemKind {
    Lc,
    Plr,
    Elr,
    Cp,
}

impl ItemKind {
    pub fn name(self) -> &'static str {
        match self {
            ItemKind::Lc => "LC",
            ItemKind::Plr => "PLR",
            ItemKind::Elr => "ELR",
            ItemKind::Cp => "CP",
        }
    }
}

impl Item {
    pub fn kind(&self) -> ItemKind {
        match self {
            Item::Lc(_) => ItemKind::Lc,
            Item::Plr(_) => ItemKind::Plr,
            Item::Elr(_) => ItemKind::Elr,
            Item::Cp(_) => ItemKind::Cp,
        }
    }

    /// The recognized prefix `α` of the item.
    pub fn alpha<'g>(&self, g: &'g AugmentedGrammar) -> &'g [Sym] {
        match self {
            Item::Lc(it) => it.alpha(g),
            Item::Plr(it) => g.prefix_syms(it.prefix),
            Item::Elr(it) => g.prefix_syms(it.prefix),
            Item::Cp(it) => g.prefix_syms(it.prefix),
        }
    }
}

impl LcItem {
    pub fn new(g: &AugmentedGrammar, rule: usize, dot: usize) -> Option<Self> {
        let prod = g.productions().get(rule)?;
        let valid = dot <= prod.rhs.len() && (dot > 0 || prod.lhs == g.start_prime());
        valid.then_some(LcItem { rule, dot })
    }

    pub fn lhs(&self, g: &AugmentedGrammar) -> Nt {
        g.productions()[self.rule].lhs
    }

    pub fn alpha<'g>(&self, g: &'g AugmentedGrammar) -> &'g [Sym] {
        &g.productions()[self.rule].rhs[..self.dot]
    }

    pub fn beta<'g>(&self, g: &'g AugmentedGrammar) -> &'g [Sym] {
        &g.productions()[self.rule].rhs[self.dot..]
    }

    /// The symbol after the dot.
    pub fn next(&self, g: &AugmentedGrammar) -> Option<Sym> {
        g.productions()[self.rule].rhs.get(self.dot).copied()
    }

    pub fn is_complete(&self, g: &AugmentedGrammar) -> bool {
        self.dot == g.productions()[self.rule].rhs.len()
    }

    pub fn to_plr(&self, g: &AugmentedGrammar) -> PlrItem {
        PlrItem {
            lhs: self.lhs(g),
            prefix: g
                .find_prefix(self.alpha(g))
                .expect("every rule prefix is interned"),
        }
    }
}

impl PlrItem {
    pub fn new(g: &AugmentedGrammar, lhs: Nt, alpha: &[Sym]) -> Option<Self> {
        let prefix = g.find_prefix(alpha)?;
        let valid = g.lhs_with_prefix(prefix).contains(lhs)
            && (!alpha.is_empty() || lhs == g.start_prime());
        valid.then_some(PlrItem { lhs, prefix })
    }

    pub fn to_elr(&self) -> ElrItem {
        ElrItem {
            delta: NtSet::singleton(self.lhs),
            prefix: self.prefix,
        }
    }
}

impl ElrItem {
    pub fn new(g: &AugmentedGrammar, delta: NtSet, alpha: &[Sym]) -> Option<Self> {
        elr_item_is_valid(&delta, alpha, g).then(|| ElrItem {
            delta,
            prefix: g.find_prefix(alpha).expect("validated prefix"),
        })
    }

    pub fn to_cp(&self) -> CpItem {
        CpItem {
            prefix: self.prefix,
        }
    }
}

/// `I^LC`: every dotted rule of `P†` with a nonempty recognized part, plus
/// `[S' -> • S]`.
pub fn lc_items(g: &AugmentedGrammar) -> BTreeSet<LcItem> {
    g.productions()
        .iter()
        .enumerate()
        .flat_map(|(rule, prod)| {
            let first = if prod.lhs == g.start_prime() { 0 } else { 1 };
            (first..=prod.rhs.len()).map(move |dot| LcItem { rule, dot })
        })
        .collect()
}

/// `I^PLR`: [`lc_items`] with the dot position forgotten.
pub fn plr_items(g: &AugmentedGrammar) -> BTreeSet<PlrItem> {
    lc_items(g).iter().map(|it| it.to_plr(g)).collect()
}

/// `I^CP`: every distinct prefix of a right-hand side in `P†`, the empty
/// prefix included.
pub fn cp_items(g: &AugmentedGrammar) -> BTreeSet<CpItem> {
    g.prefix_ids().map(|prefix| CpItem { prefix }).collect()
}

/// Membership in `I^ELR`. The universe itself is never enumerated, since it
/// grows exponentially with the grammar.
pub fn elr_item_is_valid(delta: &NtSet, alpha: &[Sym], g: &AugmentedGrammar) -> bool {
    let Some(prefix) = g.find_prefix(alpha) else {
        return false;
    };
    !delta.is_empty()
        && delta.is_subset(g.lhs_with_prefix(prefix))
        && (!alpha.is_empty() || *delta == NtSet::singleton(g.start_prime()))
}
