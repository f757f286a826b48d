//! Chart realizations of the common-prefix and extended LR recognizers.
//!
//! A chart holds one item set per span `(j, i)`, `0 <= j <= i <= n`: row `j`
//! is where the recognized part starts, column `i` where it ends. Items are
//! added by a least-fixpoint computation driven by an agenda; every addition
//! is recorded in a provenance log.
//!
//! * [`tabular_cp`]: common-prefix items, with or without top-down filtering.
//!   The agenda is unordered.
//! * [`tabular_elr`]: extended LR items, column by column. The merged variant
//!   builds one `[Δ' -> a]` per cell from every antecedent in the previous
//!   column (and likewise for reductions); the predict-set variant does the
//!   same through the sets `S_i`; the naive variant fires once per
//!   antecedent and so may store several items with the same prefix in one
//!   cell.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grammar::{AugmentedGrammar, NtSet, PrefixId, Sym, Term};
use crate::items::{CpItem, ElrItem, Item};
use crate::render::render_item;

/// `(j, i)`: row `j`, column `i`.
pub type Cell = (usize, usize);

pub trait ChartItem: Clone + Ord + Hash + fmt::Debug {
    fn prefix(&self) -> PrefixId;

    fn render(&self, g: &AugmentedGrammar) -> String;

    /// `(|α|, α, Δ)` as text; the order items are listed in within a cell.
    fn sort_key(&self, g: &AugmentedGrammar) -> (usize, String, String);
}

impl ChartItem for CpItem {
    fn prefix(&self) -> PrefixId {
        self.prefix
    }

    fn render(&self, g: &AugmentedGrammar) -> String {
        render_item(g, &Item::Cp(*self))
    }

    fn sort_key(&self, g: &AugmentedGrammar) -> (usize, String, String) {
        let alpha = g.prefix_syms(self.prefix);
        (alpha.len(), g.render_syms(alpha), String::new())
    }
}

impl ChartItem for ElrItem {
    fn prefix(&self) -> PrefixId {
        self.prefix
    }

    fn render(&self, g: &AugmentedGrammar) -> String {
        render_item(g, &Item::Elr(self.clone()))
    }

    fn sort_key(&self, g: &AugmentedGrammar) -> (usize, String, String) {
        let alpha = g.prefix_syms(self.prefix);
        (alpha.len(), g.render_syms(alpha), g.render_nt_set(&self.delta))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart<I> {
    n: usize,
    cells: BTreeMap<Cell, BTreeSet<I>>,
    /// Columns `0..complete_columns` are final.
    complete_columns: usize,
}

impl<I: ChartItem> Chart<I> {
    pub fn new(n: usize) -> Self {
        Chart {
            n,
            cells: BTreeMap::new(),
            complete_columns: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cell(&self, j: usize, i: usize) -> impl Iterator<Item = &I> {
        self.cells.get(&(j, i)).into_iter().flatten()
    }

    pub fn cell_set(&self, j: usize, i: usize) -> BTreeSet<I> {
        self.cell(j, i).cloned().collect()
    }

    pub fn contains(&self, j: usize, i: usize, item: &I) -> bool {
        self.cells.get(&(j, i)).is_some_and(|s| s.contains(item))
    }

    /// Nonempty cells in `(j, i)` order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, &BTreeSet<I>)> {
        self.cells.iter().map(|(&c, s)| (c, s))
    }

    /// Every item ending at column `i`, with its row.
    pub fn column(&self, i: usize) -> impl Iterator<Item = (usize, &I)> {
        (0..=i).flat_map(move |j| self.cell(j, i).map(move |it| (j, it)))
    }

    pub fn item_count(&self) -> usize {
        self.cells.values().map(BTreeSet::len).sum()
    }

    pub fn is_column_complete(&self, i: usize) -> bool {
        i < self.complete_columns
    }

    fn insert(&mut self, cell: Cell, item: I) -> bool {
        debug_assert!(cell.0 <= cell.1 && cell.1 <= self.n);
        self.cells.entry(cell).or_default().insert(item)
    }

    fn sorted_cell(&self, g: &AugmentedGrammar, j: usize, i: usize) -> Vec<&I> {
        let mut items: Vec<&I> = self.cell(j, i).collect();
        items.sort_by_cached_key(|it| it.sort_key(g));
        items
    }

    /// The chart dump: a header line, then one line per nonempty cell.
    ///
    /// ```text
    /// n=3 algo=cp accepted=true
    /// T[0,0]: [->]
    /// T[0,1]: [-> 'a'], [-> E], [-> F], [-> T]
    /// ```
    pub fn dump(&self, g: &AugmentedGrammar, algo: &str, accepted: bool) -> String {
        let mut out = format!("n={} algo={} accepted={}\n", self.n, algo, accepted);
        for &(j, i) in self.cells.keys() {
            let items: Vec<String> = self
                .sorted_cell(g, j, i)
                .into_iter()
                .map(|it| it.render(g))
                .collect();
            out.push_str(&format!("T[{j},{i}]: {}\n", items.join(", ")));
        }
        out
    }

    /// Every cell `(j, i)` with `j < i`, plus `(0, 0)`, row by row, with `∅`
    /// for empty cells.
    pub fn render_table(&self, g: &AugmentedGrammar) -> String {
        let mut out = String::new();
        for j in 0..=self.n {
            let first = if j == 0 { 0 } else { j + 1 };
            for i in first..=self.n {
                let items: Vec<String> = self
                    .sorted_cell(g, j, i)
                    .into_iter()
                    .map(|it| it.render(g))
                    .collect();
                let body = if items.is_empty() {
                    "∅".to_string()
                } else {
                    items.join(" ")
                };
                out.push_str(&format!("T[{j},{i}] {body}\n"));
            }
        }
        out
    }
}

/// One clause instance that added an item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance<I> {
    /// 1..=4, or 0 for the initial item.
    pub clause: u8,
    pub cell: Cell,
    pub item: I,
    pub antecedents: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictSet {
    pub i: usize,
    pub nonterminals: NtSet,
}

#[derive(Debug, Clone)]
pub struct ChartResult<I> {
    pub algorithm: &'static str,
    pub chart: Chart<I>,
    pub accepted: bool,
    pub items_added: usize,
    pub provenance: Vec<Provenance<I>>,
    /// `S_0..S_n`, filled by the predict-set variant only.
    pub predict_sets: Vec<PredictSet>,
}

impl<I: ChartItem> ChartResult<I> {
    pub fn dump(&self, g: &AugmentedGrammar) -> String {
        self.chart.dump(g, self.algorithm, self.accepted)
    }
}

impl ChartResult<ElrItem> {
    /// Cells holding two or more items with the same prefix.
    pub fn duplicate_prefix_cells(&self) -> Vec<Cell> {
        self.chart
            .cells()
            .filter(|(_, items)| {
                let prefixes: BTreeSet<PrefixId> = items.iter().map(|it| it.prefix).collect();
                prefixes.len() < items.len()
            })
            .map(|(c, _)| c)
            .collect()
    }
}

/// Order in which agenda entries are taken. The fixpoint does not depend on
/// it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AgendaOrder {
    #[default]
    Fifo,
    Lifo,
    Shuffled(u64),
}

struct Agenda<T> {
    items: VecDeque<T>,
    order: AgendaOrder,
    rng: Option<ChaCha8Rng>,
}

impl<T> Agenda<T> {
    fn new(order: AgendaOrder) -> Self {
        let rng = match order {
            AgendaOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Agenda {
            items: VecDeque::new(),
            order,
            rng,
        }
    }

    fn push(&mut self, x: T) {
        self.items.push_back(x);
    }

    fn pop(&mut self) -> Option<T> {
        match self.order {
            AgendaOrder::Fifo => self.items.pop_front(),
            AgendaOrder::Lifo => self.items.pop_back(),
            AgendaOrder::Shuffled(_) => {
                if self.items.is_empty() {
                    return None;
                }
                let k = self.rng.as_mut().unwrap().gen_range(0..self.items.len());
                self.items.swap_remove_back(k)
            }
        }
    }
}

struct Builder<I> {
    chart: Chart<I>,
    provenance: Vec<Provenance<I>>,
}

impl<I: ChartItem> Builder<I> {
    fn new(n: usize) -> Self {
        Builder {
            chart: Chart::new(n),
            provenance: Vec::new(),
        }
    }

    fn add(&mut self, clause: u8, cell: Cell, item: I, antecedents: Vec<Cell>) -> bool {
        if !self.chart.insert(cell, item.clone()) {
            return false;
        }
        self.provenance.push(Provenance {
            clause,
            cell,
            item,
            antecedents,
        });
        true
    }

    fn finish(self, algorithm: &'static str, accepted: bool, predict_sets: Vec<PredictSet>) -> ChartResult<I> {
        ChartResult {
            algorithm,
            items_added: self.chart.item_count(),
            chart: self.chart,
            accepted,
            provenance: self.provenance,
            predict_sets,
        }
    }
}

impl Builder<ElrItem> {
    /// Adds `[Δ -> α]` to `cell`, folding it into an item `[Δ0 -> α]` already
    /// there. Returns the item that now needs processing, if any.
    fn add_merging(&mut self, clause: u8, cell: Cell, item: ElrItem, antecedents: Vec<Cell>) -> Option<ElrItem> {
        let existing = self
            .chart
            .cell(cell.0, cell.1)
            .find(|it| it.prefix == item.prefix)
            .cloned();
        let Some(old) = existing else {
            return self.add(clause, cell, item.clone(), antecedents).then_some(item);
        };
        if item.delta.is_subset(&old.delta) {
            return None;
        }
        let mut delta = old.delta.clone();
        delta.extend_from(&item.delta);
        let merged = ElrItem {
            delta,
            prefix: item.prefix,
        };
        self.chart.cells.get_mut(&cell).unwrap().remove(&old);
        self.add(clause, cell, merged.clone(), antecedents);
        Some(merged)
    }
}

// ---------------------------------------------------------------------------
// Tabular CP

/// Tabular common-prefix recognition; `td_filter = false` selects the
/// variant whose clauses 1 and 3 ignore the left-corner relation.
pub fn tabular_cp<S: AsRef<str>>(
    g: &AugmentedGrammar,
    input: &[S],
    td_filter: bool,
) -> Result<ChartResult<CpItem>> {
    let input = g.tokenize(input)?;
    Ok(tabular_cp_ordered(g, &input, td_filter, AgendaOrder::Fifo))
}

fn cp_name(td_filter: bool) -> &'static str {
    if td_filter {
        "cp"
    } else {
        "cp-nofilter"
    }
}

fn cp_accepted(g: &AugmentedGrammar, chart: &Chart<CpItem>) -> bool {
    let fin = CpItem {
        prefix: g.find_prefix(&[Sym::N(g.start())]).unwrap(),
    };
    chart.contains(0, chart.n(), &fin)
}

/// Whether some `B -> βCγ ∈ P†` has `D ∠* C` for a `D` in `lhs`.
fn cp_filter_admits(g: &AugmentedGrammar, lhs: &NtSet, beta: PrefixId) -> bool {
    lhs.intersects(&g.predicted_after(beta, None))
}

pub fn tabular_cp_ordered(
    g: &AugmentedGrammar,
    input: &[Term],
    td_filter: bool,
    order: AgendaOrder,
) -> ChartResult<CpItem> {
    let n = input.len();
    let mut b = Builder::new(n);
    let mut agenda = Agenda::new(order);
    // processed[j][i]: items of T[j,i] already combined with their partners
    let mut processed: Vec<Vec<Vec<CpItem>>> = vec![vec![Vec::new(); n + 1]; n + 1];

    let empty = CpItem {
        prefix: PrefixId::EMPTY,
    };
    b.add(0, (0, 0), empty, vec![]);
    agenda.push(((0, 0), empty));
    if !td_filter {
        for (i, &a) in input.iter().enumerate() {
            if let Some(prefix) = g.extend_prefix(PrefixId::EMPTY, Sym::T(a)) {
                let item = CpItem { prefix };
                if b.add(1, (i, i + 1), item, vec![]) {
                    agenda.push(((i, i + 1), item));
                }
            }
        }
    }

    while let Some(((p, q), x)) = agenda.pop() {
        processed[p][q].push(x);
        let mut found: Vec<(u8, Cell, CpItem, Vec<Cell>)> = Vec::new();

        if q < n {
            let a = input[q];
            // 1: x as [-> β] in T[j, i-1]
            if td_filter && cp_filter_admits(g, &g.lhs_starting_with(Sym::T(a)), x.prefix) {
                let prefix = g.extend_prefix(PrefixId::EMPTY, Sym::T(a)).unwrap();
                found.push((1, (q, q + 1), CpItem { prefix }, vec![(p, q)]));
            }
            // 2
            if let Some(prefix) = g.extend_prefix(x.prefix, Sym::T(a)) {
                found.push((2, (p, q + 1), CpItem { prefix }, vec![(p, q)]));
            }
        }

        // x as [-> α] in T[j, i] with j = p, i = q
        for &a in g.completed_by(x.prefix) {
            let starts_with_a = g.lhs_starting_with(Sym::N(a));
            let single = g.extend_prefix(PrefixId::EMPTY, Sym::N(a));
            if !td_filter && !starts_with_a.is_empty() {
                found.push((3, (p, q), CpItem { prefix: single.unwrap() }, vec![(p, q)]));
            }
            for h in 0..=p {
                for beta in &processed[h][p] {
                    if td_filter && cp_filter_admits(g, &starts_with_a, beta.prefix) {
                        found.push((3, (p, q), CpItem { prefix: single.unwrap() }, vec![(p, q), (h, p)]));
                    }
                    if let Some(prefix) = g.extend_prefix(beta.prefix, Sym::N(a)) {
                        found.push((4, (h, q), CpItem { prefix }, vec![(p, q), (h, p)]));
                    }
                }
            }
        }

        // x as [-> β] in T[h, j] with h = p, j = q
        for i in q..=n {
            for alpha in &processed[q][i] {
                for &a in g.completed_by(alpha.prefix) {
                    if td_filter && cp_filter_admits(g, &g.lhs_starting_with(Sym::N(a)), x.prefix) {
                        let prefix = g.extend_prefix(PrefixId::EMPTY, Sym::N(a)).unwrap();
                        found.push((3, (q, i), CpItem { prefix }, vec![(q, i), (p, q)]));
                    }
                    if let Some(prefix) = g.extend_prefix(x.prefix, Sym::N(a)) {
                        found.push((4, (p, i), CpItem { prefix }, vec![(q, i), (p, q)]));
                    }
                }
            }
        }

        for (clause, cell, item, ante) in found {
            if b.add(clause, cell, item, ante) {
                agenda.push((cell, item));
            }
        }
    }

    let accepted = cp_accepted(g, &b.chart);
    b.chart.complete_columns = n + 1;
    b.finish(cp_name(td_filter), accepted, Vec::new())
}

/// The unfiltered CP chart computed one row at a time, from row `n` down to
/// row 0. While row `r` is computed only rows `>= r` are read, which is
/// asserted on every access.
pub fn tabular_cp_by_rows(g: &AugmentedGrammar, input: &[Term]) -> ChartResult<CpItem> {
    let n = input.len();
    let mut b: Builder<CpItem> = Builder::new(n);

    let read = |chart: &Chart<CpItem>, r: usize, j: usize, i: usize| -> Vec<CpItem> {
        assert!(j >= r, "row {r} read row {j}");
        chart.cell(j, i).copied().collect()
    };

    for r in (0..=n).rev() {
        let mut agenda: VecDeque<(Cell, CpItem)> = VecDeque::new();
        if r == 0 {
            let empty = CpItem {
                prefix: PrefixId::EMPTY,
            };
            b.add(0, (0, 0), empty, vec![]);
            agenda.push_back(((0, 0), empty));
        }
        if r < n {
            if let Some(prefix) = g.extend_prefix(PrefixId::EMPTY, Sym::T(input[r])) {
                let item = CpItem { prefix };
                b.add(1, (r, r + 1), item, vec![]);
                agenda.push_back(((r, r + 1), item));
            }
        }
        let mut processed: Vec<Vec<CpItem>> = vec![Vec::new(); n + 1];

        while let Some(((p, q), x)) = agenda.pop_front() {
            debug_assert_eq!(p, r);
            processed[q].push(x);
            let mut found: Vec<(u8, Cell, CpItem, Vec<Cell>)> = Vec::new();
            if q < n {
                if let Some(prefix) = g.extend_prefix(x.prefix, Sym::T(input[q])) {
                    found.push((2, (r, q + 1), CpItem { prefix }, vec![(r, q)]));
                }
            }
            // x as [-> α]
            for &a in g.completed_by(x.prefix) {
                if !g.lhs_starting_with(Sym::N(a)).is_empty() {
                    let prefix = g.extend_prefix(PrefixId::EMPTY, Sym::N(a)).unwrap();
                    found.push((3, (r, q), CpItem { prefix }, vec![(r, q)]));
                }
                // partner [-> β] in T[h, r] with h <= r: only h = r is allowed,
                // and T[r, r] is empty unless r = 0
                if r == 0 {
                    for beta in processed[0].clone() {
                        if let Some(prefix) = g.extend_prefix(beta.prefix, Sym::N(a)) {
                            found.push((4, (0, q), CpItem { prefix }, vec![(r, q), (0, 0)]));
                        }
                    }
                }
            }
            // x as [-> β] in T[r, q]; partners [-> α] in T[q, i]
            for i in q..=n {
                let partners = if q == r {
                    processed[i].clone()
                } else {
                    read(&b.chart, r, q, i)
                };
                for alpha in partners {
                    for &a in g.completed_by(alpha.prefix) {
                        if let Some(prefix) = g.extend_prefix(x.prefix, Sym::N(a)) {
                            found.push((4, (r, i), CpItem { prefix }, vec![(q, i), (r, q)]));
                        }
                    }
                }
            }
            for (clause, cell, item, ante) in found {
                if b.add(clause, cell, item, ante) {
                    agenda.push_back((cell, item));
                }
            }
        }
    }

    let accepted = cp_accepted(g, &b.chart);
    b.chart.complete_columns = n + 1;
    b.finish("cp-nofilter", accepted, Vec::new())
}

// ---------------------------------------------------------------------------
// Tabular ELR

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElrVariant {
    Merged,
    PredictSets,
    Naive,
}

impl ElrVariant {
    pub const ALL: [ElrVariant; 3] = [ElrVariant::Merged, ElrVariant::PredictSets, ElrVariant::Naive];

    pub fn name(self) -> &'static str {
        match self {
            ElrVariant::Merged => "elr",
            ElrVariant::PredictSets => "elr-si",
            ElrVariant::Naive => "elr-naive",
        }
    }
}

pub fn tabular_elr<S: AsRef<str>>(
    g: &AugmentedGrammar,
    input: &[S],
    variant: ElrVariant,
) -> Result<ChartResult<ElrItem>> {
    let input = g.tokenize(input)?;
    Ok(tabular_elr_ordered(g, &input, variant, AgendaOrder::Fifo))
}

/// `S_i`: every `D` with `D ∠* C` for some `C` expected after an item of
/// column `i`.
pub fn predict_set(chart: &Chart<ElrItem>, g: &AugmentedGrammar, i: usize) -> Result<PredictSet> {
    if !chart.is_column_complete(i) {
        return Err(Error::ColumnIncomplete { column: i });
    }
    let mut nonterminals = NtSet::new();
    for (_, it) in chart.column(i) {
        nonterminals.extend_from(&g.predicted_after(it.prefix, Some(&it.delta)));
    }
    Ok(PredictSet { i, nonterminals })
}

pub fn tabular_elr_ordered(
    g: &AugmentedGrammar,
    input: &[Term],
    variant: ElrVariant,
    order: AgendaOrder,
) -> ChartResult<ElrItem> {
    let n = input.len();
    let mut b: Builder<ElrItem> = Builder::new(n);
    let mut predict_sets = Vec::new();

    let init = ElrItem {
        delta: NtSet::singleton(g.start_prime()),
        prefix: PrefixId::EMPTY,
    };
    b.add(0, (0, 0), init, vec![]);
    b.chart.complete_columns = 1;
    if variant == ElrVariant::PredictSets {
        predict_sets.push(predict_set(&b.chart, g, 0).expect("column 0 is complete"));
    }

    for i in 1..=n {
        let a = input[i - 1];
        let mut agenda = Agenda::new(order);
        let starts_with_a = g.lhs_starting_with(Sym::T(a));
        let single_a = g.extend_prefix(PrefixId::EMPTY, Sym::T(a));
        let mut found: Vec<(u8, Cell, ElrItem, Vec<Cell>)> = Vec::new();

        // 1
        if let Some(prefix) = single_a {
            match variant {
                ElrVariant::Merged => {
                    let mut delta = NtSet::new();
                    let mut ante = BTreeSet::new();
                    for (j, it) in b.chart.column(i - 1) {
                        let d = starts_with_a.intersection(&g.predicted_after(it.prefix, Some(&it.delta)));
                        if !d.is_empty() {
                            ante.insert((j, i - 1));
                            delta.extend_from(&d);
                        }
                    }
                    if !delta.is_empty() {
                        found.push((1, (i - 1, i), ElrItem { delta, prefix }, ante.into_iter().collect()));
                    }
                }
                ElrVariant::PredictSets => {
                    let delta = starts_with_a.intersection(&predict_sets[i - 1].nonterminals);
                    if !delta.is_empty() {
                        found.push((1, (i - 1, i), ElrItem { delta, prefix }, vec![]));
                    }
                }
                ElrVariant::Naive => {
                    for (j, it) in b.chart.column(i - 1) {
                        let delta = starts_with_a.intersection(&g.predicted_after(it.prefix, Some(&it.delta)));
                        if !delta.is_empty() {
                            found.push((1, (i - 1, i), ElrItem { delta, prefix }, vec![(j, i - 1)]));
                        }
                    }
                }
            }
        }

        // 2
        for (j, it) in b.chart.column(i - 1) {
            if let Some(child) = g.extend_prefix(it.prefix, Sym::T(a)) {
                let delta = it.delta.intersection(g.lhs_with_prefix(child));
                if !delta.is_empty() {
                    found.push((2, (j, i), ElrItem { delta, prefix: child }, vec![(j, i - 1)]));
                }
            }
        }

        let store = |b: &mut Builder<ElrItem>, agenda: &mut Agenda<(Cell, ElrItem)>, found: &mut Vec<_>| {
            for (clause, cell, item, ante) in found.drain(..) {
                let fresh = if variant == ElrVariant::Naive {
                    let item: ElrItem = item;
                    b.add(clause, cell, item.clone(), ante).then_some(item)
                } else {
                    b.add_merging(clause, cell, item, ante)
                };
                if let Some(item) = fresh {
                    agenda.push((cell, item));
                }
            }
        };
        store(&mut b, &mut agenda, &mut found);

        while let Some(((j, i2), x)) = agenda.pop() {
            debug_assert!(j < i && i2 == i);
            if !b.chart.contains(j, i, &x) {
                // superseded by a merged item, which is on the agenda too
                continue;
            }
            for &a in g.completed_by(x.prefix) {
                if !x.delta.contains(a) {
                    continue;
                }
                let starts_with = g.lhs_starting_with(Sym::N(a));
                let single = g.extend_prefix(PrefixId::EMPTY, Sym::N(a));

                // 3
                if let Some(prefix) = single {
                    match variant {
                        ElrVariant::Merged => {
                            let mut delta = NtSet::new();
                            let mut ante = vec![(j, i)];
                            for (h, beta) in b.chart.column(j) {
                                let d = starts_with.intersection(&g.predicted_after(beta.prefix, Some(&beta.delta)));
                                if !d.is_empty() {
                                    if !ante.contains(&(h, j)) {
                                        ante.push((h, j));
                                    }
                                    delta.extend_from(&d);
                                }
                            }
                            if !delta.is_empty() {
                                found.push((3, (j, i), ElrItem { delta, prefix }, ante));
                            }
                        }
                        ElrVariant::PredictSets => {
                            let delta = starts_with.intersection(&predict_sets[j].nonterminals);
                            if !delta.is_empty() {
                                found.push((3, (j, i), ElrItem { delta, prefix }, vec![(j, i)]));
                            }
                        }
                        ElrVariant::Naive => {
                            for (h, beta) in b.chart.column(j) {
                                let delta = starts_with.intersection(&g.predicted_after(beta.prefix, Some(&beta.delta)));
                                if !delta.is_empty() {
                                    found.push((3, (j, i), ElrItem { delta, prefix }, vec![(j, i), (h, j)]));
                                }
                            }
                        }
                    }
                }

                // 4
                for (h, beta) in b.chart.column(j) {
                    if let Some(child) = g.extend_prefix(beta.prefix, Sym::N(a)) {
                        let delta = beta.delta.intersection(g.lhs_with_prefix(child));
                        if !delta.is_empty() {
                            found.push((4, (h, i), ElrItem { delta, prefix: child }, vec![(j, i), (h, j)]));
                        }
                    }
                }
            }
            store(&mut b, &mut agenda, &mut found);
        }

        b.chart.complete_columns = i + 1;
        if variant == ElrVariant::PredictSets {
            predict_sets.push(predict_set(&b.chart, g, i).expect("column just completed"));
        }
    }

    // `[{S'} -> S]`, possibly folded into a larger set
    let fin = g.find_prefix(&[Sym::N(g.start())]).unwrap();
    let accepted = b
        .chart
        .cell(0, n)
        .any(|it| it.prefix == fin && it.delta.contains(g.start_prime()));
    b.finish(variant.name(), accepted, predict_sets)
}
