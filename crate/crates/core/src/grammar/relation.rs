use super::{AugmentedGrammar, Nt, NtSet, Production, Sym};

/// A binary relation over the nonterminals of one augmented grammar, stored
/// as `corners[a] = {b | (b, a) ∈ R}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    corners: Vec<NtSet>,
}

impl Relation {
    pub fn empty(nt_count: usize) -> Self {
        Relation {
            corners: vec![NtSet::new(); nt_count],
        }
    }

    pub fn from_pairs(nt_count: usize, pairs: impl IntoIterator<Item = (Nt, Nt)>) -> Self {
        let mut r = Relation::empty(nt_count);
        for (b, a) in pairs {
            r.insert(b, a);
        }
        r
    }

    pub fn insert(&mut self, b: Nt, a: Nt) -> bool {
        self.corners[a.index()].insert(b)
    }

    /// Whether `(b, a)` is in the relation, i.e. `b ∠ a` for the left-corner
    /// relation.
    pub fn contains(&self, b: Nt, a: Nt) -> bool {
        self.corners
            .get(a.index())
            .is_some_and(|set| set.contains(b))
    }

    /// `{b | (b, a) ∈ R}`.
    pub fn corners_of(&self, a: Nt) -> &NtSet {
        &self.corners[a.index()]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Nt, Nt)> + '_ {
        self.corners
            .iter()
            .enumerate()
            .flat_map(|(a, set)| set.iter().map(move |b| (b, Nt(a as u32))))
    }

    pub fn len(&self) -> usize {
        self.corners.iter().map(NtSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn nt_count(&self) -> usize {
        self.corners.len()
    }

    /// `"B < A"` lines sorted by name.
    pub fn render(&self, g: &AugmentedGrammar) -> Vec<String> {
        let mut lines: Vec<(String, String)> = self
            .pairs()
            .map(|(b, a)| (g.nt_name(b).to_string(), g.nt_name(a).to_string()))
            .collect();
        lines.sort();
        lines.into_iter().map(|(b, a)| format!("{b} < {a}")).collect()
    }
}

pub(crate) fn left_corner_pairs(productions: &[Production]) -> Vec<(Nt, Nt)> {
    productions
        .iter()
        .filter_map(|p| match p.rhs.first() {
            Some(Sym::N(b)) => Some((*b, p.lhs)),
            _ => None,
        })
        .collect()
}

/// Reflexive-transitive closure by Warshall's algorithm.
pub(crate) fn closure_of(r: &Relation) -> Relation {
    let n = r.nt_count();
    let mut reach = vec![vec![false; n]; n];
    for (b, a) in r.pairs() {
        reach[b.index()][a.index()] = true;
    }
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if !reach[i][k] {
                continue;
            }
            for j in 0..n {
                if reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let mut out = Relation::empty(n);
    for (b, row) in reach.iter().enumerate() {
        for (a, &hit) in row.iter().enumerate() {
            if hit {
                out.insert(Nt(b as u32), Nt(a as u32));
            }
        }
    }
    out
}

/// `∠`: `(B, A)` for every rule `A -> Bα` of `P†` whose first symbol is a
/// nonterminal.
pub fn left_corner(g: &AugmentedGrammar) -> Relation {
    Relation::from_pairs(g.nonterminal_count(), left_corner_pairs(g.productions()))
}

/// `∠*`: the smallest reflexive (over every nonterminal of `g`, `S'`
/// included) and transitive relation containing `r`.
pub fn left_corner_star(r: &Relation, g: &AugmentedGrammar) -> Relation {
    debug_assert_eq!(r.nt_count(), g.nonterminal_count());
    closure_of(r)
}

/// Two rules of `P†` sharing a nonempty right-hand-side prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonPrefix {
    /// Indices into [`AugmentedGrammar::productions`], `first < second`.
    pub first: usize,
    pub second: usize,
    /// The longest common prefix.
    pub prefix: Vec<Sym>,
}

pub fn common_prefix_pairs(g: &AugmentedGrammar) -> Vec<CommonPrefix> {
    let prods = g.productions();
    let mut out = Vec::new();
    for (i, p) in prods.iter().enumerate() {
        for (j, q) in prods.iter().enumerate().skip(i + 1) {
            let len = p
                .rhs
                .iter()
                .zip(&q.rhs)
                .take_while(|(x, y)| x == y)
                .count();
            if len > 0 {
                out.push(CommonPrefix {
                    first: i,
                    second: j,
                    prefix: p.rhs[..len].to_vec(),
                });
            }
        }
    }
    out
}
