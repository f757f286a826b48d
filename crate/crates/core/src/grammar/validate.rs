use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{Grammar, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagnosticCode {
    EpsilonRule,
    UnitCycle,
    UndeclaredSymbol,
    StartMissing,
    UnreachableNonterminal,
    UnproductiveNonterminal,
}

impl DiagnosticCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticCode::EpsilonRule => "EPSILON_RULE",
            DiagnosticCode::UnitCycle => "UNIT_CYCLE",
            DiagnosticCode::UndeclaredSymbol => "UNDECLARED_SYMBOL",
            DiagnosticCode::StartMissing => "START_MISSING",
            DiagnosticCode::UnreachableNonterminal => "UNREACHABLE_NONTERMINAL",
            DiagnosticCode::UnproductiveNonterminal => "UNPRODUCTIVE_NONTERMINAL",
        }
    }

    /// Unreachable and unproductive nonterminals leave every algorithm
    /// well-defined, so they only warn.
    pub fn is_error(self) -> bool {
        !matches!(
            self,
            DiagnosticCode::UnreachableNonterminal | DiagnosticCode::UnproductiveNonterminal
        )
    }
}

impl fmt::Display for DiagnosticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub message: String,
    /// The offending rule or symbol(s), rendered as text.
    pub subject: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.code, self.message, self.subject)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub diagnostics: Vec<Diagnostic>,
}

impl ValidationReport {
    pub fn has(&self, code: DiagnosticCode) -> bool {
        self.diagnostics.iter().any(|d| d.code == code)
    }

    pub fn errors(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| d.code.is_error())
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| !d.code.is_error())
    }
}

pub fn validate(g: &Grammar) -> ValidationReport {
    let mut diagnostics = Vec::new();
    let mut push = |code, message: String, subject: String| {
        diagnostics.push(Diagnostic {
            code,
            message,
            subject,
        })
    };

    if !g.nonterminals.contains(&g.start) {
        push(
            DiagnosticCode::StartMissing,
            "start symbol is not a declared nonterminal".into(),
            g.start.clone(),
        );
    }

    for name in g.terminals.intersection(&g.nonterminals) {
        push(
            DiagnosticCode::UndeclaredSymbol,
            "symbol declared as both terminal and nonterminal".into(),
            name.clone(),
        );
    }
    for name in g.terminals.iter().chain(&g.nonterminals) {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            push(
                DiagnosticCode::UndeclaredSymbol,
                "symbol name must be nonempty without whitespace".into(),
                format!("{name:?}"),
            );
        }
    }

    for rule in &g.rules {
        if rule.rhs.is_empty() {
            push(
                DiagnosticCode::EpsilonRule,
                "rule has an empty right-hand side".into(),
                rule.to_string(),
            );
        }
        if !g.nonterminals.contains(&rule.lhs) {
            push(
                DiagnosticCode::UndeclaredSymbol,
                format!("left-hand side `{}` is not a declared nonterminal", rule.lhs),
                rule.to_string(),
            );
        }
        for sym in &rule.rhs {
            let declared = match sym {
                Symbol::Terminal(t) => g.terminals.contains(t),
                Symbol::Nonterminal(n) => g.nonterminals.contains(n),
            };
            if !declared {
                push(
                    DiagnosticCode::UndeclaredSymbol,
                    format!("symbol {sym} is not declared"),
                    rule.to_string(),
                );
            }
        }
    }

    for cycle in unit_cycles(g) {
        let names: Vec<&str> = cycle.iter().map(String::as_str).collect();
        push(
            DiagnosticCode::UnitCycle,
            "nonterminals derive themselves through unit rules".into(),
            format!("{{{}}}", names.join(", ")),
        );
    }

    if g.nonterminals.contains(&g.start) {
        let reachable = reachable_nonterminals(g);
        for name in g.nonterminals.difference(&reachable) {
            push(
                DiagnosticCode::UnreachableNonterminal,
                "nonterminal is not reachable from the start symbol".into(),
                name.clone(),
            );
        }
    }

    let productive = productive_nonterminals(g);
    for name in g.nonterminals.difference(&productive) {
        push(
            DiagnosticCode::UnproductiveNonterminal,
            "nonterminal derives no terminal string".into(),
            name.clone(),
        );
    }

    let ok = diagnostics.iter().all(|d| !d.code.is_error());
    ValidationReport { ok, diagnostics }
}

/// Groups of nonterminals `A` with `A =>+ A` through unit rules, each group
/// one strongly connected component of the unit-rule graph.
pub(crate) fn unit_cycles(g: &Grammar) -> Vec<BTreeSet<String>> {
    let mut edges: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    for rule in &g.rules {
        if let [Symbol::Nonterminal(b)] = rule.rhs.as_slice() {
            edges.entry(&rule.lhs).or_default().insert(b);
        }
    }
    let reach = |from: &str| -> BTreeSet<&str> {
        let mut seen = BTreeSet::new();
        let mut stack: Vec<&str> = edges.get(from).into_iter().flatten().copied().collect();
        while let Some(n) = stack.pop() {
            if seen.insert(n) {
                stack.extend(edges.get(n).into_iter().flatten().copied());
            }
        }
        seen
    };
    let closure: BTreeMap<&str, BTreeSet<&str>> =
        edges.keys().map(|&a| (a, reach(a))).collect();

    let mut cycles = Vec::new();
    let mut assigned = BTreeSet::new();
    for (&a, reached) in &closure {
        if !reached.contains(a) || assigned.contains(a) {
            continue;
        }
        let group: BTreeSet<String> = reached
            .iter()
            .filter(|&&b| closure.get(b).is_some_and(|r| r.contains(a)))
            .map(|b| b.to_string())
            .collect();
        assigned.extend(group.iter().cloned());
        cycles.push(group);
    }
    cycles
}

pub(crate) fn reachable_nonterminals(g: &Grammar) -> BTreeSet<String> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![g.start.clone()];
    while let Some(a) = stack.pop() {
        if !seen.insert(a.clone()) {
            continue;
        }
        for rule in g.rules_for(&a) {
            for sym in &rule.rhs {
                if let Symbol::Nonterminal(b) = sym {
                    if !seen.contains(b) {
                        stack.push(b.clone());
                    }
                }
            }
        }
    }
    seen.retain(|a| g.nonterminals.contains(a));
    seen
}

pub(crate) fn productive_nonterminals(g: &Grammar) -> BTreeSet<String> {
    let mut productive = BTreeSet::new();
    loop {
        let before = productive.len();
        for rule in &g.rules {
            if productive.contains(&rule.lhs) {
                continue;
            }
            let all = rule.rhs.iter().all(|s| match s {
                Symbol::Terminal(_) => true,
                Symbol::Nonterminal(n) => productive.contains(n),
            });
            if all {
                productive.insert(rule.lhs.clone());
            }
        }
        if productive.len() == before {
            return productive;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{parse_grammar, Rule};

    #[test]
    fn unit_cycle_is_rejected() {
        let g = parse_grammar("start S\nS -> A | 'a'\nA -> S").unwrap();
        let report = validate(&g);
        assert!(!report.ok);
        let cycle: Vec<_> = report
            .diagnostics
            .iter()
            .filter(|d| d.code == DiagnosticCode::UnitCycle)
            .collect();
        assert_eq!(cycle.len(), 1);
        assert_eq!(cycle[0].subject, "{A, S}");
    }

    #[test]
    fn self_loop_is_a_cycle() {
        let g = parse_grammar("start S\nS -> S | 'a'").unwrap();
        assert!(validate(&g).has(DiagnosticCode::UnitCycle));
    }

    #[test]
    fn undeclared_terminal() {
        let mut g = parse_grammar("start S\nS -> 'a' 'b'").unwrap();
        g.terminals.remove("b");
        let report = validate(&g);
        assert!(!report.ok);
        assert!(report.has(DiagnosticCode::UndeclaredSymbol));
    }

    #[test]
    fn undeclared_nonterminal_from_source() {
        let g = parse_grammar("start S\nS -> 'a' X").unwrap();
        let report = validate(&g);
        assert!(!report.ok);
        assert!(report.has(DiagnosticCode::UndeclaredSymbol));
    }

    #[test]
    fn epsilon_rule_from_api() {
        let g = Grammar::from_rules(
            "S",
            vec![
                Rule::new("S", vec![]),
                Rule::new("S", vec![Symbol::terminal("a")]),
            ],
        );
        let report = validate(&g);
        assert!(!report.ok);
        assert!(report.has(DiagnosticCode::EpsilonRule));
    }

    #[test]
    fn start_missing() {
        let g = parse_grammar("start X\nS -> 'a'").unwrap();
        let report = validate(&g);
        assert!(!report.ok);
        assert!(report.has(DiagnosticCode::StartMissing));
    }

    #[test]
    fn warnings_do_not_fail() {
        let g = parse_grammar("start S\nS -> 'a'\nU -> 'b'\nV -> V 'c'\nS -> 'x' V").unwrap();
        let report = validate(&g);
        assert!(report.ok, "{report:?}");
        assert!(report.has(DiagnosticCode::UnreachableNonterminal));
        assert!(report.has(DiagnosticCode::UnproductiveNonterminal));
        let unreachable: Vec<_> = report
            .warnings()
            .filter(|d| d.code == DiagnosticCode::UnreachableNonterminal)
            .map(|d| d.subject.as_str())
            .collect();
        assert_eq!(unreachable, ["U"]);
    }
}
