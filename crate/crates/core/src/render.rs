//! Text forms of items, stacks and trace lines, and a parser that reads them
//! back.
//!
//! ```text
//! LC    [T -> T • '*' F]
//! PLR   [T -> T '*']        [E' ->]
//! ELR   [{E,T} -> T]        [{E'} ->]
//! CP    [-> E '+']          [->]
//! trace 3. [clause 3] [E' -> • E][T -> T • '*' F] | * a
//! ```
//!
//! Terminals are quoted as in grammar files; sets of nonterminals are sorted
//! by name.

use crate::automata::{Algorithm, Configuration, Trace, TraceStep};
use crate::error::{Error, Result};
use crate::grammar::{AugmentedGrammar, NtSet, Sym, Term};
use crate::items::{CpItem, ElrItem, Item, ItemKind, LcItem, PlrItem};

pub const DOT: &str = "•";

fn arrow_rhs(syms: &str) -> String {
    if syms.is_empty() {
        "->".to_string()
    } else {
        format!("-> {syms}")
    }
}

pub fn render_lc(g: &AugmentedGrammar, it: &LcItem) -> String {
    let mut parts: Vec<String> = it.alpha(g).iter().map(|&s| g.render_sym(s)).collect();
    parts.push(DOT.to_string());
    parts.extend(it.beta(g).iter().map(|&s| g.render_sym(s)));
    format!("[{} -> {}]", g.nt_name(it.lhs(g)), parts.join(" "))
}

pub fn render_item(g: &AugmentedGrammar, item: &Item) -> String {
    match item {
        Item::Lc(it) => render_lc(g, it),
        Item::Plr(it) => format!(
            "[{} {}]",
            g.nt_name(it.lhs),
            arrow_rhs(&g.render_syms(g.prefix_syms(it.prefix)))
        ),
        Item::Elr(it) => format!(
            "[{} {}]",
            g.render_nt_set(&it.delta),
            arrow_rhs(&g.render_syms(g.prefix_syms(it.prefix)))
        ),
        Item::Cp(it) => format!("[{}]", arrow_rhs(&g.render_syms(g.prefix_syms(it.prefix)))),
    }
}

pub fn render_stack(g: &AugmentedGrammar, stack: &[Item]) -> String {
    stack.iter().map(|it| render_item(g, it)).collect()
}

fn render_remaining(g: &AugmentedGrammar, rest: &[Term]) -> String {
    rest.iter()
        .map(|&t| g.t_name(t))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `"<step>. [clause <k>] <stack> | <remaining tokens>"`; the initial
/// configuration is labelled `[init]`.
pub fn render_trace_line(g: &AugmentedGrammar, input: &[Term], step: usize, s: &TraceStep) -> String {
    let label = match s.clause {
        Some(k) => format!("[clause {k}]"),
        None => "[init]".to_string(),
    };
    let stack = render_stack(g, &s.config.stack);
    let rest = render_remaining(g, &input[s.config.pos.min(input.len())..]);
    if rest.is_empty() {
        format!("{step}. {label} {stack} |")
    } else {
        format!("{step}. {label} {stack} | {rest}")
    }
}

pub fn render_trace(g: &AugmentedGrammar, input: &[Term], trace: &Trace) -> Vec<String> {
    trace
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| render_trace_line(g, input, i, s))
        .collect()
}

/// Reads a stack such as `[E' -> • E][F -> 'a' •]` back into items of
/// `kind`.
pub fn parse_stack(g: &AugmentedGrammar, kind: ItemKind, text: &str) -> Result<Vec<Item>> {
    split_items(text)?
        .into_iter()
        .map(|inner| parse_item_body(g, kind, inner))
        .collect()
}

pub fn parse_item(g: &AugmentedGrammar, kind: ItemKind, text: &str) -> Result<Item> {
    match split_items(text)?.as_slice() {
        [one] => parse_item_body(g, kind, one),
        _ => Err(bad("expected exactly one item")),
    }
}

/// Reads a trace line back into its step number, clause and configuration.
/// `n` is the length of the input the trace was produced for.
pub fn parse_trace_line(
    g: &AugmentedGrammar,
    algo: Algorithm,
    n: usize,
    line: &str,
) -> Result<(usize, Option<u8>, Configuration)> {
    let (step, rest) = line.split_once(". ").ok_or_else(|| bad("missing step number"))?;
    let step: usize = step.parse().map_err(|_| bad("bad step number"))?;
    let (clause, rest) = if let Some(rest) = rest.strip_prefix("[init] ") {
        (None, rest)
    } else {
        let rest = rest
            .strip_prefix("[clause ")
            .ok_or_else(|| bad("missing clause label"))?;
        let (k, rest) = rest.split_once("] ").ok_or_else(|| bad("bad clause label"))?;
        (Some(k.parse().map_err(|_| bad("bad clause id"))?), rest)
    };
    // terminals contain no whitespace, so the first "] |" ends the stack
    let end = rest
        .find("] |")
        .ok_or_else(|| bad("missing remaining-input separator"))?;
    let (stack, remaining) = (&rest[..=end], &rest[end + 3..]);
    let remaining = remaining.split_whitespace().count();
    if remaining > n {
        return Err(bad("more tokens remaining than input length"));
    }
    let stack = parse_stack(g, algo.item_kind(), stack)?;
    Ok((
        step,
        clause,
        Configuration {
            stack,
            pos: n - remaining,
        },
    ))
}

fn bad(message: &str) -> Error {
    Error::Syntax {
        line: 1,
        column: 1,
        message: message.to_string(),
    }
}

/// Splits `[..][..]` into item bodies, honouring quoted terminals. A quote
/// opens a terminal only at the start of a word, since primes may end
/// nonterminal names.
fn split_items(text: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth_start: Option<usize> = None;
    let mut in_quote = false;
    let mut prev = ' ';
    for (i, c) in text.char_indices() {
        let word_start = prev.is_whitespace();
        prev = c;
        match (c, in_quote, depth_start) {
            ('\'', true, Some(_)) => in_quote = false,
            ('\'', false, Some(_)) if word_start => in_quote = true,
            ('[', false, None) => depth_start = Some(i + 1),
            (']', false, Some(s)) => {
                out.push(&text[s..i]);
                depth_start = None;
            }
            (c, false, None) if c.is_whitespace() => {}
            (_, _, Some(_)) => {}
            _ => return Err(bad("unexpected character outside an item")),
        }
    }
    if depth_start.is_some() {
        return Err(bad("unterminated item"));
    }
    Ok(out)
}

fn parse_syms(g: &AugmentedGrammar, words: &[&str]) -> Result<Vec<Sym>> {
    words
        .iter()
        .map(|w| {
            let sym = match w.strip_prefix('\'').and_then(|w| w.strip_suffix('\'')) {
                Some(t) if !t.is_empty() => g.terminal(t).map(Sym::T),
                _ => g.nonterminal(w).map(Sym::N),
            };
            sym.ok_or_else(|| bad(&format!("unknown symbol `{w}`")))
        })
        .collect()
}

fn parse_item_body(g: &AugmentedGrammar, kind: ItemKind, body: &str) -> Result<Item> {
    let words: Vec<&str> = body.split_whitespace().collect();
    let arrow = words
        .iter()
        .position(|&w| w == "->")
        .ok_or_else(|| bad("missing `->`"))?;
    let head = &words[..arrow];
    let tail = &words[arrow + 1..];
    let invalid = || bad(&format!("not a valid {} item: [{body}]", kind.name()));
    match kind {
        ItemKind::Cp => {
            if !head.is_empty() {
                return Err(invalid());
            }
            let prefix = g.find_prefix(&parse_syms(g, tail)?).ok_or_else(invalid)?;
            Ok(Item::Cp(CpItem { prefix }))
        }
        ItemKind::Elr => {
            let [set] = head else { return Err(invalid()) };
            let names = set
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(invalid)?;
            let delta = names
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|n| g.nonterminal(n).ok_or_else(invalid))
                .collect::<Result<NtSet>>()?;
            let alpha = parse_syms(g, tail)?;
            ElrItem::new(g, delta, &alpha)
                .map(Item::Elr)
                .ok_or_else(invalid)
        }
        ItemKind::Plr => {
            let [lhs] = head else { return Err(invalid()) };
            let lhs = g.nonterminal(lhs).ok_or_else(invalid)?;
            let alpha = parse_syms(g, tail)?;
            PlrItem::new(g, lhs, &alpha)
                .map(Item::Plr)
                .ok_or_else(invalid)
        }
        ItemKind::Lc => {
            let [lhs] = head else { return Err(invalid()) };
            let lhs = g.nonterminal(lhs).ok_or_else(invalid)?;
            let dot = tail.iter().position(|&w| w == DOT).ok_or_else(invalid)?;
            let mut rhs = parse_syms(g, &tail[..dot])?;
            rhs.extend(parse_syms(g, &tail[dot + 1..])?);
            let rule = g
                .productions()
                .iter()
                .position(|p| p.lhs == lhs && p.rhs == rhs)
                .ok_or_else(invalid)?;
            LcItem::new(g, rule, dot).map(Item::Lc).ok_or_else(invalid)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::g1;

    #[test]
    fn items_round_trip() {
        let g = g1();
        for (kind, text) in [
            (ItemKind::Lc, "[T -> T • '*' F]"),
            (ItemKind::Lc, "[E' -> • E]"),
            (ItemKind::Lc, "[F -> 'a' •]"),
            (ItemKind::Plr, "[E' ->]"),
            (ItemKind::Plr, "[T -> T '**']"),
            (ItemKind::Elr, "[{E,T} -> T]"),
            (ItemKind::Elr, "[{E'} ->]"),
            (ItemKind::Cp, "[->]"),
            (ItemKind::Cp, "[-> E '+' T]"),
        ] {
            let item = parse_item(&g, kind, text).unwrap();
            assert_eq!(render_item(&g, &item), text);
        }
    }

    #[test]
    fn invalid_items_are_rejected() {
        let g = g1();
        assert!(parse_item(&g, ItemKind::Lc, "[E -> • E '+' T]").is_err());
        assert!(parse_item(&g, ItemKind::Plr, "[F -> T]").is_err());
        assert!(parse_item(&g, ItemKind::Elr, "[{} -> T]").is_err());
        assert!(parse_item(&g, ItemKind::Cp, "[-> 'a' 'a']").is_err());
        assert!(parse_item(&g, ItemKind::Cp, "[-> E '+'").is_err());
    }

    #[test]
    fn trace_line_round_trip() {
        let g = g1();
        let input = g.tokenize(&["a", "*", "a"]).unwrap();
        let config = Configuration {
            stack: parse_stack(&g, ItemKind::Lc, "[E' -> • E][T -> T '*' • F]").unwrap(),
            pos: 2,
        };
        let step = TraceStep {
            clause: Some(2),
            config: config.clone(),
        };
        let line = render_trace_line(&g, &input, 4, &step);
        assert_eq!(line, "4. [clause 2] [E' -> • E][T -> T '*' • F] | a");
        assert_eq!(
            parse_trace_line(&g, Algorithm::Lc, 3, &line).unwrap(),
            (4, Some(2), config)
        );
    }
}
