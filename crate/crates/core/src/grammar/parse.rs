use std::collections::BTreeSet;

use super::{Grammar, Rule, Symbol};
use crate::error::{Error, Result};

/// Parses the line-oriented grammar format:
///
/// ```text
/// # comment
/// start E
/// E -> E '+' T | T
/// T -> 'a'
/// ```
///
/// Terminals are single-quoted, nonterminals are bare identifiers. Every
/// left-hand side becomes a declared nonterminal and every quoted symbol a
/// declared terminal; a bare identifier that never appears on a left-hand
/// side stays undeclared and is reported by [`super::validate`].
pub fn parse_grammar(text: &str) -> Result<Grammar> {
    let mut start: Option<String> = None;
    let mut rules = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut cur = Cursor::new(raw, line_no);
        cur.skip_ws();
        if cur.at_end() || cur.peek() == Some('#') {
            continue;
        }
        let head = cur.ident()?;
        cur.skip_ws();
        if cur.eat_str("->") {
            let alts = parse_alternatives(&mut cur)?;
            rules.extend(alts.into_iter().map(|rhs| Rule::new(head.clone(), rhs)));
        } else if head == "start" {
            let name = cur.ident()?;
            cur.skip_ws();
            if !cur.at_end() {
                return Err(cur.error("unexpected input after start symbol"));
            }
            if start.is_some() {
                return Err(Error::DuplicateStart { line: line_no });
            }
            start = Some(name);
        } else {
            return Err(cur.error("expected `->` or a start declaration"));
        }
    }

    let Some(start) = start else {
        let last = text.lines().count().max(1);
        return Err(Error::Syntax {
            line: last,
            column: 1,
            message: "missing `start` declaration".into(),
        });
    };

    let mut grammar = Grammar::from_rules(start, rules);
    // bare identifiers that never head a rule are left out of `nonterminals`
    let declared: BTreeSet<String> = grammar.rules.iter().map(|r| r.lhs.clone()).collect();
    grammar.nonterminals = declared;
    Ok(grammar)
}

fn parse_alternatives(cur: &mut Cursor) -> Result<Vec<Vec<Symbol>>> {
    let mut alts = Vec::new();
    let mut current = Vec::new();
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => {
                if current.is_empty() {
                    return Err(cur.error("empty alternative"));
                }
                alts.push(std::mem::take(&mut current));
                return Ok(alts);
            }
            Some('|') => {
                if current.is_empty() {
                    return Err(cur.error("empty alternative"));
                }
                cur.bump();
                alts.push(std::mem::take(&mut current));
            }
            Some('\'') => {
                let t = cur.quoted()?;
                current.push(Symbol::Terminal(t));
                cur.expect_separator()?;
            }
            Some(_) => {
                let n = cur.ident()?;
                current.push(Symbol::Nonterminal(n));
                cur.expect_separator()?;
            }
        }
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        if self.chars[self.pos.min(self.chars.len())..]
            .iter()
            .take(n)
            .copied()
            .eq(s.chars())
        {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        let begin = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.bump(),
            _ => return Err(self.error("expected identifier")),
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.bump();
        }
        Ok(self.chars[begin..self.pos].iter().collect())
    }

    fn quoted(&mut self) -> Result<String> {
        let open = self.pos;
        self.bump();
        let begin = self.pos;
        while let Some(c) = self.peek() {
            if c == '\'' {
                let body: String = self.chars[begin..self.pos].iter().collect();
                self.bump();
                if body.is_empty() || body.chars().any(char::is_whitespace) {
                    self.pos = open;
                    return Err(self.error("terminal must be nonempty and contain no whitespace"));
                }
                return Ok(body);
            }
            self.bump();
        }
        self.pos = open;
        Err(self.error("unterminated terminal"))
    }

    fn expect_separator(&mut self) -> Result<()> {
        match self.peek() {
            None | Some('|') => Ok(()),
            Some(c) if c.is_whitespace() => Ok(()),
            Some(_) => Err(self.error("expected whitespace or `|` between symbols")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_rule() {
        let g = parse_grammar("start S\nS -> 'a'").unwrap();
        assert_eq!(g.start, "S");
        assert_eq!(g.rules, vec![Rule::new("S", vec![Symbol::terminal("a")])]);
    }

    #[test]
    fn empty_alternative_is_syntax_error() {
        let err = parse_grammar("start S\nS -> ").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }), "{err:?}");
        let err = parse_grammar("start S\nS -> 'a' | | 'b'").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }), "{err:?}");
        let err = parse_grammar("start S\nS -> 'a' |").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn duplicate_start() {
        let err = parse_grammar("start S\nstart S\nS -> 'a'").unwrap_err();
        assert_eq!(err, Error::DuplicateStart { line: 2 });
    }

    #[test]
    fn missing_start() {
        assert!(matches!(
            parse_grammar("S -> 'a'"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn syntax_error_columns() {
        let err = parse_grammar("start S\nS -> 'a").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 2,
                column: 6,
                message: "unterminated terminal".into()
            }
        );
        let err = parse_grammar("start S\nS -> 'a'B").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, column: 9, .. }), "{err:?}");
        let err = parse_grammar("start S\nS => 'a'").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 2, column: 3, .. }), "{err:?}");
    }

    #[test]
    fn comments_blank_lines_and_accumulation() {
        let src = "# toy\n\nstart S\nS -> A 'x'\n  # indented comment\nS -> 'y' | 'z' A\nA -> 'a'\n";
        let g = parse_grammar(src).unwrap();
        assert_eq!(g.rules.len(), 4);
        assert_eq!(g.rules_for("S").count(), 3);
        assert_eq!(
            g.terminals.iter().map(String::as_str).collect::<Vec<_>>(),
            ["a", "x", "y", "z"]
        );
    }

    #[test]
    fn quoted_bar_is_a_terminal() {
        let g = parse_grammar("start S\nS -> '|' | '**'").unwrap();
        assert_eq!(g.rules[0].rhs, vec![Symbol::terminal("|")]);
        assert_eq!(g.rules[1].rhs, vec![Symbol::terminal("**")]);
    }

    #[test]
    fn rhs_only_identifier_is_not_declared() {
        let g = parse_grammar("start S\nS -> X").unwrap();
        assert!(!g.nonterminals.contains("X"));
    }

    #[test]
    fn source_round_trip() {
        let src = "start E\nE -> E '+' T\nE -> T\nT -> 'a'\n";
        let g = parse_grammar(src).unwrap();
        assert_eq!(g.to_source(), src);
        assert_eq!(parse_grammar(&g.to_source()).unwrap(), g);
    }
}
