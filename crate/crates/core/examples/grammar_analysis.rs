//! Validates a grammar, prints the left-corner relations and the rule pairs
//! that share a right-hand-side prefix.
//!
//! ```text
//! cargo run --example grammar_analysis [grammar.cfg]
//! ```

use leftcorner::corpus::G1_SOURCE;
use leftcorner::grammar::{augment, common_prefix_pairs, parse_grammar, validate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let source = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => G1_SOURCE.to_string(),
    };
    let grammar = parse_grammar(&source)?;

    let report = validate(&grammar);
    println!("valid: {}", report.ok);
    for d in &report.diagnostics {
        println!("  {d}");
    }
    if !report.ok {
        return Ok(());
    }

    let g = augment(&grammar)?;
    println!("\nrules with {} -> {}:", g.start_prime_name(), grammar.start);
    for p in g.productions() {
        println!("  {} -> {}", g.nt_name(p.lhs), g.render_syms(&p.rhs));
    }
    println!("\nleft-corner relation:");
    for line in g.left_corner_relation().render(&g) {
        println!("  {line}");
    }
    println!("\nreflexive-transitive closure:");
    for line in g.left_corner_star_relation().render(&g) {
        println!("  {line}");
    }
    println!("\nrules sharing a prefix:");
    for c in common_prefix_pairs(&g) {
        let rule = |k: usize| {
            let p = &g.productions()[k];
            format!("{} -> {}", g.nt_name(p.lhs), g.render_syms(&p.rhs))
        };
        println!("  {:<16} {:<16} prefix {}", rule(c.first), rule(c.second), g.render_syms(&c.prefix));
    }
    Ok(())
}
