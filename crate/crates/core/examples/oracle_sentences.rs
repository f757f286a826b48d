//! Enumerates short sentences of a grammar and classifies a few inputs with
//! the brute-force oracle.
//!
//! ```text
//! cargo run --example oracle_sentences [max_tokens]
//! ```

use leftcorner::corpus::g1;
use leftcorner::oracle::{derives, sentences_up_to, viable_prefix};

fn main() -> leftcorner::Result<()> {
    let g = g1();
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);

    let sentences = sentences_up_to(&g, max)?;
    println!("{} sentences of at most {max} tokens:", sentences.len());
    for s in &sentences {
        println!("  {}", s.join(" "));
    }

    println!();
    for input in ["a * a", "a + a ^ a", "a + a ^", "a +", "+ a"] {
        let tokens: Vec<&str> = input.split_whitespace().collect();
        println!(
            "{input:<12} sentence={:<5} viable prefix={}",
            derives(&g, &tokens)?,
            viable_prefix(&g, &tokens)?
        );
    }
    Ok(())
}
