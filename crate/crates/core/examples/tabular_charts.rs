//! Builds the tabular CP and ELR charts for one input and prints them, with
//! the predict sets of the ELR variant that uses them.
//!
//! ```text
//! cargo run --example tabular_charts [tokens...]
//! ```

use leftcorner::corpus::g1;
use leftcorner::tabular::{tabular_cp, tabular_elr, ElrVariant};

fn main() -> leftcorner::Result<()> {
    let g = g1();
    let mut tokens: Vec<String> = std::env::args().skip(1).collect();
    if tokens.is_empty() {
        tokens = ["a", "+", "a", "^", "a"].map(String::from).to_vec();
    }

    let cp = tabular_cp(&g, &tokens, true)?;
    println!("{}", cp.dump(&g));
    println!("as a table:\n{}", cp.chart.render_table(&g));

    let unfiltered = tabular_cp(&g, &tokens, false)?;
    println!("{}", unfiltered.dump(&g));

    for variant in ElrVariant::ALL {
        let r = tabular_elr(&g, &tokens, variant)?;
        println!("{}", r.dump(&g));
        for s in &r.predict_sets {
            println!("S_{} = {}", s.i, g.render_nt_set(&s.nonterminals));
        }
        if variant == ElrVariant::Naive {
            println!("cells with repeated prefixes: {:?}", r.duplicate_prefix_cells());
        }
    }
    Ok(())
}
