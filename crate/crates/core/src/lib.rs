//! Nondeterministic left-corner recognizers and their tabular realizations.
//!
//! Five stack automata share one search engine ([`automata`]):
//!
//! | name         | items            | filter                          |
//! |--------------|------------------|---------------------------------|
//! | `lc`         | `[A -> α • β]`   | left-corner relation            |
//! | `plr`        | `[A -> α]`       | left-corner relation            |
//! | `elr`        | `[Δ -> α]`       | left-corner relation, `B ∈ Δ`   |
//! | `pseudo-elr` | `[Δ -> α]`       | left-corner relation            |
//! | `cp`         | `[-> α]`         | none                            |
//!
//! [`tabular`] computes charts for the CP and ELR automata, and [`oracle`]
//! decides membership by exhaustive leftmost derivation, independently of
//! both.
//!
//! ```
//! use leftcorner::{augment, parse_grammar, recognize, Algorithm, DEFAULT_BUDGET};
//!
//! let g = augment(&parse_grammar("start S\nS -> S '+' 'a' | 'a'").unwrap()).unwrap();
//! let result = recognize(Algorithm::Elr, &g, &["a", "+", "a"], DEFAULT_BUDGET).unwrap();
//! assert!(result.accepted);
//! ```

pub mod automata;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod grammar;
pub mod items;
pub mod oracle;
pub mod render;
pub mod tabular;

pub use automata::{
    accepting_trace, explore, recognize, Algorithm, Configuration, Exploration, RecognitionResult,
    Trace, DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use grammar::{augment, augment_with, parse_grammar, validate, AugmentedGrammar, Grammar};
pub use items::{CpItem, ElrItem, Item, ItemKind, LcItem, PlrItem};
pub use tabular::{tabular_cp, tabular_elr, ElrVariant};
