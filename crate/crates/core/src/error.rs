use num_bigint::BigInt;

use crate::term::{ParseError, Position, PositionError, Symbol};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Position(#[from] PositionError),

    #[error("unknown system `{id}` (known: {})", .known.join(", "))]
    UnknownSystem { id: String, known: Vec<String> },

    #[error("system {system} has no rule `{rule}`")]
    UnknownRule { system: String, rule: String },

    #[error("rule {rule} does not match at position {position}")]
    NoMatch { rule: String, position: Position },

    #[error("no normal form within {limit} steps")]
    StepLimit { limit: usize },

    #[error("{value} has no representation among the naturals")]
    NegativeNatural { value: BigInt },

    #[error("weight scheme {scheme} has no clause for `{symbol}`")]
    UncoveredSymbol { symbol: Symbol, scheme: String },

    #[error("no term of size {size} over the {signature} signature{}", if *.product_limited { " within the product-depth limit" } else { "" })]
    UnreachableSize {
        size: usize,
        signature: String,
        product_limited: bool,
    },

    #[error("malformed rule {id}: {reason}")]
    InvalidRule { id: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
