use std::fmt;
use std::str::FromStr;

use super::Symbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignatureId {
    Ring,
    Unary,
    Successor,
    RingExt,
    UnaryExt,
    SuccessorExt,
    /// Unary append without minus, for natural-number systems.
    UnaryNat,
    /// Successor without minus, for natural-number systems.
    SuccessorNat,
    /// Every symbol. Used when a term is read without a target system.
    Any,
}

/// A set of function symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    id: SignatureId,
    symbols: &'static [Symbol],
}

use Symbol::*;

impl Signature {
    pub const RING: Signature = Signature::new(SignatureId::Ring, &[Zero, One, Neg, Plus, Times]);
    pub const UNARY: Signature =
        Signature::new(SignatureId::Unary, &[Zero, Neg, Append, Plus, Times]);
    pub const SUCCESSOR: Signature =
        Signature::new(SignatureId::Successor, &[Zero, Neg, Succ, Plus, Times]);
    pub const RING_EXT: Signature = Signature::new(
        SignatureId::RingExt,
        &[Zero, One, Neg, Pred, Plus, Times, Minus],
    );
    pub const UNARY_EXT: Signature = Signature::new(
        SignatureId::UnaryExt,
        &[Zero, Neg, Append, Pred, Plus, Times, Minus],
    );
    pub const SUCCESSOR_EXT: Signature = Signature::new(
        SignatureId::SuccessorExt,
        &[Zero, Neg, Succ, Pred, Plus, Times, Minus],
    );
    pub const UNARY_NAT: Signature =
        Signature::new(SignatureId::UnaryNat, &[Zero, Append, Plus, Times]);
    pub const SUCCESSOR_NAT: Signature =
        Signature::new(SignatureId::SuccessorNat, &[Zero, Succ, Plus, Times]);
    pub const ANY: Signature = Signature::new(SignatureId::Any, &Symbol::ALL);

    const fn new(id: SignatureId, symbols: &'static [Symbol]) -> Signature {
        Signature { id, symbols }
    }

    pub fn id(&self) -> SignatureId {
        self.id
    }

    /// Symbols in enumeration order.
    pub fn symbols(&self) -> &'static [Symbol] {
        self.symbols
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        self.symbols.contains(&sym)
    }

    pub fn of_arity(&self, arity: usize) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols.iter().copied().filter(move |s| s.arity() == arity)
    }

    pub fn from_id(id: SignatureId) -> Signature {
        match id {
            SignatureId::Ring => Self::RING,
            SignatureId::Unary => Self::UNARY,
            SignatureId::Successor => Self::SUCCESSOR,
            SignatureId::RingExt => Self::RING_EXT,
            SignatureId::UnaryExt => Self::UNARY_EXT,
            SignatureId::SuccessorExt => Self::SUCCESSOR_EXT,
            SignatureId::UnaryNat => Self::UNARY_NAT,
            SignatureId::SuccessorNat => Self::SUCCESSOR_NAT,
            SignatureId::Any => Self::ANY,
        }
    }
}

impl SignatureId {
    pub const ALL: [SignatureId; 9] = [
        SignatureId::Ring,
        SignatureId::Unary,
        SignatureId::Successor,
        SignatureId::RingExt,
        SignatureId::UnaryExt,
        SignatureId::SuccessorExt,
        SignatureId::UnaryNat,
        SignatureId::SuccessorNat,
        SignatureId::Any,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SignatureId::Ring => "ring",
            SignatureId::Unary => "unary",
            SignatureId::Successor => "successor",
            SignatureId::RingExt => "ring-ext",
            SignatureId::UnaryExt => "unary-ext",
            SignatureId::SuccessorExt => "successor-ext",
            SignatureId::UnaryNat => "unary-nat",
            SignatureId::SuccessorNat => "successor-nat",
            SignatureId::Any => "any",
        }
    }
}

impl fmt::Display for SignatureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SignatureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SignatureId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown signature `{s}`"))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.id.fmt(f)
    }
}
