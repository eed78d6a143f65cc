//! Integer meaning of ground terms, canonical numerals, and rule soundness.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::System;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::rewrite::Binding;
use crate::term::{Term, Signature};
use crate::verify::gen::TermGenerator;

/// Largest instance size drawn by [`rule_soundness`].
pub const SOUNDNESS_MAX_SIZE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViewKind {
    /// `0`, `1`, `t+1` and their negations.
    Ring,
    /// `0`, `0'`, `0''`, … and their negations.
    Unary,
    /// `0`, `S(0)`, `S(S(0))`, … and their negations.
    Successor,
}

/// A choice of canonical numerals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct View {
    pub kind: ViewKind,
    pub integers: bool,
}

impl View {
    pub const RING: View = View::integers(ViewKind::Ring);
    pub const UNARY: View = View::integers(ViewKind::Unary);
    pub const SUCCESSOR: View = View::integers(ViewKind::Successor);
    pub const UNARY_NAT: View = View::naturals(ViewKind::Unary);
    pub const SUCCESSOR_NAT: View = View::naturals(ViewKind::Successor);

    pub const fn integers(kind: ViewKind) -> View {
        View {
            kind,
            integers: true,
        }
    }

    pub const fn naturals(kind: ViewKind) -> View {
        View {
            kind,
            integers: false,
        }
    }

    /// Signature the canonical terms of this view live in.
    pub fn signature(&self) -> Signature {
        match (self.kind, self.integers) {
            (ViewKind::Ring, _) => Signature::RING,
            (ViewKind::Unary, true) => Signature::UNARY,
            (ViewKind::Unary, false) => Signature::UNARY_NAT,
            (ViewKind::Successor, true) => Signature::SUCCESSOR,
            (ViewKind::Successor, false) => Signature::SUCCESSOR_NAT,
        }
    }
}

impl fmt::Display for View {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViewKind::Ring => "ring",
            ViewKind::Unary => "unary",
            ViewKind::Successor => "successor",
        };
        f.write_str(kind)?;
        if !self.integers {
            f.write_str("-nat")?;
        }
        Ok(())
    }
}

impl FromStr for View {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, integers) = match s.strip_suffix("-nat") {
            Some(k) => (k, false),
            None => (s, true),
        };
        let kind = match kind {
            "ring" => ViewKind::Ring,
            "unary" => ViewKind::Unary,
            "successor" => ViewKind::Successor,
            _ => {
                return Err(format!(
                    "unknown view `{s}` (expected ring, unary or successor, optionally with -nat)"
                ))
            }
        };
        Ok(View { kind, integers })
    }
}

/// Value of a ground term in the ring of integers, reading `x'` and `S(x)` as
/// `x+1` and `P(x)` as `x-1`.
pub fn eval_int(t: &Term) -> BigInt {
    match t {
        Term::Zero => BigInt::zero(),
        Term::One => BigInt::one(),
        Term::Neg(x) => -eval_int(x),
        Term::Append(x) | Term::Succ(x) => eval_int(x) + 1,
        Term::Pred(x) => eval_int(x) - 1,
        Term::Plus(x, y) => eval_int(x) + eval_int(y),
        Term::Times(x, y) => eval_int(x) * eval_int(y),
        Term::Minus(x, y) => eval_int(x) - eval_int(y),
    }
}

/// The canonical numeral for `n` in `view`.
pub fn canonical_term(n: &BigInt, view: View) -> Result<Term> {
    if n.is_negative() && !view.integers {
        return Err(Error::NegativeNatural { value: n.clone() });
    }
    let mut magnitude = n.abs();
    if magnitude.is_zero() {
        return Ok(Term::Zero);
    }
    let mut t = match view.kind {
        ViewKind::Ring => {
            magnitude -= 1;
            Term::One
        }
        ViewKind::Unary | ViewKind::Successor => Term::Zero,
    };
    while magnitude.is_positive() {
        t = match view.kind {
            ViewKind::Ring => Term::plus(t, Term::One),
            ViewKind::Unary => Term::append(t),
            ViewKind::Successor => Term::succ(t),
        };
        magnitude -= 1;
    }
    Ok(if n.is_negative() { Term::neg(t) } else { t })
}

/// Membership in the view's set of canonical numerals.
pub fn in_canonical_set(t: &Term, view: View) -> bool {
    match t {
        Term::Zero => true,
        Term::Neg(p) => view.integers && is_positive_numeral(p, view.kind),
        p => is_positive_numeral(p, view.kind),
    }
}

fn is_positive_numeral(t: &Term, kind: ViewKind) -> bool {
    let mut cur = t;
    match kind {
        // {1} ∪ {p+1 | p positive}
        ViewKind::Ring => loop {
            match cur {
                Term::One => return true,
                Term::Plus(p, one) if **one == Term::One => cur = p,
                _ => return false,
            }
        },
        // {0'} ∪ {p' | p positive}, i.e. at least one append over 0
        ViewKind::Unary | ViewKind::Successor => {
            let mut tallies = 0usize;
            loop {
                match (cur, kind) {
                    (Term::Zero, _) => return tallies > 0,
                    (Term::Append(p), ViewKind::Unary) | (Term::Succ(p), ViewKind::Successor) => {
                        tallies += 1;
                        cur = p;
                    }
                    _ => return false,
                }
            }
        }
    }
}

/// Checks every rule of `sys` against the integer model on random ground
/// instances drawn from the system's own signature (sizes 1 to 8).
pub fn rule_soundness(sys: &System, samples_per_rule: usize, seed: u64) -> Report {
    let mut report = Report::new("soundness", sys.id());
    let generator = TermGenerator::new(*sys.signature());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for rule in sys.rules() {
        let vars: Vec<&str> = rule.lhs().vars().into_iter().collect();
        for _ in 0..samples_per_rule {
            let mut binding = Binding::new();
            for v in &vars {
                let size = rng.random_range(1..=SOUNDNESS_MAX_SIZE);
                let t = generator
                    .sample(&mut rng, size)
                    .expect("every catalog signature has a unary or constant symbol");
                binding.insert(*v, t);
            }
            let lhs = rule.lhs().instantiate(&binding).expect("lhs vars bound");
            let rhs = rule.rhs().instantiate(&binding).expect("rhs vars within lhs vars");
            let (l, r) = (eval_int(&lhs), eval_int(&rhs));
            report.expect(l == r, rule.id(), || {
                format!("{binding}: {lhs} = {l} but {rhs} = {r}")
            });
        }
    }
    report
}
