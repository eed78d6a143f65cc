//! Termination weights: interpretations of ground terms as naturals that every
//! rewrite step strictly decreases.
//!
//! Scheme R (ring signature):
//!
//! ```text
//! |0| = 2    |1| = 2    |-x| = |x| + 1    |x+y| = |x| + 3|y|    |x*y| = |x|^|y|
//! ```
//!
//! Scheme U drops the clause for `1` and adds `|x'| = |x| + 2`; scheme S uses
//! the same clause for `S(x)`. The `ext` flag adds `|P(x)| = |x| + 5` and
//! `|x-y| = |x| + 3|y| + 4` for predecessor and subtraction.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::catalog::System;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::rewrite::{find_redexes, rewrite_at};
use crate::term::{Symbol, Term};

pub const DEFAULT_BIT_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum SchemeBase {
    R,
    U,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct WeightScheme {
    pub base: SchemeBase,
    pub ext: bool,
}

impl WeightScheme {
    pub const R: WeightScheme = WeightScheme {
        base: SchemeBase::R,
        ext: false,
    };
    pub const U: WeightScheme = WeightScheme {
        base: SchemeBase::U,
        ext: false,
    };
    pub const S: WeightScheme = WeightScheme {
        base: SchemeBase::S,
        ext: false,
    };

    pub fn with_ext(self) -> WeightScheme {
        WeightScheme { ext: true, ..self }
    }

    pub fn covers(&self, sym: Symbol) -> bool {
        match sym {
            Symbol::Zero | Symbol::Neg | Symbol::Plus | Symbol::Times => true,
            Symbol::One => self.base == SchemeBase::R,
            Symbol::Append => self.base == SchemeBase::U,
            Symbol::Succ => self.base == SchemeBase::S,
            Symbol::Pred | Symbol::Minus => self.ext,
        }
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.base, if self.ext { "+ext" } else { "" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WeightValue {
    Finite(BigUint),
    /// Some intermediate value exceeded the bit cap.
    Overflow,
}

impl WeightValue {
    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            WeightValue::Finite(w) => Some(w),
            WeightValue::Overflow => None,
        }
    }
}

impl fmt::Display for WeightValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightValue::Finite(w) => w.fmt(f),
            WeightValue::Overflow => f.write_str("overflow"),
        }
    }
}

pub fn term_weight(t: &Term, scheme: WeightScheme, bit_cap: u64) -> Result<WeightValue> {
    if let Some(sym) = uncovered(t, scheme) {
        return Err(Error::UncoveredSymbol {
            symbol: sym,
            scheme: scheme.to_string(),
        });
    }
    Ok(match weigh(t, bit_cap) {
        Some(w) => WeightValue::Finite(w),
        None => WeightValue::Overflow,
    })
}

fn uncovered(t: &Term, scheme: WeightScheme) -> Option<Symbol> {
    if !scheme.covers(t.symbol()) {
        return Some(t.symbol());
    }
    t.children().find_map(|c| uncovered(c, scheme))
}

fn capped(w: BigUint, cap: u64) -> Option<BigUint> {
    (w.bits() <= cap).then_some(w)
}

// Symbols have been checked against the scheme, so clauses can be chosen by
// symbol alone.
fn weigh(t: &Term, cap: u64) -> Option<BigUint> {
    let w = match t {
        Term::Zero | Term::One => BigUint::from(2u32),
        Term::Neg(x) => weigh(x, cap)? + 1u32,
        Term::Append(x) | Term::Succ(x) => weigh(x, cap)? + 2u32,
        Term::Pred(x) => weigh(x, cap)? + 5u32,
        Term::Plus(x, y) => weigh(x, cap)? + weigh(y, cap)? * 3u32,
        Term::Minus(x, y) => weigh(x, cap)? + weigh(y, cap)? * 3u32 + 4u32,
        Term::Times(x, y) => {
            let base = weigh(x, cap)?;
            let exp = weigh(y, cap)?;
            return capped_pow(&base, &exp, cap);
        }
    };
    capped(w, cap)
}

/// `base^exp` for `base >= 2`, or `None` if it needs more than `cap` bits.
fn capped_pow(base: &BigUint, exp: &BigUint, cap: u64) -> Option<BigUint> {
    // base >= 2 gives at least exp + 1 bits.
    let e = exp.to_u64().filter(|&e| e < cap)?;
    let lower_bits = e.checked_mul(base.bits() - 1)?.checked_add(1)?;
    if lower_bits > cap {
        return None;
    }
    capped(base.pow(u32::try_from(e).ok()?), cap)
}

/// Checks that every one-step rewrite (all positions, all rules) of every
/// given term strictly lowers the system's weight.
///
/// Terms whose own weight overflows are counted as skipped.
pub fn weight_decrease_check<'a>(
    sys: &System,
    terms: impl IntoIterator<Item = &'a Term>,
    bit_cap: u64,
) -> Report {
    let mut report = Report::new("termination", sys.id());
    for t in terms {
        let before = match term_weight(t, sys.scheme(), bit_cap) {
            Ok(WeightValue::Finite(w)) => w,
            Ok(WeightValue::Overflow) => {
                report.skip();
                continue;
            }
            Err(e) => {
                report.checked += 1;
                report.fail(t, e.to_string());
                continue;
            }
        };
        report.checked += 1;
        for redex in find_redexes(sys, t) {
            let after = rewrite_at(sys, t, &redex.position, &redex.rule)
                .expect("enumerated redexes apply");
            let w = term_weight(&after, sys.scheme(), bit_cap);
            let decreased = matches!(&w, Ok(WeightValue::Finite(a)) if *a < before);
            if !decreased {
                let shown = match w {
                    Ok(v) => v.to_string(),
                    Err(e) => e.to_string(),
                };
                report.fail(
                    t,
                    format!("{redex}: weight {before} -> {shown} (reduct {after})"),
                );
            }
        }
    }
    report
}
