//! Matching, single steps, normalization and redex enumeration.

mod pattern;
pub mod trace;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::catalog::System;
use crate::error::{Error, Result};
use crate::term::{Position, Term};

pub use pattern::{match_pattern, Binding, Pattern, Rule};
pub use trace::{StepRecord, Trace};

pub const DEFAULT_MAX_STEPS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub enum Strategy {
    #[default]
    #[serde(rename = "li")]
    LeftmostInnermost,
    #[serde(rename = "lo")]
    LeftmostOutermost,
}

impl Strategy {
    pub const ALL: [Strategy; 2] = [Strategy::LeftmostInnermost, Strategy::LeftmostOutermost];
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "li" | "leftmost-innermost" => Ok(Strategy::LeftmostInnermost),
            "lo" | "leftmost-outermost" => Ok(Strategy::LeftmostOutermost),
            _ => Err(format!("unknown strategy `{s}` (expected li or lo)")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::LeftmostInnermost => "li",
            Strategy::LeftmostOutermost => "lo",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_steps: DEFAULT_MAX_STEPS,
        }
    }
}

/// A rule applicable at a position. Two rules matching at one position are
/// two redexes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Redex {
    pub position: Position,
    pub rule: String,
}

impl fmt::Display for Redex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.position, self.rule)
    }
}

/// Visits every (position, rule index) pair with a matching left-hand side,
/// in pre-order and then rule order.
fn visit_redexes(sys: &System, t: &Term, path: &mut Vec<usize>, f: &mut impl FnMut(&[usize], usize)) {
    for (k, rule) in sys.rules().iter().enumerate() {
        if match_pattern(rule.lhs(), t).is_some() {
            f(path, k);
        }
    }
    for (i, c) in t.children().enumerate() {
        path.push(i + 1);
        visit_redexes(sys, c, path, f);
        path.pop();
    }
}

fn first_rule(sys: &System, t: &Term) -> Option<usize> {
    sys.rules()
        .iter()
        .position(|r| match_pattern(r.lhs(), t).is_some())
}

fn leftmost_outermost(sys: &System, t: &Term, path: &mut Vec<usize>) -> Option<usize> {
    if let Some(k) = first_rule(sys, t) {
        return Some(k);
    }
    for (i, c) in t.children().enumerate() {
        path.push(i + 1);
        if let Some(k) = leftmost_outermost(sys, c, path) {
            return Some(k);
        }
        path.pop();
    }
    None
}

fn leftmost_innermost(sys: &System, t: &Term, path: &mut Vec<usize>) -> Option<usize> {
    for (i, c) in t.children().enumerate() {
        path.push(i + 1);
        if let Some(k) = leftmost_innermost(sys, c, path) {
            return Some(k);
        }
        path.pop();
    }
    first_rule(sys, t)
}

/// All redexes of `t`, by position in pre-order and then by rule order.
pub fn find_redexes(sys: &System, t: &Term) -> Vec<Redex> {
    let mut out = Vec::new();
    visit_redexes(sys, t, &mut Vec::new(), &mut |path, k| {
        out.push(Redex {
            position: Position::from_indices(path.to_vec()),
            rule: sys.rules()[k].id().to_string(),
        })
    });
    out
}

pub fn is_normal_form(sys: &System, t: &Term) -> bool {
    leftmost_outermost(sys, t, &mut Vec::new()).is_none()
}

fn contract(sys: &System, t: &Term, p: &Position, k: usize) -> Option<Term> {
    let sub = t.subterm_at(p).ok()?;
    let reduct = sys.rules()[k].apply(sub)?;
    t.graft_at(p, reduct).ok()
}

/// Applies the named rule at `p`.
pub fn rewrite_at(sys: &System, t: &Term, p: &Position, rule_id: &str) -> Result<Term> {
    let k = sys.rule_index(rule_id).ok_or_else(|| Error::UnknownRule {
        system: sys.id().to_string(),
        rule: rule_id.to_string(),
    })?;
    let sub = t.subterm_at(p)?;
    let reduct = sys.rules()[k].apply(sub).ok_or_else(|| Error::NoMatch {
        rule: rule_id.to_string(),
        position: p.clone(),
    })?;
    Ok(t.graft_at(p, reduct)?)
}

/// One step by the given strategy; `None` iff `t` is a normal form.
pub fn step(sys: &System, t: &Term, strategy: Strategy) -> Option<StepRecord> {
    let mut path = Vec::new();
    let k = match strategy {
        Strategy::LeftmostInnermost => leftmost_innermost(sys, t, &mut path),
        Strategy::LeftmostOutermost => leftmost_outermost(sys, t, &mut path),
    }?;
    let position = Position::from_indices(path);
    let after = contract(sys, t, &position, k).expect("selected redex matches");
    Some(StepRecord {
        rule_id: sys.rules()[k].id().to_string(),
        position,
        before: t.clone(),
        after,
    })
}

/// Rewrites to normal form, recording every step.
pub fn normalize(sys: &System, t: &Term, strategy: Strategy, limits: Limits) -> Result<(Term, Trace)> {
    let mut steps = Vec::new();
    let mut cur = t.clone();
    while let Some(rec) = step(sys, &cur, strategy) {
        if steps.len() == limits.max_steps {
            return Err(Error::StepLimit {
                limit: limits.max_steps,
            });
        }
        cur = rec.after.clone();
        steps.push(rec);
    }
    let trace = Trace {
        system: sys.id().to_string(),
        initial: t.clone(),
        steps,
        final_term: cur.clone(),
    };
    Ok((cur, trace))
}

/// Normal form without keeping a trace.
pub fn normal_form(sys: &System, t: &Term, strategy: Strategy, limits: Limits) -> Result<Term> {
    let mut cur = t.clone();
    let mut n = 0;
    while let Some(rec) = step(sys, &cur, strategy) {
        if n == limits.max_steps {
            return Err(Error::StepLimit {
                limit: limits.max_steps,
            });
        }
        n += 1;
        cur = rec.after;
    }
    Ok(cur)
}

/// Every term reachable in exactly one step.
pub fn all_one_step_reducts(sys: &System, t: &Term) -> BTreeSet<Term> {
    let mut redexes = Vec::new();
    visit_redexes(sys, t, &mut Vec::new(), &mut |path, k| {
        redexes.push((Position::from_indices(path.to_vec()), k))
    });
    redexes
        .into_iter()
        .map(|(p, k)| contract(sys, t, &p, k).expect("enumerated redex matches"))
        .collect()
}
