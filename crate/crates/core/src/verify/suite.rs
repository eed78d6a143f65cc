//! Named check suites over enumerated and random ground-term budgets.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{all_systems, get_system, System};
use crate::error::Result;
use crate::report::Report;
use crate::rewrite::{find_redexes, normal_form, Limits, Strategy, DEFAULT_MAX_STEPS};
use crate::semantics::{canonical_term, eval_int, in_canonical_set, rule_soundness, View};
use crate::term::{render_term, Style, Term};
use crate::weights::{weight_decrease_check, DEFAULT_BIT_CAP};

use super::explore::{bfs_normal_forms, deterministic_path, DEFAULT_MAX_STATES};
use super::fixtures::run_fixtures;
use super::gen::{enumerate_ground_terms, random_budget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Soundness,
    Termination,
    Confluence,
    Determinism,
    Characterization,
    Fixtures,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Soundness,
        Suite::Termination,
        Suite::Confluence,
        Suite::Determinism,
        Suite::Characterization,
        Suite::Fixtures,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Soundness => "soundness",
            Suite::Termination => "termination",
            Suite::Confluence => "confluence",
            Suite::Determinism => "determinism",
            Suite::Characterization => "characterization",
            Suite::Fixtures => "fixtures",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub systems: Vec<String>,
    pub seed: u64,
    /// Exhaustive enumeration bound, in nodes.
    pub max_size: usize,
    pub random_terms: usize,
    pub random_min_size: usize,
    pub random_max_size: usize,
    pub max_product_depth: usize,
    /// Random instantiations per rule for the soundness suite.
    pub samples: usize,
    pub max_states: usize,
    pub max_steps: usize,
    pub bit_cap: u64,
    /// Largest value in the ring determinism sweeps.
    pub ring_bound: u32,
    /// Largest value in the unary and successor determinism sweeps.
    pub unary_bound: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            systems: all_systems().iter().map(|s| s.id().to_string()).collect(),
            seed: 42,
            max_size: 7,
            random_terms: 500,
            random_min_size: 8,
            random_max_size: 12,
            max_product_depth: 3,
            samples: 200,
            max_states: DEFAULT_MAX_STATES,
            max_steps: DEFAULT_MAX_STEPS,
            bit_cap: DEFAULT_BIT_CAP,
            ring_bound: 25,
            unary_bound: 12,
        }
    }
}

impl SuiteConfig {
    pub fn for_systems<I, S>(ids: I) -> SuiteConfig
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        SuiteConfig {
            systems: ids.into_iter().map(Into::into).collect(),
            ..SuiteConfig::default()
        }
    }

    fn limits(&self) -> Limits {
        Limits {
            max_steps: self.max_steps,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub config: SuiteConfig,
    pub passed: bool,
    pub checks: Vec<Report>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
            for cx in &c.counterexamples {
                writeln!(f, "    {}: {}", cx.term, cx.detail)?;
            }
            for n in &c.notes {
                writeln!(f, "    note: {n}")?;
            }
        }
        write!(
            f,
            "{} {}: {} of {} checks passed",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite,
            self.checks.iter().filter(|c| c.passed()).count(),
            self.checks.len()
        )
    }
}

/// Ground terms a system is checked on: the exhaustive part and the random part.
pub struct Budget {
    pub exhaustive: Vec<Term>,
    pub random: Vec<Term>,
}

impl Budget {
    pub fn for_system(sys: &System, config: &SuiteConfig) -> Result<Budget> {
        Ok(Budget {
            exhaustive: enumerate_ground_terms(sys.signature(), config.max_size).collect(),
            random: random_budget(
                sys.signature(),
                config.random_min_size..=config.random_max_size,
                config.random_terms,
                Some(config.max_product_depth),
                config.seed,
            )?,
        })
    }

    pub fn all(&self) -> impl Iterator<Item = &Term> {
        self.exhaustive.iter().chain(&self.random)
    }

    pub fn len(&self) -> usize {
        self.exhaustive.len() + self.random.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    let systems = config
        .systems
        .iter()
        .map(|id| get_system(id))
        .collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::new();
    match suite {
        Suite::Fixtures => checks = run_fixtures(&systems),
        _ => {
            for sys in &systems {
                checks.extend(run_for_system(suite, sys, config)?);
            }
        }
    }
    Ok(SuiteReport {
        suite,
        config: config.clone(),
        passed: checks.iter().all(Report::passed),
        checks,
    })
}

fn run_for_system(suite: Suite, sys: &System, config: &SuiteConfig) -> Result<Vec<Report>> {
    Ok(match suite {
        Suite::Soundness => vec![rule_soundness(sys, config.samples, config.seed)],
        Suite::Termination => vec![termination(sys, &Budget::for_system(sys, config)?, config)],
        Suite::Confluence => vec![completeness(sys, &Budget::for_system(sys, config)?, config)],
        Suite::Characterization => vec![characterization(sys, config)],
        Suite::Determinism => determinism(sys, config),
        Suite::Fixtures => run_fixtures(&[sys]),
    })
}

/// Checks each term in parallel and folds the outcomes in input order.
fn per_term<F>(check: &str, sys: &System, terms: &[&Term], f: F) -> Report
where
    F: Fn(&Term) -> Option<String> + Sync,
{
    let outcomes: Vec<Option<String>> = terms.par_iter().map(|t| f(t)).collect();
    let mut report = Report::new(check, sys.id());
    for (t, outcome) in terms.iter().zip(outcomes) {
        report.checked += 1;
        if let Some(detail) = outcome {
            report.fail(t, detail);
        }
    }
    report
}

fn expected_normal_form(sys: &System, t: &Term) -> std::result::Result<Term, String> {
    canonical_term(&eval_int(t), sys.view()).map_err(|e| e.to_string())
}

/// Both strategies and the full reduct graph reach the canonical numeral.
pub fn completeness(sys: &System, budget: &Budget, config: &SuiteConfig) -> Report {
    let terms: Vec<&Term> = budget.all().collect();
    let mut report = per_term("confluence", sys, &terms, |t| {
        let expected = match expected_normal_form(sys, t) {
            Ok(e) => e,
            Err(e) => return Some(e),
        };
        for s in Strategy::ALL {
            match normal_form(sys, t, s, config.limits()) {
                Ok(nf) if nf == expected => {}
                Ok(nf) => return Some(format!("{s} reaches {nf}, expected {expected}")),
                Err(e) => return Some(format!("{s}: {e}")),
            }
        }
        let bfs = bfs_normal_forms(sys, t, config.max_states);
        if bfs.truncated {
            return Some(format!("reduct graph exceeds {} states", config.max_states));
        }
        if bfs.normal_forms.len() != 1 || bfs.normal_forms.first() != Some(&expected) {
            let nfs: Vec<String> = bfs.normal_forms.iter().map(Term::to_string).collect();
            return Some(format!("normal forms {{{}}}, expected {expected}", nfs.join(", ")));
        }
        None
    });
    report.note(format!(
        "{} exhaustive (size <= {}) and {} random terms",
        budget.exhaustive.len(),
        config.max_size,
        budget.random.len()
    ));
    report
}

/// Every one-step rewrite lowers the weight. Terms whose weight overflows the
/// bit cap are skipped.
pub fn termination(sys: &System, budget: &Budget, config: &SuiteConfig) -> Report {
    let terms: Vec<&Term> = budget.all().collect();
    let parts: Vec<Report> = terms
        .par_chunks(64)
        .map(|chunk| weight_decrease_check(sys, chunk.iter().copied(), config.bit_cap))
        .collect();
    let mut report = Report::new("termination", sys.id());
    for p in parts {
        report.absorb(p);
    }
    let total = report.checked + report.skipped;
    report.note(format!(
        "{} of {} terms skipped for weight overflow ({:.2}%)",
        report.skipped,
        total,
        100.0 * report.skipped as f64 / total.max(1) as f64
    ));
    report
}

/// A term has no redex exactly when it is a canonical numeral.
pub fn characterization(sys: &System, config: &SuiteConfig) -> Report {
    let terms: Vec<Term> = enumerate_ground_terms(sys.signature(), config.max_size).collect();
    let refs: Vec<&Term> = terms.iter().collect();
    let view = sys.view();
    per_term("characterization", sys, &refs, |t| {
        let normal = find_redexes(sys, t).is_empty();
        let canonical = in_canonical_set(t, view);
        (normal != canonical).then(|| {
            format!(
                "{} but {}",
                if normal { "no redex" } else { "has a redex" },
                if canonical { "canonical" } else { "not canonical" }
            )
        })
    })
}

fn numerals(view: View, values: impl Iterator<Item = i64>) -> Vec<Term> {
    values
        .map(|v| canonical_term(&BigInt::from(v), view).expect("in view"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Plus,
    Times,
}

impl Op {
    fn apply(self, l: Term, r: Term) -> Term {
        match self {
            Op::Plus => Term::plus(l, r),
            Op::Times => Term::times(l, r),
        }
    }
}

/// `op(t, u)` for every `t` in `left` and `u` in `right`, row by row.
fn pairs(op: Op, left: &[Term], right: &[Term]) -> Vec<Term> {
    left.iter()
        .flat_map(|l| right.iter().map(move |r| op.apply(l.clone(), r.clone())))
        .collect()
}

fn all_deterministic(check: &str, sys: &System, terms: &[Term], config: &SuiteConfig) -> Report {
    let refs: Vec<&Term> = terms.iter().collect();
    per_term(check, sys, &refs, |t| {
        let r = deterministic_path(sys, t, config.max_steps);
        match (r.deterministic, r.branch) {
            (true, _) => None,
            (false, Some(b)) => {
                let rs: Vec<String> = b.redexes.iter().map(ToString::to_string).collect();
                Some(format!("branches at {} with [{}]", b.term, rs.join(", ")))
            }
            (false, None) => Some(format!("no normal form within {} steps", config.max_steps)),
        }
    })
}

/// Passes when at least one term branches.
fn some_branch(check: &str, sys: &System, terms: &[Term], config: &SuiteConfig) -> Report {
    let branching: Vec<Option<Term>> = terms
        .par_iter()
        .map(|t| deterministic_path(sys, t, config.max_steps).branch.map(|b| b.term))
        .collect();
    let mut report = Report::new(check, sys.id());
    report.checked = terms.len();
    match terms.iter().zip(&branching).find(|(_, b)| b.is_some()) {
        Some((t, Some(b))) => report.note(format!(
            "{} of {} branch; first: {t} at {b}",
            branching.iter().flatten().count(),
            terms.len()
        )),
        _ => report.fail_with(sys.id(), "every term rewrites deterministically"),
    }
    report
}

fn determinism(sys: &System, config: &SuiteConfig) -> Vec<Report> {
    let ring = config.ring_bound as i64;
    let unary = config.unary_bound as i64;
    let nat = |view, bound| numerals(view, 0..=bound);
    let mut out = Vec::new();
    match sys.id() {
        "d2" => {
            let nonneg = nat(View::RING, ring);
            out.push(all_deterministic(
                "determinism-addition",
                sys,
                &pairs(Op::Plus, &nonneg, &nonneg),
                config,
            ));
            let one = [Term::One];
            let negative = numerals(View::RING, (1..=ring).map(|v| -v));
            out.push(all_deterministic(
                "determinism-one-plus-negative",
                sys,
                &pairs(Op::Plus, &one, &negative),
                config,
            ));
            out.push(mixed_sign_boundary(sys, &nonneg, &negative, config));
        }
        "n1" | "n4" => {
            let nonneg = nat(sys.view(), unary);
            for (name, op) in [("determinism-addition", Op::Plus), ("determinism-multiplication", Op::Times)] {
                out.push(all_deterministic(name, sys, &pairs(op, &nonneg, &nonneg), config));
            }
        }
        "n2" | "z2" => {
            let nonneg = nat(View::naturals(sys.view().kind), unary);
            out.push(all_deterministic(
                "determinism-addition",
                sys,
                &pairs(Op::Plus, &nonneg, &nonneg),
                config,
            ));
        }
        "n3" => {
            let nonneg = nat(sys.view(), unary);
            out.push(all_deterministic(
                "determinism-addition",
                sys,
                &pairs(Op::Plus, &nonneg, &nonneg),
                config,
            ));
            out.push(some_branch(
                "determinism-multiplication-branches",
                sys,
                &pairs(Op::Times, &nonneg, &nonneg),
                config,
            ));
        }
        _ => {}
    }
    if let Some(r) = counterexamples(sys, config) {
        out.push(r);
    }
    out
}

// Observed, not asserted: how far determinism reaches for t + u with t >= 0 > u.
fn mixed_sign_boundary(sys: &System, nonneg: &[Term], negative: &[Term], config: &SuiteConfig) -> Report {
    let terms = pairs(Op::Plus, nonneg, negative);
    let outcomes: Vec<bool> = terms
        .par_iter()
        .map(|t| deterministic_path(sys, t, config.max_steps).deterministic)
        .collect();
    let mut report = Report::new("determinism-mixed-sign", sys.id());
    report.checked = terms.len();
    let det = outcomes.iter().filter(|d| **d).count();
    report.note(format!("{det} of {} sums t+u with t >= 0 > u rewrite deterministically", terms.len()));
    let by_t: Vec<String> = nonneg
        .iter()
        .enumerate()
        .map(|(i, _)| {
            let row = &outcomes[i * negative.len()..(i + 1) * negative.len()];
            format!("{i}:{}", row.iter().filter(|d| **d).count())
        })
        .collect();
    report.note(format!("deterministic count per value of t: {}", by_t.join(" ")));
    report
}

fn counterexamples(sys: &System, config: &SuiteConfig) -> Option<Report> {
    let texts: &[&str] = match sys.id() {
        "d2" => &["0+(-(1+1))", "(-1)+(-(1+1))", "0*(1+1)"],
        "z1" => &["(-011)+01"],
        "z2" => &["0*(0')"],
        "d2m" => &["1*((((1+1)+1)+1)+1)"],
        _ => return None,
    };
    let mut report = Report::new("determinism-counterexamples", sys.id());
    for text in texts {
        let t = crate::term::parse_term(text, sys.signature()).expect("counterexample parses");
        let r = deterministic_path(sys, &t, config.max_steps);
        report.expect(!r.deterministic && r.branch.is_some(), *text, || {
            format!("rewrites deterministically to {}", render_term(&r.path.final_term, Style::Minimal))
        });
    }
    Some(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(ids: &[&str]) -> SuiteConfig {
        SuiteConfig {
            max_size: 5,
            random_terms: 20,
            samples: 20,
            ring_bound: 6,
            unary_bound: 5,
            ..SuiteConfig::for_systems(ids.iter().copied())
        }
    }

    #[test]
    fn suites_pass_on_small_budgets() {
        let config = small(&["d2", "z1", "n3", "z4p"]);
        for suite in Suite::ALL {
            let r = run_suite(suite, &config).unwrap();
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let config = small(&["z2", "d1"]);
        let a = run_suite(Suite::Confluence, &config).unwrap().to_json();
        let b = run_suite(Suite::Confluence, &config).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"seed\": 42"));
    }

    #[test]
    fn unknown_system_is_an_error() {
        assert!(run_suite(Suite::Soundness, &SuiteConfig::for_systems(["q7"])).is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("fixture".parse::<Suite>().is_err());
    }

    #[test]
    fn pairs_cover_the_grid() {
        let ns = numerals(View::RING, 0..=25);
        assert_eq!(pairs(Op::Plus, &ns, &ns).len(), 676);
        let us = numerals(View::UNARY_NAT, 0..=12);
        assert_eq!(pairs(Op::Times, &us, &us).len(), 169);
    }

    #[test]
    fn broken_system_fails_characterization() {
        use crate::rewrite::Rule;
        use crate::term::Signature;
        // x+0 -> x alone leaves 0+1 irreducible but not canonical
        let r = Rule::parse("R1", "x+0 -> x", &Signature::RING).unwrap();
        let sys = System::custom("partial", Signature::RING, vec![r]);
        let report = characterization(&sys, &small(&[]));
        assert!(!report.passed());
    }
}
