//! Acceptance gate: one line per criterion, exit status 1 if any fails.
//!
//! Every criterion runs at full budget with its runtime bound. Expected
//! values (rule counts, grid sizes, renamed rules) are restated here rather
//! than read back from the library.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ddrs_core::catalog::{all_systems, get_system};
use ddrs_core::rewrite::Pattern;
use ddrs_core::verify::{run_suite, Suite, SuiteConfig, SuiteReport};
use ddrs_core::{Report, Symbol};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Outcome {
        Outcome {
            ok,
            detail: detail.into(),
        }
    }
}

fn suite(s: Suite, config: &SuiteConfig) -> SuiteReport {
    run_suite(s, config).expect("catalog ids are valid")
}

fn failures(reports: &[&Report]) -> String {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| {
            let first = r
                .counterexamples
                .first()
                .map(|c| format!(" e.g. {}: {}", c.term, c.detail))
                .unwrap_or_default();
            format!("{}/{} failed {}{first}", r.check, r.system, r.failed)
        })
        .collect();
    bad.join("; ")
}

fn summarize(reports: &[&Report], what: &str) -> Outcome {
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let ok = !reports.is_empty() && reports.iter().all(|r| r.passed());
    let detail = if ok {
        format!("{checked} {what}")
    } else {
        failures(reports)
    };
    Outcome::new(ok, detail)
}

const RULE_COUNTS: [(&str, usize); 16] = [
    ("d0", 15),
    ("d1", 12),
    ("d2", 12),
    ("d2m", 12),
    ("n1", 4),
    ("n2", 4),
    ("n3", 4),
    ("n4", 4),
    ("z1", 9),
    ("z2", 9),
    ("z3", 9),
    ("z4", 9),
    ("z1p", 13),
    ("z2p", 13),
    ("z3p", 13),
    ("z4p", 13),
];

fn rule_counts() -> Outcome {
    let report = suite(Suite::Fixtures, &SuiteConfig::default());
    let counted: Vec<&Report> = report.checks.iter().filter(|r| r.check == "rule-count").collect();
    let mut wrong = Vec::new();
    for (id, n) in RULE_COUNTS {
        let found = get_system(id).map(|s| s.rules().len()).unwrap_or(0);
        if found != n {
            wrong.push(format!("{id} has {found}, expected {n}"));
        }
    }
    let ok = wrong.is_empty() && counted.len() == 16 && counted.iter().all(|r| r.passed());
    Outcome::new(
        ok,
        if ok {
            "16 systems".to_string()
        } else {
            format!("{} {}", wrong.join(", "), failures(&counted))
        },
    )
}

fn completeness() -> Outcome {
    let report = suite(Suite::Confluence, &SuiteConfig::default());
    let refs: Vec<&Report> = report.checks.iter().collect();
    let mut out = summarize(&refs, "terms normalized by li, lo and full search");
    out.ok &= refs.len() == 16;
    out
}

fn termination() -> Outcome {
    let report = suite(Suite::Termination, &SuiteConfig::default());
    let refs: Vec<&Report> = report.checks.iter().collect();
    let mut out = summarize(&refs, "terms with every step decreasing");
    let worst = refs
        .iter()
        .map(|r| (r.skipped as f64 / (r.checked + r.skipped).max(1) as f64, r.system.as_str()))
        .fold((0.0, ""), |a, b| if b.0 > a.0 { b } else { a });
    let skipped: usize = refs.iter().map(|r| r.skipped).sum();
    out.detail += &format!(
        ", {skipped} overflow skips, worst {} at {:.2}%",
        worst.1,
        100.0 * worst.0
    );
    out.ok &= refs.len() == 16 && worst.0 <= 0.05;
    out
}

fn checks_named<'a>(r: &'a SuiteReport, name: &str) -> Vec<&'a Report> {
    r.checks.iter().filter(|c| c.check == name).collect()
}

fn d2_determinism() -> Outcome {
    let report = suite(Suite::Determinism, &SuiteConfig::for_systems(["d2"]));
    let add = checks_named(&report, "determinism-addition");
    let neg = checks_named(&report, "determinism-one-plus-negative");
    let mut out = summarize(&[add.clone(), neg.clone()].concat(), "sums");
    out.ok &= add.len() == 1 && add[0].checked == 26 * 26 && neg.len() == 1 && neg[0].checked == 25;
    out
}

fn n1_determinism() -> Outcome {
    let report = suite(Suite::Determinism, &SuiteConfig::for_systems(["n1"]));
    let add = checks_named(&report, "determinism-addition");
    let mul = checks_named(&report, "determinism-multiplication");
    let mut out = summarize(&[add.clone(), mul.clone()].concat(), "sums and products");
    out.ok &= add.len() == 1 && add[0].checked == 13 * 13 && mul.len() == 1 && mul[0].checked == 13 * 13;
    out
}

fn counterexamples() -> Outcome {
    let report = suite(Suite::Fixtures, &SuiteConfig::default());
    let expected = [
        ("z1-append-branch", 1),
        ("d2-zero-plus-negative", 2),
        ("d2-negative-plus-negative", 4),
        ("d2-times-branch", 1),
        ("z2-times-branch", 1),
        ("d2m-associativity-branch", 1),
    ];
    let mut refs = Vec::new();
    let mut missing = Vec::new();
    for (name, _) in expected {
        let found = checks_named(&report, name);
        if found.is_empty() {
            missing.push(name);
        }
        refs.extend(found);
    }
    let mut out = summarize(&refs, "fixture assertions");
    if !missing.is_empty() {
        out.ok = false;
        out.detail += &format!(" missing {missing:?}");
    }
    out
}

fn soundness() -> Outcome {
    let config = SuiteConfig::default();
    let report = suite(Suite::Soundness, &config);
    let refs: Vec<&Report> = report.checks.iter().collect();
    let mut out = summarize(&refs, "rule instances");
    let rules: usize = all_systems().iter().map(|s| s.rules().len()).sum();
    let expected = rules * 200;
    out.ok &= config.samples == 200 && config.seed == 42 && report.checks.iter().map(|r| r.checked).sum::<usize>() == expected;
    out
}

fn characterization() -> Outcome {
    let report = suite(Suite::Characterization, &SuiteConfig::default());
    let refs: Vec<&Report> = report.checks.iter().collect();
    let mut out = summarize(&refs, "terms classified");
    out.ok &= refs.len() == 16;
    out
}

fn rename(p: &Pattern) -> Pattern {
    match p {
        Pattern::Var(v) => Pattern::Var(v.clone()),
        Pattern::App(Symbol::Append, c) => Pattern::App(Symbol::Succ, c.iter().map(rename).collect()),
        Pattern::App(s, c) => Pattern::App(*s, c.iter().map(rename).collect()),
    }
}

fn renaming() -> Outcome {
    let mut problems = Vec::new();
    let mut compared = 0;
    for (succ, unary) in [("n3", "n2"), ("z3", "z2"), ("n4", "n1"), ("z4", "z1")] {
        let s = get_system(succ).expect("catalog");
        let u = get_system(unary).expect("catalog");
        if s.rules().len() != u.rules().len() {
            problems.push(format!("{succ}/{unary} sizes differ"));
            continue;
        }
        for (rs, ru) in s.rules().iter().zip(u.rules()) {
            compared += 1;
            if rs.lhs() != &rename(ru.lhs()) || rs.rhs() != &rename(ru.rhs()) {
                problems.push(format!("{succ}/{} vs {unary}/{}", rs.id(), ru.id()));
            }
        }
    }
    let report = suite(Suite::Fixtures, &SuiteConfig::for_systems(["n3"]));
    let fixture = checks_named(&report, "succ-renaming");
    let ok = problems.is_empty() && compared == 26 && fixture.len() == 1 && fixture[0].passed();
    Outcome::new(
        ok,
        if ok {
            format!("{compared} rules match")
        } else {
            format!("{problems:?} {}", failures(&fixture))
        },
    )
}

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "rule counts", Duration::from_secs(1), rule_counts),
        (2, "ground completeness", Duration::from_secs(300), completeness),
        (3, "strong termination by weights", Duration::from_secs(120), termination),
        (4, "d2 addition determinism", Duration::from_secs(30), d2_determinism),
        (5, "n1 addition and multiplication determinism", Duration::from_secs(60), n1_determinism),
        (6, "branching counterexamples", Duration::from_secs(1), counterexamples),
        (7, "rule soundness", Duration::from_secs(60), soundness),
        (8, "normal-form characterization", Duration::from_secs(60), characterization),
        (9, "successor renaming", Duration::from_secs(1), renaming),
    ];
    // Build the catalog outside the timed sections.
    let _ = all_systems();
    let mut all_ok = true;
    for (n, name, bound, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= bound;
        let ok = outcome.ok && in_time;
        all_ok &= ok;
        println!(
            "criterion {n} {}: {name}: {} [{:.2}s of {}s]{}",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            bound.as_secs(),
            if in_time { "" } else { " over time" }
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
