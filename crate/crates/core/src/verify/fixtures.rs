//! Exact reproductions of known reductions: rule inventories, branching
//! counterexamples and their convergence, and catalog relationships.

use crate::catalog::{get_system, renaming_mismatches, System, EXPECTED_RULE_COUNTS, RENAMINGS};
use crate::report::Report;
use crate::rewrite::{all_one_step_reducts, find_redexes, rewrite_at, Rule, DEFAULT_MAX_STEPS};
use crate::semantics::{canonical_term, eval_int};
use crate::term::{parse_term, Term};

use super::explore::{bfs_normal_forms, deterministic_path};

/// Applies each rule in turn at the single position where it matches.
pub fn follow(sys: &System, t: &Term, rules: &[&str]) -> Result<Term, String> {
    let mut cur = t.clone();
    for rule in rules {
        let at: Vec<_> = find_redexes(sys, &cur)
            .into_iter()
            .filter(|r| r.rule == *rule)
            .collect();
        let [r] = at.as_slice() else {
            return Err(format!("{rule} matches {} times in {cur}", at.len()));
        };
        cur = rewrite_at(sys, &cur, &r.position, rule).map_err(|e| e.to_string())?;
    }
    Ok(cur)
}

fn redex_list(sys: &System, t: &Term) -> Vec<(String, String)> {
    find_redexes(sys, t)
        .into_iter()
        .map(|r| (r.position.to_string(), r.rule))
        .collect()
}

/// A forced first step into a two-way branch whose arms rejoin.
struct Diamond {
    name: &'static str,
    system: &'static str,
    start: String,
    first: &'static str,
    fork: String,
    redexes: [(&'static str, &'static str); 2],
    left: &'static [&'static str],
    right: &'static [&'static str],
    join: String,
}

fn check_diamond(d: &Diamond) -> Report {
    let mut report = Report::new(d.name, d.system);
    let sys = get_system(d.system).expect("catalog system");
    let parse = |s: &str| parse_term(s, sys.signature()).expect("fixture term parses");
    let start = parse(&d.start);
    let fork = parse(&d.fork);
    let join = parse(&d.join);

    let first = redex_list(sys, &start);
    report.expect(
        first.len() == 1 && first[0] == ("e".to_string(), d.first.to_string()),
        &d.start,
        || format!("expected the single redex e {}, found {first:?}", d.first),
    );
    let after = follow(sys, &start, &[d.first]);
    report.expect(after.as_ref() == Ok(&fork), &d.start, || {
        format!("{} gives {after:?}, expected {fork}", d.first)
    });

    let expected: Vec<(String, String)> = d
        .redexes
        .iter()
        .map(|(p, r)| (p.to_string(), r.to_string()))
        .collect();
    let found = redex_list(sys, &fork);
    report.expect(found == expected, &d.fork, || {
        format!("redexes {found:?}, expected {expected:?}")
    });

    for arm in [d.left, d.right] {
        let end = follow(sys, &fork, arm);
        report.expect(end.as_ref() == Ok(&join), &d.fork, || {
            format!("{arm:?} gives {end:?}, expected {join}")
        });
    }

    let dp = deterministic_path(sys, &start, DEFAULT_MAX_STEPS);
    report.expect(
        !dp.deterministic && dp.branch.as_ref().map(|b| &b.term) == Some(&fork),
        &d.start,
        || "deterministic_path does not branch at the fork".to_string(),
    );

    let nf = canonical_term(&eval_int(&start), sys.view()).expect("value in view");
    let bfs = bfs_normal_forms(sys, &start, 100_000);
    report.expect(bfs.unique_normal_form() == Some(&nf), &d.start, || {
        format!("normal forms {:?}, expected only {nf}", bfs.normal_forms)
    });
    report
}

fn diamonds() -> Vec<Diamond> {
    let mut out = vec![Diamond {
        name: "z1-append-branch",
        system: "z1",
        start: "(-011)+01".into(),
        first: "U2",
        fork: "((-011)')+0".into(),
        redexes: [("e", "U1"), ("1", "U6")],
        left: &["U1", "U6"],
        right: &["U6", "U1"],
        join: "-01".into(),
    }];
    for r in ["1", "1+1"] {
        out.push(Diamond {
            name: "d2-zero-plus-negative",
            system: "d2",
            start: format!("0+(-({r}+1))"),
            first: "R11",
            fork: format!("-((-0)+({r}+1))"),
            redexes: [("1", "R3'"), ("1.1", "R7")],
            left: &["R3'", "R7"],
            right: &["R7", "R3'"],
            join: format!("-((0+({r}))+1)"),
        });
    }
    for t in ["1", "1+1"] {
        for r in ["1", "1+1"] {
            out.push(Diamond {
                name: "d2-negative-plus-negative",
                system: "d2",
                start: format!("(-({t}))+(-({r}+1))"),
                first: "R11",
                fork: format!("-((-(-({t})))+({r}+1))"),
                redexes: [("1", "R3'"), ("1.1", "R10")],
                left: &["R3'", "R10"],
                right: &["R10", "R3'"],
                join: format!("-((({t})+({r}))+1)"),
            });
        }
    }
    out.push(Diamond {
        name: "d2-times-branch",
        system: "d2",
        start: "0*(1+1)".into(),
        first: "R6'",
        fork: "(0*1)+0".into(),
        redexes: [("e", "R1"), ("1", "R5")],
        left: &["R5", "R1"],
        right: &["R1", "R5"],
        join: "0".into(),
    });
    out.push(Diamond {
        name: "z2-times-branch",
        system: "z2",
        start: "0*(0')".into(),
        first: "U4'",
        fork: "(0*0)+0".into(),
        redexes: [("e", "U1"), ("1", "U3")],
        left: &["U1", "U3"],
        right: &["U3", "U1"],
        join: "0".into(),
    });
    out
}

fn rule_counts(systems: &[&System]) -> Vec<Report> {
    systems
        .iter()
        .map(|sys| {
            let mut r = Report::new("rule-count", sys.id());
            let expected = EXPECTED_RULE_COUNTS
                .iter()
                .find(|(id, _)| *id == sys.id())
                .map(|&(_, n)| n);
            let found = sys.rules().len();
            r.expect(expected == Some(found), sys.id(), || {
                format!("{found} rules, expected {expected:?}")
            });
            r
        })
        .collect()
}

fn d2m_footnote() -> Report {
    let mut report = Report::new("d2m-associativity-branch", "d2m");
    let sys = get_system("d2m").expect("catalog system");
    let parse = |s: &str| parse_term(s, sys.signature()).expect("fixture term parses");
    let t = parse("1+((1+(1+1))+1)");
    let expected = [parse("(1+(1+(1+1)))+1"), parse("1+(((1+1)+1)+1)")]
        .into_iter()
        .collect();
    let reducts = all_one_step_reducts(sys, &t);
    report.expect(reducts == expected, "1+((1+(1+1))+1)", || {
        format!("one-step reducts {reducts:?}")
    });

    // 1*5 reaches that term along a unique path and branches there.
    let start = parse("1*((((1+1)+1)+1)+1)");
    let dp = deterministic_path(sys, &start, DEFAULT_MAX_STEPS);
    let via = parse("1+(1+(1+(1+1)))");
    let passes_via = dp.path.steps.iter().any(|s| s.after == via);
    report.expect(
        !dp.deterministic && passes_via && dp.branch.as_ref().map(|b| &b.term) == Some(&t),
        "1*((((1+1)+1)+1)+1)",
        || format!("path ends at {} with branch {:?}", dp.path.final_term, dp.branch),
    );
    report
}

fn renaming() -> Report {
    let mut report = Report::new("succ-renaming", "catalog");
    for problem in renaming_mismatches() {
        report.fail_with("catalog", problem);
    }
    for &(succ, unary) in RENAMINGS {
        let n = get_system(succ).map(|s| s.rules().len()).unwrap_or(0);
        report.checked += n;
        report.note(format!("{succ} = rename({unary}), {n} rules"));
    }
    report
}

fn d0_composition() -> Report {
    let mut report = Report::new("d0-composition", "d0");
    let d0 = get_system("d0").expect("catalog system");
    let d1 = get_system("d1").expect("catalog system");
    let ids = |s: &System| s.rules().iter().map(Rule::id).map(String::from).collect::<Vec<_>>();
    let mut expected: Vec<String> = ids(d1).into_iter().filter(|id| id != "R11").collect();
    let r12 = expected.pop();
    expected.extend(["r5", "r6", "r7", "r11"].map(String::from));
    expected.extend(r12);
    let found = ids(d0);
    report.expect(found == expected, "d0", || format!("rules {found:?}"));
    for r in d1.rules().iter().filter(|r| r.id() != "R11") {
        report.expect(d0.rule(r.id()) == Some(r), r.id(), || "differs from d1".into());
    }
    report
}

/// All fixtures touching any of `systems`.
pub fn run_fixtures(systems: &[&System]) -> Vec<Report> {
    let selected = |id: &str| systems.iter().any(|s| s.id() == id);
    let mut out = rule_counts(systems);
    out.extend(diamonds().iter().filter(|d| selected(d.system)).map(check_diamond));
    if selected("d2m") {
        out.push(d2m_footnote());
    }
    if RENAMINGS.iter().any(|(a, b)| selected(a) || selected(b)) {
        out.push(renaming());
    }
    if selected("d0") {
        out.push(d0_composition());
    }
    merge_by_name(out)
}

// Instances of one fixture are reported together.
fn merge_by_name(reports: Vec<Report>) -> Vec<Report> {
    let mut out: Vec<Report> = Vec::new();
    for r in reports {
        match out
            .iter_mut()
            .find(|o| o.check == r.check && o.system == r.system && o.check != "rule-count")
        {
            Some(o) => o.absorb(r),
            None => out.push(r),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::all_systems;

    #[test]
    fn every_fixture_passes() {
        let systems: Vec<&System> = all_systems().iter().collect();
        let reports = run_fixtures(&systems);
        for r in &reports {
            assert!(r.passed(), "{r}\n{:#?}", r.counterexamples);
        }
        let names: Vec<&str> = reports.iter().map(|r| r.check.as_str()).collect();
        for n in [
            "z1-append-branch",
            "d2-zero-plus-negative",
            "d2-negative-plus-negative",
            "d2-times-branch",
            "z2-times-branch",
            "d2m-associativity-branch",
            "succ-renaming",
            "d0-composition",
        ] {
            assert!(names.contains(&n), "{n}");
        }
        assert_eq!(names.iter().filter(|n| **n == "rule-count").count(), 16);
    }

    #[test]
    fn selection_by_system() {
        let z1 = get_system("z1").unwrap();
        let reports = run_fixtures(&[z1]);
        let names: Vec<&str> = reports.iter().map(|r| r.check.as_str()).collect();
        assert_eq!(names, ["rule-count", "z1-append-branch", "succ-renaming"]);
    }

    #[test]
    fn follow_needs_a_unique_match() {
        let d1 = get_system("d1").unwrap();
        let t = parse_term("(0+0)+(0+0)", d1.signature()).unwrap();
        assert!(follow(d1, &t, &["R2"]).is_err());
        assert!(follow(d1, &t, &["R9"]).is_err());
        let u = parse_term("0*(1+1)", d1.signature()).unwrap();
        assert!(follow(d1, &u, &["R6"]).is_ok());
    }

    #[test]
    fn wrong_display_is_rejected() {
        // R4 instead of R5 on the times branch does not apply.
        let d2 = get_system("d2").unwrap();
        let fork = parse_term("(0*1)+0", d2.signature()).unwrap();
        assert!(follow(d2, &fork, &["R4"]).is_err());
    }
}
