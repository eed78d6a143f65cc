//! Reduct-graph search and unique-path determinism.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::catalog::System;
use crate::rewrite::{all_one_step_reducts, find_redexes, rewrite_at, Redex, StepRecord, Trace};
use crate::term::Term;

pub const DEFAULT_MAX_STATES: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub normal_forms: BTreeSet<Term>,
    pub states_explored: usize,
    /// The search stopped at `max_states` before exhausting the graph.
    pub truncated: bool,
}

impl ConfluenceReport {
    /// Exactly one normal form over the whole reduct graph.
    pub fn unique_normal_form(&self) -> Option<&Term> {
        match (self.truncated, self.normal_forms.len()) {
            (false, 1) => self.normal_forms.first(),
            _ => None,
        }
    }
}

/// Breadth-first closure of the one-step reducts of `t`.
pub fn bfs_normal_forms(sys: &System, t: &Term, max_states: usize) -> ConfluenceReport {
    let mut seen: HashSet<Term> = HashSet::from([t.clone()]);
    let mut queue = VecDeque::from([t.clone()]);
    let mut normal_forms = BTreeSet::new();
    let mut explored = 0;
    while let Some(cur) = queue.pop_front() {
        if explored == max_states {
            return ConfluenceReport {
                normal_forms,
                states_explored: explored,
                truncated: true,
            };
        }
        explored += 1;
        let reducts = all_one_step_reducts(sys, &cur);
        if reducts.is_empty() {
            normal_forms.insert(cur);
            continue;
        }
        for r in reducts {
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    ConfluenceReport {
        normal_forms,
        states_explored: explored,
        truncated: false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub term: Term,
    pub redexes: Vec<Redex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminismReport {
    pub deterministic: bool,
    /// The path to the normal form, or the unique prefix up to the branch.
    pub path: Trace,
    pub branch: Option<Branch>,
}

/// Follows the only redex for as long as there is exactly one. Stops at a
/// normal form, at the first state with two or more redexes, or after
/// `max_steps` steps (reported as not deterministic with no branch).
pub fn deterministic_path(sys: &System, t: &Term, max_steps: usize) -> DeterminismReport {
    let mut steps = Vec::new();
    let mut cur = t.clone();
    let branch = loop {
        let mut redexes = find_redexes(sys, &cur);
        match redexes.len() {
            0 => break None,
            1 if steps.len() == max_steps => break None,
            1 => {
                let r = redexes.pop().expect("one redex");
                let next = rewrite_at(sys, &cur, &r.position, &r.rule).expect("enumerated redex applies");
                steps.push(StepRecord {
                    rule_id: r.rule,
                    position: r.position,
                    before: cur,
                    after: next.clone(),
                });
                cur = next;
            }
            _ => {
                break Some(Branch {
                    term: cur.clone(),
                    redexes,
                })
            }
        }
    };
    DeterminismReport {
        deterministic: branch.is_none() && find_redexes(sys, &cur).is_empty(),
        path: Trace {
            system: sys.id().to_string(),
            initial: t.clone(),
            steps,
            final_term: cur,
        },
        branch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::get_system;
    use crate::rewrite::DEFAULT_MAX_STEPS;
    use crate::term::parse_term;

    fn term(id: &str, s: &str) -> (&'static System, Term) {
        let sys = get_system(id).unwrap();
        (sys, parse_term(s, sys.signature()).unwrap())
    }

    fn redex_pairs(b: &Branch) -> Vec<(String, &str)> {
        b.redexes
            .iter()
            .map(|r| (r.position.to_string(), r.rule.as_str()))
            .collect()
    }

    #[test]
    fn bfs_examples() {
        let (z1, t) = term("z1", "(-011)+01");
        let r = bfs_normal_forms(z1, &t, 1000);
        assert_eq!(r.unique_normal_form(), Some(&parse_term("-01", z1.signature()).unwrap()));
        assert!(r.states_explored > 3);

        let (d2, t) = term("d2", "0*(1+1)");
        let r = bfs_normal_forms(d2, &t, 1000);
        assert_eq!(r.unique_normal_form(), Some(&Term::Zero));

        let (d1, t) = term("d1", "1");
        let r = bfs_normal_forms(d1, &t, 1000);
        assert_eq!((r.states_explored, r.unique_normal_form()), (1, Some(&Term::One)));
    }

    #[test]
    fn bfs_truncates() {
        let (d1, t) = term("d1", "(1+1)*((1+1)+1)");
        let r = bfs_normal_forms(d1, &t, 3);
        assert!(r.truncated);
        assert_eq!(r.states_explored, 3);
        assert_eq!(r.unique_normal_form(), None);
    }

    #[test]
    fn determinism_examples() {
        let (d2, t) = term("d2", "(1+1)+(1+1)");
        let r = deterministic_path(d2, &t, DEFAULT_MAX_STEPS);
        assert!(r.deterministic);
        assert_eq!(r.path.final_term, parse_term("((1+1)+1)+1", d2.signature()).unwrap());

        let (_, t) = term("d2", "0+(-(1+1))");
        let r = deterministic_path(d2, &t, DEFAULT_MAX_STEPS);
        assert!(!r.deterministic);
        let b = r.branch.unwrap();
        assert_eq!(b.term, parse_term("-((-0)+(1+1))", d2.signature()).unwrap());
        assert_eq!(redex_pairs(&b), [("1".to_string(), "R3'"), ("1.1".to_string(), "R7")]);

        let (n1, t) = term("n1", "(0')*((0')')");
        assert!(deterministic_path(n1, &t, DEFAULT_MAX_STEPS).deterministic);

        let (z1, t) = term("z1", "(-011)+01");
        let r = deterministic_path(z1, &t, DEFAULT_MAX_STEPS);
        assert!(!r.deterministic);
        assert_eq!(r.branch.unwrap().term, parse_term("((-011)')+0", z1.signature()).unwrap());
        assert_eq!(r.path.steps.len(), 1);
    }

    #[test]
    fn step_budget_is_not_determinism() {
        let (n1, t) = term("n1", "011*011");
        let r = deterministic_path(n1, &t, 2);
        assert!(!r.deterministic);
        assert!(r.branch.is_none());
        assert_eq!(r.path.steps.len(), 2);
    }
}
