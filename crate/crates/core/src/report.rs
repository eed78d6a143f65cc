//! Pass/fail records produced by the checkers.

use std::fmt;

use serde::Serialize;

use crate::term::Term;

/// Counterexamples kept per report; further failures are only counted.
pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub term: String,
    pub detail: String,
}

/// Outcome of one check over one system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub system: String,
    /// Units examined (terms, rule instances, fixtures).
    pub checked: usize,
    /// Units left out, e.g. terms whose weight overflows.
    pub skipped: usize,
    pub failed: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Observations that do not affect the verdict.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(check: impl Into<String>, system: impl Into<String>) -> Report {
        Report {
            check: check.into(),
            system: system.into(),
            checked: 0,
            skipped: 0,
            failed: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn fail(&mut self, term: &Term, detail: impl Into<String>) {
        self.fail_with(term.to_string(), detail);
    }

    pub fn fail_with(&mut self, term: impl Into<String>, detail: impl Into<String>) {
        self.failed += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample {
                term: term.into(),
                detail: detail.into(),
            });
        }
    }

    /// Records one examined unit and fails it unless `ok`.
    pub fn expect(&mut self, ok: bool, term: impl Into<String>, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail_with(term, detail());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds another report for the same check into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failed += other.failed;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}/{}: {} checked, {} skipped, {} failed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check,
            self.system,
            self.checked,
            self.skipped,
            self.failed
        )
    }
}
