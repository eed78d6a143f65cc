//! Datatype-defining rewrite systems for integer and natural-number
//! arithmetic, with executable checks of their termination, ground
//! confluence, soundness and determinism.

pub mod catalog;
pub mod error;
pub mod report;
pub mod rewrite;
pub mod semantics;
pub mod term;
pub mod verify;
pub mod weights;

pub use catalog::{get_system, list_systems, System, SystemInfo};
pub use error::{Error, Result};
pub use report::{Counterexample, Report};
pub use rewrite::{
    find_redexes, is_normal_form, match_pattern, normal_form, normalize, rewrite_at, step, Binding,
    Limits, Pattern, Redex, Rule, StepRecord, Strategy, Trace,
};
pub use semantics::{canonical_term, eval_int, in_canonical_set, rule_soundness, View, ViewKind};
pub use term::{
    graft_at, parse_term, render_term, subterm_at, ParseError, Position, Signature, SignatureId,
    Style, Symbol,
    Term,
};
pub use verify::{
    bfs_normal_forms, deterministic_path, enumerate_ground_terms, random_ground_term, run_suite,
    Suite, SuiteConfig, SuiteReport,
};
pub use weights::{term_weight, weight_decrease_check, WeightScheme, WeightValue};
