//! Checking harness: reduct-graph search, determinism, term budgets and suites.

pub mod explore;
pub mod fixtures;
pub mod gen;
pub mod suite;

pub use explore::{
    bfs_normal_forms, deterministic_path, Branch, ConfluenceReport, DeterminismReport,
    DEFAULT_MAX_STATES,
};
pub use gen::{enumerate_ground_terms, random_budget, random_ground_term, TermGenerator};
pub use suite::{run_suite, Budget, Suite, SuiteConfig, SuiteReport};
