//! Exhaustive scans over symmetric groups: classification counts, minimal
//! forbidden patterns and pattern-avoidance characterizations.
//!
//! Scans split `S_n` into fixed lexicographic blocks and merge block results
//! in order, so reports do not depend on the number of workers.

pub mod error;
pub mod fixtures;
pub mod patterns;
pub mod positivity;
pub mod predicate;
pub mod report;
pub mod scan;
pub mod suite;

pub use error::{LabError, Result};
pub use patterns::PatternSet;
pub use positivity::code_pattern_positivity_scan;
pub use predicate::PredicateSpec;
pub use report::{PositivityReport, ScanReport, SizeCount, Verification};
pub use scan::{
    classify_all, classify_range, closure_self_test, minimal_forbidden_patterns, scan_minimal,
    verify_avoidance_characterization, verify_random, ScanConfig,
};
pub use suite::{Suite, SuiteReport};
