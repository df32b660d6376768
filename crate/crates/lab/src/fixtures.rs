//! Published pattern lists, one pattern per line.

use stanley_core::Permutation;

use crate::error::Result;
use crate::patterns::{parse_pattern_list, PatternSet};
use crate::predicate::PredicateSpec;

pub const VEXILLARY: &str = include_str!("../fixtures/vexillary.txt");
pub const KVEX2: &str = include_str!("../fixtures/kvex2.txt");
pub const KVEX3: &str = include_str!("../fixtures/kvex3.txt");
pub const FOREST: &str = include_str!("../fixtures/forest.txt");
pub const ESSENTIAL3: &str = include_str!("../fixtures/essential3.txt");

/// The shipped list characterizing `spec`, if there is one.
pub fn fixture_text(spec: PredicateSpec) -> Option<&'static str> {
    match spec {
        PredicateSpec::Vexillary | PredicateSpec::KVex(1) => Some(VEXILLARY),
        PredicateSpec::KVex(2) => Some(KVEX2),
        PredicateSpec::KVex(3) => Some(KVEX3),
        PredicateSpec::Forest => Some(FOREST),
        PredicateSpec::Essential3 | PredicateSpec::EssPath2 => Some(ESSENTIAL3),
        _ => None,
    }
}

pub fn fixture_patterns(spec: PredicateSpec) -> Option<Result<Vec<Permutation>>> {
    fixture_text(spec).map(parse_pattern_list)
}

pub fn fixture_set(spec: PredicateSpec) -> Option<Result<PatternSet>> {
    fixture_patterns(spec).map(|r| r.map(PatternSet::new))
}
