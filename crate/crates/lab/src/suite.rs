//! Named verification suites.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{LabError, Result};
use crate::fixtures::fixture_set;
use crate::positivity::code_pattern_positivity_scan;
use crate::predicate::PredicateSpec;
use crate::report::{PositivityReport, Verification};
use crate::scan::{verify_avoidance_characterization, ScanConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// A shipped pattern list against its predicate.
    Characterization(PredicateSpec),
    CodePatterns,
}

impl Suite {
    pub fn all() -> Vec<Suite> {
        vec![
            Suite::Characterization(PredicateSpec::Vexillary),
            Suite::Characterization(PredicateSpec::KVex(2)),
            Suite::Characterization(PredicateSpec::KVex(3)),
            Suite::Characterization(PredicateSpec::Forest),
            Suite::Characterization(PredicateSpec::Essential3),
            Suite::Characterization(PredicateSpec::EssPath2),
            Suite::CodePatterns,
        ]
    }

    /// For characterizations every `S_n` with `n <= max_n` is checked; for
    /// code patterns only `S_max_n`.
    pub fn run(&self, max_n: usize, cfg: &ScanConfig) -> Result<SuiteReport> {
        match *self {
            Suite::Characterization(spec) => {
                let set =
                    fixture_set(spec).ok_or_else(|| LabError::UnknownSuite(self.to_string()))??;
                Ok(SuiteReport::Characterization(
                    verify_avoidance_characterization(spec, &set, max_n, cfg)?,
                ))
            }
            Suite::CodePatterns => Ok(SuiteReport::CodePatterns(code_pattern_positivity_scan(
                max_n, cfg,
            )?)),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Suite::Characterization(spec) => write!(f, "{spec}"),
            Suite::CodePatterns => write!(f, "code-patterns"),
        }
    }
}

impl FromStr for Suite {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("code-patterns") {
            return Ok(Suite::CodePatterns);
        }
        let spec: PredicateSpec = s
            .parse()
            .map_err(|_| LabError::UnknownSuite(s.to_string()))?;
        if fixture_set(spec).is_none() {
            return Err(LabError::UnknownSuite(s.to_string()));
        }
        Ok(Suite::Characterization(spec))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SuiteReport {
    Characterization(Verification),
    CodePatterns(PositivityReport),
}

impl SuiteReport {
    pub fn holds(&self) -> bool {
        match self {
            SuiteReport::Characterization(v) => v.holds(),
            SuiteReport::CodePatterns(p) => p.holds(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        match self {
            SuiteReport::Characterization(v) => {
                let mut s = format!(
                    "{}: {} patterns, {} permutations checked, {} satisfying, {} counterexamples\n",
                    v.predicate, v.patterns, v.checked, v.satisfying, v.counterexample_total
                );
                for c in &v.counterexamples {
                    s.push_str(c);
                    s.push('\n');
                }
                s
            }
            SuiteReport::CodePatterns(p) => {
                let mut s = format!(
                    "code patterns in S_{}: {} permutations, {} pairs, {} positivity failures, {} inheritance failures\n",
                    p.n,
                    p.permutations,
                    p.pairs,
                    p.positivity_failures.len(),
                    p.inheritance_failures.len()
                );
                for c in p.positivity_failures.iter().chain(&p.inheritance_failures) {
                    s.push_str(c);
                    s.push('\n');
                }
                s
            }
        }
    }
}
