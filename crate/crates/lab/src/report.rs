//! Scan results. Everything serialized here is independent of the worker
//! count; timings live in [`RuntimeStats`] and are only printed on request.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCount {
    pub n: usize,
    pub total: u64,
    pub satisfying: u64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RuntimeStats {
    pub workers: usize,
    pub per_n: Vec<(usize, Duration)>,
}

impl RuntimeStats {
    pub fn total(&self) -> Duration {
        self.per_n.iter().map(|(_, d)| *d).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub predicate: String,
    pub n_min: usize,
    pub n_max: usize,
    pub counts: Vec<SizeCount>,
    /// Compact notation, sorted by size then lexicographically.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimal_patterns: Option<Vec<String>>,
    #[serde(skip)]
    pub runtime: RuntimeStats,
}

impl ScanReport {
    pub fn count(&self, n: usize) -> Option<u64> {
        self.counts.iter().find(|c| c.n == n).map(|c| c.satisfying)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("predicate,n,total,satisfying\n");
        for c in &self.counts {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                self.predicate, c.n, c.total, c.satisfying
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.counts {
            let _ = writeln!(
                out,
                "n={} {}: {} of {}",
                c.n, self.predicate, c.satisfying, c.total
            );
        }
        if let Some(pats) = &self.minimal_patterns {
            let _ = writeln!(out, "minimal patterns ({}):", pats.len());
            for p in pats {
                let _ = writeln!(out, "{p}");
            }
        }
        out
    }

    pub fn timing_text(&self) -> String {
        let mut out = format!("workers: {}\n", self.runtime.workers);
        for (n, d) in &self.runtime.per_n {
            let _ = writeln!(out, "n={n}: {:.3}s", d.as_secs_f64());
        }
        out
    }
}

/// Outcome of checking "predicate holds iff every listed pattern is avoided".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub predicate: String,
    pub patterns: usize,
    pub checked: u64,
    /// Checked permutations satisfying the predicate.
    pub satisfying: u64,
    /// Permutations (compact notation) where the two sides disagree, capped.
    pub counterexamples: Vec<String>,
    pub counterexample_total: u64,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.counterexample_total == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub(crate) fn merge(&mut self, other: Verification, cap: usize) {
        self.checked += other.checked;
        self.satisfying += other.satisfying;
        self.counterexample_total += other.counterexample_total;
        for c in other.counterexamples {
            if self.counterexamples.len() < cap {
                self.counterexamples.push(c);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub n: usize,
    pub permutations: u64,
    pub pairs: u64,
    /// `w > v` pairs with `F_w - F_v` not Schur positive.
    pub positivity_failures: Vec<String>,
    /// `w > v` pairs with `w` multiplicity free but `v` not.
    pub inheritance_failures: Vec<String>,
}

impl PositivityReport {
    pub fn holds(&self) -> bool {
        self.positivity_failures.is_empty() && self.inheritance_failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
