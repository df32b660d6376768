//! Pattern-closed permutation classes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use stanley_core::ls::{eg_number_capped, multiplicity_bound};
use stanley_core::{Diagram, Permutation};

use crate::error::{LabError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PredicateSpec {
    /// Avoids 2143.
    Vexillary,
    /// `EG(w) <= k`.
    KVex(u64),
    MultFree,
    /// Every Schur coefficient of `F_w` is at most `k`.
    MultBound(u64),
    /// The row/column graph of `D(w)` is a forest.
    Forest,
    /// No three essential cells strictly increasing in both coordinates.
    Essential3,
    /// The essential set splits into at most two lattice paths.
    EssPath2,
}

impl PredicateSpec {
    pub fn eval(&self, w: &Permutation) -> Result<bool> {
        Ok(match *self {
            PredicateSpec::Vexillary => w.is_vexillary(),
            PredicateSpec::KVex(k) => eg_number_capped(w, k)?.is_some(),
            PredicateSpec::MultFree => multiplicity_bound(w)? <= 1,
            PredicateSpec::MultBound(k) => multiplicity_bound(w)? <= k,
            PredicateSpec::Forest => Diagram::rothe(w).graph_is_forest(),
            PredicateSpec::Essential3 => !has_essential_3_chain(w),
            PredicateSpec::EssPath2 => essential_path_count(w) <= 2,
        })
    }

    /// Evaluates on a padded one-line byte vector.
    pub fn eval_bytes(&self, v: &[u8]) -> Result<bool> {
        self.eval(&Permutation::from_oneline_bytes(v)?)
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn all_shipped() -> Vec<PredicateSpec> {
        vec![
            PredicateSpec::Vexillary,
            PredicateSpec::KVex(1),
            PredicateSpec::KVex(2),
            PredicateSpec::KVex(3),
            PredicateSpec::MultFree,
            PredicateSpec::MultBound(2),
            PredicateSpec::Forest,
            PredicateSpec::Essential3,
            PredicateSpec::EssPath2,
        ]
    }
}

fn has_essential_3_chain(w: &Permutation) -> bool {
    let ess: Vec<(usize, usize)> = Diagram::rothe(w).essential_set().into_iter().collect();
    // Longest chain ending at each cell, in row-major order.
    let mut height = vec![1usize; ess.len()];
    for b in 0..ess.len() {
        for a in 0..b {
            if ess[a].0 < ess[b].0 && ess[a].1 < ess[b].1 {
                height[b] = height[b].max(height[a] + 1);
            }
        }
        if height[b] >= 3 {
            return true;
        }
    }
    false
}

/// Peels off the north-east boundary path of the essential set repeatedly
/// and counts the paths.
fn essential_path_count(w: &Permutation) -> usize {
    let mut rest: Vec<(usize, usize)> = Diagram::rothe(w).essential_set().into_iter().collect();
    let mut paths = 0;
    while !rest.is_empty() {
        let (outer, inner): (Vec<_>, Vec<_>) = rest
            .iter()
            .partition(|&&(i, j)| !rest.iter().any(|&(a, b)| a > i && b > j));
        debug_assert!(!outer.is_empty());
        rest = inner;
        paths += 1;
    }
    paths
}

impl fmt::Display for PredicateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PredicateSpec::Vexillary => write!(f, "vexillary"),
            PredicateSpec::KVex(k) => write!(f, "kvex({k})"),
            PredicateSpec::MultFree => write!(f, "multfree"),
            PredicateSpec::MultBound(k) => write!(f, "multbound({k})"),
            PredicateSpec::Forest => write!(f, "forest"),
            PredicateSpec::Essential3 => write!(f, "essential3"),
            PredicateSpec::EssPath2 => write!(f, "esspath2"),
        }
    }
}

/// Accepts `kvex(2)`, `kvex2`, `kvex:2` and likewise for `multbound`.
impl FromStr for PredicateSpec {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let unknown = || LabError::UnknownPredicate(s.to_string());
        let param = |prefix: &str| -> Option<Result<u64>> {
            let rest = t.strip_prefix(prefix)?;
            let rest = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| rest.strip_prefix(':'))
                .unwrap_or(rest);
            Some(match rest.trim().parse::<u64>() {
                Ok(k) if k >= 1 => Ok(k),
                _ => Err(unknown()),
            })
        };
        match t.as_str() {
            "vexillary" | "vex" => return Ok(PredicateSpec::Vexillary),
            "multfree" => return Ok(PredicateSpec::MultFree),
            "forest" => return Ok(PredicateSpec::Forest),
            "essential3" => return Ok(PredicateSpec::Essential3),
            "esspath2" => return Ok(PredicateSpec::EssPath2),
            _ => {}
        }
        if let Some(k) = param("kvex") {
            return Ok(PredicateSpec::KVex(k?));
        }
        if let Some(k) = param("multbound") {
            return Ok(PredicateSpec::MultBound(k?));
        }
        Err(unknown())
    }
}
