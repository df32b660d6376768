//! Code patterns: `F_w - F_v` is Schur positive whenever `v` is obtained
//! by deleting a zero from the code of `w`.

use stanley_core::ls::stanley_via_ls;
use stanley_core::Permutation;

use crate::error::Result;
use crate::report::PositivityReport;
use crate::scan::ScanConfig;

/// Largest `n` the scan accepts.
pub const MAX_POSITIVITY_N: usize = 8;

struct Pairs {
    pairs: u64,
    positivity: Vec<String>,
    inheritance: Vec<String>,
}

fn check(w: &Permutation) -> Result<Pairs> {
    let fw = stanley_via_ls(w)?;
    let w_free = fw.max_multiplicity() <= 1;
    let mut out = Pairs {
        pairs: 0,
        positivity: Vec::new(),
        inheritance: Vec::new(),
    };
    for v in w.code_pattern_children() {
        if v == *w {
            continue;
        }
        let fv = stanley_via_ls(&v)?;
        out.pairs += 1;
        if fw.checked_sub(&fv).is_none() {
            out.positivity.push(format!("{w} > {v}"));
        }
        if w_free && fv.max_multiplicity() > 1 {
            out.inheritance.push(format!("{w} > {v}"));
        }
    }
    Ok(out)
}

/// Checks every `w ∈ S_n` against all of its simple code patterns.
pub fn code_pattern_positivity_scan(n: usize, cfg: &ScanConfig) -> Result<PositivityReport> {
    let capped = ScanConfig {
        max_n: cfg.max_n.min(MAX_POSITIVITY_N),
        ..cfg.clone()
    };
    capped.check_size(n)?;
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let parts = cfg.exec.map(&perms, check);
    let mut report = PositivityReport {
        n,
        permutations: perms.len() as u64,
        pairs: 0,
        positivity_failures: Vec::new(),
        inheritance_failures: Vec::new(),
    };
    for p in parts {
        let p = p?;
        report.pairs += p.pairs;
        report.positivity_failures.extend(p.positivity);
        report.inheritance_failures.extend(p.inheritance);
    }
    Ok(report)
}
