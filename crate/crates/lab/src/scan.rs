//! Exhaustive scans over `S_n` in lexicographic blocks.

use std::ops::{Range, RangeInclusive};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stanley_core::perm::{factorial, rank, LexPermutations};
use stanley_core::{Execution, Permutation};

use crate::error::{LabError, Result};
use crate::patterns::{sort_size_lex, PatternSet};
use crate::predicate::PredicateSpec;
use crate::report::{RuntimeStats, ScanReport, SizeCount, Verification};

pub const DEFAULT_MAX_N: usize = 10;
pub const DEFAULT_BLOCK: usize = 2048;
pub const CLOSURE_TEST_MAX_N: usize = 6;

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub exec: Execution,
    pub max_n: usize,
    pub block: usize,
    /// Counterexamples kept verbatim in a [`Verification`].
    pub counterexample_cap: usize,
}

impl ScanConfig {
    pub fn with_workers(workers: usize) -> Self {
        ScanConfig {
            exec: Execution::parallel(workers),
            ..Self::default()
        }
    }

    pub fn sequential() -> Self {
        ScanConfig {
            exec: Execution::sequential(),
            ..Self::default()
        }
    }

    pub(crate) fn check_size(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            let estimate = (1..=n as u128).product();
            return Err(LabError::TooLarge {
                n,
                max: self.max_n,
                estimate,
            });
        }
        Ok(())
    }

    fn blocks<R, F>(&self, n: usize, f: F) -> Result<Vec<R>>
    where
        R: Send,
        F: Fn(Range<usize>) -> Result<R> + Sync + Send,
    {
        self.exec
            .map_blocks(factorial(n), self.block, f)
            .into_iter()
            .collect()
    }
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            exec: Execution::default(),
            max_n: DEFAULT_MAX_N,
            block: DEFAULT_BLOCK,
            counterexample_cap: 16,
        }
    }
}

fn perms_in(n: usize, r: &Range<usize>) -> impl Iterator<Item = Vec<u8>> {
    LexPermutations::from_rank(n, r.start).take(r.len())
}

/// Flattened one-line notation of `w` with position `i` removed.
fn delete_flat(w: &[u8], i: usize) -> Vec<u8> {
    let x = w[i];
    w.iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &y)| if y > x { y - 1 } else { y })
        .collect()
}

/// Per-permutation predicate values of `S_n`, indexed by lexicographic rank.
fn table(spec: PredicateSpec, n: usize, cfg: &ScanConfig) -> Result<Vec<bool>> {
    let parts = cfg.blocks(n, |r| {
        perms_in(n, &r)
            .map(|w| spec.eval_bytes(&w))
            .collect::<Result<Vec<bool>>>()
    })?;
    Ok(parts.concat())
}

/// Counts of permutations satisfying `spec` in `S_1, …, S_n_max`.
pub fn classify_all(n_max: usize, spec: PredicateSpec, cfg: &ScanConfig) -> Result<ScanReport> {
    classify_range(1..=n_max, spec, cfg)
}

pub fn classify_range(
    sizes: RangeInclusive<usize>,
    spec: PredicateSpec,
    cfg: &ScanConfig,
) -> Result<ScanReport> {
    cfg.check_size(*sizes.end())?;
    let mut counts = Vec::new();
    let mut runtime = RuntimeStats {
        workers: cfg.exec.workers(),
        per_n: Vec::new(),
    };
    for n in sizes.clone() {
        let start = Instant::now();
        let parts = cfg.blocks(n, |r| {
            let mut hits = 0u64;
            for w in perms_in(n, &r) {
                hits += spec.eval_bytes(&w)? as u64;
            }
            Ok(hits)
        })?;
        counts.push(SizeCount {
            n,
            total: factorial(n) as u64,
            satisfying: parts.iter().sum(),
        });
        runtime.per_n.push((n, start.elapsed()));
    }
    Ok(ScanReport {
        predicate: spec.name(),
        n_min: *sizes.start(),
        n_max: *sizes.end(),
        counts,
        minimal_patterns: None,
        runtime,
    })
}

struct MineBlock {
    satisfied: Vec<bool>,
    minimal: Vec<Vec<u8>>,
    violation: Option<(Vec<u8>, Vec<u8>)>,
}

/// Counts per size together with the minimal permutations failing `spec`:
/// those whose one-point deletions all satisfy it. Checks pattern closure
/// at every size along the way.
pub fn scan_minimal(n_max: usize, spec: PredicateSpec, cfg: &ScanConfig) -> Result<ScanReport> {
    cfg.check_size(n_max)?;
    let mut prev = vec![spec.eval(&Permutation::identity())?];
    let mut counts = Vec::new();
    let mut minimal = Vec::new();
    let mut runtime = RuntimeStats {
        workers: cfg.exec.workers(),
        per_n: Vec::new(),
    };
    for n in 1..=n_max {
        let start = Instant::now();
        let prev_ref = &prev;
        let parts = cfg.blocks(n, |r| {
            let mut out = MineBlock {
                satisfied: Vec::with_capacity(r.len()),
                minimal: Vec::new(),
                violation: None,
            };
            for w in perms_in(n, &r) {
                let ok = spec.eval_bytes(&w)?;
                out.satisfied.push(ok);
                let failing_deletion = (0..n)
                    .map(|i| delete_flat(&w, i))
                    .find(|v| !prev_ref[rank(v)]);
                match (ok, failing_deletion) {
                    (false, None) => out.minimal.push(w),
                    (true, Some(v)) if out.violation.is_none() => out.violation = Some((w, v)),
                    _ => {}
                }
            }
            Ok(out)
        })?;
        let mut table = Vec::with_capacity(factorial(n));
        for part in parts {
            if let Some((w, v)) = part.violation {
                return Err(LabError::NotClosed {
                    predicate: spec.name(),
                    holder: Permutation::from_oneline_bytes(&w)?.to_compact(),
                    pattern: Permutation::from_oneline_bytes(&v)?.to_compact(),
                });
            }
            table.extend(part.satisfied);
            for w in part.minimal {
                minimal.push(Permutation::from_oneline_bytes(&w)?);
            }
        }
        counts.push(SizeCount {
            n,
            total: table.len() as u64,
            satisfying: table.iter().filter(|&&b| b).count() as u64,
        });
        prev = table;
        runtime.per_n.push((n, start.elapsed()));
    }
    sort_size_lex(&mut minimal);
    Ok(ScanReport {
        predicate: spec.name(),
        n_min: 1,
        n_max,
        counts,
        minimal_patterns: Some(minimal.iter().map(Permutation::to_compact).collect()),
        runtime,
    })
}

/// Minimal forbidden patterns of `spec` in `S_1 ∪ … ∪ S_n_max`, sorted by
/// size then lexicographically.
pub fn minimal_forbidden_patterns(
    spec: PredicateSpec,
    n_max: usize,
    cfg: &ScanConfig,
) -> Result<Vec<Permutation>> {
    closure_self_test(spec, CLOSURE_TEST_MAX_N.min(n_max), cfg)?;
    let report = scan_minimal(n_max, spec, cfg)?;
    report
        .minimal_patterns
        .unwrap_or_default()
        .iter()
        .map(|s| Ok(s.parse::<Permutation>()?))
        .collect()
}

/// `spec(w)` and `v ≤ w` imply `spec(v)` on `S_1 … S_n_max`. One-point
/// deletions generate containment, so they are all that is checked.
pub fn closure_self_test(spec: PredicateSpec, n_max: usize, cfg: &ScanConfig) -> Result<()> {
    let mut prev = vec![spec.eval(&Permutation::identity())?];
    for n in 1..=n_max {
        let current = table(spec, n, cfg)?;
        for (r, w) in LexPermutations::new(n).enumerate() {
            if !current[r] {
                continue;
            }
            if let Some(v) = (0..n).map(|i| delete_flat(&w, i)).find(|v| !prev[rank(v)]) {
                return Err(LabError::NotClosed {
                    predicate: spec.name(),
                    holder: Permutation::from_oneline_bytes(&w)?.to_compact(),
                    pattern: Permutation::from_oneline_bytes(&v)?.to_compact(),
                });
            }
        }
        prev = current;
    }
    Ok(())
}

fn check_one(
    spec: PredicateSpec,
    patterns: &PatternSet,
    w: &[u8],
    out: &mut Verification,
    cap: usize,
) -> Result<()> {
    let holds = spec.eval_bytes(w)?;
    let avoids = !patterns.contains_any(w);
    out.checked += 1;
    out.satisfying += holds as u64;
    if holds != avoids {
        out.counterexample_total += 1;
        if out.counterexamples.len() < cap {
            out.counterexamples
                .push(Permutation::from_oneline_bytes(w)?.to_compact());
        }
    }
    Ok(())
}

fn empty_verification(spec: PredicateSpec, patterns: &PatternSet) -> Verification {
    Verification {
        predicate: spec.name(),
        patterns: patterns.len(),
        checked: 0,
        satisfying: 0,
        counterexamples: Vec::new(),
        counterexample_total: 0,
    }
}

/// For every `w` in `S_1 … S_n_check`: `spec(w)` iff `w` avoids every
/// pattern of the set.
pub fn verify_avoidance_characterization(
    spec: PredicateSpec,
    patterns: &PatternSet,
    n_check: usize,
    cfg: &ScanConfig,
) -> Result<Verification> {
    cfg.check_size(n_check)?;
    let cap = cfg.counterexample_cap;
    let mut total = empty_verification(spec, patterns);
    for n in 1..=n_check {
        let parts = cfg.blocks(n, |r| {
            let mut out = empty_verification(spec, patterns);
            for w in perms_in(n, &r) {
                check_one(spec, patterns, &w, &mut out, cap)?;
            }
            Ok(out)
        })?;
        for p in parts {
            total.merge(p, cap);
        }
    }
    Ok(total)
}

/// Random permutations for sampling beyond exhaustive range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleStream {
    Uniform,
    /// A product of at most `2n` random simple transpositions; biased toward
    /// short permutations, where most classes of interest live.
    ShortWords,
}

pub fn sample_permutation<R: Rng>(rng: &mut R, n: usize, stream: SampleStream) -> Vec<u8> {
    let mut w: Vec<u8> = (1..=n as u8).collect();
    match stream {
        SampleStream::Uniform => w.shuffle(rng),
        SampleStream::ShortWords if n >= 2 => {
            let steps = rng.gen_range(0..=2 * n);
            for _ in 0..steps {
                let i = rng.gen_range(0..n - 1);
                w.swap(i, i + 1);
            }
        }
        SampleStream::ShortWords => {}
    }
    w
}

pub const SAMPLE_BLOCK: u64 = 1024;

/// Checks the characterization on `samples` random permutations with sizes
/// drawn from `sizes`, alternating the two streams. Block `b` draws from
/// stream `b` of a ChaCha8 generator seeded with `seed`, so the outcome does
/// not depend on the worker count.
pub fn verify_random(
    spec: PredicateSpec,
    patterns: &PatternSet,
    sizes: RangeInclusive<usize>,
    samples: u64,
    seed: u64,
    cfg: &ScanConfig,
) -> Result<Verification> {
    let cap = cfg.counterexample_cap;
    let blocks = samples.div_ceil(SAMPLE_BLOCK) as usize;
    let parts: Vec<Verification> = cfg
        .exec
        .map_range(0..blocks, |b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b as u64);
            let mut out = empty_verification(spec, patterns);
            let first = b as u64 * SAMPLE_BLOCK;
            for i in first..(first + SAMPLE_BLOCK).min(samples) {
                let n = rng.gen_range(sizes.clone());
                let stream = if i % 2 == 0 {
                    SampleStream::Uniform
                } else {
                    SampleStream::ShortWords
                };
                let w = sample_permutation(&mut rng, n, stream);
                check_one(spec, patterns, &w, &mut out, cap)?;
            }
            Ok(out)
        })
        .into_iter()
        .collect::<Result<_>>()?;
    let mut total = empty_verification(spec, patterns);
    for p in parts {
        total.merge(p, cap);
    }
    Ok(total)
}
