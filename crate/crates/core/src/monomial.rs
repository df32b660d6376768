//! Monomial expansion of `F_w` straight from reduced words, used as an
//! oracle independent of insertion and of transition trees.
//!
//! A compatible sequence `i_1 <= .. <= i_l` for a reduced word `a` is
//! determined by its exponent vector `alpha`, and exists iff every ascent
//! `a_j < a_{j+1}` sits on a boundary between parts of `alpha`. So the
//! coefficient of `x^alpha` counts reduced words whose ascent set lies
//! inside the boundary set of `alpha`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::schur::{Partition, SchurExpansion};

pub const MAX_LENGTH: usize = 12;
pub const MAX_WORDS: usize = 1_000_000;

/// Exponent vector to coefficient.
pub type Polynomial = HashMap<Vec<usize>, u64>;

fn check_bounds(w: &Permutation) -> Result<usize> {
    let len = w.length();
    if len > MAX_LENGTH {
        return Err(Error::Resource(format!(
            "monomial oracle needs length <= {MAX_LENGTH}, {w} has length {len}"
        )));
    }
    let count = w.count_reduced_words();
    if count > MAX_WORDS as u128 {
        return Err(Error::Resource(format!(
            "monomial oracle needs at most {MAX_WORDS} reduced words, {w} has {count}"
        )));
    }
    Ok(len)
}

/// `g[S]` = number of reduced words whose ascent set is a subset of `S`,
/// with subsets of `{1, .., l-1}` as bitmasks.
fn ascent_subset_sums(w: &Permutation, len: usize) -> Result<Vec<u64>> {
    let bits = len.saturating_sub(1);
    let mut g = vec![0u64; 1 << bits];
    for word in w.reduced_words(MAX_WORDS)? {
        let mut mask = 0usize;
        for j in 0..bits {
            if word[j] < word[j + 1] {
                mask |= 1 << j;
            }
        }
        g[mask] += 1;
    }
    for b in 0..bits {
        for s in 0..g.len() {
            if s & (1 << b) != 0 {
                g[s] += g[s ^ (1 << b)];
            }
        }
    }
    Ok(g)
}

fn boundary_mask(alpha: &[usize], len: usize) -> usize {
    let mut mask = 0usize;
    let mut sum = 0;
    for &a in alpha {
        sum += a;
        if sum > 0 && sum < len {
            mask |= 1 << (sum - 1);
        }
    }
    mask
}

/// `F_w(x_1, .., x_N)` from the definition.
pub fn stanley_polynomial(w: &Permutation, num_vars: usize) -> Result<Polynomial> {
    let len = check_bounds(w)?;
    let g = ascent_subset_sums(w, len)?;
    let mut out = Polynomial::new();
    let mut alpha = vec![0usize; num_vars];
    fn rec(
        i: usize,
        left: usize,
        alpha: &mut Vec<usize>,
        len: usize,
        g: &[u64],
        out: &mut Polynomial,
    ) {
        if i + 1 == alpha.len() {
            alpha[i] = left;
            let c = g[boundary_mask(alpha, len)];
            if c > 0 {
                out.insert(alpha.clone(), c);
            }
            return;
        }
        for a in 0..=left {
            alpha[i] = a;
            rec(i + 1, left - a, alpha, len, g, out);
        }
    }
    if num_vars == 0 {
        if len == 0 {
            out.insert(Vec::new(), 1);
        }
        return Ok(out);
    }
    rec(0, len, &mut alpha, len, &g, &mut out);
    Ok(out)
}

/// Schur expansion of `F_w` recovered from the dominant monomials by
/// unitriangularity of the Kostka matrix, then checked monomial by
/// monomial in `l(w)` variables.
pub fn stanley_via_monomials(w: &Permutation) -> Result<SchurExpansion> {
    let len = check_bounds(w)?;
    let poly = stanley_polynomial(w, len)?;
    let coeff = |mu: &Partition| -> u64 {
        let mut key = mu.parts().to_vec();
        key.resize(len, 0);
        poly.get(&key).copied().unwrap_or(0)
    };
    let mut expansion = SchurExpansion::new();
    let mut found: Vec<(Partition, u64)> = Vec::new();
    for mu in Partition::all_of(len) {
        let mut c = coeff(&mu) as i128;
        for (lam, a) in &found {
            c -= (*a as i128) * lam.kostka(mu.parts()) as i128;
        }
        if c < 0 {
            return Err(Error::InvalidInput(format!(
                "negative Schur coefficient for {mu} in F_{w}"
            )));
        }
        if c > 0 {
            found.push((mu.clone(), c as u64));
            expansion.add_term(mu, c as u64);
        }
    }
    let mut rebuilt = Polynomial::new();
    for (lam, a) in expansion.terms() {
        for (exps, k) in lam.schur_polynomial_coeffs(len) {
            *rebuilt.entry(exps).or_insert(0) += a * k;
        }
    }
    if rebuilt != poly {
        return Err(Error::InvalidInput(format!(
            "monomial expansion of F_{w} is not the recovered Schur sum"
        )));
    }
    Ok(expansion)
}
