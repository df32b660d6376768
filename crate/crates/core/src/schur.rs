//! Partitions and Schur-positive expansions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts. Ordered lexicographically, which
/// refines dominance order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Rejects parts that are not weakly decreasing.
    pub fn from_parts(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Self::new(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `lambda_i` (1-based), zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Entrywise sum, padding with zeros.
    pub fn plus(&self, other: &Partition) -> Partition {
        let len = self.0.len().max(other.0.len());
        Partition((1..=len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Young diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self <= other` in dominance order.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::InvalidInput(format!(
                "dominance needs equal sizes, got {} and {}",
                self.size(),
                other.size()
            )));
        }
        let len = self.0.len().max(other.0.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every `mu ⊇ self` with `|mu| = |self| + k` and `mu / self` a
    /// horizontal strip, in lexicographic order.
    pub fn pieri_strips(&self, k: usize) -> Vec<Partition> {
        // mu_1 is unbounded above; mu_i ranges over [lambda_i, lambda_{i-1}].
        let len = self.0.len() + 1;
        let mut out = Vec::new();
        let mut cur = vec![0usize; len];
        fn rec(
            lam: &Partition,
            i: usize,
            left: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            let len = cur.len();
            if i == len {
                if left == 0 {
                    out.push(Partition::new(cur.clone()));
                }
                return;
            }
            let base = lam.part(i + 1);
            let room = if i == 0 { left } else { lam.part(i) - base };
            for add in 0..=room.min(left) {
                cur[i] = base + add;
                rec(lam, i + 1, left - add, cur, out);
            }
        }
        rec(self, 0, k, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Partitions `mu ⊆ self` with `self / mu` a horizontal strip.
    pub(crate) fn remove_horizontal_strips(&self) -> Vec<Partition> {
        let len = self.0.len();
        let mut out = Vec::new();
        let mut cur = vec![0usize; len];
        fn rec(lam: &Partition, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == cur.len() {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for m in lam.part(i + 2)..=lam.part(i + 1) {
                cur[i] = m;
                rec(lam, i + 1, cur, out);
            }
        }
        rec(self, 0, &mut cur, &mut out);
        out
    }

    /// `f^lambda` by the hook length formula, with exact prime-exponent
    /// bookkeeping so intermediate factorials never overflow.
    pub fn standard_tableaux_count(&self) -> u128 {
        let n = self.size();
        let conj = self.conjugate();
        let mut exponents = vec![0i64; n + 1];
        let mut add = |mut x: usize, sign: i64| {
            let mut p = 2;
            while p * p <= x {
                while x.is_multiple_of(p) {
                    exponents[p] += sign;
                    x /= p;
                }
                p += 1;
            }
            if x > 1 {
                exponents[x] += sign;
            }
        };
        for x in 2..=n {
            add(x, 1);
        }
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j - 1) + (conj.0[j] - i - 1) + 1;
                add(hook, -1);
            }
        }
        let mut f: u128 = 1;
        for (p, &e) in exponents.iter().enumerate() {
            debug_assert!(e >= 0, "hook product does not divide n!");
            for _ in 0..e {
                f *= p as u128;
            }
        }
        f
    }

    /// Monomial expansion of `s_lambda(x_1, .., x_N)`: exponent vector to
    /// the number of semistandard tableaux with that content.
    pub fn schur_polynomial_coeffs(&self, num_vars: usize) -> BTreeMap<Vec<usize>, u64> {
        fn rec(
            lam: &Partition,
            var: usize,
            exps: &mut Vec<usize>,
            out: &mut BTreeMap<Vec<usize>, u64>,
        ) {
            if var == 0 {
                if lam.is_empty() {
                    *out.entry(exps.clone()).or_insert(0) += 1;
                }
                return;
            }
            if lam.num_parts() > var {
                return;
            }
            // Entries equal to `var` form a horizontal strip on the outside.
            for mu in lam.remove_horizontal_strips() {
                exps[var - 1] = lam.size() - mu.size();
                rec(&mu, var - 1, exps, out);
            }
            exps[var - 1] = 0;
        }
        let mut out = BTreeMap::new();
        let mut exps = vec![0; num_vars];
        rec(self, num_vars, &mut exps, &mut out);
        out
    }

    /// Kostka number: semistandard tableaux of this shape with the given
    /// content.
    pub fn kostka(&self, content: &[usize]) -> u64 {
        if content.iter().sum::<usize>() != self.size() {
            return 0;
        }
        fn rec(lam: &Partition, content: &[usize]) -> u64 {
            match content.split_last() {
                None => u64::from(lam.is_empty()),
                Some((&last, rest)) => {
                    if lam.num_parts() > content.len() {
                        return 0;
                    }
                    lam.remove_horizontal_strips()
                        .into_iter()
                        .filter(|mu| lam.size() - mu.size() == last)
                        .map(|mu| rec(&mu, rest))
                        .sum()
                }
            }
        }
        rec(self, content)
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=left.min(max)).rev() {
                cur.push(part);
                rec(left - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `(4,2,1)`, `4,2,1`, `[4,2,1]` or `()`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let mut parts = Vec::new();
        for tok in t.split([',', ' ']).filter(|x| !x.is_empty()) {
            parts.push(
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad partition part `{tok}`")))?,
            );
        }
        Partition::from_parts(parts)
    }
}

/// A Schur-positive symmetric function: partition to positive multiplicity.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, u64>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    shape: Partition,
    mult: u64,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(shape: Partition) -> Self {
        let mut e = Self::new();
        e.add_term(shape, 1);
        e
    }

    pub fn add_term(&mut self, shape: Partition, mult: u64) {
        if mult > 0 {
            *self.terms.entry(shape).or_insert(0) += mult;
        }
    }

    pub fn add(&mut self, other: &SchurExpansion) {
        for (shape, &m) in &other.terms {
            self.add_term(shape.clone(), m);
        }
    }

    /// `self - other` when every coefficient stays nonnegative, i.e. the
    /// difference is Schur positive (or zero); `None` otherwise.
    pub fn checked_sub(&self, other: &SchurExpansion) -> Option<SchurExpansion> {
        let mut out = self.clone();
        for (shape, &m) in &other.terms {
            let have = out.terms.get_mut(shape)?;
            if *have < m {
                return None;
            }
            *have -= m;
            if *have == 0 {
                out.terms.remove(shape);
            }
        }
        Some(out)
    }

    pub fn coefficient(&self, shape: &Partition) -> u64 {
        self.terms.get(shape).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    /// Sum of multiplicities; for `F_w` this is `EG(w)`.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.terms.values().copied().max().unwrap_or(0)
    }

    pub fn num_shapes(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of a homogeneous expansion; `None` if empty or mixed.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let d = sizes.next()?;
        sizes.all(|s| s == d).then_some(d)
    }

    /// Shapes repeated by multiplicity, in order.
    pub fn shapes(&self) -> Vec<Partition> {
        self.terms
            .iter()
            .flat_map(|(p, &m)| std::iter::repeat_n(p.clone(), m as usize))
            .collect()
    }

    /// Replaces every shape by its conjugate.
    pub fn conjugate(&self) -> SchurExpansion {
        let mut out = SchurExpansion::new();
        for (p, &m) in &self.terms {
            out.add_term(p.conjugate(), m);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(p, &m)| TermJson {
                shape: p.clone(),
                mult: m,
            })
            .collect();
        serde_json::to_value(terms).expect("terms serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let terms: Vec<TermJson> = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidInput(format!("bad expansion JSON: {e}")))?;
        let mut out = SchurExpansion::new();
        for t in terms {
            let shape = Partition::from_parts(t.shape.0)?;
            if t.mult == 0 {
                return Err(Error::InvalidInput("zero multiplicity".into()));
            }
            out.add_term(shape, t.mult);
        }
        Ok(out)
    }
}

impl FromIterator<Partition> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = Partition>>(iter: I) -> Self {
        let mut e = SchurExpansion::new();
        for p in iter {
            e.add_term(p, 1);
        }
        e
    }
}

impl fmt::Display for SchurExpansion {
    /// `s[3,2,2] + 2 s[3,3,1]`; the zero function prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, &m) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m > 1 {
                write!(f, "{m} ")?;
            }
            let parts: Vec<String> = p.0.iter().map(|x| x.to_string()).collect();
            write!(f, "s[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::from_parts(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[2, 2]).conjugate(), part(&[2, 2]));
        for p in Partition::all_of(7) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }

    #[test]
    fn union_and_sum_examples() {
        assert_eq!(part(&[3, 1]).union(&part(&[2])), part(&[3, 2, 1]));
        assert_eq!(part(&[3, 2, 1]).plus(&part(&[1])), part(&[4, 2, 1]));
        assert_eq!(part(&[2, 2]).union(&part(&[2])), part(&[2, 2, 2]));
        assert_eq!(part(&[2, 2, 2]).plus(&part(&[1])), part(&[3, 2, 2]));
        let l = part(&[4, 1, 1]);
        assert_eq!(l.union(&Partition::empty()), l);
        assert_eq!(l.plus(&Partition::empty()), l);
    }

    #[test]
    fn dominance_examples() {
        assert!(part(&[2, 2]).dominance_leq(&part(&[3, 1])).unwrap());
        assert!(part(&[3, 1]).dominance_leq(&part(&[3, 1])).unwrap());
        let a = part(&[3, 1, 1, 1]);
        let b = part(&[2, 2, 2]);
        assert!(!a.dominance_leq(&b).unwrap());
        assert!(!b.dominance_leq(&a).unwrap());
        assert!(matches!(
            part(&[2]).dominance_leq(&part(&[1])),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for m in 0..=8 {
            let all = Partition::all_of(m);
            for a in &all {
                assert!(a.dominance_leq(a).unwrap());
                for b in &all {
                    let ab = a.dominance_leq(b).unwrap();
                    if ab && b.dominance_leq(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    if ab {
                        for c in &all {
                            if b.dominance_leq(c).unwrap() {
                                assert!(a.dominance_leq(c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    /// Independent definition: `mu ⊇ lambda` of the right size where no
    /// column gains two cells.
    fn strips_by_definition(lam: &Partition, k: usize) -> Vec<Partition> {
        let mut out: Vec<Partition> = Partition::all_of(lam.size() + k)
            .into_iter()
            .filter(|mu| {
                lam.is_contained_in(mu) && {
                    let (mc, lc) = (mu.conjugate(), lam.conjugate());
                    (1..=mc.num_parts()).all(|j| mc.part(j) - lc.part(j) <= 1)
                }
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(part(&[1]).pieri_strips(1), vec![part(&[1, 1]), part(&[2])]);
        assert_eq!(
            part(&[2, 1]).pieri_strips(2),
            vec![
                part(&[2, 2, 1]),
                part(&[3, 1, 1]),
                part(&[3, 2]),
                part(&[4, 1])
            ]
        );
        for p in 1..=6 {
            let stair = Partition::new((1..p).rev().collect());
            assert_eq!(stair.pieri_strips(1).len(), p);
        }
    }

    #[test]
    fn pieri_matches_definition() {
        for m in 0..=6 {
            for lam in Partition::all_of(m) {
                for k in 0..=3 {
                    assert_eq!(lam.pieri_strips(k), strips_by_definition(&lam, k));
                }
            }
        }
    }

    /// Standard tableaux counted by removing the cell holding the largest
    /// entry, memoized on the remaining shape.
    fn syt_count(lam: &Partition, memo: &mut BTreeMap<Partition, u128>) -> u128 {
        if lam.is_empty() {
            return 1;
        }
        if let Some(&c) = memo.get(lam) {
            return c;
        }
        let parts = lam.parts();
        let total = (0..parts.len())
            .filter(|&i| i + 1 == parts.len() || parts[i] > parts[i + 1])
            .map(|i| {
                let mut v = parts.to_vec();
                v[i] -= 1;
                syt_count(&Partition::new(v), memo)
            })
            .sum();
        memo.insert(lam.clone(), total);
        total
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(part(&[2, 1]).standard_tableaux_count(), 2);
        assert_eq!(part(&[1, 1, 1, 1, 1]).standard_tableaux_count(), 1);
        assert_eq!(part(&[3, 2]).standard_tableaux_count(), 5);
        let mut memo = BTreeMap::new();
        for m in 0..=9 {
            for lam in Partition::all_of(m) {
                assert_eq!(
                    lam.standard_tableaux_count(),
                    syt_count(&lam, &mut memo),
                    "{lam}"
                );
            }
        }
        // 30 cells would overflow a naive n! in u64.
        assert_eq!(
            Partition::new(vec![6; 5]).standard_tableaux_count(),
            syt_count(&Partition::new(vec![6; 5]), &mut memo)
        );
    }

    #[test]
    fn schur_polynomial_examples() {
        let s1 = part(&[1]).schur_polynomial_coeffs(2);
        assert_eq!(s1, BTreeMap::from([(vec![1, 0], 1), (vec![0, 1], 1)]));
        let s2 = part(&[2]).schur_polynomial_coeffs(2);
        assert_eq!(
            s2,
            BTreeMap::from([(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)])
        );
        let s21 = part(&[2, 1]).schur_polynomial_coeffs(3);
        assert_eq!(s21[&vec![1, 1, 1]], 2);
    }

    #[test]
    fn schur_polynomial_all_ones_coefficient_is_f_lambda() {
        for m in 0..=7 {
            for lam in Partition::all_of(m) {
                let coeffs = lam.schur_polynomial_coeffs(m);
                let ones = vec![1; m];
                assert_eq!(
                    coeffs.get(&ones).copied().unwrap_or(0) as u128,
                    lam.standard_tableaux_count()
                );
                assert_eq!(lam.kostka(&ones) as u128, lam.standard_tableaux_count());
            }
        }
    }

    #[test]
    fn pieri_with_one_cell_is_multiplicity_free() {
        for m in 0..=6 {
            for lam in Partition::all_of(m) {
                let e: SchurExpansion = lam.pieri_strips(1).into_iter().collect();
                assert!(e.max_multiplicity() <= 1);
                assert_eq!(e.degree(), Some(m + 1));
            }
        }
    }

    #[test]
    fn expansion_formatting_and_subtraction() {
        let mut e = SchurExpansion::new();
        e.add_term(part(&[4, 2, 1]), 1);
        e.add_term(part(&[3, 3, 1]), 2);
        assert_eq!(e.to_string(), "2 s[3,3,1] + s[4,2,1]");
        let one = SchurExpansion::single(part(&[3, 3, 1]));
        assert_eq!(e.checked_sub(&one).unwrap().total(), 2);
        assert!(one.checked_sub(&e).is_none());
        assert_eq!(SchurExpansion::from_json(&e.to_json()).unwrap(), e);
        assert_eq!(SchurExpansion::new().to_string(), "0");
    }

    #[test]
    fn partition_parsing() {
        assert_eq!("(4,2,1)".parse::<Partition>().unwrap(), part(&[4, 2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("(1,2)".parse::<Partition>().is_err());
    }
}
