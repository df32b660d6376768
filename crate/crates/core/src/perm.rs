//! Permutations in one-line notation, codes, reduced words and classical
//! pattern containment.
//!
//! A [`Permutation`] is stored in canonical form: trailing fixed points are
//! trimmed, so `S_n` sits inside `S_{n+1}` and `2143`, `21435` and `214356`
//! are the same value. The empty permutation is the identity.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported `n`; values are stored as bytes.
pub const MAX_SIZE: usize = 255;

/// Default cap on the number of reduced words materialized at once.
pub const DEFAULT_WORD_CAP: usize = 10_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    oneline: Vec<u8>,
}

fn canonicalize(v: &mut Vec<u8>) {
    while let Some(&last) = v.last() {
        if last as usize == v.len() {
            v.pop();
        } else {
            break;
        }
    }
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation {
            oneline: Vec::new(),
        }
    }

    /// Builds a permutation from its one-line notation `w(1) .. w(n)`.
    pub fn new(values: &[usize]) -> Result<Self> {
        let n = values.len();
        if n > MAX_SIZE {
            return Err(Error::InvalidInput(format!(
                "permutations are limited to n <= {MAX_SIZE}, got {n}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for (i, &x) in values.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::InvalidInput(format!(
                    "value {x} at position {} is outside 1..={n}",
                    i + 1
                )));
            }
            if seen[x] {
                return Err(Error::InvalidInput(format!(
                    "value {x} repeated at position {}",
                    i + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Self::from_bytes(values.iter().map(|&x| x as u8).collect()))
    }

    /// Wraps bytes that are already known to form a bijection of `1..=len`.
    pub(crate) fn from_bytes(mut v: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&v));
        canonicalize(&mut v);
        Permutation { oneline: v }
    }

    /// Canonical size: the largest non-fixed point.
    pub fn size(&self) -> usize {
        self.oneline.len()
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.oneline
    }

    pub fn oneline(&self) -> Vec<usize> {
        self.oneline.iter().map(|&x| x as usize).collect()
    }

    /// `w(i)` for 1-based `i`; positions past the canonical size are fixed.
    pub fn value(&self, i: usize) -> usize {
        match self.oneline.get(i.wrapping_sub(1)) {
            Some(&x) => x as usize,
            None => i,
        }
    }

    /// One-line notation padded with fixed points to length `n >= size()`.
    pub fn padded(&self, n: usize) -> Vec<u8> {
        let mut v = self.oneline.clone();
        v.extend((self.size() + 1..=n).map(|x| x as u8));
        v
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.size()];
        for (i, &x) in self.oneline.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { oneline: inv }
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let v = &self.oneline;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn code(&self) -> Code {
        let v = &self.oneline;
        Code(
            (0..v.len())
                .map(|k| v[k + 1..].iter().filter(|&&x| x < v[k]).count())
                .collect(),
        )
    }

    /// `1^m x w`: prepend `m` fixed points and shift every value up by `m`.
    pub fn shift(&self, m: usize) -> Self {
        if self.is_identity() || m == 0 {
            return self.clone();
        }
        let mut v: Vec<u8> = (1..=m).map(|x| x as u8).collect();
        v.extend(self.oneline.iter().map(|&x| x + m as u8));
        Permutation { oneline: v }
    }

    /// `w t_{ij}`: swap the entries in positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut v = self.padded(i.max(j));
        v.swap(i - 1, j - 1);
        Self::from_bytes(v)
    }

    /// Right descents `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        descents_of(&self.oneline)
    }

    /// Multiplies out `s_{a_1} ... s_{a_l}`, returning `None` when the word
    /// is not reduced.
    pub fn from_word(word: &[u8]) -> Option<Self> {
        let n = word.iter().map(|&a| a as usize + 1).max().unwrap_or(0);
        let mut v: Vec<u8> = (1..=n).map(|x| x as u8).collect();
        for &a in word {
            if a == 0 {
                return None;
            }
            let a = a as usize;
            if v[a - 1] > v[a] {
                return None;
            }
            v.swap(a - 1, a);
        }
        Some(Self::from_bytes(v))
    }

    pub fn is_reduced_word_for(&self, word: &[u8]) -> bool {
        Self::from_word(word).as_ref() == Some(self)
    }

    /// Every reduced word, sorted lexicographically. Fails once more than
    /// `cap` words would be produced.
    pub fn reduced_words(&self, cap: usize) -> Result<Vec<Vec<u8>>> {
        fn walk(
            x: &mut Vec<u8>,
            pos: usize,
            buf: &mut Vec<u8>,
            out: &mut Vec<Vec<u8>>,
            cap: usize,
        ) -> Result<()> {
            if pos == 0 {
                if out.len() >= cap {
                    return Err(Error::EnumerationLimit { limit: cap });
                }
                out.push(buf.clone());
                return Ok(());
            }
            for d in descents_of(x) {
                x.swap(d - 1, d);
                buf[pos - 1] = d as u8;
                walk(x, pos - 1, buf, out, cap)?;
                x.swap(d - 1, d);
            }
            Ok(())
        }
        let len = self.length();
        let mut x = self.oneline.clone();
        let mut buf = vec![0u8; len];
        let mut out = Vec::new();
        walk(&mut x, len, &mut buf, &mut out, cap)?;
        out.sort_unstable();
        Ok(out)
    }

    /// `|Red(w)|` by memoized recursion on the last letter.
    pub fn count_reduced_words(&self) -> u128 {
        fn count(x: &mut Vec<u8>, memo: &mut HashMap<Vec<u8>, u128>) -> u128 {
            let ds = descents_of(x);
            if ds.is_empty() {
                return 1;
            }
            if let Some(&c) = memo.get(x.as_slice()) {
                return c;
            }
            let mut total = 0u128;
            for d in ds {
                x.swap(d - 1, d);
                total += count(x, memo);
                x.swap(d - 1, d);
            }
            memo.insert(x.clone(), total);
            total
        }
        count(&mut self.oneline.clone(), &mut HashMap::new())
    }

    /// True when some subsequence of `self` flattens to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        self.find_occurrence(pattern).is_some()
    }

    /// Positions (1-based, increasing) of the first occurrence of `pattern`
    /// in lexicographic order of position tuples.
    pub fn find_occurrence(&self, pattern: &Permutation) -> Option<Vec<usize>> {
        let mut found = None;
        self.search_occurrences(pattern, &mut |pos| {
            found = Some(pos.to_vec());
            true
        });
        found
    }

    /// All occurrences of `pattern`, as position lists.
    pub fn occurrences(&self, pattern: &Permutation) -> Vec<Vec<usize>> {
        let mut all = Vec::new();
        self.search_occurrences(pattern, &mut |pos| {
            all.push(pos.to_vec());
            false
        });
        all
    }

    /// Depth-first search over increasing position tuples, pruning as soon
    /// as the chosen prefix is not order-isomorphic to the pattern's prefix.
    /// The visitor returns `true` to stop.
    fn search_occurrences(&self, pattern: &Permutation, visit: &mut dyn FnMut(&[usize]) -> bool) {
        let k = pattern.size();
        // Canonical patterns never need positions past our canonical size,
        // but the empty pattern occurs trivially.
        if k == 0 {
            visit(&[]);
            return;
        }
        let w = &self.oneline;
        let p = &pattern.oneline;
        if k > w.len() {
            return;
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        fn rec(
            w: &[u8],
            p: &[u8],
            start: usize,
            chosen: &mut Vec<usize>,
            visit: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            let d = chosen.len();
            if d == p.len() {
                let pos: Vec<usize> = chosen.iter().map(|&i| i + 1).collect();
                return visit(&pos);
            }
            let remaining = p.len() - d;
            for i in start..=w.len() - remaining {
                let x = w[i];
                let ok = chosen
                    .iter()
                    .enumerate()
                    .all(|(e, &c)| (w[c] < x) == (p[e] < p[d]));
                if ok {
                    chosen.push(i);
                    if rec(w, p, i + 1, chosen, visit) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        rec(w, p, 0, &mut chosen, visit);
    }

    /// The pattern formed by the entries at the given 1-based positions.
    pub fn restrict(&self, positions: &[usize]) -> Self {
        let values: Vec<u8> = positions.iter().map(|&i| self.value(i) as u8).collect();
        Self::from_bytes(flatten_bytes(&values))
    }

    /// One-point deletion of position `i` (1-based), flattened.
    pub fn delete_position(&self, i: usize) -> Self {
        let n = self.size().max(i);
        let positions: Vec<usize> = (1..=n).filter(|&p| p != i).collect();
        self.restrict(&positions)
    }

    /// Avoids `2143`; checked in `O(n^2)`.
    pub fn is_vexillary(&self) -> bool {
        is_vexillary_bytes(&self.oneline)
    }

    /// Simple code patterns: delete one zero entry of the code and invert.
    pub fn code_pattern_children(&self) -> BTreeSet<Permutation> {
        let code = self.code();
        let mut out = BTreeSet::new();
        for (i, &c) in code.0.iter().enumerate() {
            if c == 0 {
                let mut entries = code.0.clone();
                entries.remove(i);
                out.insert(Code(entries).to_permutation());
            }
        }
        if out.is_empty() {
            // Only the identity has an empty code.
            out.insert(self.clone());
        }
        out
    }

    /// Packs permutations with `n <= 15` into a single word, used as a hash
    /// key by the pattern scanners. Distinct canonical permutations get
    /// distinct keys.
    pub fn key(&self) -> Option<u64> {
        pack_key(&self.oneline)
    }

    /// Compact digits for `n <= 9`, otherwise space-delimited; `e` for the
    /// identity.
    pub fn to_compact(&self) -> String {
        self.to_string()
    }

    pub fn to_delimited(&self) -> String {
        if self.is_identity() {
            return "e".to_string();
        }
        self.oneline
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) fn is_bijection(v: &[u8]) -> bool {
    let mut seen = vec![false; v.len() + 1];
    v.iter().all(|&x| {
        let x = x as usize;
        if x == 0 || x > v.len() || seen[x] {
            false
        } else {
            seen[x] = true;
            true
        }
    })
}

fn descents_of(v: &[u8]) -> Vec<usize> {
    (1..v.len()).filter(|&i| v[i - 1] > v[i]).collect()
}

pub(crate) fn pack_key(v: &[u8]) -> Option<u64> {
    if v.len() > 15 {
        return None;
    }
    let mut key = v.len() as u64;
    for (i, &x) in v.iter().enumerate() {
        key |= (x as u64) << (4 * (i + 1));
    }
    Some(key)
}

/// `O(n^2)` test for a `2143` occurrence `i < j < k < l` with
/// `w(j) < w(i) < w(l) < w(k)`.
pub(crate) fn is_vexillary_bytes(w: &[u8]) -> bool {
    let n = w.len();
    if n < 4 {
        return true;
    }
    // best[p]: largest smaller entry of an inversion (k, l) with k >= p.
    let mut best = vec![0u8; n + 1];
    for k in (0..n).rev() {
        let mut b = best[k + 1];
        for l in k + 1..n {
            if w[l] < w[k] && w[l] > b {
                b = w[l];
            }
        }
        best[k] = b;
    }
    for j in 1..n {
        for i in 0..j {
            if w[i] > w[j] && best[j + 1] > w[i] {
                return false;
            }
        }
    }
    true
}

/// Order-isomorphic bijection of `1..=len` for distinct byte values.
pub(crate) fn flatten_bytes(values: &[u8]) -> Vec<u8> {
    values
        .iter()
        .map(|&x| 1 + values.iter().filter(|&&y| y < x).count() as u8)
        .collect()
}

/// `fl(x)`: the permutation order-isomorphic to a sequence of distinct
/// integers.
pub fn flatten(x: &[i64]) -> Result<Permutation> {
    if x.len() > MAX_SIZE {
        return Err(Error::InvalidInput(format!(
            "sequences are limited to {MAX_SIZE} entries"
        )));
    }
    let mut sorted = x.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(format!("duplicate entry {}", w[0])));
    }
    let v = x
        .iter()
        .map(|e| (sorted.binary_search(e).unwrap() + 1) as u8)
        .collect();
    Ok(Permutation::from_bytes(v))
}

/// Lehmer code of a permutation; `c_k` counts `j > k` with `w(j) < w(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Code(pub Vec<usize>);

impl Code {
    pub fn new(entries: Vec<usize>) -> Self {
        Code(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Trailing zeros trimmed.
    pub fn canonical(&self) -> Code {
        let mut v = self.0.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        Code(v)
    }

    /// The permutation whose code is `self` followed by enough zeros.
    pub fn to_permutation(&self) -> Permutation {
        let c = &self.0;
        let n = c
            .iter()
            .enumerate()
            .map(|(k, &ck)| k + 1 + ck)
            .max()
            .unwrap_or(0)
            .max(c.len());
        let mut unused: Vec<u8> = (1..=n).map(|x| x as u8).collect();
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            let ck = c.get(k).copied().unwrap_or(0);
            v.push(unused.remove(ck));
        }
        Permutation::from_bytes(v)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Permutations of length exactly `n` in lexicographic order of one-line
/// notation. Items are padded (not canonical) byte vectors.
pub struct LexPermutations {
    current: Option<Vec<u8>>,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        LexPermutations {
            current: Some((1..=n).map(|x| x as u8).collect()),
        }
    }

    /// Starts at the permutation of the given lexicographic rank.
    pub fn from_rank(n: usize, rank: usize) -> Self {
        LexPermutations {
            current: if rank < factorial(n) {
                Some(unrank(n, rank))
            } else {
                None
            },
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let cur = self.current.take()?;
        let mut nxt = cur.clone();
        if next_lex(&mut nxt) {
            self.current = Some(nxt);
        }
        Some(cur)
    }
}

impl Permutation {
    /// Every element of `S_n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        LexPermutations::new(n).map(Permutation::from_bytes)
    }

    /// Validating counterpart of the byte form used by [`LexPermutations`].
    pub fn from_oneline_bytes(v: &[u8]) -> Result<Self> {
        if v.len() > MAX_SIZE || !is_bijection(v) {
            return Err(Error::InvalidInput(format!("{v:?} is not a permutation")));
        }
        Ok(Self::from_bytes(v.to_vec()))
    }
}

/// Advances to the lexicographic successor; false at the last permutation.
pub fn next_lex(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lexicographic rank of a permutation of `1..=len`.
pub fn rank(v: &[u8]) -> usize {
    let n = v.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = v[i + 1..].iter().filter(|&&x| x < v[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

pub fn unrank(n: usize, mut r: usize) -> Vec<u8> {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = r % base;
        r /= base;
    }
    let mut unused: Vec<u8> = (1..=n).map(|x| x as u8).collect();
    digits.into_iter().map(|d| unused.remove(d)).collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        if self.size() <= 9 {
            for x in &self.oneline {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.to_delimited())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts compact digits (`243165`), space- or comma-delimited values,
    /// and `e` or an empty string for the identity.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(Permutation::identity());
        }
        let delimited = t.contains(|c: char| c == ',' || c.is_whitespace());
        let mut values = Vec::new();
        if delimited {
            for (idx, tok) in t
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|tok| !tok.is_empty())
                .enumerate()
            {
                let v: usize = tok.parse().map_err(|_| Error::Parse {
                    position: idx + 1,
                    message: format!("`{tok}` is not a positive integer"),
                })?;
                values.push(v);
            }
        } else {
            for (idx, ch) in t.chars().enumerate() {
                match ch.to_digit(10) {
                    Some(d) if d > 0 => values.push(d as usize),
                    _ => {
                        return Err(Error::Parse {
                            position: idx + 1,
                            message: format!("`{ch}` is not a digit 1-9"),
                        })
                    }
                }
            }
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for (i, &x) in values.iter().enumerate() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse {
                    position: i + 1,
                    message: if x == 0 || x > n {
                        format!("value {x} is outside 1..={n}")
                    } else {
                        format!("value {x} repeated")
                    },
                });
            }
            seen[x] = true;
        }
        Permutation::new(&values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity().length(), 0);
        assert_eq!(p("243165").length(), 5);
        assert_eq!(p("2143").length(), 2);
    }

    #[test]
    fn code_examples() {
        assert_eq!(p("41832567").code().0, vec![3, 0, 5, 1, 0, 0, 0, 0]);
        assert!(p("123").code().0.is_empty());
        assert_eq!(p("243165").code().0, vec![1, 2, 1, 0, 1, 0]);
    }

    #[test]
    fn code_inverse_examples() {
        assert_eq!(Code(vec![3, 0, 5, 1]).to_permutation(), p("41832567"));
        assert_eq!(Code(vec![]).to_permutation(), Permutation::identity());
        assert_eq!(Code(vec![2, 2]).to_permutation(), p("3412"));
    }

    #[test]
    fn flatten_examples() {
        assert_eq!(flatten(&[3, 1, 6, 2, 4]).unwrap(), p("31524"));
        assert_eq!(flatten(&[1, 2, 3]).unwrap(), Permutation::identity());
        assert_eq!(flatten(&[9, 7]).unwrap(), p("21"));
        assert!(matches!(flatten(&[2, 5, 2]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn containment_examples() {
        let w = p("2513764");
        assert!(w.find_occurrence(&p("2143")).is_some());
        assert!(w.occurrences(&p("2143")).contains(&vec![1, 3, 5, 7]));
        assert!(w.contains(&p("23154")));
        assert!(!w.contains(&p("12354")));
        assert!(w.contains(&w));
    }

    #[test]
    fn reduced_word_examples() {
        assert_eq!(
            p("2143").reduced_words(100).unwrap(),
            vec![vec![1, 3], vec![3, 1]]
        );
        assert_eq!(
            p("321").reduced_words(100).unwrap(),
            vec![vec![1, 2, 1], vec![2, 1, 2]]
        );
        assert_eq!(p("4321").reduced_words(100).unwrap().len(), 16);
        assert_eq!(p("4321").count_reduced_words(), 16);
        assert_eq!(
            Permutation::identity().reduced_words(1).unwrap(),
            vec![Vec::<u8>::new()]
        );
        assert_eq!(
            p("4321").reduced_words(10),
            Err(Error::EnumerationLimit { limit: 10 })
        );
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p("21").shift(1), p("132"));
        assert_eq!(p("2143").shift(0), p("2143"));
        assert_eq!(p("2143").shift(2), p("124365"));
    }

    #[test]
    fn code_pattern_children_examples() {
        let w = p("41832567");
        let children = w.code_pattern_children();
        assert!(children.contains(&Code(vec![3, 5, 1]).to_permutation()));
        for v in &children {
            assert_eq!(v.length(), w.length());
        }
        assert_eq!(
            p("123").code_pattern_children(),
            BTreeSet::from([Permutation::identity()])
        );
        assert_eq!(p("21").code_pattern_children(), BTreeSet::from([p("21")]));
    }

    #[test]
    fn canonical_form_trims_fixed_points() {
        assert_eq!(p("21435"), p("2143"));
        assert_eq!(p("1234"), Permutation::identity());
        assert_eq!(p("2143").size(), 4);
    }

    #[test]
    fn parse_formats() {
        assert_eq!(p("2 4 3 1 6 5"), p("243165"));
        assert_eq!(p("2,4,3,1,6,5"), p("243165"));
        let big: Permutation = "1 2 3 4 5 6 7 8 9 11 10".parse().unwrap();
        assert_eq!(big.to_string(), "1 2 3 4 5 6 7 8 9 11 10");
        assert_eq!(p("e"), Permutation::identity());
        assert_eq!(Permutation::identity().to_string(), "e");
        assert_eq!(
            "2214".parse::<Permutation>(),
            Err(Error::Parse {
                position: 2,
                message: "value 2 repeated".into()
            })
        );
        assert!(matches!(
            "2x1".parse::<Permutation>(),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn vexillary_matches_generic_containment() {
        let pat = p("2143");
        for n in 0..=7 {
            for v in LexPermutations::new(n) {
                let w = Permutation::from_bytes(v);
                assert_eq!(w.is_vexillary(), !w.contains(&pat), "{w}");
            }
        }
    }

    #[test]
    fn rank_unrank_round_trip() {
        for (r, v) in LexPermutations::new(5).enumerate() {
            assert_eq!(rank(&v), r);
            assert_eq!(unrank(5, r), v);
        }
        assert_eq!(LexPermutations::new(6).count(), 720);
        assert_eq!(LexPermutations::from_rank(4, 23).count(), 1);
    }

    #[test]
    fn keys_are_injective_on_small_groups() {
        let mut keys = std::collections::HashSet::new();
        for n in 0..=6 {
            for v in LexPermutations::new(n) {
                let w = Permutation::from_bytes(v);
                keys.insert((w.key().unwrap(), w));
            }
        }
        let distinct_perms: BTreeSet<_> = keys.iter().map(|(_, w)| w.clone()).collect();
        let distinct_keys: BTreeSet<_> = keys.iter().map(|(k, _)| *k).collect();
        assert_eq!(distinct_perms.len(), distinct_keys.len());
    }
}
