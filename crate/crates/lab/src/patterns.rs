//! Pattern lists and simultaneous containment testing.

use std::collections::BTreeSet;

use stanley_core::Permutation;

use crate::error::{LabError, Result};

/// Sort key for pattern lists: size first, then one-line notation.
pub fn size_lex_key(p: &Permutation) -> (usize, Vec<u8>) {
    (p.size(), p.as_bytes().to_vec())
}

pub fn sort_size_lex(patterns: &mut [Permutation]) {
    patterns.sort_by_key(size_lex_key);
}

/// One pattern per line in compact notation.
pub fn format_pattern_list(patterns: &[Permutation]) -> String {
    let mut out = String::new();
    for p in patterns {
        out.push_str(&p.to_compact());
        out.push('\n');
    }
    out
}

/// Inverse of [`format_pattern_list`]; blank lines and `#` comments are
/// skipped.
pub fn parse_pattern_list(text: &str) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let p = line
            .parse::<Permutation>()
            .map_err(|e| LabError::PatternList {
                line: i + 1,
                message: e.to_string(),
            })?;
        out.push(p);
    }
    Ok(out)
}

const NONE: u32 = u32::MAX;

/// A trie over "insertion codes": a sequence `a_1 … a_d` is recorded by
/// `c_j = #{i < j : a_i < a_j}`, which determines its flattening. Prefixes
/// of the patterns are the trie nodes, so the search over subsequences of a
/// text prunes as soon as no pattern starts like the current choice.
#[derive(Clone, Debug)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
    /// children[node][c], `NONE` when absent. A node at depth `d` has `d + 1`
    /// slots.
    children: Vec<Vec<u32>>,
    /// Pattern ending at the node.
    terminal: Vec<Option<u32>>,
    /// Fewest further letters from the node to some pattern.
    min_left: Vec<usize>,
}

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Self {
        let unique: BTreeSet<(usize, Vec<u8>)> =
            patterns.into_iter().map(|p| size_lex_key(&p)).collect();
        let patterns: Vec<Permutation> = unique
            .into_iter()
            .map(|(_, v)| Permutation::from_oneline_bytes(&v).expect("valid pattern"))
            .collect();
        let mut set = PatternSet {
            patterns: Vec::new(),
            children: vec![vec![NONE]],
            terminal: vec![None],
            min_left: Vec::new(),
        };
        for p in patterns {
            set.insert(p);
        }
        set.min_left = vec![0; set.children.len()];
        // Children always have larger ids than their parents.
        for node in (0..set.children.len()).rev() {
            set.min_left[node] = if set.terminal[node].is_some() {
                0
            } else {
                set.children[node]
                    .iter()
                    .filter(|&&c| c != NONE)
                    .map(|&c| set.min_left[c as usize] + 1)
                    .min()
                    .unwrap_or(usize::MAX)
            };
        }
        set
    }

    fn insert(&mut self, p: Permutation) {
        let v = p.as_bytes();
        let mut node = 0usize;
        for j in 0..v.len() {
            let c = v[..j].iter().filter(|&&x| x < v[j]).count();
            let next = self.children[node][c];
            node = if next == NONE {
                let id = self.children.len();
                self.children.push(vec![NONE; j + 2]);
                self.terminal.push(None);
                self.children[node][c] = id as u32;
                id
            } else {
                next as usize
            };
        }
        self.terminal[node] = Some(self.patterns.len() as u32);
        self.patterns.push(p);
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn max_size(&self) -> usize {
        self.patterns
            .iter()
            .map(Permutation::size)
            .max()
            .unwrap_or(0)
    }

    /// Some pattern of the set occurring in `w`, if any.
    pub fn first_contained(&self, w: &[u8]) -> Option<&Permutation> {
        if self.terminal[0].is_some() {
            return Some(&self.patterns[self.terminal[0].unwrap() as usize]);
        }
        let mut chosen = Vec::with_capacity(self.max_size());
        self.search(w, 0, 0, &mut chosen)
            .map(|i| &self.patterns[i as usize])
    }

    pub fn contains_any(&self, w: &[u8]) -> bool {
        self.first_contained(w).is_some()
    }

    pub fn avoids_all(&self, w: &Permutation) -> bool {
        !self.contains_any(w.as_bytes())
    }

    fn search(&self, w: &[u8], start: usize, node: usize, chosen: &mut Vec<u8>) -> Option<u32> {
        let slots = &self.children[node];
        let need = self.min_left[node];
        for i in start..w.len() {
            if w.len() - i < need {
                break;
            }
            let x = w[i];
            let c = chosen.iter().filter(|&&y| y < x).count();
            let next = slots[c];
            if next == NONE {
                continue;
            }
            let next = next as usize;
            if let Some(t) = self.terminal[next] {
                return Some(t);
            }
            chosen.push(x);
            let hit = self.search(w, i + 1, next, chosen);
            chosen.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn agrees_with_single_pattern_containment() {
        let pats = vec![p("2143"), p("3412"), p("321"), p("25314")];
        let set = PatternSet::new(pats.clone());
        for w in Permutation::all(6) {
            let want = pats.iter().any(|q| w.contains(q));
            assert_eq!(set.contains_any(&w.padded(6)), want, "{w}");
            if let Some(q) = set.first_contained(w.as_bytes()) {
                assert!(w.contains(q));
            }
        }
    }

    #[test]
    fn lists_round_trip_in_size_lex_order() {
        let mut pats = vec![p("214365"), p("21543"), p("32154"), p("2143")];
        sort_size_lex(&mut pats);
        let text = format_pattern_list(&pats);
        assert_eq!(text, "2143\n21543\n32154\n214365\n");
        assert_eq!(parse_pattern_list(&text).unwrap(), pats);
        assert!(parse_pattern_list("12\n2x1\n").is_err());
    }
}
