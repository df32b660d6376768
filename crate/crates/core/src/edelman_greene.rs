//! Edelman-Greene insertion of reduced words.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::perm::{Permutation, DEFAULT_WORD_CAP};
use crate::schur::{Partition, SchurExpansion};

/// Insertion tableau: rows and columns strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EgTableau {
    rows: Vec<Vec<u8>>,
}

/// Standard recording tableau of the same shape.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RecordingTableau {
    rows: Vec<Vec<usize>>,
}

impl EgTableau {
    /// Validates row and column strictness.
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let t = EgTableau { rows };
        if !t.is_strict() {
            return Err(Error::InvalidInput(format!(
                "{t:?} is not row and column strict"
            )));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn is_strict(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| !r.is_empty() && r.windows(2).all(|p| p[0] < p[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].len() <= pair[0].len() && pair[1].iter().zip(&pair[0]).all(|(lo, hi)| hi < lo)
        });
        rows_ok && cols_ok
    }

    /// Reads each column bottom to top, leftmost column first.
    pub fn column_word(&self) -> Vec<u8> {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut word = Vec::with_capacity(self.len());
        for j in 0..width {
            for row in self.rows.iter().rev() {
                if let Some(&x) = row.get(j) {
                    word.push(x);
                }
            }
        }
        word
    }

    /// Strict, with a column word that is a reduced word of `w`.
    pub fn is_valid_for(&self, w: &Permutation) -> bool {
        self.is_strict() && w.is_reduced_word_for(&self.column_word())
    }
}

impl RecordingTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn is_standard(&self) -> bool {
        let n: usize = self.rows.iter().map(Vec::len).sum();
        let mut seen: Vec<usize> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen == (1..=n).collect::<Vec<_>>()
            && self.rows.iter().all(|r| r.windows(2).all(|p| p[0] < p[1]))
            && self.rows.windows(2).all(|pair| {
                pair[1].len() <= pair[0].len()
                    && pair[1].iter().zip(&pair[0]).all(|(lo, hi)| hi < lo)
            })
    }
}

fn format_rows<T: fmt::Display>(rows: &[Vec<T>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(f, "{}", cells.join(" "))?;
    }
    Ok(())
}

impl fmt::Display for EgTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_rows(&self.rows, f)
    }
}

impl fmt::Debug for EgTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

impl fmt::Display for RecordingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_rows(&self.rows, f)
    }
}

/// Inserts a reduced word, returning the insertion and recording tableaux.
pub fn eg_insert(word: &[u8]) -> Result<(EgTableau, RecordingTableau)> {
    if Permutation::from_word(word).is_none() {
        return Err(Error::InvalidInput(format!(
            "{word:?} is not a reduced word"
        )));
    }
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in word.iter().enumerate() {
        let mut x = letter;
        let mut i = 0;
        loop {
            if i == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            let row = &mut p[i];
            match row.iter().position(|&y| y > x) {
                None => {
                    row.push(x);
                    q[i].push(step + 1);
                    break;
                }
                Some(k) => {
                    let y = row[k];
                    if y == x + 1 && k > 0 && row[k - 1] == x {
                        x += 1;
                    } else {
                        row[k] = x;
                        x = y;
                    }
                    i += 1;
                }
            }
        }
    }
    Ok((EgTableau { rows: p }, RecordingTableau { rows: q }))
}

/// Distinct insertion tableaux over every reduced word of `w`.
pub fn eg_tableaux(w: &Permutation) -> Result<BTreeSet<EgTableau>> {
    eg_tableaux_with(w, DEFAULT_WORD_CAP, &Execution::sequential())
}

pub fn eg_tableaux_with(
    w: &Permutation,
    cap: usize,
    exec: &Execution,
) -> Result<BTreeSet<EgTableau>> {
    let words = w.reduced_words(cap)?;
    let chunk = 4096;
    let parts = exec.map_blocks(words.len(), chunk, |range| {
        words[range]
            .iter()
            .map(|word| eg_insert(word).map(|(p, _)| p))
            .collect::<Result<BTreeSet<_>>>()
    });
    let mut out = BTreeSet::new();
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

/// `F_w` as the sum of `s_{shape(P)^t}` over the insertion tableaux.
pub fn stanley_via_eg(w: &Permutation) -> Result<SchurExpansion> {
    Ok(eg_tableaux(w)?
        .iter()
        .map(|p| p.shape().conjugate())
        .collect())
}
