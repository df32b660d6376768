//! Diagrams as finite cell sets, Rothe diagrams and James-Peel moves.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::schur::Partition;

/// A finite set of `(row, col)` cells, 1-based, kept in row-major order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Diagram {
    cells: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    Row,
    Col,
}

/// `R_{from->to}` or `C_{from->to}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JpMove {
    pub kind: MoveKind,
    pub from: usize,
    pub to: usize,
}

impl JpMove {
    pub fn row(from: usize, to: usize) -> Self {
        JpMove {
            kind: MoveKind::Row,
            from,
            to,
        }
    }

    pub fn col(from: usize, to: usize) -> Self {
        JpMove {
            kind: MoveKind::Col,
            from,
            to,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.from == self.to
    }
}

impl fmt::Display for JpMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            MoveKind::Row => 'R',
            MoveKind::Col => 'C',
        };
        write!(f, "{c}{}->{}", self.from, self.to)
    }
}

/// A subdiagram with its compressed copy and the index translation maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdiagram {
    pub original: Diagram,
    pub compressed: Diagram,
    /// `row_map[k]` is the original row of compressed row `k + 1`.
    pub row_map: Vec<usize>,
    pub col_map: Vec<usize>,
}

impl Diagram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Rejects zero coordinates; duplicates collapse.
    pub fn from_cells<I: IntoIterator<Item = (usize, usize)>>(cells: I) -> Result<Self> {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        if let Some(&(r, c)) = cells.iter().find(|&&(r, c)| r == 0 || c == 0) {
            return Err(Error::InvalidInput(format!(
                "cell ({r},{c}) has a zero coordinate"
            )));
        }
        Ok(Diagram { cells })
    }

    pub(crate) fn from_set(cells: BTreeSet<(usize, usize)>) -> Self {
        Diagram { cells }
    }

    /// Ferrers diagram of a partition, English notation.
    pub fn of_partition(lambda: &Partition) -> Self {
        let cells = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
            .collect();
        Diagram { cells }
    }

    pub fn rothe(w: &Permutation) -> Self {
        let v = w.as_bytes();
        let mut cells = BTreeSet::new();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    cells.insert((i + 1, v[j] as usize));
                }
            }
        }
        Diagram { cells }
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().copied()
    }

    pub fn cell_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.contains(&cell)
    }

    pub fn num_rows(&self) -> usize {
        self.cells.iter().map(|c| c.0).max().unwrap_or(0)
    }

    pub fn num_cols(&self) -> usize {
        self.cells.iter().map(|c| c.1).max().unwrap_or(0)
    }

    /// Columns occupied in row `r`.
    pub fn row(&self, r: usize) -> BTreeSet<usize> {
        self.cells.range((r, 0)..(r + 1, 0)).map(|c| c.1).collect()
    }

    pub fn col(&self, c: usize) -> BTreeSet<usize> {
        self.cells
            .iter()
            .filter(|x| x.1 == c)
            .map(|x| x.0)
            .collect()
    }

    pub fn transpose(&self) -> Diagram {
        Diagram {
            cells: self.cells.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }

    /// Row `to` becomes the union of rows `from` and `to`; row `from`
    /// keeps only the columns it shares with `to`.
    pub fn move_row(&self, from: usize, to: usize) -> Diagram {
        if from == to {
            return self.clone();
        }
        let a = self.row(from);
        let b = self.row(to);
        let mut cells = self.cells.clone();
        for &c in a.difference(&b) {
            cells.remove(&(from, c));
            cells.insert((to, c));
        }
        Diagram { cells }
    }

    pub fn move_col(&self, from: usize, to: usize) -> Diagram {
        if from == to {
            return self.clone();
        }
        let a = self.col(from);
        let b = self.col(to);
        let mut cells = self.cells.clone();
        for &r in a.difference(&b) {
            cells.remove(&(r, from));
            cells.insert((r, to));
        }
        Diagram { cells }
    }

    pub fn apply_move(&self, m: JpMove) -> Diagram {
        match m.kind {
            MoveKind::Row => self.move_row(m.from, m.to),
            MoveKind::Col => self.move_col(m.from, m.to),
        }
    }

    pub fn apply_moves(&self, moves: &[JpMove]) -> Diagram {
        moves.iter().fold(self.clone(), |d, &m| d.apply_move(m))
    }

    /// Swaps two whole rows.
    pub fn swap_rows(&self, a: usize, b: usize) -> Diagram {
        let t = |r: usize| {
            if r == a {
                b
            } else if r == b {
                a
            } else {
                r
            }
        };
        Diagram {
            cells: self.cells.iter().map(|&(r, c)| (t(r), c)).collect(),
        }
    }

    pub fn swap_cols(&self, a: usize, b: usize) -> Diagram {
        let t = |c: usize| {
            if c == a {
                b
            } else if c == b {
                a
            } else {
                c
            }
        };
        Diagram {
            cells: self.cells.iter().map(|&(r, c)| (r, t(c))).collect(),
        }
    }

    fn row_lengths(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &(r, _) in &self.cells {
            *m.entry(r).or_insert(0) += 1;
        }
        m
    }

    fn col_lengths(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &(_, c) in &self.cells {
            *m.entry(c).or_insert(0) += 1;
        }
        m
    }

    /// Row lengths sorted.
    pub fn d_min(&self) -> Partition {
        Partition::new(self.row_lengths().into_values().collect())
    }

    /// Conjugate of the sorted column lengths.
    pub fn d_max(&self) -> Partition {
        Partition::new(self.col_lengths().into_values().collect()).conjugate()
    }

    /// Cells with nothing directly below and nothing directly right.
    pub fn essential_set(&self) -> BTreeSet<(usize, usize)> {
        self.cells
            .iter()
            .copied()
            .filter(|&(r, c)| !self.contains((r + 1, c)) && !self.contains((r, c + 1)))
            .collect()
    }

    /// `(rows x cols) ∩ D`, in both coordinate systems.
    pub fn subdiagram(&self, rows: &BTreeSet<usize>, cols: &BTreeSet<usize>) -> Subdiagram {
        let original: BTreeSet<_> = self
            .cells
            .iter()
            .copied()
            .filter(|(r, c)| rows.contains(r) && cols.contains(c))
            .collect();
        let row_map: Vec<usize> = rows.iter().copied().collect();
        let col_map: Vec<usize> = cols.iter().copied().collect();
        let rpos: BTreeMap<usize, usize> = row_map
            .iter()
            .enumerate()
            .map(|(k, &r)| (r, k + 1))
            .collect();
        let cpos: BTreeMap<usize, usize> = col_map
            .iter()
            .enumerate()
            .map(|(k, &c)| (c, k + 1))
            .collect();
        let compressed = original.iter().map(|(r, c)| (rpos[r], cpos[c])).collect();
        Subdiagram {
            original: Diagram { cells: original },
            compressed: Diagram { cells: compressed },
            row_map,
            col_map,
        }
    }

    /// Removes empty rows and columns, keeping relative order.
    pub fn compress(&self) -> Diagram {
        let rows: BTreeSet<usize> = self.cells.iter().map(|c| c.0).collect();
        let cols: BTreeSet<usize> = self.cells.iter().map(|c| c.1).collect();
        self.subdiagram(&rows, &cols).compressed
    }

    /// `lambda` when some row and column permutation turns `D` into the
    /// Ferrers diagram of `lambda`.
    pub fn equivalent_partition(&self) -> Option<Partition> {
        let rl = self.row_lengths();
        let cl = self.col_lengths();
        let mut rows: Vec<usize> = rl.keys().copied().collect();
        rows.sort_by_key(|r| std::cmp::Reverse(rl[r]));
        let mut cols: Vec<usize> = cl.keys().copied().collect();
        cols.sort_by_key(|c| std::cmp::Reverse(cl[c]));
        for &r in &rows {
            let len = rl[&r];
            if !cols[..len].iter().all(|&c| self.contains((r, c))) {
                return None;
            }
        }
        Some(self.d_min())
    }

    /// Whether the bipartite row/column graph with one edge per cell is
    /// acyclic.
    pub fn graph_is_forest(&self) -> bool {
        let rows: BTreeMap<usize, usize> = self
            .cells
            .iter()
            .map(|c| c.0)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(k, r)| (r, k))
            .collect();
        let cols: BTreeMap<usize, usize> = self
            .cells
            .iter()
            .map(|c| c.1)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(k, c)| (c, k + rows.len()))
            .collect();
        let mut parent: Vec<usize> = (0..rows.len() + cols.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(r, c) in &self.cells {
            let a = find(&mut parent, rows[&r]);
            let b = find(&mut parent, cols[&c]);
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// Complement inside `[n] x [n]`.
    pub fn complement(&self, n: usize) -> Diagram {
        let cells = (1..=n)
            .flat_map(|r| (1..=n).map(move |c| (r, c)))
            .filter(|c| !self.cells.contains(c))
            .collect();
        Diagram { cells }
    }

    /// No cell lies directly below or right of a position `(i, w(i))`.
    pub fn is_northwest_for(&self, w: &Permutation) -> bool {
        self.cells
            .iter()
            .all(|&(r, c)| (1..=r).all(|i| w.value(i) != c) && (1..=c).all(|j| w.value(r) != j))
    }

    /// Grid of `o` and `.`, one line per row up to the last occupied row.
    pub fn to_ascii(&self) -> String {
        let (rows, cols) = (self.num_rows(), self.num_cols());
        let mut out = String::new();
        for r in 1..=rows {
            let line: Vec<&str> = (1..=cols)
                .map(|c| if self.contains((r, c)) { "o" } else { "." })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the grid produced by [`Diagram::to_ascii`]; spaces optional.
    pub fn from_ascii(text: &str) -> Result<Diagram> {
        let mut cells = BTreeSet::new();
        for (i, line) in text.lines().enumerate() {
            let marks = line.chars().filter(|ch| !ch.is_whitespace());
            for (j, ch) in marks.enumerate() {
                match ch {
                    'o' => {
                        cells.insert((i + 1, j + 1));
                    }
                    '.' => {}
                    other => {
                        return Err(Error::Parse {
                            position: j,
                            message: format!("unexpected `{other}` in row {}", i + 1),
                        })
                    }
                }
            }
        }
        Ok(Diagram { cells })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.cells.iter().map(|&(r, c)| [r, c]).collect::<Vec<_>>())
            .expect("cells serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Diagram> {
        let pairs: Vec<[usize; 2]> = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidInput(format!("bad diagram JSON: {e}")))?;
        Diagram::from_cells(pairs.into_iter().map(|[r, c]| (r, c)))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ascii())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.cells.iter()).finish()
    }
}

/// Rows `(j_p, .., j_2, r)` and columns `(w(j_1), .., w(j_{p-1}), w(s))`
/// carrying the staircase-plus-corner subdiagram attached to the
/// transitions of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Staircase {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Cells the pattern `(p-1, .., 1) . (1)` occupies, as indices into
    /// `rows` and `cols` (1-based).
    pub fn pattern_cells(&self) -> BTreeSet<(usize, usize)> {
        let p = self.rows.len();
        let mut cells: BTreeSet<(usize, usize)> = (1..=p)
            .flat_map(|a| (1..=p).map(move |b| (a, b)))
            .filter(|&(a, b)| a + b <= p)
            .collect();
        if p > 0 {
            cells.insert((p, p));
        }
        cells
    }

    /// Whether `D` restricted to these rows and columns is exactly the
    /// staircase pattern.
    pub fn check(&self, d: &Diagram) -> bool {
        let rows: BTreeSet<usize> = self.rows.iter().copied().collect();
        let cols: BTreeSet<usize> = self.cols.iter().copied().collect();
        if rows.len() != self.rows.len() || cols.len() != self.cols.len() {
            return false;
        }
        let got: BTreeSet<(usize, usize)> = d
            .subdiagram(&rows, &cols)
            .original
            .cells()
            .map(|(r, c)| {
                let a = self.rows.iter().position(|&x| x == r).unwrap() + 1;
                let b = self.cols.iter().position(|&x| x == c).unwrap() + 1;
                (a, b)
            })
            .collect();
        got == self.pattern_cells()
    }
}
