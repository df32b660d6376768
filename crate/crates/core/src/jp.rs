//! James-Peel trees for Rothe diagrams, their reduction, and the pattern
//! extraction built on top of them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, JpMove, MoveKind, Staircase};
use crate::error::{Error, Result};
use crate::ls::{self, DEFAULT_NODE_BUDGET};
use crate::perm::{flatten_bytes, Permutation};
use crate::schur::{Partition, SchurExpansion};

/// Which family an edge belongs to below a branching vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeKind {
    C,
    RC,
    R,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JpEdge {
    /// Applied left to right.
    pub moves: Vec<JpMove>,
    pub kind: EdgeKind,
    pub child: JpVertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JpVertex {
    pub diagram: Diagram,
    /// Set when the diagram is exactly `D(perm)` in the tree frame.
    pub perm: Option<Permutation>,
    pub edges: Vec<JpEdge>,
}

impl JpVertex {
    fn leaf(diagram: Diagram, perm: Option<Permutation>) -> Self {
        JpVertex {
            diagram,
            perm,
            edges: Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.edges.is_empty()
    }

    fn count(&self) -> usize {
        1 + self.edges.iter().map(|e| e.child.count()).sum::<usize>()
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a JpVertex>) {
        if self.is_leaf() {
            out.push(self);
        }
        for e in &self.edges {
            e.child.collect_leaves(out);
        }
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
            + self
                .edges
                .iter()
                .map(|e| e.child.edge_count())
                .sum::<usize>()
    }
}

/// A James-Peel tree for `D(1^shift x w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JpTree {
    pub perm: Permutation,
    /// `1 x` embeddings applied to `perm` to fix the frame.
    pub shift: usize,
    pub reduced: bool,
    pub root: JpVertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeShapeReport {
    pub leaves: Vec<(Diagram, Option<Partition>)>,
    pub complete: bool,
}

/// The staircase-plus-corner subdiagram carried by the transitions of
/// `w`, in the frame of `1^shifts x w` used by the transitions.
pub fn staircase_subdiagram_of_transitions(w: &Permutation) -> Result<(usize, Staircase)> {
    let t = ls::transitions(w)?;
    let base = &t.base;
    let p = t.js.len();
    let mut rows: Vec<usize> = t.js[1..].iter().rev().copied().collect();
    rows.push(t.r);
    let mut cols: Vec<usize> = t.js[..p - 1].iter().map(|&j| base.value(j)).collect();
    cols.push(base.value(t.s));
    Ok((t.shifts, Staircase { rows, cols }))
}

/// The `p` diagrams of the Pieri-type split along a `(p-1, .., 1) . (1)`
/// subdiagram. The `k`-th is `R_{rows[p] -> rows[p-k+1]} C_{cols[p] -> cols[k]} D`.
pub fn staircase_children(d: &Diagram, stair: &Staircase) -> Result<Vec<Diagram>> {
    if !stair.check(d) {
        return Err(Error::InvalidInput(format!(
            "rows {:?} and columns {:?} do not carry a staircase subdiagram",
            stair.rows, stair.cols
        )));
    }
    let p = stair.size();
    Ok((1..=p)
        .map(|k| {
            d.move_col(stair.cols[p - 1], stair.cols[k - 1])
                .move_row(stair.rows[p - 1], stair.rows[p - k])
        })
        .collect())
}

/// `(R_{r -> j}, C_{w(s) -> w(j)})` for the transition `v` of `w`.
pub fn transition_moves(w: &Permutation, v: &Permutation) -> Result<(JpMove, JpMove)> {
    let t = ls::transitions(w)?;
    let i = t
        .children
        .iter()
        .position(|c| c == v)
        .ok_or_else(|| Error::InvalidInput(format!("{v} is not a transition of {w}")))?;
    let j = t.js[i];
    Ok((
        JpMove::row(t.r, j),
        JpMove::col(t.base.value(t.s), t.base.value(j)),
    ))
}

struct Builder {
    budget: usize,
    nodes: usize,
    root: Permutation,
}

impl Builder {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::TreeBudget {
                budget: self.budget,
                perm: self.root.to_string(),
            });
        }
        Ok(())
    }

    fn build(&mut self, v: &Permutation) -> Result<JpVertex> {
        self.tick()?;
        let d = Diagram::rothe(v);
        if v.is_vexillary() {
            return Ok(JpVertex::leaf(d, Some(v.clone())));
        }
        let t = ls::transitions(v)?;
        assert_eq!(t.shifts, 0, "frame shift too small at {v}");
        let p = t.js.len();
        let r = t.r;
        let vs = v.value(t.s);
        let mut edges = Vec::with_capacity(p);
        for (i, (&j, child)) in t.js.iter().zip(&t.children).enumerate() {
            let rmove = JpMove::row(r, j);
            let cmove = JpMove::col(vs, v.value(j));
            let sub = self.build(child)?;
            debug_assert_eq!(d.apply_moves(&[cmove, rmove]), sub.diagram);
            debug_assert_eq!(d.apply_moves(&[rmove, cmove]), sub.diagram);
            let edge = if i == 0 {
                self.tick()?;
                let a = d.apply_move(cmove);
                let inner = JpEdge {
                    moves: vec![rmove],
                    kind: EdgeKind::R,
                    child: sub,
                };
                JpEdge {
                    moves: vec![cmove],
                    kind: EdgeKind::C,
                    child: JpVertex {
                        diagram: a,
                        perm: None,
                        edges: vec![inner],
                    },
                }
            } else if i + 1 == p {
                self.tick()?;
                let b = d.apply_move(rmove);
                let inner = JpEdge {
                    moves: vec![cmove],
                    kind: EdgeKind::C,
                    child: sub,
                };
                JpEdge {
                    moves: vec![rmove],
                    kind: EdgeKind::R,
                    child: JpVertex {
                        diagram: b,
                        perm: None,
                        edges: vec![inner],
                    },
                }
            } else {
                JpEdge {
                    moves: vec![cmove, rmove],
                    kind: EdgeKind::RC,
                    child: sub,
                }
            };
            edges.push(edge);
        }
        Ok(JpVertex {
            diagram: d,
            perm: Some(v.clone()),
            edges,
        })
    }
}

/// The complete tree read off the transition tree of `w`.
pub fn jp_tree(w: &Permutation) -> Result<JpTree> {
    jp_tree_with_budget(w, DEFAULT_NODE_BUDGET)
}

pub fn jp_tree_with_budget(w: &Permutation, budget: usize) -> Result<JpTree> {
    let shift = ls::ls_tree_with_budget(w, budget)?.max_shift();
    let big = w.shift(shift);
    let mut b = Builder {
        budget,
        nodes: 0,
        root: w.clone(),
    };
    let root = b.build(&big)?;
    Ok(JpTree {
        perm: w.clone(),
        shift,
        reduced: false,
        root,
    })
}

/// Row and column renaming.
#[derive(Clone, Default)]
struct Relabel {
    rows: BTreeMap<usize, usize>,
    cols: BTreeMap<usize, usize>,
}

impl Relabel {
    fn row(&self, r: usize) -> usize {
        self.rows.get(&r).copied().unwrap_or(r)
    }

    fn col(&self, c: usize) -> usize {
        self.cols.get(&c).copied().unwrap_or(c)
    }

    /// Precomposes a swap: the result maps `x` to `self(swap(x))`.
    fn after_swap(&mut self, kind: MoveKind, a: usize, b: usize) {
        let map = match kind {
            MoveKind::Row => &mut self.rows,
            MoveKind::Col => &mut self.cols,
        };
        let fa = map.get(&a).copied().unwrap_or(a);
        let fb = map.get(&b).copied().unwrap_or(b);
        map.insert(a, fb);
        map.insert(b, fa);
    }

    fn diagram(&self, d: &Diagram) -> Diagram {
        Diagram::from_set(d.cells().map(|(r, c)| (self.row(r), self.col(c))).collect())
    }

    fn mv(&self, m: JpMove) -> JpMove {
        match m.kind {
            MoveKind::Row => JpMove::row(self.row(m.from), self.row(m.to)),
            MoveKind::Col => JpMove::col(self.col(m.from), self.col(m.to)),
        }
    }

    fn vertex(&self, v: JpVertex) -> JpVertex {
        JpVertex {
            diagram: self.diagram(&v.diagram),
            perm: None,
            edges: v
                .edges
                .into_iter()
                .map(|e| JpEdge {
                    moves: e.moves.into_iter().map(|m| self.mv(m)).collect(),
                    kind: e.kind,
                    child: self.vertex(e.child),
                })
                .collect(),
        }
    }
}

/// The row (column) sets of the move are nested, so the move only swaps
/// or fixes them. Returns the swap to undo, if any.
fn nested_swap(d: &Diagram, m: JpMove) -> Option<Option<(usize, usize)>> {
    let (a, b) = match m.kind {
        MoveKind::Row => (d.row(m.from), d.row(m.to)),
        MoveKind::Col => (d.col(m.from), d.col(m.to)),
    };
    if a.is_subset(&b) {
        Some(None)
    } else if b.is_subset(&a) {
        Some(Some((m.from, m.to)))
    } else {
        None
    }
}

fn reduce_vertex(v: JpVertex) -> JpVertex {
    let JpVertex {
        diagram,
        perm,
        edges,
    } = v;
    if edges.len() == 1 {
        let e = edges.into_iter().next().unwrap();
        let mut d = diagram.clone();
        let mut swaps = Vec::new();
        let mut contractible = true;
        for &m in &e.moves {
            match nested_swap(&d, m) {
                Some(s) => {
                    swaps.extend(s.map(|(a, b)| (m.kind, a, b)));
                    d = d.apply_move(m);
                }
                None => {
                    contractible = false;
                    break;
                }
            }
        }
        let sub = reduce_vertex(e.child);
        if contractible {
            // child = s_last(..s_1(parent)); undo the swaps in reverse.
            let mut relabel = Relabel::default();
            for &(kind, a, b) in &swaps {
                relabel.after_swap(kind, a, b);
            }
            let mut out = relabel.vertex(sub);
            debug_assert_eq!(out.diagram, diagram);
            out.diagram = diagram;
            out.perm = perm;
            return out;
        }
        return JpVertex {
            diagram,
            perm,
            edges: vec![JpEdge {
                moves: e.moves,
                kind: e.kind,
                child: sub,
            }],
        };
    }
    JpVertex {
        diagram,
        perm,
        edges: edges
            .into_iter()
            .map(|e| JpEdge {
                moves: e.moves,
                kind: e.kind,
                child: reduce_vertex(e.child),
            })
            .collect(),
    }
}

/// Contracts every single-child edge whose moves merely permute rows and
/// columns, renaming the moves below it.
pub fn reduce_tree(t: &JpTree) -> JpTree {
    JpTree {
        perm: t.perm.clone(),
        shift: t.shift,
        reduced: true,
        root: reduce_vertex(t.root.clone()),
    }
}

impl JpTree {
    pub fn num_vertices(&self) -> usize {
        self.root.count()
    }

    pub fn num_edges(&self) -> usize {
        self.root.edge_count()
    }

    pub fn leaves(&self) -> Vec<&JpVertex> {
        let mut out = Vec::new();
        self.root.collect_leaves(&mut out);
        out
    }

    /// Every internal vertex has at least two children.
    pub fn is_bushy(&self) -> bool {
        fn rec(v: &JpVertex) -> bool {
            (v.is_leaf() || v.edges.len() >= 2) && v.edges.iter().all(|e| rec(&e.child))
        }
        rec(&self.root)
    }

    /// Every edge label carries the diagram of its parent to the child.
    pub fn is_consistent(&self) -> bool {
        fn rec(v: &JpVertex) -> bool {
            v.edges
                .iter()
                .all(|e| v.diagram.apply_moves(&e.moves) == e.child.diagram && rec(&e.child))
        }
        rec(&self.root)
    }

    pub fn shape_report(&self) -> Result<TreeShapeReport> {
        let leaves: Vec<(Diagram, Option<Partition>)> = self
            .leaves()
            .into_iter()
            .map(|v| (v.diagram.clone(), v.diagram.equivalent_partition()))
            .collect();
        let all_partition = leaves.iter().all(|(_, p)| p.is_some());
        let complete = all_partition && {
            let got: SchurExpansion = leaves.iter().filter_map(|(_, p)| p.clone()).collect();
            got == ls::stanley_via_ls(&self.perm)?
        };
        Ok(TreeShapeReport { leaves, complete })
    }

    /// `R(T)` and `C(T)`: every index touched by a row or column move.
    pub fn move_support(&self) -> (BTreeSet<usize>, BTreeSet<usize>) {
        fn rec(v: &JpVertex, rows: &mut BTreeSet<usize>, cols: &mut BTreeSet<usize>) {
            for e in &v.edges {
                for m in &e.moves {
                    let set = match m.kind {
                        MoveKind::Row => &mut *rows,
                        MoveKind::Col => &mut *cols,
                    };
                    set.insert(m.from);
                    set.insert(m.to);
                }
                rec(&e.child, rows, cols);
            }
        }
        let mut rows = BTreeSet::new();
        let mut cols = BTreeSet::new();
        rec(&self.root, &mut rows, &mut cols);
        (rows, cols)
    }

    /// `fl(w(i_1) .. w(i_r))` over `R(T) ∪ w^{-1} C(T)`, read in the
    /// unshifted frame.
    pub fn pattern(&self) -> Permutation {
        let (rows, cols) = self.move_support();
        pattern_from_support(&self.perm, self.shift, &rows, &cols)
    }

    pub fn to_json(&self) -> serde_json::Value {
        fn rec(v: &JpVertex) -> serde_json::Value {
            let edges: Vec<serde_json::Value> = v
                .edges
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "moves": e.moves,
                        "child": rec(&e.child),
                    })
                })
                .collect();
            serde_json::json!({ "cells": v.diagram.to_json(), "edges": edges })
        }
        rec(&self.root)
    }

    /// Rebuilds the vertex structure from [`JpTree::to_json`]; edge kinds
    /// are inferred from the moves.
    pub fn root_from_json(value: &serde_json::Value) -> Result<JpVertex> {
        #[derive(Deserialize)]
        struct EdgeJson {
            moves: Vec<JpMove>,
            child: serde_json::Value,
        }
        let bad = |e: String| Error::InvalidInput(format!("bad tree JSON: {e}"));
        let cells = value
            .get("cells")
            .ok_or_else(|| bad("missing cells".into()))?;
        let edges = value
            .get("edges")
            .ok_or_else(|| bad("missing edges".into()))?;
        let edges: Vec<EdgeJson> =
            serde_json::from_value(edges.clone()).map_err(|e| bad(e.to_string()))?;
        let mut out = Vec::new();
        for e in edges {
            let kind = match (e.moves.len(), e.moves.first().map(|m| m.kind)) {
                (1, Some(MoveKind::Row)) => EdgeKind::R,
                (1, Some(MoveKind::Col)) => EdgeKind::C,
                _ => EdgeKind::RC,
            };
            out.push(JpEdge {
                moves: e.moves,
                kind,
                child: Self::root_from_json(&e.child)?,
            });
        }
        Ok(JpVertex {
            diagram: Diagram::from_json(cells)?,
            perm: None,
            edges: out,
        })
    }

    /// Graphviz source with vertex diagrams as labels.
    pub fn to_dot(&self) -> String {
        fn rec(v: &JpVertex, next: &mut usize, out: &mut String) -> usize {
            let id = *next;
            *next += 1;
            let mut label = v.diagram.to_ascii().replace('\n', "\\l");
            if let Some(p) = &v.perm {
                label = format!("D({p})\\l{label}");
            }
            out.push_str(&format!(
                "  v{id} [shape=box, fontname=monospace, label=\"{label}\"];\n"
            ));
            for e in &v.edges {
                let c = rec(&e.child, next, out);
                let moves: Vec<String> = e
                    .moves
                    .iter()
                    .rev()
                    .map(|m| m.to_string().replace("->", "→"))
                    .collect();
                out.push_str(&format!(
                    "  v{id} -> v{c} [label=\"{}\"];\n",
                    moves.join(" ")
                ));
            }
            id
        }
        let mut out = String::from("digraph jp {\n");
        rec(&self.root, &mut 0, &mut out);
        out.push_str("}\n");
        out
    }

    /// Indented text: each edge as composed moves, each leaf with its shape.
    pub fn to_text(&self) -> String {
        fn rec(v: &JpVertex, depth: usize, out: &mut String) {
            for e in &v.edges {
                let moves: Vec<String> = e.moves.iter().rev().map(|m| m.to_string()).collect();
                out.push_str(&"  ".repeat(depth + 1));
                out.push_str(&moves.join(" "));
                if e.child.is_leaf() {
                    match e.child.diagram.equivalent_partition() {
                        Some(p) => out.push_str(&format!(" => {p}")),
                        None => out.push_str(" => ?"),
                    }
                }
                out.push('\n');
                rec(&e.child, depth + 1, out);
            }
        }
        let mut out = match self.shift {
            0 => format!("D({})\n", self.perm),
            m => format!("D(1^{m} x {})\n", self.perm),
        };
        if self.root.is_leaf() {
            if let Some(p) = self.root.diagram.equivalent_partition() {
                out.push_str(&format!("  => {p}\n"));
            }
        }
        rec(&self.root, 0, &mut out);
        out
    }
}

fn pattern_from_support(
    w: &Permutation,
    shift: usize,
    rows: &BTreeSet<usize>,
    cols: &BTreeSet<usize>,
) -> Permutation {
    let big = w.shift(shift);
    let inv = big.inverse();
    let mut positions: BTreeSet<usize> = rows.clone();
    positions.extend(cols.iter().map(|&c| inv.value(c)));
    assert!(
        positions.iter().all(|&p| p > shift),
        "moves touch the padding rows of {w}"
    );
    let values: Vec<u8> = positions.iter().map(|&p| big.value(p) as u8).collect();
    Permutation::from_bytes(flatten_bytes(&values))
}

/// `w_T` for the reduced tree of `w`; `EG` is preserved.
pub fn skeleton_pattern(w: &Permutation) -> Result<Permutation> {
    Ok(reduce_tree(&jp_tree(w)?).pattern())
}

/// A pattern of `w` with `EG > k` on at most `4k` letters, read off a
/// colorful subtree with `k + 1` leaves; `None` when `EG(w) <= k`.
pub fn witness_pattern(w: &Permutation, k: u64) -> Result<Option<Permutation>> {
    if k < 1 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if ls::eg_number_capped(w, k)?.is_some() {
        return Ok(None);
    }
    let tree = reduce_tree(&jp_tree(w)?);
    let sub = colorful_subtree(&tree.root, k + 1);
    let mut rows = BTreeSet::new();
    let mut cols = BTreeSet::new();
    sub.support(&tree.root, &mut rows, &mut cols);
    Ok(Some(pattern_from_support(w, tree.shift, &rows, &cols)))
}

/// Chosen vertices of a subtree, as edge indices below each vertex.
struct Sub {
    chosen: Vec<(usize, Sub)>,
}

impl Sub {
    /// Expands the leftmost leaf that is internal in the full tree: its
    /// C-child and R-child first, then further children while leaves are
    /// still missing.
    fn expand(&mut self, v: &JpVertex, missing: &mut u64) -> bool {
        if self.chosen.is_empty() {
            if v.is_leaf() {
                return false;
            }
            let first = v
                .edges
                .iter()
                .position(|e| e.kind == EdgeKind::C)
                .unwrap_or(0);
            let last = v
                .edges
                .iter()
                .rposition(|e| e.kind == EdgeKind::R)
                .unwrap_or(v.edges.len() - 1);
            self.chosen.push((first, Sub { chosen: Vec::new() }));
            if last != first {
                self.chosen.push((last, Sub { chosen: Vec::new() }));
                *missing = missing.saturating_sub(1);
            }
            for i in 0..v.edges.len() {
                if *missing == 0 {
                    break;
                }
                if i != first && i != last {
                    self.chosen.push((i, Sub { chosen: Vec::new() }));
                    *missing -= 1;
                }
            }
            self.chosen.sort_by_key(|(i, _)| *i);
            return true;
        }
        self.chosen
            .iter_mut()
            .any(|(i, s)| s.expand(&v.edges[*i].child, missing))
    }

    fn support(&self, v: &JpVertex, rows: &mut BTreeSet<usize>, cols: &mut BTreeSet<usize>) {
        for (i, s) in &self.chosen {
            let e = &v.edges[*i];
            for m in &e.moves {
                match m.kind {
                    MoveKind::Row => rows.extend([m.from, m.to]),
                    MoveKind::Col => cols.extend([m.from, m.to]),
                };
            }
            s.support(&e.child, rows, cols);
        }
    }
}

fn colorful_subtree(root: &JpVertex, leaves: u64) -> Sub {
    let mut sub = Sub { chosen: Vec::new() };
    let mut missing = leaves.saturating_sub(1);
    while missing > 0 && sub.expand(root, &mut missing) {}
    sub
}

/// Shapes of a diagonal block: the empty block, a block equivalent to a
/// partition, or a block cut out of `D(w)` along a pattern.
fn block_shapes(
    d: &Diagram,
    w: Option<&Permutation>,
    rows: &BTreeSet<usize>,
    cols: &BTreeSet<usize>,
) -> Result<SchurExpansion> {
    let block = d.subdiagram(rows, cols).original;
    if block.is_empty() {
        return Ok(SchurExpansion::single(Partition::empty()));
    }
    if let Some(p) = block.equivalent_partition() {
        return Ok(SchurExpansion::single(p));
    }
    if let Some(w) = w {
        let inv = w.inverse();
        let mut positions: BTreeSet<usize> = rows.clone();
        positions.extend(cols.iter().map(|&c| inv.value(c)));
        let values: BTreeSet<usize> = positions.iter().map(|&p| w.value(p)).collect();
        let pattern_block = d.subdiagram(&positions, &values).original;
        if pattern_block == block {
            let seq: Vec<u8> = positions.iter().map(|&p| w.value(p) as u8).collect();
            return ls::stanley_via_ls(&Permutation::from_bytes(flatten_bytes(&seq)));
        }
    }
    Err(Error::UnsupportedSubdiagram(format!(
        "no shape decomposition known for block on rows {rows:?} and columns {cols:?}"
    )))
}

/// `iota(lambda, mu) = (lambda ∪ F1^min) + (F2^max ∪ mu)` for every pair of
/// shapes of the blocks `D1 = (U x V) ∩ D` and `D2 = (U^c x V^c) ∩ D`, where
/// `F1 = (U^c x V) ∩ D` and `F2 = (U x V^c) ∩ D`. When `w` is given, `D`
/// must be `D(w)` and blocks cut out along patterns of `w` are supported.
pub fn iota_shapes(
    d: &Diagram,
    w: Option<&Permutation>,
    u: &BTreeSet<usize>,
    v: &BTreeSet<usize>,
) -> Result<BTreeMap<(Partition, Partition), Partition>> {
    let n = d
        .num_rows()
        .max(d.num_cols())
        .max(u.iter().chain(v).copied().max().unwrap_or(0))
        .max(w.map_or(0, Permutation::size));
    let uc: BTreeSet<usize> = (1..=n).filter(|x| !u.contains(x)).collect();
    let vc: BTreeSet<usize> = (1..=n).filter(|x| !v.contains(x)).collect();
    let d1 = block_shapes(d, w, u, v)?;
    let d2 = block_shapes(d, w, &uc, &vc)?;
    let f1_min = d.subdiagram(&uc, v).original.d_min();
    let f2_max = d.subdiagram(u, &vc).original.d_max();
    let mut out = BTreeMap::new();
    for (lam, _) in d1.terms() {
        for (mu, _) in d2.terms() {
            let image = lam.union(&f1_min).plus(&f2_max.union(mu));
            out.insert((lam.clone(), mu.clone()), image);
        }
    }
    Ok(out)
}

/// Single-block form: the lower-right block is pinned to its top shape
/// `D2^max`, giving a map on the shapes of `D1` alone.
pub fn iota_single(
    d: &Diagram,
    w: Option<&Permutation>,
    u: &BTreeSet<usize>,
    v: &BTreeSet<usize>,
) -> Result<BTreeMap<Partition, Partition>> {
    let n = d
        .num_rows()
        .max(d.num_cols())
        .max(u.iter().chain(v).copied().max().unwrap_or(0))
        .max(w.map_or(0, Permutation::size));
    let uc: BTreeSet<usize> = (1..=n).filter(|x| !u.contains(x)).collect();
    let vc: BTreeSet<usize> = (1..=n).filter(|x| !v.contains(x)).collect();
    let mu0 = d.subdiagram(&uc, &vc).original.d_max();
    Ok(iota_shapes(d, w, u, v)?
        .into_iter()
        .filter(|((_, mu), _)| *mu == mu0)
        .map(|((lam, _), image)| (lam, image))
        .collect())
}
