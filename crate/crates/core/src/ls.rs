//! Transitions and the Lascoux-Schutzenberger tree.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{is_vexillary_bytes, Permutation};
use crate::schur::{Partition, SchurExpansion};

/// Default cap on the number of tree nodes visited.
pub const DEFAULT_NODE_BUDGET: usize = 10_000_000;

/// The transitions of `w`, computed on `base = 1^shifts x w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transitions {
    pub shifts: usize,
    pub base: Permutation,
    pub r: usize,
    pub s: usize,
    /// `j_1 > j_2 > .. > j_p`.
    pub js: Vec<usize>,
    /// `base t_{rs} t_{r j_i}`, in the order of `js`.
    pub children: Vec<Permutation>,
}

impl Transitions {
    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }
}

/// `r` is the last descent, `s > r` the last position with `w(s) < w(r)`.
fn site(v: &[u8]) -> Option<(usize, usize)> {
    let r = (1..v.len()).rev().find(|&i| v[i - 1] > v[i])?;
    let s = (r + 1..=v.len()).rev().find(|&s| v[s - 1] < v[r - 1])?;
    Some((r, s))
}

/// Positions `j < r` giving length-preserving `w t_{rs} t_{rj}`, largest
/// first.
fn transition_js(v: &[u8], r: usize, s: usize) -> Vec<usize> {
    let ws = v[s - 1];
    let mut best = 0u8;
    let mut js = Vec::new();
    for j in (1..r).rev() {
        let x = v[j - 1];
        if x < ws && x > best {
            best = x;
            js.push(j);
        }
    }
    js
}

fn shifted(v: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(1);
    out.extend(v.iter().map(|&x| x + 1));
    out
}

fn child_bytes(v: &[u8], r: usize, s: usize, j: usize) -> Vec<u8> {
    let mut c = v.to_vec();
    c[j - 1] = v[s - 1];
    c[r - 1] = v[j - 1];
    c[s - 1] = v[r - 1];
    c
}

struct Raw {
    shifts: usize,
    base: Vec<u8>,
    r: usize,
    s: usize,
    js: Vec<usize>,
}

fn raw_transitions(v: &[u8]) -> Option<Raw> {
    let mut base = v.to_vec();
    let (mut r, mut s) = site(&base)?;
    let mut shifts = 0;
    loop {
        let js = transition_js(&base, r, s);
        if !js.is_empty() {
            return Some(Raw {
                shifts,
                base,
                r,
                s,
                js,
            });
        }
        base = shifted(&base);
        r += 1;
        s += 1;
        shifts += 1;
    }
}

pub fn max_transition_site(w: &Permutation) -> Result<(usize, usize)> {
    site(w.as_bytes()).ok_or_else(|| Error::NoDescent(w.to_string()))
}

/// `T(w)`, shifting `w` by `1 x` until the set is nonempty.
pub fn transitions(w: &Permutation) -> Result<Transitions> {
    let raw = raw_transitions(w.as_bytes()).ok_or_else(|| Error::NoDescent(w.to_string()))?;
    let children = raw
        .js
        .iter()
        .map(|&j| Permutation::from_bytes(child_bytes(&raw.base, raw.r, raw.s, j)))
        .collect();
    Ok(Transitions {
        shifts: raw.shifts,
        base: Permutation::from_bytes(raw.base),
        r: raw.r,
        s: raw.s,
        js: raw.js,
        children,
    })
}

/// Sorted code of a vexillary permutation.
pub fn vexillary_shape(w: &Permutation) -> Result<Partition> {
    if !w.is_vexillary() {
        return Err(Error::InvalidInput(format!("{w} is not vexillary")));
    }
    Ok(shape_of_bytes(w.as_bytes()))
}

fn shape_of_bytes(v: &[u8]) -> Partition {
    Partition::new(
        (0..v.len())
            .map(|k| v[k + 1..].iter().filter(|&&x| x < v[k]).count())
            .collect(),
    )
}

/// Depth-first walk over the leaves of the tree, children in order.
fn walk_leaves<F>(w: &[u8], budget: usize, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    let mut stack = vec![w.to_vec()];
    let mut nodes = 0usize;
    while let Some(v) = stack.pop() {
        nodes += 1;
        if nodes > budget {
            return Err(Error::TreeBudget {
                budget,
                perm: Permutation::from_bytes(w.to_vec()).to_string(),
            });
        }
        if is_vexillary_bytes(&v) {
            if visit(&v).is_break() {
                return Ok(ControlFlow::Break(()));
            }
            continue;
        }
        let raw = raw_transitions(&v).expect("non-vexillary permutations have a descent");
        for &j in raw.js.iter().rev() {
            stack.push(child_bytes(&raw.base, raw.r, raw.s, j));
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// `F_w` as the multiset of leaf shapes.
pub fn stanley_via_ls(w: &Permutation) -> Result<SchurExpansion> {
    stanley_via_ls_with_budget(w, DEFAULT_NODE_BUDGET)
}

pub fn stanley_via_ls_with_budget(w: &Permutation, budget: usize) -> Result<SchurExpansion> {
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    let _ = walk_leaves(w.as_bytes(), budget, |leaf| {
        *counts.entry(shape_of_bytes(leaf)).or_insert(0) += 1;
        ControlFlow::Continue(())
    })?;
    let mut e = SchurExpansion::new();
    for (p, m) in counts {
        e.add_term(p, m);
    }
    Ok(e)
}

/// Number of leaves, i.e. `EG(w)`.
pub fn eg_number(w: &Permutation) -> Result<u64> {
    let mut count = 0u64;
    let _ = walk_leaves(w.as_bytes(), DEFAULT_NODE_BUDGET, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// `Some(EG(w))` when it is at most `cap`, `None` otherwise. Stops as soon
/// as the count passes `cap`.
pub fn eg_number_capped(w: &Permutation, cap: u64) -> Result<Option<u64>> {
    eg_number_capped_bytes(w.as_bytes(), cap)
}

pub(crate) fn eg_number_capped_bytes(w: &[u8], cap: u64) -> Result<Option<u64>> {
    let mut count = 0u64;
    let flow = walk_leaves(w, DEFAULT_NODE_BUDGET, |_| {
        count += 1;
        if count > cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(flow.is_continue().then_some(count))
}

/// `EG(w) <= k`.
pub fn is_k_vexillary(w: &Permutation, k: u64) -> Result<bool> {
    if k < 1 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    Ok(eg_number_capped(w, k)?.is_some())
}

/// Largest Schur coefficient of `F_w`.
pub fn multiplicity_bound(w: &Permutation) -> Result<u64> {
    Ok(stanley_via_ls(w)?.max_multiplicity())
}

pub fn is_multiplicity_free(w: &Permutation) -> Result<bool> {
    Ok(multiplicity_bound(w)? == 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsNode {
    /// Permutation at this vertex, in its own shifted frame.
    pub perm: Permutation,
    /// `1 x` embeddings applied along the path from the root.
    pub shifts: usize,
    pub children: Vec<usize>,
}

impl LsNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

/// Nodes in preorder; index 0 is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsTree {
    nodes: Vec<LsNode>,
}

#[derive(Serialize, Deserialize)]
struct LsJson {
    perm: Permutation,
    shifts: usize,
    children: Vec<LsJson>,
}

pub fn ls_tree(w: &Permutation) -> Result<LsTree> {
    ls_tree_with_budget(w, DEFAULT_NODE_BUDGET)
}

pub fn ls_tree_with_budget(w: &Permutation, budget: usize) -> Result<LsTree> {
    let mut nodes: Vec<LsNode> = Vec::new();
    let mut stack: Vec<(Permutation, usize, Option<usize>)> = vec![(w.clone(), 0, None)];
    while let Some((perm, shifts, parent)) = stack.pop() {
        if nodes.len() >= budget {
            return Err(Error::TreeBudget {
                budget,
                perm: w.to_string(),
            });
        }
        let id = nodes.len();
        if let Some(p) = parent {
            nodes[p].children.push(id);
        }
        let kids = if perm.is_vexillary() {
            Vec::new()
        } else {
            let t = transitions(&perm)?;
            t.children
                .into_iter()
                .map(|c| (c, shifts + t.shifts))
                .collect()
        };
        nodes.push(LsNode {
            perm,
            shifts,
            children: Vec::new(),
        });
        for (c, sh) in kids.into_iter().rev() {
            stack.push((c, sh, Some(id)));
        }
    }
    Ok(LsTree { nodes })
}

impl LsTree {
    pub fn root(&self) -> &LsNode {
        &self.nodes[0]
    }

    pub fn node(&self, id: usize) -> &LsNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[LsNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Leaf nodes, left to right.
    pub fn leaves(&self) -> Vec<&LsNode> {
        self.nodes.iter().filter(|n| n.is_leaf()).collect()
    }

    pub fn max_shift(&self) -> usize {
        self.nodes.iter().map(|n| n.shifts).max().unwrap_or(0)
    }

    pub fn stanley(&self) -> SchurExpansion {
        self.leaves()
            .into_iter()
            .map(|n| shape_of_bytes(n.perm.as_bytes()))
            .collect()
    }

    fn json_at(&self, id: usize) -> LsJson {
        let n = &self.nodes[id];
        LsJson {
            perm: n.perm.clone(),
            shifts: n.shifts,
            children: n.children.iter().map(|&c| self.json_at(c)).collect(),
        }
    }

    /// `{perm, shifts, children: [...]}`, nested.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.json_at(0)).expect("tree serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<LsTree> {
        let root: LsJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidInput(format!("bad tree JSON: {e}")))?;
        let mut nodes = Vec::new();
        fn push(j: LsJson, nodes: &mut Vec<LsNode>) -> usize {
            let id = nodes.len();
            nodes.push(LsNode {
                perm: j.perm,
                shifts: j.shifts,
                children: Vec::new(),
            });
            for c in j.children {
                let cid = push(c, nodes);
                nodes[id].children.push(cid);
            }
            id
        }
        push(root, &mut nodes);
        Ok(LsTree { nodes })
    }

    /// Graphviz source; leaves carry their shape.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ls {\n");
        for (id, n) in self.nodes.iter().enumerate() {
            let shown = show_padded(&n.perm, self.width());
            let label = if n.is_leaf() {
                format!("{shown}\\n{}", shape_of_bytes(n.perm.as_bytes()))
            } else {
                shown
            };
            out.push_str(&format!("  n{id} [label=\"{label}\"];\n"));
        }
        for (id, n) in self.nodes.iter().enumerate() {
            for c in &n.children {
                out.push_str(&format!("  n{id} -> n{c};\n"));
            }
        }
        out.push_str("}\n");
        out
    }

    /// Size of the root, to which the text forms pad every node.
    fn width(&self) -> usize {
        self.nodes[0].perm.size()
    }

    /// Indented one-line notation, one node per line.
    pub fn to_text(&self) -> String {
        fn rec(t: &LsTree, id: usize, depth: usize, out: &mut String) {
            let n = &t.nodes[id];
            out.push_str(&"  ".repeat(depth));
            out.push_str(&show_padded(&n.perm, t.width()));
            if n.is_leaf() {
                out.push_str(&format!(" {}", shape_of_bytes(n.perm.as_bytes())));
            }
            out.push('\n');
            for &c in &n.children {
                rec(t, c, depth + 1, out);
            }
        }
        let mut out = String::new();
        rec(self, 0, 0, &mut out);
        out
    }
}

fn show_padded(p: &Permutation, n: usize) -> String {
    let v = p.padded(n.max(p.size()));
    if v.is_empty() {
        "e".to_string()
    } else if v.len() <= 9 {
        v.iter().map(|x| x.to_string()).collect()
    } else {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn perms(v: &[&str]) -> Vec<Permutation> {
        v.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn site_examples() {
        assert_eq!(max_transition_site(&w("321465")).unwrap(), (5, 6));
        assert_eq!(max_transition_site(&w("2143")).unwrap(), (3, 4));
        assert_eq!(max_transition_site(&w("243165")).unwrap(), (5, 6));
        assert!(matches!(
            max_transition_site(&Permutation::identity()),
            Err(Error::NoDescent(_))
        ));
    }

    #[test]
    fn transition_examples() {
        assert_eq!(
            transitions(&w("321465")).unwrap().children,
            perms(&["321546"])
        );
        let t = transitions(&w("321546")).unwrap();
        assert_eq!(t.children, perms(&["324156", "341256", "421356"]));
        assert_eq!(t.js, vec![3, 2, 1]);
        let t = transitions(&w("3412")).unwrap();
        assert_eq!(t.shifts, 1);
        assert_eq!(t.base, w("14523"));
        assert_eq!(t.children, perms(&["34125"]));
        assert_eq!(t.children[0].length(), 4);
    }

    #[test]
    fn tree_of_321465() {
        let t = ls_tree(&w("321465")).unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(t.root().perm, w("321465"));
        assert_eq!(t.root().children.len(), 1);
        let mid = t.node(t.root().children[0]);
        assert_eq!(mid.perm, w("321546"));
        let mut leaves: Vec<Permutation> = t.leaves().into_iter().map(|n| n.perm.clone()).collect();
        leaves.sort();
        assert_eq!(leaves, perms(&["324156", "341256", "421356"]));
        assert_eq!(
            stanley_via_ls(&w("321465")).unwrap().to_string(),
            "s[2,1,1] + s[2,2] + s[3,1]"
        );
        assert_eq!(LsTree::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn small_trees() {
        assert_eq!(ls_tree(&w("2413")).unwrap().len(), 1);
        let t = ls_tree(&w("2143")).unwrap();
        let mut leaves: Vec<Permutation> = t.leaves().into_iter().map(|n| n.perm.clone()).collect();
        leaves.sort();
        assert_eq!(leaves, perms(&["2314", "3124"]));
    }

    #[test]
    fn shape_examples() {
        assert_eq!(
            vexillary_shape(&w("341256")).unwrap(),
            Partition::new(vec![2, 2])
        );
        assert_eq!(
            vexillary_shape(&Permutation::identity()).unwrap(),
            Partition::empty()
        );
        assert_eq!(
            vexillary_shape(&w("421356")).unwrap(),
            Partition::new(vec![3, 1])
        );
        assert!(vexillary_shape(&w("2143")).is_err());
    }

    #[test]
    fn worked_expansions() {
        assert_eq!(
            stanley_via_ls(&w("316524")).unwrap().to_string(),
            "s[3,2,2] + s[3,3,1] + s[4,2,1]"
        );
        assert_eq!(
            stanley_via_ls(&w("4261735")).unwrap().to_string(),
            "s[3,3,2,1] + s[3,3,3] + s[4,2,2,1] + s[4,3,1,1] + s[4,3,2]"
        );
    }

    #[test]
    fn eg_number_examples() {
        assert_eq!(eg_number(&w("2143")).unwrap(), 2);
        assert!(!is_k_vexillary(&w("2143"), 1).unwrap());
        assert!(is_k_vexillary(&w("2143"), 2).unwrap());
        assert_eq!(eg_number(&w("4261735")).unwrap(), 5);
        assert_eq!(eg_number(&Permutation::identity()).unwrap(), 1);
        assert_eq!(multiplicity_bound(&Permutation::identity()).unwrap(), 1);
        assert!(is_k_vexillary(&w("2143"), 0).is_err());
        assert_eq!(eg_number_capped(&w("4261735"), 4).unwrap(), None);
        assert_eq!(eg_number_capped(&w("4261735"), 5).unwrap(), Some(5));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            ls_tree_with_budget(&w("321465"), 3),
            Err(Error::TreeBudget { .. })
        ));
        assert!(stanley_via_ls_with_budget(&w("321465"), 3).is_err());
    }
}
