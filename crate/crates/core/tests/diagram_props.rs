use std::collections::BTreeSet;

use proptest::prelude::*;
use stanley_core::{Diagram, JpMove, Permutation};

fn diagram_strategy() -> impl Strategy<Value = Diagram> {
    prop::collection::btree_set((1usize..=7, 1usize..=7), 0..30)
        .prop_map(|cells| Diagram::from_cells(cells).unwrap())
}

fn move_strategy() -> impl Strategy<Value = JpMove> {
    (any::<bool>(), 1usize..=7, 1usize..=7).prop_map(|(row, a, b)| {
        if row {
            JpMove::row(a, b)
        } else {
            JpMove::col(a, b)
        }
    })
}

proptest! {
    #[test]
    fn moves_preserve_cell_count(d in diagram_strategy(), m in move_strategy()) {
        prop_assert_eq!(d.apply_move(m).len(), d.len());
    }

    #[test]
    fn column_moves_keep_d_min(d in diagram_strategy(), a in 1usize..=7, b in 1usize..=7) {
        prop_assert_eq!(d.apply_move(JpMove::col(a, b)).d_min(), d.d_min());
    }

    #[test]
    fn row_moves_keep_d_max(d in diagram_strategy(), a in 1usize..=7, b in 1usize..=7) {
        prop_assert_eq!(d.apply_move(JpMove::row(a, b)).d_max(), d.d_max());
    }

    #[test]
    fn moves_are_transpose_symmetric(d in diagram_strategy(), a in 1usize..=7, b in 1usize..=7) {
        prop_assert_eq!(
            d.apply_move(JpMove::col(a, b)).transpose(),
            d.transpose().apply_move(JpMove::row(a, b))
        );
    }

    #[test]
    fn text_formats_round_trip(d in diagram_strategy()) {
        prop_assert_eq!(Diagram::from_json(&d.to_json()).unwrap(), d.clone());
        prop_assert_eq!(Diagram::from_ascii(&d.to_ascii()).unwrap(), d);
    }

    #[test]
    fn d_min_and_d_max_are_dominance_ordered(d in diagram_strategy()) {
        prop_assert!(d.d_min().dominance_leq(&d.d_max()).unwrap());
    }
}

#[test]
fn partition_equivalence_is_vexillarity() {
    let pattern: Permutation = "2143".parse().unwrap();
    for n in 0..=7 {
        for w in Permutation::all(n) {
            let eq = Diagram::rothe(&w).equivalent_partition();
            assert_eq!(eq.is_some(), !w.contains(&pattern), "{w}");
            if let Some(lam) = eq {
                let mut code = w.code().entries().to_vec();
                code.sort_unstable_by(|a, b| b.cmp(a));
                code.retain(|&c| c > 0);
                assert_eq!(lam.parts(), code.as_slice());
            }
        }
    }
}

#[test]
fn vexillary_essential_sets_are_antidiagonal_chains() {
    for n in 0..=7 {
        for w in Permutation::all(n).filter(Permutation::is_vexillary) {
            let ess: Vec<(usize, usize)> = Diagram::rothe(&w).essential_set().into_iter().collect();
            for a in &ess {
                for b in &ess {
                    assert!(!(a.0 < b.0 && a.1 < b.1), "{w}");
                }
            }
        }
    }
}

#[test]
fn forest_diagrams_avoid_four_patterns() {
    let patterns: Vec<Permutation> = ["3412", "4312", "3421", "4321"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for n in 0..=8 {
        for w in Permutation::all(n) {
            let avoids = patterns.iter().all(|p| !w.contains(p));
            assert_eq!(Diagram::rothe(&w).graph_is_forest(), avoids, "{w}");
        }
    }
}

#[test]
fn rothe_diagrams_have_length_many_cells() {
    for w in Permutation::all(6) {
        let d = Diagram::rothe(&w);
        assert_eq!(d.len(), w.length());
        assert!(d.is_northwest_for(&w));
    }
}

#[test]
fn pattern_occurrences_cut_out_subdiagrams() {
    let w: Permutation = "21543".parse().unwrap();
    let v: Permutation = "2143".parse().unwrap();
    let d = Diagram::rothe(&w);
    let occ = w.occurrences(&v);
    assert!(!occ.is_empty());
    for positions in occ {
        let rows: BTreeSet<usize> = positions.iter().copied().collect();
        let cols: BTreeSet<usize> = positions.iter().map(|&i| w.value(i)).collect();
        let sub = d.subdiagram(&rows, &cols);
        assert_eq!(sub.compressed, Diagram::rothe(&v));
    }
}

#[test]
fn moves_of_316524() {
    let d = Diagram::rothe(&"316524".parse().unwrap());
    let b22 =
        Diagram::from_cells([(1, 1), (1, 2), (3, 1), (3, 2), (3, 5), (4, 1), (4, 2)]).unwrap();
    assert_eq!(d.apply_move(JpMove::col(4, 1)), b22);
    let b31 =
        Diagram::from_cells([(1, 1), (1, 2), (1, 4), (1, 5), (3, 2), (4, 2), (4, 4)]).unwrap();
    assert_eq!(d.apply_move(JpMove::row(3, 1)), b31);
}
