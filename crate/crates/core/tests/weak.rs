mod common;

use proptest::prelude::*;
use weakdeg_core::corpus::small_graphs;
use weakdeg_core::weak::*;
use weakdeg_core::Graph;

use common::{arb_graph, arb_sparse_graph};

fn decide(g: &Graph, f: &FMap) -> bool {
    is_weakly_f_degenerate(g, f).unwrap().is_some()
}

fn all_fmaps(n: usize, top: i64) -> impl Iterator<Item = Vec<i64>> {
    let base = (top + 1) as usize;
    (0..base.pow(n as u32)).map(move |mut x| {
        (0..n)
            .map(|_| {
                let d = (x % base) as i64;
                x /= base;
                d
            })
            .collect()
    })
}

#[test]
fn monotone_in_f_on_small_graphs() {
    // raising one value at a time reaches every f' >= f inside the grid
    for n in 1..=6 {
        for g in small_graphs(n) {
            for f in all_fmaps(n, 3) {
                if !decide(&g, &FMap(f.clone())) {
                    continue;
                }
                for v in 0..n {
                    let mut up = f.clone();
                    up[v] += 1;
                    assert!(decide(&g, &FMap(up)), "{:?} f={f:?} v={v}", g.edges());
                }
            }
        }
    }
}

#[test]
fn chain_bounds_up_to_eight_vertices() {
    for n in 1..=8 {
        for g in small_graphs(n) {
            let wd = weak_degeneracy(&g).unwrap().value;
            let d = degeneracy(&g).value;
            let chi = chromatic_number(&g).unwrap();
            assert!(chi - 1 <= wd && wd <= d, "{:?}: chi={chi} wd={wd} d={d}", g.edges());
        }
    }
}

#[test]
fn degeneracy_sequence_replays() {
    for n in 1..=6 {
        for g in small_graphs(n) {
            let (d, seq) = degeneracy_sequence(&g);
            assert!(verify_op_sequence(&g, &FMap::constant(n, d as i64), &seq).valid);
        }
    }
}

proptest! {
    #[test]
    fn monotone_in_f(g in arb_graph(6), f in proptest::collection::vec(0i64..=3, 6), bump in proptest::collection::vec(0i64..=2, 6)) {
        let n = g.n();
        let f = FMap(f[..n].to_vec());
        let up = FMap(f.0.iter().zip(&bump).map(|(a, b)| a + b).collect());
        if decide(&g, &f) {
            prop_assert!(decide(&g, &up));
        }
    }

    #[test]
    fn witnesses_replay(g in arb_graph(9), f in proptest::collection::vec(0i64..=4, 9)) {
        let f = FMap(f[..g.n()].to_vec());
        if let Some(seq) = is_weakly_f_degenerate(&g, &f).unwrap() {
            prop_assert!(verify_op_sequence(&g, &f, &seq).valid);
            let mut removed: Vec<usize> = seq.steps.iter().map(|op| op.removed()).collect();
            removed.sort_unstable();
            prop_assert_eq!(removed, (0..g.n()).collect::<Vec<_>>());
        }
        let r = weak_degeneracy(&g).unwrap();
        let Witness::Sequence(seq) = r.witness else { panic!("wd witness is a sequence") };
        prop_assert!(verify_op_sequence(&g, &FMap::constant(g.n(), r.value as i64), &seq).valid);
    }

    #[test]
    fn subgraph_monotone(g in arb_sparse_graph(10, 40), drop in any::<u16>()) {
        let keep: Vec<usize> = g.vertices().filter(|&v| drop >> v & 1 == 0).collect();
        prop_assume!(!keep.is_empty());
        let (h, _) = g.induced(&keep);
        prop_assert!(weak_degeneracy(&h).unwrap().value <= weak_degeneracy(&g).unwrap().value);
    }

    #[test]
    fn strict_characterizations(g in arb_graph(8)) {
        let n = g.n();
        prop_assert_eq!(is_strictly_f_degenerate(&g, &FMap::constant(n, 1)), g.m() == 0);
        // a forest has exactly n - c edges
        let forest = g.m() + g.components().len() == n;
        prop_assert_eq!(is_strictly_f_degenerate(&g, &FMap::constant(n, 2)), forest);
    }

    #[test]
    fn operations_are_pure(g in arb_graph(7), f in proptest::collection::vec(-1i64..=3, 7), pick in any::<u8>(), other in any::<u8>()) {
        let n = g.n();
        let s = WdState::full(&g, FMap(f[..n].to_vec()));
        let before = s.clone();
        let u = pick as usize % n;
        let (a, legal_a) = delete_op(&g, &s, u).unwrap();
        prop_assert_eq!(&s, &before);
        let (b, legal_b) = delete_op(&g, &before.clone(), u).unwrap();
        prop_assert_eq!((a, legal_a), (b, legal_b));
        if !legal_a {
            prop_assert_eq!(delete_op(&g, &s, u).unwrap().0, s.clone());
        }
        let nb = g.neighbors(u);
        if !nb.is_empty() {
            let w = nb[other as usize % nb.len()];
            let (x, lx) = delete_save_op(&g, &s, u, w).unwrap();
            prop_assert_eq!(&s, &before);
            prop_assert_eq!(lx, s.f.get(u) > s.f.get(w) && s.f.get(w) >= 0
                && nb.iter().all(|&y| y == w || s.f.get(y) >= 1));
            if lx {
                prop_assert_eq!(x.f.get(w), s.f.get(w));
            }
        }
    }
}
