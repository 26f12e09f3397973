mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weakdeg_core::class::*;
use weakdeg_core::corpus;
use weakdeg_core::Graph;

use common::arb_graph;

type EdgeSet = BTreeSet<(usize, usize)>;

fn edge_set(c: &[usize]) -> EdgeSet {
    (0..c.len()).map(|i| (c[i].min(c[(i + 1) % c.len()]), c[i].max(c[(i + 1) % c.len()]))).collect()
}

/// Every cyclic ordering of every vertex subset, kept when all consecutive pairs are edges.
fn oracle_cycles(g: &Graph, max_len: usize) -> BTreeSet<EdgeSet> {
    fn perms(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let n = g.n();
    let mut found = BTreeSet::new();
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.len() < 3 || vs.len() > max_len {
            continue;
        }
        let mut orders = Vec::new();
        perms(&mut vs[1..].to_vec(), &mut vec![vs[0]], &mut orders);
        for c in orders {
            if (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()])) {
                found.insert(edge_set(&c));
            }
        }
    }
    found
}

proptest! {
    #[test]
    fn cycles_match_oracle(g in arb_graph(7), max_len in 3usize..=8) {
        let mine = cycles_up_to(&g, max_len);
        let sets: BTreeSet<EdgeSet> = mine.iter().map(|c| edge_set(c)).collect();
        prop_assert_eq!(sets.len(), mine.len());
        prop_assert_eq!(sets, oracle_cycles(&g, max_len));
        for c in &mine {
            prop_assert_eq!(c[0], *c.iter().min().unwrap());
            prop_assert!(c[1] < *c.last().unwrap());
        }
    }

    #[test]
    fn triangle_distance_by_oracle(g in arb_graph(8)) {
        let tris = triangles(&g);
        let mut best = Distance::Infinite;
        for (i, a) in tris.iter().enumerate() {
            for b in &tris[i + 1..] {
                let d = g.distances_from(a);
                if let Some(x) = b.iter().filter_map(|&v| d[v]).min() {
                    best = best.min(Distance::Finite(x));
                }
            }
        }
        prop_assert_eq!(triangle_distance(&g), best);
    }
}

#[test]
fn fixture_membership() {
    let want_in = ["k3", "c4", "c8", "c9", "p1", "p3", "p6", "star5", "seven-face", "truncated-rhombic-dodecahedron"];
    let want_out = ["k4", "cube"];
    for fx in corpus::fixtures() {
        let r = check_class(&fx.pg);
        assert!(r.embedding_valid, "{}", fx.name);
        if want_in.contains(&fx.name.as_str()) {
            assert!(r.in_class, "{}: {:?}", fx.name, r);
        }
        if want_out.contains(&fx.name.as_str()) {
            assert!(!r.in_class, "{}", fx.name);
        }
        assert_eq!(r.in_class, graph_in_class(fx.pg.graph()), "{}", fx.name);
    }
}

#[test]
fn random_corpus_is_in_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let pg = corpus::random_in_class(&mut rng, 26);
        let r = check_class(&pg);
        assert!(r.in_class);
        assert!(cycles_up_to(pg.graph(), 7).iter().all(|c| c.len() <= 4));
    }
}
