#![allow(dead_code)]

use proptest::prelude::*;
use weakdeg_core::Graph;

/// Graph on `n` vertices from the bits of `mask` over pairs in column order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

/// A graph with edge density roughly `p` percent.
pub fn arb_sparse_graph(max_n: usize, p: u32) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0..100u32, n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mask = bits.iter().enumerate().fold(0u64, |m, (k, &b)| if b < p { m | 1 << k } else { m });
            graph_from_mask(n, mask)
        })
    })
}
