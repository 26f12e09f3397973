//! Biconnected components and GDP-tree recognition.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Sorted vertex sets, ordered lexicographically.
    pub blocks: Vec<Vec<VertexId>>,
    pub cut_vertices: Vec<VertexId>,
}

/// Standard edge-stack biconnected component decomposition. Isolated vertices form singleton blocks.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut out: Vec<Vec<VertexId>> = Vec::new();
    let mut cuts = BTreeSet::new();

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            out.push(vec![root]);
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // frames: (vertex, parent, next neighbour index)
        let mut frames: Vec<(VertexId, VertexId, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&(v, parent, idx)) = frames.last() {
            if idx < g.degree(v) {
                let w = g.neighbors(v)[idx];
                frames.last_mut().unwrap().2 += 1;
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            cuts.insert(p);
                        }
                        let mut comp = BTreeSet::new();
                        while let Some((a, b)) = stack.pop() {
                            comp.insert(a);
                            comp.insert(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        out.push(comp.into_iter().collect());
                    }
                }
            }
        }
        if root_children > 1 {
            cuts.insert(root);
        }
    }
    out.sort();
    BlockDecomposition { blocks: out, cut_vertices: cuts.into_iter().collect() }
}

fn induced_edge_count(g: &Graph, set: &[VertexId]) -> usize {
    set.iter()
        .map(|&v| g.neighbors(v).iter().filter(|w| set.binary_search(w).is_ok()).count())
        .sum::<usize>()
        / 2
}

/// Connected, and every block is a complete graph or a cycle.
pub fn is_gdp_tree(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    blocks(g).blocks.iter().all(|b| {
        let k = b.len();
        let m = induced_edge_count(g, b);
        m == k * (k - 1) / 2 || (k >= 3 && m == k)
    })
}
