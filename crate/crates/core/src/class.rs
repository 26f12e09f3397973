//! Membership in the class of plane graphs without 5-, 6-, 7-cycles and with triangles at distance at least 2.

use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexId};
use crate::plane::PlaneGraph;

/// Every simple cycle of length at most `max_len`, once each. A cycle is listed from its
/// smallest vertex, in the direction whose second vertex is smaller than its last.
/// Output is sorted by (length, vertices).
pub fn cycles_up_to(g: &Graph, max_len: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    let mut on_path = vec![false; g.n()];
    for s in g.vertices() {
        path.push(s);
        on_path[s] = true;
        extend(g, s, max_len, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out.sort_by(|a: &Vec<VertexId>, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

fn extend(
    g: &Graph,
    s: VertexId,
    max_len: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<VertexId>>,
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == s && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        }
        if w > s && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend(g, s, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// Sorted vertex triples of all triangles.
pub fn triangles(g: &Graph) -> Vec<[VertexId; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) {
                out.push([u, v, w]);
            }
        }
    }
    out.sort();
    out
}

/// A distance that may be infinite; serialised as a number or the string "infinity".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Least vertex-to-vertex distance between two distinct triangles.
pub fn triangle_distance(g: &Graph) -> Distance {
    let tris = triangles(g);
    let mut best = Distance::Infinite;
    for (i, t) in tris.iter().enumerate() {
        let dist = g.distances_from(t);
        for u in &tris[i + 1..] {
            if let Some(d) = u.iter().filter_map(|&v| dist[v]).min() {
                best = best.min(Distance::Finite(d));
            }
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub embedding_valid: bool,
    pub bad_cycles: Vec<Vec<VertexId>>,
    pub triangles: Vec<[VertexId; 3]>,
    pub triangle_distance: Distance,
    pub in_class: bool,
}

pub fn check_class(pg: &PlaneGraph) -> ClassReport {
    let g = pg.graph();
    let faces_ok = pg.faces().iter().map(|f| f.len()).sum::<usize>()
        == 2 * g.m() + g.vertices().filter(|&v| g.degree(v) == 0).count();
    let bad_cycles: Vec<Vec<VertexId>> =
        cycles_up_to(g, 7).into_iter().filter(|c| c.len() >= 5).collect();
    let triangle_distance = triangle_distance(g);
    let in_class = faces_ok && bad_cycles.is_empty() && triangle_distance >= Distance::Finite(2);
    ClassReport {
        embedding_valid: faces_ok,
        bad_cycles,
        triangles: triangles(g),
        triangle_distance,
        in_class,
    }
}

/// Same test on an abstract graph (the embedding is taken as given elsewhere).
pub fn graph_in_class(g: &Graph) -> bool {
    cycles_up_to(g, 7).iter().all(|c| c.len() < 5) && triangle_distance(g) >= Distance::Finite(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn cycle_counts() {
        let c5 = build_graph(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(cycles_up_to(&c5, 7), vec![vec![0, 1, 2, 3, 4]]);
        let k4 = build_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cs = cycles_up_to(&k4, 7);
        assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cs.iter().filter(|c| c.len() == 4).count(), 3);
        let tree = build_graph(&[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(cycles_up_to(&tree, 8).is_empty());
    }

    #[test]
    fn distances() {
        let bowtie = build_graph(&[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(triangle_distance(&bowtie), Distance::Finite(0));
        let joined =
            build_graph(&[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(triangle_distance(&joined), Distance::Finite(1));
        let one = build_graph(&[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(triangle_distance(&one), Distance::Infinite);
    }
}
