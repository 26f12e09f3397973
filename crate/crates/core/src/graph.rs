//! Simple undirected graphs on dense vertex ids.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

pub type VertexId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
}

/// Simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

/// Original labels of a re-indexed graph: `labels[i]` is the input id of vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdMap {
    pub labels: Vec<usize>,
}

impl IdMap {
    pub fn identity(n: usize) -> Self {
        IdMap { labels: (0..n).collect() }
    }

    pub fn label(&self, v: VertexId) -> usize {
        self.labels[v]
    }

    pub fn index_of(&self, label: usize) -> Option<VertexId> {
        self.labels.binary_search(&label).ok()
    }

    pub fn is_identity(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| i == l)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph on `n` vertices, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::OutOfRange(v));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m());
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Induced subgraph on `keep` (any order); vertex `i` of the result is `keep_sorted[i]`.
    pub fn induced(&self, keep: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut kept: Vec<VertexId> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![Vec::new(); kept.len()];
        for (i, &v) in kept.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX {
                    adj[i].push(pos[w]);
                }
            }
        }
        (Graph { adj }, kept)
    }

    /// Graph with vertex `v` isolated (all incident edges removed); ids unchanged.
    pub fn without_edges_at(&self, v: VertexId) -> Graph {
        let mut adj = self.adj.clone();
        for &w in &self.adj[v] {
            adj[w].retain(|&x| x != v);
        }
        adj[v].clear();
        Graph { adj }
    }

    /// BFS distances from a set of sources; `None` for unreachable vertices.
    pub fn distances_from(&self, sources: &[VertexId]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// True iff the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    pub fn is_edgeless(&self) -> bool {
        self.m() == 0
    }
}

/// Builds a graph from arbitrary nonnegative ids, re-indexing them densely in increasing order.
/// `isolated` lists extra ids that carry no edge.
pub fn build_graph_labeled(
    edges: &[(usize, usize)],
    isolated: &[usize],
) -> Result<(Graph, IdMap), GraphError> {
    let mut ids = BTreeSet::new();
    for &(u, v) in edges {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        ids.insert(u);
        ids.insert(v);
    }
    ids.extend(isolated.iter().copied());
    let labels: Vec<usize> = ids.into_iter().collect();
    let index: BTreeMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mapped: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (index[&u], index[&v])).collect();
    let g = Graph::from_edges(labels.len(), &mapped).map_err(|e| match e {
        GraphError::DuplicateEdge(a, b) => GraphError::DuplicateEdge(labels[a], labels[b]),
        other => other,
    })?;
    Ok((g, IdMap { labels }))
}

/// Builds a graph from an edge list; ids with gaps are re-indexed (see [`build_graph_labeled`]).
pub fn build_graph(edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    build_graph_labeled(edges, &[]).map(|(g, _)| g)
}
