//! Degree-restricted, induced matching of the configuration patterns.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexId};

use super::patterns::{all_patterns, ConfigKind, Pattern};

/// A matched configuration: pattern labels in pattern order and their host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigMatch {
    pub kind: ConfigKind,
    pub semicircle_lengths: Vec<usize>,
    pub assignment: Assignment,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub labels: Vec<String>,
    pub vertices: Vec<VertexId>,
}

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.labels.len()))?;
        for (l, v) in self.labels.iter().zip(&self.vertices) {
            m.serialize_entry(l, v)?;
        }
        m.end()
    }
}

impl Assignment {
    pub fn get(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(|i| self.vertices[i])
    }
}

impl ConfigMatch {
    pub fn get(&self, label: &str) -> Option<VertexId> {
        self.assignment.get(label)
    }

    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut vs = self.assignment.vertices.clone();
        vs.sort_unstable();
        vs
    }
}

type Key = (ConfigKind, Vec<VertexId>, Vec<(VertexId, VertexId)>);

fn image_key(p: &Pattern, map: &[VertexId]) -> Key {
    let mut vs = map.to_vec();
    vs.sort_unstable();
    let mut es: Vec<(VertexId, VertexId)> = p
        .edges
        .iter()
        .map(|&(a, b)| (map[a].min(map[b]), map[a].max(map[b])))
        .collect();
    es.sort_unstable();
    (p.kind, vs, es)
}

/// Collects embeddings, keeping per image the least (semicircles, assignment).
#[derive(Default)]
pub(crate) struct MatchSet {
    best: BTreeMap<Key, (Vec<usize>, Vec<VertexId>, usize)>,
}

impl MatchSet {
    pub(crate) fn add(&mut self, p: &Pattern, pidx: usize, map: &[VertexId]) {
        let key = image_key(p, map);
        let cand = (p.semicircles.clone(), map.to_vec(), pidx);
        match self.best.get(&key) {
            Some(old) if (&old.0, &old.1) <= (&cand.0, &cand.1) => {}
            _ => {
                self.best.insert(key, cand);
            }
        }
    }

    pub(crate) fn finish(self, patterns: &[Pattern]) -> Vec<ConfigMatch> {
        let mut out: Vec<ConfigMatch> = self
            .best
            .into_values()
            .map(|(semi, map, pidx)| ConfigMatch {
                kind: patterns[pidx].kind,
                semicircle_lengths: semi,
                assignment: Assignment { labels: patterns[pidx].labels.clone(), vertices: map },
            })
            .collect();
        out.sort_by(|a, b| {
            (a.kind, &a.assignment.vertices, &a.semicircle_lengths).cmp(&(
                b.kind,
                &b.assignment.vertices,
                &b.semicircle_lengths,
            ))
        });
        out
    }
}

/// Pattern vertices in BFS order from vertex 0, with the earlier neighbour each hangs from.
fn bfs_order(p: &Pattern) -> Vec<(usize, Option<usize>)> {
    let mut order = vec![(0, None)];
    let mut seen = vec![false; p.len()];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let a = order[i].0;
        i += 1;
        for b in 0..p.len() {
            if p.adjacent(a, b) && !seen[b] {
                seen[b] = true;
                order.push((b, Some(a)));
            }
        }
    }
    assert_eq!(order.len(), p.len(), "patterns are connected");
    order
}

struct Embed<'a> {
    g: &'a Graph,
    p: &'a Pattern,
    order: Vec<(usize, Option<usize>)>,
    map: Vec<VertexId>,
    used: Vec<bool>,
}

impl Embed<'_> {
    fn consistent(&self, step: usize, pv: usize, h: VertexId) -> bool {
        self.order[..step]
            .iter()
            .all(|&(q, _)| self.p.adjacent(pv, q) == self.g.has_edge(h, self.map[q]))
    }

    fn go(&mut self, step: usize, out: &mut MatchSet, pidx: usize) {
        if step == self.order.len() {
            out.add(self.p, pidx, &self.map);
            return;
        }
        let (pv, parent) = self.order[step];
        let cands: Vec<VertexId> = match parent {
            None => self.g.vertices().collect(),
            Some(q) => self.g.neighbors(self.map[q]).to_vec(),
        };
        for h in cands {
            if self.used[h] || self.g.degree(h) != self.p.degree[pv] || !self.consistent(step, pv, h) {
                continue;
            }
            self.map[pv] = h;
            self.used[h] = true;
            self.go(step + 1, out, pidx);
            self.used[h] = false;
        }
    }
}

/// All matches of the given patterns in `g`, deduplicated per image.
pub fn find_pattern_matches(g: &Graph, patterns: &[Pattern]) -> Vec<ConfigMatch> {
    let mut out = MatchSet::default();
    for (pidx, p) in patterns.iter().enumerate() {
        if p.len() > g.n() {
            continue;
        }
        let mut e = Embed {
            g,
            p,
            order: bfs_order(p),
            map: vec![usize::MAX; p.len()],
            used: vec![false; g.n()],
        };
        e.go(0, &mut out, pidx);
    }
    out.finish(patterns)
}

/// All matches of the ten configurations.
pub fn find_configurations(g: &Graph) -> Vec<ConfigMatch> {
    find_pattern_matches(g, &all_patterns())
}

/// Reference matcher: plain backtracking in pattern-label order over all host vertices.
pub fn brute_force_matches(g: &Graph, patterns: &[Pattern]) -> Vec<ConfigMatch> {
    fn go(
        g: &Graph,
        p: &Pattern,
        i: usize,
        map: &mut Vec<VertexId>,
        out: &mut MatchSet,
        pidx: usize,
    ) {
        if i == p.len() {
            out.add(p, pidx, map);
            return;
        }
        for h in g.vertices() {
            if map.contains(&h) || g.degree(h) != p.degree[i] {
                continue;
            }
            if (0..i).all(|j| p.adjacent(i, j) == g.has_edge(h, map[j])) {
                map.push(h);
                go(g, p, i + 1, map, out, pidx);
                map.pop();
            }
        }
    }
    let mut out = MatchSet::default();
    for (pidx, p) in patterns.iter().enumerate() {
        go(g, p, 0, &mut Vec::new(), &mut out, pidx);
    }
    out.finish(patterns)
}
