//! Covers, strictly f-degenerate transversals (SfDTs) and (I,F)-partitions.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::weak::{is_strictly_f_degenerate, FMap};

/// A cover with uniform list size `s`. List vertex `(v, i)` (1-based `i`) has id `v * s + i - 1`.
/// `matchings[(a, b)]` with `a < b` holds pairs `(i, j)` meaning `(a, i) ~ (b, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cover {
    pub base: Graph,
    pub s: usize,
    pub matchings: BTreeMap<(VertexId, VertexId), Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CoverViolation {
    IndexOutOfRange { a: VertexId, b: VertexId, i: usize, j: usize },
    NotAMatching { a: VertexId, b: VertexId, i: usize, j: usize },
    NotABaseEdge { a: VertexId, b: VertexId },
    ListSizeZero,
}

impl Cover {
    pub fn id(&self, v: VertexId, i: usize) -> usize {
        v * self.s + i - 1
    }

    pub fn split(&self, x: usize) -> (VertexId, usize) {
        (x / self.s, x % self.s + 1)
    }

    pub fn size(&self) -> usize {
        self.base.n() * self.s
    }

    /// Adds the pair `(a, i) ~ (b, j)`, normalising the key order.
    pub fn add_pair(&mut self, a: VertexId, i: usize, b: VertexId, j: usize) {
        let (key, pair) = if a < b { ((a, b), (i, j)) } else { ((b, a), (j, i)) };
        self.matchings.entry(key).or_default().push(pair);
    }

    /// The cover graph H. Assumes the cover is valid.
    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (&(a, b), pairs) in &self.matchings {
            for &(i, j) in pairs {
                edges.push((self.id(a, i), self.id(b, j)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::from_edges(self.size(), &edges).expect("valid cover")
    }
}

/// Identity-matched cover: s disjoint copies of `g`.
pub fn good_cover(g: &Graph, s: usize) -> Cover {
    let matchings = g
        .edges()
        .into_iter()
        .map(|e| (e, (1..=s).map(|i| (i, i)).collect()))
        .collect();
    Cover { base: g.clone(), s, matchings }
}

/// Checks the cover conditions against base `g`; empty means valid.
pub fn validate_cover(g: &Graph, h: &Cover) -> Vec<CoverViolation> {
    let mut out = Vec::new();
    if h.s == 0 {
        out.push(CoverViolation::ListSizeZero);
    }
    for (&(a, b), pairs) in &h.matchings {
        if a >= b || !g.has_edge(a, b) {
            out.push(CoverViolation::NotABaseEdge { a, b });
            continue;
        }
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for &(i, j) in pairs {
            if i == 0 || j == 0 || i > h.s || j > h.s {
                out.push(CoverViolation::IndexOutOfRange { a, b, i, j });
                continue;
            }
            let l = left.insert(i, j).is_some();
            let r = right.insert(j, i).is_some();
            if l || r {
                out.push(CoverViolation::NotAMatching { a, b, i, j });
            }
        }
    }
    out
}

/// Values per cover vertex id.
pub type CoverFMap = FMap;

/// `f(v, i) = values[i - 1]` for every base vertex.
pub fn uniform_cover_fmap(h: &Cover, values: &[i64]) -> CoverFMap {
    FMap((0..h.size()).map(|x| values[x % h.s]).collect())
}

/// The chosen list index (1-based) per base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transversal {
    pub chosen: Vec<usize>,
}

impl Transversal {
    pub fn ids(&self, h: &Cover) -> Vec<usize> {
        self.chosen.iter().enumerate().map(|(v, &i)| h.id(v, i)).collect()
    }
}

/// True iff H[T] is strictly f-degenerate.
pub fn is_sfdt(hg: &Graph, f: &CoverFMap, t: &[usize]) -> bool {
    let (sub, kept) = hg.induced(t);
    let fv = FMap(kept.iter().map(|&x| f.0[x]).collect());
    is_strictly_f_degenerate(&sub, &fv)
}

/// Backtracking over list choices with an incremental core test and forward checking.
struct SfdtSearch<'a> {
    h: &'a Cover,
    hg: Graph,
    f: &'a CoverFMap,
    in_t: Vec<bool>,
    chosen: Vec<usize>,
}

impl SfdtSearch<'_> {
    fn new<'a>(h: &'a Cover, f: &'a CoverFMap) -> SfdtSearch<'a> {
        SfdtSearch {
            h,
            hg: h.graph(),
            f,
            in_t: vec![false; h.size()],
            chosen: vec![0; h.base.n()],
        }
    }

    /// Whether H[T + x] has an empty f-core, given that H[T] has one.
    fn addable(&self, x: usize) -> bool {
        // the core of H[T + x], if nonempty, contains x; peel the component of x
        let mut comp = vec![x];
        let mut seen = BTreeMap::new();
        seen.insert(x, 0i64);
        let mut i = 0;
        while i < comp.len() {
            let y = comp[i];
            i += 1;
            for &z in self.hg.neighbors(y) {
                if self.in_t[z] && !seen.contains_key(&z) {
                    seen.insert(z, 0);
                    comp.push(z);
                }
            }
        }
        let member = |z: usize| z == x || self.in_t[z];
        for &y in &comp {
            let d = self.hg.neighbors(y).iter().filter(|&&z| member(z)).count() as i64;
            seen.insert(y, d);
        }
        let mut gone: BTreeMap<usize, bool> = comp.iter().map(|&y| (y, false)).collect();
        let mut queue: Vec<usize> =
            comp.iter().copied().filter(|&y| seen[&y] < self.f.0[y]).collect();
        for &y in &queue {
            gone.insert(y, true);
        }
        while let Some(y) = queue.pop() {
            if y == x {
                return true;
            }
            for &z in self.hg.neighbors(y) {
                if member(z) && !gone[&z] {
                    let d = seen.get_mut(&z).unwrap();
                    *d -= 1;
                    if *d < self.f.0[z] {
                        gone.insert(z, true);
                        queue.push(z);
                    }
                }
            }
        }
        gone[&x]
    }

    fn viable(&mut self, w: VertexId) -> bool {
        (1..=self.h.s).any(|i| self.addable(self.h.id(w, i)))
    }

    fn run(&mut self, order: &[VertexId], pos: usize) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let rest = &order[pos + 1..];
        for i in 1..=self.h.s {
            let x = self.h.id(v, i);
            if !self.addable(x) {
                continue;
            }
            self.in_t[x] = true;
            self.chosen[v] = i;
            let ok = self
                .h
                .base
                .neighbors(v)
                .iter()
                .filter(|w| rest.contains(w))
                .all(|&w| self.viable(w));
            if ok && self.run(order, pos + 1) {
                return true;
            }
            self.in_t[x] = false;
            self.chosen[v] = 0;
        }
        false
    }
}

/// Search order: increasing base degree, ties by id.
fn base_order(g: &Graph, vs: impl Iterator<Item = VertexId>) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = vs.collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    order
}

/// A strictly f-degenerate transversal, or `None` if none exists.
pub fn find_sfdt(h: &Cover, f: &CoverFMap) -> Option<Transversal> {
    let mut search = SfdtSearch::new(h, f);
    let order = base_order(&h.base, h.base.vertices());
    if !search.run(&order, 0) {
        return None;
    }
    let t = Transversal { chosen: search.chosen };
    assert!(is_sfdt(&search.hg, f, &t.ids(h)), "incremental check disagrees with full check");
    Some(t)
}

/// Exhaustive enumeration of all s^n transversals in lexicographic order.
pub fn brute_force_sfdt(h: &Cover, f: &CoverFMap) -> Option<Transversal> {
    let n = h.base.n();
    let hg = h.graph();
    let mut chosen = vec![1; n];
    loop {
        let t = Transversal { chosen: chosen.clone() };
        if is_sfdt(&hg, f, &t.ids(h)) {
            return Some(t);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if chosen[i] < h.s {
                chosen[i] += 1;
                break;
            }
            chosen[i] = 1;
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WwyError {
    #[error("ordered list has a repeated or unknown vertex {0}")]
    BadVertex(VertexId),
    #[error("ordered list needs at least two vertices")]
    TooShort,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WwyReport {
    pub residual_gap: bool,
    pub end_condition: bool,
    /// Positions (0-based) of interior vertices breaking the interior bound.
    pub interior_failures: Vec<usize>,
    pub holds: bool,
}

fn wwy_input(g: &Graph, order: &[VertexId]) -> Result<Vec<usize>, WwyError> {
    if order.len() < 2 {
        return Err(WwyError::TooShort);
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        if v >= g.n() || pos[v] != usize::MAX {
            return Err(WwyError::BadVertex(v));
        }
        pos[v] = i;
    }
    Ok(pos)
}

/// Neighbours of `v` outside the listed set.
fn outside(g: &Graph, pos: &[usize], v: VertexId) -> i64 {
    g.neighbors(v).iter().filter(|&&w| pos[w] == usize::MAX).count() as i64
}

/// The three extension conditions for the ordered list `order` and the pair (first, last).
pub fn check_wwy_conditions(g: &Graph, order: &[VertexId], k: i64) -> Result<WwyReport, WwyError> {
    let pair = (order[0], *order.last().unwrap_or(&order[0]));
    check_wwy_conditions_pairs(g, order, k, &[pair])
}

/// The same conditions with several (start, end) pairs: each pair must satisfy the residual gap
/// and end conditions, and the interior bound is required of every vertex that is not in a pair.
pub fn check_wwy_conditions_pairs(
    g: &Graph,
    order: &[VertexId],
    k: i64,
    pairs: &[(VertexId, VertexId)],
) -> Result<WwyReport, WwyError> {
    let pos = wwy_input(g, order)?;
    for &(a, b) in pairs {
        for x in [a, b] {
            if x >= g.n() || pos[x] == usize::MAX {
                return Err(WwyError::BadVertex(x));
            }
        }
    }
    let residual_gap = pairs
        .iter()
        .all(|&(a, b)| k - outside(g, &pos, a) > k - outside(g, &pos, b));
    let end_condition =
        pairs.iter().all(|&(a, b)| g.degree(b) as i64 <= k && g.has_edge(a, b));
    let exempt = |v: VertexId| pairs.iter().any(|&(a, b)| a == v || b == v);
    let interior_failures: Vec<usize> = order
        .iter()
        .enumerate()
        .filter(|&(_, &v)| !exempt(v))
        .filter(|&(i, &v)| {
            let before = g.neighbors(v).iter().filter(|&&w| pos[w] == usize::MAX || pos[w] < i).count();
            before as i64 > k - 1
        })
        .map(|(i, _)| i)
        .collect();
    let holds = residual_gap && end_condition && interior_failures.is_empty();
    Ok(WwyReport { residual_gap, end_condition, interior_failures, holds })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtendError {
    #[error("partial transversal must choose exactly the vertices outside K")]
    Shape,
    #[error("partial transversal is not strictly f-degenerate")]
    PartialNotSfdt,
    #[error("no extension over K exists; the extension conditions do not hold")]
    NoExtension,
}

/// Extends an SfDT of H - H_K (given as `partial[v] = Some(i)` off K) by exhaustive search over K.
pub fn extend_sfdt(
    h: &Cover,
    f: &CoverFMap,
    partial: &[Option<usize>],
    k_list: &[VertexId],
) -> Result<Transversal, ExtendError> {
    let n = h.base.n();
    if partial.len() != n {
        return Err(ExtendError::Shape);
    }
    let mut in_k = vec![false; n];
    for &v in k_list {
        if v >= n {
            return Err(ExtendError::Shape);
        }
        in_k[v] = true;
    }
    for v in 0..n {
        match partial[v] {
            Some(i) if in_k[v] || i == 0 || i > h.s => return Err(ExtendError::Shape),
            None if !in_k[v] => return Err(ExtendError::Shape),
            _ => {}
        }
    }
    let mut search = SfdtSearch::new(h, f);
    let fixed: Vec<usize> =
        (0..n).filter_map(|v| partial[v].map(|i| h.id(v, i))).collect();
    if !is_sfdt(&search.hg, f, &fixed) {
        return Err(ExtendError::PartialNotSfdt);
    }
    for v in 0..n {
        if let Some(i) = partial[v] {
            search.in_t[h.id(v, i)] = true;
            search.chosen[v] = i;
        }
    }
    let order = base_order(&h.base, k_list.iter().copied());
    if !search.run(&order, 0) {
        return Err(ExtendError::NoExtension);
    }
    Ok(Transversal { chosen: search.chosen })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IFPartition {
    #[serde(rename = "I")]
    pub independent: Vec<VertexId>,
    #[serde(rename = "F")]
    pub forest: Vec<VertexId>,
}

/// Good cover with s = 2, f(v,1) = 1, f(v,2) = 2; I and F read off an SfDT.
pub fn if_partition(g: &Graph) -> Option<IFPartition> {
    let h = good_cover(g, 2);
    let f = uniform_cover_fmap(&h, &[1, 2]);
    let t = find_sfdt(&h, &f)?;
    let independent = g.vertices().filter(|&v| t.chosen[v] == 1).collect();
    let forest = g.vertices().filter(|&v| t.chosen[v] == 2).collect();
    Some(IFPartition { independent, forest })
}

pub fn verify_if_partition(g: &Graph, p: &IFPartition) -> bool {
    let mut side = vec![0u8; g.n()];
    for &v in &p.independent {
        if v >= g.n() || side[v] != 0 {
            return false;
        }
        side[v] = 1;
    }
    for &v in &p.forest {
        if v >= g.n() || side[v] != 0 {
            return false;
        }
        side[v] = 2;
    }
    if side.contains(&0) {
        return false;
    }
    if g.edges().iter().any(|&(u, v)| side[u] == 1 && side[v] == 1) {
        return false;
    }
    g.induced(&p.forest).0.is_forest()
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("brute-force partition oracle is limited to {cap} vertices, got {n}")]
pub struct PartitionOracleTooLarge {
    pub n: usize,
    pub cap: usize,
}

/// Exhaustive over all bipartitions, I given by the bits of a counter.
pub fn brute_force_if_partition(g: &Graph) -> Result<Option<IFPartition>, PartitionOracleTooLarge> {
    const CAP: usize = 20;
    let n = g.n();
    if n > CAP {
        return Err(PartitionOracleTooLarge { n, cap: CAP });
    }
    for mask in 0u32..(1u32 << n) {
        let p = IFPartition {
            independent: (0..n).filter(|&v| mask >> v & 1 == 1).collect(),
            forest: (0..n).filter(|&v| mask >> v & 1 == 0).collect(),
        };
        if verify_if_partition(g, &p) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}
