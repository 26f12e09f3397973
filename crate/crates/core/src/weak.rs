//! The Delete / DeleteSave calculus, exact weak f-degeneracy, degeneracy and strict f-degeneracy.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

/// Default vertex cap for the exact solver.
pub const DEFAULT_CAP: usize = 24;
/// The solver state is a 64-bit mask.
pub const HARD_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WdError {
    #[error("vertex {0} is not present")]
    Absent(VertexId),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(VertexId, VertexId),
    #[error("{n} vertices exceeds the exact-search cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Op {
    Delete(VertexId),
    /// `DeleteSave(a, b)` removes `a` and spares its neighbour `b`.
    DeleteSave(VertexId, VertexId),
}

impl Op {
    pub fn removed(&self) -> VertexId {
        match *self {
            Op::Delete(u) => u,
            Op::DeleteSave(a, _) => a,
        }
    }

    pub fn map(&self, to: impl Fn(VertexId) -> VertexId) -> Op {
        match *self {
            Op::Delete(u) => Op::Delete(to(u)),
            Op::DeleteSave(a, b) => Op::DeleteSave(to(a), to(b)),
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Delete(u) => write!(f, "D {u}"),
            Op::DeleteSave(a, b) => write!(f, "S {a} {b}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OperationSequence {
    pub steps: Vec<Op>,
}

impl OperationSequence {
    pub fn new(steps: Vec<Op>) -> Self {
        OperationSequence { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Integer value per vertex, indexed by vertex id of the accompanying graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FMap(pub Vec<i64>);

impl FMap {
    pub fn constant(n: usize, k: i64) -> Self {
        FMap(vec![k; n])
    }

    pub fn get(&self, v: VertexId) -> i64 {
        self.0[v]
    }
}

/// Current vertex set plus current f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WdState {
    pub alive: Vec<bool>,
    pub f: FMap,
}

impl WdState {
    pub fn full(g: &Graph, f: FMap) -> Self {
        WdState { alive: vec![true; g.n()], f }
    }

    pub fn on(g: &Graph, keep: &[VertexId], f: FMap) -> Self {
        let mut alive = vec![false; g.n()];
        for &v in keep {
            alive[v] = true;
        }
        WdState { alive, f }
    }

    pub fn is_empty(&self) -> bool {
        !self.alive.iter().any(|&a| a)
    }

    pub fn remaining(&self) -> Vec<VertexId> {
        (0..self.alive.len()).filter(|&v| self.alive[v]).collect()
    }
}

/// `Delete(u)`: legal iff f(u) >= 0 and every remaining neighbour keeps a nonnegative value.
/// An illegal step returns the state unchanged with `false`.
pub fn delete_op(g: &Graph, s: &WdState, u: VertexId) -> Result<(WdState, bool), WdError> {
    if u >= g.n() || !s.alive[u] {
        return Err(WdError::Absent(u));
    }
    let mut next = s.clone();
    next.alive[u] = false;
    let mut legal = s.f.0[u] >= 0;
    for &w in g.neighbors(u) {
        if s.alive[w] {
            next.f.0[w] -= 1;
            legal &= next.f.0[w] >= 0;
        }
    }
    Ok(if legal { (next, true) } else { (s.clone(), false) })
}

/// `DeleteSave(a, b)`: legal iff f(a) > f(b) (strictly) and every remaining neighbour of `a`
/// other than `b` keeps a nonnegative value after its decrement.
pub fn delete_save_op(
    g: &Graph,
    s: &WdState,
    a: VertexId,
    b: VertexId,
) -> Result<(WdState, bool), WdError> {
    for x in [a, b] {
        if x >= g.n() || !s.alive[x] {
            return Err(WdError::Absent(x));
        }
    }
    if !g.has_edge(a, b) {
        return Err(WdError::NotAdjacent(a, b));
    }
    let mut next = s.clone();
    next.alive[a] = false;
    let mut legal = s.f.0[a] > s.f.0[b] && s.f.0[b] >= 0;
    for &w in g.neighbors(a) {
        if s.alive[w] && w != b {
            next.f.0[w] -= 1;
            legal &= next.f.0[w] >= 0;
        }
    }
    Ok(if legal { (next, true) } else { (s.clone(), false) })
}

pub fn apply_op(g: &Graph, s: &WdState, op: Op) -> Result<(WdState, bool), WdError> {
    match op {
        Op::Delete(u) => delete_op(g, s, u),
        Op::DeleteSave(a, b) => delete_save_op(g, s, a, b),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Replay {
    pub valid: bool,
    pub failed_step: Option<usize>,
    pub reason: Option<String>,
}

/// Replays `seq` from `state`; valid iff every step is legal and the state ends empty.
pub fn replay_from(g: &Graph, state: &WdState, seq: &OperationSequence) -> Replay {
    let mut s = state.clone();
    for (i, &op) in seq.steps.iter().enumerate() {
        match apply_op(g, &s, op) {
            Err(e) => {
                return Replay { valid: false, failed_step: Some(i), reason: Some(e.to_string()) }
            }
            Ok((_, false)) => {
                return Replay {
                    valid: false,
                    failed_step: Some(i),
                    reason: Some(format!("step {op} is illegal")),
                }
            }
            Ok((next, true)) => s = next,
        }
    }
    if s.is_empty() {
        Replay { valid: true, failed_step: None, reason: None }
    } else {
        Replay {
            valid: false,
            failed_step: None,
            reason: Some(format!("{} vertices remain", s.remaining().len())),
        }
    }
}

pub fn verify_op_sequence(g: &Graph, f: &FMap, seq: &OperationSequence) -> Replay {
    replay_from(g, &WdState::full(g, f.clone()), seq)
}

/// Exact solver over a subset of at most 64 vertices.
struct Search {
    nbr: Vec<u64>,
    failed: HashSet<(u64, Vec<u8>)>,
}

impl Search {
    fn deg(&self, v: usize, mask: u64) -> i64 {
        (self.nbr[v] & mask).count_ones() as i64
    }

    #[allow(clippy::ptr_arg)]
    fn solve(&mut self, mut mask: u64, f: &mut Vec<i64>) -> Option<Vec<Op>> {
        // vertices whose value is at least their degree can always go last
        let mut peeled = Vec::new();
        loop {
            let mut changed = false;
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if f[v] >= self.deg(v, mask) {
                    mask &= !(1u64 << v);
                    peeled.push(v);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let tail = || peeled.iter().rev().map(|&v| Op::Delete(v)).collect::<Vec<_>>();
        if mask == 0 {
            return Some(tail());
        }
        let alive: Vec<usize> = bits(mask).collect();
        if alive.iter().any(|&v| f[v] < 0) {
            return None;
        }
        let key = (mask, alive.iter().map(|&v| f[v] as u8).collect::<Vec<u8>>());
        if self.failed.contains(&key) {
            return None;
        }

        let mut deletes = Vec::new();
        let mut saves = Vec::new();
        for &a in &alive {
            let low: Vec<usize> = bits(self.nbr[a] & mask).filter(|&w| f[w] < 1).collect();
            let mut has_save = false;
            for b in bits(self.nbr[a] & mask) {
                if f[a] > f[b] && low.iter().all(|&w| w == b) {
                    saves.push((f[a] - f[b], a, b));
                    has_save = true;
                }
            }
            // a legal DeleteSave at a dominates Delete at a
            if low.is_empty() && !has_save {
                deletes.push((f[a], a));
            }
        }
        deletes.sort();
        saves.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));

        let moves = deletes
            .into_iter()
            .map(|(_, a)| Op::Delete(a))
            .chain(saves.into_iter().map(|(_, a, b)| Op::DeleteSave(a, b)));
        for op in moves {
            let a = op.removed();
            let mut g = f.clone();
            for w in bits(self.nbr[a] & mask) {
                if let Op::DeleteSave(_, b) = op {
                    if w == b {
                        continue;
                    }
                }
                g[w] -= 1;
            }
            if let Some(mut rest) = self.solve(mask & !(1u64 << a), &mut g) {
                let mut out = vec![op];
                out.append(&mut rest);
                out.extend(tail());
                return Some(out);
            }
        }
        self.failed.insert(key);
        None
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Exact decision on the subgraph induced by `keep`, with `f` indexed by vertex id of `g`.
pub fn solve_on(
    g: &Graph,
    keep: &[VertexId],
    f: &FMap,
    cap: usize,
) -> Result<Option<OperationSequence>, WdError> {
    let mut kept = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    let cap = cap.min(HARD_CAP);
    if kept.len() > cap {
        return Err(WdError::TooLarge { n: kept.len(), cap });
    }
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        local[v] = i;
    }
    let nbr = kept
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| local[w] != usize::MAX)
                .fold(0u64, |m, &w| m | (1u64 << local[w]))
        })
        .collect();
    let mut search = Search { nbr, failed: HashSet::new() };
    let mask = if kept.len() == 64 { u64::MAX } else { (1u64 << kept.len()) - 1 };
    let mut vals: Vec<i64> = kept.iter().map(|&v| f.0[v]).collect();
    Ok(search
        .solve(mask, &mut vals)
        .map(|ops| OperationSequence::new(ops.iter().map(|op| op.map(|i| kept[i])).collect())))
}

/// Exact weak f-degeneracy with the default size cap. The witness replays on `(g, f)`.
pub fn is_weakly_f_degenerate(g: &Graph, f: &FMap) -> Result<Option<OperationSequence>, WdError> {
    is_weakly_f_degenerate_capped(g, f, DEFAULT_CAP)
}

pub fn is_weakly_f_degenerate_capped(
    g: &Graph,
    f: &FMap,
    cap: usize,
) -> Result<Option<OperationSequence>, WdError> {
    let all: Vec<VertexId> = g.vertices().collect();
    solve_on(g, &all, f, cap)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Sequence(OperationSequence),
    Ordering(Vec<VertexId>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WdResult {
    pub value: usize,
    pub witness: Witness,
}

/// Min-degree peeling. The witness is the removal order.
pub fn degeneracy(g: &Graph) -> WdResult {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut value = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        value = value.max(deg[v]);
        gone[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    WdResult { value, witness: Witness::Ordering(order) }
}

/// Delete sequence legal at f ≡ d(G): reverse of the peeling order.
pub fn degeneracy_sequence(g: &Graph) -> (usize, OperationSequence) {
    let r = degeneracy(g);
    let Witness::Ordering(order) = r.witness else { unreachable!() };
    (r.value, OperationSequence::new(order.iter().rev().map(|&v| Op::Delete(v)).collect()))
}

/// wd(G): the least k such that G is weakly k-degenerate, with a witness at that k.
pub fn weak_degeneracy(g: &Graph) -> Result<WdResult, WdError> {
    weak_degeneracy_capped(g, DEFAULT_CAP)
}

pub fn weak_degeneracy_capped(g: &Graph, cap: usize) -> Result<WdResult, WdError> {
    let (d, seq) = degeneracy_sequence(g);
    if g.n() > cap.min(HARD_CAP) {
        return Err(WdError::TooLarge { n: g.n(), cap: cap.min(HARD_CAP) });
    }
    for k in 0..d {
        if let Some(w) = is_weakly_f_degenerate_capped(g, &FMap::constant(g.n(), k as i64), cap)? {
            return Ok(WdResult { value: k, witness: Witness::Sequence(w) });
        }
    }
    Ok(WdResult { value: d, witness: Witness::Sequence(seq) })
}

/// Vertices of the f-core: what survives repeated removal of vertices with degree below f.
pub fn f_core(g: &Graph, f: &FMap) -> Vec<VertexId> {
    let mut deg: Vec<i64> = g.vertices().map(|v| g.degree(v) as i64).collect();
    let mut gone = vec![false; g.n()];
    let mut queue: Vec<VertexId> = g.vertices().filter(|&v| deg[v] < f.0[v]).collect();
    for &v in &queue {
        gone[v] = true;
    }
    while let Some(v) = queue.pop() {
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
                if deg[w] < f.0[w] {
                    gone[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    g.vertices().filter(|&v| !gone[v]).collect()
}

pub fn is_strictly_f_degenerate(g: &Graph, f: &FMap) -> bool {
    f_core(g, f).is_empty()
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("chromatic number oracle is limited to {cap} vertices, got {n}")]
pub struct OracleTooLarge {
    pub n: usize,
    pub cap: usize,
}

/// Exact chromatic number by backtracking over colour counts (oracle scale).
pub fn chromatic_number(g: &Graph) -> Result<usize, OracleTooLarge> {
    const CAP: usize = 12;
    if g.n() > CAP {
        return Err(OracleTooLarge { n: g.n(), cap: CAP });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for k in 1..=g.n() {
        let mut colour = vec![usize::MAX; g.n()];
        if colourable(g, &order, 0, k, 0, &mut colour) {
            return Ok(k);
        }
    }
    unreachable!()
}

fn colourable(
    g: &Graph,
    order: &[VertexId],
    i: usize,
    k: usize,
    used: usize,
    colour: &mut [usize],
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // new colours are interchangeable, so only the first unused one is tried
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| colour[w] != c) {
            colour[v] = c;
            if colourable(g, order, i + 1, k, used.max(c + 1), colour) {
                return true;
            }
            colour[v] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn cycle(n: usize) -> Graph {
        build_graph(&(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        build_graph(&e).unwrap()
    }

    #[test]
    fn delete_arithmetic() {
        let k2 = complete(2);
        let (s, ok) = delete_op(&k2, &WdState::full(&k2, FMap::constant(2, 2)), 0).unwrap();
        assert!(ok);
        assert_eq!(s.f.0[1], 1);
        assert!(!s.alive[0]);
        let start = WdState::full(&k2, FMap::constant(2, 0));
        let (s, ok) = delete_op(&k2, &start, 0).unwrap();
        assert!(!ok);
        assert_eq!(s, start);

        let c4 = cycle(4);
        let (s, ok) = delete_op(&c4, &WdState::full(&c4, FMap::constant(4, 1)), 0).unwrap();
        assert!(ok);
        assert_eq!(s.f.0[1..], [0, 1, 0]);
    }

    #[test]
    fn delete_save_arithmetic() {
        let p = build_graph(&[(0, 1), (1, 2)]).unwrap();
        let (s, ok) = delete_save_op(&p, &WdState::full(&p, FMap(vec![1, 2, 1])), 1, 2).unwrap();
        assert!(ok);
        assert_eq!((s.f.0[0], s.f.0[2]), (0, 1));

        let t = cycle(3);
        let (_, ok) = delete_save_op(&t, &WdState::full(&t, FMap::constant(3, 2)), 0, 1).unwrap();
        assert!(!ok);

        let star = build_graph(&[(0, 1), (0, 2)]).unwrap();
        let (s, ok) = delete_save_op(&star, &WdState::full(&star, FMap(vec![2, 1, 0])), 0, 2).unwrap();
        assert!(ok);
        assert_eq!((s.f.0[1], s.f.0[2]), (0, 0));

        assert_eq!(
            delete_save_op(&p, &WdState::full(&p, FMap(vec![1, 2, 1])), 0, 2),
            Err(WdError::NotAdjacent(0, 2))
        );
    }

    #[test]
    fn solver_examples() {
        let one = Graph::empty(1);
        assert!(is_weakly_f_degenerate(&one, &FMap::constant(1, 0)).unwrap().is_some());
        assert!(is_weakly_f_degenerate(&cycle(4), &FMap::constant(4, 1)).unwrap().is_none());
        let k4 = complete(4);
        assert!(is_weakly_f_degenerate(&k4, &FMap::constant(4, 2)).unwrap().is_none());
        let w = is_weakly_f_degenerate(&k4, &FMap::constant(4, 3)).unwrap().unwrap();
        assert!(verify_op_sequence(&k4, &FMap::constant(4, 3), &w).valid);
    }

    #[test]
    fn wd_values() {
        let p3 = build_graph(&[(0, 1), (1, 2)]).unwrap();
        assert_eq!(weak_degeneracy(&p3).unwrap().value, 1);
        assert_eq!(weak_degeneracy(&cycle(5)).unwrap().value, 2);
        assert_eq!(weak_degeneracy(&complete(4)).unwrap().value, 3);
        assert_eq!(degeneracy(&complete(5)).value, 4);
        assert_eq!(degeneracy(&cycle(7)).value, 2);
    }

    #[test]
    fn replay_examples() {
        let p3 = build_graph(&[(0, 1), (1, 2)]).unwrap();
        let seq = OperationSequence::new(vec![Op::Delete(0), Op::Delete(1), Op::Delete(2)]);
        assert!(verify_op_sequence(&p3, &FMap::constant(3, 1), &seq).valid);
        let k2 = complete(2);
        let seq = OperationSequence::new(vec![Op::DeleteSave(0, 1), Op::Delete(1)]);
        let r = verify_op_sequence(&k2, &FMap::constant(2, 2), &seq);
        assert!(!r.valid);
        assert_eq!(r.failed_step, Some(0));
    }

    #[test]
    fn strict_examples() {
        assert!(is_strictly_f_degenerate(&Graph::empty(3), &FMap::constant(3, 1)));
        assert!(!is_strictly_f_degenerate(&cycle(3), &FMap::constant(3, 2)));
        assert!(!is_strictly_f_degenerate(&cycle(4), &FMap::constant(4, 1)));
        let tree = build_graph(&[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(is_strictly_f_degenerate(&tree, &FMap::constant(4, 2)));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(5)), Ok(3));
        assert_eq!(chromatic_number(&complete(4)), Ok(4));
        assert_eq!(chromatic_number(&build_graph(&[(0, 1), (1, 2)]).unwrap()), Ok(2));
    }
}
