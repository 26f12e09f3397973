//! Builds a full weak 2-degeneracy witness for graphs in the class.
//!
//! Vertices are peeled one block at a time: a vertex of degree at most two, or a whole
//! configuration. Blocks are emitted in reverse order of discovery, so everything found later
//! (the rest of the graph) is removed first.

use serde::Serialize;
use thiserror::Error;

use crate::class::check_class;
use crate::graph::{Graph, VertexId};
use crate::plane::PlaneGraph;
use crate::structure::{find_configurations, ConfigKind, ConfigMatch};
use crate::weak::{replay_from, solve_on, verify_op_sequence, FMap, Op, OperationSequence, WdState, DEFAULT_CAP};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReduceError {
    #[error("graph is not in the class")]
    NotInClass,
    #[error("no explicit ordering for {0}")]
    NoOrdering(ConfigKind),
    #[error("assignment has no vertex for label {0}")]
    MissingLabel(String),
    #[error("remaining graph on {0} vertices has minimum degree 3 and no configuration")]
    NoReducibleStructure(usize),
    #[error("exact search failed on a configuration residual of {0} vertices")]
    FallbackFailed(usize),
    #[error("assembled trace does not replay: {0}")]
    ReplayFailed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "source", content = "kind", rename_all = "snake_case")]
pub enum Provenance {
    TwoMinusDelete,
    ConfigOrdering(ConfigKind),
    FallbackSearch,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::TwoMinusDelete => write!(f, "two-minus"),
            Provenance::ConfigOrdering(k) => write!(f, "config {k}"),
            Provenance::FallbackSearch => write!(f, "fallback"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: OperationSequence,
    pub provenance: Vec<Provenance>,
    /// Configurations used, in trace order.
    pub configurations: Vec<ConfigMatch>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Look for a configuration before a vertex of degree at most two.
    pub prefer_configurations: bool,
}

/// `f(v) = 2 - (d_G(v) - d_{G[kept]}(v))` on kept vertices, 0 elsewhere.
pub fn residual_fmap(g: &Graph, kept: &[VertexId]) -> FMap {
    let mut inside = vec![false; g.n()];
    for &v in kept {
        inside[v] = true;
    }
    FMap(
        g.vertices()
            .map(|v| {
                if inside[v] {
                    2 - g.neighbors(v).iter().filter(|&&w| !inside[w]).count() as i64
                } else {
                    0
                }
            })
            .collect(),
    )
}

/// The explicit removal order for a configuration, instantiated on a match.
pub fn config_finish_sequence(m: &ConfigMatch) -> Result<OperationSequence, ReduceError> {
    let get = |l: &str| m.get(l).ok_or_else(|| ReduceError::MissingLabel(l.to_string()));
    let opt = |l: &str| m.get(l);
    let mut steps = Vec::new();
    match m.kind {
        ConfigKind::CA => return Err(ReduceError::NoOrdering(ConfigKind::CA)),
        ConfigKind::C_SPECIAL => {
            steps.push(Op::DeleteSave(get("v6")?, get("w1")?));
            steps.push(Op::Delete(get("v7")?));
            steps.push(Op::DeleteSave(get("u6")?, get("w2")?));
            steps.push(Op::Delete(get("u7")?));
            steps.push(Op::Delete(get("v")?));
            for i in 1..=5 {
                steps.push(Op::Delete(get(&format!("u{i}"))?));
            }
            steps.push(Op::Delete(get("w2")?));
            for i in 1..=5 {
                steps.push(Op::Delete(get(&format!("v{i}"))?));
            }
            steps.push(Op::Delete(get("w1")?));
        }
        ConfigKind::C_F3F4A | ConfigKind::C_F3F4B => {
            steps.push(Op::DeleteSave(get("v2")?, get("w1")?));
            let mut order: Vec<VertexId> = vec![get("v1")?, get("v")?];
            for l in ["u6", "u5", "u4", "u3"] {
                order.push(get(l)?);
            }
            order.extend(opt("w5"));
            order.extend(opt("w4"));
            for l in ["u2", "u1", "u", "v6", "v5", "w3", "w2", "v4", "v3", "w1"] {
                order.push(get(l)?);
            }
            steps.extend(order.into_iter().map(Op::Delete));
        }
        _ => {
            steps.push(Op::DeleteSave(get("x2")?, get("v1")?));
            let mut order: Vec<VertexId> = Vec::new();
            order.extend(opt("u2"));
            order.extend(opt("v2"));
            for i in (3..=8).chain([1]) {
                order.push(get(&format!("x{i}"))?);
                if i != 1 {
                    order.extend(opt(&format!("u{i}")));
                    order.extend(opt(&format!("v{i}")));
                }
            }
            order.extend(opt("u1"));
            order.push(get("v1")?);
            steps.extend(order.into_iter().map(Op::Delete));
        }
    }
    Ok(OperationSequence::new(steps))
}

struct Block {
    steps: Vec<Op>,
    provenance: Vec<Provenance>,
    config: Option<ConfigMatch>,
}

/// Reduces `pg` to the empty graph from `f ≡ 2`. The returned trace always replays.
pub fn reduce_to_empty(pg: &PlaneGraph, opts: ReduceOptions) -> Result<ReductionTrace, ReduceError> {
    if !check_class(pg).in_class {
        return Err(ReduceError::NotInClass);
    }
    let g = pg.graph();
    let mut alive = vec![true; g.n()];
    let mut blocks: Vec<Block> = Vec::new();
    let live_degree = |alive: &[bool], v: VertexId| g.neighbors(v).iter().filter(|&&w| alive[w]).count();

    while alive.iter().any(|&a| a) {
        let keep: Vec<VertexId> = g.vertices().filter(|&v| alive[v]).collect();
        let low = keep.iter().copied().find(|&v| live_degree(&alive, v) <= 2);
        let config = || {
            let (h, map) = g.induced(&keep);
            find_configurations(&h).into_iter().next().map(|m| relabel(m, &map))
        };
        let chosen = match (opts.prefer_configurations, low) {
            (true, _) => config().map(Ok).or(low.map(Err)),
            (false, Some(v)) => Some(Err(v)),
            (false, None) => config().map(Ok),
        };
        match chosen {
            Some(Err(v)) => {
                alive[v] = false;
                blocks.push(Block { steps: vec![Op::Delete(v)], provenance: vec![Provenance::TwoMinusDelete], config: None });
            }
            Some(Ok(m)) => {
                let s = m.vertex_set();
                let mut f = FMap(vec![0; g.n()]);
                for &v in &s {
                    let outside = g.neighbors(v).iter().filter(|&&w| alive[w] && !s.contains(&w)).count();
                    f.0[v] = 2 - outside as i64;
                }
                let state = WdState::on(g, &s, f.clone());
                let planned = config_finish_sequence(&m).ok().filter(|seq| replay_from(g, &state, seq).valid);
                let block = match planned {
                    Some(seq) => Block {
                        provenance: vec![Provenance::ConfigOrdering(m.kind); seq.len()],
                        steps: seq.steps,
                        config: Some(m),
                    },
                    None => {
                        let seq = solve_on(g, &s, &f, DEFAULT_CAP)
                            .ok()
                            .flatten()
                            .ok_or(ReduceError::FallbackFailed(s.len()))?;
                        Block { provenance: vec![Provenance::FallbackSearch; seq.len()], steps: seq.steps, config: Some(m) }
                    }
                };
                for &v in &s {
                    alive[v] = false;
                }
                blocks.push(block);
            }
            None => return Err(ReduceError::NoReducibleStructure(keep.len())),
        }
    }

    let mut trace = ReductionTrace { steps: OperationSequence::default(), provenance: Vec::new(), configurations: Vec::new() };
    for b in blocks.into_iter().rev() {
        trace.steps.steps.extend(b.steps);
        trace.provenance.extend(b.provenance);
        trace.configurations.extend(b.config);
    }
    let replay = verify_op_sequence(g, &FMap::constant(g.n(), 2), &trace.steps);
    if !replay.valid {
        return Err(ReduceError::ReplayFailed(replay.reason.unwrap_or_default()));
    }
    Ok(trace)
}

fn relabel(mut m: ConfigMatch, map: &[VertexId]) -> ConfigMatch {
    for v in &mut m.assignment.vertices {
        *v = map[*v];
    }
    m
}
