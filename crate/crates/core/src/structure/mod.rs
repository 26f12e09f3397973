//! Face-local structure: controlling edges, richness, special 8-faces, structural audits and
//! the configuration check for the class.

pub mod matcher;
pub mod patterns;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::class::check_class;
use crate::graph::VertexId;
use crate::plane::{FaceId, PlaneGraph};

pub use matcher::{brute_force_matches, find_configurations, find_pattern_matches, Assignment, ConfigMatch};
pub use patterns::{all_patterns, patterns, ConfigKind, Pattern};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(VertexId, VertexId),
    #[error("face {face} has length {len}, need at least {need}")]
    FaceTooSmall { face: FaceId, len: usize, need: usize },
    #[error("face {0} is not an 8-face")]
    NotEightFace(FaceId),
    #[error("graph is not in the class")]
    NotInClass,
    #[error("no vertex of degree at most two and no configuration found")]
    NoReducibleStructure,
}

/// The 4⁻-face controlled by edge `uv`, if its two sides are a 4⁻-face and a 7⁺-face.
pub fn controls(pg: &PlaneGraph, u: VertexId, v: VertexId) -> Result<Option<FaceId>, StructureError> {
    let (a, b) = pg.edge_faces(u, v).ok_or(StructureError::NotAnEdge(u, v))?;
    if a == b {
        return Ok(None);
    }
    let (da, db) = (pg.face_degree(a), pg.face_degree(b));
    Ok(if da <= 4 && db >= 7 {
        Some(a)
    } else if db <= 4 && da >= 7 {
        Some(b)
    } else {
        None
    })
}

/// The controlled face across position `i` of a 7⁺-face `f`.
pub fn controlled_at(pg: &PlaneGraph, f: FaceId, i: usize) -> Option<FaceId> {
    let g = pg.across(f, i);
    (g != f && pg.face_degree(f) >= 7 && pg.face_degree(g) <= 4).then_some(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Richness {
    Rich,
    SemiRich,
    Poor,
}

/// A maximal run of controlling edges on a face walk, starting at edge position `start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ControlPath {
    pub start: usize,
    pub len: usize,
    /// True when every edge of the face controls (the run closes up).
    pub cyclic: bool,
    pub vertices: Vec<VertexId>,
    pub controlled: Vec<FaceId>,
    /// Every controlled face is a 4-face.
    pub four_controlling: bool,
}

impl ControlPath {
    pub fn positions(&self, d: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).map(move |j| (self.start + j) % d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceProfile {
    pub face: FaceId,
    pub degree: usize,
    pub controlled: Vec<Option<FaceId>>,
    pub maximal_paths: Vec<ControlPath>,
    pub richness: Vec<Richness>,
    pub s0: usize,
    pub t3_prime: usize,
}

pub fn face_profile(pg: &PlaneGraph, f: FaceId) -> Result<FaceProfile, StructureError> {
    let d = pg.face_degree(f);
    if d < 7 {
        return Err(StructureError::FaceTooSmall { face: f, len: d, need: 7 });
    }
    let walk = pg.face(f);
    let controlled: Vec<Option<FaceId>> = (0..d).map(|i| controlled_at(pg, f, i)).collect();
    let richness: Vec<Richness> = (0..d)
        .map(|i| {
            let c = controlled[(i + d - 1) % d].is_some() as u8 + controlled[i].is_some() as u8;
            [Richness::Rich, Richness::SemiRich, Richness::Poor][c as usize]
        })
        .collect();
    let mut maximal_paths = Vec::new();
    if controlled.iter().all(Option::is_some) {
        maximal_paths.push(make_path(pg, walk.walk.as_slice(), &controlled, 0, d, true));
    } else if let Some(free) = controlled.iter().position(Option::is_none) {
        let mut j = 1;
        while j <= d {
            let p = (free + j) % d;
            if controlled[p].is_some() {
                let mut len = 0;
                while controlled[(p + len) % d].is_some() {
                    len += 1;
                }
                maximal_paths.push(make_path(pg, walk.walk.as_slice(), &controlled, p, len, false));
                j += len;
            } else {
                j += 1;
            }
        }
        maximal_paths.sort_by_key(|p| p.start);
    }
    let s0 = richness.iter().filter(|&&r| r == Richness::Rich).count();
    let t3_prime = pg.adjacent_faces(f).keys().filter(|&&g| pg.face_degree(g) == 3).count();
    Ok(FaceProfile { face: f, degree: d, controlled, maximal_paths, richness, s0, t3_prime })
}

fn make_path(
    pg: &PlaneGraph,
    walk: &[VertexId],
    controlled: &[Option<FaceId>],
    start: usize,
    len: usize,
    cyclic: bool,
) -> ControlPath {
    let d = walk.len();
    let faces: Vec<FaceId> = (0..len).map(|j| controlled[(start + j) % d].unwrap()).collect();
    ControlPath {
        start,
        len,
        cyclic,
        vertices: (0..=len).map(|j| walk[(start + j) % d]).collect(),
        four_controlling: faces.iter().all(|&g| pg.face_degree(g) == 4),
        controlled: faces,
    }
}

/// All vertex occurrences on `f` have degree 3.
pub fn is_light(pg: &PlaneGraph, f: FaceId) -> bool {
    pg.face(f).walk.iter().all(|&v| pg.graph().degree(v) == 3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpecialType {
    TypeI,
    TypeII,
}

/// Classifies an 8-face as special (and its type) or not.
pub fn is_special_8_face(pg: &PlaneGraph, f: FaceId) -> Result<Option<SpecialType>, StructureError> {
    if pg.face_degree(f) != 8 {
        return Err(StructureError::NotEightFace(f));
    }
    let g = pg.graph();
    let walk = &pg.face(f).walk;
    if !pg.face(f).is_simple() {
        return Ok(None);
    }
    let fours: Vec<usize> = (0..8).filter(|&i| g.degree(walk[i]) == 4).collect();
    if fours.len() != 1 || (0..8).filter(|&i| g.degree(walk[i]) == 3).count() != 7 {
        return Ok(None);
    }
    let profile = face_profile(pg, f)?;
    if profile.richness[fours[0]] != Richness::SemiRich {
        return Ok(None);
    }
    let adj = pg.adjacent_faces(f);
    let small: Vec<FaceId> = adj.keys().copied().filter(|&h| pg.face_degree(h) <= 4).collect();
    let threes = small.iter().filter(|&&h| pg.face_degree(h) == 3).count();
    let fours_f = small.iter().filter(|&&h| pg.face_degree(h) == 4).count();
    if threes != 2 || fours_f != 2 || small.len() != 4 {
        return Ok(None);
    }
    let heavy: Vec<FaceId> = small.iter().copied().filter(|&h| !is_light(pg, h)).collect();
    if heavy.len() != 1 {
        return Ok(None);
    }
    let h = heavy[0];
    let big = pg.face(h).walk.iter().filter(|&&v| g.degree(v) >= 4).count();
    if big < 2 || !pg.face(h).walk.contains(&walk[fours[0]]) {
        return Ok(None);
    }
    Ok(Some(if pg.face_degree(h) == 4 { SpecialType::TypeI } else { SpecialType::TypeII }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub item: &'static str,
    pub faces: Vec<FaceId>,
    pub vertices: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    /// In the class and minimum degree at least 3: the setting the structural facts are proved in.
    pub hypotheses_met: bool,
    pub violations: Vec<Violation>,
}

fn rotate_to(walk: &[VertexId], start: usize) -> Vec<VertexId> {
    (0..walk.len()).map(|j| walk[(start + j) % walk.len()]).collect()
}

/// Checks the structural facts about small cycles and faces, and that no 4-vertex sits between
/// two special 8-faces at opposite angles.
pub fn structure_audit(pg: &PlaneGraph) -> AuditReport {
    let g = pg.graph();
    let mut out = Vec::new();

    // a 3-cycle and a 4⁻-cycle share no edge
    let short = crate::class::cycles_up_to(g, 4);
    let edge_set = |c: &Vec<VertexId>| -> BTreeSet<(VertexId, VertexId)> {
        (0..c.len()).map(|i| {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            (a.min(b), a.max(b))
        }).collect()
    };
    for (i, t) in short.iter().enumerate().filter(|(_, c)| c.len() == 3) {
        for (j, c) in short.iter().enumerate() {
            if i != j && !edge_set(t).is_disjoint(&edge_set(c)) && (c.len() == 4 || j > i) {
                let mut vs: Vec<VertexId> = t.iter().chain(c.iter()).copied().collect();
                vs.sort_unstable();
                vs.dedup();
                out.push(Violation { item: "triangle-shares-edge-with-short-cycle", faces: vec![], vertices: vs });
            }
        }
    }

    for f in 0..pg.face_count() {
        let d = pg.face_degree(f);
        let walk = &pg.face(f).walk;
        let adj = pg.adjacent_faces(f);
        if d == 6 {
            out.push(Violation { item: "six-face", faces: vec![f], vertices: walk.clone() });
        }
        if d == 7 && adj.keys().any(|&h| pg.face_degree(h) <= 4) && !seven_face_ok(pg, f) {
            out.push(Violation { item: "seven-face-shape", faces: vec![f], vertices: walk.clone() });
        }
        if d == 3 {
            for (&h, _) in adj.iter().filter(|(&h, _)| pg.face_degree(h) <= 7) {
                out.push(Violation { item: "three-face-adjacent-to-small-face", faces: vec![f, h], vertices: vec![] });
            }
        }
        if d == 4 {
            for (&h, _) in adj.iter().filter(|(&h, _)| pg.face_degree(h) <= 6) {
                out.push(Violation { item: "four-face-adjacent-to-small-face", faces: vec![f, h], vertices: vec![] });
            }
        }
        if d == 8 && !pg.face(f).is_simple() && !eight_face_ok(pg, f) {
            out.push(Violation { item: "eight-face-cut-vertex-shape", faces: vec![f], vertices: walk.clone() });
        }
    }

    let special: Vec<bool> = (0..pg.face_count())
        .map(|f| pg.face_degree(f) == 8 && is_special_8_face(pg, f).ok().flatten().is_some())
        .collect();
    for v in g.vertices().filter(|&v| g.degree(v) == 4) {
        let fs = pg.angle_faces(v);
        if (0..2).any(|j| special[fs[j]] && special[fs[j + 2]] && fs[j] != fs[j + 2]) {
            out.push(Violation { item: "four-vertex-between-special-faces", faces: fs.clone(), vertices: vec![v] });
        }
    }

    let hypotheses_met = check_class(pg).in_class && g.min_degree().unwrap_or(0) >= 3;
    AuditReport { hypotheses_met, violations: out }
}

/// A 7-face is a triangle and a 4-cycle through one vertex x, and each adjacent 4⁻-face is a
/// 4-face sharing exactly the two 4-cycle edges at x.
fn seven_face_ok(pg: &PlaneGraph, f: FaceId) -> bool {
    let walk = &pg.face(f).walk;
    let Some((p, q)) = repeated_pair(walk) else { return false };
    let w = if q - p == 3 { rotate_to(walk, p) } else if q - p == 4 { rotate_to(walk, q) } else { return false };
    // w = x y z x a b c
    let mut distinct = w.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != 6 || w[0] != w[3] {
        return false;
    }
    let start = if q - p == 3 { p } else { q };
    let allowed: BTreeSet<usize> = [(start + 3) % 7, (start + 6) % 7].into_iter().collect();
    let mut shared: std::collections::BTreeMap<FaceId, BTreeSet<usize>> = Default::default();
    for i in 0..7 {
        let h = pg.across(f, i);
        if h != f && pg.face_degree(h) <= 4 {
            shared.entry(h).or_default().insert(i);
        }
    }
    shared.iter().all(|(&h, pos)| pg.face_degree(h) == 4 && *pos == allowed)
}

fn repeated_pair(walk: &[VertexId]) -> Option<(usize, usize)> {
    let mut found = None;
    for p in 0..walk.len() {
        for q in p + 1..walk.len() {
            if walk[p] == walk[q] {
                if found.is_some() {
                    return None;
                }
                found = Some((p, q));
            }
        }
    }
    found
}

/// An 8-face with a cut vertex incident to two 4⁻-faces: two 4-cycles through that vertex, no
/// adjacent 3-face, at most two adjacent 4-faces.
fn eight_face_ok(pg: &PlaneGraph, f: FaceId) -> bool {
    let walk = &pg.face(f).walk;
    let Some((p, q)) = repeated_pair(walk) else {
        return !has_cut_vertex_with_two_small(pg, f);
    };
    let x = walk[p];
    let small_at_x: BTreeSet<FaceId> = pg.angle_faces(x).into_iter().filter(|&h| pg.face_degree(h) <= 4).collect();
    if small_at_x.len() < 2 {
        return true;
    }
    if q - p != 4 {
        return false;
    }
    let adj = pg.adjacent_faces(f);
    let threes = adj.keys().filter(|&&h| pg.face_degree(h) == 3).count();
    let fours = adj.keys().filter(|&&h| pg.face_degree(h) == 4).count();
    threes == 0 && fours <= 2
}

fn has_cut_vertex_with_two_small(pg: &PlaneGraph, f: FaceId) -> bool {
    let walk = &pg.face(f).walk;
    let mut counts = std::collections::BTreeMap::new();
    for &v in walk {
        *counts.entry(v).or_insert(0) += 1;
    }
    counts.iter().any(|(&v, &c)| {
        c > 1 && pg.angle_faces(v).into_iter().filter(|&h| pg.face_degree(h) <= 4).collect::<BTreeSet<_>>().len() >= 2
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureVerdict {
    TwoMinusVertex(VertexId),
    Configuration(ConfigMatch),
}

/// A vertex of degree at most two (least id), or else the first configuration match.
pub fn structure_theorem_check(pg: &PlaneGraph) -> Result<StructureVerdict, StructureError> {
    if !check_class(pg).in_class {
        return Err(StructureError::NotInClass);
    }
    let g = pg.graph();
    if let Some(v) = g.vertices().find(|&v| g.degree(v) <= 2) {
        return Ok(StructureVerdict::TwoMinusVertex(v));
    }
    find_configurations(g)
        .into_iter()
        .next()
        .map(StructureVerdict::Configuration)
        .ok_or(StructureError::NoReducibleStructure)
}
