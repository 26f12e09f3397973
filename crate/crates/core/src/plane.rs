//! Plane embeddings given by clockwise rotation systems, and their faces.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

pub type FaceId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("rotation has {0} entries but the graph has {1} vertices")]
    WrongLength(usize, usize),
    #[error("rotation at vertex {0} does not list each neighbour exactly once")]
    Inconsistent(VertexId),
    #[error("rotation is not planar: component containing {0} has genus {1}")]
    NotPlanar(VertexId, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Boundary walk of a face. Entry `i` is followed by entry `i + 1` (cyclically).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacialWalk {
    pub walk: Vec<VertexId>,
}

impl FacialWalk {
    /// d(f): number of edge traversals.
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    pub fn at(&self, i: usize) -> VertexId {
        self.walk[i % self.walk.len()]
    }

    /// Edge at position `i`: `walk[i] -> walk[i+1]`.
    pub fn dart(&self, i: usize) -> (VertexId, VertexId) {
        (self.at(i), self.at(i + 1))
    }

    pub fn is_simple(&self) -> bool {
        let mut seen: Vec<VertexId> = self.walk.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.walk.len()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<VertexId>>,
    faces: Vec<FacialWalk>,
    #[serde(skip)]
    dart_face: Vec<Vec<FaceId>>,
    #[serde(skip)]
    dart_pos: Vec<Vec<usize>>,
}

impl PlaneGraph {
    /// Traces faces of a clockwise rotation system. `rotation[v]` lists the neighbours of `v`.
    pub fn from_rotation(rotation: Vec<Vec<VertexId>>) -> Result<Self, EmbeddingError> {
        let n = rotation.len();
        let mut edges = Vec::new();
        for (v, list) in rotation.iter().enumerate() {
            for &w in list {
                if w >= n {
                    return Err(EmbeddingError::Inconsistent(v));
                }
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let graph = Graph::from_edges(n, &edges)?;
        for (v, list) in rotation.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(EmbeddingError::Inconsistent(v));
            }
        }
        Self::trace(graph, rotation)
    }

    /// Checks a rotation against a given graph, then traces faces.
    pub fn new(graph: &Graph, rotation: Vec<Vec<VertexId>>) -> Result<Self, EmbeddingError> {
        if rotation.len() != graph.n() {
            return Err(EmbeddingError::WrongLength(rotation.len(), graph.n()));
        }
        for (v, list) in rotation.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(EmbeddingError::Inconsistent(v));
            }
        }
        Self::trace(graph.clone(), rotation)
    }

    /// Straight-line drawing: neighbours are ordered clockwise by angle.
    pub fn from_coordinates(
        points: &[(f64, f64)],
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self, EmbeddingError> {
        let graph = Graph::from_edges(points.len(), edges)?;
        let rotation = graph
            .vertices()
            .map(|v| {
                let (x, y) = points[v];
                let mut nb: Vec<(f64, VertexId)> = graph
                    .neighbors(v)
                    .iter()
                    .map(|&w| ((points[w].1 - y).atan2(points[w].0 - x), w))
                    .collect();
                nb.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
                nb.into_iter().map(|(_, w)| w).collect()
            })
            .collect();
        Self::new(&graph, rotation)
    }

    fn trace(graph: Graph, rotation: Vec<Vec<VertexId>>) -> Result<Self, EmbeddingError> {
        let n = graph.n();
        // index of w in rotation[v]
        let pos_in: Vec<BTreeMap<VertexId, usize>> = rotation
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        let mut dart_face: Vec<Vec<FaceId>> =
            rotation.iter().map(|l| vec![usize::MAX; l.len()]).collect();
        let mut dart_pos: Vec<Vec<usize>> = rotation.iter().map(|l| vec![0; l.len()]).collect();
        let mut faces = Vec::new();
        for v in 0..n {
            if rotation[v].is_empty() {
                faces.push(FacialWalk { walk: vec![v] });
                continue;
            }
            for i in 0..rotation[v].len() {
                if dart_face[v][i] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let (mut a, mut ai) = (v, i);
                while dart_face[a][ai] == usize::MAX {
                    dart_face[a][ai] = id;
                    dart_pos[a][ai] = walk.len();
                    walk.push(a);
                    let b = rotation[a][ai];
                    let back = pos_in[b][&a];
                    let next = (back + 1) % rotation[b].len();
                    a = b;
                    ai = next;
                }
                faces.push(FacialWalk { walk });
            }
        }
        let pg = PlaneGraph { graph, rotation, faces, dart_face, dart_pos };
        pg.check_euler()?;
        Ok(pg)
    }

    fn check_euler(&self) -> Result<(), EmbeddingError> {
        for comp in self.graph.components() {
            let v = comp.len();
            let e: usize = comp.iter().map(|&x| self.graph.degree(x)).sum::<usize>() / 2;
            let mut fs: Vec<FaceId> = comp
                .iter()
                .flat_map(|&x| self.incident_faces(x))
                .collect();
            fs.sort_unstable();
            fs.dedup();
            let chi = v as isize - e as isize + fs.len() as isize;
            if chi != 2 {
                let genus = ((2 - chi) / 2).max(0) as usize;
                return Err(EmbeddingError::NotPlanar(comp[0], genus));
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<VertexId>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[FacialWalk] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &FacialWalk {
        &self.faces[f]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        if self.faces[f].walk.len() == 1 && self.graph.degree(self.faces[f].walk[0]) == 0 {
            0
        } else {
            self.faces[f].walk.len()
        }
    }

    fn rot_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.rotation.get(u)?.iter().position(|&w| w == v)
    }

    /// Face to the side of the directed edge `u -> v`.
    pub fn face_of_dart(&self, u: VertexId, v: VertexId) -> Option<FaceId> {
        self.rot_index(u, v).map(|i| self.dart_face[u][i])
    }

    /// Position of the dart `u -> v` in the walk of its face.
    pub fn dart_position(&self, u: VertexId, v: VertexId) -> Option<(FaceId, usize)> {
        self.rot_index(u, v).map(|i| (self.dart_face[u][i], self.dart_pos[u][i]))
    }

    /// The faces on the two sides of edge `uv` (equal for a bridge).
    pub fn edge_faces(&self, u: VertexId, v: VertexId) -> Option<(FaceId, FaceId)> {
        Some((self.face_of_dart(u, v)?, self.face_of_dart(v, u)?))
    }

    /// Faces at the angles of `v`, in clockwise order; angle `j` lies between
    /// `rotation[v][j-1]` and `rotation[v][j]` and belongs to the face of dart `v -> rotation[v][j]`.
    pub fn angle_faces(&self, v: VertexId) -> Vec<FaceId> {
        if self.rotation[v].is_empty() {
            return vec![self.isolated_face(v)];
        }
        self.dart_face[v].clone()
    }

    fn isolated_face(&self, v: VertexId) -> FaceId {
        self.faces
            .iter()
            .position(|f| f.walk == [v] && self.graph.degree(v) == 0)
            .unwrap()
    }

    /// Distinct faces incident with `v`.
    pub fn incident_faces(&self, v: VertexId) -> Vec<FaceId> {
        let mut fs = self.angle_faces(v);
        fs.sort_unstable();
        fs.dedup();
        fs
    }

    /// Face on the other side of the edge at walk position `i` of face `f`.
    pub fn across(&self, f: FaceId, i: usize) -> FaceId {
        let (a, b) = self.faces[f].dart(i);
        self.face_of_dart(b, a).unwrap()
    }

    /// Faces sharing at least one edge with `f` (excluding `f`), with the number of shared edges.
    pub fn adjacent_faces(&self, f: FaceId) -> BTreeMap<FaceId, usize> {
        let mut out = BTreeMap::new();
        if self.face_degree(f) == 0 {
            return out;
        }
        for i in 0..self.faces[f].len() {
            let g = self.across(f, i);
            if g != f {
                *out.entry(g).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_rotation(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect()
    }

    #[test]
    fn cycle_faces() {
        let pg = PlaneGraph::from_rotation(cycle_rotation(8)).unwrap();
        assert_eq!(pg.face_count(), 2);
        assert!(pg.faces().iter().all(|f| f.len() == 8));
        let k3 = PlaneGraph::from_rotation(cycle_rotation(3)).unwrap();
        assert_eq!(k3.face_count(), 2);
    }

    #[test]
    fn cube_faces() {
        let pts = [
            (0.0, 0.0),
            (3.0, 0.0),
            (3.0, 3.0),
            (0.0, 3.0),
            (1.0, 1.0),
            (2.0, 1.0),
            (2.0, 2.0),
            (1.0, 2.0),
        ];
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 0),
            (4, 5), (5, 6), (6, 7), (7, 4),
            (0, 4), (1, 5), (2, 6), (3, 7),
        ];
        let pg = PlaneGraph::from_coordinates(&pts, &edges).unwrap();
        assert_eq!(pg.face_count(), 6);
        assert!(pg.faces().iter().all(|f| f.len() == 4));
        assert_eq!(pg.faces().iter().map(|f| f.len()).sum::<usize>(), 24);
    }

    #[test]
    fn tree_has_one_face() {
        let rot = vec![vec![1, 2, 3], vec![0], vec![0], vec![0]];
        let pg = PlaneGraph::from_rotation(rot).unwrap();
        assert_eq!(pg.face_count(), 1);
        assert_eq!(pg.face(0).len(), 6);
    }

    #[test]
    fn rejects_nonplanar_rotation() {
        // K4 with a rotation of genus one
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(matches!(PlaneGraph::from_rotation(rot), Err(EmbeddingError::NotPlanar(..))));
    }

    #[test]
    fn rejects_asymmetric_rotation() {
        let rot = vec![vec![1], vec![]];
        assert!(PlaneGraph::from_rotation(rot).is_err());
    }
}
