//! Named plane graphs used by tests and examples, and a builder for rotation systems.

use std::collections::BTreeMap;

use crate::graph::{Graph, VertexId};
use crate::plane::{FaceId, PlaneGraph};
use crate::structure::ConfigKind;

/// Grows a plane graph by operations that keep the rotation system planar.
#[derive(Clone, Debug, Default)]
pub struct EmbedBuilder {
    rot: Vec<Vec<VertexId>>,
}

impl EmbedBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.rot.push(Vec::new());
        self.rot.len() - 1
    }

    /// A new cycle on `k ≥ 3` fresh vertices, in its own component.
    pub fn cycle(&mut self, k: usize) -> Vec<VertexId> {
        let vs: Vec<VertexId> = (0..k).map(|_| self.add_vertex()).collect();
        for i in 0..k {
            self.rot[vs[i]] = vec![vs[(i + 1) % k], vs[(i + k - 1) % k]];
        }
        vs
    }

    pub fn plane(&self) -> PlaneGraph {
        PlaneGraph::from_rotation(self.rot.clone()).expect("builder keeps the embedding planar")
    }

    /// Face to the side of dart `u -> v`.
    pub fn face_of_dart(&self, u: VertexId, v: VertexId) -> FaceId {
        self.plane().face_of_dart(u, v).expect("dart exists")
    }

    /// The only face whose walk contains all of `vs`.
    pub fn unique_face_with(&self, vs: &[VertexId]) -> FaceId {
        let pg = self.plane();
        let hits: Vec<FaceId> = (0..pg.face_count())
            .filter(|&f| vs.iter().all(|v| pg.face(f).walk.contains(v)))
            .collect();
        assert_eq!(hits.len(), 1, "faces containing {vs:?}: {hits:?}");
        hits[0]
    }

    fn angle_in(&self, pg: &PlaneGraph, v: VertexId, f: FaceId) -> usize {
        if self.rot[v].is_empty() {
            return 0;
        }
        (0..self.rot[v].len())
            .find(|&j| pg.face_of_dart(v, self.rot[v][j]) == Some(f))
            .unwrap_or_else(|| panic!("vertex {v} is not on face {f}"))
    }

    /// Adds a path from `a` to `b` through `k` new vertices, drawn inside face `f`.
    /// With `a == b` this attaches a cycle of length `k + 1` at `a`.
    pub fn ear(&mut self, f: FaceId, a: VertexId, b: VertexId, k: usize) -> Vec<VertexId> {
        let pg = self.plane();
        let ja = self.angle_in(&pg, a, f);
        let jb = self.angle_in(&pg, b, f);
        let inner: Vec<VertexId> = (0..k).map(|_| self.add_vertex()).collect();
        let mut path = vec![a];
        path.extend(&inner);
        path.push(b);
        for i in 1..=k {
            self.rot[path[i]] = vec![path[i + 1], path[i - 1]];
        }
        let (first, last) = (path[1], path[k]);
        if a == b {
            self.rot[a].insert(ja, last);
            self.rot[a].insert(ja, first);
        } else {
            self.rot[a].insert(ja, first);
            self.rot[b].insert(jb, last);
        }
        inner
    }

    /// A new leaf at `v`, placed in face `f`.
    pub fn leaf_in(&mut self, f: FaceId, v: VertexId) -> VertexId {
        let pg = self.plane();
        let j = self.angle_in(&pg, v, f);
        let x = self.add_vertex();
        self.rot[x] = vec![v];
        self.rot[v].insert(j, x);
        x
    }

    /// A new leaf at `v`, placed in the longest face at `v`.
    pub fn leaf(&mut self, v: VertexId) -> VertexId {
        let pg = self.plane();
        let f = pg.angle_faces(v).into_iter().max_by_key(|&f| (pg.face_degree(f), std::cmp::Reverse(f))).unwrap();
        self.leaf_in(f, v)
    }

    /// Leaves at `v` until it has degree `d`.
    pub fn fill_to(&mut self, v: VertexId, d: usize) {
        while self.rot[v].len() < d {
            self.leaf(v);
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rot[v].len()
    }
}

/// A named test graph.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub pg: PlaneGraph,
}

/// A host built around one concrete configuration pattern.
#[derive(Clone, Debug)]
pub struct ConfigHost {
    pub kind: ConfigKind,
    pub semicircles: Vec<usize>,
    pub labels: BTreeMap<String, VertexId>,
    pub pg: PlaneGraph,
    builder: EmbedBuilder,
}

impl ConfigHost {
    pub fn name(&self) -> String {
        let s: Vec<String> = self.semicircles.iter().map(|l| l.to_string()).collect();
        if s.is_empty() {
            format!("host-{}", self.kind)
        } else {
            format!("host-{}-{}", self.kind, s.join(""))
        }
    }

    pub fn get(&self, label: &str) -> VertexId {
        self.labels[label]
    }

    /// The same host with one more leaf at the labelled vertex.
    pub fn perturbed(&self, label: &str) -> PlaneGraph {
        let mut b = self.builder.clone();
        b.leaf(self.labels[label]);
        b.plane()
    }
}

fn finish_host(
    kind: ConfigKind,
    semicircles: Vec<usize>,
    mut b: EmbedBuilder,
    labels: BTreeMap<String, VertexId>,
    degree: &BTreeMap<String, usize>,
) -> ConfigHost {
    for (l, &v) in &labels {
        b.fill_to(v, degree[l]);
    }
    ConfigHost { kind, semicircles, labels, pg: b.plane(), builder: b }
}

fn cycle_host(kind: ConfigKind, lens: &[usize]) -> ConfigHost {
    let pattern = crate::structure::patterns(kind)
        .into_iter()
        .find(|p| p.semicircles == lens)
        .expect("pattern with these semicircles");
    let mut b = EmbedBuilder::new();
    let x = b.cycle(8);
    let mut labels: BTreeMap<String, VertexId> =
        (0..8).map(|i| (format!("x{}", i + 1), x[i])).collect();
    let controlled: Vec<usize> = pattern
        .labels
        .iter()
        .filter_map(|l| l.strip_prefix('v').and_then(|s| s.parse().ok()))
        .collect();
    for (&i, &len) in controlled.iter().zip(lens) {
        let (a, c) = (x[i - 1], x[i % 8]);
        let f = b.face_of_dart(c, a);
        let inner = b.ear(f, a, c, len - 1);
        if len == 3 {
            labels.insert(format!("u{i}"), inner[0]);
        }
        labels.insert(format!("v{i}"), *inner.last().unwrap());
    }
    let degree = pattern.labels.iter().cloned().zip(pattern.degree.iter().copied()).collect();
    finish_host(kind, lens.to_vec(), b, labels, &degree)
}

fn special_host() -> ConfigHost {
    let pattern = &crate::structure::patterns(ConfigKind::C_SPECIAL)[0];
    let mut b = EmbedBuilder::new();
    let c = b.cycle(8);
    let mut labels = BTreeMap::new();
    labels.insert("v".to_string(), c[0]);
    for i in 1..8 {
        labels.insert(format!("v{i}"), c[i]);
    }
    let f = b.face_of_dart(c[1], c[0]);
    let us = b.ear(f, c[0], c[0], 7);
    for (i, &u) in us.iter().enumerate() {
        labels.insert(format!("u{}", i + 1), u);
    }
    let f = b.face_of_dart(c[5], c[6]);
    let w1 = b.ear(f, c[5], c[6], 1);
    labels.insert("w1".into(), w1[0]);
    let f = b.face_of_dart(us[4], us[5]);
    let w2 = b.ear(f, us[4], us[5], 1);
    labels.insert("w2".into(), w2[0]);
    let degree = pattern.labels.iter().cloned().zip(pattern.degree.iter().copied()).collect();
    finish_host(ConfigKind::C_SPECIAL, Vec::new(), b, labels, &degree)
}

fn f3f4_host(extra: Option<usize>) -> ConfigHost {
    let kind = if extra.is_some() { ConfigKind::C_F3F4B } else { ConfigKind::C_F3F4A };
    let pattern = crate::structure::patterns(kind)
        .into_iter()
        .find(|p| p.semicircles == extra.into_iter().collect::<Vec<_>>())
        .unwrap();
    let mut b = EmbedBuilder::new();
    // v u u1 .. u6
    let left = b.cycle(8);
    let mut labels = BTreeMap::new();
    labels.insert("v".to_string(), left[0]);
    labels.insert("u".to_string(), left[1]);
    for i in 1..=6 {
        labels.insert(format!("u{i}"), left[i + 1]);
    }
    let f = b.face_of_dart(left[1], left[0]);
    let right = b.ear(f, left[1], left[0], 6);
    // u v6 v5 .. v1 v
    for (j, &r) in right.iter().enumerate() {
        labels.insert(format!("v{}", 6 - j), r);
    }
    let l = |s: &str| labels[s];
    let f = b.unique_face_with(&[l("u1"), l("v6")]);
    b.ear(f, l("u1"), l("v6"), 0);
    let f = b.face_of_dart(l("v2"), l("v3"));
    let w1 = b.ear(f, l("v2"), l("v3"), 1);
    let f = b.face_of_dart(l("v5"), l("v4"));
    let w32 = b.ear(f, l("v5"), l("v4"), 2);
    let mut extra_labels = vec![("w1", w1[0]), ("w3", w32[0]), ("w2", w32[1])];
    if let Some(len) = extra {
        let f = b.face_of_dart(l("u2"), l("u3"));
        let ws = b.ear(f, l("u2"), l("u3"), len - 1);
        if len == 3 {
            extra_labels.push(("w4", ws[0]));
        }
        extra_labels.push(("w5", *ws.last().unwrap()));
    }
    for (k, v) in extra_labels {
        labels.insert(k.to_string(), v);
    }
    let degree = pattern.labels.iter().cloned().zip(pattern.degree.iter().copied()).collect();
    finish_host(kind, extra.into_iter().collect(), b, labels, &degree)
}

/// One host per concrete pattern (every choice of semicircle lengths).
pub fn config_hosts() -> Vec<ConfigHost> {
    let mut out = Vec::new();
    for kind in ConfigKind::ALL {
        match kind {
            ConfigKind::C_SPECIAL => out.push(special_host()),
            ConfigKind::C_F3F4A => out.push(f3f4_host(None)),
            ConfigKind::C_F3F4B => {
                out.push(f3f4_host(Some(2)));
                out.push(f3f4_host(Some(3)));
            }
            _ => {
                for p in crate::structure::patterns(kind) {
                    out.push(cycle_host(kind, &p.semicircles));
                }
            }
        }
    }
    out
}

/// Hosts that lie in the class (triangles far enough apart).
pub fn in_class_config_hosts() -> Vec<ConfigHost> {
    config_hosts()
        .into_iter()
        .filter(|h| crate::class::check_class(&h.pg).in_class)
        .collect()
}

pub fn cycle(k: usize) -> PlaneGraph {
    let mut b = EmbedBuilder::new();
    b.cycle(k);
    b.plane()
}

/// Path on `k` vertices.
pub fn path(k: usize) -> PlaneGraph {
    let rot = (0..k)
        .map(|i| {
            let mut r = Vec::new();
            if i > 0 {
                r.push(i - 1);
            }
            if i + 1 < k {
                r.push(i + 1);
            }
            r
        })
        .collect();
    PlaneGraph::from_rotation(rot).unwrap()
}

/// Star with `k` leaves.
pub fn star(k: usize) -> PlaneGraph {
    let mut rot = vec![(1..=k).collect::<Vec<_>>()];
    rot.extend((0..k).map(|_| vec![0]));
    PlaneGraph::from_rotation(rot).unwrap()
}

pub fn k4() -> PlaneGraph {
    PlaneGraph::from_rotation(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).unwrap()
}

pub fn cube() -> PlaneGraph {
    let pts = [
        (-2.0, -2.0),
        (2.0, -2.0),
        (2.0, 2.0),
        (-2.0, 2.0),
        (-1.0, -1.0),
        (1.0, -1.0),
        (1.0, 1.0),
        (-1.0, 1.0),
    ];
    let edges = [
        (0, 1), (1, 2), (2, 3), (3, 0),
        (4, 5), (5, 6), (6, 7), (7, 4),
        (0, 4), (1, 5), (2, 6), (3, 7),
    ];
    PlaneGraph::from_coordinates(&pts, &edges).unwrap()
}

/// Labels of [`seven_face_host`] in vertex order.
pub const SEVEN_FACE_LABELS: [&str; 13] =
    ["x", "a", "b", "c", "w", "y", "z", "q", "p1", "p2", "p3", "p4", "p5"];

/// A 7-face made of the triangle `x y z` and the 4-cycle `x a b c`, sharing `xa` and `cx` with
/// the 4-face `x a w c`. `x` has degree 5 (a leaf `q` sits inside the triangle), and a long
/// path from `b` to `w` keeps the remaining faces large.
pub fn seven_face_host() -> PlaneGraph {
    let pts = [
        (0.0, 0.0),
        (-1.5, 0.0),
        (-1.5, -1.5),
        (0.0, -1.5),
        (0.75, 0.75),
        (-0.866, -0.5),
        (-0.5, -0.866),
        (-0.455, -0.455),
        (-0.75, -2.5),
        (1.0, -2.5),
        (2.0, -1.0),
        (2.0, 0.5),
        (1.5, 1.2),
    ];
    let edges = [
        (0, 1), (1, 2), (2, 3), (3, 0),
        (1, 4), (4, 3),
        (0, 5), (5, 6), (6, 0), (0, 7),
        (2, 8), (8, 9), (9, 10), (10, 11), (11, 12), (12, 4),
    ];
    PlaneGraph::from_coordinates(&pts, &edges).unwrap()
}

/// A triangle `p s t` with two leaves at `p` and one at each of `s`, `t`: a (3,3,4)-face.
pub fn triangle_with_pendants() -> PlaneGraph {
    let mut b = EmbedBuilder::new();
    let t = b.cycle(3);
    b.fill_to(t[0], 4);
    b.fill_to(t[1], 3);
    b.fill_to(t[2], 3);
    b.plane()
}

/// An 8-face `v1..v8` with a triangle on `v1v2` (apex N), a 4-face on `v3v4`, a triangle on
/// `v5v6` and a 4-face `v7 E2 E1 v8`. Returns the graph and the index of the 8-face.
fn special_frame(type_one: bool) -> (PlaneGraph, FaceId) {
    let mut b = EmbedBuilder::new();
    let v = b.cycle(8);
    let out = |b: &EmbedBuilder, i: usize, j: usize| b.face_of_dart(v[j], v[i]);
    let f = out(&b, 0, 1);
    let n = b.ear(f, v[0], v[1], 1);
    let f = out(&b, 2, 3);
    let w = b.ear(f, v[2], v[3], 2);
    let f = out(&b, 4, 5);
    let s = b.ear(f, v[4], v[5], 1);
    let f = out(&b, 6, 7);
    let e = b.ear(f, v[6], v[7], 2);
    let (e2, e1) = (e[0], e[1]);
    let mut want: Vec<(VertexId, usize)> = vec![
        (n[0], 3), (w[0], 3), (w[1], 3), (s[0], 3), (e1, 3), (e2, 3),
    ];
    if type_one {
        want.push((v[6], 4));
        want.push((e1, 4));
    } else {
        want.push((v[0], 4));
        want.push((n[0], 4));
    }
    for (x, d) in want {
        b.fill_to(x, d);
    }
    let pg = b.plane();
    let face = pg.face_of_dart(v[0], v[1]).unwrap();
    (pg, face)
}

/// Special 8-face whose non-light neighbour is a 4-face through the 4-vertex.
pub fn special_type_one() -> (PlaneGraph, FaceId) {
    special_frame(true)
}

/// Special 8-face whose non-light neighbour is a 3-face through the 4-vertex.
pub fn special_type_two() -> (PlaneGraph, FaceId) {
    special_frame(false)
}

/// The truncated rhombic dodecahedron: cubic, 48 vertices, faces of size 3, 4 and 8.
pub fn truncated_rhombic_dodecahedron() -> PlaneGraph {
    // rhombic dodecahedron: cube corners (degree 3) and octahedron tips (degree 4)
    let mut pts: Vec<[f64; 3]> = Vec::new();
    for s in 0..8 {
        pts.push([
            if s & 1 == 0 { 1.0 } else { -1.0 },
            if s & 2 == 0 { 1.0 } else { -1.0 },
            if s & 4 == 0 { 1.0 } else { -1.0 },
        ]);
    }
    for axis in 0..3 {
        for sign in [2.0, -2.0] {
            let mut p = [0.0; 3];
            p[axis] = sign;
            pts.push(p);
        }
    }
    let n = pts.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for c in 0..8 {
        for t in 8..n {
            let d: f64 = (0..3).map(|k| (pts[c][k] - pts[t][k]).powi(2)).sum();
            if (d - 3.0).abs() < 1e-9 {
                adj[c].push(t);
                adj[t].push(c);
            }
        }
    }
    // clockwise order seen from outside: sort by angle in the tangent plane
    let rot: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let p = pts[v];
            let len = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            let nrm = [p[0] / len, p[1] / len, p[2] / len];
            let helper = if nrm[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
            let e1 = normalize(cross(helper, nrm));
            let e2 = cross(nrm, e1);
            let mut nb: Vec<(f64, usize)> = adj[v]
                .iter()
                .map(|&w| {
                    let d = [pts[w][0] - p[0], pts[w][1] - p[1], pts[w][2] - p[2]];
                    (dot(d, e2).atan2(dot(d, e1)), w)
                })
                .collect();
            nb.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
            nb.into_iter().map(|(_, w)| w).collect()
        })
        .collect();
    let base = PlaneGraph::from_rotation(rot.clone()).expect("convex polyhedron");
    truncate(&base)
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn normalize(a: [f64; 3]) -> [f64; 3] {
    let l = dot(a, a).sqrt();
    [a[0] / l, a[1] / l, a[2] / l]
}

/// Replaces every vertex of degree `d` by a `d`-cycle, one new vertex per dart.
pub fn truncate(pg: &PlaneGraph) -> PlaneGraph {
    let rot = pg.rotation();
    let mut id = BTreeMap::new();
    for (v, list) in rot.iter().enumerate() {
        for &w in list {
            let k = id.len();
            id.insert((v, w), k);
        }
    }
    let mut out = vec![Vec::new(); id.len()];
    for (v, list) in rot.iter().enumerate() {
        let d = list.len();
        for j in 0..d {
            let me = id[&(v, list[j])];
            out[me] = vec![id[&(list[j], v)], id[&(v, list[(j + 1) % d])], id[&(v, list[(j + d - 1) % d])]];
        }
    }
    PlaneGraph::from_rotation(out).expect("truncation of a plane graph")
}

/// Adjacency code of `g` under the vertex order `order`: bit `k` set iff the `k`-th pair
/// `(i, j)`, `i < j`, in column order is an edge.
fn code_under(g: &Graph, order: &[VertexId]) -> u64 {
    let mut code = 0u64;
    let mut k = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << k;
            }
            k += 1;
        }
    }
    code
}

/// Least code over the orders that list vertices by nondecreasing degree.
fn canonical_code(g: &Graph) -> u64 {
    fn go(g: &Graph, degs: &[usize], order: &mut Vec<VertexId>, used: &mut [bool], best: &mut u64) {
        if order.len() == g.n() {
            *best = (*best).min(code_under(g, order));
            return;
        }
        let want = degs[order.len()];
        for v in g.vertices() {
            if !used[v] && g.degree(v) == want {
                used[v] = true;
                order.push(v);
                go(g, degs, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    let mut degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    let mut best = u64::MAX;
    go(g, &degs, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
    best
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("code graph")
}

/// One graph per isomorphism class on exactly `n` vertices (`n <= 8`).
pub fn small_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "small_graphs is exhaustive; n = {n} is too large");
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut codes = std::collections::BTreeSet::new();
    for h in small_graphs(n - 1) {
        let base = h.edges();
        for mask in 0u32..1 << (n - 1) {
            let mut edges = base.clone();
            edges.extend((0..n - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, n - 1)));
            codes.insert(canonical_code(&Graph::from_edges(n, &edges).expect("extension")));
        }
    }
    codes.into_iter().map(|c| from_code(n, c)).collect()
}

/// The named fixture set (connected graphs only).
pub fn fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    let mut add = |name: &str, pg: PlaneGraph| out.push(Fixture { name: name.to_string(), pg });
    add("k3", cycle(3));
    add("c4", cycle(4));
    add("c8", cycle(8));
    add("c9", cycle(9));
    add("p1", path(1));
    add("p3", path(3));
    add("p6", path(6));
    add("star5", star(5));
    add("k4", k4());
    add("cube", cube());
    add("seven-face", seven_face_host());
    add("triangle-pendants", triangle_with_pendants());
    add("special-type-one", special_type_one().0);
    add("special-type-two", special_type_two().0);
    add("truncated-rhombic-dodecahedron", truncated_rhombic_dodecahedron());
    for h in config_hosts() {
        add(&h.name(), h.pg.clone());
    }
    out
}

/// Fixtures that lie in the class.
pub fn in_class_fixtures() -> Vec<Fixture> {
    fixtures().into_iter().filter(|f| crate::class::check_class(&f.pg).in_class).collect()
}

/// Random in-class plane graphs grown from a cycle or a single vertex by leaves, attached
/// cycles and ears, keeping only steps that stay in the class.
pub fn random_in_class<R: rand::Rng>(rng: &mut R, target: usize) -> PlaneGraph {
    use crate::class::check_class;
    let mut b = EmbedBuilder::new();
    if rng.gen_bool(0.5) {
        let k = [3, 4, 8, 9][rng.gen_range(0..4)];
        b.cycle(k);
    } else {
        b.add_vertex();
    }
    let mut tries = 0;
    while b.n() < target && tries < 200 {
        tries += 1;
        let mut next = b.clone();
        let pg = next.plane();
        let v = rng.gen_range(0..next.n());
        match rng.gen_range(0..4) {
            0 => {
                let fs = pg.angle_faces(v);
                let f = fs[rng.gen_range(0..fs.len())];
                next.leaf_in(f, v);
            }
            1 => {
                let k = [2, 3, 7, 8][rng.gen_range(0..4)];
                if next.n() + k > target + 2 {
                    continue;
                }
                let fs = pg.angle_faces(v);
                let f = fs[rng.gen_range(0..fs.len())];
                next.ear(f, v, v, k);
            }
            _ => {
                let f = rng.gen_range(0..pg.face_count());
                let walk = &pg.face(f).walk;
                if walk.len() < 2 {
                    continue;
                }
                let (i, j) = (rng.gen_range(0..walk.len()), rng.gen_range(0..walk.len()));
                let (a, c) = (walk[i], walk[j]);
                let k = rng.gen_range(0..4);
                if a == c || pg.graph().has_edge(a, c) && k == 0 || next.n() + k > target + 2 {
                    continue;
                }
                next.ear(f, a, c, k);
            }
        }
        if check_class(&next.plane()).in_class {
            b = next;
        }
    }
    b.plane()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graph_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| small_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }
}
