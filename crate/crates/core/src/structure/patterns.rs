//! The ten degree-restricted configurations.
//!
//! Eight-cycle kinds use labels `x1..x8` on the cycle. A controlled face on `x_i x_{i+1}` is
//! either the 4-face `x_i u_i v_i x_{i+1}` or the 3-face `x_i v_i x_{i+1}`.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[allow(non_camel_case_types)]
pub enum ConfigKind {
    CA,
    CB,
    CC,
    CD,
    CE,
    CF,
    CG,
    C_SPECIAL,
    C_F3F4A,
    C_F3F4B,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 10] = [
        ConfigKind::CA,
        ConfigKind::CB,
        ConfigKind::CC,
        ConfigKind::CD,
        ConfigKind::CE,
        ConfigKind::CF,
        ConfigKind::CG,
        ConfigKind::C_SPECIAL,
        ConfigKind::C_F3F4A,
        ConfigKind::C_F3F4B,
    ];

    /// (controlled edge indices i for x_i x_{i+1}, cycle vertices of degree 4) for the cycle kinds.
    fn cycle_data(self) -> Option<(&'static [usize], &'static [usize])> {
        use ConfigKind::*;
        Some(match self {
            CA => (&[1], &[]),
            CB => (&[1, 4], &[4]),
            CC => (&[1, 5], &[5]),
            CD => (&[1, 2, 5], &[2, 5]),
            CE => (&[1, 4, 7], &[4, 7]),
            CF => (&[1, 4, 5], &[4, 5]),
            CG => (&[1, 3], &[3]),
            _ => return None,
        })
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One concrete pattern graph: a kind with a choice of semicircle lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub kind: ConfigKind,
    /// Path length (2 or 3) of each attached controlled face.
    pub semicircles: Vec<usize>,
    pub labels: Vec<String>,
    /// Exact degree required in the host graph.
    pub degree: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    adj: Vec<Vec<bool>>,
}

impl Pattern {
    fn build(
        kind: ConfigKind,
        semicircles: Vec<usize>,
        labels: Vec<String>,
        degree: Vec<usize>,
        edges: Vec<(usize, usize)>,
    ) -> Pattern {
        let n = labels.len();
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in &edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        let p = Pattern { kind, semicircles, labels, degree, edges, adj };
        debug_assert!((0..n).all(|v| p.inner_degree(v) <= p.degree[v]));
        p
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn inner_degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&x| x).count()
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

struct Builder {
    labels: Vec<String>,
    degree: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { labels: Vec::new(), degree: Vec::new(), edges: Vec::new() }
    }

    fn vertex(&mut self, label: &str, degree: usize) -> usize {
        self.labels.push(label.to_string());
        self.degree.push(degree);
        self.labels.len() - 1
    }

    fn id(&self, label: &str) -> usize {
        self.labels.iter().position(|l| l == label).unwrap()
    }

    fn path(&mut self, labels: &[&str]) {
        for w in labels.windows(2) {
            let e = (self.id(w[0]), self.id(w[1]));
            self.edges.push(e);
        }
    }

    fn finish(self, kind: ConfigKind, semicircles: Vec<usize>) -> Pattern {
        Pattern::build(kind, semicircles, self.labels, self.degree, self.edges)
    }
}

fn cycle_pattern(kind: ConfigKind, controlled: &[usize], square: &[usize], lens: &[usize]) -> Pattern {
    let mut b = Builder::new();
    for i in 1..=8 {
        b.vertex(&format!("x{i}"), if square.contains(&i) { 4 } else { 3 });
    }
    let cyc: Vec<String> = (1..=8).chain([1]).map(|i| format!("x{i}")).collect();
    b.path(&cyc.iter().map(String::as_str).collect::<Vec<_>>());
    for (&i, &len) in controlled.iter().zip(lens) {
        let (xi, xj) = (format!("x{i}"), format!("x{}", i % 8 + 1));
        let v = format!("v{i}");
        if len == 3 {
            let u = format!("u{i}");
            b.vertex(&u, 3);
            b.vertex(&v, 3);
            b.path(&[&xi, &u, &v, &xj]);
        } else {
            b.vertex(&v, 3);
            b.path(&[&xi, &v, &xj]);
        }
    }
    b.finish(kind, lens.to_vec())
}

fn special_pattern() -> Pattern {
    let mut b = Builder::new();
    for i in 1..=7 {
        b.vertex(&format!("v{i}"), 3);
    }
    b.vertex("v", 4);
    for i in 1..=7 {
        b.vertex(&format!("u{i}"), 3);
    }
    b.vertex("w1", 3);
    b.vertex("w2", 3);
    b.path(&["v", "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v"]);
    b.path(&["v", "u1", "u2", "u3", "u4", "u5", "u6", "u7", "v"]);
    b.path(&["v5", "w1", "v6"]);
    b.path(&["u5", "w2", "u6"]);
    b.finish(ConfigKind::C_SPECIAL, Vec::new())
}

fn f3f4_pattern(extra: Option<usize>) -> Pattern {
    let kind = if extra.is_some() { ConfigKind::C_F3F4B } else { ConfigKind::C_F3F4A };
    let mut b = Builder::new();
    b.vertex("u", 3);
    b.vertex("v", 4);
    for i in 1..=6 {
        let d = if i == 3 && extra.is_some() { 4 } else { 3 };
        b.vertex(&format!("u{i}"), d);
    }
    for i in 1..=6 {
        b.vertex(&format!("v{i}"), 3);
    }
    for w in ["w1", "w2", "w3"] {
        b.vertex(w, 3);
    }
    b.path(&["v", "u", "u1", "u2", "u3", "u4", "u5", "u6", "v"]);
    b.path(&["u", "v6", "v5", "v4", "v3", "v2", "v1", "v"]);
    b.path(&["u1", "v6"]);
    b.path(&["v2", "w1", "v3"]);
    b.path(&["v5", "w3", "w2", "v4"]);
    match extra {
        Some(3) => {
            b.vertex("w4", 3);
            b.vertex("w5", 3);
            b.path(&["u2", "w4", "w5", "u3"]);
        }
        Some(_) => {
            b.vertex("w5", 3);
            b.path(&["u2", "w5", "u3"]);
        }
        None => {}
    }
    b.finish(kind, extra.into_iter().collect())
}

/// Every concrete pattern of a kind (one per choice of semicircle lengths).
pub fn patterns(kind: ConfigKind) -> Vec<Pattern> {
    if let Some((controlled, square)) = kind.cycle_data() {
        let k = controlled.len();
        return (0..1usize << k)
            .map(|bits| {
                let lens: Vec<usize> = (0..k).map(|j| if bits >> (k - 1 - j) & 1 == 1 { 3 } else { 2 }).collect();
                cycle_pattern(kind, controlled, square, &lens)
            })
            .collect();
    }
    match kind {
        ConfigKind::C_SPECIAL => vec![special_pattern()],
        ConfigKind::C_F3F4A => vec![f3f4_pattern(None)],
        ConfigKind::C_F3F4B => vec![f3f4_pattern(Some(2)), f3f4_pattern(Some(3))],
        _ => unreachable!(),
    }
}

pub fn all_patterns() -> Vec<Pattern> {
    ConfigKind::ALL.iter().flat_map(|&k| patterns(k)).collect()
}
