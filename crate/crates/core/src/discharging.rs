//! Exact charge redistribution on plane graphs.
//!
//! Vertices start at `2d(v) - 6` and faces at `d(f) - 6`. Charges are kept as integer
//! twelfths, so every rule amount is exact.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::class::check_class;
use crate::graph::VertexId;
use crate::plane::{FaceId, PlaneGraph};
use crate::structure::{face_profile, find_configurations, is_special_8_face, Richness};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DischargeError {
    #[error("graph is not connected")]
    Disconnected,
}

/// A rational with denominator dividing 12, stored as a count of twelfths.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Charge(pub i64);

impl Charge {
    pub const ZERO: Charge = Charge(0);

    pub fn int(n: i64) -> Charge {
        Charge(12 * n)
    }

    /// `num/den`; panics unless `den` divides 12.
    pub fn frac(num: i64, den: i64) -> Charge {
        assert!(den > 0 && 12 % den == 0, "denominator {den} does not divide 12");
        Charge(num * (12 / den))
    }

    pub fn twelfths(self) -> i64 {
        self.0
    }

    /// Reduced numerator and denominator.
    pub fn parts(self) -> (i64, i64) {
        let g = gcd(self.0.abs(), 12).max(1);
        (self.0 / g, 12 / g)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parts() {
            (n, 1) => write!(f, "{n}"),
            (n, d) => write!(f, "{n}/{d}"),
        }
    }
}

impl Serialize for Charge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add for Charge {
    type Output = Charge;
    fn add(self, o: Charge) -> Charge {
        Charge(self.0 + o.0)
    }
}

impl Sub for Charge {
    type Output = Charge;
    fn sub(self, o: Charge) -> Charge {
        Charge(self.0 - o.0)
    }
}

impl Neg for Charge {
    type Output = Charge;
    fn neg(self) -> Charge {
        Charge(-self.0)
    }
}

impl AddAssign for Charge {
    fn add_assign(&mut self, o: Charge) {
        self.0 += o.0;
    }
}

impl SubAssign for Charge {
    fn sub_assign(&mut self, o: Charge) {
        self.0 -= o.0;
    }
}

impl std::iter::Sum for Charge {
    fn sum<I: Iterator<Item = Charge>>(it: I) -> Charge {
        it.fold(Charge::ZERO, Add::add)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "type", content = "id", rename_all = "lowercase")]
pub enum Element {
    Vertex(VertexId),
    Face(FaceId),
}

/// Rule identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    /// A 4⁺-vertex gives 1 to each 4⁻-face it lies on.
    R1,
    /// A 7⁺-face gives a 3- or 4-face across a shared edge, by the receiver's degree type.
    R2,
    /// A (3⁺,4⁺,4⁺,4⁺)-face gives 1/2 across each edge whose ends are both 4⁺.
    R2Send,
    R3a,
    R3b,
    R3c,
    /// A 5-vertex gives an 8-face 3/4 when semi-rich there, else 1/2.
    R4,
    /// A 6⁺-vertex gives 1 to each 8-face it lies on.
    R5,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
    pub rule: Rule,
    /// The shared edge for face-to-face transfers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<[VertexId; 2]>,
}

/// A rule case that matched syntactically but whose structural precondition failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anomaly {
    pub rule: Rule,
    pub at: Element,
    pub reason: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChargeState {
    pub vertex_charge: Vec<Charge>,
    pub face_charge: Vec<Charge>,
    pub transfers: Vec<Transfer>,
    pub anomalies: Vec<Anomaly>,
}

impl ChargeState {
    pub fn total(&self) -> Charge {
        self.vertex_charge.iter().chain(&self.face_charge).copied().sum()
    }

    pub fn get(&self, e: Element) -> Charge {
        match e {
            Element::Vertex(v) => self.vertex_charge[v],
            Element::Face(f) => self.face_charge[f],
        }
    }

    fn slot(&mut self, e: Element) -> &mut Charge {
        match e {
            Element::Vertex(v) => &mut self.vertex_charge[v],
            Element::Face(f) => &mut self.face_charge[f],
        }
    }
}

pub fn initial_charges(pg: &PlaneGraph) -> Result<ChargeState, DischargeError> {
    if !pg.is_connected() {
        return Err(DischargeError::Disconnected);
    }
    let g = pg.graph();
    Ok(ChargeState {
        vertex_charge: g.vertices().map(|v| Charge::int(2 * g.degree(v) as i64 - 6)).collect(),
        face_charge: (0..pg.face_count()).map(|f| Charge::int(pg.face_degree(f) as i64 - 6)).collect(),
        transfers: Vec::new(),
        anomalies: Vec::new(),
    })
}

fn edge_key(a: VertexId, b: VertexId) -> [VertexId; 2] {
    [a.min(b), a.max(b)]
}

/// What a 3- or 4-face receives per shared edge, by the degrees on its boundary.
fn r2_receive(pg: &PlaneGraph, f: FaceId) -> Option<Charge> {
    let g = pg.graph();
    let d = pg.face_degree(f);
    let degs: Vec<usize> = pg.face(f).walk.iter().map(|&v| g.degree(v)).collect();
    if degs.iter().any(|&x| x < 3) {
        return None;
    }
    let threes = degs.iter().filter(|&&x| x == 3).count();
    match (d, threes) {
        (3, 3) => Some(Charge::int(1)),
        (3, 2) => Some(Charge::frac(2, 3)),
        (3, 1) => Some(Charge::frac(1, 3)),
        (4, 4) => Some(Charge::frac(1, 2)),
        (4, 3) => Some(Charge::frac(1, 4)),
        _ => None,
    }
}

/// A 4-face with all degrees at least 3 and at most one 3-vertex.
fn r2_sender(pg: &PlaneGraph, f: FaceId) -> bool {
    let g = pg.graph();
    pg.face_degree(f) == 4
        && pg.face(f).walk.iter().all(|&v| g.degree(v) >= 3)
        && pg.face(f).walk.iter().filter(|&&v| g.degree(v) >= 4).count() >= 3
}

/// Applies every rule to the initial charges. Transfers are collected first and applied after.
pub fn apply_rules(pg: &PlaneGraph) -> Result<ChargeState, DischargeError> {
    let mut st = initial_charges(pg)?;
    let g = pg.graph();
    let nf = pg.face_count();
    let mut out: Vec<Transfer> = Vec::new();
    let mut anomalies = Vec::new();
    let special: Vec<bool> = (0..nf)
        .map(|f| pg.face_degree(f) == 8 && matches!(is_special_8_face(pg, f), Ok(Some(_))))
        .collect();
    let small = |f: FaceId| (1..=4).contains(&pg.face_degree(f));

    for f in (0..nf).filter(|&f| small(f)) {
        for &v in &pg.face(f).walk {
            if g.degree(v) >= 4 {
                out.push(Transfer {
                    from: Element::Vertex(v),
                    to: Element::Face(f),
                    amount: Charge::int(1),
                    rule: Rule::R1,
                    edge: None,
                });
            }
        }
    }

    for f in 0..nf {
        let d = pg.face_degree(f);
        if let Some(amount) = r2_receive(pg, f) {
            for i in 0..d {
                let (a, b) = pg.face(f).dart(i);
                let h = pg.across(f, i);
                if h == f {
                    continue;
                }
                if pg.face_degree(h) < 7 {
                    anomalies.push(Anomaly { rule: Rule::R2, at: Element::Face(f), reason: "sender not a 7+-face" });
                    continue;
                }
                out.push(Transfer {
                    from: Element::Face(h),
                    to: Element::Face(f),
                    amount,
                    rule: Rule::R2,
                    edge: Some(edge_key(a, b)),
                });
            }
        }
        if r2_sender(pg, f) {
            for i in 0..d {
                let (a, b) = pg.face(f).dart(i);
                if g.degree(a) < 4 || g.degree(b) < 4 {
                    continue;
                }
                let h = pg.across(f, i);
                if h == f {
                    continue;
                }
                if pg.face_degree(h) < 7 {
                    anomalies.push(Anomaly { rule: Rule::R2Send, at: Element::Face(f), reason: "receiver not a 7+-face" });
                    continue;
                }
                out.push(Transfer {
                    from: Element::Face(f),
                    to: Element::Face(h),
                    amount: Charge::frac(1, 2),
                    rule: Rule::R2Send,
                    edge: Some(edge_key(a, b)),
                });
            }
        }
    }

    for v in g.vertices().filter(|&v| g.degree(v) == 4) {
        let fs = pg.angle_faces(v);
        let smalls: Vec<usize> = (0..4).filter(|&j| small(fs[j])).collect();
        let mut send = |to: FaceId, amount: Charge, rule: Rule| {
            out.push(Transfer { from: Element::Vertex(v), to: Element::Face(to), amount, rule, edge: None })
        };
        match smalls.len() {
            0 => {
                for &f in &fs {
                    send(f, Charge::frac(1, 2), Rule::R3c);
                }
            }
            1 => {
                let s = smalls[0];
                let (f2, f3, f4) = (fs[(s + 1) % 4], fs[(s + 2) % 4], fs[(s + 3) % 4]);
                let half = Charge::frac(1, 2);
                let quarter = Charge::frac(1, 4);
                match (special[f2], special[f4]) {
                    (true, false) => {
                        send(f2, half, Rule::R3a);
                        send(f3, quarter, Rule::R3a);
                        send(f4, quarter, Rule::R3a);
                    }
                    (false, true) => {
                        send(f4, half, Rule::R3a);
                        send(f3, quarter, Rule::R3a);
                        send(f2, quarter, Rule::R3a);
                    }
                    (false, false) => {
                        send(f3, half, Rule::R3b);
                        send(f2, quarter, Rule::R3b);
                        send(f4, quarter, Rule::R3b);
                    }
                    (true, true) => anomalies.push(Anomaly {
                        rule: Rule::R3a,
                        at: Element::Vertex(v),
                        reason: "two special 8-faces at opposite angles",
                    }),
                }
            }
            _ => {}
        }
    }

    for f in (0..nf).filter(|&f| pg.face_degree(f) == 8) {
        let prof = face_profile(pg, f).expect("8-face");
        for (i, &v) in pg.face(f).walk.iter().enumerate() {
            let d = g.degree(v);
            if d == 5 {
                let amount = if prof.richness[i] == Richness::SemiRich { Charge::frac(3, 4) } else { Charge::frac(1, 2) };
                out.push(Transfer { from: Element::Vertex(v), to: Element::Face(f), amount, rule: Rule::R4, edge: None });
            } else if d >= 6 {
                out.push(Transfer {
                    from: Element::Vertex(v),
                    to: Element::Face(f),
                    amount: Charge::int(1),
                    rule: Rule::R5,
                    edge: None,
                });
            }
        }
    }

    for t in &out {
        *st.slot(t.from) -= t.amount;
        *st.slot(t.to) += t.amount;
    }
    st.transfers = out;
    st.anomalies = anomalies;
    Ok(st)
}

/// Sending bound on one maximal controlling path of a 7⁺-face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathCheck {
    pub face: FaceId,
    pub start: usize,
    pub len: usize,
    pub four_controlling: bool,
    pub sent: Charge,
    /// None when no bound applies (a path of length four or more that is not 4-controlling).
    pub bound: Option<Charge>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceBound {
    pub face: FaceId,
    pub degree: usize,
    pub s0: usize,
    pub t3_prime: usize,
    pub bound: Charge,
    pub final_charge: Charge,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DischargeReport {
    pub total_before: Charge,
    pub total_after: Charge,
    pub conserved: bool,
    pub negative: Vec<(Element, Charge)>,
    pub anomalies: Vec<Anomaly>,
    pub path_checks: Vec<PathCheck>,
    pub paths_ok: bool,
    pub face_bounds: Vec<FaceBound>,
    /// In the class with minimum degree at least 3; the large-face bounds are only promised then.
    pub hypotheses_met: bool,
    /// For in-class graphs: a vertex of degree at most two exists or a configuration is found.
    pub structure_ok: Option<bool>,
}

/// Bound on what a face may send through one maximal controlling path.
pub fn path_bound(len: usize, four_controlling: bool) -> Option<Charge> {
    if four_controlling {
        Some(Charge::frac(1, 2))
    } else {
        match len {
            1 => Some(Charge::int(1)),
            2 | 3 => Some(Charge::frac(11, 12)),
            _ => None,
        }
    }
}

pub fn audit(pg: &PlaneGraph) -> Result<(ChargeState, DischargeReport), DischargeError> {
    let before = initial_charges(pg)?;
    let after = apply_rules(pg)?;
    let elements = pg
        .graph()
        .vertices()
        .map(Element::Vertex)
        .chain((0..pg.face_count()).map(Element::Face));
    let negative: Vec<(Element, Charge)> =
        elements.map(|e| (e, after.get(e))).filter(|&(_, c)| c < Charge::ZERO).collect();

    let mut path_checks = Vec::new();
    let mut face_bounds = Vec::new();
    for f in (0..pg.face_count()).filter(|&f| pg.face_degree(f) >= 7) {
        let prof = face_profile(pg, f).expect("7+-face");
        let d = prof.degree;
        let walk = &pg.face(f).walk;
        for p in &prof.maximal_paths {
            let sent: Charge = p
                .positions(d)
                .map(|i| {
                    let e = edge_key(walk[i], walk[(i + 1) % d]);
                    let to = Element::Face(prof.controlled[i].unwrap());
                    after
                        .transfers
                        .iter()
                        .filter(|t| t.rule == Rule::R2 && t.from == Element::Face(f) && t.to == to && t.edge == Some(e))
                        .map(|t| t.amount)
                        .sum::<Charge>()
                })
                .sum();
            let bound = path_bound(p.len, p.four_controlling);
            path_checks.push(PathCheck {
                face: f,
                start: p.start,
                len: p.len,
                four_controlling: p.four_controlling,
                sent,
                bound,
                ok: bound.is_none_or(|b| sent <= b),
            });
        }
        if d >= 8 {
            let t = prof.t3_prime as i64;
            let bound = Charge::int(d as i64 - 6) - Charge::frac(((d - prof.s0) / 2) as i64, 2) - Charge::frac(t, 2);
            let final_charge = after.face_charge[f];
            face_bounds.push(FaceBound {
                face: f,
                degree: d,
                s0: prof.s0,
                t3_prime: prof.t3_prime,
                bound,
                final_charge,
                ok: final_charge >= bound,
            });
        }
    }

    let in_class = check_class(pg).in_class;
    let hypotheses_met = in_class && pg.graph().min_degree().unwrap_or(0) >= 3;
    let structure_ok = in_class.then(|| {
        let g = pg.graph();
        g.vertices().any(|v| g.degree(v) <= 2) || !find_configurations(g).is_empty()
    });
    let report = DischargeReport {
        total_before: before.total(),
        total_after: after.total(),
        conserved: before.total() == after.total(),
        negative,
        anomalies: after.anomalies.clone(),
        paths_ok: path_checks.iter().all(|c| c.ok),
        path_checks,
        face_bounds,
        hypotheses_met,
        structure_ok,
    };
    Ok((after, report))
}
