//! Plain-text formats: edge lists, rotation systems, graph6, operation sequences, covers,
//! value files and partitions.
//!
//! Readers accept arbitrary nonnegative ids and re-index them densely; the returned [`IdMap`]
//! translates back. Writers take the map so files round-trip with the input labels.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::covers::{Cover, IFPartition};
use crate::graph::{build_graph_labeled, Graph, GraphError, IdMap, VertexId};
use crate::plane::{EmbeddingError, PlaneGraph};
use crate::weak::{Op, OperationSequence};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

fn perr(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse { line: line + 1, msg: msg.into() }
}

/// Non-empty lines with comments stripped, paired with their 0-based line number.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i, l))
    })
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T, IoError> {
    tok.parse().map_err(|_| perr(line, format!("bad number {tok:?}")))
}

/// `u v` per line. A line holding a single id declares a vertex without edges.
pub fn parse_edge_list(text: &str) -> Result<(Graph, IdMap), IoError> {
    let mut edges = Vec::new();
    let mut isolated = Vec::new();
    for (i, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[..] {
            [u] => isolated.push(num(i, u)?),
            [u, v] => edges.push((num(i, u)?, num(i, v)?)),
            _ => return Err(perr(i, "expected \"u v\"")),
        }
    }
    Ok(build_graph_labeled(&edges, &isolated)?)
}

pub fn write_edge_list(g: &Graph, map: &IdMap) -> String {
    let mut out = String::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        writeln!(out, "{}", map.label(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", map.label(u), map.label(v)).unwrap();
    }
    out
}

/// `v: w1 w2 ... wk` per vertex, neighbours in clockwise order.
pub fn parse_rotation(text: &str) -> Result<(PlaneGraph, IdMap), IoError> {
    let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, l) in content_lines(text) {
        let (head, rest) = l.split_once(':').ok_or_else(|| perr(i, "expected \"v: w1 ... wk\""))?;
        let v: usize = num(i, head.trim())?;
        let nbrs = rest.split_whitespace().map(|t| num(i, t)).collect::<Result<Vec<usize>, _>>()?;
        if rows.insert(v, nbrs).is_some() {
            return Err(perr(i, format!("vertex {v} listed twice")));
        }
    }
    let map = IdMap { labels: rows.keys().copied().collect() };
    let mut rotation = Vec::with_capacity(rows.len());
    for nbrs in rows.values() {
        let row = nbrs
            .iter()
            .map(|&w| map.index_of(w).ok_or(IoError::UnknownVertex(w)))
            .collect::<Result<Vec<_>, _>>()?;
        rotation.push(row);
    }
    Ok((PlaneGraph::from_rotation(rotation)?, map))
}

pub fn write_rotation(pg: &PlaneGraph, map: &IdMap) -> String {
    let mut out = String::new();
    for (v, row) in pg.rotation().iter().enumerate() {
        write!(out, "{}:", map.label(v)).unwrap();
        for &w in row {
            write!(out, " {}", map.label(w)).unwrap();
        }
        out.push('\n');
    }
    out
}

/// First graph6 string in `text` (an optional `>>graph6<<` header is skipped).
pub fn parse_graph6(text: &str) -> Result<Graph, IoError> {
    let (line, raw) = content_lines(text).next().ok_or_else(|| perr(0, "empty graph6 input"))?;
    let s = raw.strip_prefix(">>graph6<<").unwrap_or(raw).as_bytes();
    if s.iter().any(|&c| !(63..=126).contains(&c)) {
        return Err(perr(line, "graph6 bytes must lie in 63..=126"));
    }
    let short = || perr(line, "truncated graph6 string");
    let take = |from: usize, count: usize| -> Result<u64, IoError> {
        let bytes = s.get(from..from + count).ok_or_else(short)?;
        Ok(bytes.iter().fold(0u64, |acc, &c| (acc << 6) | u64::from(c - 63)))
    };
    let (n, body) = match s.first() {
        None => return Err(short()),
        Some(&126) if s.get(1) == Some(&126) => (take(2, 6)? as usize, 8),
        Some(&126) => (take(1, 3)? as usize, 4),
        Some(&c) => (usize::from(c - 63), 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if s.len() != body + need {
        return Err(perr(line, format!("expected {need} data bytes for {n} vertices")));
    }
    let bit = |k: usize| (s[body + k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push_wide = |out: &mut Vec<u8>, x: u64, groups: u32| {
        for k in (0..groups).rev() {
            out.push(((x >> (6 * k)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_wide(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push_wide(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ascii")
}

/// `D u` or `S a b` per line, in the labels of `map`.
pub fn parse_sequence(text: &str, map: &IdMap) -> Result<OperationSequence, IoError> {
    let id = |l: usize| map.index_of(l).ok_or(IoError::UnknownVertex(l));
    let mut steps = Vec::new();
    for (i, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let op = match toks[..] {
            ["D", u] => Op::Delete(id(num(i, u)?)?),
            ["S", a, b] => Op::DeleteSave(id(num(i, a)?)?, id(num(i, b)?)?),
            _ => return Err(perr(i, "expected \"D u\" or \"S a b\"")),
        };
        steps.push(op);
    }
    Ok(OperationSequence::new(steps))
}

pub fn write_sequence(seq: &OperationSequence, map: &IdMap) -> String {
    let mut out = String::new();
    for op in &seq.steps {
        writeln!(out, "{}", op.map(|v| map.label(v))).unwrap();
    }
    out
}

/// `s=<int>` then `a b: i1-j1 i2-j2 ...` per base edge. Structural checks are left to
/// [`crate::covers::validate_cover`].
pub fn parse_cover(text: &str, base: &Graph, map: &IdMap) -> Result<Cover, IoError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| perr(0, "missing \"s=<int>\" header"))?;
    let s = header
        .strip_prefix("s=")
        .ok_or_else(|| perr(hl, "missing \"s=<int>\" header"))
        .and_then(|t| num(hl, t.trim()))?;
    let id = |l: usize| map.index_of(l).ok_or(IoError::UnknownVertex(l));
    let mut cover = Cover { base: base.clone(), s, matchings: BTreeMap::new() };
    for (i, l) in lines {
        let (head, rest) = l.split_once(':').ok_or_else(|| perr(i, "expected \"a b: i-j ...\""))?;
        let ends: Vec<&str> = head.split_whitespace().collect();
        let [a, b] = ends[..] else { return Err(perr(i, "expected two endpoints")) };
        let (a, b) = (id(num(i, a)?)?, id(num(i, b)?)?);
        let key = (a.min(b), a.max(b));
        if cover.matchings.contains_key(&key) {
            return Err(perr(i, "edge listed twice"));
        }
        cover.matchings.insert(key, Vec::new());
        for tok in rest.split_whitespace() {
            let (x, y) = tok.split_once('-').ok_or_else(|| perr(i, format!("bad pair {tok:?}")))?;
            cover.add_pair(a, num(i, x)?, b, num(i, y)?);
        }
    }
    Ok(cover)
}

pub fn write_cover(h: &Cover, map: &IdMap) -> String {
    let mut out = format!("s={}\n", h.s);
    for (&(a, b), pairs) in &h.matchings {
        write!(out, "{} {}:", map.label(a), map.label(b)).unwrap();
        for (i, j) in pairs {
            write!(out, " {i}-{j}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// `v: c1 c2 ...` per vertex; every vertex of the graph must appear exactly once and carry
/// `width` values.
pub fn parse_values(text: &str, map: &IdMap, width: usize) -> Result<Vec<Vec<i64>>, IoError> {
    let mut rows: Vec<Option<Vec<i64>>> = vec![None; map.labels.len()];
    for (i, l) in content_lines(text) {
        let (head, rest) = l.split_once(':').ok_or_else(|| perr(i, "expected \"v: c ...\""))?;
        let label: usize = num(i, head.trim())?;
        let v = map.index_of(label).ok_or(IoError::UnknownVertex(label))?;
        let vals = rest.split_whitespace().map(|t| num(i, t)).collect::<Result<Vec<i64>, _>>()?;
        if vals.len() != width {
            return Err(perr(i, format!("expected {width} values, got {}", vals.len())));
        }
        if rows[v].replace(vals).is_some() {
            return Err(perr(i, format!("vertex {label} listed twice")));
        }
    }
    rows.into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| perr(0, format!("no values for vertex {}", map.label(v)))))
        .collect()
}

pub fn write_partition(p: &IFPartition, map: &IdMap) -> String {
    let row = |tag: &str, vs: &[VertexId]| {
        let mut line = format!("{tag}:");
        for &v in vs {
            write!(line, " {}", map.label(v)).unwrap();
        }
        line.push('\n');
        line
    };
    row("I", &p.independent) + &row("F", &p.forest)
}

pub fn parse_partition(text: &str, map: &IdMap) -> Result<IFPartition, IoError> {
    let mut independent = None;
    let mut forest = None;
    for (i, l) in content_lines(text) {
        let (tag, rest) = l.split_once(':').ok_or_else(|| perr(i, "expected \"I: ...\" or \"F: ...\""))?;
        let vs = rest
            .split_whitespace()
            .map(|t| num(i, t).and_then(|l| map.index_of(l).ok_or(IoError::UnknownVertex(l))))
            .collect::<Result<Vec<_>, _>>()?;
        let slot = match tag.trim() {
            "I" => &mut independent,
            "F" => &mut forest,
            t => return Err(perr(i, format!("unknown part {t:?}"))),
        };
        if slot.replace(vs).is_some() {
            return Err(perr(i, "part listed twice"));
        }
    }
    Ok(IFPartition { independent: independent.unwrap_or_default(), forest: forest.unwrap_or_default() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn edge_list_with_gaps_and_isolated() {
        let (g, map) = parse_edge_list("# path\n10 4\n4 7\n\n20\n").unwrap();
        assert_eq!(map.labels, vec![4, 7, 10, 20]);
        assert_eq!(g.m(), 2);
        assert_eq!(g.degree(3), 0);
        let again = write_edge_list(&g, &map);
        assert_eq!(parse_edge_list(&again).unwrap(), (g, map));
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list("1 1\n"), Err(IoError::Graph(GraphError::Loop(1))));
        assert!(matches!(parse_edge_list("1 2 3\n"), Err(IoError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1\nx 2\n"), Err(IoError::Parse { line: 2, .. })));
    }

    #[test]
    fn rotation_round_trip() {
        for fx in corpus::fixtures() {
            let map = IdMap::identity(fx.pg.graph().n());
            let text = write_rotation(&fx.pg, &map);
            let (pg, m) = parse_rotation(&text).unwrap();
            assert!(m.is_identity());
            assert_eq!(pg.faces(), fx.pg.faces(), "{}", fx.name);
        }
    }

    #[test]
    fn rotation_rejects_inconsistent() {
        assert!(parse_rotation("0: 1\n1:\n").is_err());
        assert!(parse_rotation("0: 1\n0: 1\n1: 0\n").is_err());
        assert_eq!(parse_rotation("0: 5\n").unwrap_err(), IoError::UnknownVertex(5));
    }

    #[test]
    fn graph6_known_strings() {
        // standard examples: K4 is "C~", the path 0-1-2 is "Bg" with edges 01, 12
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let p = parse_graph6(">>graph6<<Bg").unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(write_graph6(&p), "Bg");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert!(parse_graph6("C~~").is_err());
    }

    #[test]
    fn graph6_round_trip_large() {
        let c = corpus::cycle(70);
        let g = c.graph();
        let s = write_graph6(g);
        assert!(s.starts_with('~'));
        assert_eq!(&parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn sequence_and_cover_round_trip() {
        let (g, map) = parse_edge_list("5 6\n6 9\n").unwrap();
        let seq = parse_sequence("S 6 5\nD 5\nD 9 # last\n", &map).unwrap();
        assert_eq!(seq.steps, vec![Op::DeleteSave(1, 0), Op::Delete(0), Op::Delete(2)]);
        assert_eq!(write_sequence(&seq, &map), "S 6 5\nD 5\nD 9\n");
        assert_eq!(parse_sequence("D 7\n", &map), Err(IoError::UnknownVertex(7)));

        let h = parse_cover("s=2\n6 5: 1-2 2-1\n6 9: 1-1\n", &g, &map).unwrap();
        assert_eq!(h.matchings[&(0, 1)], vec![(2, 1), (1, 2)]);
        assert_eq!(parse_cover(&write_cover(&h, &map), &g, &map).unwrap(), h);
        assert!(parse_cover("2\n", &g, &map).is_err());
    }

    #[test]
    fn values_and_partitions() {
        let (_, map) = parse_edge_list("5 6\n").unwrap();
        assert_eq!(parse_values("6: 1 2\n5: 0 2\n", &map, 2).unwrap(), vec![vec![0, 2], vec![1, 2]]);
        assert!(parse_values("5: 1\n", &map, 1).is_err());
        let p = IFPartition { independent: vec![0], forest: vec![1] };
        let text = write_partition(&p, &map);
        assert_eq!(text, "I: 5\nF: 6\n");
        assert_eq!(parse_partition(&text, &map).unwrap(), p);
    }
}
