//! `weakdeg`: command-line front end.
//!
//! Exit codes: 0 the property holds or the artifact was produced, 1 it fails, 2 bad input or usage.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use weakdeg_core::class::check_class;
use weakdeg_core::covers::{find_sfdt, if_partition, validate_cover, verify_if_partition};
use weakdeg_core::discharging::audit;
use weakdeg_core::graph::IdMap;
use weakdeg_core::io;
use weakdeg_core::reducer::{reduce_to_empty, ReduceOptions};
use weakdeg_core::structure::{find_configurations, structure_audit};
use weakdeg_core::weak::{
    degeneracy, f_core, is_strictly_f_degenerate, is_weakly_f_degenerate_capped, verify_op_sequence,
    weak_degeneracy_capped, FMap, Witness, DEFAULT_CAP,
};
use weakdeg_core::{Graph, PlaneGraph};

#[derive(Parser)]
#[command(name = "weakdeg", version, about = "Weak degeneracy, transversals and discharging on plane graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    EdgeList,
    Graph6,
    Rotation,
}

#[derive(Args)]
struct Input {
    /// Graph file: `.rot` rotation system, `.g6` graph6, anything else an edge list.
    input: PathBuf,
    /// Override the format inferred from the extension.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
#[group(multiple = false)]
struct Values {
    /// Value file, one `v: c ...` line per vertex.
    #[arg(long = "f")]
    file: Option<PathBuf>,
    /// Constant value(s); comma-separated for covers (one per list index).
    #[arg(long = "const", value_delimiter = ',')]
    constant: Option<Vec<i64>>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Class membership report.
    CheckClass(Input),
    /// Face census of the embedding.
    Faces(Input),
    /// Weak degeneracy, or with --k whether the graph is weakly k-degenerate.
    Wd {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: Option<i64>,
        /// Largest vertex count for exact search.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Write the witness sequence here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degeneracy and a peeling order.
    Degeneracy(Input),
    /// Is the graph strictly f-degenerate?
    StrictCheck {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        values: Values,
    },
    /// Search for a strictly f-degenerate transversal of a cover.
    Sfdt {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cover: PathBuf,
        #[command(flatten)]
        values: Values,
    },
    /// Partition into an independent set and an induced forest.
    IfPartition {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Configurations present in the graph.
    FindConfig(Input),
    /// Structural facts about small cycles, 7-faces and 8-faces.
    AuditLemma1(Input),
    /// Run the discharging rules and check the bounds.
    Discharge {
        #[command(flatten)]
        input: Input,
        /// Include the final charges and every transfer.
        #[arg(long)]
        ledger: bool,
    },
    /// Reduce to the empty graph from f = 2. Writes the sequence and a `.prov` sidecar.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        prefer_configurations: bool,
    },
    /// Replay a sequence file; f defaults to the constant 2.
    VerifySeq {
        #[command(flatten)]
        input: Input,
        seq: PathBuf,
        #[command(flatten)]
        values: Values,
    },
    /// Check a partition file.
    VerifyPartition {
        #[command(flatten)]
        input: Input,
        partition: PathBuf,
    },
}

/// Bad input: reported on stderr, exit 2.
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

type Outcome = Result<(bool, Value), Fail>;

enum Loaded {
    Plane(PlaneGraph, IdMap),
    Abstract(Graph, IdMap),
}

impl Loaded {
    fn graph(&self) -> &Graph {
        match self {
            Loaded::Plane(pg, _) => pg.graph(),
            Loaded::Abstract(g, _) => g,
        }
    }

    fn map(&self) -> &IdMap {
        match self {
            Loaded::Plane(_, m) | Loaded::Abstract(_, m) => m,
        }
    }

    fn plane(&self, cmd: &str) -> Result<&PlaneGraph, Fail> {
        match self {
            Loaded::Plane(pg, _) => Ok(pg),
            Loaded::Abstract(..) => Err(Fail(format!("{cmd} needs an embedding; give a rotation file"))),
        }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<Loaded, Fail> {
    let format = input.format.unwrap_or_else(|| match input.input.extension().and_then(|e| e.to_str()) {
        Some("rot") => Format::Rotation,
        Some("g6") => Format::Graph6,
        _ => Format::EdgeList,
    });
    let text = read(&input.input)?;
    Ok(match format {
        Format::Rotation => {
            let (pg, map) = io::parse_rotation(&text)?;
            Loaded::Plane(pg, map)
        }
        Format::Graph6 => {
            let g = io::parse_graph6(&text)?;
            let map = IdMap::identity(g.n());
            Loaded::Abstract(g, map)
        }
        Format::EdgeList => {
            let (g, map) = io::parse_edge_list(&text)?;
            Loaded::Abstract(g, map)
        }
    })
}

/// Attaches the original labels when the input ids were re-indexed.
fn with_labels(mut report: Value, map: &IdMap) -> Value {
    if !map.is_identity() {
        report["labels"] = json!(map.labels);
    }
    report
}

fn values(v: &Values, map: &IdMap, width: usize, default: Option<i64>) -> Result<Vec<Vec<i64>>, Fail> {
    let n = map.labels.len();
    match (&v.file, &v.constant, default) {
        (Some(p), _, _) => Ok(io::parse_values(&read(p)?, map, width)?),
        (None, Some(c), _) if c.len() == width => Ok(vec![c.clone(); n]),
        (None, Some(c), _) => Err(Fail(format!("--const needs {width} value(s), got {}", c.len()))),
        (None, None, Some(k)) => Ok(vec![vec![k; width]; n]),
        (None, None, None) => Err(Fail("give --f <file> or --const".into())),
    }
}

fn fmap(rows: Vec<Vec<i64>>) -> FMap {
    FMap(rows.into_iter().flatten().collect())
}

fn write_file(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| Fail(format!("{}: {e}", path.display())))
}

fn json_of<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialise")
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::CheckClass(input) => {
            let l = load(&input)?;
            let r = check_class(l.plane("check-class")?);
            Ok((r.in_class, with_labels(json_of(&r), l.map())))
        }
        Cmd::Faces(input) => {
            let l = load(&input)?;
            let pg = l.plane("faces")?;
            let g = pg.graph();
            let mut census: BTreeMap<usize, usize> = BTreeMap::new();
            for f in 0..pg.face_count() {
                *census.entry(pg.face_degree(f)).or_default() += 1;
            }
            let (n, m, fc) = (g.n() as i64, g.m() as i64, pg.face_count() as i64);
            let report = json!({
                "vertices": n,
                "edges": m,
                "faces": fc,
                "degree_sum": pg.faces().iter().map(|f| f.len()).sum::<usize>(),
                "census": census,
                "euler": n - m + fc,
                "connected": pg.is_connected(),
                "walks": pg.faces().iter().map(|f| &f.walk).collect::<Vec<_>>(),
            });
            Ok((true, with_labels(report, l.map())))
        }
        Cmd::Wd { input, k, cap, out } => {
            let l = load(&input)?;
            let g = l.graph();
            let (holds, at, seq, mut report) = match k {
                Some(k) => {
                    let w = is_weakly_f_degenerate_capped(g, &FMap::constant(g.n(), k), cap)?;
                    let r = json!({ "k": k, "weakly_k_degenerate": w.is_some() });
                    (w.is_some(), k, w, r)
                }
                None => {
                    let r = weak_degeneracy_capped(g, cap)?;
                    let Witness::Sequence(seq) = r.witness else { unreachable!("wd witness is a sequence") };
                    (true, r.value as i64, Some(seq), json!({ "value": r.value }))
                }
            };
            if let Some(seq) = &seq {
                let f = FMap::constant(g.n(), at);
                report["verified"] = json!(verify_op_sequence(g, &f, seq).valid);
                let text = io::write_sequence(seq, l.map());
                match out {
                    Some(p) => write_file(&p, &text)?,
                    None => report["witness"] = json!(text.lines().collect::<Vec<_>>()),
                }
            }
            Ok((holds, with_labels(report, l.map())))
        }
        Cmd::Degeneracy(input) => {
            let l = load(&input)?;
            Ok((true, with_labels(json_of(&degeneracy(l.graph())), l.map())))
        }
        Cmd::StrictCheck { input, values: v } => {
            let l = load(&input)?;
            let f = fmap(values(&v, l.map(), 1, None)?);
            let g = l.graph();
            let holds = is_strictly_f_degenerate(g, &f);
            let report = json!({ "strictly_f_degenerate": holds, "core": f_core(g, &f) });
            Ok((holds, with_labels(report, l.map())))
        }
        Cmd::Sfdt { input, cover, values: v } => {
            let l = load(&input)?;
            let h = io::parse_cover(&read(&cover)?, l.graph(), l.map())?;
            let bad = validate_cover(l.graph(), &h);
            if !bad.is_empty() {
                return Err(Fail(format!("invalid cover: {}", serde_json::to_string(&bad)?)));
            }
            let f = fmap(values(&v, l.map(), h.s, None)?);
            let t = find_sfdt(&h, &f);
            let report = json!({
                "s": h.s,
                "transversal": t.as_ref().map_or(json!("none"), |t| json!(t.chosen)),
            });
            Ok((t.is_some(), with_labels(report, l.map())))
        }
        Cmd::IfPartition { input, out } => {
            let l = load(&input)?;
            let g = l.graph();
            let report = match if_partition(g) {
                None => return Ok((false, with_labels(json!({ "partition": "none" }), l.map()))),
                Some(p) => {
                    let verified = verify_if_partition(g, &p);
                    if let Some(path) = out {
                        write_file(&path, &io::write_partition(&p, l.map()))?;
                    }
                    json!({ "partition": p, "verified": verified })
                }
            };
            Ok((true, with_labels(report, l.map())))
        }
        Cmd::FindConfig(input) => {
            let l = load(&input)?;
            let found = find_configurations(l.graph());
            Ok((!found.is_empty(), with_labels(json!({ "matches": found }), l.map())))
        }
        Cmd::AuditLemma1(input) => {
            let l = load(&input)?;
            let r = structure_audit(l.plane("audit-lemma1")?);
            Ok((r.violations.is_empty(), with_labels(json_of(&r), l.map())))
        }
        Cmd::Discharge { input, ledger } => {
            let l = load(&input)?;
            let (state, r) = audit(l.plane("discharge")?)?;
            let holds = r.conserved && r.paths_ok && (!r.hypotheses_met || r.face_bounds.iter().all(|b| b.ok));
            let mut report = json_of(&r);
            if ledger {
                report["ledger"] = json_of(&state);
            }
            Ok((holds, with_labels(report, l.map())))
        }
        Cmd::Reduce { input, out, prefer_configurations } => {
            let l = load(&input)?;
            let opts = ReduceOptions { prefer_configurations };
            let t = match reduce_to_empty(l.plane("reduce")?, opts) {
                Err(e) => return Ok((false, json!({ "error": e.to_string() }))),
                Ok(t) => t,
            };
            let seq = io::write_sequence(&t.steps, l.map());
            let prov: String = t.provenance.iter().map(|p| format!("{p}\n")).collect();
            let mut report = json!({
                "steps": t.steps.len(),
                "configurations": t.configurations,
                "verified": true,
            });
            match out {
                Some(p) => {
                    write_file(&p, &seq)?;
                    let mut side = p.into_os_string();
                    side.push(".prov");
                    write_file(Path::new(&side), &prov)?;
                }
                None => {
                    report["sequence"] = json!(seq.lines().collect::<Vec<_>>());
                    report["provenance"] = json!(prov.lines().collect::<Vec<_>>());
                }
            }
            Ok((true, with_labels(report, l.map())))
        }
        Cmd::VerifySeq { input, seq, values: v } => {
            let l = load(&input)?;
            let f = fmap(values(&v, l.map(), 1, Some(2))?);
            let s = io::parse_sequence(&read(&seq)?, l.map())?;
            let r = verify_op_sequence(l.graph(), &f, &s);
            Ok((r.valid, with_labels(json_of(&r), l.map())))
        }
        Cmd::VerifyPartition { input, partition } => {
            let l = load(&input)?;
            let p = io::parse_partition(&read(&partition)?, l.map())?;
            let ok = verify_if_partition(l.graph(), &p);
            Ok((ok, with_labels(json!({ "valid": ok }), l.map())))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok((holds, report)) => {
            let text = serde_json::to_string_pretty(&report).expect("json");
            // a closed pipe is not worth a panic
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::from(if holds { 0 } else { 1 })
        }
        Err(Fail(msg)) => {
            eprintln!("weakdeg: {msg}");
            ExitCode::from(2)
        }
    }
}
