//! Text interchange: graph files, representation JSON, report JSON and
//! machine-readable errors.
//!
//! # Graph files
//!
//! Plain text, one item per line; `#` starts a comment that runs to the
//! end of the line.  A graph is given either as a rotation system or as
//! an edge list — the two styles cannot be mixed:
//!
//! ```text
//! # rotation style: counterclockwise neighbor order around each vertex
//! 1: 2 4 5 3
//! 2: 1 3 6 4
//! ...
//! outer: 1 2 3        # optional outer face, clockwise
//!
//! # edge-list style: one edge per line, embedding computed
//! 0 1
//! 1 2
//! ...
//! augment: 0 2        # optional augmentation edge, repeatable
//! ```
//!
//! Vertex names are arbitrary whitespace-free tokens.  When every name is
//! a decimal number the numbers themselves become the vertex ids;
//! otherwise ids are assigned in order of first appearance.
//!
//! # Representation JSON
//!
//! ```text
//! {"vertices": [{"id": 3, "segments": [[x1, y1, x2, y2], ...]}, ...]}
//! ```
//!
//! Segments are listed in chain order (each shares an endpoint with the
//! next), which [`rep_from_json`] relies on when rebuilding the paths;
//! an optional `"label"` per vertex carries the original name.  Parsing
//! a serialized representation reproduces it exactly, coordinate for
//! coordinate.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::graph::{build_embedded_graph, from_rotations, EmbeddedGraph, Rotations};
use crate::model::{EpgRepresentation, Segment, VertexPath};
use crate::verify::Report;
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Graph files
// ---------------------------------------------------------------------------

/// A parsed graph file: the embedded graph, the original vertex names,
/// and any augmentation edges the file carried.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: EmbeddedGraph,
    /// Vertex id → name as written in the file.
    pub labels: BTreeMap<usize, String>,
    /// Augmentation edges from `augment:` lines, as vertex ids.
    pub augmentation: Vec<(usize, usize)>,
}

impl ParsedGraph {
    /// The name of vertex `v` (its id in decimal if no name is known).
    pub fn label(&self, v: usize) -> String {
        self.labels.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }
}

enum RawLine {
    Rotation { name: String, neighbors: Vec<String> },
    Edge(String, String),
    Outer(Vec<String>),
    Augment(String, String),
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn split_tokens(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

/// Parses the graph file format described in the module docs.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut raw = Vec::new();
    for (idx, full_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = full_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("outer:") {
            let toks = split_tokens(rest);
            if toks.len() < 3 {
                return Err(parse_err(line_no, "outer face needs at least three vertices"));
            }
            raw.push((line_no, RawLine::Outer(toks)));
        } else if let Some(rest) = line.strip_prefix("augment:") {
            let toks = split_tokens(rest);
            if toks.len() != 2 {
                return Err(parse_err(line_no, "augment line needs exactly two vertices"));
            }
            raw.push((line_no, RawLine::Augment(toks[0].clone(), toks[1].clone())));
        } else if let Some((name, rest)) = line.split_once(':') {
            let name = name.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(parse_err(line_no, "rotation line needs a single vertex name before ':'"));
            }
            let neighbors = split_tokens(rest);
            if neighbors.is_empty() {
                return Err(parse_err(line_no, "rotation line lists no neighbors"));
            }
            raw.push((line_no, RawLine::Rotation { name: name.to_string(), neighbors }));
        } else {
            let toks = split_tokens(line);
            if toks.len() != 2 {
                return Err(parse_err(
                    line_no,
                    format!("expected an edge `u v`, found {} token(s)", toks.len()),
                ));
            }
            raw.push((line_no, RawLine::Edge(toks[0].clone(), toks[1].clone())));
        }
    }

    // Collect vertex names in order of first appearance, and reject a mix
    // of rotation and edge lines.
    let mut order: Vec<String> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let note = |name: &str, order: &mut Vec<String>, seen: &mut BTreeSet<String>| {
        if seen.insert(name.to_string()) {
            order.push(name.to_string());
        }
    };
    let mut has_rotation = None;
    let mut has_edge = None;
    for (line_no, item) in &raw {
        match item {
            RawLine::Rotation { name, neighbors } => {
                has_rotation.get_or_insert(*line_no);
                note(name, &mut order, &mut seen);
                for w in neighbors {
                    note(w, &mut order, &mut seen);
                }
            }
            RawLine::Edge(u, v) => {
                has_edge.get_or_insert(*line_no);
                note(u, &mut order, &mut seen);
                note(v, &mut order, &mut seen);
            }
            _ => {}
        }
    }
    if let (Some(_), Some(e)) = (has_rotation, has_edge) {
        return Err(parse_err(e, "edge lines cannot be mixed with rotation lines"));
    }
    if order.is_empty() {
        return Err(parse_err(0, "file contains no graph"));
    }

    // Numeric names become ids directly; otherwise first-appearance order.
    let numeric: Option<Vec<usize>> = order.iter().map(|s| s.parse::<usize>().ok()).collect();
    let ids: Vec<usize> = match numeric {
        Some(nums) if nums.iter().collect::<BTreeSet<_>>().len() == nums.len() => nums,
        _ => (0..order.len()).collect(),
    };
    let id_of: BTreeMap<&str, usize> =
        order.iter().map(String::as_str).zip(ids.iter().copied()).collect();
    let labels: BTreeMap<usize, String> =
        ids.iter().copied().zip(order.iter().cloned()).collect();

    let resolve = |name: &str, line_no: usize| -> Result<usize> {
        id_of
            .get(name)
            .copied()
            .ok_or_else(|| parse_err(line_no, format!("unknown vertex `{name}`")))
    };

    // Second pass: build the typed pieces.
    let mut rot: Rotations = Rotations::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut outer: Option<Vec<usize>> = None;
    let mut augmentation: Vec<(usize, usize)> = Vec::new();
    for (line_no, item) in &raw {
        match item {
            RawLine::Rotation { name, neighbors } => {
                let v = resolve(name, *line_no)?;
                let ns = neighbors
                    .iter()
                    .map(|w| resolve(w, *line_no))
                    .collect::<Result<Vec<_>>>()?;
                if rot.insert(v, ns).is_some() {
                    return Err(parse_err(*line_no, format!("vertex `{name}` listed twice")));
                }
            }
            RawLine::Edge(u, v) => {
                edges.push((resolve(u, *line_no)?, resolve(v, *line_no)?));
            }
            RawLine::Outer(names) => {
                if outer.is_some() {
                    return Err(parse_err(*line_no, "more than one outer line"));
                }
                outer = Some(
                    names
                        .iter()
                        .map(|w| resolve(w, *line_no))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            RawLine::Augment(u, v) => {
                augmentation.push((resolve(u, *line_no)?, resolve(v, *line_no)?));
            }
        }
    }

    // In rotation style every mentioned vertex needs its own line.
    if has_rotation.is_some() {
        for (line_no, item) in &raw {
            if let RawLine::Rotation { neighbors, .. } = item {
                for w in neighbors {
                    if !rot.contains_key(&resolve(w, *line_no)?) {
                        return Err(parse_err(
                            *line_no,
                            format!("vertex `{w}` appears as a neighbor but has no rotation line"),
                        ));
                    }
                }
            }
        }
    }

    let graph = if has_rotation.is_some() {
        from_rotations(rot, outer)?
    } else {
        build_embedded_graph(&edges, None, outer)?
    };
    Ok(ParsedGraph { graph, labels, augmentation })
}

/// Serializes a graph in rotation style (plus its outer face), using the
/// given names where available. [`parse_graph`] reads the result back.
pub fn write_graph(g: &EmbeddedGraph, labels: Option<&BTreeMap<usize, String>>) -> String {
    let name = |v: usize| -> String {
        labels
            .and_then(|m| m.get(&v).cloned())
            .unwrap_or_else(|| v.to_string())
    };
    let mut out = String::new();
    for v in g.vertices() {
        let ns: Vec<String> = g
            .rotation(v)
            .expect("vertex comes from the graph")
            .iter()
            .map(|&w| name(w))
            .collect();
        out.push_str(&format!("{}: {}\n", name(v), ns.join(" ")));
    }
    let outer: Vec<String> = g.outer().iter().map(|&v| name(v)).collect();
    out.push_str(&format!("outer: {}\n", outer.join(" ")));
    out
}

// ---------------------------------------------------------------------------
// Representation JSON
// ---------------------------------------------------------------------------

/// Serializes a representation to the JSON schema in the module docs.
/// Optional `labels` add a `"label"` field per vertex.
pub fn rep_to_json(rep: &EpgRepresentation, labels: Option<&BTreeMap<usize, String>>) -> String {
    let mut vertices = Vec::new();
    for (&v, path) in rep.paths() {
        let segments: Vec<Value> = path
            .segments()
            .iter()
            .map(|s| json!([s.a().x, s.a().y, s.b().x, s.b().y]))
            .collect();
        let mut entry = json!({ "id": v, "segments": segments });
        if let Some(label) = labels.and_then(|m| m.get(&v)) {
            entry["label"] = json!(label);
        }
        vertices.push(entry);
    }
    let mut text = serde_json::to_string_pretty(&json!({ "vertices": vertices }))
        .expect("serializing plain values cannot fail");
    text.push('\n');
    text
}

/// Parses representation JSON back into paths plus any vertex labels.
///
/// Segments must be in chain order; a single segment becomes a plain
/// vertical or horizontal path, anything longer a polyline.
pub fn rep_from_json(text: &str) -> Result<(EpgRepresentation, BTreeMap<usize, String>)> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| parse_err(e.line(), format!("invalid JSON: {e}")))?;
    let vertices = root
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err(0, "top level must contain a \"vertices\" array"))?;

    let mut paths: BTreeMap<usize, VertexPath> = BTreeMap::new();
    let mut labels = BTreeMap::new();
    for entry in vertices {
        let id = entry
            .get("id")
            .and_then(Value::as_u64)
            .ok_or_else(|| parse_err(0, "every vertex needs a numeric \"id\""))? as usize;
        if let Some(label) = entry.get("label").and_then(Value::as_str) {
            labels.insert(id, label.to_string());
        }
        let seg_values = entry
            .get("segments")
            .and_then(Value::as_array)
            .ok_or_else(|| parse_err(0, format!("vertex {id} needs a \"segments\" array")))?;
        let mut segments = Vec::new();
        for sv in seg_values {
            let nums: Option<Vec<i64>> = sv
                .as_array()
                .map(|a| a.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
                .unwrap_or(None);
            let nums = nums
                .filter(|ns| ns.len() == 4)
                .ok_or_else(|| {
                    parse_err(0, format!("vertex {id}: each segment must be [x1, y1, x2, y2]"))
                })?;
            segments.push(
                Segment::new(
                    crate::model::GridPoint::new(nums[0], nums[1]),
                    crate::model::GridPoint::new(nums[2], nums[3]),
                )
                .map_err(|e| parse_err(0, format!("vertex {id}: {e}")))?,
            );
        }
        let path = match segments.as_slice() {
            [] => return Err(parse_err(0, format!("vertex {id} has no segments"))),
            [s] if s.is_vertical() => VertexPath::Vertical(segments[0]),
            [_] => VertexPath::Horizontal(segments[0]),
            _ => VertexPath::Poly(segments),
        };
        if paths.insert(id, path).is_some() {
            return Err(parse_err(0, format!("vertex {id} appears twice")));
        }
    }
    let rep = EpgRepresentation::new(paths)
        .map_err(|e| parse_err(0, format!("segments do not form valid paths: {e}")))?;
    Ok((rep, labels))
}

// ---------------------------------------------------------------------------
// Report and error JSON
// ---------------------------------------------------------------------------

fn pair_list(pairs: &[(usize, usize)]) -> Value {
    Value::Array(pairs.iter().map(|&(u, v)| json!([u, v])).collect())
}

/// Serializes a verification report.
pub fn report_to_json(report: &Report) -> String {
    let path_bends: BTreeMap<String, usize> = report
        .path_bends
        .iter()
        .map(|(&v, &b)| (v.to_string(), b))
        .collect();
    let mut text = serde_json::to_string_pretty(&json!({
        "pass": report.pass,
        "vertices": report.vertices,
        "expected_edge_count": report.expected_edge_count,
        "realized_edge_count": report.realized_edge_count,
        "missing_edges": pair_list(&report.missing_edges),
        "extra_edges": pair_list(&report.extra_edges),
        "missing_vertices": report.missing_vertices,
        "extra_vertices": report.extra_vertices,
        "malformed_paths": report.malformed_paths,
        "max_bends": report.max_bends,
        "over_bend_paths": report.over_bend_paths,
        "path_bends": path_bends,
        "max_edge_multiplicity": report.max_edge_multiplicity,
    }))
    .expect("serializing plain values cannot fail");
    text.push('\n');
    text
}

/// A short machine-readable tag for each error variant.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NonPlanar => "NonPlanar",
        Error::InconsistentRotation(_) => "InconsistentRotation",
        Error::MultiEdge { .. } => "MultiEdge",
        Error::SelfLoop { .. } => "SelfLoop",
        Error::OuterNotAFace => "OuterNotAFace",
        Error::ChordOnSide { .. } => "ChordOnSide",
        Error::NotNearTriangulation(_) => "NotNearTriangulation",
        Error::NoValidStep => "NoValidStep",
        Error::NoValidSplit => "NoValidSplit",
        Error::NotHexagonal(_) => "NotHexagonal",
        Error::ConnectivityBroken(_) => "ConnectivityBroken",
        Error::InvariantViolation(_) => "InvariantViolation",
        Error::NotAWheel => "NotAWheel",
        Error::WheelTooSmall { .. } => "WheelTooSmall",
        Error::AugmentationInvalid(_) => "AugmentationInvalid",
        Error::PostconditionFailed(_) => "PostconditionFailed",
        Error::Parse { .. } => "Parse",
        Error::UnknownVertex(_) => "UnknownVertex",
        Error::MissingEdge { .. } => "MissingEdge",
    }
}

/// Serializes an error as `{"error": {"kind", "detail"}}`.
pub fn error_to_json(e: &Error) -> String {
    let mut text = serde_json::to_string_pretty(&json!({
        "error": { "kind": error_kind(e), "detail": e.to_string() }
    }))
    .expect("serializing plain values cannot fail");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
