//! Independent verification of grid-path representations.
//!
//! Everything here works from raw geometry: the unit grid edges covered by
//! each vertex path.  Nothing consults the construction that produced the
//! representation, so these checks serve as an oracle for it.
//!
//! - [`verify_representation`] / [`verify_against_edges`] — does the
//!   representation realize exactly the edges of a given graph, with every
//!   path a well-formed grid path of at most [`MAX_BENDS`] bends?
//! - [`audit_invariants`] — does a representation of a two-sided
//!   near-triangulation (with its closing edge withheld) satisfy the full
//!   boundary discipline that the recursive construction maintains?
//! - [`path_points_in_order`], [`bend_count`], [`classify_shape`] — the
//!   per-path primitives, exposed for reuse.

use std::collections::{BTreeMap, BTreeSet};

use crate::decompose::TwoSidedNearTriangulation;
use crate::graph::EmbeddedGraph;
use crate::model::{boundary_hexagon, EpgRepresentation, GridEdge, GridPoint, VertexPath};
use crate::{Error, Result};

/// Maximum number of bends a path may have.
pub const MAX_BENDS: usize = 3;

// ---------------------------------------------------------------------------
// Per-path geometry
// ---------------------------------------------------------------------------

/// Recovers the ordered points of a path from its covered unit edges.
///
/// Returns `None` unless the edges form a simple path in the grid graph:
/// connected, every point of degree at most two, exactly two endpoints.
/// The walk starts at the smaller endpoint, so the order is canonical.
pub fn path_points_in_order(path: &VertexPath) -> Option<Vec<GridPoint>> {
    let edges = path.unit_edges();
    if edges.is_empty() {
        return None;
    }
    let mut adj: BTreeMap<GridPoint, Vec<GridPoint>> = BTreeMap::new();
    for e in &edges {
        let (p, q) = e.endpoints();
        adj.entry(p).or_default().push(q);
        adj.entry(q).or_default().push(p);
    }
    let mut ends = Vec::new();
    for (p, nbrs) in &adj {
        match nbrs.len() {
            1 => ends.push(*p),
            2 => {}
            _ => return None,
        }
    }
    if ends.len() != 2 {
        return None;
    }
    let start = ends[0];
    let mut walk = vec![start];
    let mut prev: Option<GridPoint> = None;
    let mut cur = start;
    loop {
        let next = adj[&cur].iter().copied().find(|&n| Some(n) != prev);
        match next {
            Some(n) => {
                walk.push(n);
                prev = Some(cur);
                cur = n;
                if adj[&cur].len() == 1 {
                    break;
                }
            }
            None => break,
        }
    }
    // A walk that ends early means the edge set was disconnected.
    if walk.len() != edges.len() + 1 {
        return None;
    }
    Some(walk)
}

/// Number of bends along the path, or `None` if it is not a well-formed
/// simple grid path.
pub fn bend_count(path: &VertexPath) -> Option<usize> {
    let walk = path_points_in_order(path)?;
    let mut bends = 0;
    for w in walk.windows(3) {
        let d1 = (w[1].x - w[0].x, w[1].y - w[0].y);
        let d2 = (w[2].x - w[1].x, w[2].y - w[1].y);
        if d1 != d2 {
            bends += 1;
        }
    }
    Some(bends)
}

/// Geometric shape of a path, as recovered from its covered edges alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathShape {
    /// A single vertical segment.
    Vertical,
    /// A single horizontal segment.
    Horizontal,
    /// A hooked L: descending vertical into a corner, horizontal running
    /// right out of it, optionally preceded by a horizontal hook at the
    /// top and followed by a vertical hook at the right end.
    HookedL,
    /// Anything else, including malformed edge sets.
    Other,
}

/// Maximal straight runs of a walk as `(horizontal, positive_direction)`.
fn runs_of(walk: &[GridPoint]) -> Vec<(bool, bool)> {
    let mut runs: Vec<(bool, bool)> = Vec::new();
    for w in walk.windows(2) {
        let horizontal = w[1].y == w[0].y;
        let positive = if horizontal {
            w[1].x > w[0].x
        } else {
            w[1].y > w[0].y
        };
        if runs.last() != Some(&(horizontal, positive)) {
            runs.push((horizontal, positive));
        }
    }
    runs
}

/// Whether the run sequence spells a hooked L walked from its top hook to
/// its right hook: optional horizontal, vertical going down, horizontal
/// going right, optional vertical.
fn is_hooked_run_sequence(runs: &[(bool, bool)]) -> bool {
    let k = runs.len();
    if !(2..=4).contains(&k) {
        return false;
    }
    let first_h = usize::from(runs[0].0);
    // Core: descending vertical followed by rightward horizontal.
    if k < first_h + 2 {
        return false;
    }
    if runs[first_h] != (false, false) || runs[first_h + 1] != (true, true) {
        return false;
    }
    match k - first_h - 2 {
        0 => true,
        1 => !runs[first_h + 2].0,
        _ => false,
    }
}

/// Classifies the shape of `path` from its covered edges.
pub fn classify_shape(path: &VertexPath) -> PathShape {
    let Some(walk) = path_points_in_order(path) else {
        return PathShape::Other;
    };
    let runs = runs_of(&walk);
    if runs.len() == 1 {
        return if runs[0].0 {
            PathShape::Horizontal
        } else {
            PathShape::Vertical
        };
    }
    let reversed: Vec<(bool, bool)> = runs.iter().rev().map(|&(h, d)| (h, !d)).collect();
    if is_hooked_run_sequence(&runs) || is_hooked_run_sequence(&reversed) {
        PathShape::HookedL
    } else {
        PathShape::Other
    }
}

// ---------------------------------------------------------------------------
// Representation-level verification
// ---------------------------------------------------------------------------

/// Outcome of checking a representation against an expected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    /// True when every check below came out clean.
    pub pass: bool,
    /// Number of vertex paths examined.
    pub vertices: usize,
    /// Number of edges the graph expects.
    pub expected_edge_count: usize,
    /// Number of distinct vertex pairs sharing at least one grid edge.
    pub realized_edge_count: usize,
    /// Expected edges no pair of paths realizes.
    pub missing_edges: Vec<(usize, usize)>,
    /// Realized adjacencies the graph does not contain.
    pub extra_edges: Vec<(usize, usize)>,
    /// Graph vertices with no path.
    pub missing_vertices: Vec<usize>,
    /// Paths for vertices the graph does not contain.
    pub extra_vertices: Vec<usize>,
    /// Vertices whose covered edges do not form a simple grid path.
    pub malformed_paths: Vec<usize>,
    /// Largest bend count over all well-formed paths.
    pub max_bends: usize,
    /// Well-formed paths exceeding [`MAX_BENDS`].
    pub over_bend_paths: Vec<usize>,
    /// Bend count per well-formed vertex path.
    pub path_bends: BTreeMap<usize, usize>,
    /// Largest number of paths sharing one grid edge.
    pub max_edge_multiplicity: usize,
}

/// Raw edge ownership: which vertices cover each unit grid edge.
///
/// Computed directly from the paths' segments, independent of any caching
/// or bookkeeping elsewhere.
pub fn edge_ownership(rep: &EpgRepresentation) -> BTreeMap<GridEdge, BTreeSet<usize>> {
    let mut own: BTreeMap<GridEdge, BTreeSet<usize>> = BTreeMap::new();
    for (&v, path) in rep.paths() {
        for e in path.unit_edges() {
            own.entry(e).or_default().insert(v);
        }
    }
    own
}

/// Checks `rep` against an explicit vertex and edge set.
///
/// `expected_edges` must hold canonical pairs (`u < v`).
pub fn verify_against_edges(
    rep: &EpgRepresentation,
    expected_vertices: &BTreeSet<usize>,
    expected_edges: &BTreeSet<(usize, usize)>,
) -> Report {
    let path_vertices: BTreeSet<usize> = rep.vertex_ids().into_iter().collect();
    let missing_vertices: Vec<usize> = expected_vertices.difference(&path_vertices).copied().collect();
    let extra_vertices: Vec<usize> = path_vertices.difference(expected_vertices).copied().collect();

    let mut malformed_paths = Vec::new();
    let mut path_bends = BTreeMap::new();
    let mut max_bends = 0;
    let mut over_bend_paths = Vec::new();
    for (&v, path) in rep.paths() {
        match bend_count(path) {
            Some(b) => {
                path_bends.insert(v, b);
                max_bends = max_bends.max(b);
                if b > MAX_BENDS {
                    over_bend_paths.push(v);
                }
            }
            None => malformed_paths.push(v),
        }
    }

    let own = edge_ownership(rep);
    let mut realized: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut max_edge_multiplicity = 0;
    for owners in own.values() {
        max_edge_multiplicity = max_edge_multiplicity.max(owners.len());
        let list: Vec<usize> = owners.iter().copied().collect();
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                realized.insert((list[i], list[j]));
            }
        }
    }

    let missing_edges: Vec<(usize, usize)> = expected_edges.difference(&realized).copied().collect();
    let extra_edges: Vec<(usize, usize)> = realized.difference(expected_edges).copied().collect();

    let pass = missing_vertices.is_empty()
        && extra_vertices.is_empty()
        && malformed_paths.is_empty()
        && over_bend_paths.is_empty()
        && missing_edges.is_empty()
        && extra_edges.is_empty();

    Report {
        pass,
        vertices: path_vertices.len(),
        expected_edge_count: expected_edges.len(),
        realized_edge_count: realized.len(),
        missing_edges,
        extra_edges,
        missing_vertices,
        extra_vertices,
        malformed_paths,
        max_bends,
        over_bend_paths,
        path_bends,
        max_edge_multiplicity,
    }
}

/// Checks `rep` against an embedded graph: same vertices, exactly its
/// edges realized, all paths well-formed with at most [`MAX_BENDS`] bends.
pub fn verify_representation(rep: &EpgRepresentation, g: &EmbeddedGraph) -> Report {
    let vertices: BTreeSet<usize> = g.vertices().collect();
    verify_against_edges(rep, &vertices, &g.edge_set())
}

// ---------------------------------------------------------------------------
// Invariant audit
// ---------------------------------------------------------------------------

fn violation(item: &str, detail: impl AsRef<str>) -> Error {
    Error::InvariantViolation(format!("{item}: {}", detail.as_ref()))
}

fn vertical_edge(x: i64, y: i64) -> GridEdge {
    GridEdge {
        p: GridPoint::new(x, y),
        horizontal: false,
    }
}

fn horizontal_edge(x: i64, y: i64) -> GridEdge {
    GridEdge {
        p: GridPoint::new(x, y),
        horizontal: true,
    }
}

/// Checks that one boundary side is tiled by exclusive runs of the given
/// side vertices in order.  `edges` lists the side's unit edges from the
/// end nearest `vertices[0]`; each edge must be covered by exactly one
/// path, owners must march through `vertices` in order without skipping,
/// and every listed vertex must own at least one edge.
fn check_exclusive_runs(
    item: &str,
    own: &BTreeMap<GridEdge, BTreeSet<usize>>,
    edges: &[GridEdge],
    vertices: &[usize],
) -> Result<()> {
    if vertices.is_empty() {
        if edges.is_empty() {
            return Ok(());
        }
        return Err(violation(item, "side has edges but no owners are expected"));
    }
    if edges.is_empty() {
        return Err(violation(
            item,
            format!("side is empty but {} owners are expected", vertices.len()),
        ));
    }
    let mut pos = 0usize;
    for (idx, e) in edges.iter().enumerate() {
        let owners = own
            .get(e)
            .ok_or_else(|| violation(item, format!("boundary edge {e} is uncovered")))?;
        if owners.len() != 1 {
            return Err(violation(
                item,
                format!("boundary edge {e} is shared by {owners:?}"),
            ));
        }
        let o = *owners.iter().next().unwrap();
        if idx == 0 {
            if o != vertices[0] {
                return Err(violation(
                    item,
                    format!("side starts with path {o}, expected {}", vertices[0]),
                ));
            }
        } else if o != vertices[pos] {
            if pos + 1 < vertices.len() && o == vertices[pos + 1] {
                pos += 1;
            } else {
                return Err(violation(
                    item,
                    format!("side runs break order at edge {e} owned by {o}"),
                ));
            }
        }
    }
    if pos + 1 != vertices.len() {
        return Err(violation(
            item,
            format!(
                "side runs cover {} of {} expected paths",
                pos + 1,
                vertices.len()
            ),
        ));
    }
    Ok(())
}

/// Audits a representation of `t` with the closing edge `(a_1, b_1)`
/// withheld, checking the full boundary discipline the construction
/// maintains:
///
/// 1. exactly the edges of `t` minus `(a_1, b_1)` are realized, by
///    well-formed paths of at most [`MAX_BENDS`] bends, no grid edge
///    shared by more than three paths;
/// 2. `P(a_1)` is a vertical segment, `P(b_1)` horizontal, every other
///    path a hooked L;
/// 3. the covered points fill an orthogonal hexagon with one reflex
///    corner whose south-west quadrant is empty;
/// 4. each boundary side is covered by the right paths:
///    the top by `P(b_1)` alone at its rightmost edge, the right by
///    `P(a_1)` alone at its topmost edge, the left by exclusive runs of
///    `b_2, …, b_q` top to bottom, the bottom by exclusive runs of
///    `a_p, …, a_2` left to right, the reflex sides by `a_p` (vertical)
///    and `b_q` (horizontal) with the corner-adjacent edge exclusive;
/// 5. when `q = 1`, the top hook of `P(a_p)` alone realizes
///    `(a_p, b_1)`;
/// 6. when `p = 1`, the right hook of `P(b_q)` alone realizes
///    `(a_1, b_q)`.
pub fn audit_invariants(rep: &EpgRepresentation, t: &TwoSidedNearTriangulation) -> Result<()> {
    let (a, b) = (t.a(), t.b());
    let (p, q) = (a.len(), b.len());
    let (a1, b1) = (a[0], b[0]);
    let (ap, bq) = (a[p - 1], b[q - 1]);

    // Item 1: exact realization of the graph minus its closing edge.
    let vertices: BTreeSet<usize> = t.graph().vertices().collect();
    let mut edges = t.graph().edge_set();
    edges.remove(&(a1.min(b1), a1.max(b1)));
    let report = verify_against_edges(rep, &vertices, &edges);
    if !report.pass {
        return Err(violation(
            "item 1",
            format!(
                "realization mismatch: missing {:?}, extra {:?}, malformed {:?}, over-bend {:?}",
                report.missing_edges,
                report.extra_edges,
                report.malformed_paths,
                report.over_bend_paths
            ),
        ));
    }
    if report.max_edge_multiplicity > 3 {
        return Err(violation(
            "item 1",
            format!(
                "a grid edge is shared by {} paths",
                report.max_edge_multiplicity
            ),
        ));
    }

    // Item 2: path shapes.
    for (&v, path) in rep.paths() {
        let shape = classify_shape(path);
        if v == a1 {
            if shape != PathShape::Vertical {
                return Err(violation("item 2", format!("path {v} should be vertical")));
            }
        } else if v == b1 {
            if shape != PathShape::Horizontal {
                return Err(violation(
                    "item 2",
                    format!("path {v} should be horizontal"),
                ));
            }
        } else if shape != PathShape::HookedL {
            return Err(violation(
                "item 2",
                format!("path {v} should be a hooked L, got {shape:?}"),
            ));
        }
    }

    // Item 3: the covered points fill an orthogonal hexagon.
    let hex = boundary_hexagon(rep)?;
    if hex.x_m < hex.x_l + 1 || hex.y_m < hex.y_b + 1 {
        return Err(violation(
            "item 3",
            format!("reflex corner ({}, {}) hugs the outer corner", hex.x_m, hex.y_m),
        ));
    }
    let own = edge_ownership(rep);

    // Item 4a: the open south-west quadrant of the reflex corner is empty.
    for pt in rep.covered_points() {
        if pt.x < hex.x_m && pt.y < hex.y_m {
            return Err(violation(
                "item 4a",
                format!("point {pt} sits inside the reflex quadrant"),
            ));
        }
    }

    // Item 4b: P(b_1) is the whole top side, rightmost edge exclusive.
    let top = rep
        .path(b1)
        .and_then(VertexPath::as_horizontal)
        .ok_or_else(|| violation("item 4b", "P(b_1) is not a horizontal segment"))?;
    if top.a() != GridPoint::new(hex.x_l, hex.y_t) || top.b() != GridPoint::new(hex.x_r, hex.y_t) {
        return Err(violation(
            "item 4b",
            format!("P(b_1) spans {top}, expected the full top side"),
        ));
    }
    let e = horizontal_edge(hex.x_r - 1, hex.y_t);
    if own.get(&e).map(BTreeSet::len) != Some(1) {
        return Err(violation("item 4b", "rightmost top edge is not exclusive"));
    }

    // Item 4c: P(a_1) is the whole right side, topmost edge exclusive.
    let right = rep
        .path(a1)
        .and_then(VertexPath::as_vertical)
        .ok_or_else(|| violation("item 4c", "P(a_1) is not a vertical segment"))?;
    if right.a() != GridPoint::new(hex.x_r, hex.y_b) || right.b() != GridPoint::new(hex.x_r, hex.y_t)
    {
        return Err(violation(
            "item 4c",
            format!("P(a_1) spans {right}, expected the full right side"),
        ));
    }
    let e = vertical_edge(hex.x_r, hex.y_t - 1);
    if own.get(&e).map(BTreeSet::len) != Some(1) {
        return Err(violation("item 4c", "topmost right edge is not exclusive"));
    }

    // Item 4d: the left side is tiled by exclusive runs of b_2, …, b_q
    // from top to bottom.  With q = 1 the side must vanish.
    if q == 1 {
        if hex.y_m != hex.y_t {
            return Err(violation(
                "item 4d",
                "left side should vanish when the b-side is a single vertex",
            ));
        }
    } else {
        let edges: Vec<GridEdge> = (hex.y_m..hex.y_t)
            .rev()
            .map(|y| vertical_edge(hex.x_l, y))
            .collect();
        check_exclusive_runs("item 4d", &own, &edges, &b[1..])?;
    }

    // Item 4e: the bottom side is tiled by exclusive runs of a_p, …, a_2
    // from left to right.  With p = 1 the side must vanish.
    if p == 1 {
        if hex.x_m != hex.x_r {
            return Err(violation(
                "item 4e",
                "bottom side should vanish when the a-side is a single vertex",
            ));
        }
    } else {
        let edges: Vec<GridEdge> = (hex.x_m..hex.x_r)
            .map(|x| horizontal_edge(x, hex.y_b))
            .collect();
        let owners_in_order: Vec<usize> = a[1..].iter().rev().copied().collect();
        check_exclusive_runs("item 4e", &own, &edges, &owners_in_order)?;
    }

    // Item 4f: P(a_p) covers the vertical reflex side; the bottommost edge
    // is exclusively its own.
    for y in hex.y_b..hex.y_m {
        let e = vertical_edge(hex.x_m, y);
        if !own.get(&e).is_some_and(|o| o.contains(&ap)) {
            return Err(violation(
                "item 4f",
                format!("vertical reflex edge {e} is not covered by P(a_p)"),
            ));
        }
    }
    let e = vertical_edge(hex.x_m, hex.y_b);
    if own.get(&e).map(BTreeSet::len) != Some(1) {
        return Err(violation(
            "item 4f",
            "bottommost vertical reflex edge is not exclusive",
        ));
    }

    // Item 4g: P(b_q) covers the horizontal reflex side; the leftmost edge
    // is exclusively its own.
    for x in hex.x_l..hex.x_m {
        let e = horizontal_edge(x, hex.y_m);
        if !own.get(&e).is_some_and(|o| o.contains(&bq)) {
            return Err(violation(
                "item 4g",
                format!("horizontal reflex edge {e} is not covered by P(b_q)"),
            ));
        }
    }
    let e = horizontal_edge(hex.x_l, hex.y_m);
    if own.get(&e).map(BTreeSet::len) != Some(1) {
        return Err(violation(
            "item 4g",
            "leftmost horizontal reflex edge is not exclusive",
        ));
    }

    // Item 5: with q = 1, dropping the top hook of P(a_p) loses exactly
    // the adjacency (a_p, b_1).
    if q == 1 && p >= 2 {
        let hook = rep
            .path(ap)
            .and_then(VertexPath::as_hooked)
            .ok_or_else(|| violation("item 5", "P(a_p) is not a hooked L"))?;
        if hook.top.is_none() {
            return Err(violation("item 5", "P(a_p) lacks a top hook"));
        }
        let stripped = crate::model::HookedLShape::new(
            hook.ell,
            hook.down,
            None,
            hook.right,
        )?;
        assert_drops_exactly(rep, ap, VertexPath::Hooked(stripped), (ap, b1), "item 5")?;
    }

    // Item 6: with p = 1, dropping the right hook of P(b_q) loses exactly
    // the adjacency (a_1, b_q).
    if p == 1 && q >= 2 {
        let hook = rep
            .path(bq)
            .and_then(VertexPath::as_hooked)
            .ok_or_else(|| violation("item 6", "P(b_q) is not a hooked L"))?;
        if hook.right.is_none() {
            return Err(violation("item 6", "P(b_q) lacks a right hook"));
        }
        let stripped = crate::model::HookedLShape::new(
            hook.ell,
            hook.down,
            hook.top,
            None,
        )?;
        assert_drops_exactly(rep, bq, VertexPath::Hooked(stripped), (a1, bq), "item 6")?;
    }

    Ok(())
}

/// Replaces `v`'s path by `replacement` in a scratch copy and checks that
/// exactly the adjacency `lost` disappears from the intersection graph.
fn assert_drops_exactly(
    rep: &EpgRepresentation,
    v: usize,
    replacement: VertexPath,
    lost: (usize, usize),
    item: &str,
) -> Result<()> {
    let before = rep.intersection_graph();
    let mut scratch = rep.clone();
    scratch.set_path(v, replacement)?;
    let after = scratch.intersection_graph();
    let lost_key = (lost.0.min(lost.1), lost.0.max(lost.1));
    let dropped: BTreeSet<(usize, usize)> = before.difference(&after).copied().collect();
    let gained: BTreeSet<(usize, usize)> = after.difference(&before).copied().collect();
    if !gained.is_empty() || dropped != BTreeSet::from([lost_key]) {
        return Err(violation(
            item,
            format!("hook removal should drop exactly {lost_key:?}, dropped {dropped:?}, gained {gained:?}"),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::label_two_sided;
    use crate::graph::build_embedded_graph;
    use crate::model::{HookedLShape, Segment};

    fn sh(y: i64, x1: i64, x2: i64) -> Segment {
        Segment::horizontal(y, x1, x2).unwrap()
    }

    fn sv(x: i64, y1: i64, y2: i64) -> Segment {
        Segment::vertical(x, y1, y2).unwrap()
    }

    /// Representation of the triangle 1-2-3 labelled a = [1, 2], b = [3],
    /// with the closing edge (1, 3) withheld.
    fn base_rep_two_a() -> EpgRepresentation {
        let mut paths = BTreeMap::new();
        paths.insert(1, VertexPath::Vertical(sv(3, 0, 2)));
        paths.insert(
            2,
            VertexPath::Hooked(
                HookedLShape::new(
                    sv(1, 0, 2),
                    sh(0, 1, 3),
                    Some(sh(2, 1, 2)),
                    Some(sv(3, 0, 1)),
                )
                .unwrap(),
            ),
        );
        paths.insert(3, VertexPath::Horizontal(sh(2, 0, 3)));
        EpgRepresentation::new(paths).unwrap()
    }

    /// Mirror base: triangle 1-2-3 labelled a = [1], b = [3, 2].
    fn base_rep_two_b() -> EpgRepresentation {
        let mut paths = BTreeMap::new();
        paths.insert(1, VertexPath::Vertical(sv(2, 0, 3)));
        paths.insert(3, VertexPath::Horizontal(sh(3, 0, 2)));
        paths.insert(
            2,
            VertexPath::Hooked(
                HookedLShape::new(
                    sv(0, 1, 3),
                    sh(1, 0, 2),
                    Some(sh(3, 0, 1)),
                    Some(sv(2, 1, 2)),
                )
                .unwrap(),
            ),
        );
        EpgRepresentation::new(paths).unwrap()
    }

    fn triangle() -> EmbeddedGraph {
        build_embedded_graph(&[(1, 2), (2, 3), (3, 1)], None, Some(vec![1, 2, 3])).unwrap()
    }

    #[test]
    fn base_representation_verifies_without_the_closing_edge() {
        let rep = base_rep_two_a();
        let vertices: std::collections::BTreeSet<usize> = [1, 2, 3].into();
        let edges: std::collections::BTreeSet<(usize, usize)> = [(1, 2), (2, 3)].into();
        let report = verify_against_edges(&rep, &vertices, &edges);
        assert!(report.pass, "{report:?}");
        assert_eq!(report.max_bends, 3);
        assert_eq!(report.path_bends[&2], 3);
        assert_eq!(report.path_bends[&1], 0);

        // Against the full triangle the closing edge is reported missing.
        let report = verify_representation(&rep, &triangle());
        assert!(!report.pass);
        assert_eq!(report.missing_edges, vec![(1, 3)]);
        assert!(report.extra_edges.is_empty());
    }

    #[test]
    fn detects_extra_and_malformed() {
        let mut rep = base_rep_two_a();
        // Drop P(3) onto P(1)'s column: the withheld adjacency (1, 3) is
        // realized, and its own top-row contact with P(2) is gone.
        rep.set_path(3, VertexPath::Vertical(sv(3, 1, 2))).unwrap();
        let vertices: std::collections::BTreeSet<usize> = [1, 2, 3].into();
        let edges: std::collections::BTreeSet<(usize, usize)> = [(1, 2), (2, 3)].into();
        let report = verify_against_edges(&rep, &vertices, &edges);
        assert!(!report.pass);
        assert_eq!(report.extra_edges, vec![(1, 3)]);
        assert_eq!(report.missing_edges, vec![(2, 3)]);

        // A closed square of segments is connected with all degrees two:
        // the model accepts the chaining but no simple path covers it.
        let square = VertexPath::Poly(vec![
            sv(10, 0, 2),
            sh(2, 10, 12),
            sv(12, 0, 2),
            sh(0, 10, 12),
        ]);
        let mut paths = BTreeMap::new();
        paths.insert(7, square);
        let rep = EpgRepresentation::new(paths).unwrap();
        let report = verify_against_edges(
            &rep,
            &[7].into(),
            &std::collections::BTreeSet::new(),
        );
        assert!(!report.pass);
        assert_eq!(report.malformed_paths, vec![7]);
    }

    #[test]
    fn shape_classifier_recognizes_the_grammar() {
        assert_eq!(
            classify_shape(&VertexPath::Vertical(sv(0, 0, 5))),
            PathShape::Vertical
        );
        assert_eq!(
            classify_shape(&VertexPath::Horizontal(sh(4, 1, 3))),
            PathShape::Horizontal
        );
        // Plain corner: down then right.
        let l = HookedLShape::new(sv(0, 0, 3), sh(0, 0, 4), None, None).unwrap();
        assert_eq!(classify_shape(&VertexPath::Hooked(l)), PathShape::HookedL);
        // Full hooked L with a left-pointing top hook.
        let hooked = HookedLShape::new(
            sv(2, 0, 3),
            sh(0, 2, 5),
            Some(sh(3, 0, 2)),
            Some(sv(5, 0, 2)),
        )
        .unwrap();
        assert_eq!(
            classify_shape(&VertexPath::Hooked(hooked)),
            PathShape::HookedL
        );
        // Mirrored corner (down then LEFT) is not a hooked L.
        let mirrored = VertexPath::Poly(vec![sv(4, 1, 3), sh(1, 0, 4)]);
        assert_eq!(classify_shape(&mirrored), PathShape::Other);
        // Staircase with four runs in the wrong orientation.
        let stairs = VertexPath::Poly(vec![sh(0, 0, 2), sv(2, 0, 2), sh(2, 2, 4), sv(4, 2, 4)]);
        assert_eq!(classify_shape(&stairs), PathShape::Other);
    }

    #[test]
    fn audits_both_base_shapes() {
        let g = triangle();
        let t = label_two_sided(&g, 2).unwrap();
        assert_eq!(t.a(), &[1, 2]);
        assert_eq!(t.b(), &[3]);
        audit_invariants(&base_rep_two_a(), &t).unwrap();

        let t = label_two_sided(&g, 1).unwrap();
        assert_eq!(t.a(), &[1]);
        assert_eq!(t.b(), &[3, 2]);
        audit_invariants(&base_rep_two_b(), &t).unwrap();
    }

    #[test]
    fn audit_rejects_boundary_defects() {
        let g = triangle();
        let t = label_two_sided(&g, 2).unwrap();

        // Shorten the top path: it no longer spans the whole top side.
        let mut rep = base_rep_two_a();
        rep.set_path(3, VertexPath::Horizontal(sh(2, 0, 2))).unwrap();
        let err = audit_invariants(&rep, &t).unwrap_err().to_string();
        assert!(err.contains("item 4b"), "{err}");

        // Remove the right hook of P(a_p): the a-side adjacency (1, 2)
        // vanishes, which item 1 reports.
        let mut rep = base_rep_two_a();
        let hook = HookedLShape::new(sv(1, 0, 2), sh(0, 1, 3), Some(sh(2, 1, 2)), None).unwrap();
        rep.set_path(2, VertexPath::Hooked(hook)).unwrap();
        let err = audit_invariants(&rep, &t).unwrap_err().to_string();
        assert!(err.contains("item 1"), "{err}");

        // Extend P(a_1) below the boundary: the hexagon grows a notch that
        // the extraction rejects.
        let mut rep = base_rep_two_a();
        rep.set_path(1, VertexPath::Vertical(sv(3, -1, 2))).unwrap();
        assert!(audit_invariants(&rep, &t).is_err());
    }

    #[test]
    fn audit_checks_the_removable_hooks() {
        // Give P(a_p)'s top hook a second customer by stretching it to
        // overlap P(b_1) where P(2) already touches: drop-exactness then
        // fails only if the hook carries more than the one adjacency.
        // Here instead remove the top hook entirely but keep the edge via
        // a bogus extra overlap elsewhere — simplest honest case: strip
        // the hook and watch item 1 complain about the missing (2, 3).
        let g = triangle();
        let t = label_two_sided(&g, 2).unwrap();
        let mut rep = base_rep_two_a();
        let hook =
            HookedLShape::new(sv(1, 0, 2), sh(0, 1, 3), None, Some(sv(3, 0, 1))).unwrap();
        rep.set_path(2, VertexPath::Hooked(hook)).unwrap();
        let err = audit_invariants(&rep, &t).unwrap_err().to_string();
        assert!(err.contains("item 1"), "{err}");
    }
}
