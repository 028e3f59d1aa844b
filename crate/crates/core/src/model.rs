//! Grid geometry: points, unit grid edges, axis-parallel segments, vertex
//! paths, and whole representations with their surgical operations.
//!
//! # Model
//!
//! A representation maps each vertex to a path in the rectangular grid.
//! Two vertices are adjacent in the represented graph exactly when their
//! paths share at least one unit-length grid edge (sharing a single point
//! does not count). The *ownership* map records, for every unit grid edge,
//! which vertices' paths cover it; the induced *intersection graph* is the
//! oracle every construction step is checked against.
//!
//! # Path shapes
//!
//! The construction only ever produces four path shapes:
//!
//! * a vertical segment,
//! * a horizontal segment,
//! * a **hooked L-shape**: a mandatory vertical part `ell` whose bottom end
//!   coincides with the left end of a mandatory horizontal part `down`,
//!   plus an optional horizontal hook `top` attached at `ell`'s top end and
//!   an optional vertical hook `right` attached at `down`'s right end —
//!   at most three bends in total,
//! * a two-piece polyline (used once, at the very end of a build).
//!
//! # Surgical operations
//!
//! [`EpgRepresentation::insert_empty_columns`] / `insert_empty_rows` open a
//! gap in the grid: every endpoint at or beyond the cut shifts, so segments
//! spanning the cut stretch. [`EpgRepresentation::translate_paths`] moves a
//! group of paths left or down while *stretching* the segments that tie the
//! group to the rest. Both operations re-derive the intersection graph
//! afterwards and refuse to commit if it changed.

use std::collections::{BTreeMap, BTreeSet};

use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Points and unit edges
// ---------------------------------------------------------------------------

/// A lattice point of the grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// This point shifted by `(dx, dy)`.
    pub fn offset(self, dx: i64, dy: i64) -> Self {
        Self { x: self.x + dx, y: self.y + dy }
    }

    /// This point with coordinates swapped.
    pub fn transposed(self) -> Self {
        Self { x: self.y, y: self.x }
    }
}

impl std::fmt::Display for GridPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A unit-length grid edge, identified by its left (horizontal) or bottom
/// (vertical) endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridEdge {
    pub p: GridPoint,
    pub horizontal: bool,
}

impl GridEdge {
    /// Both endpoints, smaller first.
    pub fn endpoints(self) -> (GridPoint, GridPoint) {
        let q = if self.horizontal { self.p.offset(1, 0) } else { self.p.offset(0, 1) };
        (self.p, q)
    }

    /// The edge reflected across the main diagonal.
    pub fn transposed(self) -> Self {
        Self { p: self.p.transposed(), horizontal: !self.horizontal }
    }
}

impl std::fmt::Display for GridEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (a, b) = self.endpoints();
        write!(f, "{a}-{b}")
    }
}

// ---------------------------------------------------------------------------
// Segments
// ---------------------------------------------------------------------------

/// An axis-parallel segment of positive length, stored with its smaller
/// endpoint first (left end for horizontal, bottom end for vertical).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    a: GridPoint,
    b: GridPoint,
}

impl Segment {
    /// A segment between two points, which must be axis-aligned and
    /// distinct; the endpoints are normalized.
    pub fn new(p: GridPoint, q: GridPoint) -> Result<Self> {
        if p == q || (p.x != q.x && p.y != q.y) {
            return Err(Error::InvariantViolation(format!(
                "segment {p}-{q} must be axis-parallel with positive length"
            )));
        }
        Ok(if p < q { Self { a: p, b: q } } else { Self { a: q, b: p } })
    }

    /// The horizontal segment at height `y` spanning `x1..x2`.
    pub fn horizontal(y: i64, x1: i64, x2: i64) -> Result<Self> {
        Self::new(GridPoint::new(x1, y), GridPoint::new(x2, y))
    }

    /// The vertical segment at `x` spanning `y1..y2`.
    pub fn vertical(x: i64, y1: i64, y2: i64) -> Result<Self> {
        Self::new(GridPoint::new(x, y1), GridPoint::new(x, y2))
    }

    /// Left (horizontal) or bottom (vertical) endpoint.
    pub fn a(&self) -> GridPoint {
        self.a
    }

    /// Right (horizontal) or top (vertical) endpoint.
    pub fn b(&self) -> GridPoint {
        self.b
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }

    pub fn is_vertical(&self) -> bool {
        self.a.x == self.b.x
    }

    /// Number of unit edges covered.
    pub fn length(&self) -> i64 {
        (self.b.x - self.a.x) + (self.b.y - self.a.y)
    }

    /// The unit edges covered, in increasing order.
    pub fn unit_edges(&self) -> Vec<GridEdge> {
        let mut out = Vec::with_capacity(self.length() as usize);
        if self.is_horizontal() {
            for x in self.a.x..self.b.x {
                out.push(GridEdge { p: GridPoint::new(x, self.a.y), horizontal: true });
            }
        } else {
            for y in self.a.y..self.b.y {
                out.push(GridEdge { p: GridPoint::new(self.a.x, y), horizontal: false });
            }
        }
        out
    }

    /// All lattice points on the segment.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut out = vec![self.a];
        out.extend(self.unit_edges().into_iter().map(|e| e.endpoints().1));
        out
    }

    /// Whether `p` lies on the segment (endpoints included).
    pub fn contains_point(&self, p: GridPoint) -> bool {
        if self.is_horizontal() {
            p.y == self.a.y && self.a.x <= p.x && p.x <= self.b.x
        } else {
            p.x == self.a.x && self.a.y <= p.y && p.y <= self.b.y
        }
    }

    /// Whether `e` is one of this segment's unit edges.
    pub fn contains_edge(&self, e: GridEdge) -> bool {
        let (p, q) = e.endpoints();
        e.horizontal == self.is_horizontal() && self.contains_point(p) && self.contains_point(q)
    }

    /// This segment rigidly shifted by `(dx, dy)`.
    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        Self { a: self.a.offset(dx, dy), b: self.b.offset(dx, dy) }
    }

    /// This segment reflected across the main diagonal.
    pub fn transposed(&self) -> Self {
        // Swapping coordinates preserves the lexicographic endpoint order
        // for axis-parallel segments.
        Self { a: self.a.transposed(), b: self.b.transposed() }
    }
}

impl std::fmt::Display for Segment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

/// A hooked L-shape: vertical `ell` meeting horizontal `down` at `ell`'s
/// bottom / `down`'s left end, an optional horizontal `top` hook with one
/// end at `ell`'s top, and an optional vertical `right` hook with one end
/// at `down`'s right end. At most three bends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookedLShape {
    pub ell: Segment,
    pub down: Segment,
    pub top: Option<Segment>,
    pub right: Option<Segment>,
}

impl HookedLShape {
    pub fn new(
        ell: Segment,
        down: Segment,
        top: Option<Segment>,
        right: Option<Segment>,
    ) -> Result<Self> {
        let shape = Self { ell, down, top, right };
        shape.validate()?;
        Ok(shape)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.ell.is_vertical() {
            return Err(Error::InvariantViolation(format!(
                "hooked shape: ell {} is not vertical",
                self.ell
            )));
        }
        if !self.down.is_horizontal() {
            return Err(Error::InvariantViolation(format!(
                "hooked shape: down {} is not horizontal",
                self.down
            )));
        }
        if self.ell.a() != self.down.a() {
            return Err(Error::InvariantViolation(format!(
                "hooked shape: ell bottom {} and down left end {} disagree",
                self.ell.a(),
                self.down.a()
            )));
        }
        if let Some(t) = self.top {
            if !t.is_horizontal() || (t.a() != self.ell.b() && t.b() != self.ell.b()) {
                return Err(Error::InvariantViolation(format!(
                    "hooked shape: top hook {} is not horizontal at ell's top {}",
                    t,
                    self.ell.b()
                )));
            }
        }
        if let Some(r) = self.right {
            if !r.is_vertical() || (r.a() != self.down.b() && r.b() != self.down.b()) {
                return Err(Error::InvariantViolation(format!(
                    "hooked shape: right hook {} is not vertical at down's right end {}",
                    r,
                    self.down.b()
                )));
            }
        }
        Ok(())
    }

    /// Whether the top hook extends rightward from `ell`'s top (its left
    /// end is the attachment).
    pub fn top_extends_right(&self) -> Option<bool> {
        self.top.map(|t| t.a() == self.ell.b())
    }

    /// Reflection across the main diagonal: `ell` and `down` trade roles,
    /// as do `top` and `right`.
    pub fn transposed(&self) -> Self {
        Self {
            ell: self.down.transposed(),
            down: self.ell.transposed(),
            top: self.right.map(|s| s.transposed()),
            right: self.top.map(|s| s.transposed()),
        }
    }
}

/// One vertex's grid path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexPath {
    Vertical(Segment),
    Horizontal(Segment),
    Hooked(HookedLShape),
    /// A chain of segments, each sharing an endpoint with the next. Used
    /// only for the final corner extension of a finished representation.
    Poly(Vec<Segment>),
}

impl VertexPath {
    pub fn validate(&self) -> Result<()> {
        match self {
            VertexPath::Vertical(s) => {
                if !s.is_vertical() {
                    return Err(Error::InvariantViolation(format!(
                        "vertical path holds non-vertical segment {s}"
                    )));
                }
            }
            VertexPath::Horizontal(s) => {
                if !s.is_horizontal() {
                    return Err(Error::InvariantViolation(format!(
                        "horizontal path holds non-horizontal segment {s}"
                    )));
                }
            }
            VertexPath::Hooked(h) => h.validate()?,
            VertexPath::Poly(segs) => {
                if segs.is_empty() {
                    return Err(Error::InvariantViolation("empty polyline path".into()));
                }
                for w in segs.windows(2) {
                    let (s, t) = (&w[0], &w[1]);
                    let touches = [s.a(), s.b()]
                        .iter()
                        .any(|p| *p == t.a() || *p == t.b());
                    if !touches {
                        return Err(Error::InvariantViolation(format!(
                            "polyline pieces {s} and {t} do not share an endpoint"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The segments of the path in chain order (`top`, `ell`, `down`,
    /// `right` for hooked shapes).
    pub fn segments(&self) -> Vec<Segment> {
        match self {
            VertexPath::Vertical(s) | VertexPath::Horizontal(s) => vec![*s],
            VertexPath::Hooked(h) => {
                let mut out = Vec::with_capacity(4);
                if let Some(t) = h.top {
                    out.push(t);
                }
                out.push(h.ell);
                out.push(h.down);
                if let Some(r) = h.right {
                    out.push(r);
                }
                out
            }
            VertexPath::Poly(segs) => segs.clone(),
        }
    }

    /// The set of unit edges the path covers.
    pub fn unit_edges(&self) -> BTreeSet<GridEdge> {
        self.segments().iter().flat_map(Segment::unit_edges).collect()
    }

    /// All lattice points the path covers.
    pub fn points(&self) -> BTreeSet<GridPoint> {
        self.segments().iter().flat_map(Segment::points).collect()
    }

    pub fn as_hooked(&self) -> Option<&HookedLShape> {
        match self {
            VertexPath::Hooked(h) => Some(h),
            _ => None,
        }
    }

    pub fn as_vertical(&self) -> Option<&Segment> {
        match self {
            VertexPath::Vertical(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_horizontal(&self) -> Option<&Segment> {
        match self {
            VertexPath::Horizontal(s) => Some(s),
            _ => None,
        }
    }

    /// Reflection across the main diagonal.
    pub fn transposed(&self) -> Self {
        match self {
            VertexPath::Vertical(s) => VertexPath::Horizontal(s.transposed()),
            VertexPath::Horizontal(s) => VertexPath::Vertical(s.transposed()),
            VertexPath::Hooked(h) => VertexPath::Hooked(h.transposed()),
            VertexPath::Poly(segs) => {
                VertexPath::Poly(segs.iter().map(Segment::transposed).collect())
            }
        }
    }

    /// Rigid shift by `(dx, dy)`.
    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        match self {
            VertexPath::Vertical(s) => VertexPath::Vertical(s.translated(dx, dy)),
            VertexPath::Horizontal(s) => VertexPath::Horizontal(s.translated(dx, dy)),
            VertexPath::Hooked(h) => VertexPath::Hooked(HookedLShape {
                ell: h.ell.translated(dx, dy),
                down: h.down.translated(dx, dy),
                top: h.top.map(|s| s.translated(dx, dy)),
                right: h.right.map(|s| s.translated(dx, dy)),
            }),
            VertexPath::Poly(segs) => {
                VertexPath::Poly(segs.iter().map(|s| s.translated(dx, dy)).collect())
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

/// A grid-path representation: one path per vertex id.
///
/// Equality compares each vertex's set of segments, so two representations
/// are equal exactly when they draw the same geometry for every vertex.
#[derive(Clone, Debug)]
pub struct EpgRepresentation {
    paths: BTreeMap<usize, VertexPath>,
}

impl PartialEq for EpgRepresentation {
    fn eq(&self, other: &Self) -> bool {
        if self.paths.len() != other.paths.len() {
            return false;
        }
        self.paths.iter().all(|(v, p)| {
            other.paths.get(v).is_some_and(|q| {
                p.segments().into_iter().collect::<BTreeSet<_>>()
                    == q.segments().into_iter().collect::<BTreeSet<_>>()
            })
        })
    }
}

impl Eq for EpgRepresentation {}

impl EpgRepresentation {
    pub fn new(paths: BTreeMap<usize, VertexPath>) -> Result<Self> {
        for (v, p) in &paths {
            p.validate().map_err(|e| {
                Error::InvariantViolation(format!("path of vertex {v}: {e}"))
            })?;
        }
        Ok(Self { paths })
    }

    pub fn paths(&self) -> &BTreeMap<usize, VertexPath> {
        &self.paths
    }

    pub fn into_paths(self) -> BTreeMap<usize, VertexPath> {
        self.paths
    }

    pub fn path(&self, v: usize) -> Option<&VertexPath> {
        self.paths.get(&v)
    }

    pub fn vertex_ids(&self) -> Vec<usize> {
        self.paths.keys().copied().collect()
    }

    /// Replaces (or adds) the path of `v` after validating it.
    pub fn set_path(&mut self, v: usize, path: VertexPath) -> Result<()> {
        path.validate()
            .map_err(|e| Error::InvariantViolation(format!("path of vertex {v}: {e}")))?;
        self.paths.insert(v, path);
        Ok(())
    }

    pub fn remove_path(&mut self, v: usize) -> Option<VertexPath> {
        self.paths.remove(&v)
    }

    /// Keeps only the paths of `keep`.
    pub fn retain_vertices(&mut self, keep: &BTreeSet<usize>) {
        self.paths.retain(|v, _| keep.contains(v));
    }

    /// For every unit grid edge, the set of vertices whose paths cover it.
    pub fn ownership(&self) -> BTreeMap<GridEdge, BTreeSet<usize>> {
        let mut own: BTreeMap<GridEdge, BTreeSet<usize>> = BTreeMap::new();
        for (&v, path) in &self.paths {
            for e in path.unit_edges() {
                own.entry(e).or_default().insert(v);
            }
        }
        own
    }

    /// The vertices whose paths cover `e`.
    pub fn owners_of(&self, e: GridEdge) -> BTreeSet<usize> {
        self.paths
            .iter()
            .filter(|(_, p)| p.unit_edges().contains(&e))
            .map(|(&v, _)| v)
            .collect()
    }

    /// Pairs of vertices whose paths share at least one unit edge — the
    /// edge set of the graph this representation represents.
    pub fn intersection_graph(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for owners in self.ownership().values() {
            let list: Vec<usize> = owners.iter().copied().collect();
            for (i, &u) in list.iter().enumerate() {
                for &v in &list[i + 1..] {
                    out.insert((u, v));
                }
            }
        }
        out
    }

    /// The largest number of paths sharing a single unit edge.
    pub fn max_multiplicity(&self) -> usize {
        self.ownership().values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// All lattice points covered by any path.
    pub fn covered_points(&self) -> BTreeSet<GridPoint> {
        self.paths.values().flat_map(VertexPath::points).collect()
    }

    /// Rigidly shifts every path by `(dx, dy)`.
    pub fn translate_all(&mut self, dx: i64, dy: i64) {
        for p in self.paths.values_mut() {
            *p = p.translated(dx, dy);
        }
    }

    /// Reflection of the whole representation across the main diagonal.
    pub fn transposed(&self) -> Self {
        Self {
            paths: self.paths.iter().map(|(&v, p)| (v, p.transposed())).collect(),
        }
    }

    /// Opens `count` empty columns at `x = at`: every endpoint with
    /// `x ≥ at` shifts right by `count`, so segments spanning the cut
    /// stretch. The intersection graph is re-derived afterwards; the
    /// operation fails (and leaves the representation untouched) if it
    /// changed.
    pub fn insert_empty_columns(&mut self, at: i64, count: i64) -> Result<()> {
        self.checked_transform(|p| {
            Ok(map_path_points(p, |q| {
                if q.x >= at {
                    q.offset(count, 0)
                } else {
                    q
                }
            }))
        }, count, "insert_empty_columns")
    }

    /// Opens `count` empty rows at `y = at`; the vertical counterpart of
    /// [`EpgRepresentation::insert_empty_columns`].
    pub fn insert_empty_rows(&mut self, at: i64, count: i64) -> Result<()> {
        self.checked_transform(|p| {
            Ok(map_path_points(p, |q| {
                if q.y >= at {
                    q.offset(0, count)
                } else {
                    q
                }
            }))
        }, count, "insert_empty_rows")
    }

    fn checked_transform(
        &mut self,
        f: impl Fn(&VertexPath) -> Result<VertexPath>,
        count: i64,
        what: &str,
    ) -> Result<()> {
        if count < 0 {
            return Err(Error::InvariantViolation(format!("{what}: negative count {count}")));
        }
        if count == 0 {
            return Ok(());
        }
        let before = self.intersection_graph();
        let mut next = BTreeMap::new();
        for (&v, p) in &self.paths {
            let q = f(p)?;
            q.validate()?;
            next.insert(v, q);
        }
        let candidate = Self { paths: next };
        let after = candidate.intersection_graph();
        if before != after {
            return Err(Error::ConnectivityBroken(format!(
                "{what} changed the intersection graph"
            )));
        }
        *self = candidate;
        Ok(())
    }

    /// Moves the paths of `verts` left (`dx < 0, dy = 0`) or down
    /// (`dy < 0, dx = 0`), stretching the segments that tie the moved group
    /// to everything else:
    ///
    /// * moving left: `ell` shifts; `down` stretches from its left end;
    ///   a `top` hook must extend rightward and stretches from its attached
    ///   end; `right` hooks stay; horizontal segments stretch from their
    ///   left end; vertical segments shift.
    /// * moving down: `down` shifts; `ell` stretches from its bottom end;
    ///   a `right` hook must extend upward and stretches from its attached
    ///   end; `top` hooks stay; vertical segments stretch from their bottom
    ///   end; horizontal segments shift.
    ///
    /// Fails without committing if the moved set is unknown, a shape is
    /// incompatible, or the intersection graph changes.
    pub fn translate_paths(&mut self, verts: &BTreeSet<usize>, dx: i64, dy: i64) -> Result<()> {
        for v in verts {
            if !self.paths.contains_key(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        let leftward = dx < 0 && dy == 0;
        let downward = dy < 0 && dx == 0;
        if !(leftward || downward) {
            return Err(Error::InvariantViolation(format!(
                "translate_paths: delta ({dx}, {dy}) must be negative along exactly one axis"
            )));
        }
        let before = self.intersection_graph();
        let mut next = self.paths.clone();
        for &v in verts {
            let moved = if leftward {
                move_path_left(&self.paths[&v], dx)
            } else {
                move_path_down(&self.paths[&v], dy)
            }
            .map_err(|e| Error::InvariantViolation(format!("moving vertex {v}: {e}")))?;
            moved.validate()?;
            next.insert(v, moved);
        }
        let candidate = Self { paths: next };
        let after = candidate.intersection_graph();
        if before != after {
            let gained: Vec<_> = after.difference(&before).collect();
            let lost: Vec<_> = before.difference(&after).collect();
            return Err(Error::ConnectivityBroken(format!(
                "translate_paths changed the intersection graph (gained {gained:?}, lost {lost:?})"
            )));
        }
        *self = candidate;
        Ok(())
    }
}

/// Applies a monotone endpoint transform to every segment of a path,
/// preserving its structure.
fn map_path_points(path: &VertexPath, f: impl Fn(GridPoint) -> GridPoint) -> VertexPath {
    let map_seg = |s: &Segment| {
        Segment::new(f(s.a()), f(s.b())).expect("monotone transforms preserve segments")
    };
    match path {
        VertexPath::Vertical(s) => VertexPath::Vertical(map_seg(s)),
        VertexPath::Horizontal(s) => VertexPath::Horizontal(map_seg(s)),
        VertexPath::Hooked(h) => VertexPath::Hooked(HookedLShape {
            ell: map_seg(&h.ell),
            down: map_seg(&h.down),
            top: h.top.as_ref().map(&map_seg),
            right: h.right.as_ref().map(&map_seg),
        }),
        VertexPath::Poly(segs) => VertexPath::Poly(segs.iter().map(map_seg).collect()),
    }
}

fn move_path_left(path: &VertexPath, dx: i64) -> Result<VertexPath> {
    Ok(match path {
        VertexPath::Vertical(s) => VertexPath::Vertical(s.translated(dx, 0)),
        VertexPath::Horizontal(s) => {
            VertexPath::Horizontal(Segment::new(s.a().offset(dx, 0), s.b())?)
        }
        VertexPath::Hooked(h) => {
            let top = match h.top {
                None => None,
                Some(t) => {
                    if t.a() != h.ell.b() {
                        return Err(Error::InvariantViolation(format!(
                            "leftward move would drag the left-extending top hook {t}"
                        )));
                    }
                    Some(Segment::new(t.a().offset(dx, 0), t.b())?)
                }
            };
            VertexPath::Hooked(HookedLShape {
                ell: h.ell.translated(dx, 0),
                down: Segment::new(h.down.a().offset(dx, 0), h.down.b())?,
                top,
                right: h.right,
            })
        }
        VertexPath::Poly(_) => {
            return Err(Error::InvariantViolation(
                "polyline paths cannot be moved with stretching".into(),
            ))
        }
    })
}

fn move_path_down(path: &VertexPath, dy: i64) -> Result<VertexPath> {
    Ok(match path {
        VertexPath::Vertical(s) => {
            VertexPath::Vertical(Segment::new(s.a().offset(0, dy), s.b())?)
        }
        VertexPath::Horizontal(s) => VertexPath::Horizontal(s.translated(0, dy)),
        VertexPath::Hooked(h) => {
            let right = match h.right {
                None => None,
                Some(r) => {
                    if r.a() != h.down.b() {
                        return Err(Error::InvariantViolation(format!(
                            "downward move would drag the down-extending right hook {r}"
                        )));
                    }
                    Some(Segment::new(r.a().offset(0, dy), r.b())?)
                }
            };
            VertexPath::Hooked(HookedLShape {
                ell: Segment::new(h.ell.a().offset(0, dy), h.ell.b())?,
                down: h.down.translated(0, dy),
                top: h.top,
                right,
            })
        }
        VertexPath::Poly(_) => {
            return Err(Error::InvariantViolation(
                "polyline paths cannot be moved with stretching".into(),
            ))
        }
    })
}

// ---------------------------------------------------------------------------
// Boundary
// ---------------------------------------------------------------------------

/// The outer boundary of a representation in progress: an orthogonal
/// hexagon with corners, clockwise,
/// `(x_l, y_t), (x_r, y_t), (x_r, y_b), (x_m, y_b), (x_m, y_m), (x_l, y_m)`,
/// the fifth of which is reflex; the open quadrant left of and below the
/// reflex corner contains nothing.
///
/// Degenerate cases: `y_m = y_t` (single-vertex right side history) leaves
/// a one-row antenna sticking out left at the top, and `x_m = x_r` leaves a
/// one-column antenna sticking out below at the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryHexagon {
    pub x_l: i64,
    pub x_r: i64,
    pub x_m: i64,
    pub y_b: i64,
    pub y_t: i64,
    pub y_m: i64,
}

impl BoundaryHexagon {
    /// Corner points in clockwise order starting at the top-left.
    pub fn corners(&self) -> [GridPoint; 6] {
        [
            GridPoint::new(self.x_l, self.y_t),
            GridPoint::new(self.x_r, self.y_t),
            GridPoint::new(self.x_r, self.y_b),
            GridPoint::new(self.x_m, self.y_b),
            GridPoint::new(self.x_m, self.y_m),
            GridPoint::new(self.x_l, self.y_m),
        ]
    }

    /// Whether `p` lies inside the hexagon region (boundary included).
    pub fn contains(&self, p: GridPoint) -> bool {
        self.x_l <= p.x
            && p.x <= self.x_r
            && self.y_b <= p.y
            && p.y <= self.y_t
            && !(p.x < self.x_m && p.y < self.y_m)
    }
}

/// Derives the boundary hexagon of a representation from its covered
/// points: the bounding box gives four of the six corner coordinates, the
/// lowest covered point of the leftmost column gives `y_m`, and the
/// leftmost covered point of the bottom row gives `x_m`. Fails if any
/// covered point then lies outside the hexagon region.
pub fn boundary_hexagon(rep: &EpgRepresentation) -> Result<BoundaryHexagon> {
    let pts = rep.covered_points();
    if pts.is_empty() {
        return Err(Error::NotHexagonal("representation covers no points".into()));
    }
    let x_l = pts.iter().map(|p| p.x).min().unwrap();
    let x_r = pts.iter().map(|p| p.x).max().unwrap();
    let y_b = pts.iter().map(|p| p.y).min().unwrap();
    let y_t = pts.iter().map(|p| p.y).max().unwrap();
    let y_m = pts.iter().filter(|p| p.x == x_l).map(|p| p.y).min().unwrap();
    let x_m = pts.iter().filter(|p| p.y == y_b).map(|p| p.x).min().unwrap();
    let hex = BoundaryHexagon { x_l, x_r, x_m, y_b, y_t, y_m };
    for p in &pts {
        if !hex.contains(*p) {
            return Err(Error::NotHexagonal(format!(
                "covered point {p} lies in the cut-away corner of {hex:?}"
            )));
        }
    }
    Ok(hex)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(y: i64, x1: i64, x2: i64) -> Segment {
        Segment::horizontal(y, x1, x2).unwrap()
    }

    fn sv(x: i64, y1: i64, y2: i64) -> Segment {
        Segment::vertical(x, y1, y2).unwrap()
    }

    /// The two-path base representation used throughout: `1` and `2` on one
    /// side, `3` on the other (drawn for the graph missing the `1`–`3`
    /// edge).
    fn base_rep() -> EpgRepresentation {
        let mut paths = BTreeMap::new();
        paths.insert(3, VertexPath::Horizontal(sh(2, 0, 3)));
        paths.insert(1, VertexPath::Vertical(sv(3, 0, 2)));
        paths.insert(
            2,
            VertexPath::Hooked(
                HookedLShape::new(sv(1, 0, 2), sh(0, 1, 3), Some(sh(2, 1, 2)), Some(sv(3, 0, 1)))
                    .unwrap(),
            ),
        );
        EpgRepresentation::new(paths).unwrap()
    }

    #[test]
    fn segments_normalize_and_enumerate() {
        let s = Segment::new(GridPoint::new(3, 1), GridPoint::new(0, 1)).unwrap();
        assert_eq!(s.a(), GridPoint::new(0, 1));
        assert_eq!(s.b(), GridPoint::new(3, 1));
        assert!(s.is_horizontal());
        assert_eq!(s.length(), 3);
        assert_eq!(s.unit_edges().len(), 3);
        assert_eq!(s.points().len(), 4);
        assert!(s.contains_edge(GridEdge { p: GridPoint::new(2, 1), horizontal: true }));
        assert!(!s.contains_edge(GridEdge { p: GridPoint::new(3, 1), horizontal: true }));
        assert!(Segment::new(GridPoint::new(0, 0), GridPoint::new(0, 0)).is_err());
        assert!(Segment::new(GridPoint::new(0, 0), GridPoint::new(1, 1)).is_err());
    }

    #[test]
    fn hooked_shape_validation() {
        // Detached down part.
        assert!(HookedLShape::new(sv(1, 0, 2), sh(0, 2, 3), None, None).is_err());
        // Top hook not at ell's top.
        assert!(HookedLShape::new(sv(1, 0, 2), sh(0, 1, 3), Some(sh(1, 1, 2)), None).is_err());
        // Left-extending top hook is allowed.
        let h = HookedLShape::new(sv(1, 0, 2), sh(0, 1, 3), Some(sh(2, 0, 1)), None).unwrap();
        assert_eq!(h.top_extends_right(), Some(false));
    }

    #[test]
    fn intersection_graph_of_base() {
        let rep = base_rep();
        let g = rep.intersection_graph();
        assert_eq!(g, BTreeSet::from([(1, 2), (2, 3)]));
        assert_eq!(rep.max_multiplicity(), 2);
        // Paths 1 and 3 meet in the point (3, 2) only — no shared edge.
        let one: BTreeSet<_> = rep.path(1).unwrap().unit_edges();
        let three: BTreeSet<_> = rep.path(3).unwrap().unit_edges();
        assert!(one.is_disjoint(&three));
    }

    #[test]
    fn column_insertion_stretches_spanning_segments() {
        let mut rep = base_rep();
        rep.insert_empty_columns(2, 3).unwrap();
        assert_eq!(rep.path(3).unwrap().as_horizontal().unwrap(), &sh(2, 0, 6));
        assert_eq!(rep.path(1).unwrap().as_vertical().unwrap(), &sv(6, 0, 2));
        let h = rep.path(2).unwrap().as_hooked().unwrap();
        assert_eq!(h.ell, sv(1, 0, 2));
        assert_eq!(h.down, sh(0, 1, 6));
        assert_eq!(h.top, Some(sh(2, 1, 5)));
        assert_eq!(h.right, Some(sv(6, 0, 1)));
        assert_eq!(rep.intersection_graph(), BTreeSet::from([(1, 2), (2, 3)]));
    }

    #[test]
    fn row_insertion_preserves_the_graph() {
        let mut rep = base_rep();
        rep.insert_empty_rows(1, 2).unwrap();
        assert_eq!(rep.intersection_graph(), BTreeSet::from([(1, 2), (2, 3)]));
        assert_eq!(rep.path(1).unwrap().as_vertical().unwrap(), &sv(3, 0, 4));
        let h = rep.path(2).unwrap().as_hooked().unwrap();
        assert_eq!(h.ell, sv(1, 0, 4));
        assert_eq!(h.top, Some(sh(4, 1, 2)));
    }

    #[test]
    fn leftward_move_stretches_ties() {
        let mut rep = base_rep();
        rep.translate_paths(&BTreeSet::from([3]), -2, 0).unwrap();
        assert_eq!(rep.path(3).unwrap().as_horizontal().unwrap(), &sh(2, -2, 3));

        rep.translate_paths(&BTreeSet::from([2]), -1, 0).unwrap();
        let h = rep.path(2).unwrap().as_hooked().unwrap();
        assert_eq!(h.ell, sv(0, 0, 2));
        assert_eq!(h.down, sh(0, 0, 3));
        assert_eq!(h.top, Some(sh(2, 0, 2)));
        assert_eq!(h.right, Some(sv(3, 0, 1)));
        assert_eq!(rep.intersection_graph(), BTreeSet::from([(1, 2), (2, 3)]));
    }

    #[test]
    fn downward_move_stretches_ties() {
        let mut rep = base_rep();
        rep.translate_paths(&BTreeSet::from([1]), 0, -2).unwrap();
        assert_eq!(rep.path(1).unwrap().as_vertical().unwrap(), &sv(3, -2, 2));
        assert_eq!(rep.intersection_graph(), BTreeSet::from([(1, 2), (2, 3)]));
    }

    #[test]
    fn breaking_moves_are_refused() {
        // Two horizontal paths sharing one unit edge; shifting one of them
        // down rigidly would sever the contact.
        let mut paths = BTreeMap::new();
        paths.insert(1, VertexPath::Horizontal(sh(0, 0, 2)));
        paths.insert(2, VertexPath::Horizontal(sh(0, 1, 3)));
        let mut rep = EpgRepresentation::new(paths).unwrap();
        let before = rep.clone();
        let err = rep.translate_paths(&BTreeSet::from([2]), 0, -1).unwrap_err();
        assert!(matches!(err, Error::ConnectivityBroken(_)));
        assert_eq!(rep, before, "failed move must not commit");

        // Mixed deltas are rejected outright.
        assert!(rep.translate_paths(&BTreeSet::from([2]), -1, -1).is_err());
        // Positive deltas too.
        assert!(rep.translate_paths(&BTreeSet::from([2]), 1, 0).is_err());
    }

    #[test]
    fn transpose_is_an_involution() {
        let rep = base_rep();
        let back = rep.transposed().transposed();
        assert_eq!(rep, back);
        // Transposed paths still validate, and hooks swap roles.
        let t = rep.transposed();
        for p in t.paths().values() {
            p.validate().unwrap();
        }
        let h = t.path(2).unwrap().as_hooked().unwrap();
        assert_eq!(h.ell, sv(0, 1, 3));
        assert_eq!(h.down, sh(1, 0, 2));
        // Intersection graph is untouched by reflection.
        assert_eq!(t.intersection_graph(), rep.intersection_graph());
    }

    #[test]
    fn boundary_of_base_is_a_degenerate_hexagon() {
        let rep = base_rep();
        let hex = boundary_hexagon(&rep).unwrap();
        assert_eq!(
            hex,
            BoundaryHexagon { x_l: 0, x_r: 3, x_m: 1, y_b: 0, y_t: 2, y_m: 2 }
        );
        // One-row antenna at the top-left: x_m − x_l = 1, y_m = y_t.
        assert_eq!(hex.x_m - hex.x_l, 1);
        assert_eq!(hex.y_m, hex.y_t);
    }

    #[test]
    fn boundary_rejects_points_in_the_cut_corner() {
        let mut paths = BTreeMap::new();
        // An L-shaped region with a stray path inside the cut-away corner.
        paths.insert(1, VertexPath::Horizontal(sh(5, 0, 4)));
        paths.insert(2, VertexPath::Vertical(sv(4, 0, 5)));
        paths.insert(3, VertexPath::Horizontal(sh(0, 2, 4)));
        paths.insert(4, VertexPath::Horizontal(sh(1, 1, 2)));
        let rep = EpgRepresentation::new(paths).unwrap();
        assert!(matches!(boundary_hexagon(&rep), Err(Error::NotHexagonal(_))));
    }

    #[test]
    fn ownership_counts_every_cover() {
        let rep = base_rep();
        let own = rep.ownership();
        let e = GridEdge { p: GridPoint::new(1, 2), horizontal: true };
        assert_eq!(own[&e], BTreeSet::from([2, 3]));
        assert_eq!(rep.owners_of(e), BTreeSet::from([2, 3]));
        let e = GridEdge { p: GridPoint::new(3, 0), horizontal: false };
        assert_eq!(own[&e], BTreeSet::from([1, 2]));
    }
}
