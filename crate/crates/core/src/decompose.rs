//! Two-sided near-triangulations and their recursive decomposition.
//!
//! A *two-sided near-triangulation* is a plane graph whose outer face,
//! walked clockwise, spells `a_1, …, a_p, b_q, …, b_1`: an *a-side* path
//! followed by the reverse of a *b-side* path, with `(a_1, b_1)` closing
//! the cycle.  Every inner face is a triangle, the graph is 2-connected,
//! no triangle is separating, and neither side carries a chord.
//!
//! The construction peels such a graph apart one step at a time:
//!
//! - **`ApRemoval`** — delete the last a-side vertex `a_p`; its interior
//!   neighbours join the b-side.
//! - **`BqRemoval`** — the mirror image: delete `b_q`; its interior
//!   neighbours join the a-side.
//! - **`Split`** — when neither removal leaves a valid labelling, the
//!   interior apex `x` of the triangle behind the edge `(a_p, b_q)` cuts
//!   the graph into three smaller two-sided near-triangulations.
//!
//! [`classify_step`] tries the steps in that order and reports which one
//! applies; [`try_ap_removal`], [`try_bq_removal`], and [`find_split`]
//! expose the individual attempts together with the pieces they produce.

use std::collections::BTreeSet;

use crate::graph::{
    canonical_rotation, from_rotations, is_biconnected, rotate_cycle_to, separating_triangles,
    EmbeddedGraph, Rotations,
};
use crate::{Error, Result, Side};

// ---------------------------------------------------------------------------
// Two-sided near-triangulations
// ---------------------------------------------------------------------------

/// A plane near-triangulation whose outer face is labelled by an a-side
/// path and a b-side path, as described in the module docs.
///
/// The struct owns its embedded graph; `a` and `b` store the side paths in
/// index order (`a[0]` is `a_1`, `b[0]` is `b_1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSidedNearTriangulation {
    graph: EmbeddedGraph,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl TwoSidedNearTriangulation {
    /// Validates the labelling and wraps the graph.
    ///
    /// Checks, in order: both sides nonempty and jointly spelling the outer
    /// face without repeats; at least three vertices; 2-connectivity; all
    /// inner faces triangles; no separating triangle; no chord within
    /// either side.
    pub fn new(graph: EmbeddedGraph, a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::NotNearTriangulation(
                "both sides need at least one vertex".into(),
            ));
        }
        let mut cycle = a.clone();
        cycle.extend(b.iter().rev());
        let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
        if distinct.len() != cycle.len() {
            return Err(Error::NotNearTriangulation(
                "side labels repeat a vertex".into(),
            ));
        }
        if canonical_rotation(&cycle) != canonical_rotation(graph.outer()) {
            return Err(Error::NotNearTriangulation(
                "side labels do not spell the outer face".into(),
            ));
        }
        if graph.n() < 3 {
            return Err(Error::NotNearTriangulation(
                "need at least three vertices".into(),
            ));
        }
        if !is_biconnected(&graph) {
            return Err(Error::NotNearTriangulation("graph has a cut vertex".into()));
        }
        for face in graph.inner_faces() {
            if face.len() != 3 {
                return Err(Error::NotNearTriangulation(format!(
                    "inner face {face:?} is not a triangle"
                )));
            }
        }
        if let Some(t) = separating_triangles(&graph).first() {
            return Err(Error::NotNearTriangulation(format!(
                "separating triangle {t:?}"
            )));
        }
        for (side, verts) in [(Side::A, &a), (Side::B, &b)] {
            for i in 0..verts.len() {
                for j in i + 2..verts.len() {
                    if graph.has_edge(verts[i], verts[j]) {
                        return Err(Error::ChordOnSide {
                            side,
                            i: i + 1,
                            j: j + 1,
                        });
                    }
                }
            }
        }
        Ok(Self { graph, a, b })
    }

    /// The underlying embedded graph.
    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    /// The a-side path `a_1, …, a_p`.
    pub fn a(&self) -> &[usize] {
        &self.a
    }

    /// The b-side path `b_1, …, b_q`.
    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// Number of a-side vertices (`p`).
    pub fn p(&self) -> usize {
        self.a.len()
    }

    /// Number of b-side vertices (`q`).
    pub fn q(&self) -> usize {
        self.b.len()
    }

    /// Total number of vertices.
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Whether `v` lies on the outer face.
    pub fn is_outer_vertex(&self, v: usize) -> bool {
        self.a.contains(&v) || self.b.contains(&v)
    }

    /// Whether this is one of the two base shapes: a triangle with either
    /// two a-side vertices or two b-side vertices.
    pub fn is_base(&self) -> bool {
        self.n() == 3
    }
}

/// Labels an embedded graph as a two-sided near-triangulation by cutting
/// its outer face after `split` vertices: the first `split` outer vertices
/// become `a_1, …, a_p` and the rest, reversed, become `b_1, …, b_q`.
pub fn label_two_sided(g: &EmbeddedGraph, split: usize) -> Result<TwoSidedNearTriangulation> {
    let outer = g.outer();
    if split == 0 || split >= outer.len() {
        return Err(Error::NotNearTriangulation(format!(
            "side split {split} must leave both sides of a {}-gon nonempty",
            outer.len()
        )));
    }
    let a = outer[..split].to_vec();
    let b: Vec<usize> = outer[split..].iter().rev().copied().collect();
    TwoSidedNearTriangulation::new(g.clone(), a, b)
}

// ---------------------------------------------------------------------------
// Decomposition steps
// ---------------------------------------------------------------------------

/// The step that reduces a two-sided near-triangulation, as chosen by
/// [`classify_step`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionStep {
    /// Delete `a_p`; `new_b` lists its released interior neighbours in the
    /// order they extend the b-side (`b_{q+1}, …, b_{q+r}`).
    ApRemoval { new_b: Vec<usize> },
    /// Delete `b_q`; `new_a` lists its released interior neighbours in the
    /// order they extend the a-side (`a_{p+1}, …, a_{p+r}`).
    BqRemoval { new_a: Vec<usize> },
    /// Cut at the interior apex `x` of the triangle behind `(a_p, b_q)`,
    /// using its side neighbours `a_i` and `b_j` (1-based indices).
    Split {
        x: usize,
        i: usize,
        j: usize,
        t_prime: Box<TwoSidedNearTriangulation>,
        t_a: Box<TwoSidedNearTriangulation>,
        t_b: Box<TwoSidedNearTriangulation>,
    },
}

/// The pieces produced by a successful [`find_split`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitParts {
    /// Interior apex vertex.
    pub x: usize,
    /// 1-based a-side index of the cut vertex `a_i`.
    pub i: usize,
    /// 1-based b-side index of the cut vertex `b_j`.
    pub j: usize,
    /// Piece keeping `a_1, …, a_i, x` as a-side and `b_1, …, b_j` as b-side.
    pub t_prime: TwoSidedNearTriangulation,
    /// Piece with a-side `a_i, …, a_p` and b-side `x`.
    pub t_a: TwoSidedNearTriangulation,
    /// Piece with a-side `x` and b-side `b_j, …, b_q`.
    pub t_b: TwoSidedNearTriangulation,
}

/// Picks the decomposition step for `t`, trying `a_p`-removal, then
/// `b_q`-removal, then the split, in that order.
///
/// Fails with [`Error::NoValidStep`] when none applies — in particular on
/// the three-vertex base shapes, which are not decomposed further.
pub fn classify_step(t: &TwoSidedNearTriangulation) -> Result<DecompositionStep> {
    if let Some((_, new_b)) = try_ap_removal(t) {
        return Ok(DecompositionStep::ApRemoval { new_b });
    }
    if let Some((_, new_a)) = try_bq_removal(t) {
        return Ok(DecompositionStep::BqRemoval { new_a });
    }
    if let Some(parts) = find_split(t) {
        return Ok(DecompositionStep::Split {
            x: parts.x,
            i: parts.i,
            j: parts.j,
            t_prime: Box::new(parts.t_prime),
            t_a: Box::new(parts.t_a),
            t_b: Box::new(parts.t_b),
        });
    }
    Err(Error::NoValidStep)
}

/// Rotations of `g` restricted to the vertices in `keep`.
fn filtered_rotations(g: &EmbeddedGraph, keep: &BTreeSet<usize>) -> Rotations {
    let mut rot = Rotations::new();
    for (&v, order) in g.rotations() {
        if !keep.contains(&v) {
            continue;
        }
        let filtered: Vec<usize> = order.iter().copied().filter(|w| keep.contains(w)).collect();
        rot.insert(v, filtered);
    }
    rot
}

/// Attempts to delete `a_p` and relabel.  Returns the reduced
/// near-triangulation together with the vertices appended to the b-side,
/// or `None` when the removal does not leave a valid labelling.
pub fn try_ap_removal(
    t: &TwoSidedNearTriangulation,
) -> Option<(TwoSidedNearTriangulation, Vec<usize>)> {
    let (a, b, g) = (t.a(), t.b(), t.graph());
    let p = a.len();
    if p < 2 {
        return None;
    }
    let keep: BTreeSet<usize> = g.vertices().filter(|&v| v != a[p - 1]).collect();
    let probe = from_rotations(filtered_rotations(g, &keep), None).ok()?;
    // The edge (a_1, b_1) still borders the unbounded region, so the face
    // holding the arc b_1 -> a_1 is the new outer face.
    let walk = probe.face_with_arc(b[0], a[0]).ok()?;
    let distinct: BTreeSet<usize> = walk.iter().copied().collect();
    if distinct.len() != walk.len() {
        // Deleting a_p pinched the boundary: the rest of the graph is no
        // longer 2-connected.
        return None;
    }
    let outer = rotate_cycle_to(&walk, a[0])?;
    if outer.len() < (p - 1) + b.len() || outer[..p - 1] != a[..p - 1] {
        return None;
    }
    let mut rest: Vec<usize> = outer[p - 1..].to_vec();
    rest.reverse();
    if rest[..b.len()] != b[..] {
        return None;
    }
    let new_b: Vec<usize> = rest[b.len()..].to_vec();
    let reduced = probe.with_outer(outer).ok()?;
    let mut b2 = b.to_vec();
    b2.extend(&new_b);
    let t2 = TwoSidedNearTriangulation::new(reduced, a[..p - 1].to_vec(), b2).ok()?;
    Some((t2, new_b))
}

/// Attempts to delete `b_q` and relabel — the mirror of
/// [`try_ap_removal`].  Returns the reduced near-triangulation together
/// with the vertices appended to the a-side.
pub fn try_bq_removal(
    t: &TwoSidedNearTriangulation,
) -> Option<(TwoSidedNearTriangulation, Vec<usize>)> {
    let (a, b, g) = (t.a(), t.b(), t.graph());
    let (p, q) = (a.len(), b.len());
    if q < 2 {
        return None;
    }
    let keep: BTreeSet<usize> = g.vertices().filter(|&v| v != b[q - 1]).collect();
    let probe = from_rotations(filtered_rotations(g, &keep), None).ok()?;
    let walk = probe.face_with_arc(b[0], a[0]).ok()?;
    let distinct: BTreeSet<usize> = walk.iter().copied().collect();
    if distinct.len() != walk.len() {
        return None;
    }
    let outer = rotate_cycle_to(&walk, a[0])?;
    if outer.len() < p + (q - 1) || outer[..p] != a[..] {
        return None;
    }
    let tail = &outer[p..];
    let mid_len = tail.len() - (q - 1);
    let expected_suffix: Vec<usize> = b[..q - 1].iter().rev().copied().collect();
    if tail[mid_len..] != expected_suffix[..] {
        return None;
    }
    let new_a: Vec<usize> = tail[..mid_len].to_vec();
    let reduced = probe.with_outer(outer).ok()?;
    let mut a2 = a.to_vec();
    a2.extend(&new_a);
    let t2 = TwoSidedNearTriangulation::new(reduced, a2, b[..q - 1].to_vec()).ok()?;
    Some((t2, new_a))
}

/// Undirected edge set of a closed vertex cycle.
fn cycle_edges(cycle: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut edges = BTreeSet::new();
    for k in 0..cycle.len() {
        let (u, v) = (cycle[k], cycle[(k + 1) % cycle.len()]);
        edges.insert((u.min(v), u.max(v)));
    }
    edges
}

/// Collects the inner faces reachable from the face holding the directed
/// arc `seed` without crossing a `blocked` edge.  Returns `None` if the
/// flood ever reaches the outer face, which means the blocked cycle does
/// not enclose the seed.
fn region_faces(
    g: &EmbeddedGraph,
    seed: (usize, usize),
    blocked: &BTreeSet<(usize, usize)>,
) -> Option<BTreeSet<Vec<usize>>> {
    let outer_key = canonical_rotation(g.outer());
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = vec![g.face_with_arc(seed.0, seed.1).ok()?];
    while let Some(face) = queue.pop() {
        let key = canonical_rotation(&face);
        if key == outer_key {
            return None;
        }
        if !seen.insert(key) {
            continue;
        }
        for k in 0..face.len() {
            let (u, v) = (face[k], face[(k + 1) % face.len()]);
            if blocked.contains(&(u.min(v), u.max(v))) {
                continue;
            }
            queue.push(g.face_with_arc(v, u).ok()?);
        }
    }
    Some(seen)
}

/// Cuts `t` at apex `x` between `a_i` and `b_j` (1-based indices) into the
/// three pieces of [`SplitParts`], or `None` when any piece fails to
/// validate or the pieces do not partition the inner faces.
fn try_split_at(t: &TwoSidedNearTriangulation, x: usize, i: usize, j: usize) -> Option<SplitParts> {
    let (a, b, g) = (t.a(), t.b(), t.graph());
    let (p, q) = (a.len(), b.len());

    // Boundary cycles of the three regions, walked clockwise like an outer
    // face (a-side path, then b-side path reversed).
    let mut cyc_a: Vec<usize> = a[i - 1..].to_vec();
    cyc_a.push(x);
    let mut cyc_b: Vec<usize> = vec![x];
    cyc_b.extend(b[j - 1..].iter().rev());
    let mut cyc_p: Vec<usize> = a[..i].to_vec();
    cyc_p.push(x);
    cyc_p.extend(b[..j].iter().rev());

    // Seed arcs lie just inside each region: behind the outer edge
    // (a_i, a_{i+1}) for the a-piece, behind (x, b_q) opposite the apex
    // face for the b-piece, and behind (a_i, x) for the remainder.
    let faces_a = region_faces(g, (a[i], a[i - 1]), &cycle_edges(&cyc_a))?;
    let faces_b = region_faces(g, (b[q - 1], x), &cycle_edges(&cyc_b))?;
    let faces_p = region_faces(g, (x, a[i - 1]), &cycle_edges(&cyc_p))?;

    // The three regions plus the apex triangle must tile the inner faces
    // exactly.
    let apex_face = canonical_rotation(&g.face_with_arc(b[q - 1], a[p - 1]).ok()?);
    let inner: BTreeSet<Vec<usize>> = g
        .inner_faces()
        .iter()
        .map(|f| canonical_rotation(f))
        .collect();
    let mut union = BTreeSet::new();
    union.extend(faces_a.iter().cloned());
    union.extend(faces_b.iter().cloned());
    union.extend(faces_p.iter().cloned());
    union.insert(apex_face.clone());
    if union != inner
        || faces_a.len() + faces_b.len() + faces_p.len() + 1 != inner.len()
        || faces_a.contains(&apex_face)
        || faces_b.contains(&apex_face)
        || faces_p.contains(&apex_face)
    {
        return None;
    }

    let verts_of = |faces: &BTreeSet<Vec<usize>>, cycle: &[usize]| -> BTreeSet<usize> {
        let mut vs: BTreeSet<usize> = cycle.iter().copied().collect();
        for f in faces {
            vs.extend(f.iter().copied());
        }
        vs
    };

    let g_a = g.induced(&verts_of(&faces_a, &cyc_a), cyc_a).ok()?;
    let t_a = TwoSidedNearTriangulation::new(g_a, a[i - 1..].to_vec(), vec![x]).ok()?;

    let g_b = g.induced(&verts_of(&faces_b, &cyc_b), cyc_b).ok()?;
    let t_b = TwoSidedNearTriangulation::new(g_b, vec![x], b[j - 1..].to_vec()).ok()?;

    let mut a_p2: Vec<usize> = a[..i].to_vec();
    a_p2.push(x);
    let g_p = g.induced(&verts_of(&faces_p, &cyc_p), cyc_p).ok()?;
    let t_prime = TwoSidedNearTriangulation::new(g_p, a_p2, b[..j].to_vec()).ok()?;

    Some(SplitParts {
        x,
        i,
        j,
        t_prime,
        t_a,
        t_b,
    })
}

/// Finds a valid split of `t`: takes the interior apex `x` of the triangle
/// behind `(a_p, b_q)` and scans its side neighbours `a_i` (`i ≤ p−1`) and
/// `b_j` (`j ≤ q−1`) in descending index order, returning the first cut
/// whose three pieces all validate.
pub fn find_split(t: &TwoSidedNearTriangulation) -> Option<SplitParts> {
    let (a, b, g) = (t.a(), t.b(), t.graph());
    let (p, q) = (a.len(), b.len());
    if p < 2 || q < 2 {
        return None;
    }
    let apex = g.face_with_arc(b[q - 1], a[p - 1]).ok()?;
    if apex.len() != 3 {
        return None;
    }
    let x = apex[2];
    if t.is_outer_vertex(x) {
        return None;
    }
    for i in (1..=p - 1).rev() {
        if !g.has_edge(x, a[i - 1]) {
            continue;
        }
        for j in (1..=q - 1).rev() {
            if !g.has_edge(x, b[j - 1]) {
                continue;
            }
            if let Some(parts) = try_split_at(t, x, i, j) {
                return Some(parts);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_embedded_graph;

    /// Octahedron with the rotation system and outer face frozen in the
    /// graph module's tests.
    fn octahedron() -> EmbeddedGraph {
        let mut rot = Rotations::new();
        rot.insert(1, vec![2, 4, 5, 3]);
        rot.insert(2, vec![1, 3, 6, 4]);
        rot.insert(3, vec![2, 1, 5, 6]);
        rot.insert(4, vec![1, 2, 6, 5]);
        rot.insert(5, vec![3, 1, 4, 6]);
        rot.insert(6, vec![2, 3, 5, 4]);
        EmbeddedGraph::new(rot, vec![1, 2, 3]).unwrap()
    }

    fn k4() -> EmbeddedGraph {
        let mut rot = Rotations::new();
        rot.insert(0, vec![1, 3, 2]);
        rot.insert(1, vec![0, 2, 3]);
        rot.insert(2, vec![1, 0, 3]);
        rot.insert(3, vec![0, 1, 2]);
        EmbeddedGraph::new(rot, vec![0, 1, 2]).unwrap()
    }

    /// Wheel with hub 0 and rim 1..=k, embedded with the rim outside.
    fn wheel(k: usize) -> EmbeddedGraph {
        let mut edges = Vec::new();
        for v in 1..=k {
            edges.push((0, v));
            edges.push((v, v % k + 1));
        }
        let outer: Vec<usize> = (1..=k).collect();
        build_embedded_graph(&edges, None, Some(outer)).unwrap()
    }

    #[test]
    fn labels_octahedron_both_ways() {
        let g = octahedron();
        let t = label_two_sided(&g, 2).unwrap();
        assert_eq!(t.a(), &[1, 2]);
        assert_eq!(t.b(), &[3]);
        assert_eq!((t.p(), t.q(), t.n()), (2, 1, 6));
        assert!(!t.is_base());

        let t1 = label_two_sided(&g, 1).unwrap();
        assert_eq!(t1.a(), &[1]);
        assert_eq!(t1.b(), &[3, 2]);
    }

    #[test]
    fn rejects_bad_split_points() {
        let g = octahedron();
        assert!(matches!(
            label_two_sided(&g, 0),
            Err(Error::NotNearTriangulation(_))
        ));
        assert!(matches!(
            label_two_sided(&g, 3),
            Err(Error::NotNearTriangulation(_))
        ));
    }

    #[test]
    fn rejects_side_chords() {
        // Square 1-2-3-4 with the diagonal (1, 3): the diagonal is a chord
        // when 1 and 3 land on the same side, and harmless otherwise.
        let edges = [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)];
        let g = build_embedded_graph(&edges, None, Some(vec![1, 2, 3, 4])).unwrap();
        let err = label_two_sided(&g, 3).unwrap_err();
        assert_eq!(
            err.to_string(),
            Error::ChordOnSide {
                side: Side::A,
                i: 1,
                j: 3
            }
            .to_string()
        );
        let t = label_two_sided(&g, 1).unwrap();
        assert_eq!(t.a(), &[1]);
        assert_eq!(t.b(), &[4, 3, 2]);
    }

    #[test]
    fn rejects_separating_triangles_and_big_faces() {
        // K4 plus a vertex inside one face: the enclosing triangle separates.
        let edges = [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (4, 0),
            (4, 1),
            (4, 2),
        ];
        let g = build_embedded_graph(&edges, None, None).unwrap();
        assert!(matches!(
            label_two_sided(&g, 1),
            Err(Error::NotNearTriangulation(_))
        ));

        // A plain square has a quadrilateral inner face.
        let square = build_embedded_graph(
            &[(1, 2), (2, 3), (3, 4), (4, 1)],
            None,
            Some(vec![1, 2, 3, 4]),
        )
        .unwrap();
        assert!(matches!(
            label_two_sided(&square, 2),
            Err(Error::NotNearTriangulation(_))
        ));
    }

    #[test]
    fn octahedron_decomposes_to_the_base() {
        let g = octahedron();
        let t0 = label_two_sided(&g, 2).unwrap();

        // Step 1: a_p = 2 comes off; 6 and 4 join the b-side.
        let step = classify_step(&t0).unwrap();
        assert_eq!(step, DecompositionStep::ApRemoval { new_b: vec![6, 4] });
        let (t1, new_b) = try_ap_removal(&t0).unwrap();
        assert_eq!(new_b, vec![6, 4]);
        assert_eq!(t1.a(), &[1]);
        assert_eq!(t1.b(), &[3, 6, 4]);

        // Step 2: b_q = 4 comes off; 5 joins the a-side.
        let step = classify_step(&t1).unwrap();
        assert_eq!(step, DecompositionStep::BqRemoval { new_a: vec![5] });
        let (t2, new_a) = try_bq_removal(&t1).unwrap();
        assert_eq!(new_a, vec![5]);
        assert_eq!(t2.a(), &[1, 5]);
        assert_eq!(t2.b(), &[3, 6]);

        // Step 3: removing a_p = 5 would pinch the boundary, so 6 comes
        // off the b-side instead, releasing nothing.
        assert!(try_ap_removal(&t2).is_none());
        let step = classify_step(&t2).unwrap();
        assert_eq!(step, DecompositionStep::BqRemoval { new_a: vec![] });
        let (t3, new_a) = try_bq_removal(&t2).unwrap();
        assert!(new_a.is_empty());
        assert_eq!(t3.a(), &[1, 5]);
        assert_eq!(t3.b(), &[3]);
        assert!(t3.is_base());
        assert!(classify_step(&t3).is_err());
    }

    #[test]
    fn k4_classifies_as_ap_removal() {
        let t = label_two_sided(&k4(), 2).unwrap();
        assert_eq!(t.a(), &[0, 1]);
        assert_eq!(t.b(), &[2]);
        let (t1, new_b) = try_ap_removal(&t).unwrap();
        assert_eq!(new_b, vec![3]);
        assert_eq!(t1.a(), &[0]);
        assert_eq!(t1.b(), &[2, 3]);
        assert!(t1.is_base());
    }

    #[test]
    fn four_wheel_forces_a_split() {
        let g = wheel(4);
        let t = label_two_sided(&g, 2).unwrap();
        assert_eq!(t.a(), &[1, 2]);
        assert_eq!(t.b(), &[4, 3]);

        // Either removal would turn a hub edge into a side chord.
        assert!(try_ap_removal(&t).is_none());
        assert!(try_bq_removal(&t).is_none());

        let parts = find_split(&t).expect("the hub splits the wheel");
        assert_eq!((parts.x, parts.i, parts.j), (0, 1, 1));
        assert_eq!(parts.t_prime.a(), &[1, 0]);
        assert_eq!(parts.t_prime.b(), &[4]);
        assert_eq!(parts.t_a.a(), &[1, 2]);
        assert_eq!(parts.t_a.b(), &[0]);
        assert_eq!(parts.t_b.a(), &[0]);
        assert_eq!(parts.t_b.b(), &[4, 3]);
        assert!(parts.t_prime.is_base() && parts.t_a.is_base() && parts.t_b.is_base());

        match classify_step(&t).unwrap() {
            DecompositionStep::Split { x, i, j, .. } => assert_eq!((x, i, j), (0, 1, 1)),
            other => panic!("expected a split, got {other:?}"),
        }
    }

    #[test]
    fn five_wheel_splits_into_a_wheel_remainder() {
        let g = wheel(5);
        let t = label_two_sided(&g, 2).unwrap();
        assert_eq!(t.a(), &[1, 2]);
        assert_eq!(t.b(), &[5, 4, 3]);
        assert!(try_ap_removal(&t).is_none());
        assert!(try_bq_removal(&t).is_none());
        let parts = find_split(&t).expect("the hub splits the wheel");
        assert_eq!(parts.x, 0);
        assert_eq!(parts.i, 1);
        assert_eq!(parts.t_a.a(), &[1, 2]);
        assert_eq!(parts.t_a.b(), &[0]);
        // The b-piece keeps the rest of the rim fan.
        assert_eq!(parts.t_b.a(), &[0]);
        assert_eq!(parts.t_b.b()[parts.t_b.q() - 1], 3);
        // Inner faces tile: 5 hub triangles across the pieces plus the apex.
        let total = parts.t_prime.graph().inner_faces().len()
            + parts.t_a.graph().inner_faces().len()
            + parts.t_b.graph().inner_faces().len()
            + 1;
        assert_eq!(total, 5);
    }

    #[test]
    fn every_labeling_of_the_octahedron_classifies() {
        // All rotations of the outer triangle and both side splits yield a
        // valid labelling, and each one admits a step.
        let g = octahedron();
        for start in [1, 2, 3] {
            let outer = rotate_cycle_to(g.outer(), start).unwrap();
            let g2 = g.with_outer(outer).unwrap();
            for split in 1..=2 {
                let t = label_two_sided(&g2, split).unwrap();
                classify_step(&t).unwrap();
            }
        }
    }
}
