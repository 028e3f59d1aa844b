//! Seeded generation of 4-connected triangulations and derived fixtures.
//!
//! # Structure
//!
//! * [`double_wheel`] — the smallest systematic family: a cycle plus two
//!   hubs, 4-connected for rims of length at least four.
//! * [`canonical_form`] — a complete isomorphism invariant for connected
//!   embedded graphs, used to deduplicate generated fixtures.
//! * [`sample_four_connected`] — a seeded random walk over the flip graph
//!   of sphere triangulations, recording 4-connected ones up to
//!   isomorphism.  Any two triangulations on the same vertex count are
//!   connected by diagonal flips, so the walk can in principle reach
//!   every class.
//! * [`peel_outer_vertex`] — removes one outer vertex of a triangulation,
//!   producing a near-triangulation whose outer face is the polygon left
//!   behind.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{
    faces_to_rotations, from_rotations, is_four_connected_triangulation, EmbeddedGraph, Rotations,
};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Double wheels
// ---------------------------------------------------------------------------

/// The double wheel over a cycle of length `rim`: vertices `0..rim` form
/// the cycle and two hubs `rim`, `rim + 1` are adjacent to all of it.
/// 4-connected exactly when `rim >= 4`, which is required here.
pub fn double_wheel(rim: usize) -> Result<EmbeddedGraph> {
    if rim < 4 {
        return Err(Error::InvariantViolation(format!(
            "double wheel over a cycle of length {rim} has a separating triangle"
        )));
    }
    let mut edges = Vec::new();
    for i in 0..rim {
        edges.push((i, (i + 1) % rim));
        edges.push((i, rim));
        edges.push((i, rim + 1));
    }
    let g = crate::graph::build_embedded_graph(&edges, None, None)?;
    debug_assert!(is_four_connected_triangulation(&g));
    Ok(g)
}

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

/// A complete isomorphism invariant for connected embedded graphs.
///
/// For every directed edge and both global orientations, the embedding is
/// relabeled by a breadth-first walk that enters each vertex's rotation at
/// the arc it was discovered from; the lexicographically smallest
/// transcript over all starts is returned.  Two 3-connected planar graphs
/// get the same form exactly when they are isomorphic, since their
/// embeddings are unique up to reflection.
pub fn canonical_form(g: &EmbeddedGraph) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for u in g.vertices() {
        for &v in g.rotation(u).expect("vertex comes from the graph") {
            for mirror in [false, true] {
                let code = encode_from(g, u, v, mirror);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.unwrap_or_default()
}

fn encode_from(g: &EmbeddedGraph, root: usize, root_anchor: usize, mirror: bool) -> Vec<usize> {
    let mut label = std::collections::BTreeMap::new();
    let mut anchor = std::collections::BTreeMap::new();
    let mut order = vec![root];
    label.insert(root, 0usize);
    anchor.insert(root, root_anchor);
    let mut code = Vec::with_capacity(4 * g.m());
    let mut i = 0;
    while i < order.len() {
        let w = order[i];
        i += 1;
        let mut r = g.rotation(w).expect("discovered vertices exist").to_vec();
        if mirror {
            r.reverse();
        }
        let start = r
            .iter()
            .position(|&x| x == anchor[&w])
            .expect("anchor is a neighbor");
        for j in 0..r.len() {
            let nb = r[(start + j) % r.len()];
            let next = label.len();
            let l = *label.entry(nb).or_insert_with(|| {
                anchor.insert(nb, w);
                order.push(nb);
                next
            });
            code.push(l);
        }
        code.push(usize::MAX);
    }
    code
}

// ---------------------------------------------------------------------------
// Flip-walk sampling
// ---------------------------------------------------------------------------

/// A sphere triangulation under diagonal flips, kept as its face list.
struct FlipState {
    faces: Vec<Vec<usize>>,
    adj: BTreeSet<(usize, usize)>,
}

impl FlipState {
    fn from_graph(g: &EmbeddedGraph) -> Self {
        let adj = g.edges().into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Self { faces: g.faces(), adj }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.adj.iter().copied().collect()
    }

    /// The face containing the arc `u -> v` and its third vertex.
    fn face_with_arc(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        for (idx, f) in self.faces.iter().enumerate() {
            for i in 0..f.len() {
                if f[i] == u && f[(i + 1) % f.len()] == v {
                    return Some((idx, f[(i + 2) % f.len()]));
                }
            }
        }
        None
    }

    /// Replaces the diagonal `(u, v)` of its surrounding quadrilateral by
    /// the other diagonal, when the result stays a simple triangulation.
    fn try_flip(&mut self, u: usize, v: usize) -> bool {
        let Some((f1, x)) = self.face_with_arc(u, v) else { return false };
        let Some((f2, y)) = self.face_with_arc(v, u) else { return false };
        if x == y || self.adj.contains(&(x.min(y), x.max(y))) {
            return false;
        }
        self.faces[f1] = vec![x, u, y];
        self.faces[f2] = vec![y, v, x];
        self.adj.remove(&(u.min(v), u.max(v)));
        self.adj.insert((x.min(y), x.max(y)));
        true
    }

    fn to_graph(&self) -> Result<EmbeddedGraph> {
        from_rotations(faces_to_rotations(&self.faces)?, None)
    }
}

/// Collects up to `count` pairwise non-isomorphic 4-connected
/// triangulations on `n` vertices by a seeded random flip walk starting
/// from the double wheel.  Deterministic for a fixed seed; returns fewer
/// graphs if the walk budget runs out first (for small `n` fewer classes
/// may exist than requested).
pub fn sample_four_connected(n: usize, count: usize, seed: u64) -> Result<Vec<EmbeddedGraph>> {
    if n < 6 {
        return Err(Error::InvariantViolation(format!(
            "no 4-connected triangulation on {n} < 6 vertices exists"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = FlipState::from_graph(&double_wheel(n - 2)?);
    let mut seen = BTreeSet::new();
    let mut found = Vec::new();

    let record = |g: EmbeddedGraph, seen: &mut BTreeSet<Vec<usize>>, found: &mut Vec<EmbeddedGraph>| {
        if is_four_connected_triangulation(&g) && seen.insert(canonical_form(&g)) {
            found.push(g);
        }
    };
    record(state.to_graph()?, &mut seen, &mut found);

    let budget = 3000 + 600 * count;
    for _ in 0..budget {
        if found.len() >= count {
            break;
        }
        let edges = state.edges();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        let (u, v) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
        if !state.try_flip(u, v) {
            continue;
        }
        record(state.to_graph()?, &mut seen, &mut found);
    }
    Ok(found)
}

// ---------------------------------------------------------------------------
// Near-triangulation fixtures
// ---------------------------------------------------------------------------

/// Deletes the first outer vertex of a triangulation.  The hole left
/// behind — the deleted vertex's neighbor cycle — becomes the outer face,
/// so a 4-connected input yields a near-triangulation whose outer face is
/// a polygon with at least four corners.
pub fn peel_outer_vertex(g: &EmbeddedGraph) -> Result<EmbeddedGraph> {
    let v = *g
        .outer()
        .first()
        .ok_or_else(|| Error::InvariantViolation("graph has no outer face".into()))?;
    let mut rot = Rotations::new();
    for w in g.vertices() {
        if w == v {
            continue;
        }
        let list: Vec<usize> = g
            .rotation(w)
            .expect("vertex comes from the graph")
            .iter()
            .copied()
            .filter(|&x| x != v)
            .collect();
        rot.insert(w, list);
    }
    from_rotations(rot, None)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::label_two_sided;
    use crate::graph::build_embedded_graph;

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

    fn icosahedron() -> EmbeddedGraph {
        let mut edges = Vec::new();
        for k in 1..=5usize {
            edges.push((0, k));
            edges.push((11, k + 5));
            edges.push((k, k % 5 + 1));
            edges.push((k + 5, k % 5 + 6));
            edges.push((k, k + 5));
            edges.push((k, k % 5 + 6));
        }
        build_embedded_graph(&edges, None, None).unwrap()
    }

    #[test]
    fn double_wheels_are_four_connected() {
        for rim in 4..=9 {
            let g = double_wheel(rim).unwrap();
            assert_eq!((g.n(), g.m()), (rim + 2, 3 * (rim + 2) - 6));
            assert!(is_four_connected_triangulation(&g));
        }
        assert!(double_wheel(3).is_err());
    }

    #[test]
    fn canonical_form_matches_isomorphic_graphs() {
        // The octahedron is the double wheel over a 4-cycle, only labeled
        // differently.
        assert_eq!(canonical_form(&octahedron()), canonical_form(&double_wheel(4).unwrap()));

        // A mirrored embedding is the same graph.
        let g = icosahedron();
        let mut mirrored = g.rotations().clone();
        mirrored.values_mut().for_each(|l| l.reverse());
        let m = from_rotations(mirrored, None).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&m));

        assert_ne!(canonical_form(&octahedron()), canonical_form(&icosahedron()));
        assert_ne!(
            canonical_form(&double_wheel(5).unwrap()),
            canonical_form(&double_wheel(6).unwrap())
        );
    }

    #[test]
    fn sampler_is_deterministic_and_sound() {
        let a = sample_four_connected(10, 6, 42).unwrap();
        let b = sample_four_connected(10, 6, 42).unwrap();
        assert_eq!(a.len(), 6);
        let ca: Vec<_> = a.iter().map(canonical_form).collect();
        let cb: Vec<_> = b.iter().map(canonical_form).collect();
        assert_eq!(ca, cb);
        for g in &a {
            assert_eq!(g.n(), 10);
            assert!(is_four_connected_triangulation(g));
        }
        let distinct: BTreeSet<_> = ca.into_iter().collect();
        assert_eq!(distinct.len(), 6);
    }

    #[test]
    fn sampler_exhausts_the_small_counts() {
        // On 6, 7, 8 vertices there are exactly 1, 1 and 2 such
        // triangulations; an over-asking walk must find all of them and
        // nothing more.  This doubles as a cross-check that the canonical
        // form is neither too coarse nor too fine.
        assert_eq!(sample_four_connected(6, 4, 7).unwrap().len(), 1);
        assert_eq!(sample_four_connected(7, 4, 7).unwrap().len(), 1);
        assert_eq!(sample_four_connected(8, 4, 7).unwrap().len(), 2);
    }

    /// A stacked triangulation on `n` vertices: in a tetrahedron,
    /// repeatedly place a new vertex inside a face.
    fn stacked(n: usize) -> EmbeddedGraph {
        let mut faces: Vec<Vec<usize>> =
            vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![3, 2, 1]];
        for s in 4..n {
            let f = faces.pop().unwrap();
            for i in 0..3 {
                faces.push(vec![f[i], f[(i + 1) % 3], s]);
            }
        }
        from_rotations(faces_to_rotations(&faces).unwrap(), None).unwrap()
    }

    fn all_flips(g: &EmbeddedGraph) -> Vec<EmbeddedGraph> {
        let mut out = Vec::new();
        for (u, v) in FlipState::from_graph(g).edges() {
            let mut s = FlipState::from_graph(g);
            if s.try_flip(u, v) {
                out.push(s.to_graph().unwrap());
            }
        }
        out
    }

    #[test]
    fn flip_moves_reach_every_triangulation_class() {
        // Exhaustive breadth-first search over the flip graph.  By
        // Wagner's theorem any two triangulations on the same vertex count
        // are connected by diagonal flips, so starting anywhere enumerates
        // every isomorphism class.  The class totals match the published
        // census of planar triangulations, which cross-checks the flip
        // move, the canonical form and the connectivity test against an
        // external count; the 4-connected subcounts are pinned alongside.
        for (n, total, four_connected) in [(7, 5, 1), (8, 14, 2), (9, 50, 4)] {
            let start = stacked(n);
            let mut seen = BTreeSet::from([canonical_form(&start)]);
            let mut hits = usize::from(is_four_connected_triangulation(&start));
            let mut stack = vec![start];
            while let Some(g) = stack.pop() {
                for h in all_flips(&g) {
                    if seen.insert(canonical_form(&h)) {
                        hits += usize::from(is_four_connected_triangulation(&h));
                        stack.push(h);
                    }
                }
            }
            assert_eq!((seen.len(), hits), (total, four_connected), "n = {n}");
        }
    }

    #[test]
    fn peeling_gives_two_sided_inputs() {
        let peeled = peel_outer_vertex(&octahedron()).unwrap();
        assert_eq!(peeled.n(), 5);
        assert_eq!(peeled.outer().len(), 4);
        assert!(label_two_sided(&peeled, 2).is_ok());

        let peeled = peel_outer_vertex(&icosahedron()).unwrap();
        assert_eq!(peeled.n(), 11);
        assert_eq!(peeled.outer().len(), 5);
        let valid = (1..5).filter(|&s| label_two_sided(&peeled, s).is_ok()).count();
        assert!(valid > 0);
    }
}
