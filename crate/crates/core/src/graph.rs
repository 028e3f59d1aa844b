//! Embedded planar graphs: rotation systems, face traversal, planarity
//! testing, connectivity, and separating triangles.
//!
//! # Conventions
//!
//! * A **rotation system** lists each vertex's neighbors in counterclockwise
//!   order. Vertex ids are arbitrary (possibly sparse) `usize` values, so
//!   subgraphs can keep the ids of their parent graph.
//! * **Face traversal** follows the rule `next(u → v) = (v, w)` where `w` is
//!   the cyclic successor of `u` in the rotation of `v`. Under this rule
//!   every directed edge lies on exactly one face; for a plane drawing with
//!   counterclockwise rotations, inner faces are traversed counterclockwise
//!   and the outer face clockwise.
//! * The stored outer face is the directed cycle produced by that traversal,
//!   i.e. clockwise in the drawing.
//!
//! Faces of graphs with cut vertices are closed walks rather than simple
//! cycles; all routines here tolerate that, though the decomposition layers
//! only ever see 2-connected inputs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::{Error, Result};

/// Counterclockwise neighbor orders, one entry per vertex.
pub type Rotations = BTreeMap<usize, Vec<usize>>;

// ---------------------------------------------------------------------------
// Cycle helpers
// ---------------------------------------------------------------------------

/// The lexicographically smallest rotation of `cycle` (reflection is *not*
/// considered: direction is significant).
pub(crate) fn canonical_rotation(cycle: &[usize]) -> Vec<usize> {
    let l = cycle.len();
    if l == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<usize>> = None;
    for s in 0..l {
        let cand: Vec<usize> = (0..l).map(|k| cycle[(s + k) % l]).collect();
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap()
}

/// Rotates `cycle` so that it starts at `start`, or `None` if absent.
pub fn rotate_cycle_to(cycle: &[usize], start: usize) -> Option<Vec<usize>> {
    let pos = cycle.iter().position(|&v| v == start)?;
    Some((0..cycle.len()).map(|k| cycle[(pos + k) % cycle.len()]).collect())
}

// ---------------------------------------------------------------------------
// Embedded graphs
// ---------------------------------------------------------------------------

/// A connected planar graph together with a combinatorial embedding
/// (counterclockwise rotations) and a distinguished outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rot: Rotations,
    outer: Vec<usize>,
}

impl EmbeddedGraph {
    /// Builds a graph from explicit rotations and an outer face, validating
    /// that the rotations describe a connected planar embedding and that
    /// `outer` is one of its faces as a *directed* cycle (up to rotation of
    /// the starting vertex).
    pub fn new(rot: Rotations, outer: Vec<usize>) -> Result<Self> {
        let g = Self { rot, outer };
        g.validate()?;
        Ok(g)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.rot.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.rot.values().map(Vec::len).sum::<usize>() / 2
    }

    /// Vertex ids in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.rot.keys().copied()
    }

    /// Whether `v` is a vertex of this graph.
    pub fn contains(&self, v: usize) -> bool {
        self.rot.contains_key(&v)
    }

    /// The counterclockwise neighbor order of `v`, if present.
    pub fn rotation(&self, v: usize) -> Option<&[usize]> {
        self.rot.get(&v).map(Vec::as_slice)
    }

    /// All rotations.
    pub fn rotations(&self) -> &Rotations {
        &self.rot
    }

    /// The outer face as a directed cycle (clockwise in a drawing).
    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    /// Degree of `v` (0 if absent).
    pub fn degree(&self, v: usize) -> usize {
        self.rot.get(&v).map_or(0, Vec::len)
    }

    /// Neighbors of `v` in rotation order (empty if absent).
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rot.get(&v).into_iter().flatten().copied()
    }

    /// Whether the undirected edge `{u, v}` is present.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rot.get(&u).is_some_and(|l| l.contains(&v))
    }

    /// All edges as canonical `(min, max)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edge_set().into_iter().collect()
    }

    /// The edge set as canonical `(min, max)` pairs.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for (&v, nbrs) in &self.rot {
            for &w in nbrs {
                out.insert((v.min(w), v.max(w)));
            }
        }
        out
    }

    /// Cyclic successor of `prev` in the rotation of `v`.
    fn succ(&self, v: usize, prev: usize) -> Option<usize> {
        let nbrs = self.rot.get(&v)?;
        let pos = nbrs.iter().position(|&x| x == prev)?;
        Some(nbrs[(pos + 1) % nbrs.len()])
    }

    /// The vertex after `v` on the face containing the directed edge `u → v`.
    pub fn next_in_face(&self, u: usize, v: usize) -> Result<usize> {
        if !self.contains(u) {
            return Err(Error::UnknownVertex(u.to_string()));
        }
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge { u, v });
        }
        self.succ(v, u).ok_or(Error::MissingEdge { u, v })
    }

    /// The face containing the directed edge `u → v`, as a vertex sequence
    /// starting `u, v, …` whose consecutive pairs (cyclically) are the
    /// face's directed edges.
    pub fn face_with_arc(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.next_in_face(u, v)?; // validates u, v and the edge
        let mut face = Vec::new();
        let (mut x, mut y) = (u, v);
        loop {
            face.push(x);
            let z = self.succ(y, x).expect("validated rotation system");
            x = y;
            y = z;
            if (x, y) == (u, v) {
                break;
            }
        }
        Ok(face)
    }

    /// All faces, each as a directed closed walk. Every directed edge
    /// appears in exactly one face.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut out = Vec::new();
        for (&v, nbrs) in &self.rot {
            for &w in nbrs {
                if seen.contains(&(v, w)) {
                    continue;
                }
                let face = self.face_with_arc(v, w).expect("edge of the graph");
                let l = face.len();
                for k in 0..l {
                    seen.insert((face[k], face[(k + 1) % l]));
                }
                out.push(face);
            }
        }
        out
    }

    /// All faces except the outer one.
    pub fn inner_faces(&self) -> Vec<Vec<usize>> {
        let oc = canonical_rotation(&self.outer);
        self.faces()
            .into_iter()
            .filter(|f| canonical_rotation(f) != oc)
            .collect()
    }

    /// Whether `cycle` is a face (as a directed cycle, up to rotation).
    pub fn is_face(&self, cycle: &[usize]) -> bool {
        if cycle.len() < 2 {
            return false;
        }
        match self.face_with_arc(cycle[0], cycle[1]) {
            Ok(f) => f.len() == cycle.len() && canonical_rotation(&f) == canonical_rotation(cycle),
            Err(_) => false,
        }
    }

    /// The same embedding with a different outer face.
    pub fn with_outer(&self, outer: Vec<usize>) -> Result<Self> {
        Self::new(self.rot.clone(), outer)
    }

    /// The subgraph induced by `keep`, with rotations filtered in place and
    /// the given outer face. Fails if the result is not a valid connected
    /// embedding or `outer` is not one of its faces.
    pub fn induced(&self, keep: &BTreeSet<usize>, outer: Vec<usize>) -> Result<Self> {
        for &v in keep {
            if !self.contains(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        let rot: Rotations = self
            .rot
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, l)| (v, l.iter().copied().filter(|w| keep.contains(w)).collect()))
            .collect();
        Self::new(rot, outer)
    }

    /// Full structural validation: rotation lists, connectivity, the Euler
    /// face count, and the outer face.
    pub fn validate(&self) -> Result<()> {
        self.validate_structure()?;
        if self.outer.len() < 2 || !self.is_face(&self.outer) {
            return Err(Error::OuterNotAFace);
        }
        Ok(())
    }

    /// Validation of everything except the outer face.
    fn validate_structure(&self) -> Result<()> {
        validate_rotation_lists(&self.rot)?;
        if self.n() < 2 {
            return Err(Error::InconsistentRotation(
                "graph needs at least two vertices".into(),
            ));
        }
        if !is_connected_adj(&adjacency_sets(&self.rot)) {
            return Err(Error::InconsistentRotation("graph is disconnected".into()));
        }
        let (n, m, f) = (self.n() as i64, self.m() as i64, self.faces().len() as i64);
        if n - m + f != 2 {
            return Err(Error::InconsistentRotation(format!(
                "face count violates Euler's formula: V={n} E={m} F={f}"
            )));
        }
        Ok(())
    }
}

/// Checks that rotation lists are loop-free, duplicate-free and symmetric.
fn validate_rotation_lists(rot: &Rotations) -> Result<()> {
    for (&v, nbrs) in rot {
        let mut seen = BTreeSet::new();
        for &w in nbrs {
            if w == v {
                return Err(Error::SelfLoop { v });
            }
            if !seen.insert(w) {
                return Err(Error::MultiEdge { u: v.min(w), v: v.max(w) });
            }
            match rot.get(&w) {
                None => return Err(Error::UnknownVertex(w.to_string())),
                Some(back) if !back.contains(&v) => {
                    return Err(Error::InconsistentRotation(format!(
                        "edge {v}-{w} is listed on one side only"
                    )))
                }
                _ => {}
            }
        }
    }
    Ok(())
}

fn adjacency_sets(rot: &Rotations) -> BTreeMap<usize, BTreeSet<usize>> {
    rot.iter().map(|(&v, l)| (v, l.iter().copied().collect())).collect()
}

fn is_connected_adj(adj: &BTreeMap<usize, BTreeSet<usize>>) -> bool {
    let Some(&start) = adj.keys().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[&v] {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == adj.len()
}

// ---------------------------------------------------------------------------
// Building embeddings
// ---------------------------------------------------------------------------

/// Builds an [`EmbeddedGraph`] from an edge list and, optionally, explicit
/// rotations and a requested outer face.
///
/// * With rotations given, they are validated and must describe the same
///   graph as the edge list (when both are supplied).
/// * Without rotations, a planar embedding is computed by the incremental
///   face-splitting method of Demoucron, Malgrange and Pertuiset, run per
///   2-connected block; blocks are merged at cut vertices.
/// * A requested outer face must be a face of the embedding. If it only
///   matches in the opposite direction, the whole embedding is mirrored so
///   the request is honored as written. Without a request, the longest face
///   is chosen (ties: lexicographically smallest rotation).
pub fn build_embedded_graph(
    edges: &[(usize, usize)],
    rotation: Option<Rotations>,
    outer: Option<Vec<usize>>,
) -> Result<EmbeddedGraph> {
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &(u, v) in edges {
        if u == v {
            return Err(Error::SelfLoop { v: u });
        }
        if !adj.entry(u).or_default().insert(v) {
            return Err(Error::MultiEdge { u: u.min(v), v: u.max(v) });
        }
        adj.entry(v).or_default().insert(u);
    }
    let rot = match rotation {
        Some(rot) => {
            validate_rotation_lists(&rot)?;
            if !edges.is_empty() {
                let implied: BTreeSet<(usize, usize)> = rot
                    .iter()
                    .flat_map(|(&v, l)| l.iter().map(move |&w| (v.min(w), v.max(w))))
                    .collect();
                let given: BTreeSet<(usize, usize)> = adj
                    .iter()
                    .flat_map(|(&v, s)| s.iter().map(move |&w| (v.min(w), v.max(w))))
                    .collect();
                if implied != given {
                    return Err(Error::InconsistentRotation(
                        "edge lines and rotation lines describe different graphs".into(),
                    ));
                }
            }
            rot
        }
        None => {
            if adj.len() < 2 {
                return Err(Error::InconsistentRotation(
                    "graph needs at least two vertices".into(),
                ));
            }
            if !is_connected_adj(&adj) {
                return Err(Error::InconsistentRotation("graph is disconnected".into()));
            }
            planar_rotations(&adj)?
        }
    };
    finish_with_outer(rot, outer)
}

/// Builds an [`EmbeddedGraph`] from rotations alone, resolving the outer
/// face exactly like [`build_embedded_graph`].
pub fn from_rotations(rot: Rotations, outer: Option<Vec<usize>>) -> Result<EmbeddedGraph> {
    finish_with_outer(rot, outer)
}

/// Whether the graph is 2-connected (one biconnected block, at least three
/// vertices).
pub fn is_biconnected(g: &EmbeddedGraph) -> bool {
    g.n() >= 3 && biconnected_blocks(&adjacency_sets(g.rotations())).len() == 1
}

fn finish_with_outer(rot: Rotations, requested: Option<Vec<usize>>) -> Result<EmbeddedGraph> {
    let mut g = EmbeddedGraph { rot, outer: Vec::new() };
    g.validate_structure()?;
    match requested {
        Some(c) => {
            if c.len() >= 2 && g.is_face(&c) {
                g.outer = c;
            } else {
                let mut mirrored = g.clone();
                mirrored.rot.values_mut().for_each(|l| l.reverse());
                if c.len() >= 2 && mirrored.is_face(&c) {
                    mirrored.outer = c;
                    g = mirrored;
                } else {
                    return Err(Error::OuterNotAFace);
                }
            }
        }
        None => {
            let mut best: Option<(usize, Vec<usize>)> = None;
            for f in g.faces() {
                let canon = canonical_rotation(&f);
                let better = match &best {
                    None => true,
                    Some((len, bc)) => f.len() > *len || (f.len() == *len && canon < *bc),
                };
                if better {
                    best = Some((f.len(), canon));
                }
            }
            g.outer = best.expect("connected graph has at least one face").1;
        }
    }
    g.validate()?;
    Ok(g)
}

// ---------------------------------------------------------------------------
// Planarity: incremental face splitting over 2-connected blocks
// ---------------------------------------------------------------------------

/// Computes counterclockwise rotations of some planar embedding of the
/// connected graph `adj`, or fails with [`Error::NonPlanar`].
fn planar_rotations(adj: &BTreeMap<usize, BTreeSet<usize>>) -> Result<Rotations> {
    let mut rot: Rotations = adj.keys().map(|&v| (v, Vec::new())).collect();
    for block in biconnected_blocks(adj) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rot.get_mut(&u).unwrap().push(v);
            rot.get_mut(&v).unwrap().push(u);
        } else {
            // Concatenating per-block rotations at cut vertices keeps each
            // block's cyclic order contiguous, which is always planar.
            for (v, order) in embed_block(&block)? {
                rot.get_mut(&v).unwrap().extend(order);
            }
        }
    }
    Ok(rot)
}

/// 2-connected blocks (as canonical sorted edge lists) of a connected graph.
fn biconnected_blocks(adj: &BTreeMap<usize, BTreeSet<usize>>) -> Vec<Vec<(usize, usize)>> {
    struct Frame {
        v: usize,
        parent: usize,
        nbrs: Vec<usize>,
        idx: usize,
    }
    const NONE: usize = usize::MAX;

    let mut disc: BTreeMap<usize, usize> = BTreeMap::new();
    let mut low: BTreeMap<usize, usize> = BTreeMap::new();
    let mut timer = 0usize;
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();

    for &root in adj.keys() {
        if disc.contains_key(&root) {
            continue;
        }
        disc.insert(root, timer);
        low.insert(root, timer);
        timer += 1;
        let mut stack = vec![Frame {
            v: root,
            parent: NONE,
            nbrs: adj[&root].iter().copied().collect(),
            idx: 0,
        }];
        loop {
            let step = {
                let Some(top) = stack.last_mut() else { break };
                if top.idx < top.nbrs.len() {
                    let w = top.nbrs[top.idx];
                    top.idx += 1;
                    Some((top.v, top.parent, w))
                } else {
                    None
                }
            };
            match step {
                Some((v, parent, w)) => {
                    if w == parent {
                        continue;
                    }
                    if let Some(&dw) = disc.get(&w) {
                        if dw < disc[&v] {
                            estack.push((v, w));
                            let lv = low.get_mut(&v).unwrap();
                            *lv = (*lv).min(dw);
                        }
                    } else {
                        disc.insert(w, timer);
                        low.insert(w, timer);
                        timer += 1;
                        estack.push((v, w));
                        let nbrs = adj[&w].iter().copied().collect();
                        stack.push(Frame { v: w, parent: v, nbrs, idx: 0 });
                    }
                }
                None => {
                    let fin = stack.pop().unwrap();
                    if let Some(pt) = stack.last() {
                        let p = pt.v;
                        let lw = low[&fin.v];
                        let lp = low.get_mut(&p).unwrap();
                        *lp = (*lp).min(lw);
                        if lw >= disc[&p] {
                            let mut blk = Vec::new();
                            while let Some(e) = estack.pop() {
                                blk.push(e);
                                if e == (p, fin.v) {
                                    break;
                                }
                            }
                            blocks.push(blk);
                        }
                    }
                }
            }
        }
    }
    for blk in &mut blocks {
        for e in blk.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        blk.sort_unstable();
        blk.dedup();
    }
    blocks.sort();
    blocks
}

/// A fragment of the not-yet-embedded part relative to the embedded subgraph:
/// either a single chord between two embedded vertices, or a connected
/// component of unembedded vertices plus its attachments.
struct Fragment {
    attach: Vec<usize>,
    comp: BTreeSet<usize>,
    chord: Option<(usize, usize)>,
}

/// Embeds one 2-connected block (≥ 3 vertices) by incremental face
/// splitting, returning its rotations.
fn embed_block(edges: &[(usize, usize)]) -> Result<Rotations> {
    let mut badj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    let mut all_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(u, v) in edges {
        badj.entry(u).or_default().insert(v);
        badj.entry(v).or_default().insert(u);
        all_edges.insert((u.min(v), u.max(v)));
    }

    let cycle = find_cycle(&badj);
    let mut in_h: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut eh: BTreeSet<(usize, usize)> = BTreeSet::new();
    for k in 0..cycle.len() {
        let (u, v) = (cycle[k], cycle[(k + 1) % cycle.len()]);
        eh.insert((u.min(v), u.max(v)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), {
        let mut r = cycle;
        r.reverse();
        r
    }];

    while eh.len() < all_edges.len() {
        // Fragments relative to the embedded subgraph.
        let mut frags: Vec<Fragment> = Vec::new();
        for &(u, v) in &all_edges {
            if !eh.contains(&(u, v)) && in_h.contains(&u) && in_h.contains(&v) {
                frags.push(Fragment { attach: vec![u, v], comp: BTreeSet::new(), chord: Some((u, v)) });
            }
        }
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        for &s in badj.keys() {
            if in_h.contains(&s) || seen.contains(&s) {
                continue;
            }
            let mut comp = BTreeSet::from([s]);
            seen.insert(s);
            let mut queue = VecDeque::from([s]);
            let mut attach = BTreeSet::new();
            while let Some(x) = queue.pop_front() {
                for &y in &badj[&x] {
                    if in_h.contains(&y) {
                        attach.insert(y);
                    } else if seen.insert(y) {
                        comp.insert(y);
                        queue.push_back(y);
                    }
                }
            }
            frags.push(Fragment { attach: attach.into_iter().collect(), comp, chord: None });
        }

        // Pick the fragment with the fewest admissible faces (this choice
        // rule is what makes incremental face splitting a correct planarity
        // test); fail if any fragment has none.
        let face_sets: Vec<BTreeSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut chosen: Option<(usize, Vec<usize>)> = None;
        for (i, fr) in frags.iter().enumerate() {
            let adm: Vec<usize> = face_sets
                .iter()
                .enumerate()
                .filter(|(_, s)| fr.attach.iter().all(|a| s.contains(a)))
                .map(|(k, _)| k)
                .collect();
            if adm.is_empty() {
                return Err(Error::NonPlanar);
            }
            let better = match &chosen {
                None => true,
                Some((ci, cadm)) => {
                    let cf = &frags[*ci];
                    (adm.len(), &fr.attach, &fr.comp) < (cadm.len(), &cf.attach, &cf.comp)
                }
            };
            if better {
                chosen = Some((i, adm));
            }
        }
        let (fi, adm) = chosen.expect("edges remain, so a fragment exists");
        let frag = &frags[fi];

        // A path through the fragment between two distinct attachments.
        let path: Vec<usize> = match frag.chord {
            Some((u, v)) => vec![u, v],
            None => alpha_path(&badj, &frag.comp, &in_h, frag.attach[0]),
        };

        // Split the first admissible face along the path.
        let face = faces[adm[0]].clone();
        let l = face.len();
        let a0 = path[0];
        let a1 = *path.last().unwrap();
        let p0 = face.iter().position(|&x| x == a0).expect("attachment lies on the face");
        let p1 = face.iter().position(|&x| x == a1).expect("attachment lies on the face");
        let arc = |from: usize, to: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut k = from;
            loop {
                out.push(face[k]);
                if k == to {
                    break;
                }
                k = (k + 1) % l;
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut f1 = arc(p0, p1);
        f1.extend(interior.iter().rev());
        let mut f2 = arc(p1, p0);
        f2.extend(interior.iter());
        faces[adm[0]] = f1;
        faces.push(f2);
        in_h.extend(interior.iter().copied());
        for k in 0..path.len() - 1 {
            let (x, y) = (path[k], path[k + 1]);
            eh.insert((x.min(y), x.max(y)));
        }
    }

    faces_to_rotations(&orient_faces(&faces)?)
}

/// Some simple cycle of a graph that has one (each 2-connected block with at
/// least three vertices does), via depth-first search.
fn find_cycle(adj: &BTreeMap<usize, BTreeSet<usize>>) -> Vec<usize> {
    struct Frame {
        v: usize,
        parent: usize,
        nbrs: Vec<usize>,
        idx: usize,
    }
    const NONE: usize = usize::MAX;
    let start = *adj.keys().next().expect("nonempty block");
    let mut stack = vec![Frame {
        v: start,
        parent: NONE,
        nbrs: adj[&start].iter().copied().collect(),
        idx: 0,
    }];
    let mut path = vec![start];
    let mut pos_in_path: BTreeMap<usize, usize> = BTreeMap::from([(start, 0)]);
    let mut visited: BTreeSet<usize> = BTreeSet::from([start]);
    loop {
        let step = {
            let Some(top) = stack.last_mut() else { break };
            if top.idx < top.nbrs.len() {
                let w = top.nbrs[top.idx];
                top.idx += 1;
                Some((top.v, top.parent, w))
            } else {
                None
            }
        };
        match step {
            Some((v, parent, w)) => {
                if w == parent {
                    continue;
                }
                if let Some(&p) = pos_in_path.get(&w) {
                    return path[p..].to_vec();
                }
                if visited.insert(w) {
                    pos_in_path.insert(w, path.len());
                    path.push(w);
                    let nbrs = adj[&w].iter().copied().collect();
                    stack.push(Frame { v: w, parent: v, nbrs, idx: 0 });
                }
            }
            None => {
                let fin = stack.pop().unwrap();
                pos_in_path.remove(&fin.v);
                path.pop();
            }
        }
    }
    unreachable!("a 2-connected block with at least three vertices contains a cycle")
}

/// Shortest path from attachment `a0` through the fragment's component to
/// any other embedded vertex (necessarily another attachment).
fn alpha_path(
    adj: &BTreeMap<usize, BTreeSet<usize>>,
    comp: &BTreeSet<usize>,
    in_h: &BTreeSet<usize>,
    a0: usize,
) -> Vec<usize> {
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &x in &adj[&a0] {
        if comp.contains(&x) && !parent.contains_key(&x) {
            parent.insert(x, a0);
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in &adj[&x] {
            if y != a0 && in_h.contains(&y) {
                let mut rev = vec![y, x];
                let mut cur = x;
                while parent[&cur] != a0 {
                    cur = parent[&cur];
                    rev.push(cur);
                }
                rev.push(a0);
                rev.reverse();
                return rev;
            }
            if comp.contains(&y) && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("a fragment of a 2-connected block has at least two attachments")
}

/// Orients an unordered collection of face cycles consistently (each
/// undirected edge traversed once in each direction across the collection).
fn orient_faces(faces: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let mut occurs: BTreeMap<(usize, usize), Vec<(usize, bool)>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        let l = f.len();
        for k in 0..l {
            let (u, v) = (f[k], f[(k + 1) % l]);
            occurs.entry((u.min(v), u.max(v))).or_default().push((i, u < v));
        }
    }
    for (e, loc) in &occurs {
        if loc.len() != 2 {
            return Err(Error::InconsistentRotation(format!(
                "edge {}-{} borders {} face sides instead of 2",
                e.0,
                e.1,
                loc.len()
            )));
        }
    }
    let mut orient: Vec<Option<bool>> = vec![None; faces.len()];
    orient[0] = Some(true);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let oi = orient[i].unwrap();
        let f = &faces[i];
        let l = f.len();
        for k in 0..l {
            let (u, v) = (f[k], f[(k + 1) % l]);
            let key = (u.min(v), u.max(v));
            // Does face i traverse this edge from key.0 to key.1?
            let ti = if oi { u < v } else { v < u };
            let loc = &occurs[&key];
            let (j, fj) = if loc[0] == (i, u < v) { loc[1] } else { loc[0] };
            let needed = fj == !ti; // the partner must traverse it the other way
            match orient[j] {
                None => {
                    orient[j] = Some(needed);
                    queue.push_back(j);
                }
                Some(x) if x == needed => {}
                Some(_) => {
                    return Err(Error::InconsistentRotation(
                        "faces cannot be oriented consistently".into(),
                    ))
                }
            }
        }
    }
    if orient.iter().any(Option::is_none) {
        return Err(Error::InconsistentRotation("face adjacency is disconnected".into()));
    }
    Ok(faces
        .iter()
        .zip(orient)
        .map(|(f, o)| {
            if o.unwrap() {
                f.clone()
            } else {
                let mut r = f.clone();
                r.reverse();
                r
            }
        })
        .collect())
}

/// Rebuilds rotations from a consistently oriented face collection. For
/// consecutive face vertices `u, v, w`, vertex `v` records that the face
/// traversal entering from `u` leaves toward `w`; chaining these successors
/// yields the rotation of `v`. Fails if any vertex's successors do not form
/// a single cycle over its neighbors.
pub fn faces_to_rotations(faces: &[Vec<usize>]) -> Result<Rotations> {
    let mut succ: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for f in faces {
        let l = f.len();
        if l < 2 {
            return Err(Error::InconsistentRotation("face shorter than two vertices".into()));
        }
        for k in 0..l {
            let (u, v, w) = (f[k], f[(k + 1) % l], f[(k + 2) % l]);
            if succ.entry(v).or_default().insert(u, w).is_some() {
                return Err(Error::InconsistentRotation(format!(
                    "vertex {v} has two successors for the incoming edge from {u}"
                )));
            }
        }
    }
    let mut rot: Rotations = BTreeMap::new();
    for (v, nexts) in succ {
        let first = *nexts.keys().next().unwrap();
        let mut order = Vec::with_capacity(nexts.len());
        let mut cur = first;
        loop {
            order.push(cur);
            cur = *nexts.get(&cur).ok_or_else(|| {
                Error::InconsistentRotation(format!("vertex {v} has a dangling successor chain"))
            })?;
            if cur == first {
                break;
            }
            if order.len() > nexts.len() {
                return Err(Error::InconsistentRotation(format!(
                    "vertex {v}: successors do not form a single cycle"
                )));
            }
        }
        if order.len() != nexts.len() {
            return Err(Error::InconsistentRotation(format!(
                "vertex {v}: successors do not form a single cycle"
            )));
        }
        rot.insert(v, order);
    }
    Ok(rot)
}

// ---------------------------------------------------------------------------
// Connectivity
// ---------------------------------------------------------------------------

/// Vertex connectivity, computed as the minimum over non-adjacent pairs of
/// the maximum number of internally vertex-disjoint paths (via max-flow on
/// the vertex-split network); `n − 1` for complete graphs.
pub fn vertex_connectivity(g: &EmbeddedGraph) -> usize {
    let vs: Vec<usize> = g.vertices().collect();
    let n = vs.len();
    if n < 2 {
        return 0;
    }
    if g.m() == n * (n - 1) / 2 {
        return n - 1;
    }
    let mut best = usize::MAX;
    for i in 0..n {
        for j in (i + 1)..n {
            if !g.has_edge(vs[i], vs[j]) {
                best = best.min(max_vertex_flow(g, &vs, vs[i], vs[j]));
            }
        }
    }
    best
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths for
/// non-adjacent `s`, `t`.
fn max_vertex_flow(g: &EmbeddedGraph, vs: &[usize], s: usize, t: usize) -> usize {
    let idx: BTreeMap<usize, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = vs.len();
    let nn = 2 * n; // v_in = 2i, v_out = 2i + 1
    let inf = n as i64 + 10;
    let mut cap = vec![vec![0i64; nn]; nn];
    for (i, &v) in vs.iter().enumerate() {
        cap[2 * i][2 * i + 1] = if v == s || v == t { inf } else { 1 };
    }
    for (u, v) in g.edges() {
        let (a, b) = (idx[&u], idx[&v]);
        cap[2 * a + 1][2 * b] = inf;
        cap[2 * b + 1][2 * a] = inf;
    }
    let (src, snk) = (2 * idx[&s] + 1, 2 * idx[&t]);
    let mut flow = 0i64;
    loop {
        let mut prev = vec![usize::MAX; nn];
        prev[src] = src;
        let mut q = VecDeque::from([src]);
        'bfs: while let Some(x) = q.pop_front() {
            for (y, p) in prev.iter_mut().enumerate() {
                if *p == usize::MAX && cap[x][y] > 0 {
                    *p = x;
                    if y == snk {
                        break 'bfs;
                    }
                    q.push_back(y);
                }
            }
        }
        if prev[snk] == usize::MAX {
            break;
        }
        let mut b = i64::MAX;
        let mut y = snk;
        while y != src {
            let x = prev[y];
            b = b.min(cap[x][y]);
            y = x;
        }
        let mut y = snk;
        while y != src {
            let x = prev[y];
            cap[x][y] -= b;
            cap[y][x] += b;
            y = x;
        }
        flow += b;
    }
    flow as usize
}

// ---------------------------------------------------------------------------
// Triangles and triangulations
// ---------------------------------------------------------------------------

/// All triangles (3-cliques) as sorted triples, in sorted order.
pub fn triangles(g: &EmbeddedGraph) -> Vec<[usize; 3]> {
    let vs: Vec<usize> = g.vertices().collect();
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate().skip(i + 1) {
            if !g.has_edge(u, v) {
                continue;
            }
            for &w in vs.iter().skip(j + 1) {
                if g.has_edge(u, w) && g.has_edge(v, w) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

/// Vertex sets of the triangular faces.
pub fn face_triangle_set(g: &EmbeddedGraph) -> BTreeSet<[usize; 3]> {
    g.faces()
        .into_iter()
        .filter(|f| f.len() == 3)
        .map(|f| {
            let mut t = [f[0], f[1], f[2]];
            t.sort_unstable();
            t
        })
        .collect()
}

/// Triangles that do not bound a face. In a triangulation these are exactly
/// the triangles whose removal disconnects the graph.
pub fn separating_triangles(g: &EmbeddedGraph) -> Vec<[usize; 3]> {
    let facial = face_triangle_set(g);
    triangles(g).into_iter().filter(|t| !facial.contains(t)).collect()
}

/// Whether every face (the outer one included) is a triangle.
pub fn is_triangulation(g: &EmbeddedGraph) -> bool {
    g.n() >= 3 && g.faces().iter().all(|f| f.len() == 3)
}

/// Whether `g` is a triangulation with vertex connectivity at least 4.
///
/// For triangulations on at least five vertices this is equivalent to
/// having no separating triangle; both are computed and cross-checked.
pub fn is_four_connected_triangulation(g: &EmbeddedGraph) -> bool {
    if !is_triangulation(g) {
        return false;
    }
    let k = vertex_connectivity(g);
    if g.n() >= 5 {
        let sep = separating_triangles(g);
        assert_eq!(
            k >= 4,
            sep.is_empty(),
            "connectivity and separating-triangle tests disagree on a triangulation"
        );
    }
    k >= 4
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
