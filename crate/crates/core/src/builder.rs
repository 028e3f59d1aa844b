//! Recursive construction of grid-path representations.
//!
//! [`build_representation`] turns a two-sided near-triangulation `T` into
//! paths realizing every edge of `T` except the closing edge `(a_1, b_1)`;
//! [`add_a1b1_edge`] then splices that edge in with one extra bend on
//! `P(a_1)`.  The construction recurses along the decomposition steps:
//!
//! - a three-vertex graph is drawn directly ([`base_two_a`],
//!   [`base_two_b`]);
//! - after an `a_p`-removal the sub-representation is reused with its
//!   b-side pushed two columns left, the released vertices one column
//!   left, and `P(a_p)` wrapped around the vacated south-west corner
//!   ([`merge_ap_removal`]);
//! - a `b_q`-removal is the exact mirror, pushing the a-side down
//!   ([`merge_bq_removal`]);
//! - a split builds its three pieces independently, stretches them until
//!   their seams agree, and overlays them so that the three shared
//!   vertices' paths coincide ([`merge_split`]).
//!
//! Every mutation that could disturb existing adjacencies re-derives the
//! intersection graph and fails loudly instead of committing a wrong
//! layout; [`build_representation`] additionally checks the realized edge
//! set at every recursion level, and can audit the full boundary
//! discipline after each merge.

use std::collections::{BTreeMap, BTreeSet};

use crate::decompose::{
    find_split, try_ap_removal, try_bq_removal, SplitParts, TwoSidedNearTriangulation,
};
use crate::model::{
    boundary_hexagon, EpgRepresentation, GridEdge, GridPoint, HookedLShape,
    Segment, VertexPath,
};
use crate::verify::{audit_invariants, edge_ownership, verify_against_edges};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Options and entry point
// ---------------------------------------------------------------------------

/// Knobs for [`build_representation`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Audit the full boundary discipline after every merge, not just the
    /// realized edge set.
    pub audit: bool,
}

/// Builds paths realizing exactly the edges of `t` minus the closing edge
/// `(a_1, b_1)`.
///
/// The realized edge set is re-checked against the graph at every level
/// of the recursion; with [`BuildOptions::audit`] set, the boundary
/// discipline is audited at every level too.
pub fn build_representation(
    t: &TwoSidedNearTriangulation,
    opts: &BuildOptions,
) -> Result<EpgRepresentation> {
    let rep = if t.is_base() {
        match (t.p(), t.q()) {
            (2, 1) => base_two_a(t)?,
            (1, 2) => base_two_b(t)?,
            other => {
                return Err(Error::NotNearTriangulation(format!(
                    "a triangle must have side sizes (2, 1) or (1, 2), got {other:?}"
                )))
            }
        }
    } else if let Some((t_prime, _)) = try_ap_removal(t) {
        let inner = build_representation(&t_prime, opts)?;
        merge_ap_removal(t, &t_prime, inner)?
    } else if let Some((t_prime, _)) = try_bq_removal(t) {
        let inner = build_representation(&t_prime, opts)?;
        merge_bq_removal(t, &t_prime, inner)?
    } else if let Some(parts) = find_split(t) {
        let rep_p = build_representation(&parts.t_prime, opts)?;
        let rep_a = build_representation(&parts.t_a, opts)?;
        let rep_b = build_representation(&parts.t_b, opts)?;
        merge_split(t, &parts, rep_p, rep_a, rep_b)?
    } else {
        return Err(Error::NoValidStep);
    };

    let vertices: BTreeSet<usize> = t.graph().vertices().collect();
    let mut edges = t.graph().edge_set();
    let (a1, b1) = (t.a()[0], t.b()[0]);
    edges.remove(&(a1.min(b1), a1.max(b1)));
    let report = verify_against_edges(&rep, &vertices, &edges);
    if !report.pass {
        return Err(Error::PostconditionFailed(format!(
            "merge result realizes the wrong graph: missing {:?}, extra {:?}, malformed {:?}",
            report.missing_edges, report.extra_edges, report.malformed_paths
        )));
    }
    if opts.audit {
        audit_invariants(&rep, t)?;
    }
    Ok(rep)
}

/// Splices the withheld closing edge `(a_1, b_1)` into a finished
/// representation: `P(b_1)` grows one unit past the top-right corner and
/// `P(a_1)` turns into it, sharing exactly that unit.
pub fn add_a1b1_edge(rep: &mut EpgRepresentation, t: &TwoSidedNearTriangulation) -> Result<()> {
    let (a1, b1) = (t.a()[0], t.b()[0]);
    let hex = boundary_hexagon(rep)?;
    let top = *rep
        .path(b1)
        .and_then(VertexPath::as_horizontal)
        .ok_or_else(|| post("P(b_1) should be a horizontal segment"))?;
    ensure(
        top == Segment::horizontal(hex.y_t, hex.x_l, hex.x_r)?,
        "P(b_1) should span the whole top side",
    )?;
    let right = *rep
        .path(a1)
        .and_then(VertexPath::as_vertical)
        .ok_or_else(|| post("P(a_1) should be a vertical segment"))?;
    ensure(
        right == Segment::vertical(hex.x_r, hex.y_b, hex.y_t)?,
        "P(a_1) should span the whole right side",
    )?;

    let before = rep.intersection_graph();
    rep.set_path(
        b1,
        VertexPath::Horizontal(Segment::horizontal(hex.y_t, hex.x_l, hex.x_r + 1)?),
    )?;
    rep.set_path(
        a1,
        VertexPath::Poly(vec![
            right,
            Segment::horizontal(hex.y_t, hex.x_r, hex.x_r + 1)?,
        ]),
    )?;
    let after = rep.intersection_graph();
    let gained: BTreeSet<_> = after.difference(&before).copied().collect();
    let lost: BTreeSet<_> = before.difference(&after).copied().collect();
    let expected = BTreeSet::from([(a1.min(b1), a1.max(b1))]);
    ensure(
        lost.is_empty() && gained == expected,
        format!("closing the boundary should add exactly {expected:?}, added {gained:?}, lost {lost:?}"),
    )
}

// ---------------------------------------------------------------------------
// Base cases
// ---------------------------------------------------------------------------

/// Draws the triangle with two a-side vertices: `P(b_1)` is the top side,
/// `P(a_1)` the right side, and `P(a_2)` a fully hooked L touching both.
pub fn base_two_a(t: &TwoSidedNearTriangulation) -> Result<EpgRepresentation> {
    ensure(
        (t.p(), t.q()) == (2, 1),
        "base with two a-side vertices needs sides (2, 1)",
    )?;
    let (a1, a2, b1) = (t.a()[0], t.a()[1], t.b()[0]);
    let mut paths = BTreeMap::new();
    paths.insert(a1, VertexPath::Vertical(Segment::vertical(3, 0, 2)?));
    paths.insert(
        a2,
        VertexPath::Hooked(HookedLShape::new(
            Segment::vertical(1, 0, 2)?,
            Segment::horizontal(0, 1, 3)?,
            Some(Segment::horizontal(2, 1, 2)?),
            Some(Segment::vertical(3, 0, 1)?),
        )?),
    );
    paths.insert(b1, VertexPath::Horizontal(Segment::horizontal(2, 0, 3)?));
    EpgRepresentation::new(paths)
}

/// Draws the triangle with two b-side vertices — the transpose of
/// [`base_two_a`].
pub fn base_two_b(t: &TwoSidedNearTriangulation) -> Result<EpgRepresentation> {
    ensure(
        (t.p(), t.q()) == (1, 2),
        "base with two b-side vertices needs sides (1, 2)",
    )?;
    let (a1, b1, b2) = (t.a()[0], t.b()[0], t.b()[1]);
    let mut paths = BTreeMap::new();
    paths.insert(a1, VertexPath::Vertical(Segment::vertical(2, 0, 3)?));
    paths.insert(b1, VertexPath::Horizontal(Segment::horizontal(3, 0, 2)?));
    paths.insert(
        b2,
        VertexPath::Hooked(HookedLShape::new(
            Segment::vertical(0, 1, 3)?,
            Segment::horizontal(1, 0, 2)?,
            Some(Segment::horizontal(3, 0, 1)?),
            Some(Segment::vertical(2, 1, 2)?),
        )?),
    );
    EpgRepresentation::new(paths)
}

// ---------------------------------------------------------------------------
// Removal merges
// ---------------------------------------------------------------------------

/// Extends a representation of `T − a_p` to one of `T`.
///
/// The b-side of `T` moves two columns left and the vertices released by
/// the removal one column left; `P(a_p)` then wraps around the vacated
/// south-west corner: its vertical trunk shares the released vertices'
/// column, its top hook reaches the stretched `d(b_q)`, and its right
/// hook climbs the first edge of the old reflex column.
pub fn merge_ap_removal(
    t: &TwoSidedNearTriangulation,
    t_prime: &TwoSidedNearTriangulation,
    mut rep: EpgRepresentation,
) -> Result<EpgRepresentation> {
    let (a, b) = (t.a(), t.b());
    let (p, q) = (a.len(), b.len());
    ensure(p >= 2, "a_p-removal needs at least two a-side vertices")?;
    let ap = a[p - 1];
    ensure(rep.path(ap).is_none(), "a_p should be absent from the sub-representation")?;

    let hex = boundary_hexagon(&rep)?;
    // Row of d(b_q): with one b-side vertex that is the top side itself.
    let hook_row = if q == 1 {
        hex.y_t
    } else {
        rep.path(b[q - 1])
            .and_then(VertexPath::as_hooked)
            .ok_or_else(|| post("P(b_q) should be a hooked L"))?
            .down
            .a()
            .y
    };
    let corner = GridPoint::new(hex.x_m, hex.y_b);

    let old_b: BTreeSet<usize> = b.iter().copied().collect();
    rep.translate_paths(&old_b, -2, 0)?;
    let new_b: BTreeSet<usize> = t_prime.b()[q..].iter().copied().collect();
    if !new_b.is_empty() {
        rep.translate_paths(&new_b, -1, 0)?;
    }

    let col = hex.x_l - 1;
    let shape = HookedLShape::new(
        Segment::vertical(col, hex.y_b, hook_row)?,
        Segment::horizontal(hex.y_b, col, corner.x)?,
        Some(Segment::horizontal(hook_row, col, hex.x_l)?),
        Some(Segment::vertical(corner.x, hex.y_b, hex.y_b + 1)?),
    )?;
    rep.set_path(ap, VertexPath::Hooked(shape))?;
    Ok(rep)
}

/// Extends a representation of `T − b_q` to one of `T` — the mirror of
/// [`merge_ap_removal`]: the a-side moves two rows down, the released
/// vertices one row down, and `P(b_q)` wraps around the vacated corner.
pub fn merge_bq_removal(
    t: &TwoSidedNearTriangulation,
    t_prime: &TwoSidedNearTriangulation,
    mut rep: EpgRepresentation,
) -> Result<EpgRepresentation> {
    let (a, b) = (t.a(), t.b());
    let (p, q) = (a.len(), b.len());
    ensure(q >= 2, "b_q-removal needs at least two b-side vertices")?;
    let bq = b[q - 1];
    ensure(rep.path(bq).is_none(), "b_q should be absent from the sub-representation")?;

    let hex = boundary_hexagon(&rep)?;
    // Column of ℓ(a_p): with one a-side vertex that is the right side.
    let hook_col = if p == 1 {
        hex.x_r
    } else {
        rep.path(a[p - 1])
            .and_then(VertexPath::as_hooked)
            .ok_or_else(|| post("P(a_p) should be a hooked L"))?
            .ell
            .a()
            .x
    };
    let corner = GridPoint::new(hex.x_l, hex.y_m);

    let old_a: BTreeSet<usize> = a.iter().copied().collect();
    rep.translate_paths(&old_a, 0, -2)?;
    let new_a: BTreeSet<usize> = t_prime.a()[p..].iter().copied().collect();
    if !new_a.is_empty() {
        rep.translate_paths(&new_a, 0, -1)?;
    }

    let row = hex.y_b - 1;
    let shape = HookedLShape::new(
        Segment::vertical(corner.x, row, corner.y)?,
        Segment::horizontal(row, corner.x, hook_col)?,
        Some(Segment::horizontal(corner.y, corner.x, corner.x + 1)?),
        Some(Segment::vertical(hook_col, row, hex.y_b)?),
    )?;
    rep.set_path(bq, VertexPath::Hooked(shape))?;
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Split merge
// ---------------------------------------------------------------------------

fn h_edge(x: i64, y: i64) -> GridEdge {
    GridEdge {
        p: GridPoint::new(x, y),
        horizontal: true,
    }
}

fn v_edge(x: i64, y: i64) -> GridEdge {
    GridEdge {
        p: GridPoint::new(x, y),
        horizontal: false,
    }
}

/// Length of the run of consecutive edges owned exclusively by `owner`.
fn exclusive_run(
    own: &BTreeMap<GridEdge, BTreeSet<usize>>,
    owner: usize,
    edges: impl Iterator<Item = GridEdge>,
) -> i64 {
    let mut n = 0;
    for e in edges {
        match own.get(&e) {
            Some(o) if o.len() == 1 && o.contains(&owner) => n += 1,
            _ => break,
        }
    }
    n
}

/// Columns of `P(x)`'s trunk and of its down-segment's right end in the
/// remainder piece.
fn x_anchor_cols(rep_p: &EpgRepresentation, x: usize) -> Result<(i64, i64)> {
    let hook = rep_p
        .path(x)
        .and_then(VertexPath::as_hooked)
        .ok_or_else(|| post("P(x) should be a hooked L in the remainder"))?;
    Ok((hook.ell.a().x, hook.down.b().x))
}

/// Combines representations of the three split pieces into one for `t`.
///
/// The remainder piece `Γ'` keeps its paths for the three shared vertices
/// `x`, `a_i`, `b_j`; the a-piece is placed under `d'(x)` (after widening
/// whichever side is narrower) and the b-piece to the left of `ℓ'(x)`
/// (after aligning the seam row and column, with enough slack that hooks
/// from different pieces never meet).  The b-piece loses its bottom
/// antenna and its removable right hook; its `d(b_q)` instead grows one
/// unit to meet both `P(a_p)`'s re-hung top hook and `d'(x)` on one shared
/// grid edge, realizing `(a_p, b_q)`, `(a_p, x)`, and `(x, b_q)` there.
pub fn merge_split(
    t: &TwoSidedNearTriangulation,
    parts: &SplitParts,
    mut rep_p: EpgRepresentation,
    mut rep_a: EpgRepresentation,
    mut rep_b: EpgRepresentation,
) -> Result<EpgRepresentation> {
    let (a, b) = (t.a(), t.b());
    let (p, q) = (a.len(), b.len());
    let (x, i, j) = (parts.x, parts.i, parts.j);
    let (ap, bq) = (a[p - 1], b[q - 1]);
    let (a_i, b_j) = (a[i - 1], b[j - 1]);
    ensure(
        parts.t_a.a().last() == Some(&ap) && parts.t_b.b().last() == Some(&bq),
        "split pieces should end at a_p and b_q",
    )?;

    // Step 1: both pieces must end in their unit antennas.
    let mut hex_a = boundary_hexagon(&rep_a)?;
    ensure(
        hex_a.y_m == hex_a.y_t && hex_a.x_m == hex_a.x_l + 1,
        "a-piece should carry a unit antenna at its top-left corner",
    )?;
    let mut hex_b = boundary_hexagon(&rep_b)?;
    ensure(
        hex_b.x_m == hex_b.x_r && hex_b.y_m == hex_b.y_b + 1,
        "b-piece should carry a unit antenna at its bottom-right corner",
    )?;

    // Step 2: swing P(a_p)'s top hook from beside the antenna onto it, so
    // nothing of a_p pokes right of the antenna column after placement.
    {
        let hook = rep_a
            .path(ap)
            .and_then(VertexPath::as_hooked)
            .ok_or_else(|| post("P(a_p) should be a hooked L in the a-piece"))?
            .clone();
        let old_top = hook.top.ok_or_else(|| post("P(a_p) should have a top hook"))?;
        ensure(
            old_top == Segment::horizontal(hex_a.y_t, hex_a.x_m, hex_a.x_m + 1)?,
            "P(a_p)'s top hook should sit just right of the antenna",
        )?;
        let new_top = Segment::horizontal(hex_a.y_t, hex_a.x_l, hex_a.x_m)?;
        let before = rep_a.intersection_graph();
        rep_a.set_path(
            ap,
            VertexPath::Hooked(HookedLShape::new(
                hook.ell,
                hook.down,
                Some(new_top),
                hook.right,
            )?),
        )?;
        ensure(
            rep_a.intersection_graph() == before,
            "re-hanging P(a_p)'s top hook must not change adjacencies",
        )?;
    }

    // Step 3: the a-piece slides under d'(x), so its width must equal the
    // span of d'(x); widen whichever is narrower.
    let (mut x_trunk, mut x_seam) = x_anchor_cols(&rep_p, x)?;
    let gap = x_seam - x_trunk;
    let width_a = hex_a.x_r - hex_a.x_l;
    match gap.cmp(&width_a) {
        std::cmp::Ordering::Less => {
            rep_p.insert_empty_columns(x_seam, width_a - gap)?;
            let anchors = x_anchor_cols(&rep_p, x)?;
            x_trunk = anchors.0;
            x_seam = anchors.1;
        }
        std::cmp::Ordering::Greater => {
            rep_a.insert_empty_columns(hex_a.x_r, gap - width_a)?;
            hex_a = boundary_hexagon(&rep_a)?;
        }
        std::cmp::Ordering::Equal => {}
    }
    ensure(
        x_seam - x_trunk == hex_a.x_r - hex_a.x_l,
        "a-piece width should match the span of d'(x)",
    )?;

    // Step 4: the b-piece's top row fuses into the reflex row of the
    // remainder.  Both spans grow to a common width chosen so that the
    // hooks touching d'(b_j) from the remainder side and those touching
    // the b-piece's top side can never share an edge.
    let mut hex_p = boundary_hexagon(&rep_p)?;
    ensure(x_trunk == hex_p.x_m, "ℓ'(x) should cover the reflex column")?;
    {
        let w_prime = x_trunk - hex_p.x_l;
        let w_b = hex_b.x_r - hex_b.x_l;
        let own_p = edge_ownership(&rep_p);
        let own_b = edge_ownership(&rep_b);
        let excl_p = exclusive_run(
            &own_p,
            b_j,
            (0..w_prime).map(|k| h_edge(hex_p.x_l + k, hex_p.y_m)),
        );
        let excl_b = exclusive_run(
            &own_b,
            b_j,
            (0..w_b).map(|k| h_edge(hex_b.x_r - 1 - k, hex_b.y_t)),
        );
        let w_final = [w_prime, w_b, (w_prime - excl_p) + (w_b - excl_b) + 1]
            .into_iter()
            .max()
            .unwrap();
        if w_final > w_prime {
            rep_p.insert_empty_columns(hex_p.x_l + 1, w_final - w_prime)?;
            let anchors = x_anchor_cols(&rep_p, x)?;
            x_trunk = anchors.0;
            x_seam = anchors.1;
            hex_p = boundary_hexagon(&rep_p)?;
        }
        if w_final > w_b {
            rep_b.insert_empty_columns(hex_b.x_r, w_final - w_b)?;
            hex_b = boundary_hexagon(&rep_b)?;
        }
    }

    // Step 5: the b-piece's right column fuses into ℓ'(x); align the body
    // height with the reflex column the same way.
    {
        let h_prime = hex_p.y_m - hex_p.y_b;
        let h_b = hex_b.y_t - hex_b.y_m;
        let own_p = edge_ownership(&rep_p);
        let own_b = edge_ownership(&rep_b);
        let excl_p = exclusive_run(
            &own_p,
            x,
            (0..h_prime).map(|k| v_edge(x_trunk, hex_p.y_b + k)),
        );
        let excl_b = exclusive_run(
            &own_b,
            x,
            (0..h_b).map(|k| v_edge(hex_b.x_r, hex_b.y_t - 1 - k)),
        );
        let h_final = [h_prime, h_b, (h_prime - excl_p) + (h_b - excl_b) + 1]
            .into_iter()
            .max()
            .unwrap();
        if h_final > h_prime {
            rep_p.insert_empty_rows(hex_p.y_b + 1, h_final - h_prime)?;
            hex_p = boundary_hexagon(&rep_p)?;
        }
        if h_final > h_b {
            rep_b.insert_empty_rows(hex_b.y_t, h_final - h_b)?;
            hex_b = boundary_hexagon(&rep_b)?;
        }
    }

    // Step 6: surgery on the b-piece.  The bottom antenna of P(x) is cut
    // (its edge carries no adjacency), the removable right hook of P(b_q)
    // comes off, and d(b_q) grows one unit to the right — after placement
    // that unit lands on the shared corner edge.
    {
        let trunk = *rep_b
            .path(x)
            .and_then(VertexPath::as_vertical)
            .ok_or_else(|| post("P(x) should be vertical in the b-piece"))?;
        ensure(
            trunk == Segment::vertical(hex_b.x_r, hex_b.y_b, hex_b.y_t)?,
            "P(x) should span the whole right side of the b-piece",
        )?;
        let before = rep_b.intersection_graph();
        rep_b.set_path(
            x,
            VertexPath::Vertical(Segment::vertical(hex_b.x_r, hex_b.y_m, hex_b.y_t)?),
        )?;
        ensure(
            rep_b.intersection_graph() == before,
            "cutting the b-piece antenna must not change adjacencies",
        )?;

        let hook = rep_b
            .path(bq)
            .and_then(VertexPath::as_hooked)
            .ok_or_else(|| post("P(b_q) should be a hooked L in the b-piece"))?
            .clone();
        ensure(hook.right.is_some(), "P(b_q) should have a right hook")?;
        let down = hook.down;
        let extended = Segment::horizontal(down.a().y, down.a().x, down.b().x + 1)?;
        rep_b.set_path(
            bq,
            VertexPath::Hooked(HookedLShape::new(hook.ell, extended, hook.top, None)?),
        )?;
        let after = rep_b.intersection_graph();
        let lost: BTreeSet<_> = before.difference(&after).copied().collect();
        let gained: BTreeSet<_> = after.difference(&before).copied().collect();
        ensure(
            gained.is_empty() && lost == BTreeSet::from([(x.min(bq), x.max(bq))]),
            format!("removing the right hook should drop exactly (x, b_q), dropped {lost:?}, gained {gained:?}"),
        )?;
    }

    // Step 7: the right flank of the remainder (a_1 … a_i) stretches down
    // by the full height of the a-piece to flank it.
    let drop = hex_a.y_t - hex_a.y_b;
    let seam_row = hex_p.y_b;
    let reflex_row = hex_p.y_m;
    let flank: BTreeSet<usize> = a[..i].iter().copied().collect();
    rep_p.translate_paths(&flank, 0, -drop)?;

    // Step 8: place both pieces and fuse.  The shared vertices keep their
    // remainder paths, which must cover everything the pieces drew.
    rep_a.translate_all(x_seam - hex_a.x_r, seam_row - hex_a.y_t);
    rep_b.translate_all(x_trunk - hex_b.x_r, reflex_row - hex_b.y_t);

    let vs_p: BTreeSet<usize> = rep_p.vertex_ids().into_iter().collect();
    let vs_a: BTreeSet<usize> = rep_a.vertex_ids().into_iter().collect();
    let vs_b: BTreeSet<usize> = rep_b.vertex_ids().into_iter().collect();
    ensure(
        vs_p.intersection(&vs_a).copied().collect::<BTreeSet<_>>() == BTreeSet::from([x, a_i])
            && vs_p.intersection(&vs_b).copied().collect::<BTreeSet<_>>()
                == BTreeSet::from([x, b_j])
            && vs_a.intersection(&vs_b).copied().collect::<BTreeSet<_>>() == BTreeSet::from([x]),
        "split pieces should overlap exactly in {x, a_i, b_j}",
    )?;
    for (piece, shared, keeper) in [
        (&rep_a, x, &rep_p),
        (&rep_b, x, &rep_p),
        (&rep_a, a_i, &rep_p),
        (&rep_b, b_j, &rep_p),
    ] {
        let drawn = piece.path(shared).unwrap().unit_edges();
        let kept = keeper.path(shared).unwrap().unit_edges();
        ensure(
            drawn.is_subset(&kept),
            format!("the remainder path of vertex {shared} should cover its piece path"),
        )?;
    }

    let mut paths = rep_p.into_paths();
    for (v, path) in rep_a.into_paths() {
        if v != x && v != a_i {
            paths.insert(v, path);
        }
    }
    for (v, path) in rep_b.into_paths() {
        if v != x && v != b_j {
            paths.insert(v, path);
        }
    }
    let rep = EpgRepresentation::new(paths)?;

    // Step 9: the shared corner edge carries exactly the apex triangle.
    let owners = rep.owners_of(h_edge(x_trunk, seam_row));
    ensure(
        owners == BTreeSet::from([x, ap, bq]),
        format!("corner edge should belong to the apex triangle, got {owners:?}"),
    )?;
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

fn post(msg: impl Into<String>) -> Error {
    Error::PostconditionFailed(msg.into())
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(post(msg))
    }
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
