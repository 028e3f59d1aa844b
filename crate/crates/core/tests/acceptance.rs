//! Acceptance gate: eight end-to-end criteria over the bundled fixtures.
//!
//! Each criterion is one test that prints a single `criterion N: PASS`
//! line on success (visible with `--nocapture`); a failure panics with
//! the offending fixture and detail.  The criteria:
//!
//! 1. Base-triangle fidelity in both labelings, under 10 ms.
//! 2. Every bundled 4-connected triangulation (n ≤ 12, at least 50 of
//!    them) builds and closes to a representation realizing exactly the
//!    input graph, all paths within three bends, all non-corner paths
//!    hooked L-shapes, under 30 s total.
//! 3. The same bundle plus every near-triangulation fixture builds with
//!    the full per-level invariant audit switched on.
//! 4. 1,000 randomized empty-row/column insertions never change the
//!    realized graph.
//! 5. No unit grid edge is ever shared by more than three paths, and a
//!    split step produces its triple-shared edge.
//! 6. The wheel-doubling route and the cube augmentation route each
//!    finish and self-verify in under a second.
//! 7. 100 random single-segment corruptions are all caught.
//! 8. Step classification succeeds on every valid 2-sided labeling of
//!    every near-triangulation fixture with n ≤ 10, and each returned
//!    step re-validates.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use epg_core::decompose::{try_ap_removal, try_bq_removal};
use epg_core::verify::edge_ownership;
use epg_core::{
    add_a1b1_edge, audit_invariants, build_representation, classify_step, is_wheel,
    label_two_sided, parse_graph, represent_planar_no_sep_triangle, verify_representation,
    BuildOptions, DecompositionStep, EmbeddedGraph, EpgRepresentation, Segment,
    TwoSidedNearTriangulation, VertexPath,
};

// ---------------------------------------------------------------------------
// Fixture plumbing
// ---------------------------------------------------------------------------

fn fixture_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

fn load(name: &str) -> epg_core::ParsedGraph {
    let text = std::fs::read_to_string(fixture_dir().join(name))
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"));
    parse_graph(&text).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// Fixture files whose names start with one of `prefixes`, sorted by name.
fn fixtures(prefixes: &[&str]) -> Vec<(String, EmbeddedGraph)> {
    let mut names: Vec<String> = std::fs::read_dir(fixture_dir())
        .expect("fixture directory")
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|n| prefixes.iter().any(|p| n.starts_with(p)))
        .collect();
    names.sort();
    names.into_iter().map(|n| { let g = load(&n).graph; (n, g) }).collect()
}

/// All bundled 4-connected triangulations.
fn triangulations() -> Vec<(String, EmbeddedGraph)> {
    fixtures(&["tri_", "octahedron.g", "icosahedron.g"])
}

/// All bundled near-triangulations (outer face longer than a triangle).
fn near_triangulations() -> Vec<(String, EmbeddedGraph)> {
    fixtures(&["near_", "wheel_"])
}

/// First labeling of `g`'s outer face that builds, over all starting
/// corners and side splits.
fn build_any_labeling(
    g: &EmbeddedGraph,
    opts: &BuildOptions,
    close: bool,
) -> Option<(EpgRepresentation, TwoSidedNearTriangulation)> {
    let cycle = g.outer().to_vec();
    for start in 0..cycle.len() {
        let mut rotated = cycle[start..].to_vec();
        rotated.extend_from_slice(&cycle[..start]);
        let Ok(oriented) = g.with_outer(rotated) else { continue };
        for split in 1..cycle.len() {
            let Ok(t) = label_two_sided(&oriented, split) else { continue };
            let Ok(mut rep) = build_representation(&t, opts) else { continue };
            if close && add_a1b1_edge(&mut rep, &t).is_err() {
                continue;
            }
            return Some((rep, t));
        }
    }
    None
}

fn triangle() -> EmbeddedGraph {
    epg_core::build_embedded_graph(&[(0, 1), (1, 2), (0, 2)], None, None).unwrap()
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_base_triangle_fidelity() {
    let g = triangle();
    let expected_edges: BTreeSet<(usize, usize)> = [(0, 1), (1, 2)].into();
    let expected_vertices: BTreeSet<usize> = [0, 1, 2].into();
    let clock = Instant::now();
    for split in [2, 1] {
        let t = label_two_sided(&g, split).unwrap();
        assert_eq!((t.p(), t.q()), if split == 2 { (2, 1) } else { (1, 2) });
        let rep = build_representation(&t, &BuildOptions::default()).unwrap();
        // Exactly the two edges incident to the middle vertex are
        // realized; the closing corner edge is deliberately absent.
        let report = epg_core::verify::verify_against_edges(&rep, &expected_vertices, &expected_edges);
        assert!(report.pass, "split {split}: {report:?}");
        audit_invariants(&rep, &t).unwrap_or_else(|e| panic!("split {split}: {e}"));
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_millis(10), "took {elapsed:?}");
    println!("criterion 1: PASS — both base labelings exact, audited, in {elapsed:?}");
}

#[test]
fn criterion_2_all_bundled_triangulations_build() {
    let bundle = triangulations();
    assert!(bundle.len() >= 50, "only {} triangulation fixtures", bundle.len());
    let clock = Instant::now();
    for (name, g) in &bundle {
        let (rep, t) =
            build_any_labeling(g, &BuildOptions::default(), true).unwrap_or_else(|| {
                panic!("{name}: no labeling of the outer face builds")
            });
        let report = verify_representation(&rep, g);
        assert!(report.pass, "{name}: {report:?}");
        assert!(report.max_bends <= 3, "{name}: {} bends", report.max_bends);
        let (a1, b1) = (t.a()[0], t.b()[0]);
        for v in g.vertices().filter(|&v| v != a1 && v != b1) {
            assert!(
                matches!(rep.path(v), Some(VertexPath::Hooked(_))),
                "{name}: path of {v} is not a hooked L-shape"
            );
        }
    }
    let elapsed = clock.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "criterion 2: PASS — {} triangulations built, closed and verified in {elapsed:?}",
        bundle.len()
    );
}

#[test]
fn criterion_3_per_level_audit_passes_everywhere() {
    let audit = BuildOptions { audit: true };
    let mut built = 0;
    for (name, g) in triangulations() {
        assert!(
            build_any_labeling(&g, &audit, true).is_some(),
            "{name}: no labeling builds under full audit"
        );
        built += 1;
    }
    for (name, g) in near_triangulations() {
        assert!(
            build_any_labeling(&g, &audit, false).is_some(),
            "{name}: no labeling builds under full audit"
        );
        built += 1;
    }
    println!("criterion 3: PASS — {built} fixtures rebuilt with every level audited");
}

#[test]
fn criterion_4_grid_surgery_never_changes_the_graph() {
    let mut pool: Vec<EpgRepresentation> = Vec::new();
    for (name, g) in near_triangulations() {
        let (rep, _) = build_any_labeling(&g, &BuildOptions::default(), false)
            .unwrap_or_else(|| panic!("{name}: does not build"));
        pool.push(rep);
    }
    for name in ["octahedron.g", "icosahedron.g"] {
        let g = load(name).graph;
        pool.push(build_any_labeling(&g, &BuildOptions::default(), true).unwrap().0);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for op in 0..1000 {
        let slot = op % pool.len();
        let rep = &mut pool[slot];
        let points = rep.covered_points();
        let (min_x, max_x) = points.iter().fold((i64::MAX, i64::MIN), |(lo, hi), p| {
            (lo.min(p.x), hi.max(p.x))
        });
        let (min_y, max_y) = points.iter().fold((i64::MAX, i64::MIN), |(lo, hi), p| {
            (lo.min(p.y), hi.max(p.y))
        });
        let before = rep.intersection_graph();
        let count = rng.gen_range(1..=3);
        let outcome = if rng.gen_bool(0.5) {
            let at = rng.gen_range(min_x - 1..=max_x + 1);
            rep.insert_empty_columns(at, count)
        } else {
            let at = rng.gen_range(min_y - 1..=max_y + 1);
            rep.insert_empty_rows(at, count)
        };
        outcome.unwrap_or_else(|e| panic!("op {op}: {e}"));
        assert_eq!(before, rep.intersection_graph(), "op {op} changed the graph");
    }
    println!("criterion 4: PASS — 1000 row/column insertions left every realized graph intact");
}

#[test]
fn criterion_5_ownership_is_bounded_and_splits_share_triple_edges() {
    for (name, g) in triangulations() {
        let (rep, _) = build_any_labeling(&g, &BuildOptions::default(), true)
            .unwrap_or_else(|| panic!("{name}: does not build"));
        let worst = edge_ownership(&rep).values().map(BTreeSet::len).max().unwrap_or(0);
        assert!(worst <= 3, "{name}: a grid edge has {worst} owners");
    }

    // Find a fixture whose top-level step is a split; the merge for that
    // step must leave one grid edge shared by exactly the apex and the
    // two side tips.
    let mut split_seen = false;
    'search: for (name, g) in near_triangulations() {
        let cycle = g.outer().to_vec();
        for split in 1..cycle.len() {
            let Ok(t) = label_two_sided(&g, split) else { continue };
            let Ok(DecompositionStep::Split { x, .. }) = classify_step(&t) else { continue };
            let rep = build_representation(&t, &BuildOptions::default())
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            let tips: BTreeSet<usize> = [x, *t.a().last().unwrap(), *t.b().last().unwrap()].into();
            assert!(
                edge_ownership(&rep).values().any(|owners| *owners == tips),
                "{name}: no grid edge shared by the split triple {tips:?}"
            );
            split_seen = true;
            break 'search;
        }
    }
    assert!(split_seen, "no near-triangulation fixture classifies as a split");
    println!("criterion 5: PASS — ownership ≤ 3 everywhere; split's triple-shared edge present");
}

#[test]
fn criterion_6_augmentation_routes_are_fast_and_exact() {
    let wheel = load("wheel_w4.g").graph;
    assert!(is_wheel(&wheel).is_some(), "wheel_w4.g is not a wheel");
    let clock = Instant::now();
    let rep = represent_planar_no_sep_triangle(&wheel, &[], &BuildOptions::default()).unwrap();
    let wheel_time = clock.elapsed();
    let report = verify_representation(&rep, &wheel);
    assert!(report.pass && report.max_bends <= 3, "wheel: {report:?}");
    assert!(wheel_time < Duration::from_secs(1), "wheel took {wheel_time:?}");

    let cube = load("cube.g");
    assert_eq!(cube.augmentation.len(), 6, "cube.g must ship its augmentation");
    let clock = Instant::now();
    let rep =
        represent_planar_no_sep_triangle(&cube.graph, &cube.augmentation, &BuildOptions::default())
            .unwrap();
    let cube_time = clock.elapsed();
    let report = verify_representation(&rep, &cube.graph);
    assert!(report.pass && report.max_bends <= 3, "cube: {report:?}");
    assert!(cube_time < Duration::from_secs(1), "cube took {cube_time:?}");
    println!(
        "criterion 6: PASS — wheel route {wheel_time:?}, cube route {cube_time:?}, both exact"
    );
}

/// One random single-segment edit: an endpoint pulled or pushed along the
/// segment's axis, or the whole segment shifted sideways.
fn mutate_segment(s: Segment, rng: &mut ChaCha8Rng) -> Option<Segment> {
    let d = rng.gen_range(1..=2i64);
    let (a, b) = (s.a(), s.b());
    let made = if s.is_vertical() {
        match rng.gen_range(0..5) {
            0 => Segment::vertical(a.x, a.y - d, b.y),
            1 => Segment::vertical(a.x, a.y, b.y + d),
            2 => Segment::vertical(a.x, a.y + d, b.y),
            3 => Segment::vertical(a.x, a.y, b.y - d),
            _ => Segment::vertical(a.x + if rng.gen_bool(0.5) { d } else { -d }, a.y, b.y),
        }
    } else {
        match rng.gen_range(0..5) {
            0 => Segment::horizontal(a.y, a.x - d, b.x),
            1 => Segment::horizontal(a.y, a.x, b.x + d),
            2 => Segment::horizontal(a.y, a.x + d, b.x),
            3 => Segment::horizontal(a.y, a.x, b.x - d),
            _ => Segment::horizontal(a.y + if rng.gen_bool(0.5) { d } else { -d }, a.x, b.x),
        }
    };
    made.ok()
}

#[test]
fn criterion_7_random_corruptions_are_always_caught() {
    let mut pool: Vec<(EpgRepresentation, EmbeddedGraph)> = Vec::new();
    for (name, g) in triangulations() {
        if !(name.starts_with("tri_n10") || name == "octahedron.g" || name == "icosahedron.g") {
            continue;
        }
        let rep = build_any_labeling(&g, &BuildOptions::default(), true)
            .unwrap_or_else(|| panic!("{name}: does not build"))
            .0;
        pool.push((rep, g));
    }
    assert!(pool.len() >= 5, "corruption pool too small");

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut caught = 0;
    let mut attempts = 0;
    while caught < 100 {
        attempts += 1;
        assert!(attempts < 50_000, "only {caught} effective corruptions found");
        let (rep, g) = &pool[rng.gen_range(0..pool.len())];
        let ids = rep.vertex_ids();
        let v = ids[rng.gen_range(0..ids.len())];
        let mut segments = rep.path(v).unwrap().segments();
        let idx = rng.gen_range(0..segments.len());
        let Some(mutated) = mutate_segment(segments[idx], &mut rng) else { continue };
        if mutated == segments[idx] {
            continue;
        }
        segments[idx] = mutated;
        let path = if segments.len() == 1 {
            if mutated.is_vertical() {
                VertexPath::Vertical(mutated)
            } else {
                VertexPath::Horizontal(mutated)
            }
        } else {
            VertexPath::Poly(segments)
        };
        let mut corrupt = rep.clone();
        // A mutation may break the path's own chaining; those rejections
        // guard the model, not the verifier, so they are resampled.
        if corrupt.set_path(v, path).is_err() {
            continue;
        }
        if corrupt.intersection_graph() == rep.intersection_graph() {
            // Geometry moved but no adjacency did: still a faithful
            // representation, not a corruption.
            continue;
        }
        let report = verify_representation(&corrupt, g);
        assert!(
            !report.pass,
            "corruption of vertex {v} slipped through: {report:?}"
        );
        caught += 1;
    }
    println!("criterion 7: PASS — 100 adjacency-changing corruptions, all caught ({attempts} sampled)");
}

/// Checks that a classified step, applied to `t`, reproduces consistent,
/// independently re-validated pieces.
fn revalidate_step(name: &str, t: &TwoSidedNearTriangulation, step: &DecompositionStep) {
    let revalidate = |piece: &TwoSidedNearTriangulation| {
        TwoSidedNearTriangulation::new(piece.graph().clone(), piece.a().to_vec(), piece.b().to_vec())
            .unwrap_or_else(|e| panic!("{name}: piece fails re-validation: {e}"));
    };
    match step {
        DecompositionStep::ApRemoval { new_b } => {
            let (reduced, again) =
                try_ap_removal(t).unwrap_or_else(|| panic!("{name}: removal step not reproducible"));
            assert_eq!(&again, new_b, "{name}");
            assert_eq!(reduced.n(), t.n() - 1, "{name}");
            assert_eq!(reduced.a(), &t.a()[..t.p() - 1], "{name}");
            let mut b2 = t.b().to_vec();
            b2.extend(new_b);
            assert_eq!(reduced.b(), b2, "{name}");
            revalidate(&reduced);
        }
        DecompositionStep::BqRemoval { new_a } => {
            let (reduced, again) =
                try_bq_removal(t).unwrap_or_else(|| panic!("{name}: removal step not reproducible"));
            assert_eq!(&again, new_a, "{name}");
            assert_eq!(reduced.n(), t.n() - 1, "{name}");
            assert_eq!(reduced.b(), &t.b()[..t.q() - 1], "{name}");
            let mut a2 = t.a().to_vec();
            a2.extend(new_a);
            assert_eq!(reduced.a(), a2, "{name}");
            revalidate(&reduced);
        }
        DecompositionStep::Split { x, i, j, t_prime, t_a, t_b } => {
            let (a, b) = (t.a(), t.b());
            let mut prime_a = a[..*i].to_vec();
            prime_a.push(*x);
            assert_eq!(t_prime.a(), prime_a, "{name}");
            assert_eq!(t_prime.b(), &b[..*j], "{name}");
            assert_eq!(t_a.a(), &a[i - 1..], "{name}");
            assert_eq!(t_a.b(), [*x], "{name}");
            assert_eq!(t_b.a(), [*x], "{name}");
            assert_eq!(t_b.b(), &b[j - 1..], "{name}");
            // The three pieces repeat only the apex (three times) and the
            // two cut vertices (twice each).
            assert_eq!(t_prime.n() + t_a.n() + t_b.n(), t.n() + 4, "{name}");
            for piece in [t_prime, t_a, t_b] {
                revalidate(piece);
            }
        }
    }
}

#[test]
fn criterion_8_every_labeling_of_every_small_fixture_classifies() {
    let mut labelings = 0;
    let mut splits = 0;
    for (name, g) in near_triangulations() {
        if g.n() > 10 {
            continue;
        }
        let cycle = g.outer().to_vec();
        let mut oriented_cycles = vec![cycle.clone()];
        let mut mirrored = cycle.clone();
        mirrored.reverse();
        oriented_cycles.push(mirrored);
        for oriented in oriented_cycles {
            for start in 0..oriented.len() {
                let mut rotated = oriented[start..].to_vec();
                rotated.extend_from_slice(&oriented[..start]);
                let Ok(host) = g.with_outer(rotated) else { continue };
                for split in 1..oriented.len() {
                    let Ok(t) = label_two_sided(&host, split) else { continue };
                    if t.is_base() {
                        continue;
                    }
                    let step = classify_step(&t).unwrap_or_else(|e| {
                        panic!("{name}: labeling (start {start}, split {split}) has no step: {e}")
                    });
                    if matches!(step, DecompositionStep::Split { .. }) {
                        splits += 1;
                    }
                    revalidate_step(&name, &t, &step);
                    labelings += 1;
                }
            }
        }
    }
    assert!(labelings > 100, "only {labelings} labelings exercised");
    assert!(splits > 0, "no labeling classified as a split");
    println!(
        "criterion 8: PASS — {labelings} labelings classified ({splits} splits), all steps re-validated"
    );
}
