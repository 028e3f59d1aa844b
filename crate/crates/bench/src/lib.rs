//! Shared helpers for the pipeline benchmarks: fixture loading and a
//! first-success labeling search over a graph's outer face.

use std::path::PathBuf;

use epg_core::{
    add_a1b1_edge, build_representation, label_two_sided, parse_graph, BuildOptions,
    EmbeddedGraph, EpgRepresentation, ParsedGraph,
};

/// Loads a graph file from the workspace `fixtures/` directory.
pub fn load_fixture(name: &str) -> ParsedGraph {
    let path = PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures")).join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("fixture {}: {e}", path.display()));
    parse_graph(&text).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// Builds and closes a representation of `g` under the first labeling of
/// its outer face that succeeds.
pub fn build_closed(g: &EmbeddedGraph) -> EpgRepresentation {
    let cycle = g.outer().to_vec();
    for start in 0..cycle.len() {
        let mut rotated = cycle[start..].to_vec();
        rotated.extend_from_slice(&cycle[..start]);
        let Ok(oriented) = g.with_outer(rotated) else { continue };
        for split in 1..cycle.len() {
            let Ok(t) = label_two_sided(&oriented, split) else { continue };
            let Ok(mut rep) = build_representation(&t, &BuildOptions::default()) else {
                continue;
            };
            if add_a1b1_edge(&mut rep, &t).is_ok() {
                return rep;
            }
        }
    }
    panic!("no labeling of the outer face builds");
}
