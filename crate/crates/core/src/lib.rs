//! Edge-intersection representations of planar graphs by grid paths.
//!
//! Every vertex of a graph is drawn as a path in the rectangular grid, and
//! two vertices are adjacent exactly when their paths share at least one
//! unit-length grid edge. This crate constructs such representations where
//! every path has at most three bends, for two families of inputs:
//!
//! * 4-connected planar triangulations (directly, by a recursive
//!   decomposition of two-sided near-triangulations), and
//! * planar graphs that can be augmented to a 4-connected triangulation
//!   without introducing separating triangles (by augmenting, representing
//!   the augmented graph, and deleting the helper vertices).
//!
//! # Structure
//!
//! * [`graph`] — embedded planar graphs: rotation systems, face traversal,
//!   planarity testing, connectivity, separating triangles.
//! * [`decompose`] — two-sided near-triangulations and the recursive
//!   decomposition step (corner removals and splits).
//! * [`model`] — grid geometry: points, segments, paths, representations,
//!   and the surgical operations used while merging sub-representations.
//! * [`builder`] — the recursive construction itself.
//! * [`verify`] — construction-blind verification and structural audits.
//! * [`augment`] — the augmentation pipeline for non-triangulations.
//! * [`io`] — text formats for graphs, representations and reports.
//! * [`gen`] — seeded generation of 4-connected triangulations for
//!   fixtures and stress tests.

pub mod augment;
pub mod builder;
pub mod decompose;
pub mod gen;
pub mod graph;
pub mod io;
pub mod model;
pub mod verify;

pub use augment::{
    delete_vertices, handle_wheel, is_wheel, represent_planar_no_sep_triangle,
    subdivide_and_stellate,
};
pub use builder::{add_a1b1_edge, build_representation, BuildOptions};
pub use decompose::{classify_step, label_two_sided, DecompositionStep, TwoSidedNearTriangulation};
pub use gen::{canonical_form, double_wheel, peel_outer_vertex, sample_four_connected};
pub use graph::{build_embedded_graph, EmbeddedGraph};
pub use io::{error_to_json, parse_graph, rep_from_json, rep_to_json, report_to_json, ParsedGraph};
pub use model::{
    BoundaryHexagon, EpgRepresentation, GridEdge, GridPoint, HookedLShape, Segment, VertexPath,
};
pub use verify::{audit_invariants, verify_representation, Report};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Which of the two outer-boundary sides a chord was found on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The side `a_1, …, a_p` of the outer face.
    A,
    /// The side `b_1, …, b_q` of the outer face.
    B,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::A => write!(f, "a"),
            Side::B => write!(f, "b"),
        }
    }
}

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The input graph admits no planar embedding.
    #[error("graph is not planar")]
    NonPlanar,

    /// A supplied rotation system does not describe a planar embedding
    /// (its face count violates Euler's formula) or is malformed.
    #[error("rotation system is not a planar embedding: {0}")]
    InconsistentRotation(String),

    /// The same edge was given more than once.
    #[error("multi-edge {u}-{v}")]
    MultiEdge { u: usize, v: usize },

    /// A self-loop was given.
    #[error("self-loop at {v}")]
    SelfLoop { v: usize },

    /// The requested outer cycle is not a face of the embedding.
    #[error("requested outer cycle is not a face of the embedding")]
    OuterNotAFace,

    /// Two non-consecutive vertices on the same boundary side are adjacent.
    #[error("chord between positions {i} and {j} on side {side}")]
    ChordOnSide { side: Side, i: usize, j: usize },

    /// The graph is not a two-sided near-triangulation for the requested
    /// labeling (reason in the payload).
    #[error("not a two-sided near-triangulation: {0}")]
    NotNearTriangulation(String),

    /// No corner removal and no split applies (should be impossible for
    /// valid two-sided near-triangulations and indicates a bug or bad input).
    #[error("no decomposition step applies")]
    NoValidStep,

    /// A split was required but no valid split position exists.
    #[error("no valid split position exists")]
    NoValidSplit,

    /// A representation's outer boundary is not the expected six-corner
    /// orthogonal shape.
    #[error("boundary is not an orthogonal hexagon: {0}")]
    NotHexagonal(String),

    /// A path surgery changed which pairs of paths share grid edges.
    #[error("surgery changed the intersection graph: {0}")]
    ConnectivityBroken(String),

    /// A structural audit of a representation failed.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    /// The graph given to the wheel handler is not a wheel.
    #[error("graph is not a wheel")]
    NotAWheel,

    /// The wheel's hub degree is too small for the double-wheel trick:
    /// the result would not be 4-connected.
    #[error("wheel hub degree {hub_degree} is below 4")]
    WheelTooSmall { hub_degree: usize },

    /// The proposed augmentation edges do not yield a 4-connected planar
    /// triangulation free of separating triangles.
    #[error("augmentation is invalid: {0}")]
    AugmentationInvalid(String),

    /// An operation finished but its declared postcondition does not hold.
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),

    /// A text input could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A vertex id or label was referenced but never defined.
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),

    /// An edge was required to be present but is not.
    #[error("edge {u}-{v} is not in the graph")]
    MissingEdge { u: usize, v: usize },
}

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
