//! Triangulated oriented marked surfaces.
//!
//! A [`Triangulation`] is a list of oriented triangles whose sides are paired
//! by an involution on side slots. Slot `3 * t + s` is side `s` of triangle
//! `t`, running counter-clockwise from corner `s` to corner `s + 1 (mod 3)`.
//! Unpaired slots are boundary segments. Every pairing glues two sides with
//! opposite orientations, so the glued surface is always oriented; marked
//! points are the classes of corners under the gluing.

mod digon;
mod equivalence;
mod flip;
mod flipgraph;
mod polygon;
mod quiver_of;
mod triangulation;

pub use digon::{
    associate_triangulation, removal_confluence, AssociateOptions, AssociateRecord,
    ConfluenceReport, Digon, DigonKind, RemovalStep,
};
pub use equivalence::{canonical_key, is_equivalent, unoriented_key, Equivalence};
pub use flip::FlipResult;
pub use flipgraph::{loop_free_flip_graph, FlipEdge, FlipGraph};
pub use polygon::{
    disc_triangulation, punctured_disc_triangulation, regluing_reaches_opposite, standard_triangulation,
    PolygonGluing, PolygonGluingFile,
};
pub use triangulation::{LoopReport, SurfaceSignature, Triangulation, TriangulationFile};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("a triangulation needs at least one triangle")]
    NoTriangles,
    #[error("slot {slot} out of range ({slots} slots)")]
    SlotOutOfRange { slot: usize, slots: usize },
    #[error("slot {0} is glued to itself")]
    SelfGluedSlot(usize),
    #[error("glue is not an involution: slot {0} is paired twice")]
    NotInvolution(usize),
    #[error("gluing of slots {0} and {1} does not reverse orientation")]
    OrientationViolation(usize, usize),
    #[error("the glued complex is disconnected")]
    Disconnected,
    #[error("arc {0} out of range")]
    ArcOutOfRange(usize),
    #[error("arc {0} is a boundary segment and cannot be flipped")]
    BoundaryArc(usize),
    #[error("arc {0} is the inner side of a self-folded triangle; flipping it needs tagged arcs")]
    TaggedFlipRequired(usize),
    #[error("standard triangulations need at least 3 punctures, got {0}")]
    TooFewPunctures(usize),
    #[error("a disc needs more boundary points, got {0}")]
    TooFewPoints(usize),
    #[error("side pairing is not a perfect matching of {0} sides")]
    NotAMatching(usize),
    #[error("pairing has {classes} vertex classes; a genus-{g} polygon gluing needs 2")]
    WrongGenus { g: usize, classes: usize },
    #[error("side {0} has coinciding endpoints after gluing")]
    DegenerateSide(usize),
    #[error("removing this digon would leave no triangulation (last digon)")]
    LastDigon,
    #[error("the given digon does not occur in this triangulation")]
    NotADigon,
    #[error("free digons around a boundary component are only removed when explicitly enabled")]
    BoundaryRemovalDisabled,
    #[error("malformed file: {0}")]
    Format(String),
}
