//! Small triangulations used throughout the examples and tests.
//!
//! Each one is stored as a JSON file under `data/` in the
//! [`TriangulationFile`](crate::surface::TriangulationFile) format.

use crate::quiver::Quiver;
use crate::surface::Triangulation;

pub const TETRAHEDRON: &str = include_str!("../data/tetrahedron.json");
pub const SQUARE_DISC: &str = include_str!("../data/square_disc.json");
pub const ANNULUS_TWO_POINTS: &str = include_str!("../data/annulus_two_points.json");
pub const SELF_FOLDED_MONOGON: &str = include_str!("../data/self_folded_monogon.json");
pub const PUNCTURED_ANNULUS: &str = include_str!("../data/punctured_annulus.json");

fn load(text: &str) -> Triangulation {
    Triangulation::from_json(text).expect("bundled data is valid")
}

/// Four-times-punctured sphere triangulated as a tetrahedron.
pub fn tetrahedron() -> Triangulation {
    load(TETRAHEDRON)
}

/// Disc with four boundary points and one diagonal.
pub fn square_disc() -> Triangulation {
    load(SQUARE_DISC)
}

/// Annulus with one boundary point on each side; its quiver is a double arrow.
pub fn annulus_two_points() -> Triangulation {
    load(ANNULUS_TWO_POINTS)
}

/// Once-punctured monogon, a single self-folded triangle.
pub fn self_folded_monogon() -> Triangulation {
    load(SELF_FOLDED_MONOGON)
}

/// Loop-free triangulation of the once-punctured annulus with one boundary
/// point on each side. After relabelling by [`PUNCTURED_ANNULUS_LABELS`] its
/// quiver is the oriented 4-cycle `0 -> 1 -> 2 -> 3 -> 0` together with
/// arrows `0 -> 4` and `2 -> 4`; see [`punctured_annulus_quiver`].
pub fn punctured_annulus() -> Triangulation {
    load(PUNCTURED_ANNULUS)
}

/// Arc `a` of [`punctured_annulus`] is vertex `PUNCTURED_ANNULUS_LABELS[a]`.
pub const PUNCTURED_ANNULUS_LABELS: [usize; 5] = [0, 4, 2, 1, 3];

pub fn punctured_annulus_quiver() -> Quiver {
    punctured_annulus().plain_quiver().relabel(&PUNCTURED_ANNULUS_LABELS)
}
