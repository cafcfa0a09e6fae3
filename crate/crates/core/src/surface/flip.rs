use super::triangulation::{slot, Triangulation};
use super::SurfaceError;

/// A flipped triangulation together with the correspondence of arcs:
/// `arc_map[a]` is the index in the new triangulation of old arc `a`, with
/// the flipped arc sent to the new diagonal.
#[derive(Clone, Debug)]
pub struct FlipResult {
    pub triangulation: Triangulation,
    pub arc_map: Vec<usize>,
    pub new_arc: usize,
}

impl Triangulation {
    /// Replaces `arc` by the other diagonal of its quadrilateral.
    pub fn flip(&self, arc: usize) -> Result<Triangulation, SurfaceError> {
        Ok(self.flip_tracked(arc)?.triangulation)
    }

    /// Flip that also reports where every arc went.
    ///
    /// With the arc glued between side `s1` of `t1` and side `s2` of `t2`,
    /// let the quadrilateral's corners be `P, Q, R` (in `t1`, arc from `P` to
    /// `Q`) and `S` (in `t2`). Afterwards `t1` is `(S, Q, R)` with sides
    /// `[SQ, QR, RS]` and `t2` is `(R, P, S)` with sides `[RP, PS, SR]`; the new
    /// diagonal occupies side 2 of both.
    pub fn flip_tracked(&self, arc: usize) -> Result<FlipResult, SurfaceError> {
        if arc >= self.arc_count() {
            return Err(SurfaceError::ArcOutOfRange(arc));
        }
        let [x, y] = self.arcs()[arc];
        let (t1, s1, t2, s2) = (x / 3, x % 3, y / 3, y % 3);
        if t1 == t2 {
            return Err(SurfaceError::TaggedFlipRequired(arc));
        }
        // Outer sides of the quadrilateral, keyed by old slot.
        let a = slot(t1, s1 + 1);
        let b = slot(t1, s1 + 2);
        let c = slot(t2, s2 + 1);
        let d = slot(t2, s2 + 2);
        let moved = [(a, slot(t1, 1)), (b, slot(t2, 0)), (c, slot(t2, 1)), (d, slot(t1, 0))];
        let relocate = |z: usize| {
            moved
                .iter()
                .find(|&&(old, _)| old == z)
                .map(|&(_, new)| new)
                .unwrap_or(z)
        };
        let mut glue = self.glue().to_vec();
        for s in 0..3 {
            glue[slot(t1, s)] = None;
            glue[slot(t2, s)] = None;
        }
        for &(old, new) in &moved {
            let partner = self.partner(old).map(relocate);
            glue[new] = partner;
            if let Some(p) = partner {
                glue[p] = Some(new);
            }
        }
        let (n1, n2) = (slot(t1, 2), slot(t2, 2));
        glue[n1] = Some(n2);
        glue[n2] = Some(n1);
        let result = Triangulation::from_glue(glue).expect("flip keeps validity");
        let arc_map: Vec<usize> = self
            .arcs()
            .iter()
            .enumerate()
            .map(|(i, &[p, _])| {
                let s = if i == arc { n1 } else { relocate(p) };
                result.arc_at(s).expect("arcs stay interior")
            })
            .collect();
        let new_arc = arc_map[arc];
        Ok(FlipResult {
            triangulation: result,
            arc_map,
            new_arc,
        })
    }

    /// Arcs whose flip is defined and yields a loop-free triangulation.
    pub fn loop_free_flips(&self) -> Vec<usize> {
        (0..self.arc_count())
            .filter(|&a| self.flip(a).map(|t| t.is_loop_free()).unwrap_or(false))
            .collect()
    }
}
