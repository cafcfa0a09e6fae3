use super::triangulation::{slot, Triangulation};
use crate::quiver::{AnnotatedQuiver, BlockAnnotation, BlockKind, Quiver, Underlying};

impl Triangulation {
    /// The quiver with one vertex per arc (in arc order).
    ///
    /// Each triangle that is not self-folded contributes arrows from side `s`
    /// to side `s + 1`; opposite arrows cancel. The inner arc of a
    /// self-folded triangle takes over the arrows of the loop around it, and
    /// every such pair is recorded as a type IV block on the enclosing
    /// triangle when the block shape survives cancellation.
    pub fn quiver_of(&self) -> AnnotatedQuiver {
        let q = self.plain_quiver();
        let mut blocks: Vec<BlockAnnotation> = Vec::new();
        for t in self.self_folded_triangles() {
            let s = self.self_folded_side(t).expect("self-folded");
            let inner = self.arc_at(slot(t, s)).expect("folded sides are glued");
            let outer = slot(t, s + 2);
            let (Some(loop_arc), Some(q_slot)) = (self.arc_at(outer), self.partner(outer)) else {
                continue;
            };
            let (delta, r) = (q_slot / 3, q_slot % 3);
            if self.self_folded_side(delta).is_some() {
                continue;
            }
            let (Some(x), Some(y)) = (self.arc_at(slot(delta, r + 1)), self.arc_at(slot(delta, r + 2))) else {
                continue;
            };
            let candidate = BlockAnnotation {
                kind: BlockKind::IV,
                base: (y, x),
                extra: vec![loop_arc, inner],
            };
            let mut trial = blocks.clone();
            trial.push(candidate);
            if AnnotatedQuiver::new(Underlying::Quiver(q.clone()), trial.clone()).is_ok() {
                blocks = trial;
            }
        }
        AnnotatedQuiver::new(Underlying::Quiver(q), blocks).expect("blocks validated one by one")
    }

    /// [`Triangulation::quiver_of`] without block annotations.
    pub fn plain_quiver(&self) -> Quiver {
        let n = self.arc_count();
        let mut proj: Vec<Option<usize>> = (0..n).map(Some).collect();
        for t in self.self_folded_triangles() {
            let s = self.self_folded_side(t).expect("self-folded");
            let inner = self.arc_at(slot(t, s)).expect("folded sides are glued");
            proj[inner] = self.arc_at(slot(t, s + 2));
        }
        let mut pre: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (x, p) in proj.iter().enumerate() {
            if let Some(p) = p {
                pre[*p].push(x);
            }
        }
        let mut b = vec![vec![0i32; n]; n];
        for t in 0..self.triangle_count() {
            if self.self_folded_side(t).is_some() {
                continue;
            }
            for s in 0..3 {
                let (Some(u), Some(v)) = (self.arc_at(slot(t, s)), self.arc_at(slot(t, s + 1))) else {
                    continue;
                };
                for &x in &pre[u] {
                    for &y in &pre[v] {
                        b[x][y] += 1;
                        b[y][x] -= 1;
                    }
                }
            }
        }
        Quiver::from_matrix(b).expect("triangle contributions are skew-symmetric")
    }
}
