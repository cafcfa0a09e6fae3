//! Quivers and diagrams carrying block annotations, and the contracted
//! cycles that support block relations.
//!
//! Block shapes, with base `(p, i)` standing for the replaced arrow `p -> i`:
//!
//! * `IV`: extra vertices `e1, e2` with arrows `p -> e1 -> i`, `p -> e2 -> i`
//!   and the direct arrow `i -> p`; `e1` and `e2` are not joined. This is the
//!   pattern a self-folded triangle produces inside its enclosing triangle.
//! * `IV2`: one pendant extra vertex `e` with weight-2 arrows `p -> e -> i`
//!   and the simple arrow `i -> p`.
//!
//! Contracting a block deletes its extras and replaces `i -> p` by `p -> i`.

use std::collections::BTreeSet;

use super::cycles::chordless_cycles_by;
use super::{chordless_oriented_cycles, Diagram, Quiver, QuiverError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKind {
    IV,
    IV2,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockAnnotation {
    pub kind: BlockKind,
    /// `(p, i)`: the arrow `p -> i` the block stands for.
    pub base: (usize, usize),
    pub extra: Vec<usize>,
}

impl BlockAnnotation {
    /// The conjugating letters of `u_i`, outermost first.
    pub fn conjugators(&self) -> &[usize] {
        &self.extra
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Underlying {
    Quiver(Quiver),
    Diagram(Diagram),
}

impl Underlying {
    pub fn len(&self) -> usize {
        match self {
            Underlying::Quiver(q) => q.len(),
            Underlying::Diagram(d) => d.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Signed multiplicity (quiver) or signed weight (diagram).
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        match self {
            Underlying::Quiver(q) => q.entry(i, j),
            Underlying::Diagram(d) => d.entry(i, j),
        }
    }
}

/// A chordless cycle of the contracted quiver. `blocks[j]` is the index of
/// the block standing for the edge `vertices[j-1] -> vertices[j]` (indices
/// mod the cycle length), if that edge is contracted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedCycle {
    pub vertices: Vec<usize>,
    pub blocks: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnnotatedQuiver {
    underlying: Underlying,
    blocks: Vec<BlockAnnotation>,
}

impl AnnotatedQuiver {
    pub fn plain(q: Quiver) -> Self {
        AnnotatedQuiver {
            underlying: Underlying::Quiver(q),
            blocks: Vec::new(),
        }
    }

    pub fn plain_diagram(d: Diagram) -> Self {
        AnnotatedQuiver {
            underlying: Underlying::Diagram(d),
            blocks: Vec::new(),
        }
    }

    pub fn new(underlying: Underlying, blocks: Vec<BlockAnnotation>) -> Result<Self, QuiverError> {
        let aq = AnnotatedQuiver { underlying, blocks };
        aq.validate()?;
        Ok(aq)
    }

    pub fn underlying(&self) -> &Underlying {
        &self.underlying
    }

    pub fn blocks(&self) -> &[BlockAnnotation] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.underlying.len()
    }

    pub fn is_empty(&self) -> bool {
        self.underlying.is_empty()
    }

    /// The underlying quiver, if this is not a diagram.
    pub fn quiver(&self) -> Option<&Quiver> {
        match &self.underlying {
            Underlying::Quiver(q) => Some(q),
            Underlying::Diagram(_) => None,
        }
    }

    fn validate(&self) -> Result<(), QuiverError> {
        let n = self.len();
        let bad = |msg: String| Err(QuiverError::InvalidBlock(msg));
        let mut extras = BTreeSet::new();
        let mut bases = BTreeSet::new();
        for (idx, blk) in self.blocks.iter().enumerate() {
            let (p, i) = blk.base;
            for &v in [p, i].iter().chain(&blk.extra) {
                if v >= n {
                    return Err(QuiverError::VertexOutOfRange { vertex: v, n });
                }
            }
            if p == i {
                return bad(format!("block {idx} has a degenerate base"));
            }
            bases.insert(p);
            bases.insert(i);
            for &e in &blk.extra {
                if e == p || e == i || !extras.insert(e) {
                    return bad(format!("block {idx} reuses vertex {e}"));
                }
            }
            let w = |a: usize, b: usize| self.underlying.entry(a, b);
            if w(i, p) != 1 {
                return bad(format!("block {idx} needs the simple arrow {i} -> {p}"));
            }
            match (blk.kind, &self.underlying) {
                (BlockKind::IV, _) => {
                    if blk.extra.len() != 2 {
                        return bad(format!("block {idx} of type IV needs two extra vertices"));
                    }
                    for &e in &blk.extra {
                        if w(p, e) != 1 || w(e, i) != 1 {
                            return bad(format!("block {idx}: expected {p} -> {e} -> {i}"));
                        }
                    }
                    if w(blk.extra[0], blk.extra[1]) != 0 {
                        return bad(format!("block {idx}: extra vertices must not be joined"));
                    }
                }
                (BlockKind::IV2, Underlying::Diagram(d)) => {
                    if blk.extra.len() != 1 {
                        return bad(format!("block {idx} of type IV2 needs one extra vertex"));
                    }
                    let e = blk.extra[0];
                    if !d.pendant().contains(&e) {
                        return bad(format!("block {idx}: vertex {e} is not pendant"));
                    }
                    if w(p, e) != 2 || w(e, i) != 2 {
                        return bad(format!("block {idx}: expected weight-2 arrows {p} -> {e} -> {i}"));
                    }
                }
                (BlockKind::IV2, Underlying::Quiver(_)) => {
                    return bad(format!("block {idx}: type IV2 requires a diagram"));
                }
            }
        }
        if let Some(v) = extras.intersection(&bases).next() {
            return bad(format!("vertex {v} is both a block extra and a base vertex"));
        }
        Ok(())
    }

    /// Chordless oriented cycles of the underlying quiver or diagram. For
    /// diagrams, cycle edges may carry weight 1 or 2.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        match &self.underlying {
            Underlying::Quiver(q) => chordless_oriented_cycles(q),
            Underlying::Diagram(d) => {
                let w = d.matrix();
                chordless_cycles_by(d.len(), |i, j| w[i][j] > 0, |i, j| w[i][j] != 0)
            }
        }
    }

    /// Chordless oriented cycles of the contracted quiver that pass through
    /// at least one contracted block.
    pub fn contracted_cycles(&self) -> Vec<MarkedCycle> {
        if self.blocks.is_empty() {
            return Vec::new();
        }
        let n = self.len();
        let extras: BTreeSet<usize> = self.blocks.iter().flat_map(|b| b.extra.clone()).collect();
        let keep: Vec<usize> = (0..n).filter(|v| !extras.contains(v)).collect();
        let mut c: Vec<Vec<i32>> = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.underlying.entry(i, j)).collect())
            .collect();
        let pos = |v: usize| keep.binary_search(&v).expect("base vertex is kept");
        for blk in &self.blocks {
            let (p, i) = (pos(blk.base.0), pos(blk.base.1));
            c[p][i] = 1;
            c[i][p] = -1;
        }
        let block_of = |a: usize, b: usize| {
            self.blocks
                .iter()
                .position(|blk| blk.base == (keep[a], keep[b]))
        };
        let raw = chordless_cycles_by(keep.len(), |i, j| c[i][j] == 1, |i, j| c[i][j] != 0);
        let mut out = Vec::new();
        'cycles: for cyc in raw {
            let d = cyc.len();
            let marks: Vec<Option<usize>> = (0..d).map(|j| block_of(cyc[(j + d - 1) % d], cyc[j])).collect();
            if marks.iter().all(Option::is_none) {
                continue;
            }
            let vertices: Vec<usize> = cyc.iter().map(|&v| keep[v]).collect();
            // Each used block's extras may only touch its own base among the
            // vertices of the support.
            let used: Vec<&BlockAnnotation> = marks.iter().flatten().map(|&b| &self.blocks[b]).collect();
            for blk in &used {
                for &e in &blk.extra {
                    for &v in &vertices {
                        if v != blk.base.0 && v != blk.base.1 && self.underlying.entry(e, v) != 0 {
                            continue 'cycles;
                        }
                    }
                    for other in &used {
                        if std::ptr::eq(*other, *blk) {
                            continue;
                        }
                        if other.extra.iter().any(|&f| self.underlying.entry(e, f) != 0) {
                            continue 'cycles;
                        }
                    }
                }
            }
            out.push(MarkedCycle {
                vertices,
                blocks: marks,
            });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oriented triangle 0 -> 1 -> 2 -> 0 with the arrows 0 -> 1 and 1 -> 2
    /// replaced by backwards blocks on extras {3, 4} and {5, 6}.
    fn two_block_triangle() -> AnnotatedQuiver {
        let q = Quiver::from_arrows(
            7,
            &[
                (0, 3, 1),
                (3, 1, 1),
                (0, 4, 1),
                (4, 1, 1),
                (1, 0, 1),
                (1, 5, 1),
                (5, 2, 1),
                (1, 6, 1),
                (6, 2, 1),
                (2, 1, 1),
                (2, 0, 1),
            ],
        )
        .unwrap();
        AnnotatedQuiver::new(
            Underlying::Quiver(q),
            vec![
                BlockAnnotation {
                    kind: BlockKind::IV,
                    base: (0, 1),
                    extra: vec![3, 4],
                },
                BlockAnnotation {
                    kind: BlockKind::IV,
                    base: (1, 2),
                    extra: vec![5, 6],
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn two_blocks_give_one_marked_cycle() {
        let aq = two_block_triangle();
        assert_eq!(
            aq.contracted_cycles(),
            vec![MarkedCycle {
                vertices: vec![0, 1, 2],
                blocks: vec![None, Some(0), Some(1)],
            }]
        );
    }

    #[test]
    fn acyclic_contraction_has_no_cycles() {
        // A single block with nothing closing the contracted arrow.
        let q = Quiver::from_arrows(4, &[(0, 2, 1), (2, 1, 1), (0, 3, 1), (3, 1, 1), (1, 0, 1)]).unwrap();
        let aq = AnnotatedQuiver::new(
            Underlying::Quiver(q),
            vec![BlockAnnotation {
                kind: BlockKind::IV,
                base: (0, 1),
                extra: vec![2, 3],
            }],
        )
        .unwrap();
        assert!(aq.contracted_cycles().is_empty());
    }

    #[test]
    fn pendant_block_in_a_triangle() {
        // Triangle 0 -> 1 -> 2 -> 0 with 0 -> 1 replaced by a IV2 block on 3.
        let d = Diagram::new(
            4,
            &[(0, 3, 2), (3, 1, 2), (1, 0, 1), (1, 2, 1), (2, 0, 1)],
            [3],
        )
        .unwrap();
        let aq = AnnotatedQuiver::new(
            Underlying::Diagram(d),
            vec![BlockAnnotation {
                kind: BlockKind::IV2,
                base: (0, 1),
                extra: vec![3],
            }],
        )
        .unwrap();
        assert_eq!(
            aq.contracted_cycles(),
            vec![MarkedCycle {
                vertices: vec![0, 1, 2],
                blocks: vec![None, Some(0), None],
            }]
        );
    }

    #[test]
    fn block_shape_is_checked() {
        let q = Quiver::from_arrows(4, &[(0, 2, 1), (2, 1, 1), (0, 3, 1), (3, 1, 1), (0, 1, 1)]).unwrap();
        let err = AnnotatedQuiver::new(
            Underlying::Quiver(q),
            vec![BlockAnnotation {
                kind: BlockKind::IV,
                base: (0, 1),
                extra: vec![2, 3],
            }],
        );
        assert!(matches!(err, Err(QuiverError::InvalidBlock(_))));
    }
}
