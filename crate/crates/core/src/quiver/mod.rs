//! Quivers, diagrams and their mutations.
//!
//! A [`Quiver`] is stored as its signed multiplicity matrix: `b[i][j]` is the
//! number of arrows `i -> j` minus the number of arrows `j -> i`. The matrix is
//! skew-symmetric with zero diagonal, which encodes "no loops, no 2-cycles".
//! A [`Diagram`] carries weighted arrows (weights 1 and 2) in the same signed
//! layout.

mod annotated;
mod canonical;
mod class;
mod cycles;
mod json;

pub use annotated::{AnnotatedQuiver, BlockAnnotation, BlockKind, MarkedCycle, Underlying};
pub use canonical::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use class::{mutation_class, MutationClass};
pub use cycles::chordless_oriented_cycles;
pub use json::{AnnotatedQuiverFile, BlockFile, QuiverFile};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("vertex {vertex} out of range for a quiver on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("arrows in both directions between {0} and {1} (2-cycle)")]
    TwoCycle(usize, usize),
    #[error("arrow multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("diagram arrow {0} -> {1} has weight {2}; only 1 and 2 are allowed")]
    BadWeight(usize, usize, i32),
    #[error("diagram arrow {0} -> {1} has weight 2 but touches no pendant vertex")]
    UnsupportedWeight(usize, usize),
    #[error("invalid block annotation: {0}")]
    InvalidBlock(String),
    #[error("arrow multiplicity overflow while mutating at {0}")]
    Overflow(usize),
    #[error("malformed quiver file: {0}")]
    Format(String),
}

/// An oriented multigraph without loops and 2-cycles, as a signed matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    b: Vec<Vec<i32>>,
}

impl Quiver {
    /// The quiver with `n` vertices and no arrows.
    pub fn empty(n: usize) -> Self {
        Quiver {
            b: vec![vec![0; n]; n],
        }
    }

    pub fn from_matrix(b: Vec<Vec<i32>>) -> Result<Self, QuiverError> {
        check_skew(&b)?;
        Ok(Quiver { b })
    }

    /// Builds a quiver from `(source, target, multiplicity)` triples.
    /// Repeated triples accumulate; arrows in both directions between the
    /// same pair are rejected.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize, u32)]) -> Result<Self, QuiverError> {
        let mut q = Quiver::empty(n);
        for &(i, j, m) in arrows {
            for v in [i, j] {
                if v >= n {
                    return Err(QuiverError::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(QuiverError::Loop(i));
            }
            if m == 0 {
                return Err(QuiverError::ZeroMultiplicity);
            }
            if q.b[i][j] < 0 {
                return Err(QuiverError::TwoCycle(i, j));
            }
            q.b[i][j] += m as i32;
            q.b[j][i] -= m as i32;
        }
        Ok(q)
    }

    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    /// Signed multiplicity `b[i][j]`.
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.b[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.b
    }

    /// All arrows as `(source, target, multiplicity)`, sorted.
    pub fn arrows(&self) -> Vec<(usize, usize, u32)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.b[i][j] > 0 {
                    out.push((i, j, self.b[i][j] as u32));
                }
            }
        }
        out
    }

    pub fn arrow_count(&self) -> u32 {
        self.arrows().iter().map(|a| a.2).sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.b
            .iter()
            .flatten()
            .map(|x| x.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// Vertices joined to `k` by at least one arrow.
    pub fn neighbors(&self, k: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&j| self.b[k][j] != 0).collect()
    }

    /// Mutation in direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Quiver, QuiverError> {
        let n = self.len();
        if k >= n {
            return Err(QuiverError::VertexOutOfRange { vertex: k, n });
        }
        let b = &self.b;
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = if i == k || j == k {
                    -b[i][j]
                } else {
                    let corr = b[i][k]
                        .abs()
                        .checked_mul(b[k][j])
                        .zip(b[i][k].checked_mul(b[k][j].abs()))
                        .and_then(|(x, y)| x.checked_add(y))
                        .and_then(|s| b[i][j].checked_add(s / 2));
                    corr.ok_or(QuiverError::Overflow(k))?
                };
            }
        }
        Ok(Quiver { b: out })
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Quiver {
        let n = self.len();
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[perm[i]][perm[j]] = self.b[i][j];
            }
        }
        Quiver { b: out }
    }

    /// The quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let b = self
            .b
            .iter()
            .map(|row| row.iter().map(|x| -x).collect())
            .collect();
        Quiver { b }
    }

    /// Induced subquiver on `vertices`, relabelled `0..vertices.len()` in order.
    pub fn induced(&self, vertices: &[usize]) -> Quiver {
        let b = vertices
            .iter()
            .map(|&i| vertices.iter().map(|&j| self.b[i][j]).collect())
            .collect();
        Quiver { b }
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver(n={}, arrows={:?})", self.len(), self.arrows())
    }
}

fn check_skew(b: &[Vec<i32>]) -> Result<(), QuiverError> {
    let n = b.len();
    if b.iter().any(|row| row.len() != n) {
        return Err(QuiverError::NotSquare);
    }
    for i in 0..n {
        if b[i][i] != 0 {
            return Err(QuiverError::Loop(i));
        }
        for j in 0..i {
            if b[i][j] != -b[j][i] {
                return Err(QuiverError::NotSkewSymmetric(i, j));
            }
        }
    }
    Ok(())
}

/// A quiver with valued arrows of weight 1 or 2.
///
/// `w[i][j] = +weight` for an arrow `i -> j`. Weight-2 arrows are only allowed
/// when they touch a vertex listed in `pendant` (the vertex of an arc ending
/// at an orbifold point).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    w: Vec<Vec<i32>>,
    pendant: BTreeSet<usize>,
}

impl Diagram {
    pub fn new(
        n: usize,
        arrows: &[(usize, usize, u32)],
        pendant: impl IntoIterator<Item = usize>,
    ) -> Result<Self, QuiverError> {
        let pendant: BTreeSet<usize> = pendant.into_iter().collect();
        if let Some(&v) = pendant.iter().find(|&&v| v >= n) {
            return Err(QuiverError::VertexOutOfRange { vertex: v, n });
        }
        let mut w = vec![vec![0; n]; n];
        for &(i, j, weight) in arrows {
            for v in [i, j] {
                if v >= n {
                    return Err(QuiverError::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(QuiverError::Loop(i));
            }
            if w[i][j] != 0 {
                return Err(QuiverError::TwoCycle(i, j));
            }
            if weight != 1 && weight != 2 {
                return Err(QuiverError::BadWeight(i, j, weight as i32));
            }
            if weight == 2 && !pendant.contains(&i) && !pendant.contains(&j) {
                return Err(QuiverError::UnsupportedWeight(i, j));
            }
            w[i][j] = weight as i32;
            w[j][i] = -(weight as i32);
        }
        Ok(Diagram { w, pendant })
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    /// Signed weight: positive for `i -> j`, negative for `j -> i`, zero if
    /// not joined.
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.w[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.w
    }

    pub fn pendant(&self) -> &BTreeSet<usize> {
        &self.pendant
    }

    /// `(source, target, weight)` for every arrow, sorted.
    pub fn arrows(&self) -> Vec<(usize, usize, u32)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.w[i][j] > 0 {
                    out.push((i, j, self.w[i][j] as u32));
                }
            }
        }
        out
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Diagram(n={}, arrows={:?}, pendant={:?})",
            self.len(),
            self.arrows(),
            self.pendant
        )
    }
}
