//! Group presentations attached to quivers and diagrams.
//!
//! All generators are involutions, so involutivity is implicit and never
//! stored. Relators come in three families:
//!
//! * `R2`: `(s_i s_j)^m` with `m = 2, 3, 4` when `i, j` are not joined, joined
//!   by a simple arrow, or joined by a weight-2 arrow;
//! * `R3`: `(s_{i1} s_{i2} ... s_{id} s_{i(d-1)} ... s_{i2})^2` for every
//!   chordless oriented cycle `i1 -> ... -> id -> i1`, starting at its
//!   smallest vertex;
//! * `R4`: the same shape in conjugated letters `u_i` for each contracted
//!   cycle through a block.
//!
//! The Coxeter part (the `R2` relators) defines a Coxeter group; the cycle
//! and block relators generate the normal subgroup it is divided by.

mod io;
mod substitution;
mod word;

pub use io::{PresentationFile, RelatorFile};
pub use substitution::{apply_substitution, mutation_substitution, mutation_substitution_with, Convention, Substitution};
pub use word::{normalize_relator, Word};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiver::{AnnotatedQuiver, BlockKind, Quiver, Underlying};
use crate::surface::Triangulation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("vertices {0} and {1} are joined by a multiple arrow; no presentation is defined")]
    DoubleArrow(usize, usize),
    #[error("Coxeter order {0} is not supported (expected 2, 3 or 4)")]
    UnsupportedOrder(u32),
    #[error("Coxeter matrix is not symmetric with unit diagonal")]
    BadCoxeterMatrix,
    #[error("generator {letter} out of range ({generators} generators)")]
    LetterOutOfRange { letter: usize, generators: usize },
    #[error("malformed presentation: {0}")]
    Format(String),
}

/// Symmetric matrix of orders `m_ij` with unit diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct CoxeterMatrix {
    m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self, PresentationError> {
        let n = m.len();
        for i in 0..n {
            if m[i].len() != n || m[i][i] != 1 {
                return Err(PresentationError::BadCoxeterMatrix);
            }
            for j in 0..n {
                if m[i][j] != m[j][i] {
                    return Err(PresentationError::BadCoxeterMatrix);
                }
                if i != j && !(2..=4).contains(&m[i][j]) {
                    return Err(PresentationError::UnsupportedOrder(m[i][j]));
                }
            }
        }
        Ok(CoxeterMatrix { m })
    }

    /// Orders 3 on the listed pairs and 2 elsewhere.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = vec![vec![2; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j) in edges {
            m[i][j] = 3;
            m[j][i] = 3;
        }
        CoxeterMatrix { m }
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    pub fn order(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.m
    }
}

impl TryFrom<Vec<Vec<u32>>> for CoxeterMatrix {
    type Error = PresentationError;
    fn try_from(m: Vec<Vec<u32>>) -> Result<Self, Self::Error> {
        CoxeterMatrix::new(m)
    }
}

impl From<CoxeterMatrix> for Vec<Vec<u32>> {
    fn from(c: CoxeterMatrix) -> Self {
        c.m
    }
}

pub fn coxeter_matrix(u: &Underlying) -> Result<CoxeterMatrix, PresentationError> {
    let n = u.len();
    let mut m = vec![vec![2; n]; n];
    for i in 0..n {
        m[i][i] = 1;
        for j in 0..n {
            if i == j {
                continue;
            }
            let b = u.entry(i, j).unsigned_abs();
            m[i][j] = match (u, b) {
                (_, 0) => 2,
                (_, 1) => 3,
                (Underlying::Diagram(_), 2) => 4,
                _ => return Err(PresentationError::DoubleArrow(i.min(j), i.max(j))),
            };
        }
    }
    Ok(CoxeterMatrix { m })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelatorKind {
    R2,
    R3,
    R4,
}

impl fmt::Display for RelatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelatorKind::R2 => "R2",
            RelatorKind::R3 => "R3",
            RelatorKind::R4 => "R4",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relator {
    pub word: Word,
    pub kind: RelatorKind,
    /// Where the relator comes from, e.g. `cycle [0, 1, 2]`.
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: usize,
    relators: Vec<Relator>,
    pub warnings: Vec<String>,
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<Relator>) -> Result<Self, PresentationError> {
        for r in &relators {
            if let Some(letter) = r.word.max_letter().filter(|&x| x >= generators) {
                return Err(PresentationError::LetterOutOfRange { letter, generators });
            }
        }
        Ok(Presentation {
            generators,
            relators,
            warnings: Vec::new(),
        })
    }

    /// The Coxeter presentation of `m`.
    pub fn coxeter(m: &CoxeterMatrix) -> Self {
        let n = m.len();
        let mut relators = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let k = m.order(i, j);
                relators.push(Relator {
                    word: Word::new([i, j]).pow(k as usize),
                    kind: RelatorKind::R2,
                    note: format!("m({i},{j}) = {k}"),
                });
            }
        }
        Presentation {
            generators: n,
            relators,
            warnings: Vec::new(),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.relators.iter().map(|r| &r.word)
    }

    pub fn relators_of_kind(&self, kind: RelatorKind) -> impl Iterator<Item = &Relator> {
        self.relators.iter().filter(move |r| r.kind == kind)
    }

    /// Only the `R2` relators.
    pub fn coxeter_part(&self) -> Presentation {
        Presentation {
            generators: self.generators,
            relators: self.relators_of_kind(RelatorKind::R2).cloned().collect(),
            warnings: Vec::new(),
        }
    }

    pub fn push(&mut self, word: Word, kind: RelatorKind, note: impl Into<String>) {
        assert!(word.max_letter().is_none_or(|x| x < self.generators));
        self.relators.push(Relator {
            word: word.cyclic_reduce(),
            kind,
            note: note.into(),
        });
    }

    /// Renames generator `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Presentation {
        assert_eq!(perm.len(), self.generators);
        let relators = self
            .relators
            .iter()
            .map(|r| Relator {
                word: Word(r.word.0.iter().map(|&x| perm[x]).collect()),
                kind: r.kind,
                note: r.note.clone(),
            })
            .collect();
        Presentation {
            generators: self.generators,
            relators,
            warnings: self.warnings.clone(),
        }
    }
}

/// `(w_1 w_2 ... w_d w_(d-1) ... w_2)^2`, the shape shared by cycle and
/// block relators.
fn cycle_word(letters: &[Word]) -> Word {
    let mut w = Word::default();
    for x in letters {
        w = w.concat(x);
    }
    for x in letters[1..letters.len() - 1].iter().rev() {
        w = w.concat(x);
    }
    w.pow(2)
}

pub fn presentation_of(aq: &AnnotatedQuiver) -> Result<Presentation, PresentationError> {
    let m = coxeter_matrix(aq.underlying())?;
    let mut p = Presentation::coxeter(&m);
    for cyc in aq.cycles() {
        let letters: Vec<Word> = cyc.iter().map(|&v| Word::new([v])).collect();
        p.push(cycle_word(&letters), RelatorKind::R3, format!("cycle {cyc:?}"));
    }
    for mc in aq.contracted_cycles() {
        let letters: Vec<Word> = mc
            .vertices
            .iter()
            .zip(&mc.blocks)
            .map(|(&v, b)| match b {
                None => Word::new([v]),
                Some(b) => {
                    let blk = &aq.blocks()[*b];
                    debug_assert!(blk.kind == BlockKind::IV || blk.extra.len() == 1);
                    Word::new(blk.conjugators()).conjugate(&Word::new([v]))
                }
            })
            .collect();
        let used: Vec<usize> = mc.blocks.iter().flatten().copied().collect();
        p.push(
            cycle_word(&letters),
            RelatorKind::R4,
            format!("cycle {:?} through blocks {used:?}", mc.vertices),
        );
    }
    Ok(p)
}

pub fn presentation_of_quiver(q: &Quiver) -> Result<Presentation, PresentationError> {
    presentation_of(&AnnotatedQuiver::plain(q.clone()))
}

/// Presentation of the annotated quiver of `t`, with a warning when the
/// surface has fewer than four features.
pub fn presentation_of_triangulation(t: &Triangulation) -> Result<Presentation, PresentationError> {
    let mut p = presentation_of(&t.quiver_of())?;
    let sig = t.surface_signature();
    if sig.features() < 4 {
        p.warnings.push(format!(
            "surface {sig} has {} features; independence of the triangulation is only established for at least 4",
            sig.features()
        ));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::quiver::{BlockAnnotation, Diagram};

    fn a2() -> Quiver {
        Quiver::from_arrows(2, &[(0, 1, 1)]).unwrap()
    }

    #[test]
    fn coxeter_orders() {
        let m = coxeter_matrix(&Underlying::Quiver(a2())).unwrap();
        assert_eq!(m.order(0, 1), 3);
        let d = Diagram::new(2, &[(0, 1, 2)], [1]).unwrap();
        assert_eq!(coxeter_matrix(&Underlying::Diagram(d)).unwrap().order(0, 1), 4);
        let double = Quiver::from_arrows(2, &[(0, 1, 2)]).unwrap();
        assert_eq!(
            coxeter_matrix(&Underlying::Quiver(double)),
            Err(PresentationError::DoubleArrow(0, 1))
        );
        assert!(CoxeterMatrix::new(vec![vec![1, 5], vec![5, 1]]).is_err());
    }

    #[test]
    fn a2_has_no_cycle_relators() {
        let p = presentation_of_quiver(&a2()).unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].word, Word::new([0, 1, 0, 1, 0, 1]));
    }

    #[test]
    fn triangle_cycle_relator() {
        let q = Quiver::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        let p = presentation_of_quiver(&q).unwrap();
        let r3: Vec<&Relator> = p.relators_of_kind(RelatorKind::R3).collect();
        assert_eq!(r3.len(), 1);
        assert_eq!(r3[0].word, Word::new([0, 1, 2, 1]).pow(2));
    }

    #[test]
    fn annulus_example_presentation() {
        let p = presentation_of(&AnnotatedQuiver::plain(data::punctured_annulus_quiver())).unwrap();
        let m2: Vec<(usize, usize)> = p
            .relators_of_kind(RelatorKind::R2)
            .filter(|r| r.word.len() == 4)
            .map(|r| (r.word.0[0], r.word.0[1]))
            .collect();
        assert_eq!(m2, vec![(0, 2), (1, 3), (1, 4), (3, 4)]);
        let r3: Vec<Word> = p.relators_of_kind(RelatorKind::R3).map(|r| r.word.clone()).collect();
        assert_eq!(r3, vec![Word::new([0, 1, 2, 3, 2, 1]).pow(2)]);
        assert!(p.relators_of_kind(RelatorKind::R4).next().is_none());
    }

    #[test]
    fn triangulation_warning_for_three_features() {
        let p = presentation_of_triangulation(&data::punctured_annulus()).unwrap();
        assert_eq!(p.warnings.len(), 1);
        let p = presentation_of_triangulation(&crate::surface::standard_triangulation(0, 5).unwrap()).unwrap();
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn tetrahedron_cycle_relators() {
        // One oriented 3-cycle per face and one around each degree-3 puncture.
        let p = presentation_of_triangulation(&data::tetrahedron()).unwrap();
        assert_eq!(p.relators_of_kind(RelatorKind::R3).count(), 8);
        assert!(p.words().all(|w| w.len() % 2 == 0));
    }

    #[test]
    fn block_relator_conjugates_the_target_letter() {
        // Triangle 0 -> 1 -> 2 -> 0 with the arrow 2 -> 0 replaced by a block
        // with extras 3, 4.
        let q = Quiver::from_arrows(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (2, 4, 1), (4, 0, 1), (0, 2, 1)])
            .unwrap();
        let blk = BlockAnnotation {
            kind: BlockKind::IV,
            base: (2, 0),
            extra: vec![3, 4],
        };
        let aq = AnnotatedQuiver::new(Underlying::Quiver(q), vec![blk]).unwrap();
        let p = presentation_of(&aq).unwrap();
        let r4: Vec<&Relator> = p.relators_of_kind(RelatorKind::R4).collect();
        assert_eq!(r4.len(), 1);
        // u_0 = s3 s4 s0 s4 s3, u_1 = s1, u_2 = s2.
        let u0 = Word::new([3, 4, 0, 4, 3]);
        let expected = u0.concat(&Word::new([1, 2, 1])).pow(2).cyclic_reduce();
        assert_eq!(r4[0].word, expected);
        assert_eq!(r4[0].word.len() % 2, 0);
    }

    #[test]
    fn relabel_permutes_relators() {
        let q = Quiver::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        let perm = [2, 0, 1];
        let p = presentation_of_quiver(&q).unwrap().relabel(&perm);
        let r = presentation_of_quiver(&q.relabel(&perm)).unwrap();
        let norm = |p: &Presentation| {
            let mut v: Vec<Word> = p.words().map(normalize_relator).collect();
            v.sort();
            v
        };
        // The cycle relator of the relabelled quiver starts at a different
        // vertex, so compare up to conjugacy within the cycle family.
        assert_eq!(norm(&p.coxeter_part()), norm(&r.coxeter_part()));
        assert_eq!(p.relators().len(), r.relators().len());
    }
}
