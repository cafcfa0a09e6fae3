//! Checking that generator images satisfy every relator.

use serde::Serialize;

use super::{evaluate_word, CosetTable, FiniteGroupTarget, SquareMatrix};
use crate::presentation::{apply_substitution, Presentation, RelatorKind, Substitution, Word};

/// Something that decides whether a word is trivial.
pub trait WordEvaluator {
    fn is_trivial(&self, w: &Word) -> bool;
}

/// Words evaluated in a matrix representation.
pub struct MatrixEvaluator(pub Vec<SquareMatrix>);

impl WordEvaluator for MatrixEvaluator {
    fn is_trivial(&self, w: &Word) -> bool {
        evaluate_word(&self.0, w).is_identity()
    }
}

/// A word is trivial when it fixes every coset. With the trivial subgroup
/// this decides triviality in the enumerated group.
impl WordEvaluator for CosetTable {
    fn is_trivial(&self, w: &Word) -> bool {
        self.acts_trivially(w)
    }
}

/// Letters sent to fixed elements of a finite group.
pub struct AssignmentEvaluator<'a> {
    pub target: &'a FiniteGroupTarget,
    pub images: Vec<usize>,
}

impl WordEvaluator for AssignmentEvaluator<'_> {
    fn is_trivial(&self, w: &Word) -> bool {
        let t = self.target;
        w.letters().iter().fold(t.identity(), |a, &g| t.mul(a, self.images[g])) == t.identity()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorCheck {
    pub index: usize,
    pub kind: RelatorKind,
    pub note: String,
    /// The relator after substituting the images, freely reduced.
    pub image: Word,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomorphismReport {
    /// Whether the square of each generator image is trivial.
    pub involutions: Vec<bool>,
    pub relators: Vec<RelatorCheck>,
}

impl HomomorphismReport {
    pub fn passes(&self) -> bool {
        self.involutions.iter().all(|&b| b) && self.relators.iter().all(|r| r.trivial)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelatorCheck> {
        self.relators.iter().filter(|r| !r.trivial)
    }
}

/// Substitutes `images[i]` for generator `i` in every relator of `p` and
/// evaluates the results.
pub fn check_homomorphism(p: &Presentation, images: &[Word], eval: &dyn WordEvaluator) -> HomomorphismReport {
    assert_eq!(images.len(), p.generators(), "one image per generator");
    let sigma = Substitution {
        images: images.to_vec(),
    };
    let involutions = images.iter().map(|w| eval.is_trivial(&w.pow(2))).collect();
    let relators = p
        .relators()
        .iter()
        .enumerate()
        .map(|(index, r)| {
            let image = apply_substitution(&r.word, &sigma);
            RelatorCheck {
                index,
                kind: r.kind,
                note: r.note.clone(),
                trivial: eval.is_trivial(&image),
                image,
            }
        })
        .collect();
    HomomorphismReport { involutions, relators }
}
