//! Generator substitution accompanying a mutation.
//!
//! For a mutation of `Q` at `k`, the generator `s'_i` of the mutated group
//! is sent to `t_i = s_k s_i s_k` when `Q` has an arrow `i -> k`, and to
//! `s_i` otherwise. The outgoing convention conjugates for arrows `k -> i`
//! instead; the two differ by conjugating every image by `s_k`.

use serde::{Deserialize, Serialize};

use super::Word;
use crate::quiver::Quiver;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convention {
    #[default]
    Incoming,
    Outgoing,
}

/// Image word of every generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    pub images: Vec<Word>,
}

impl Substitution {
    pub fn identity(n: usize) -> Self {
        Substitution {
            images: (0..n).map(|i| Word::new([i])).collect(),
        }
    }
}

pub fn mutation_substitution(q: &Quiver, k: usize) -> Substitution {
    mutation_substitution_with(q, k, Convention::Incoming)
}

pub fn mutation_substitution_with(q: &Quiver, k: usize, convention: Convention) -> Substitution {
    let images = (0..q.len())
        .map(|i| {
            let b = q.entry(i, k);
            let conj = match convention {
                Convention::Incoming => b > 0,
                Convention::Outgoing => b < 0,
            };
            if conj {
                Word::new([k, i, k])
            } else {
                Word::new([i])
            }
        })
        .collect();
    Substitution { images }
}

/// Letterwise substitution followed by free reduction.
pub fn apply_substitution(w: &Word, sigma: &Substitution) -> Word {
    let mut out = Vec::new();
    for &x in w.letters() {
        out.extend_from_slice(sigma.images[x].letters());
    }
    Word(out).free_reduce()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_reads_arrows_into_k() {
        let q = Quiver::from_arrows(2, &[(0, 1, 1)]).unwrap();
        let s = mutation_substitution(&q, 1);
        assert_eq!(s.images, vec![Word::new([1, 0, 1]), Word::new([1])]);
        assert_eq!(mutation_substitution(&q, 0), Substitution::identity(2));
        let out = mutation_substitution_with(&q, 0, Convention::Outgoing);
        assert_eq!(out.images, vec![Word::new([0]), Word::new([0, 1, 0])]);

        let tri = Quiver::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        let s = mutation_substitution(&tri, 1);
        assert_eq!(s.images, vec![Word::new([1, 0, 1]), Word::new([1]), Word::new([2])]);
    }

    #[test]
    fn application_reduces() {
        let q = Quiver::from_arrows(2, &[(0, 1, 1)]).unwrap();
        let s = mutation_substitution(&q, 1);
        assert_eq!(apply_substitution(&Word::new([0, 1]), &s), Word::new([1, 0]));
        assert_eq!(apply_substitution(&Word::default(), &s), Word::default());
    }
}
