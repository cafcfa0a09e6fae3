use std::fmt;

use serde::{Deserialize, Serialize};

/// A word in involutive generators, as a list of generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        Word(letters.into())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse word; since every letter is an involution this is the reversal.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// `self * w * self^-1`.
    pub fn conjugate(&self, w: &Word) -> Word {
        self.concat(w).concat(&self.inverse())
    }

    /// Cancels adjacent equal letters.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<usize> = Vec::with_capacity(self.0.len());
        for &x in &self.0 {
            if out.last() == Some(&x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        Word(out)
    }

    /// Free reduction followed by cancelling equal first and last letters.
    pub fn cyclic_reduce(&self) -> Word {
        let mut v = self.free_reduce().0;
        let mut lo = 0;
        while v.len() - lo >= 2 && v[lo] == v[v.len() - 1] {
            lo += 1;
            v.pop();
        }
        Word(v.split_off(lo))
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", x + 1)?;
        }
        Ok(())
    }
}

/// Freely and cyclically reduced, then rotated to the lexicographically
/// least rotation.
pub fn normalize_relator(w: &Word) -> Word {
    let v = w.cyclic_reduce().0;
    let n = v.len();
    if n == 0 {
        return Word(v);
    }
    let best = (0..n)
        .min_by(|&a, &b| {
            let ra = v[a..].iter().chain(&v[..a]);
            let rb = v[b..].iter().chain(&v[..b]);
            ra.cmp(rb)
        })
        .unwrap();
    Word(v[best..].iter().chain(&v[..best]).copied().collect())
}
