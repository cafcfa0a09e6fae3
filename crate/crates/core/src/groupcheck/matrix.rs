//! Exact reflection representation of a Coxeter group.

use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use super::{GroupError, ZSqrt2};
use crate::presentation::{CoxeterMatrix, Word};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<ZSqrt2>,
}

impl SquareMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![ZSqrt2::ZERO; n * n];
        for i in 0..n {
            entries[i * n + i] = ZSqrt2::ONE;
        }
        SquareMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> ZSqrt2 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ZSqrt2) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        *self == SquareMatrix::identity(self.n)
    }

    pub fn pow(&self, k: usize) -> SquareMatrix {
        (0..k).fold(SquareMatrix::identity(self.n), |acc, _| &acc * self)
    }

    /// Least `k <= limit` with `self^k = I`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=limit {
            if p.is_identity() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }

    /// Entries as `[a, b]` pairs meaning `a + b sqrt(2)`, row by row.
    pub fn to_pairs(&self) -> Vec<Vec<[i128; 2]>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| [self.get(i, j).a, self.get(i, j).b]).collect())
            .collect()
    }
}

impl Serialize for SquareMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, o: &SquareMatrix) -> SquareMatrix {
        let n = self.n;
        assert_eq!(n, o.n);
        let mut out = SquareMatrix {
            n,
            entries: vec![ZSqrt2::ZERO; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.entries[idx] = out.entries[idx] + x * o.get(k, j);
                }
            }
        }
        out
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Generator `i` acts by `e_j -> e_j + c_ij e_i` with `c_ii = -2` and
/// `c_ij = 2 cos(pi / m_ij)`, i.e. 0, 1, sqrt(2) for `m = 2, 3, 4`.
pub fn tits_matrices(m: &CoxeterMatrix) -> Result<Vec<SquareMatrix>, GroupError> {
    let n = m.len();
    let c = |i: usize, j: usize| -> Result<ZSqrt2, GroupError> {
        if i == j {
            return Ok(ZSqrt2::int(-2));
        }
        match m.order(i, j) {
            2 => Ok(ZSqrt2::ZERO),
            3 => Ok(ZSqrt2::ONE),
            4 => Ok(ZSqrt2::SQRT2),
            k => Err(GroupError::UnsupportedOrder(k)),
        }
    };
    (0..n)
        .map(|i| {
            let mut s = SquareMatrix::identity(n);
            for j in 0..n {
                s.set(i, j, s.get(i, j) + c(i, j)?);
            }
            Ok(s)
        })
        .collect()
}

/// Left-to-right product of the generator matrices.
pub fn evaluate_word(gens: &[SquareMatrix], w: &Word) -> SquareMatrix {
    let n = gens.first().map_or(0, SquareMatrix::size);
    w.letters()
        .iter()
        .fold(SquareMatrix::identity(n), |acc, &x| &acc * &gens[x])
}
