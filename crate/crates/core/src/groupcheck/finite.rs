//! Finite groups given by multiplication tables, and homomorphism counts.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::GroupError;
use crate::presentation::Presentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroupFile {
    pub name: String,
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTarget {
    name: String,
    mul: Vec<Vec<usize>>,
    identity: usize,
    /// Involutions together with the identity.
    involutions: Vec<usize>,
}

impl FiniteGroupTarget {
    pub fn new(name: impl Into<String>, mul: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let k = mul.len();
        let bad = |m: &str| GroupError::BadTarget(m.to_string());
        if k == 0 {
            return Err(bad("empty group"));
        }
        if mul.iter().any(|row| row.len() != k || row.iter().any(|&x| x >= k)) {
            return Err(bad("multiplication table is not a k x k table over 0..k"));
        }
        let identity = (0..k)
            .find(|&e| (0..k).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| bad("no identity element"))?;
        for x in 0..k {
            if !(0..k).any(|y| mul[x][y] == identity) {
                return Err(bad("an element has no inverse"));
            }
        }
        // Full associativity check for small tables, a fixed stride otherwise.
        let step = if k <= 64 { 1 } else { k / 37 + 1 };
        for a in (0..k).step_by(step) {
            for b in (0..k).step_by(step) {
                for c in (0..k).step_by(step) {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(bad("multiplication is not associative"));
                    }
                }
            }
        }
        let involutions = (0..k).filter(|&x| mul[x][x] == identity).collect();
        Ok(FiniteGroupTarget {
            name: name.into(),
            mul,
            identity,
            involutions,
        })
    }

    pub fn from_file(f: &FiniteGroupFile) -> Result<Self, GroupError> {
        if f.order != f.mul.len() {
            return Err(GroupError::BadTarget(format!(
                "order {} does not match a table with {} rows",
                f.order,
                f.mul.len()
            )));
        }
        Self::new(f.name.clone(), f.mul.clone())
    }

    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        let f: FiniteGroupFile = serde_json::from_str(text).map_err(|e| GroupError::Format(e.to_string()))?;
        Self::from_file(&f)
    }

    pub fn to_file(&self) -> FiniteGroupFile {
        FiniteGroupFile {
            name: self.name.clone(),
            order: self.order(),
            mul: self.mul.clone(),
        }
    }

    pub fn trivial() -> Self {
        Self::new("trivial", vec![vec![0]]).expect("valid")
    }

    /// Symmetric group on `n` letters, elements in lexicographic order of
    /// their one-line notation; `x * y` applies `x` first.
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    (0..n)
                        .filter(|x| !p.contains(x))
                        .map(|x| {
                            let mut q = p.clone();
                            q.push(x);
                            q
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("permutation");
        let mul = perms
            .iter()
            .map(|x| {
                perms
                    .iter()
                    .map(|y| index(&(0..n).map(|i| y[x[i]]).collect()))
                    .collect()
            })
            .collect();
        Self::new(format!("S{n}"), mul).expect("valid")
    }

    /// Dihedral group of order `2m`: element `r^a s^b` is `2a + b`.
    pub fn dihedral(order: usize) -> Self {
        assert!(order >= 2 && order.is_multiple_of(2));
        let m = order / 2;
        let decode = |x: usize| (x / 2, x % 2);
        let mul = (0..order)
            .map(|x| {
                (0..order)
                    .map(|y| {
                        let ((a, b), (c, d)) = (decode(x), decode(y));
                        // r^a s^b r^c s^d = r^(a +- c) s^(b + d)
                        let rot = if b == 0 { (a + c) % m } else { (a + m - c % m) % m };
                        2 * rot + (b + d) % 2
                    })
                    .collect()
            })
            .collect();
        Self::new(format!("D{order}"), mul).expect("valid")
    }

    /// The targets used for invariant reports.
    pub fn builtin() -> Vec<FiniteGroupTarget> {
        vec![Self::symmetric(3), Self::symmetric(4), Self::dihedral(8)]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn involutions(&self) -> &[usize] {
        &self.involutions
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }
}

/// Number of assignments of involutions (or the identity) to the generators
/// under which every relator evaluates to the identity. The search visits at
/// most `max_nodes` partial assignments.
pub fn count_homomorphisms(
    p: &Presentation,
    target: &FiniteGroupTarget,
    max_nodes: usize,
) -> Result<u64, GroupError> {
    let n = p.generators();
    if n == 0 {
        return Ok(1);
    }
    // Relators become checkable once their largest letter is assigned.
    let mut due: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for w in p.words() {
        if let Some(m) = w.max_letter() {
            due[m].push(w.0.clone());
        }
    }
    let nodes = AtomicUsize::new(0);
    let ctx = Search {
        target,
        due: &due,
        nodes: &nodes,
        max_nodes,
    };
    let counts: Result<Vec<u64>, GroupError> = target
        .involutions()
        .par_iter()
        .map(|&x| {
            let mut images = vec![0; n];
            images[0] = x;
            ctx.extend(&mut images, 0)
        })
        .collect();
    Ok(counts?.into_iter().sum())
}

struct Search<'a> {
    target: &'a FiniteGroupTarget,
    due: &'a [Vec<Vec<usize>>],
    nodes: &'a AtomicUsize,
    max_nodes: usize,
}

impl Search<'_> {
    /// `images[..=depth]` is assigned; counts completions.
    fn extend(&self, images: &mut Vec<usize>, depth: usize) -> Result<u64, GroupError> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.max_nodes {
            return Err(GroupError::BudgetExceeded { budget: self.max_nodes });
        }
        let ok = self.due[depth].iter().all(|w| {
            w.iter().fold(self.target.identity(), |acc, &g| self.target.mul(acc, images[g])) == self.target.identity()
        });
        if !ok {
            return Ok(0);
        }
        if depth + 1 == images.len() {
            return Ok(1);
        }
        let mut total = 0;
        for &x in self.target.involutions() {
            images[depth + 1] = x;
            total += self.extend(images, depth + 1)?;
        }
        Ok(total)
    }
}
