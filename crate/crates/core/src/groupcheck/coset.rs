//! Coset enumeration for presentations with involutive generators.
//!
//! HLT strategy: cosets are processed in order of definition, each is scanned
//! under every relator with new cosets defined to complete the scan, and
//! coincidences are merged into the smaller-numbered coset. Since every
//! generator is an involution, the column of a generator is its own inverse
//! column and `s_i^2` never appears as an explicit relator.

use std::collections::VecDeque;

use serde::Serialize;

use super::GroupError;
use crate::presentation::{Presentation, Word};

const NONE: usize = usize::MAX;

/// Complete coset table: `table[c][g]` is the coset `c * s_g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    pub table: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.table.len()
    }

    pub fn generators(&self) -> usize {
        self.table.first().map_or(0, Vec::len)
    }

    pub fn act(&self, coset: usize, w: &Word) -> usize {
        w.letters().iter().fold(coset, |c, &g| self.table[c][g])
    }

    /// Whether `w` fixes every coset.
    pub fn acts_trivially(&self, w: &Word) -> bool {
        (0..self.index()).all(|c| self.act(c, w) == c)
    }

    /// Permutation of the cosets induced by generator `g`.
    pub fn permutation(&self, g: usize) -> Vec<usize> {
        self.table.iter().map(|row| row[g]).collect()
    }
}

struct Enumerator {
    gens: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    max: usize,
    queue: VecDeque<usize>,
}

impl Enumerator {
    fn rep(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn new_coset(&mut self) -> Result<usize, GroupError> {
        if self.table.len() == self.max {
            return Err(GroupError::CosetsExhausted { max_cosets: self.max });
        }
        let c = self.table.len();
        self.table.push(vec![NONE; self.gens]);
        self.parent.push(c);
        Ok(c)
    }

    fn define(&mut self, c: usize, g: usize) -> Result<usize, GroupError> {
        let d = self.new_coset()?;
        self.table[c][g] = d;
        self.table[d][g] = c;
        Ok(d)
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        self.queue.push_back(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for g in 0..self.gens {
                let f = self.table[e][g];
                if f == NONE {
                    continue;
                }
                self.table[e][g] = NONE;
                if self.table[f][g] == e {
                    self.table[f][g] = NONE;
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let x = self.table[e1][g];
                let y = self.table[f1][g];
                if x != NONE {
                    self.merge(f1, x);
                } else if y != NONE {
                    self.merge(e1, y);
                } else {
                    self.table[e1][g] = f1;
                    self.table[f1][g] = e1;
                }
            }
        }
    }

    /// Scans `c` under `w`, defining cosets until the scan completes.
    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), GroupError> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.table[f][w[i]] != NONE {
                f = self.table[f][w[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.table[b][w[j as usize]] != NONE {
                b = self.table[b][w[j as usize]];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                let g = w[i];
                self.table[f][g] = b;
                self.table[b][g] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the
/// group of `p`, using at most `max_cosets` coset numbers in total.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable, GroupError> {
    let gens = p.generators();
    let relators: Vec<Vec<usize>> = p
        .words()
        .map(|w| w.cyclic_reduce().0)
        .filter(|w| !w.is_empty())
        .collect();
    let mut e = Enumerator {
        gens,
        table: Vec::new(),
        parent: Vec::new(),
        max: max_cosets.max(1),
        queue: VecDeque::new(),
    };
    e.new_coset()?;
    for w in subgroup {
        let w = w.free_reduce();
        e.scan_and_fill(0, w.letters())?;
    }
    let mut c = 0;
    while c < e.table.len() {
        for r in &relators {
            if !e.live(c) {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        if e.live(c) {
            for g in 0..gens {
                if e.table[c][g] == NONE {
                    e.define(c, g)?;
                }
            }
        }
        c += 1;
    }
    // Renumber live cosets in order.
    let mut number = vec![NONE; e.table.len()];
    let mut count = 0;
    for (k, n) in number.iter_mut().enumerate() {
        if e.parent[k] == k {
            *n = count;
            count += 1;
        }
    }
    let table = (0..e.table.len())
        .filter(|&k| e.parent[k] == k)
        .map(|k| e.table[k].iter().map(|&d| number[d]).collect())
        .collect();
    Ok(CosetTable { table })
}
