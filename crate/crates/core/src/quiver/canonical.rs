//! Canonical forms and isomorphism of quivers.
//!
//! The canonical form is the lexicographically least serialization of the
//! relabelled matrix, taken over all permutations that list vertices in the
//! order of their refined colour classes. Colour refinement only restricts
//! the search to an isomorphism-invariant subset of permutations, so two
//! quivers get the same form exactly when they are isomorphic.
//!
//! Serialization order grows the upper-left block: for position `p` the
//! entries `b[pi(0)][pi(p)], ..., b[pi(p-1)][pi(p)]` are appended. Skew-symmetry
//! makes the upper triangle sufficient, and the prefix structure lets the
//! backtracking search prune branches that are already larger than the best
//! serialization found.

use std::collections::BTreeMap;

use super::Quiver;

/// Opaque byte string; equal strings mean isomorphic quivers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Rebuilds the canonical representative quiver.
    pub fn decode(&self) -> Quiver {
        let bytes = &self.0;
        let n = u32::from_be_bytes(bytes[0..4].try_into().unwrap()) as usize;
        let mut b = vec![vec![0; n]; n];
        let mut pos = 4;
        for p in 0..n {
            for q in 0..p {
                let raw = u32::from_be_bytes(bytes[pos..pos + 4].try_into().unwrap());
                let v = (raw ^ 0x8000_0000) as i32;
                b[q][p] = v;
                b[p][q] = -v;
                pos += 4;
            }
        }
        Quiver::from_matrix(b).expect("canonical form encodes a quiver")
    }
}

pub fn canonical_form(q: &Quiver) -> CanonicalForm {
    let (serial, _) = search(q);
    encode(q.len(), &serial)
}

/// Returns the canonical form and the labelling that realises it:
/// `order[p]` is the original vertex placed at position `p`.
pub fn canonical_labeling(q: &Quiver) -> (CanonicalForm, Vec<usize>) {
    let (serial, order) = search(q);
    (encode(q.len(), &serial), order)
}

/// A bijection `sigma` with `b2[sigma[i]][sigma[j]] == b1[i][j]`, if any.
pub fn is_isomorphic(q1: &Quiver, q2: &Quiver) -> Option<Vec<usize>> {
    if q1.len() != q2.len() {
        return None;
    }
    let (f1, o1) = canonical_labeling(q1);
    let (f2, o2) = canonical_labeling(q2);
    if f1 != f2 {
        return None;
    }
    let mut sigma = vec![0; q1.len()];
    for p in 0..q1.len() {
        sigma[o1[p]] = o2[p];
    }
    Some(sigma)
}

fn encode(n: usize, serial: &[i32]) -> CanonicalForm {
    let mut bytes = Vec::with_capacity(4 + 4 * serial.len());
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    for &v in serial {
        bytes.extend_from_slice(&((v as u32) ^ 0x8000_0000).to_be_bytes());
    }
    CanonicalForm(bytes)
}

/// Iterated colour refinement; returns an isomorphism-invariant colour per
/// vertex.
fn refine_colours(q: &Quiver) -> Vec<usize> {
    let n = q.len();
    let b = q.matrix();
    let mut colours = vec![0usize; n];
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<(i32, usize)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(i32, usize)> = (0..n)
                    .filter(|&u| b[v][u] != 0)
                    .map(|u| (b[v][u], colours[u]))
                    .collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut ranks: BTreeMap<&(usize, Vec<(i32, usize)>), usize> = BTreeMap::new();
        for s in &sigs {
            ranks.insert(s, 0);
        }
        for (r, v) in ranks.values_mut().enumerate() {
            *v = r;
        }
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        colours = next;
        if count == classes {
            return colours;
        }
        classes = count;
    }
}

struct Search<'a> {
    b: &'a [Vec<i32>],
    colours: Vec<usize>,
    slot_colour: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    prefix: Vec<i32>,
    best: Option<(Vec<i32>, Vec<usize>)>,
}

impl Search<'_> {
    fn dfs(&mut self, p: usize) {
        let n = self.b.len();
        if p == n {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.prefix < *best,
            };
            if better {
                self.best = Some((self.prefix.clone(), self.order.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colours[v] != self.slot_colour[p] {
                continue;
            }
            let mark = self.prefix.len();
            for q in 0..p {
                self.prefix.push(self.b[self.order[q]][v]);
            }
            let keep = match &self.best {
                None => true,
                Some((best, _)) => self.prefix[..] <= best[..self.prefix.len()],
            };
            if keep {
                self.used[v] = true;
                self.order.push(v);
                self.dfs(p + 1);
                self.order.pop();
                self.used[v] = false;
            }
            self.prefix.truncate(mark);
        }
    }
}

fn search(q: &Quiver) -> (Vec<i32>, Vec<usize>) {
    let colours = refine_colours(q);
    let mut slot_colour = colours.clone();
    slot_colour.sort_unstable();
    let n = q.len();
    let mut s = Search {
        b: q.matrix(),
        colours,
        slot_colour,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        prefix: Vec::with_capacity(n * n / 2),
        best: None,
    };
    s.dfs(0);
    s.best.expect("at least one labelling exists")
}
