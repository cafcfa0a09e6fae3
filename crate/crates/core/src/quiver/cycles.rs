//! Chordless oriented cycles.

use super::Quiver;

/// Every chordless oriented cycle of length at least 3 that uses simple
/// arrows only, rotated to start at its smallest vertex.
///
/// ```
/// use coxeter_quotients::quiver::{chordless_oriented_cycles, Quiver};
/// let q = Quiver::from_arrows(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
/// assert_eq!(chordless_oriented_cycles(&q), vec![vec![0, 1, 2]]);
/// ```
pub fn chordless_oriented_cycles(q: &Quiver) -> Vec<Vec<usize>> {
    let b = q.matrix();
    chordless_cycles_by(q.len(), |i, j| b[i][j] == 1, |i, j| b[i][j] != 0)
}

/// Generic enumeration: `forward(i, j)` says the arrow `i -> j` may be used by
/// a cycle, `joined(i, j)` says the two vertices are joined at all (used for
/// the chord test).
pub(crate) fn chordless_cycles_by(
    n: usize,
    forward: impl Fn(usize, usize) -> bool,
    joined: impl Fn(usize, usize) -> bool,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in 0..n {
        path.clear();
        path.push(s);
        extend(n, &forward, &joined, &mut path, &mut out);
    }
    out
}

fn extend(
    n: usize,
    forward: &impl Fn(usize, usize) -> bool,
    joined: &impl Fn(usize, usize) -> bool,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let s = path[0];
    let last = *path.last().unwrap();
    for w in s + 1..n {
        if !forward(last, w) || path.contains(&w) {
            continue;
        }
        // Interior path vertices other than the current end must not touch w.
        let interior = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
        if interior.iter().any(|&u| joined(u, w)) {
            continue;
        }
        if path.len() >= 2 && joined(s, w) {
            if forward(w, s) {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
            continue;
        }
        path.push(w);
        extend(n, forward, joined, path, out);
        path.pop();
    }
}
