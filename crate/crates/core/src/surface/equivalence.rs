//! Combinatorial equivalence of triangulations via canonical traversal codes.
//!
//! A traversal starts at a root triangle with a chosen rotation and labels
//! triangles in breadth-first order; every side is written as the label and
//! local side of its partner, or as boundary. The minimum code over all `3F`
//! roots is a complete invariant for orientation-preserving equivalence;
//! comparing against the mirror image handles orientation reversal.

use super::triangulation::{slot, Triangulation};

const BOUNDARY: u32 = u32::MAX;

/// A slot bijection commuting with the gluing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    /// `slot_map[a]` is the slot of the second triangulation matching slot `a`.
    pub slot_map: Vec<usize>,
    /// False when the bijection reverses orientation.
    pub orientation_preserving: bool,
}

/// Code of the traversal rooted at triangle `root` whose local side 0 is
/// actual side `rot`, together with the `(triangle, rotation)` per label.
fn traversal(t: &Triangulation, root: usize, rot: usize) -> (Vec<u32>, Vec<(usize, usize)>) {
    let n = t.triangle_count();
    let mut label: Vec<Option<u32>> = vec![None; n];
    let mut rotation = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    label[root] = Some(0);
    rotation[root] = rot;
    order.push(root);
    let mut code = Vec::with_capacity(3 * n);
    let mut head = 0;
    while head < order.len() {
        let tri = order[head];
        head += 1;
        for i in 0..3 {
            match t.partner(slot(tri, rotation[tri] + i)) {
                None => code.push(BOUNDARY),
                Some(p) => {
                    let (u, s) = (p / 3, p % 3);
                    let lu = match label[u] {
                        Some(l) => l,
                        None => {
                            let l = order.len() as u32;
                            label[u] = Some(l);
                            rotation[u] = s;
                            order.push(u);
                            l
                        }
                    };
                    let local = (s + 3 - rotation[u]) % 3;
                    code.push(3 * lu + local as u32);
                }
            }
        }
    }
    let roots = order.iter().map(|&u| (u, rotation[u])).collect();
    (code, roots)
}

fn best_traversal(t: &Triangulation) -> (Vec<u32>, Vec<(usize, usize)>) {
    let mut best: Option<(Vec<u32>, Vec<(usize, usize)>)> = None;
    for root in 0..t.triangle_count() {
        for rot in 0..3 {
            let cand = traversal(t, root, rot);
            if best.as_ref().is_none_or(|b| cand.0 < b.0) {
                best = Some(cand);
            }
        }
    }
    best.expect("at least one triangle")
}

/// Orientation-preserving canonical key; equal keys mean equivalent.
pub fn canonical_key(t: &Triangulation) -> Vec<u32> {
    let mut key = vec![t.triangle_count() as u32];
    key.extend(best_traversal(t).0);
    key
}

/// Key that also identifies a triangulation with its mirror image.
pub fn unoriented_key(t: &Triangulation) -> Vec<u32> {
    canonical_key(t).min(canonical_key(&t.mirror()))
}

fn matching(a: &[(usize, usize)], b: &[(usize, usize)], slots: usize) -> Vec<usize> {
    let mut map = vec![0; slots];
    for (&(t1, r1), &(t2, r2)) in a.iter().zip(b) {
        for i in 0..3 {
            map[slot(t1, r1 + i)] = slot(t2, r2 + i);
        }
    }
    map
}

/// An equivalence from `t1` to `t2`, preferring an orientation-preserving one.
pub fn is_equivalent(t1: &Triangulation, t2: &Triangulation) -> Option<Equivalence> {
    if t1.triangle_count() != t2.triangle_count() {
        return None;
    }
    let (c2, r2) = best_traversal(t2);
    let (c1, r1) = best_traversal(t1);
    if c1 == c2 {
        return Some(Equivalence {
            slot_map: matching(&r1, &r2, t1.slot_count()),
            orientation_preserving: true,
        });
    }
    let m = t1.mirror();
    let (cm, rm) = best_traversal(&m);
    if cm == c2 {
        // Slot a of t1 is slot mirror(a) of m.
        let via = matching(&rm, &r2, t1.slot_count());
        let slot_map = (0..t1.slot_count())
            .map(|a| via[slot(a / 3, 2 - a % 3)])
            .collect();
        return Some(Equivalence {
            slot_map,
            orientation_preserving: false,
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::surface::standard_triangulation;

    fn check_map(t1: &Triangulation, t2: &Triangulation, e: &Equivalence) {
        for a in 0..t1.slot_count() {
            assert_eq!(t1.partner(a).map(|p| e.slot_map[p]), t2.partner(e.slot_map[a]));
        }
    }

    #[test]
    fn relabelled_triangulations_are_equivalent() {
        let t = standard_triangulation(1, 4).unwrap();
        let n = t.triangle_count();
        let perm: Vec<usize> = (0..n).map(|i| (i * 5 + 2) % n).collect();
        let rot: Vec<usize> = (0..n).map(|i| (i * 7) % 3).collect();
        let r = t.relabel(&perm, &rot);
        let e = is_equivalent(&t, &r).unwrap();
        assert!(e.orientation_preserving);
        check_map(&t, &r, &e);
        assert_eq!(canonical_key(&t), canonical_key(&r));
    }

    #[test]
    fn mirror_is_reported_separately() {
        let t = data::punctured_annulus();
        let m = t.mirror();
        let e = is_equivalent(&t, &m).unwrap();
        check_map(&t, &m, &e);
        assert_eq!(unoriented_key(&t), unoriented_key(&m));
    }

    #[test]
    fn different_surfaces_are_not_equivalent() {
        let a = data::tetrahedron();
        let b = standard_triangulation(1, 3).unwrap();
        assert!(is_equivalent(&a, &b).is_none());
        let flipped = a.flip(0).unwrap();
        assert!(is_equivalent(&a, &flipped).is_none());
    }
}
