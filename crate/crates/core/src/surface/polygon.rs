//! Punctured polygons with side pairings.
//!
//! A genus-`g` gluing has `N = 4g + 2` sides; side `i` runs from vertex `i`
//! to vertex `i + 1 (mod N)`. Paired sides are identified with reversed
//! orientation, so `(i, j)` identifies vertex `i` with `j + 1` and `i + 1`
//! with `j`. A valid gluing has exactly two vertex classes (hence genus `g`
//! and, with the centre, three marked points) and no side whose endpoints
//! coincide.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::triangulation::{slot, Triangulation};
use super::SurfaceError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonGluingFile {
    pub g: usize,
    pub pairing: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolygonGluing {
    g: usize,
    partner: Vec<usize>,
}

impl PolygonGluing {
    pub fn new(g: usize, pairs: &[(usize, usize)]) -> Result<Self, SurfaceError> {
        let n = 4 * g + 2;
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in pairs {
            if a >= n || b >= n || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(SurfaceError::NotAMatching(n));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(SurfaceError::NotAMatching(n));
        }
        Self::from_partner(g, partner)
    }

    fn from_partner(g: usize, partner: Vec<usize>) -> Result<Self, SurfaceError> {
        let p = PolygonGluing { g, partner };
        let classes = p.vertex_classes();
        let count = classes.iter().collect::<BTreeSet<_>>().len();
        if count != 2 {
            return Err(SurfaceError::WrongGenus { g, classes: count });
        }
        let n = p.sides();
        if let Some(i) = (0..n).find(|&i| classes[i] == classes[(i + 1) % n]) {
            return Err(SurfaceError::DegenerateSide(i));
        }
        Ok(p)
    }

    /// Every side paired with the opposite one.
    pub fn opposite(g: usize) -> Self {
        let n = 4 * g + 2;
        let partner = (0..n).map(|i| (i + n / 2) % n).collect();
        Self::from_partner(g, partner).expect("opposite pairing is valid")
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn sides(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, side: usize) -> usize {
        self.partner[side]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.sides())
            .filter(|&i| i < self.partner[i])
            .map(|i| (i, self.partner[i]))
            .collect()
    }

    pub fn is_opposite(&self) -> bool {
        let n = self.sides();
        (0..n).all(|i| self.partner[i] == (i + n / 2) % n)
    }

    /// Class representative (smallest vertex) for every polygon vertex.
    pub fn vertex_classes(&self) -> Vec<usize> {
        let n = self.sides();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        for i in 0..n {
            let j = self.partner[i];
            for (a, b) in [(i, (j + 1) % n), ((i + 1) % n, j)] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    pub fn from_file(file: &PolygonGluingFile) -> Result<Self, SurfaceError> {
        let pairs: Vec<(usize, usize)> = file.pairing.iter().map(|p| (p[0], p[1])).collect();
        Self::new(file.g, &pairs)
    }

    pub fn to_file(&self) -> PolygonGluingFile {
        PolygonGluingFile {
            g: self.g,
            pairing: self.pairs().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    /// Fan triangulation from the centre puncture. Triangle `i` has corners
    /// `(centre, v_i, v_{i+1})`; its side 1 is polygon side `i`.
    pub fn realize(&self) -> Triangulation {
        let n = self.sides();
        let mut pairs = Vec::new();
        for i in 0..n {
            pairs.push((slot(i, 2), slot((i + 1) % n, 0)));
            let j = self.partner[i];
            if i < j {
                pairs.push((slot(i, 1), slot(j, 1)));
            }
        }
        Triangulation::from_pairs(n, &pairs).expect("fan of a valid gluing")
    }

    /// Key invariant under rotating the polygon: the least rotation of the
    /// sequence of pairing offsets.
    pub fn rotation_key(&self) -> Vec<usize> {
        let n = self.sides();
        let offs: Vec<usize> = (0..n).map(|i| (self.partner[i] + n - i) % n).collect();
        least_rotation(&offs)
    }

    /// Key invariant under the full dihedral symmetry of the polygon.
    pub fn dihedral_key(&self) -> Vec<usize> {
        let n = self.sides();
        let rev: Vec<usize> = (0..n)
            .map(|i| (i + n - self.partner[i]) % n)
            .rev()
            .collect();
        self.rotation_key().min(least_rotation(&rev))
    }

    /// Results of cutting along a diagonal with endpoints in distinct vertex
    /// classes and regluing the two pieces along one identified side pair.
    /// Output is deduplicated and sorted.
    pub fn admissible_regluings(&self) -> Vec<PolygonGluing> {
        let n = self.sides();
        let classes = self.vertex_classes();
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in a + 2..n {
                if a == 0 && b == n - 1 {
                    continue;
                }
                if classes[a] == classes[b] {
                    continue;
                }
                // Pieces as cyclic side sequences; `n` and `n + 1` stand for
                // the two copies of the diagonal.
                let mut piece_a: Vec<usize> = (a..b).collect();
                piece_a.push(n);
                let mut piece_b: Vec<usize> = (b..n).chain(0..a).collect();
                piece_b.push(n + 1);
                for (ia, &i) in piece_a.iter().enumerate() {
                    if i >= n {
                        continue;
                    }
                    let j = self.partner[i];
                    let Some(jb) = piece_b.iter().position(|&x| x == j) else {
                        continue;
                    };
                    let mut cycle = Vec::with_capacity(n);
                    for k in 1..piece_a.len() {
                        cycle.push(piece_a[(ia + k) % piece_a.len()]);
                    }
                    for k in 1..piece_b.len() {
                        cycle.push(piece_b[(jb + k) % piece_b.len()]);
                    }
                    let mut pos = vec![0; n + 2];
                    for (p, &x) in cycle.iter().enumerate() {
                        pos[x] = p;
                    }
                    let mut partner = vec![0; n];
                    for (p, &x) in cycle.iter().enumerate() {
                        partner[p] = if x == n {
                            pos[n + 1]
                        } else if x == n + 1 {
                            pos[n]
                        } else {
                            pos[self.partner[x]]
                        };
                    }
                    if let Ok(g) = PolygonGluing::from_partner(self.g, partner) {
                        out.insert(g);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Every valid gluing of genus `g`, one per rotation class.
    pub fn enumerate(g: usize) -> Vec<PolygonGluing> {
        let n = 4 * g + 2;
        let mut seen = BTreeMap::new();
        let mut partner = vec![usize::MAX; n];
        fn rec(
            g: usize,
            partner: &mut [usize],
            seen: &mut BTreeMap<Vec<usize>, PolygonGluing>,
        ) {
            let Some(i) = partner.iter().position(|&p| p == usize::MAX) else {
                if let Ok(p) = PolygonGluing::from_partner(g, partner.to_vec()) {
                    seen.entry(p.rotation_key()).or_insert(p);
                }
                return;
            };
            for j in i + 1..partner.len() {
                if partner[j] != usize::MAX {
                    continue;
                }
                partner[i] = j;
                partner[j] = i;
                rec(g, partner, seen);
                partner[i] = usize::MAX;
                partner[j] = usize::MAX;
            }
        }
        rec(g, &mut partner, &mut seen);
        seen.into_values().collect()
    }
}

fn least_rotation(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    (0..n)
        .map(|r| seq[r..].iter().chain(&seq[..r]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// For every valid genus-`g` gluing (up to rotation), whether the opposite
/// pairing is reachable by admissible regluings. Reachability is decided on
/// the directed regluing graph by searching backwards from the target.
pub fn regluing_reaches_opposite(g: usize) -> BTreeMap<Vec<usize>, bool> {
    let all = PolygonGluing::enumerate(g);
    let index: BTreeMap<Vec<usize>, usize> = all
        .iter()
        .enumerate()
        .map(|(i, p)| (p.rotation_key(), i))
        .collect();
    let mut reverse = vec![Vec::new(); all.len()];
    for (i, p) in all.iter().enumerate() {
        for q in p.admissible_regluings() {
            let j = index[&q.rotation_key()];
            reverse[j].push(i);
        }
    }
    let target = index[&PolygonGluing::opposite(g).rotation_key()];
    let mut reached = vec![false; all.len()];
    reached[target] = true;
    let mut queue = VecDeque::from([target]);
    while let Some(j) = queue.pop_front() {
        for &i in &reverse[j] {
            if !reached[i] {
                reached[i] = true;
                queue.push_back(i);
            }
        }
    }
    all.iter()
        .enumerate()
        .map(|(i, p)| (p.rotation_key(), reached[i]))
        .collect()
}

/// Loop-free triangulation of the closed genus-`g` surface with `p >= 3`
/// punctures: the centre fan of the opposite-sides `(4g+2)`-gon, then `p - 3`
/// extra punctures each inserted into triangle 0.
pub fn standard_triangulation(g: usize, p: usize) -> Result<Triangulation, SurfaceError> {
    if p < 3 {
        return Err(SurfaceError::TooFewPunctures(p));
    }
    let mut t = PolygonGluing::opposite(g).realize();
    for _ in 3..p {
        t = t.subdivide(0);
    }
    Ok(t)
}

/// Fan triangulation of the disc with `m >= 3` boundary points: triangle
/// `k` has corners `(v_0, v_(k+1), v_(k+2))`. Its quiver is an oriented path
/// of type `A_(m-3)`.
pub fn disc_triangulation(m: usize) -> Result<Triangulation, SurfaceError> {
    if m < 3 {
        return Err(SurfaceError::TooFewPoints(m));
    }
    let pairs: Vec<(usize, usize)> = (0..m - 3).map(|k| (slot(k, 2), slot(k + 1, 0))).collect();
    Triangulation::from_pairs(m - 2, &pairs)
}

/// Once-punctured disc with `m >= 2` boundary points, every boundary point
/// joined to the puncture. Its quiver is an oriented `m`-cycle (type `D_m`).
pub fn punctured_disc_triangulation(m: usize) -> Result<Triangulation, SurfaceError> {
    if m < 2 {
        return Err(SurfaceError::TooFewPoints(m));
    }
    let pairs: Vec<(usize, usize)> = (0..m).map(|k| (slot(k, 2), slot((k + 1) % m, 0))).collect();
    Triangulation::from_pairs(m, &pairs)
}

impl Triangulation {
    /// Inserts a puncture `X` into triangle `t` with corners `P, Q, R`:
    /// `t` becomes `(P, Q, X)` and two new triangles `(Q, R, X)`,
    /// `(R, P, X)` are appended.
    pub fn subdivide(&self, t: usize) -> Triangulation {
        let n = self.triangle_count();
        let (t1, t2) = (n, n + 1);
        let mut glue = self.glue().to_vec();
        glue.extend([None; 6]);
        let moves = [(slot(t, 1), slot(t1, 0)), (slot(t, 2), slot(t2, 0))];
        let relocate = |z: usize| moves.iter().find(|m| m.0 == z).map(|m| m.1).unwrap_or(z);
        for &(old, new) in &moves {
            let partner = self.partner(old).map(relocate);
            glue[new] = partner;
            if let Some(p) = partner {
                glue[p] = Some(new);
            }
        }
        for (a, b) in [
            (slot(t, 1), slot(t1, 2)),
            (slot(t1, 1), slot(t2, 2)),
            (slot(t2, 1), slot(t, 2)),
        ] {
            glue[a] = Some(b);
            glue[b] = Some(a);
        }
        Triangulation::from_glue(glue).expect("subdivision keeps validity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{is_equivalent, SurfaceSignature};

    #[test]
    fn disc_quivers() {
        let t = disc_triangulation(6).unwrap();
        assert_eq!(t.surface_signature(), SurfaceSignature { g: 0, b: 1, p: 0, m_b: 6 });
        let q = t.plain_quiver();
        assert_eq!(q.len(), 3);
        assert_eq!(q.arrow_count(), 2);
        let t = punctured_disc_triangulation(4).unwrap();
        assert_eq!(t.surface_signature(), SurfaceSignature { g: 0, b: 1, p: 1, m_b: 4 });
        assert!(t.is_loop_free());
        assert_eq!(crate::quiver::chordless_oriented_cycles(&t.plain_quiver()), vec![vec![0, 3, 2, 1]]);
        assert!(punctured_disc_triangulation(1).is_err());
    }

    #[test]
    fn standard_signatures() {
        let t = standard_triangulation(0, 4).unwrap();
        assert_eq!(t.arc_count(), 6);
        assert_eq!(t.surface_signature(), SurfaceSignature { g: 0, b: 0, p: 4, m_b: 0 });
        assert!(t.is_loop_free());
        assert!(is_equivalent(&t, &crate::data::tetrahedron()).is_some());

        let t = standard_triangulation(1, 3).unwrap();
        assert_eq!(t.arc_count(), 9);
        assert_eq!(t.surface_signature(), SurfaceSignature { g: 1, b: 0, p: 3, m_b: 0 });
        assert!(t.is_loop_free());

        let t = standard_triangulation(2, 3).unwrap();
        assert_eq!(t.arc_count(), 15);
        assert!(t.is_loop_free());
        assert!(t.loop_free_flips().is_empty());

        assert_eq!(standard_triangulation(1, 2), Err(SurfaceError::TooFewPunctures(2)));
    }

    #[test]
    fn pairing_validation() {
        // Adjacent sides (0, 1) of the decagon: vertex 1 is glued to itself
        // and the remaining identifications leave side 0 degenerate.
        let err = PolygonGluing::new(2, &[(0, 1), (2, 7), (3, 8), (4, 9), (5, 6)]);
        assert!(matches!(
            err,
            Err(SurfaceError::DegenerateSide(_)) | Err(SurfaceError::WrongGenus { .. })
        ));
        assert_eq!(
            PolygonGluing::new(1, &[(0, 3), (1, 4)]),
            Err(SurfaceError::NotAMatching(6))
        );
    }

    #[test]
    fn hexagon_opposite_sides_realize_a_thrice_punctured_torus() {
        let t = PolygonGluing::opposite(1).realize();
        assert_eq!(t.surface_signature(), SurfaceSignature { g: 1, b: 0, p: 3, m_b: 0 });
    }

    #[test]
    fn hexagon_regluings_keep_the_surface() {
        let p = PolygonGluing::opposite(1);
        let out = p.admissible_regluings();
        assert!(!out.is_empty());
        let sig = p.realize().surface_signature();
        for q in out {
            assert_eq!(q.realize().surface_signature(), sig);
        }
    }

    #[test]
    fn regluing_reaches_opposite_in_genus_one() {
        let reach = regluing_reaches_opposite(1);
        assert!(!reach.is_empty());
        assert!(reach.values().all(|&r| r));
    }

    #[test]
    fn file_round_trip() {
        let p = PolygonGluing::opposite(2);
        assert_eq!(PolygonGluing::from_file(&p.to_file()).unwrap(), p);
    }
}
