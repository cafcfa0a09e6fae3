//! Digons, their removal, and associate triangulations.
//!
//! A closed digon is a pair of triangles glued along two sides around a
//! puncture of degree two; its two remaining sides are the exterior arcs,
//! with endpoints the poles. On bordered surfaces two exterior arcs with the
//! same poles may also bound a region around a hole: a free digon when the
//! hole avoids both poles, a rooted one when one pole (the root) lies on the
//! hole. The triangulation inside such a region is not part of the data.
//!
//! Removing a digon cuts out its region and glues the two exterior arcs to
//! each other.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::equivalence::canonical_key;
use super::triangulation::{slot, Triangulation};
use super::SurfaceError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DigonKind {
    Closed,
    Free,
    Rooted { root: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Digon {
    pub kind: DigonKind,
    /// Triangles of the region, sorted.
    pub triangles: Vec<usize>,
    /// The exterior arcs.
    pub sides: [usize; 2],
    /// Arcs with both sides inside the region (the two shared arcs of a
    /// closed digon).
    pub shared: Vec<usize>,
    pub poles: [usize; 2],
    /// The two exterior sides are the same arc: the whole surface is this
    /// digon, kept as the last one.
    pub identified_sides: bool,
    /// Slots of the exterior sides lying inside the region.
    pub inner_slots: [usize; 2],
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AssociateOptions {
    /// Also remove free digons around a boundary component.
    pub remove_boundary_free: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovalStep {
    pub kind: DigonKind,
    pub poles: [usize; 2],
    /// Removed triangles, numbered in the triangulation before this step.
    pub triangles: Vec<usize>,
    /// Arc of the result replacing the digon.
    pub merged_arc: usize,
}

/// Removals applied and the induced map on arcs: `projection[a]` is the
/// associate arc that original arc `a` is sent to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociateRecord {
    pub steps: Vec<RemovalStep>,
    pub projection: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport {
    /// Distinct canonical keys of terminal triangulations.
    pub terminals: Vec<Vec<u32>>,
    pub states: usize,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.terminals.len() == 1
    }
}

impl Triangulation {
    pub fn find_digons(&self) -> Vec<Digon> {
        let mut out = BTreeSet::new();
        self.closed_digons(&mut out);
        if self.boundary_component_count() > 0 {
            self.bordered_digons(&mut out);
        }
        out.into_iter().collect()
    }

    fn closed_digons(&self, out: &mut BTreeSet<Digon>) {
        let mut seen_centres = BTreeSet::new();
        for t1 in 0..self.triangle_count() {
            for s in 0..3 {
                let Some(p1) = self.partner(slot(t1, s)) else { continue };
                let (t2, r1) = (p1 / 3, p1 % 3);
                if t2 == t1 {
                    continue;
                }
                let r = (r1 + 2) % 3;
                if self.partner(slot(t1, s + 1)) != Some(slot(t2, r)) {
                    continue;
                }
                let centre = self.point_at_corner(slot(t1, s + 1));
                if !seen_centres.insert(centre) {
                    continue;
                }
                let (a_in, b_in) = (slot(t1, s + 2), slot(t2, r + 2));
                let (Some(alpha), Some(beta)) = (self.arc_at(a_in), self.arc_at(b_in)) else {
                    continue;
                };
                let mut triangles = vec![t1, t2];
                triangles.sort_unstable();
                let mut shared = vec![
                    self.arc_at(slot(t1, s)).expect("glued"),
                    self.arc_at(slot(t1, s + 1)).expect("glued"),
                ];
                shared.sort_unstable();
                out.insert(Digon {
                    kind: DigonKind::Closed,
                    triangles,
                    sides: [alpha.min(beta), alpha.max(beta)],
                    shared,
                    poles: [self.point_at_corner(slot(t1, s)), self.point_at_corner(a_in)],
                    identified_sides: alpha == beta,
                    inner_slots: [a_in, b_in],
                });
            }
        }
    }

    /// Triangles reachable from `start` without crossing the `walls`.
    fn region(&self, start: usize, walls: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.triangle_count()];
        inside[start] = true;
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for s in 0..3 {
                let a = slot(t, s);
                if walls.contains(&a) {
                    continue;
                }
                if let Some(p) = self.partner(a) {
                    if !inside[p / 3] {
                        inside[p / 3] = true;
                        stack.push(p / 3);
                    }
                }
            }
        }
        inside
    }

    fn bordered_digons(&self, out: &mut BTreeSet<Digon>) {
        let n = self.arc_count();
        for alpha in 0..n {
            let (p, q) = self.arc_endpoints(alpha);
            if p == q {
                continue;
            }
            for beta in alpha + 1..n {
                let (x, y) = self.arc_endpoints(beta);
                if !((x == p && y == q) || (x == q && y == p)) {
                    continue;
                }
                let walls = [self.arcs()[alpha], self.arcs()[beta]].concat();
                for &a_in in &self.arcs()[alpha] {
                    if let Some(d) = self.classify_region(alpha, beta, a_in, &walls, [p, q]) {
                        out.insert(d);
                    }
                }
            }
        }
    }

    fn classify_region(
        &self,
        alpha: usize,
        beta: usize,
        a_in: usize,
        walls: &[usize],
        poles: [usize; 2],
    ) -> Option<Digon> {
        let inside = self.region(a_in / 3, walls);
        let slot_in = |a: usize| inside[a / 3];
        let [a1, a2] = self.arcs()[alpha];
        let a_out = if a1 == a_in { a2 } else { a1 };
        if slot_in(a_out) {
            return None;
        }
        let [b1, b2] = self.arcs()[beta];
        let b_in = match (slot_in(b1), slot_in(b2)) {
            (true, false) => b1,
            (false, true) => b2,
            _ => return None,
        };
        let triangles: Vec<usize> = (0..self.triangle_count()).filter(|&t| inside[t]).collect();
        let region_slots: Vec<usize> = triangles.iter().flat_map(|&t| (0..3).map(move |s| slot(t, s))).collect();
        let boundary: Vec<usize> = region_slots
            .iter()
            .copied()
            .filter(|&a| self.partner(a).is_none())
            .collect();
        if boundary.is_empty() {
            return None;
        }
        let comps: BTreeSet<usize> = boundary
            .iter()
            .map(|&a| self.boundary_component_of(a).expect("boundary slot"))
            .collect();
        if comps.len() != 1 {
            return None;
        }
        let comp = *comps.iter().next().unwrap();
        let comp_slots: Vec<usize> = self
            .boundary_segments()
            .into_iter()
            .filter(|&a| self.boundary_component_of(a) == Some(comp))
            .collect();
        if comp_slots.iter().any(|&a| !slot_in(a)) {
            return None;
        }
        let hole_points: BTreeSet<usize> = comp_slots.iter().map(|&a| self.point_at_corner(a)).collect();
        let points: BTreeSet<usize> = region_slots.iter().map(|&a| self.point_at_corner(a)).collect();
        let mut shared = BTreeSet::new();
        for &a in &region_slots {
            if let (Some(arc), Some(p)) = (self.arc_at(a), self.partner(a)) {
                if arc != alpha && arc != beta && slot_in(p) {
                    shared.insert(arc);
                }
            }
        }
        let e = shared.len() + 2 + boundary.len();
        let chi = points.len() as i64 - e as i64 + triangles.len() as i64;
        if chi != 0 {
            return None;
        }
        let kind = match (hole_points.contains(&poles[0]), hole_points.contains(&poles[1])) {
            (false, false) => DigonKind::Free,
            (true, false) => DigonKind::Rooted { root: poles[0] },
            (false, true) => DigonKind::Rooted { root: poles[1] },
            (true, true) => return None,
        };
        let expected: BTreeSet<usize> = hole_points.iter().copied().chain(poles).collect();
        if points != expected {
            return None;
        }
        Some(Digon {
            kind,
            triangles,
            sides: [alpha, beta],
            shared: shared.into_iter().collect(),
            poles,
            identified_sides: false,
            inner_slots: [a_in, b_in],
        })
    }

    /// Cuts out the digon's region and glues its exterior arcs together.
    /// The second value maps every arc to its image in the result.
    pub fn remove_digon(
        &self,
        d: &Digon,
        options: AssociateOptions,
    ) -> Result<(Triangulation, Vec<usize>), SurfaceError> {
        if !self.find_digons().contains(d) {
            return Err(SurfaceError::NotADigon);
        }
        if d.kind == DigonKind::Free && !options.remove_boundary_free {
            return Err(SurfaceError::BoundaryRemovalDisabled);
        }
        if d.identified_sides || d.triangles.len() == self.triangle_count() {
            return Err(SurfaceError::LastDigon);
        }
        let removed: BTreeSet<usize> = d.triangles.iter().copied().collect();
        let a_out = self.partner(d.inner_slots[0]).expect("exterior arc");
        let b_out = self.partner(d.inner_slots[1]).expect("exterior arc");
        if removed.contains(&(a_out / 3)) || removed.contains(&(b_out / 3)) {
            return Err(SurfaceError::LastDigon);
        }
        let mut new_index = vec![usize::MAX; self.triangle_count()];
        let mut kept = 0;
        for (t, idx) in new_index.iter_mut().enumerate() {
            if !removed.contains(&t) {
                *idx = kept;
                kept += 1;
            }
        }
        let map = |a: usize| slot(new_index[a / 3], a % 3);
        let mut glue = vec![None; 3 * kept];
        for a in 0..self.slot_count() {
            if removed.contains(&(a / 3)) || a == a_out || a == b_out {
                continue;
            }
            glue[map(a)] = self.partner(a).map(map);
        }
        glue[map(a_out)] = Some(map(b_out));
        glue[map(b_out)] = Some(map(a_out));
        let result = Triangulation::from_glue(glue).expect("digon removal keeps validity");
        let merged = result.arc_at(map(a_out)).expect("merged arc is interior");
        let projection = self
            .arcs()
            .iter()
            .map(|&[x, y]| {
                let outside = [x, y].into_iter().find(|&z| !removed.contains(&(z / 3)) && z != a_out && z != b_out);
                match outside {
                    Some(z) => result.arc_at(map(z)).expect("arc survives"),
                    None => merged,
                }
            })
            .collect();
        Ok((result, projection))
    }

    /// First digon that can be removed under `options`, with its result.
    fn first_removal(&self, options: AssociateOptions) -> Option<(Digon, Triangulation, Vec<usize>)> {
        self.all_removals(options).into_iter().next()
    }

    fn all_removals(&self, options: AssociateOptions) -> Vec<(Digon, Triangulation, Vec<usize>)> {
        self.find_digons()
            .into_iter()
            .filter_map(|d| {
                let (t, proj) = self.remove_digon(&d, options).ok()?;
                Some((d, t, proj))
            })
            .collect()
    }
}

/// Removes digons until none can be removed.
pub fn associate_triangulation(
    t: &Triangulation,
    options: AssociateOptions,
) -> (Triangulation, AssociateRecord) {
    let mut current = t.clone();
    let mut projection: Vec<usize> = (0..t.arc_count()).collect();
    let mut steps = Vec::new();
    while let Some((d, next, proj)) = current.first_removal(options) {
        for p in projection.iter_mut() {
            *p = proj[*p];
        }
        steps.push(RemovalStep {
            kind: d.kind,
            poles: d.poles,
            triangles: d.triangles.clone(),
            merged_arc: proj[d.sides[0]],
        });
        current = next;
    }
    (current, AssociateRecord { steps, projection })
}

/// Explores every removal order and collects the terminal triangulations up
/// to orientation-preserving equivalence.
pub fn removal_confluence(t: &Triangulation, options: AssociateOptions) -> ConfluenceReport {
    let mut visited: HashSet<Vec<u32>> = HashSet::new();
    let mut terminals = BTreeSet::new();
    let mut stack = vec![t.clone()];
    visited.insert(canonical_key(t));
    while let Some(cur) = stack.pop() {
        let next = cur.all_removals(options);
        if next.is_empty() {
            terminals.insert(canonical_key(&cur));
            continue;
        }
        for (_, n, _) in next {
            if visited.insert(canonical_key(&n)) {
                stack.push(n);
            }
        }
    }
    ConfluenceReport {
        terminals: terminals.into_iter().collect(),
        states: visited.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::surface::{standard_triangulation, SurfaceSignature};

    #[test]
    fn tetrahedron_has_no_digons() {
        assert!(data::tetrahedron().find_digons().is_empty());
    }

    #[test]
    fn one_flip_in_the_tetrahedron_makes_digons() {
        let t = data::tetrahedron().flip(0).unwrap();
        let digons = t.find_digons();
        assert!(!digons.is_empty());
        assert!(digons.iter().all(|d| d.kind == DigonKind::Closed && d.triangles.len() == 2));
        let (r, proj) = t.remove_digon(&digons[0], AssociateOptions::default()).unwrap();
        assert_eq!(r.surface_signature(), SurfaceSignature { g: 0, b: 0, p: 3, m_b: 0 });
        assert_eq!(proj.len(), 6);
        let image: BTreeSet<usize> = proj.iter().copied().collect();
        assert_eq!(image.len(), r.arc_count());
    }

    #[test]
    fn thrice_punctured_sphere_keeps_its_last_digon() {
        let t = standard_triangulation(0, 3).unwrap();
        let digons = t.find_digons();
        assert!(digons.iter().all(|d| d.identified_sides));
        assert_eq!(
            t.remove_digon(&digons[0], AssociateOptions::default()).map(|_| ()),
            Err(SurfaceError::LastDigon)
        );
        let (a, rec) = associate_triangulation(&t, AssociateOptions::default());
        assert_eq!(a, t);
        assert!(rec.steps.is_empty());
        assert_eq!(rec.projection, vec![0, 1, 2]);
    }

    #[test]
    fn associate_of_a_digon_free_triangulation_is_itself() {
        let t = standard_triangulation(1, 3).unwrap();
        let (a, rec) = associate_triangulation(&t, AssociateOptions::default());
        assert_eq!(a, t);
        assert_eq!(rec.projection, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn associate_is_idempotent_and_confluent() {
        let t = data::tetrahedron().flip(2).unwrap();
        let (a, rec) = associate_triangulation(&t, AssociateOptions::default());
        assert_eq!(a.surface_signature().p, 3);
        assert_eq!(rec.steps.len(), 1);
        let (b, rec2) = associate_triangulation(&a, AssociateOptions::default());
        assert_eq!(a, b);
        assert!(rec2.steps.is_empty());
        assert!(removal_confluence(&t, AssociateOptions::default()).is_confluent());
    }

    #[test]
    fn rooted_digon_around_a_one_point_hole() {
        let t = data::annulus_two_points();
        // Both arcs join the two boundary points; one side of the pair
        // encloses each boundary component with its point as the root.
        let digons = t.find_digons();
        assert!(!digons.is_empty());
        assert!(digons.iter().all(|d| matches!(d.kind, DigonKind::Rooted { .. })));
    }

    #[test]
    fn removing_an_unknown_digon_fails() {
        let t = data::tetrahedron().flip(0).unwrap();
        let mut d = t.find_digons()[0].clone();
        d.inner_slots = [0, 1];
        assert_eq!(
            t.remove_digon(&d, AssociateOptions::default()).map(|_| ()),
            Err(SurfaceError::NotADigon)
        );
    }
}
