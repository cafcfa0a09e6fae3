use std::fmt;

use serde::{Deserialize, Serialize};

use super::SurfaceError;

/// Genus, boundary components, punctures and boundary marked points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SurfaceSignature {
    pub g: usize,
    pub b: usize,
    pub p: usize,
    pub m_b: usize,
}

impl SurfaceSignature {
    /// Punctures plus boundary components.
    pub fn features(&self) -> usize {
        self.p + self.b
    }

    /// Number of arcs in any ideal triangulation, `6g - 6 + 3(p + b) + m_b`.
    pub fn arc_count(&self) -> usize {
        (6 * self.g + 3 * (self.p + self.b) + self.m_b)
            .checked_sub(6)
            .expect("surface admits a triangulation")
    }
}

impl fmt::Display for SurfaceSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, b={}, p={}, m_b={})", self.g, self.b, self.p, self.m_b)
    }
}

/// Offending arcs and triangles found by [`Triangulation::loop_report`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LoopReport {
    pub loops: Vec<usize>,
    pub self_folded: Vec<usize>,
}

impl LoopReport {
    pub fn is_loop_free(&self) -> bool {
        self.loops.is_empty() && self.self_folded.is_empty()
    }
}

/// JSON form: `{"triangles": t, "glue": [[a, b], ...]}`. A pair may carry a
/// third entry giving whether the gluing reverses orientation; it defaults to
/// true, and `false` is rejected since only oriented surfaces are modelled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationFile {
    pub triangles: usize,
    pub glue: Vec<GluePair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GluePair {
    Plain([usize; 2]),
    Flagged(usize, usize, bool),
}

/// A triangulated surface; see the module documentation for the encoding.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    glue: Vec<Option<usize>>,
    corner_point: Vec<usize>,
    point_on_boundary: Vec<bool>,
    arcs: Vec<[usize; 2]>,
    slot_arc: Vec<Option<usize>>,
    boundary_component: Vec<Option<usize>>,
    boundary_components: usize,
}

pub(crate) fn slot(t: usize, s: usize) -> usize {
    3 * t + s % 3
}

pub(crate) fn next_side(slot: usize) -> usize {
    3 * (slot / 3) + (slot + 1) % 3
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

impl Triangulation {
    /// Builds a triangulation on `triangles` triangles from slot pairs.
    pub fn from_pairs(triangles: usize, pairs: &[(usize, usize)]) -> Result<Self, SurfaceError> {
        let slots = 3 * triangles;
        let mut glue = vec![None; slots];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= slots {
                    return Err(SurfaceError::SlotOutOfRange { slot: x, slots });
                }
            }
            if a == b {
                return Err(SurfaceError::SelfGluedSlot(a));
            }
            for x in [a, b] {
                if glue[x].is_some() {
                    return Err(SurfaceError::NotInvolution(x));
                }
            }
            glue[a] = Some(b);
            glue[b] = Some(a);
        }
        Self::from_glue(glue)
    }

    /// Builds a triangulation from the partner of every slot.
    pub fn from_glue(glue: Vec<Option<usize>>) -> Result<Self, SurfaceError> {
        let slots = glue.len();
        if slots == 0 || !slots.is_multiple_of(3) {
            return Err(SurfaceError::NoTriangles);
        }
        for (a, &p) in glue.iter().enumerate() {
            if let Some(b) = p {
                if b >= slots {
                    return Err(SurfaceError::SlotOutOfRange { slot: b, slots });
                }
                if a == b {
                    return Err(SurfaceError::SelfGluedSlot(a));
                }
                if glue[b] != Some(a) {
                    return Err(SurfaceError::NotInvolution(a));
                }
            }
        }
        let triangles = slots / 3;
        let mut comp: Vec<usize> = (0..triangles).collect();
        let mut corner: Vec<usize> = (0..slots).collect();
        for a in 0..slots {
            let Some(b) = glue[a] else { continue };
            if a > b {
                continue;
            }
            union(&mut comp, a / 3, b / 3);
            // Side a runs from corner a to corner next(a); its partner is
            // traversed the other way.
            union(&mut corner, a, next_side(b));
            union(&mut corner, next_side(a), b);
        }
        let root = find(&mut comp, 0);
        if (0..triangles).any(|t| find(&mut comp, t) != root) {
            return Err(SurfaceError::Disconnected);
        }

        let mut point_of_root = vec![usize::MAX; slots];
        let mut corner_point = vec![0; slots];
        let mut points = 0;
        for c in 0..slots {
            let r = find(&mut corner, c);
            if point_of_root[r] == usize::MAX {
                point_of_root[r] = points;
                points += 1;
            }
            corner_point[c] = point_of_root[r];
        }
        let mut point_on_boundary = vec![false; points];
        // A boundary side starting at corner c ends at the corner next(c);
        // each boundary point starts exactly one boundary side.
        let mut outgoing = vec![usize::MAX; points];
        for a in 0..slots {
            if glue[a].is_none() {
                let p = corner_point[a];
                point_on_boundary[p] = true;
                outgoing[p] = a;
            }
        }
        let mut boundary_component = vec![None; slots];
        let mut boundary_components = 0;
        for a in 0..slots {
            if glue[a].is_some() || boundary_component[a].is_some() {
                continue;
            }
            let mut x = a;
            while boundary_component[x].is_none() {
                boundary_component[x] = Some(boundary_components);
                x = outgoing[corner_point[next_side(x)]];
            }
            boundary_components += 1;
        }

        let mut arcs = Vec::new();
        let mut slot_arc = vec![None; slots];
        for a in 0..slots {
            if let Some(b) = glue[a] {
                if a < b {
                    slot_arc[a] = Some(arcs.len());
                    slot_arc[b] = Some(arcs.len());
                    arcs.push([a, b]);
                }
            }
        }
        let t = Triangulation {
            glue,
            corner_point,
            point_on_boundary,
            arcs,
            slot_arc,
            boundary_component,
            boundary_components,
        };
        debug_assert_eq!(t.surface_signature().arc_count(), t.arc_count());
        Ok(t)
    }

    pub fn from_file(file: &TriangulationFile) -> Result<Self, SurfaceError> {
        let mut pairs = Vec::with_capacity(file.glue.len());
        for pair in &file.glue {
            match *pair {
                GluePair::Plain([a, b]) | GluePair::Flagged(a, b, true) => pairs.push((a, b)),
                GluePair::Flagged(a, b, false) => return Err(SurfaceError::OrientationViolation(a, b)),
            }
        }
        Self::from_pairs(file.triangles, &pairs)
    }

    pub fn to_file(&self) -> TriangulationFile {
        TriangulationFile {
            triangles: self.triangle_count(),
            glue: self.arcs.iter().map(|&[a, b]| GluePair::Plain([a, b])).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, SurfaceError> {
        let file: TriangulationFile =
            serde_json::from_str(text).map_err(|e| SurfaceError::Format(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("serializable")
    }

    pub fn triangle_count(&self) -> usize {
        self.glue.len() / 3
    }

    pub fn slot_count(&self) -> usize {
        self.glue.len()
    }

    /// Partner slot, or `None` for a boundary segment.
    pub fn partner(&self, slot: usize) -> Option<usize> {
        self.glue[slot]
    }

    pub fn glue(&self) -> &[Option<usize>] {
        &self.glue
    }

    /// Interior arcs as slot pairs `[a, b]` with `a < b`, ordered by `a`.
    pub fn arcs(&self) -> &[[usize; 2]] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// The arc occupying `slot`, or `None` on the boundary.
    pub fn arc_at(&self, slot: usize) -> Option<usize> {
        self.slot_arc[slot]
    }

    pub fn boundary_segments(&self) -> Vec<usize> {
        (0..self.slot_count()).filter(|&a| self.glue[a].is_none()).collect()
    }

    pub fn point_count(&self) -> usize {
        self.point_on_boundary.len()
    }

    /// Marked point at corner `c` of triangle `t` (slot numbering).
    pub fn point_at_corner(&self, corner: usize) -> usize {
        self.corner_point[corner]
    }

    pub fn is_boundary_point(&self, point: usize) -> bool {
        self.point_on_boundary[point]
    }

    /// Endpoints of the side in `slot`: start and end corner points.
    pub fn side_endpoints(&self, slot: usize) -> (usize, usize) {
        (self.corner_point[slot], self.corner_point[next_side(slot)])
    }

    pub fn arc_endpoints(&self, arc: usize) -> (usize, usize) {
        self.side_endpoints(self.arcs[arc][0])
    }

    /// Boundary component containing the boundary segment in `slot`.
    pub fn boundary_component_of(&self, slot: usize) -> Option<usize> {
        self.boundary_component[slot]
    }

    pub fn boundary_component_count(&self) -> usize {
        self.boundary_components
    }

    pub fn surface_signature(&self) -> SurfaceSignature {
        let v = self.point_count() as i64;
        let e = (self.arcs.len() + self.boundary_segments().len()) as i64;
        let f = self.triangle_count() as i64;
        let chi = v - e + f;
        let b = self.boundary_components as i64;
        let two_g = 2 - b - chi;
        assert!(two_g >= 0 && two_g % 2 == 0, "Euler characteristic of an oriented surface");
        let m_b = self.point_on_boundary.iter().filter(|&&x| x).count();
        SurfaceSignature {
            g: (two_g / 2) as usize,
            b: self.boundary_components,
            p: self.point_count() - m_b,
            m_b,
        }
    }

    /// Triangle with two of its sides glued to each other, as
    /// `(folded side, inner arc)`: the folded side is the slot pair
    /// `s, s + 1` whose partner is internal; the remaining side `s + 2` is
    /// the enclosing loop (or boundary).
    pub fn self_folded_side(&self, t: usize) -> Option<usize> {
        (0..3).find(|&s| self.glue[slot(t, s)] == Some(slot(t, s + 1)))
    }

    pub fn self_folded_triangles(&self) -> Vec<usize> {
        (0..self.triangle_count())
            .filter(|&t| self.self_folded_side(t).is_some())
            .collect()
    }

    pub fn loop_report(&self) -> LoopReport {
        LoopReport {
            loops: (0..self.arcs.len())
                .filter(|&a| {
                    let (x, y) = self.arc_endpoints(a);
                    x == y
                })
                .collect(),
            self_folded: self.self_folded_triangles(),
        }
    }

    /// No arc has equal endpoints and no triangle is self-folded.
    pub fn is_loop_free(&self) -> bool {
        self.loop_report().is_loop_free()
    }

    /// Relabels triangles by `perm` (triangle `t` becomes `perm[t]`) and
    /// rotates triangle `t`'s sides by `rot[t]` (old side `s` becomes side
    /// `s - rot[t]`).
    pub fn relabel(&self, perm: &[usize], rot: &[usize]) -> Triangulation {
        let n = self.triangle_count();
        assert_eq!(perm.len(), n);
        assert_eq!(rot.len(), n);
        let map = |a: usize| {
            let (t, s) = (a / 3, a % 3);
            slot(perm[t], s + 3 - rot[t] % 3)
        };
        let mut glue = vec![None; self.slot_count()];
        for a in 0..self.slot_count() {
            glue[map(a)] = self.glue[a].map(map);
        }
        Triangulation::from_glue(glue).expect("relabelling keeps validity")
    }

    /// The same surface with the opposite orientation: side `s` of every
    /// triangle becomes side `2 - s`.
    pub fn mirror(&self) -> Triangulation {
        let map = |a: usize| slot(a / 3, 2 - a % 3);
        let mut glue = vec![None; self.slot_count()];
        for a in 0..self.slot_count() {
            glue[map(a)] = self.glue[a].map(map);
        }
        Triangulation::from_glue(glue).expect("mirror keeps validity")
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Triangulation(triangles={}, arcs={:?})",
            self.triangle_count(),
            self.arcs
        )
    }
}
