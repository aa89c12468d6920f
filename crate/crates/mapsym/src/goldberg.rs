//! Goldberg-Coxeter operations GC(l,0) and GC(l,l), generated by cutting a
//! triangle out of the barycentric subdivision of the hexagonal tiling.
//!
//! The tiling is never materialized. Points carry exact coordinates with
//! denominator dividing 2 (stored doubled, as integers) in the lattice basis
//! where the origin is a face center, (0,1) is a vertex of that face and
//! (1,0) the vertex just before it in clockwise order. A point with integer
//! coordinates is a face center exactly when x-y is divisible by 3 and a
//! vertex otherwise; a proper half-integer point is an edge midpoint exactly
//! when 2(x-y) is divisible by 3.

use thiserror::Error;

use crate::complex::PatchComplex;
use crate::patch::{OperationPatch, PatchError};

/// A point of the tiling plane with coordinates in (1/2)Z, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexPoint {
    /// twice the x coordinate
    pub x2: i64,
    /// twice the y coordinate
    pub y2: i64,
}

impl HexPoint {
    /// Point (x2/2, y2/2).
    pub fn from_doubled(x2: i64, y2: i64) -> HexPoint {
        HexPoint { x2, y2 }
    }

    /// Point with integer coordinates.
    pub fn from_integer(x: i64, y: i64) -> HexPoint {
        HexPoint { x2: 2 * x, y2: 2 * y }
    }

    fn midpoint(a: HexPoint, b: HexPoint) -> HexPoint {
        debug_assert_eq!((a.x2 + b.x2) % 2, 0);
        debug_assert_eq!((a.y2 + b.y2) % 2, 0);
        HexPoint {
            x2: (a.x2 + b.x2) / 2,
            y2: (a.y2 + b.y2) / 2,
        }
    }
}

/// What a point of the plane is in the subdivided hexagonal tiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointClass {
    FaceCenter,
    Vertex,
    EdgeMidpoint,
    None,
}

/// Classifies a point of (1/2)Z x (1/2)Z.
pub fn classify_point(p: HexPoint) -> PointClass {
    let d = (p.x2 - p.y2).rem_euclid(6);
    if p.x2 % 2 == 0 && p.y2 % 2 == 0 {
        if d == 0 {
            PointClass::FaceCenter
        } else {
            PointClass::Vertex
        }
    } else if d % 3 == 0 {
        PointClass::EdgeMidpoint
    } else {
        PointClass::None
    }
}

/// Colour of a subdivision vertex: 0 for tiling vertices, 1 for edge
/// midpoints, 2 for face centers.
fn color_of(p: HexPoint) -> Option<u8> {
    match classify_point(p) {
        PointClass::Vertex => Some(0),
        PointClass::EdgeMidpoint => Some(1),
        PointClass::FaceCenter => Some(2),
        PointClass::None => None,
    }
}

/// Parameters of a Goldberg-Coxeter operation: m = 0 or l = m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GcParams {
    pub l: u32,
    pub m: u32,
}

impl GcParams {
    pub fn new(l: u32, m: u32) -> Result<GcParams, GcError> {
        if l >= 1 && (m == 0 || m == l) {
            Ok(GcParams { l, m })
        } else {
            Err(GcError::BadParams { l, m })
        }
    }

    /// Triangle corners v0, v1, v2 in doubled coordinates.
    pub fn corners(&self) -> [HexPoint; 3] {
        let (l, m) = (self.l as i64, self.m as i64);
        [
            HexPoint::from_doubled(2 * l, 2 * m),
            HexPoint::from_doubled(l - m, l + 2 * m),
            HexPoint::from_doubled(0, 0),
        ]
    }

    pub fn expected_inflation(&self) -> usize {
        let (l, m) = (self.l as usize, self.m as usize);
        l * l + l * m + m * m
    }
}

#[derive(Debug, Error)]
pub enum GcError {
    #[error("invalid GC parameters ({l},{m}): need m = 0 or l = m, l >= 1")]
    BadParams { l: u32, m: u32 },
    #[error("corner v1 of GC({l},{m}) does not land on the subdivision")]
    V1NotInSubdivision { l: u32, m: u32 },
    #[error("GC({l},{m}) produced inflation factor {got}, expected {want}")]
    InflationMismatch { l: u32, m: u32, got: usize, want: usize },
    #[error("parameters ({l},{m}) are not covered by the decomposition lemma")]
    NotDecomposable { l: u32, m: u32 },
    #[error(transparent)]
    Patch(#[from] PatchError),
}

/// Hexagon corner offsets around a face center, in rotational order.
const HEX_CORNERS: [(i64, i64); 6] = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];

fn cross(ax: i64, ay: i64, bx: i64, by: i64) -> i64 {
    ax * by - ay * bx
}

/// Whether p lies in the closed triangle (a, b, c); exact integer signs.
fn in_closed_triangle(p: HexPoint, a: HexPoint, b: HexPoint, c: HexPoint) -> bool {
    let orient = cross(b.x2 - a.x2, b.y2 - a.y2, c.x2 - a.x2, c.y2 - a.y2).signum();
    debug_assert_ne!(orient, 0);
    for (s, t) in [(a, b), (b, c), (c, a)] {
        let side = cross(t.x2 - s.x2, t.y2 - s.y2, p.x2 - s.x2, p.y2 - s.y2).signum();
        if side != 0 && side != orient {
            return false;
        }
    }
    true
}

/// One chamber of the subdivided tiling: face center, vertex, edge midpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Chamber {
    center: HexPoint,
    vertex: HexPoint,
    mid: HexPoint,
}

impl Chamber {
    fn corner(&self, color: usize) -> HexPoint {
        match color {
            0 => self.vertex,
            1 => self.mid,
            2 => self.center,
            _ => unreachable!(),
        }
    }
}

/// Cuts the triangle with corners v0 = (l,m), v1 = midpoint of v0 and its
/// 60° rotation, v2 = (0,0) out of the subdivided tiling and returns the
/// resulting operation.
pub fn gc_patch(params: GcParams) -> Result<OperationPatch, GcError> {
    let [v0, v1, v2] = params.corners();
    if color_of(v1).is_none() {
        return Err(GcError::V1NotInSubdivision {
            l: params.l,
            m: params.m,
        });
    }

    // enumerate candidate face centers in the bounding box of the triangle
    let xs = [v0.x2, v1.x2, v2.x2];
    let ys = [v0.y2, v1.y2, v2.y2];
    let lo_x = xs.iter().min().unwrap() / 2 - 2;
    let hi_x = xs.iter().max().unwrap() / 2 + 2;
    let lo_y = ys.iter().min().unwrap() / 2 - 2;
    let hi_y = ys.iter().max().unwrap() / 2 + 2;

    let mut chambers = Vec::new();
    for a in lo_x..=hi_x {
        for b in lo_y..=hi_y {
            if (a - b).rem_euclid(3) != 0 {
                continue;
            }
            let g = HexPoint::from_integer(a, b);
            for i in 0..6 {
                let (ux, uy) = HEX_CORNERS[i];
                let (wx, wy) = HEX_CORNERS[(i + 1) % 6];
                let u = HexPoint::from_integer(a + ux, b + uy);
                let w = HexPoint::from_integer(a + wx, b + wy);
                let mid = HexPoint::midpoint(u, w);
                for vert in [u, w] {
                    let ch = Chamber {
                        center: g,
                        vertex: vert,
                        mid,
                    };
                    if [ch.center, ch.vertex, ch.mid]
                        .iter()
                        .all(|&p| in_closed_triangle(p, v0, v1, v2))
                    {
                        chambers.push(ch);
                    }
                }
            }
        }
    }
    chambers.sort_unstable();
    chambers.dedup();

    let want = params.expected_inflation();
    if chambers.len() != want {
        return Err(GcError::InflationMismatch {
            l: params.l,
            m: params.m,
            got: chambers.len(),
            want,
        });
    }

    // adjacency: chambers sharing the edge opposite their colour-c corner
    use std::collections::HashMap;
    let mut by_edge: HashMap<(HexPoint, HexPoint), Vec<(usize, usize)>> = HashMap::new();
    for (i, ch) in chambers.iter().enumerate() {
        for c in 0..3 {
            let (a, b) = (ch.corner((c + 1) % 3), ch.corner((c + 2) % 3));
            let key = (a.min(b), a.max(b));
            by_edge.entry(key).or_default().push((i, c));
        }
    }
    let mut adj = vec![[None; 3]; chambers.len()];
    for list in by_edge.values() {
        if list.len() == 2 {
            let (i, ci) = list[0];
            let (j, cj) = list[1];
            debug_assert_eq!(ci, cj);
            adj[i][ci] = Some(j);
            adj[j][cj] = Some(i);
        }
    }

    // locate the special corners
    let find_corner = |p: HexPoint| -> Option<(usize, usize)> {
        let color = color_of(p)? as usize;
        chambers
            .iter()
            .position(|ch| ch.corner(color) == p)
            .map(|i| (i, color))
    };
    let s0 = find_corner(v0).ok_or(GcError::V1NotInSubdivision {
        l: params.l,
        m: params.m,
    })?;
    let s1 = find_corner(v1).ok_or(GcError::V1NotInSubdivision {
        l: params.l,
        m: params.m,
    })?;
    let s2 = find_corner(v2).ok_or(GcError::V1NotInSubdivision {
        l: params.l,
        m: params.m,
    })?;

    let cx = PatchComplex { adj };
    let raw = cx.assemble([s0, s1, s2]).map_err(PatchError::from)?;
    Ok(OperationPatch::validate(raw).map_err(PatchError::Invalid)?)
}

/// Colour of v0 and the number of patch chambers containing v0 and v2.
pub fn v0_chamber_incidence(params: GcParams) -> Result<(u8, usize, usize), GcError> {
    let [v0, _, v2] = params.corners();
    let patch = gc_patch(params)?;
    let color_v0 = color_of(v0).unwrap();
    // count triangles whose corner of that colour is the special vertex
    let spec = patch.specials();
    let count = |vertex: usize, color: usize| {
        patch
            .triangles()
            .iter()
            .filter(|t| t[color] == vertex)
            .count()
    };
    let n0 = count(spec[0], color_v0 as usize);
    let n2 = count(spec[2], color_of(v2).unwrap() as usize);
    Ok((color_v0, n0, n2))
}

/// Checks the decomposition lemma: GC(3k,0) = GC(k,k)∘GC(1,1) and
/// GC(l,l) = GC(l,0)∘GC(1,1), as coloured patches with matched special
/// vertices. Returns the witness isomorphism.
pub fn verify_gc_decomposition(params: GcParams) -> Result<Option<Vec<usize>>, GcError> {
    let zip = gc_patch(GcParams::new(1, 1)?)?;
    let (lhs, outer) = if params.m == 0 && params.l % 3 == 0 && params.l >= 3 {
        let k = params.l / 3;
        (gc_patch(params)?, gc_patch(GcParams::new(k, k)?)?)
    } else if params.m == params.l {
        (gc_patch(params)?, gc_patch(GcParams::new(params.l, 0)?)?)
    } else {
        return Err(GcError::NotDecomposable {
            l: params.l,
            m: params.m,
        });
    };
    let rhs = outer.compose(&zip)?;
    Ok(lhs.isomorphic(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_point(HexPoint::from_integer(0, 0)),
            PointClass::FaceCenter
        );
        assert_eq!(
            classify_point(HexPoint::from_integer(1, 0)),
            PointClass::Vertex
        );
        // (1/2, 2): doubled (1, 4)
        assert_eq!(
            classify_point(HexPoint::from_doubled(1, 4)),
            PointClass::EdgeMidpoint
        );
        assert_eq!(
            classify_point(HexPoint::from_doubled(1, 2)),
            PointClass::None
        );
    }

    #[test]
    fn small_gc_patches() {
        for (l, m, want) in [(1, 0, 1), (1, 1, 3), (2, 0, 4), (3, 0, 9), (5, 0, 25)] {
            let p = gc_patch(GcParams::new(l, m).unwrap()).unwrap();
            assert_eq!(p.inflation_factor(), want, "GC({l},{m})");
        }
    }

    #[test]
    fn gc_one_zero_is_identity() {
        let p = gc_patch(GcParams::new(1, 0).unwrap()).unwrap();
        let id = crate::builtin::builtin("identity").unwrap();
        assert!(p.isomorphic(&id).is_some());
    }

    #[test]
    fn v0_incidence_follows_colour() {
        // GC(2,0): v0 is a vertex, in one chamber
        assert_eq!(
            v0_chamber_incidence(GcParams::new(2, 0).unwrap()).unwrap(),
            (0, 1, 1)
        );
        // GC(3,0): v0 is a face center, in two chambers
        assert_eq!(
            v0_chamber_incidence(GcParams::new(3, 0).unwrap()).unwrap(),
            (2, 2, 1)
        );
        assert_eq!(
            v0_chamber_incidence(GcParams::new(1, 1).unwrap()).unwrap(),
            (2, 2, 1)
        );
    }

    #[test]
    fn decomposition_lemma() {
        for (l, m) in [(3, 0), (6, 0), (1, 1), (2, 2), (3, 3)] {
            let witness = verify_gc_decomposition(GcParams::new(l, m).unwrap()).unwrap();
            assert!(witness.is_some(), "GC({l},{m})");
        }
    }

    #[test]
    fn zip_is_gc_one_one() {
        let zip = crate::builtin::builtin("zip").unwrap();
        let gc11 = gc_patch(GcParams::new(1, 1).unwrap()).unwrap();
        assert!(zip.isomorphic(&gc11).is_some());
    }

    #[test]
    fn gc_closes_on_hexagonal_torus_maps() {
        let hex = crate::families::hex_torus(3, 3).unwrap();
        let p = gc_patch(GcParams::new(2, 0).unwrap()).unwrap();
        let out = p.apply(&hex).unwrap().map;
        let s = out.summary().unwrap();
        assert_eq!(s.genus, 1);
        assert!(s.face_sizes.iter().all(|&k| k == 6));
        assert!(s.vertex_degrees.iter().all(|&d| d == 3));
    }
}
