//! Barycentric subdivision as a typed view.
//!
//! The chambers of the barycentric subdivision of a map are canonically its
//! flags, so a [`ChamberComplex`] is a flag system with colour semantics
//! switched on: crossing `sigma_i` moves over the chamber edge whose endpoint
//! colours are `{0,1,2} \ {i}`. The subdivision is never materialized as a
//! map of its own except through [`ChamberComplex::triangulation`].

use crate::flagmap::{FlagSystem, MapError};

/// A coloured chamber complex: the barycentric subdivision of a map, indexed
/// by the flags of that map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberComplex {
    inner: FlagSystem,
}

impl ChamberComplex {
    /// Wraps a flag system already carrying chamber-complex semantics.
    pub fn from_flag_system(m: FlagSystem) -> ChamberComplex {
        ChamberComplex {
            inner: m.with_colored(true),
        }
    }

    pub fn chamber_count(&self) -> usize {
        self.inner.flag_count()
    }

    pub fn as_flag_system(&self) -> &FlagSystem {
        &self.inner
    }

    /// Recovers the map whose subdivision this is: vertices are the colour-0
    /// orbits, edges the colour-1 orbits, faces the colour-2 orbits. Exact
    /// inverse of [`FlagSystem::barycentric`].
    pub fn into_map(self) -> FlagSystem {
        self.inner.with_colored(false)
    }

    /// Exports the subdivision itself as an ordinary triangulated map, each
    /// chamber becoming a triangular face, together with the colour of every
    /// vertex of the result.
    ///
    /// Flags of the output are triples (chamber, corner colour, edge slot):
    /// six per chamber.
    pub fn triangulation(&self) -> Result<(FlagSystem, Vec<u8>), MapError> {
        let m = &self.inner;
        let n = m.flag_count();
        // enumerate the six (corner v, slot e) pairs of a triangle, v != e
        let pairs: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
        let index_of = |v: usize, e: usize| -> usize {
            pairs.iter().position(|&(a, b)| (a, b) == (v, e)).unwrap()
        };
        let id = |c: usize, v: usize, e: usize| 6 * c + index_of(v, e);

        let total = 6 * n;
        let mut s0 = vec![0; total];
        let mut s1 = vec![0; total];
        let mut s2 = vec![0; total];
        for c in 0..n {
            for &(v, e) in &pairs {
                let f = id(c, v, e);
                // other endpoint of the slot-e edge
                s0[f] = id(c, 3 - v - e, e);
                // other slot at the colour-v corner
                s1[f] = id(c, v, 3 - v - e);
                // neighboring chamber across the slot-e edge
                s2[f] = id(m.sigma(e, c), v, e);
            }
        }
        let map = FlagSystem::new(s0, s1, s2, false)?;
        let vertices = map.vertex_orbits();
        let mut colors = vec![0u8; vertices.count];
        for &rep in &vertices.rep {
            colors[vertices.id[rep]] = pairs[rep % 6].0 as u8;
        }
        Ok((map, colors))
    }
}

impl FlagSystem {
    /// The barycentric subdivision of a map, as its chamber complex. The
    /// chambers are canonically the flags, so this only switches semantics.
    pub fn barycentric(&self) -> ChamberComplex {
        ChamberComplex::from_flag_system(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, PlatonicSolid};

    #[test]
    fn chamber_counts() {
        assert_eq!(
            families::platonic(PlatonicSolid::Tetrahedron)
                .barycentric()
                .chamber_count(),
            24
        );
        assert_eq!(families::h_family(2).unwrap().barycentric().chamber_count(), 96);
        assert_eq!(
            families::square_torus(5).unwrap().barycentric().chamber_count(),
            200
        );
    }

    #[test]
    fn barycentric_round_trip_is_exact() {
        for m in [
            families::platonic(PlatonicSolid::Tetrahedron),
            families::h_family(3).unwrap(),
        ] {
            let back = m.barycentric().into_map();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn tetrahedron_triangulation_counts() {
        let (map, colors) = families::platonic(PlatonicSolid::Tetrahedron)
            .barycentric()
            .triangulation()
            .unwrap();
        let s = map.summary().unwrap();
        assert_eq!(
            (s.vertex_count, s.edge_count, s.face_count, s.genus),
            (14, 36, 24, 0)
        );
        assert!(s.face_sizes.iter().all(|&k| k == 3));
        // 4 original vertices, 6 edge vertices, 4 face vertices
        let mut counts = [0; 3];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        assert_eq!(counts, [4, 6, 4]);
    }

    #[test]
    fn square_torus_triangulation_counts() {
        let (map, _) = families::square_torus(5)
            .unwrap()
            .barycentric()
            .triangulation()
            .unwrap();
        let s = map.summary().unwrap();
        assert_eq!((s.vertex_count, s.edge_count, s.face_count), (100, 300, 200));
        assert_eq!(s.genus, 1);
    }

    #[test]
    fn h2_triangulation_is_genus_two() {
        let (map, colors) = families::h_family(2)
            .unwrap()
            .barycentric()
            .triangulation()
            .unwrap();
        let s = map.summary().unwrap();
        assert_eq!(s.face_count, 96);
        assert_eq!(s.genus, 2);
        // no edge joins two vertices of the same colour, and every colour-1
        // vertex has degree 4
        let verts = map.vertex_orbits();
        let edges = map.edge_orbits();
        for &rep in &edges.rep {
            let a = verts.id[rep];
            let b = verts.id[map.sigma(0, rep)];
            assert_ne!(colors[a], colors[b]);
        }
        for (v, &size) in verts.sizes.iter().enumerate() {
            if colors[v] == 1 {
                assert_eq!(size / 2, 4);
            }
        }
    }
}
