//! Generators for the fixture maps: Platonic solids, square and hexagonal
//! torus tilings, the `h_family` of higher-genus maps, and face gluing for
//! the self-dual maps of every genus.

use thiserror::Error;

use crate::flagmap::{FlagSystem, MapError, RotationSystem};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("unknown family name {0:?}")]
    UnknownName(String),
    #[error("square torus needs n >= 3, got {0} (smaller grids have loops or parallel edges)")]
    SquareTorusTooSmall(usize),
    #[error("hex torus parameters ({0},{1}) rejected: {2}")]
    HexTorusDegenerate(usize, usize, String),
    #[error("h_family needs genus >= 2, got {0}")]
    HFamilyGenus(usize),
    #[error("self-dual construction for genus {0} failed: {1}")]
    SelfDual(usize, String),
    #[error("glue: boundary sizes differ ({0} vs {1})")]
    GlueSizeMismatch(usize, usize),
    #[error("glue: face boundary walk is not a simple cycle")]
    GlueNonSimpleFace,
    #[error("glue: face index {0} out of range")]
    GlueBadFace(usize),
    #[error("glue: identification produced an invalid map: {0}")]
    GlueInvalid(MapError),
    #[error("fixture {0} failed a load-time assertion: {1}")]
    FixtureAssertion(&'static str, String),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlatonicSolid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl PlatonicSolid {
    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "tetrahedron" => PlatonicSolid::Tetrahedron,
            "cube" => PlatonicSolid::Cube,
            "octahedron" => PlatonicSolid::Octahedron,
            "dodecahedron" => PlatonicSolid::Dodecahedron,
            "icosahedron" => PlatonicSolid::Icosahedron,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            PlatonicSolid::Tetrahedron => "tetrahedron",
            PlatonicSolid::Cube => "cube",
            PlatonicSolid::Octahedron => "octahedron",
            PlatonicSolid::Dodecahedron => "dodecahedron",
            PlatonicSolid::Icosahedron => "icosahedron",
        }
    }
}

fn octahedron_rotation() -> RotationSystem {
    // vertices: 0:+x 1:+y 2:+z 3:-x 4:-y 5:-z
    RotationSystem::from_simple(vec![
        vec![1, 2, 4, 5],
        vec![0, 5, 3, 2],
        vec![0, 1, 3, 4],
        vec![1, 5, 4, 2],
        vec![0, 2, 3, 5],
        vec![0, 4, 3, 1],
    ])
    .expect("octahedron rotation system")
}

fn icosahedron_rotation() -> RotationSystem {
    // 0: north, 1..=5: upper ring, 6..=10: lower ring, 11: south
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(12);
    rows.push((0..5).map(u).collect());
    for i in 0..5 {
        rows.push(vec![u(i + 1), 0, u(i + 4), l(i + 4), l(i)]);
    }
    for i in 0..5 {
        rows.push(vec![u(i + 1), u(i), l(i + 4), 11, l(i + 1)]);
    }
    rows.push(vec![l(4), l(3), l(2), l(1), l(0)]);
    RotationSystem::from_simple(rows).expect("icosahedron rotation system")
}

pub fn platonic(which: PlatonicSolid) -> FlagSystem {
    match which {
        PlatonicSolid::Tetrahedron => {
            let r = RotationSystem::from_simple(vec![
                vec![1, 2, 3],
                vec![0, 3, 2],
                vec![0, 1, 3],
                vec![0, 2, 1],
            ])
            .expect("tetrahedron rotation system");
            FlagSystem::from_rotation_system(&r).expect("tetrahedron")
        }
        PlatonicSolid::Octahedron => {
            FlagSystem::from_rotation_system(&octahedron_rotation()).expect("octahedron")
        }
        PlatonicSolid::Cube => platonic(PlatonicSolid::Octahedron).dual(),
        PlatonicSolid::Icosahedron => {
            FlagSystem::from_rotation_system(&icosahedron_rotation()).expect("icosahedron")
        }
        PlatonicSolid::Dodecahedron => platonic(PlatonicSolid::Icosahedron).dual(),
    }
}

/// The n×n square tiling of the torus. Polyhedral and self-dual for n >= 3.
pub fn square_torus(n: usize) -> Result<FlagSystem, FamilyError> {
    if n < 3 {
        return Err(FamilyError::SquareTorusTooSmall(n));
    }
    let v = |i: usize, j: usize| (i % n) * n + (j % n);
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            rows.push(vec![
                v(i + 1, j),
                v(i, j + n - 1),
                v(i + n - 1, j),
                v(i, j + 1),
            ]);
        }
    }
    Ok(FlagSystem::from_rotation_system(&RotationSystem::from_simple(rows)?)?)
}

/// A 3-regular all-hexagon map of genus 1 with `r*s` hexagons (a honeycomb
/// quotient). Parameters that give a non-simple or non-polyhedral map are
/// rejected.
pub fn hex_torus(r: usize, s: usize) -> Result<FlagSystem, FamilyError> {
    if r < 2 || s < 2 {
        return Err(FamilyError::HexTorusDegenerate(
            r,
            s,
            "parameters below 2 give loops or parallel edges".into(),
        ));
    }
    // two sublattices a(i,j) and b(i,j)
    let a = |i: usize, j: usize| 2 * ((i % r) * s + (j % s));
    let b = |i: usize, j: usize| a(i, j) + 1;
    let mut rows = vec![Vec::new(); 2 * r * s];
    for i in 0..r {
        for j in 0..s {
            rows[a(i, j)] = vec![b(i, j), b(i, j + s - 1), b(i + r - 1, j)];
            rows[b(i, j)] = vec![a(i, j), a(i, j + 1), a(i + 1, j)];
        }
    }
    let m = FlagSystem::from_rotation_system(&RotationSystem::from_simple(rows)?)?;
    let rep = m.is_polyhedral();
    if !rep.polyhedral {
        return Err(FamilyError::HexTorusDegenerate(
            r,
            s,
            format!("{}", rep.violation.unwrap()),
        ));
    }
    let summary = m.summary()?;
    debug_assert!(summary.face_sizes.iter().all(|&k| k == 6));
    debug_assert_eq!(summary.genus, 1);
    Ok(m)
}

/// The genus-g map on 4g vertices `A_0..A_{2g-1}, B_0..B_{2g-1}` whose
/// truncation has twice as many automorphisms. All vertices have degree 6;
/// the face profile is two faces of size 2g, 2g quadrangles and 4g triangles.
pub fn h_family(g: usize) -> Result<FlagSystem, FamilyError> {
    if g < 2 {
        return Err(FamilyError::HFamilyGenus(g));
    }
    let n = 2 * g;
    let a = |i: usize| i % n;
    let b = |i: usize| n + i % n;
    let mut rows = Vec::with_capacity(2 * n);
    for i in 0..n {
        rows.push(vec![
            a(i + 1),
            a(i + n - 1),
            b(i),
            b(i + g),
            b(i + g + 1),
            b(i + 1),
        ]);
    }
    for i in 0..n {
        rows.push(vec![
            b(i + n - 1),
            b(i + 1),
            a(i + g),
            a(i),
            a(i + n - 1),
            a(i + g + n - 1),
        ]);
    }
    let m = FlagSystem::from_rotation_system(&RotationSystem::from_simple(rows)?)?;
    let s = m.summary()?;
    let mut expect = vec![2 * g, 2 * g];
    expect.extend(std::iter::repeat(4).take(2 * g));
    expect.extend(std::iter::repeat(3).take(4 * g));
    if s.genus != g || s.face_sizes != expect {
        return Err(FamilyError::FixtureAssertion(
            "h_family",
            format!("unexpected summary {s}"),
        ));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn platonic_counts() {
        let cases = [
            (PlatonicSolid::Tetrahedron, (4, 6, 4)),
            (PlatonicSolid::Cube, (8, 12, 6)),
            (PlatonicSolid::Octahedron, (6, 12, 8)),
            (PlatonicSolid::Dodecahedron, (20, 30, 12)),
            (PlatonicSolid::Icosahedron, (12, 30, 20)),
        ];
        for (p, (v, e, f)) in cases {
            let s = platonic(p).summary().unwrap();
            assert_eq!((s.vertex_count, s.edge_count, s.face_count), (v, e, f), "{p:?}");
            assert_eq!(s.genus, 0, "{p:?}");
            assert!(platonic(p).is_polyhedral().polyhedral, "{p:?}");
        }
    }

    #[test]
    fn hex_torus_is_cubic_hexagonal() {
        let m = hex_torus(3, 3).unwrap();
        let s = m.summary().unwrap();
        assert_eq!((s.vertex_count, s.edge_count, s.face_count), (18, 27, 9));
        assert!(s.face_sizes.iter().all(|&k| k == 6));
        assert!(s.vertex_degrees.iter().all(|&d| d == 3));
        assert_eq!(s.genus, 1);
    }

    #[test]
    fn hex_torus_rejects_degenerate() {
        assert!(hex_torus(1, 4).is_err());
        // 2x2 builds a simple map but fails polyhedrality
        assert!(hex_torus(2, 2).is_err());
    }

    #[test]
    fn h2_matches_known_counts() {
        let m = h_family(2).unwrap();
        let s = m.summary().unwrap();
        assert_eq!(
            (s.vertex_count, s.edge_count, s.face_count, s.genus),
            (8, 24, 14, 2)
        );
        assert!(s.vertex_degrees.iter().all(|&d| d == 6));
    }

    #[test]
    fn h_family_rejects_small_genus() {
        assert!(h_family(1).is_err());
    }
}
