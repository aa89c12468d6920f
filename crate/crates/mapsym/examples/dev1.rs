use mapsym::enumerate::{enumerate_c3_operations, dual_orbits};
use mapsym::builtin::builtin;
use mapsym::families::{self, PlatonicSolid};
use mapsym::patch::TriAdj;

fn main() {
    let c3 = enumerate_c3_operations(6);
    let orbits = dual_orbits(&c3);
    let known: Vec<(&str, _)> = vec![
        ("o6b", builtin("o6b").unwrap()),
        ("bevel", builtin("bevel").unwrap()),
        ("o6e", builtin("o6e").unwrap()),
        ("quinto", builtin("quinto").unwrap()),
    ];
    let tetra = families::platonic(PlatonicSolid::Tetrahedron);
    let dodeca = families::platonic(PlatonicSolid::Dodecahedron);
    for orbit in &orbits {
        let named = orbit.iter().any(|&i| known.iter().any(|(_, q)| c3[i].isomorphic(q).is_some()));
        if named { continue; }
        println!("=== unnamed orbit: members {:?}", orbit);
        for &i in orbit {
            let p = &c3[i];
            let applied = p.apply(&dodeca).unwrap();
            let s = applied.map.summary().unwrap();
            // v2-class face sizes and whether v0-class vertices lie only in quadrangles
            let faces = applied.map.face_orbits();
            let verts = applied.map.vertex_orbits();
            let v2_vertex = p.specials()[2];
            let v0_vertex = p.specials()[0];
            let mut v2_sizes = std::collections::BTreeSet::new();
            for fo in 0..faces.count {
                if applied.classes.face[fo] == v2_vertex {
                    v2_sizes.insert(faces.sizes[fo] / 2);
                }
            }
            // face sizes that v0-class vertices are incident to
            let mut v0_face_sizes = std::collections::BTreeSet::new();
            for fl in 0..applied.map.flag_count() {
                let vo = verts.id[fl];
                if applied.classes.vertex[vo] == v0_vertex {
                    v0_face_sizes.insert(faces.sizes[faces.id[fl]] / 2);
                }
            }
            println!("  member {i}: degrees {:?} v2-class-face-sizes {:?} v0-class-in-face-sizes {:?}",
                     dedup(&s.vertex_degrees), v2_sizes, v0_face_sizes);
        }
    }
    // print complexes of all members of unnamed orbits for hardcoding
    for orbit in &orbits {
        let named = orbit.iter().any(|&i| known.iter().any(|(_, q)| c3[i].isomorphic(q).is_some()));
        if named { continue; }
        for &i in orbit {
            let p = &c3[i];
            println!("--- member {i} complex:");
            let adj: Vec<[Option<usize>; 3]> = p.triangle_adjacency().iter().map(|row| {
                [0, 1, 2].map(|c| match row[c] { TriAdj::Inner(t) => Some(t), TriAdj::Outer { .. } => None })
            }).collect();
            println!("adj: {adj:?}");
            // specials as corner refs
            let spec = p.specials();
            let tris = p.triangles();
            let colors = p.colors();
            let refs: Vec<(usize, usize)> = (0..3).map(|i| {
                let v = spec[i];
                let c = colors[v] as usize;
                let t = tris.iter().position(|t| t[c] == v).unwrap();
                (t, c)
            }).collect();
            println!("specials: {refs:?}");
        }
    }
}

fn dedup(v: &[usize]) -> Vec<usize> {
    let mut out = v.to_vec();
    out.dedup();
    out
}
