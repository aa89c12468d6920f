//! Local symmetry-preserving operations: validation, application to maps,
//! composition, and the dual conjugates.
//!
//! An operation is a 2-connected plane map with a proper 3-colouring, a
//! marked outer face and special vertices v0, v1, v2, every inner face a
//! triangle, and the degree conditions: inner colour-1 vertices have degree
//! 4, outer non-special colour-1 vertices degree 3, c(v0) and c(v2) are not
//! 1, and a colour-1 v1 has degree 2. Applying an operation glues a copy of
//! the patch (mirrored according to orientation) into every chamber of the
//! barycentric subdivision of the map.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::complex::{AssembleError, CornerRef, PatchComplex, RawPatch};
use crate::flagmap::{FlagSystem, MapError, RotationSystem};

#[derive(Debug, Error)]
pub enum PatchError {
    #[error("patch failed validation: {0}")]
    Invalid(ValidationReport),
    #[error("map is not connected or malformed: {0}")]
    BadMap(#[from] MapError),
    #[error("assembly failed: {0}")]
    Assemble(#[from] AssembleError),
    #[error("unknown builtin operation {0:?}")]
    UnknownBuiltin(String),
}

/// One violated validity clause, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LspViolation {
    NotConnected,
    /// the rotation system does not describe a plane map
    NotPlane { euler: i64 },
    /// the declared outer walk is not a face of the embedding
    OuterFaceNotFound,
    NotTwoConnected { cut_vertex: usize },
    BadColor { vertex: usize },
    SameColorEdge { u: usize, v: usize },
    InnerFaceNotTriangle { size: usize },
    /// inner colour-1 vertices must have degree 4
    InnerColor1Degree { vertex: usize, degree: usize },
    /// outer non-special colour-1 vertices must have degree 3
    OuterColor1Degree { vertex: usize, degree: usize },
    SpecialsNotDistinct,
    SpecialNotOnOuterFace { which: usize },
    /// c(v0) and c(v2) must not be 1
    SpecialColor1 { which: usize },
    /// a colour-1 v1 must have degree 2
    V1Degree { degree: usize },
}

impl fmt::Display for LspViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LspViolation::*;
        match self {
            NotConnected => write!(f, "patch is not connected"),
            NotPlane { euler } => write!(f, "not a plane map (Euler characteristic {euler})"),
            OuterFaceNotFound => write!(f, "declared outer walk is not a face"),
            NotTwoConnected { cut_vertex } => write!(f, "vertex {cut_vertex} is a cut vertex"),
            BadColor { vertex } => write!(f, "vertex {vertex} has colour outside 0..2"),
            SameColorEdge { u, v } => write!(f, "edge {u}-{v} joins vertices of the same colour"),
            InnerFaceNotTriangle { size } => write!(f, "inner face of size {size}"),
            InnerColor1Degree { vertex, degree } => {
                write!(f, "inner colour-1 vertex {vertex} has degree {degree}, want 4")
            }
            OuterColor1Degree { vertex, degree } => {
                write!(f, "outer colour-1 vertex {vertex} has degree {degree}, want 3")
            }
            SpecialsNotDistinct => write!(f, "special vertices are not distinct"),
            SpecialNotOnOuterFace { which } => write!(f, "v{which} is not on the outer face"),
            SpecialColor1 { which } => write!(f, "v{which} has colour 1"),
            V1Degree { degree } => write!(f, "colour-1 v1 has degree {degree}, want 2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<LspViolation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Adjacency of an inner triangle across one of its edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriAdj {
    Inner(usize),
    /// boundary edge: gluing crosses `sigma_glue` of the host map
    Outer { glue: usize },
}

/// A validated lsp-operation.
#[derive(Clone, Debug)]
pub struct OperationPatch {
    raw: RawPatch,
    /// inner triangles; entry c is the vertex at the colour-c corner
    tris: Vec<[usize; 3]>,
    /// per triangle, per colour slot
    adj: Vec<[TriAdj; 3]>,
    /// side paths S01, S02, S12 as vertex sequences (S01 runs v0..v1, etc.)
    sides: [Vec<usize>; 3],
}

/// The class map recording which patch element every piece of an applied
/// map is a copy of.
#[derive(Clone, Debug)]
pub struct ClassLabeling {
    /// per flag of the result: the patch triangle it copies
    pub chamber: Vec<usize>,
    /// per vertex of the result: the patch vertex (colour 0) it copies
    pub vertex: Vec<usize>,
    /// per edge of the result: the patch vertex (colour 1) it copies
    pub edge: Vec<usize>,
    /// per face of the result: the patch vertex (colour 2) it copies
    pub face: Vec<usize>,
}

/// Result of applying an operation to a map.
#[derive(Clone, Debug)]
pub struct AppliedMap {
    pub map: FlagSystem,
    pub classes: ClassLabeling,
}

const SIDE_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn side_index(a: usize, b: usize) -> usize {
    let (lo, hi) = (a.min(b), a.max(b));
    SIDE_PAIRS
        .iter()
        .position(|&(x, y)| (x, y) == (lo, hi))
        .unwrap()
}

impl OperationPatch {
    /// Validates raw patch data against the lsp-operation conditions,
    /// collecting every violated clause rather than failing fast.
    pub fn validate(raw: RawPatch) -> Result<OperationPatch, ValidationReport> {
        let mut violations = Vec::new();
        let n = raw.colors.len();
        let rot = &raw.rotation;
        if rot.vertex_count() != n {
            violations.push(LspViolation::BadColor { vertex: n });
            return Err(ValidationReport { violations });
        }
        for (v, &c) in raw.colors.iter().enumerate() {
            if c > 2 {
                violations.push(LspViolation::BadColor { vertex: v });
            }
        }
        if !violations.is_empty() {
            return Err(ValidationReport { violations });
        }

        // structural layer: connected plane map with the declared outer face
        let flags = match FlagSystem::from_rotation_system(rot) {
            Ok(m) => m,
            Err(_) => {
                violations.push(LspViolation::NotConnected);
                return Err(ValidationReport { violations });
            }
        };
        let summary = match flags.summary() {
            Ok(s) => s,
            Err(_) => {
                violations.push(LspViolation::NotPlane { euler: -1 });
                return Err(ValidationReport { violations });
            }
        };
        if summary.genus != 0 {
            violations.push(LspViolation::NotPlane {
                euler: 2 - 2 * summary.genus as i64,
            });
            return Err(ValidationReport { violations });
        }

        // trace the faces at dart level
        let (faces, face_of_dart) = trace_faces(rot);
        let outer_face = match find_outer_face(&faces, &raw.outer) {
            Some(i) => i,
            None => {
                violations.push(LspViolation::OuterFaceNotFound);
                return Err(ValidationReport { violations });
            }
        };

        // 2-connectivity by exhaustive vertex removal
        if n >= 3 {
            let mut adj_sets: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (v, row) in rot.neighbors().iter().enumerate() {
                for &(u, _) in row {
                    adj_sets[v].push(u);
                }
            }
            for cut in 0..n {
                let start = (0..n).find(|&v| v != cut).unwrap();
                let mut seen = vec![false; n];
                seen[cut] = true;
                seen[start] = true;
                let mut stack = vec![start];
                let mut count = 1;
                while let Some(v) = stack.pop() {
                    for &u in &adj_sets[v] {
                        if !seen[u] {
                            seen[u] = true;
                            count += 1;
                            stack.push(u);
                        }
                    }
                }
                if count != n - 1 {
                    violations.push(LspViolation::NotTwoConnected { cut_vertex: cut });
                    break;
                }
            }
        }

        // colour conditions on edges
        {
            let mut reported = std::collections::HashSet::new();
            for (v, row) in rot.neighbors().iter().enumerate() {
                for &(u, _) in row {
                    if raw.colors[v] == raw.colors[u] {
                        let key = (v.min(u), v.max(u));
                        if reported.insert(key) {
                            violations.push(LspViolation::SameColorEdge { u: key.0, v: key.1 });
                        }
                    }
                }
            }
        }

        // inner faces must be triangles
        for (i, face) in faces.iter().enumerate() {
            if i != outer_face && face.vertices.len() != 3 {
                violations.push(LspViolation::InnerFaceNotTriangle {
                    size: face.vertices.len(),
                });
            }
        }

        // specials: distinct and on the outer face
        let [v0, v1, v2] = raw.specials;
        if v0 == v1 || v1 == v2 || v0 == v2 {
            violations.push(LspViolation::SpecialsNotDistinct);
        }
        let outer_vertices = &faces[outer_face].vertices;
        for (which, &s) in raw.specials.iter().enumerate() {
            if !outer_vertices.contains(&s) {
                violations.push(LspViolation::SpecialNotOnOuterFace { which });
            }
        }
        if raw.colors[v0] == 1 {
            violations.push(LspViolation::SpecialColor1 { which: 0 });
        }
        if raw.colors[v2] == 1 {
            violations.push(LspViolation::SpecialColor1 { which: 2 });
        }
        if raw.colors[v1] == 1 && rot.degree(v1) != 2 {
            violations.push(LspViolation::V1Degree {
                degree: rot.degree(v1),
            });
        }

        // degree conditions for colour-1 vertices
        for v in 0..n {
            if raw.colors[v] != 1 || raw.specials.contains(&v) {
                continue;
            }
            let deg = rot.degree(v);
            if outer_vertices.contains(&v) {
                if deg != 3 {
                    violations.push(LspViolation::OuterColor1Degree { vertex: v, degree: deg });
                }
            } else if deg != 4 {
                violations.push(LspViolation::InnerColor1Degree { vertex: v, degree: deg });
            }
        }

        if !violations.is_empty() {
            return Err(ValidationReport { violations });
        }

        // derived data: triangles by colour corner, adjacency, sides
        let outer_walk = faces[outer_face].vertices.clone();
        let sides = derive_sides(&outer_walk, raw.specials);

        // boundary edge -> side index
        let mut boundary_side: HashMap<(usize, usize), usize> = HashMap::new();
        for (s, path) in sides.iter().enumerate() {
            for w in path.windows(2) {
                let key = (w[0].min(w[1]), w[0].max(w[1]));
                boundary_side.insert(key, s);
            }
        }

        let mut tri_ids = Vec::new();
        let mut tri_index = vec![usize::MAX; faces.len()];
        for (i, _) in faces.iter().enumerate() {
            if i != outer_face {
                tri_index[i] = tri_ids.len();
                tri_ids.push(i);
            }
        }
        let darts = rot.darts().expect("validated rotation system");
        let mut tris = Vec::with_capacity(tri_ids.len());
        let mut adj = Vec::with_capacity(tri_ids.len());
        for &fi in &tri_ids {
            let face = &faces[fi];
            let mut corners = [usize::MAX; 3];
            for &v in &face.vertices {
                corners[raw.colors[v] as usize] = v;
            }
            // a validated triangle has one corner per colour
            debug_assert!(corners.iter().all(|&v| v != usize::MAX));
            let mut row = [TriAdj::Inner(usize::MAX); 3];
            for slot in 0..3 {
                let missing = corners[slot];
                // the dart of this face not incident to the colour-`slot`
                // corner runs along the opposite edge
                let j = (0..3)
                    .find(|&j| {
                        face.vertices[j] != missing && face.vertices[(j + 1) % 3] != missing
                    })
                    .expect("triangle has an edge opposite each corner");
                let dart = face.darts[j];
                let neighbor = face_of_dart[darts.theta[dart]];
                if neighbor == outer_face {
                    let (u, v) = (face.vertices[j], face.vertices[(j + 1) % 3]);
                    let key = (u.min(v), u.max(v));
                    let side = *boundary_side.get(&key).unwrap_or(&usize::MAX);
                    if side == usize::MAX {
                        // boundary edge not on any declared side: corrupt
                        return Err(ValidationReport {
                            violations: vec![LspViolation::OuterFaceNotFound],
                        });
                    }
                    let (i, j) = SIDE_PAIRS[side];
                    row[slot] = TriAdj::Outer { glue: 3 - i - j };
                } else {
                    row[slot] = TriAdj::Inner(tri_index[neighbor]);
                }
            }
            tris.push(corners);
            adj.push(row);
        }

        let raw = RawPatch {
            outer: outer_walk,
            ..raw
        };
        Ok(OperationPatch {
            raw,
            tris,
            adj,
            sides,
        })
    }

    /// The inflation factor: the number of chambers of the patch, equal to
    /// the ratio of edge counts after and before an application.
    pub fn inflation_factor(&self) -> usize {
        self.tris.len()
    }

    pub fn raw(&self) -> &RawPatch {
        &self.raw
    }

    pub fn colors(&self) -> &[u8] {
        &self.raw.colors
    }

    pub fn specials(&self) -> [usize; 3] {
        self.raw.specials
    }

    pub fn sides(&self) -> &[Vec<usize>; 3] {
        &self.sides
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.tris
    }

    pub fn triangle_adjacency(&self) -> &[[TriAdj; 3]] {
        &self.adj
    }

    /// Glues a copy of the patch into every chamber of the barycentric
    /// subdivision of `m`. The flags of the result are pairs
    /// (flag of m, patch triangle); crossing an inner patch edge stays in the
    /// copy, crossing a boundary edge on side S_ij moves to the copy at
    /// sigma_k(flag) with {i,j,k} = {0,1,2}.
    pub fn apply(&self, m: &FlagSystem) -> Result<AppliedMap, PatchError> {
        let k = self.inflation_factor();
        let n = m.flag_count();
        let total = n * k;
        let mut sigma = [vec![0usize; total], vec![0usize; total], vec![0usize; total]];
        for f in 0..n {
            for t in 0..k {
                let id = f * k + t;
                for c in 0..3 {
                    sigma[c][id] = match self.adj[t][c] {
                        TriAdj::Inner(t2) => f * k + t2,
                        TriAdj::Outer { glue } => m.sigma(glue, f) * k + t,
                    };
                }
            }
        }
        let [s0, s1, s2] = sigma;
        let map = FlagSystem::new(s0, s1, s2, false)?;

        let chamber: Vec<usize> = (0..total).map(|id| id % k).collect();
        let vertices = map.vertex_orbits();
        let edges = map.edge_orbits();
        let faces = map.face_orbits();
        let vertex = vertices.rep.iter().map(|&r| self.tris[r % k][0]).collect();
        let edge = edges.rep.iter().map(|&r| self.tris[r % k][1]).collect();
        let face = faces.rep.iter().map(|&r| self.tris[r % k][2]).collect();

        Ok(AppliedMap {
            map,
            classes: ClassLabeling {
                chamber,
                vertex,
                edge,
                face,
            },
        })
    }

    /// The composition self∘other: the operation transforming `P` into
    /// `self(other(P))`, built by gluing a copy of `self` into every chamber
    /// of `other`.
    pub fn compose(&self, other: &OperationPatch) -> Result<OperationPatch, PatchError> {
        let k = self.inflation_factor();
        let kh = other.inflation_factor();
        let mut adj = Vec::with_capacity(k * kh);
        for t2 in 0..kh {
            for t in 0..k {
                let mut row = [None; 3];
                for c in 0..3 {
                    row[c] = match self.adj[t][c] {
                        TriAdj::Inner(t3) => Some(t2 * k + t3),
                        TriAdj::Outer { glue } => match other.adj[t2][glue] {
                            TriAdj::Inner(t4) => Some(t4 * k + t),
                            TriAdj::Outer { .. } => None,
                        },
                    };
                }
                adj.push(row);
            }
        }
        let cx = PatchComplex { adj };
        let specials = [0, 1, 2].map(|i| self.composed_special(other, i));
        let raw = cx.assemble(specials)?;
        OperationPatch::validate(raw).map_err(PatchError::Invalid)
    }

    /// Corner of the composed complex carrying special vertex i.
    fn composed_special(&self, other: &OperationPatch, i: usize) -> CornerRef {
        let host_vertex = other.raw.specials[i];
        let host_color = other.raw.colors[host_vertex] as usize;
        let t2 = other
            .tris
            .iter()
            .position(|t| t[host_color] == host_vertex)
            .expect("special vertex lies in some chamber");
        let inner_vertex = self.raw.specials[host_color];
        let inner_color = self.raw.colors[inner_vertex] as usize;
        let t = self
            .tris
            .iter()
            .position(|t| t[inner_color] == inner_vertex)
            .expect("special vertex lies in some chamber");
        (t2 * self.inflation_factor() + t, inner_color)
    }

    /// The conjugate dual∘self: every patch colour 0 becomes 2 and vice
    /// versa; the special vertices stay in place.
    pub fn post_dual(&self) -> OperationPatch {
        let mut raw = self.raw.clone();
        for c in &mut raw.colors {
            if *c != 1 {
                *c = 2 - *c;
            }
        }
        OperationPatch::validate(raw).expect("colour swap of a valid patch is valid")
    }

    /// The conjugate self∘dual: the roles of v0 and v2 swap.
    pub fn pre_dual(&self) -> OperationPatch {
        let mut raw = self.raw.clone();
        raw.specials = [raw.specials[2], raw.specials[1], raw.specials[0]];
        OperationPatch::validate(raw).expect("special swap of a valid patch is valid")
    }

    /// Whether the operation preserves polyhedrality: applies the patch to
    /// the tetrahedron and checks the result, which decides the question for
    /// all polyhedral maps.
    pub fn is_c3(&self) -> bool {
        let tetra = crate::families::platonic(crate::families::PlatonicSolid::Tetrahedron);
        match self.apply(&tetra) {
            Ok(applied) => applied.map.is_polyhedral().polyhedral,
            Err(_) => false,
        }
    }

    /// Colour-preserving patch isomorphism respecting the special vertices.
    /// The witness maps vertices of `self` to vertices of `other`.
    pub fn isomorphic(&self, other: &OperationPatch) -> Option<Vec<usize>> {
        patches_isomorphic(self, other)
    }

    /// Relabels the patch by a breadth-first search from v2 with
    /// rotation-order tie-breaking, so equal patches emit identical text.
    pub fn canonical_raw(&self) -> RawPatch {
        canonical_relabel(&self.raw)
    }
}

struct TracedFace {
    /// vertex cycle in walk order
    vertices: Vec<usize>,
    /// dart cycle (dart ids) in walk order
    darts: Vec<usize>,
}

/// Traces the faces of a rotation system: the successor of dart d on its
/// face is the rotation predecessor of the reversed dart. Also returns the
/// face id of every dart.
fn trace_faces(rot: &RotationSystem) -> (Vec<TracedFace>, Vec<usize>) {
    let darts = rot.darts().expect("validated rotation system");
    let total = darts.vertex.len();
    let mut face_of = vec![usize::MAX; total];
    let mut faces = Vec::new();
    for start in 0..total {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut verts = Vec::new();
        let mut ds = Vec::new();
        let mut d = start;
        loop {
            face_of[d] = id;
            verts.push(darts.vertex[d]);
            ds.push(d);
            d = darts.prev[darts.theta[d]];
            if d == start {
                break;
            }
        }
        faces.push(TracedFace {
            vertices: verts,
            darts: ds,
        });
    }
    (faces, face_of)
}

/// Finds the traced face matching the declared outer walk, as a cyclic
/// vertex sequence up to rotation and direction.
fn find_outer_face(faces: &[TracedFace], outer: &[usize]) -> Option<usize> {
    let n = outer.len();
    for (i, face) in faces.iter().enumerate() {
        if face.vertices.len() != n {
            continue;
        }
        for shift in 0..n {
            if (0..n).all(|j| face.vertices[(shift + j) % n] == outer[j])
                || (0..n).all(|j| face.vertices[(shift + n - j) % n] == outer[j])
            {
                return Some(i);
            }
        }
    }
    None
}

/// Splits the outer cycle at the special vertices into the three side arcs,
/// returned as vertex paths S01 (v0..v1), S02 (v0..v2), S12 (v1..v2).
fn derive_sides(outer: &[usize], specials: [usize; 3]) -> [Vec<usize>; 3] {
    let n = outer.len();
    let pos = |v: usize| outer.iter().position(|&x| x == v).unwrap();
    let p = [pos(specials[0]), pos(specials[1]), pos(specials[2])];
    // walk from one special to the next in cycle order, both directions
    let arc = |from: usize, to: usize, avoid: usize| -> Vec<usize> {
        // forward arc
        let mut fwd = vec![outer[from]];
        let mut i = from;
        let mut hits_avoid = false;
        while i != to {
            i = (i + 1) % n;
            if i == avoid {
                hits_avoid = true;
            }
            fwd.push(outer[i]);
        }
        if !hits_avoid && to != avoid {
            return fwd;
        }
        let mut bwd = vec![outer[from]];
        let mut i = from;
        while i != to {
            i = (i + n - 1) % n;
            bwd.push(outer[i]);
        }
        bwd
    };
    [
        arc(p[0], p[1], p[2]),
        arc(p[0], p[2], p[1]),
        arc(p[1], p[2], p[0]),
    ]
}

/// Anchored colour- and special-preserving isomorphism of plane patches.
fn patches_isomorphic(a: &OperationPatch, b: &OperationPatch) -> Option<Vec<usize>> {
    let ra = &a.raw;
    let rb = &b.raw;
    if ra.colors.len() != rb.colors.len() {
        return None;
    }
    let da = ra.rotation.darts().ok()?;
    let db = rb.rotation.darts().ok()?;
    if da.vertex.len() != db.vertex.len() {
        return None;
    }
    let total = da.vertex.len();
    let start_a = da.start[ra.specials[0]];
    let deg0 = ra.rotation.degree(ra.specials[0]);
    if deg0 != rb.rotation.degree(rb.specials[0]) {
        return None;
    }
    for pos in 0..deg0 {
        let start_b = db.start[rb.specials[0]] + pos;
        for flip in [false, true] {
            if let Some(vm) = try_dart_map(ra, &da, rb, &db, start_a, start_b, flip, total) {
                return Some(vm);
            }
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn try_dart_map(
    ra: &RawPatch,
    da: &crate::flagmap::Darts,
    rb: &RawPatch,
    db: &crate::flagmap::Darts,
    start_a: usize,
    start_b: usize,
    flip: bool,
    total: usize,
) -> Option<Vec<usize>> {
    let mut img = vec![usize::MAX; total];
    img[start_a] = start_b;
    let mut queue = std::collections::VecDeque::from([start_a]);
    let mut set = |img: &mut Vec<usize>, queue: &mut std::collections::VecDeque<usize>, x: usize, y: usize| -> bool {
        if img[x] == usize::MAX {
            img[x] = y;
            queue.push_back(x);
            true
        } else {
            img[x] == y
        }
    };
    while let Some(d) = queue.pop_front() {
        let e = img[d];
        if !set(&mut img, &mut queue, da.theta[d], db.theta[e]) {
            return None;
        }
        let next_b = if flip { db.prev[e] } else { db.next[e] };
        if !set(&mut img, &mut queue, da.next[d], next_b) {
            return None;
        }
    }
    if img.iter().any(|&x| x == usize::MAX) {
        return None;
    }
    // vertex map and checks: colours and specials correspond
    let na = ra.colors.len();
    let mut vmap = vec![usize::MAX; na];
    for d in 0..total {
        let va = da.vertex[d];
        let vb = db.vertex[img[d]];
        if vmap[va] == usize::MAX {
            vmap[va] = vb;
        } else if vmap[va] != vb {
            return None;
        }
    }
    for v in 0..na {
        if ra.colors[v] != rb.colors[vmap[v]] {
            return None;
        }
    }
    for i in 0..3 {
        if vmap[ra.specials[i]] != rb.specials[i] {
            return None;
        }
    }
    Some(vmap)
}

/// BFS relabeling from v2; neighbor order follows each vertex's rotation
/// list starting at the dart towards its search parent.
fn canonical_relabel(raw: &RawPatch) -> RawPatch {
    let n = raw.colors.len();
    let rot = raw.rotation.neighbors();
    let mut order = Vec::with_capacity(n);
    let mut new_id = vec![usize::MAX; n];
    let mut entry = vec![0usize; n]; // rotation index to start each list at
    let v2 = raw.specials[2];
    new_id[v2] = 0;
    order.push(v2);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let deg = rot[v].len();
        for i in 0..deg {
            let idx = (entry[v] + i) % deg;
            let (u, _) = rot[v][idx];
            if new_id[u] == usize::MAX {
                new_id[u] = order.len();
                // start u's list at its dart back towards v
                let back = rot[u]
                    .iter()
                    .position(|&(w, _)| w == v)
                    .expect("matching dart");
                entry[u] = back;
                order.push(u);
            }
        }
    }
    debug_assert_eq!(order.len(), n);

    let mut colors = vec![0u8; n];
    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (new_v, &old_v) in order.iter().enumerate() {
        colors[new_v] = raw.colors[old_v];
        let deg = rot[old_v].len();
        lists[new_v] = (0..deg)
            .map(|i| new_id[rot[old_v][(entry[old_v] + i) % deg].0])
            .collect();
    }
    let rotation = RotationSystem::from_simple(lists).expect("relabeled rotation system");
    let outer: Vec<usize> = raw.outer.iter().map(|&v| new_id[v]).collect();
    // rotate the outer walk to start at the new v0, lowest-label direction
    let specials = raw.specials.map(|v| new_id[v]);
    let outer = rotate_cycle_to(&outer, specials[0]);
    RawPatch {
        colors,
        rotation,
        outer,
        specials,
    }
}

fn rotate_cycle_to(cycle: &[usize], first: usize) -> Vec<usize> {
    let n = cycle.len();
    let p = cycle.iter().position(|&v| v == first).unwrap_or(0);
    let fwd: Vec<usize> = (0..n).map(|i| cycle[(p + i) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|i| cycle[(p + n - i) % n]).collect();
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{self, Mode};
    use crate::builtin::builtin;
    use crate::families::{self, PlatonicSolid};

    #[test]
    fn identity_application_is_exact() {
        let id = builtin("identity").unwrap();
        for m in [
            families::platonic(PlatonicSolid::Cube),
            families::h_family(2).unwrap(),
        ] {
            let out = id.apply(&m).unwrap();
            assert_eq!(out.map, m);
        }
    }

    #[test]
    fn dual_application_is_exact_dual() {
        let d = builtin("dual").unwrap();
        for m in [
            families::platonic(PlatonicSolid::Cube),
            families::square_torus(3).unwrap(),
        ] {
            let out = d.apply(&m).unwrap();
            assert_eq!(out.map, m.dual());
        }
    }

    #[test]
    fn ambo_tetrahedron_is_octahedron() {
        let ambo = builtin("ambo").unwrap();
        let out = ambo.apply(&families::platonic(PlatonicSolid::Tetrahedron)).unwrap();
        let oct = families::platonic(PlatonicSolid::Octahedron);
        assert!(analysis::are_isomorphic(&out.map, &oct, Mode::ColorPreserving).is_some());
    }

    #[test]
    fn truncate_counts() {
        let t = builtin("truncate").unwrap();
        assert_eq!(t.inflation_factor(), 3);
        let out = t.apply(&families::platonic(PlatonicSolid::Tetrahedron)).unwrap();
        let s = out.map.summary().unwrap();
        assert_eq!(
            (s.vertex_count, s.edge_count, s.face_count, s.genus),
            (12, 18, 8, 0)
        );
        let h2 = families::h_family(2).unwrap();
        let s2 = t.apply(&h2).unwrap().map.summary().unwrap();
        assert_eq!(s2.edge_count, 72);
        assert_eq!(s2.genus, 2);
    }

    #[test]
    fn inflation_factors_of_builtins() {
        for (name, k) in [
            ("identity", 1),
            ("dual", 1),
            ("ambo", 2),
            ("join", 2),
            ("truncate", 3),
            ("zip", 3),
            ("expand", 4),
            ("chamfer", 4),
            ("loft", 5),
            ("o6a", 6),
            ("o6b", 6),
            ("bevel", 6),
            ("o6d", 6),
            ("o6e", 6),
            ("quinto", 6),
        ] {
            assert_eq!(builtin(name).unwrap().inflation_factor(), k, "{name}");
        }
    }

    #[test]
    fn double_dual_conjugates_are_identities() {
        for name in ["ambo", "truncate", "loft", "quinto"] {
            let p = builtin(name).unwrap();
            assert!(p.post_dual().post_dual().isomorphic(&p).is_some(), "{name}");
            assert!(p.pre_dual().pre_dual().isomorphic(&p).is_some(), "{name}");
        }
        let dual = builtin("dual").unwrap();
        let id = builtin("identity").unwrap();
        assert!(dual.compose(&dual).unwrap().isomorphic(&id).is_some());
    }

    #[test]
    fn pre_dual_agrees_with_composition() {
        let dual = builtin("dual").unwrap();
        for name in ["ambo", "truncate", "quinto", "loft"] {
            let p = builtin(name).unwrap();
            let via_compose = p.compose(&dual).unwrap();
            assert!(p.pre_dual().isomorphic(&via_compose).is_some(), "{name}");
        }
    }

    #[test]
    fn composition_is_application_composition() {
        let pairs = [("ambo", "truncate"), ("truncate", "dual"), ("ambo", "ambo")];
        let tetra = families::platonic(PlatonicSolid::Tetrahedron);
        let torus = families::square_torus(3).unwrap();
        for (a, b) in pairs {
            let pa = builtin(a).unwrap();
            let pb = builtin(b).unwrap();
            let composed = pa.compose(&pb).unwrap();
            assert_eq!(
                composed.inflation_factor(),
                pa.inflation_factor() * pb.inflation_factor()
            );
            for m in [&tetra, &torus] {
                let lhs = composed.apply(m).unwrap().map;
                let rhs = pa.apply(&pb.apply(m).unwrap().map).unwrap().map;
                assert!(
                    analysis::are_isomorphic(&lhs, &rhs, Mode::ColorPreserving).is_some(),
                    "{a}∘{b}"
                );
            }
        }
    }

    #[test]
    fn o6b_is_truncate_dual_ambo() {
        let t = builtin("truncate").unwrap();
        let d = builtin("dual").unwrap();
        let a = builtin("ambo").unwrap();
        let tda = t.compose(&d.compose(&a).unwrap()).unwrap();
        assert!(builtin("o6b").unwrap().isomorphic(&tda).is_some());
    }

    #[test]
    fn class_sizes_per_chamber() {
        let p = builtin("truncate").unwrap();
        let m = families::platonic(PlatonicSolid::Cube);
        let out = p.apply(&m).unwrap();
        for t in 0..p.inflation_factor() {
            let count = out.classes.chamber.iter().filter(|&&c| c == t).count();
            assert_eq!(count, m.flag_count());
        }
    }

    #[test]
    fn genus_and_edge_law() {
        let fixtures = [
            families::platonic(PlatonicSolid::Dodecahedron),
            families::h_family(3).unwrap(),
            families::hex_torus(3, 3).unwrap(),
        ];
        for name in ["ambo", "truncate", "loft", "quinto"] {
            let p = builtin(name).unwrap();
            for m in &fixtures {
                let s0 = m.summary().unwrap();
                let out = p.apply(m).unwrap().map;
                let s1 = out.summary().unwrap();
                assert_eq!(s1.genus, s0.genus, "{name}");
                assert_eq!(s1.edge_count, s0.edge_count * p.inflation_factor(), "{name}");
            }
        }
    }

    #[test]
    fn builtin_c3_status() {
        for name in crate::builtin::builtin_names() {
            assert!(builtin(name).unwrap().is_c3(), "{name}");
        }
    }

    #[test]
    fn validation_reports_clause_violations() {
        // recolour one vertex of the truncate patch to break edge colours
        let t = builtin("truncate").unwrap();
        let mut raw = t.raw().clone();
        raw.colors[raw.specials[0]] = 1;
        let err = OperationPatch::validate(raw).unwrap_err();
        assert!(err
            .violations
            .iter()
            .any(|v| matches!(v, LspViolation::SameColorEdge { .. })));
        assert!(err
            .violations
            .iter()
            .any(|v| matches!(v, LspViolation::SpecialColor1 { which: 0 })));
    }

    #[test]
    fn non_c3_operations_exist_and_fail_on_tetrahedron() {
        let all = crate::enumerate::enumerate_operations(3);
        let bad: Vec<_> = all.iter().filter(|p| !p.is_c3()).collect();
        assert!(!bad.is_empty());
        let tetra = families::platonic(PlatonicSolid::Tetrahedron);
        let out = bad[0].apply(&tetra).unwrap().map;
        assert!(!out.is_polyhedral().polyhedral);
    }
}
