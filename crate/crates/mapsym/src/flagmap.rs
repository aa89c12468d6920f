//! Flag-based representation of maps on orientable surfaces.
//!
//! A map (a graph cellularly embedded in a closed orientable surface) is
//! stored as a *flag system*: a set of flags `0..flag_count` together with
//! three fixed-point-free involutions `sigma0`, `sigma1`, `sigma2`. A flag is
//! an incident (vertex, edge, face) triple and `sigma_i` replaces the element
//! of dimension `i`. Vertices, edges and faces are recovered as orbits of the
//! subgroups generated by the two involutions that fix them:
//!
//! * vertices = orbits of ⟨sigma1, sigma2⟩,
//! * edges    = orbits of ⟨sigma0, sigma2⟩ (always of size 4),
//! * faces    = orbits of ⟨sigma0, sigma1⟩.
//!
//! The representation is exact and purely combinatorial; all operations are
//! pure functions on immutable values.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Index of a flag in a [`FlagSystem`].
pub type Flag = usize;

#[derive(Debug, Error)]
pub enum MapError {
    #[error("flag system is empty")]
    Empty,
    #[error("involution arrays have mismatched lengths")]
    LengthMismatch,
    #[error("sigma{dim} is not a fixed-point-free involution at flag {flag}")]
    BadInvolution { dim: usize, flag: Flag },
    #[error("sigma0∘sigma2 is not a fixed-point-free involution at flag {0} (edge orbit degenerate)")]
    BadEdgeOrbit(Flag),
    #[error("flag system is not connected")]
    Disconnected,
    #[error("flag system is not orientable")]
    NonOrientable,
    #[error("Euler characteristic {0} does not match an orientable surface (2-2g)")]
    BadEuler(i64),
    #[error("rotation system: vertex {0} has an empty neighbor list")]
    EmptyVertex(usize),
    #[error("rotation system: dart {pos} of vertex {vertex} has no valid partner")]
    BadMatching { vertex: usize, pos: usize },
    #[error("rotation system is not connected")]
    RotationDisconnected,
    #[error("rotation system: entry {entry} of vertex {vertex} is ambiguous, parallel edges need the v/k form")]
    AmbiguousParallel { vertex: usize, entry: usize },
    #[error("rotation system: vertex index {0} out of range")]
    VertexOutOfRange(usize),
}

/// A map encoded by cyclic neighbor lists.
///
/// `neighbors[v]` is the clockwise cyclic sequence of darts leaving `v`,
/// each entry `(u, k)` meaning "the k-th dart towards `u` counted at the far
/// end" (`k` is 1-based). For simple adjacencies `k` is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    neighbors: Vec<Vec<(usize, usize)>>,
}

/// Dense dart tables derived from a rotation system.
pub(crate) struct Darts {
    /// origin vertex of each dart
    pub vertex: Vec<usize>,
    /// partner dart on the same edge
    pub theta: Vec<usize>,
    /// next dart clockwise around the origin vertex
    pub next: Vec<usize>,
    /// previous dart clockwise around the origin vertex
    pub prev: Vec<usize>,
    /// first dart id of each vertex (darts of a vertex are contiguous)
    pub start: Vec<usize>,
}

impl RotationSystem {
    /// Builds a rotation system, checking that the dart references pair up
    /// into a perfect matching.
    pub fn new(neighbors: Vec<Vec<(usize, usize)>>) -> Result<Self, MapError> {
        let r = RotationSystem { neighbors };
        r.darts()?;
        Ok(r)
    }

    /// Convenience constructor from plain neighbor lists; the i-th parallel
    /// dart towards a neighbor is paired with its i-th dart back.
    pub fn from_simple(neighbors: Vec<Vec<usize>>) -> Result<Self, MapError> {
        let n = neighbors.len();
        let mut lists = Vec::with_capacity(n);
        for row in &neighbors {
            let mut list = Vec::with_capacity(row.len());
            for (i, &u) in row.iter().enumerate() {
                if u >= n {
                    return Err(MapError::VertexOutOfRange(u));
                }
                let occurrence = row[..i].iter().filter(|&&w| w == u).count() + 1;
                list.push((u, occurrence));
            }
            lists.push(list);
        }
        RotationSystem::new(lists)
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn neighbors(&self) -> &[Vec<(usize, usize)>] {
        &self.neighbors
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub(crate) fn darts(&self) -> Result<Darts, MapError> {
        let n = self.neighbors.len();
        if n == 0 {
            return Err(MapError::Empty);
        }
        let mut start = Vec::with_capacity(n + 1);
        let mut total = 0usize;
        for (v, row) in self.neighbors.iter().enumerate() {
            if row.is_empty() {
                return Err(MapError::EmptyVertex(v));
            }
            start.push(total);
            total += row.len();
        }
        start.push(total);

        let mut vertex = vec![0usize; total];
        let mut next = vec![0usize; total];
        let mut prev = vec![0usize; total];
        for v in 0..n {
            let deg = self.neighbors[v].len();
            for i in 0..deg {
                let d = start[v] + i;
                vertex[d] = v;
                next[d] = start[v] + (i + 1) % deg;
                prev[d] = start[v] + (i + deg - 1) % deg;
            }
        }

        let mut theta = vec![usize::MAX; total];
        for v in 0..n {
            for (i, &(u, k)) in self.neighbors[v].iter().enumerate() {
                let d = start[v] + i;
                if u >= n {
                    return Err(MapError::VertexOutOfRange(u));
                }
                // locate the k-th occurrence of v in u's list
                let mut seen = 0usize;
                let mut partner = None;
                for (j, &(w, _)) in self.neighbors[u].iter().enumerate() {
                    if w == v {
                        seen += 1;
                        if seen == k {
                            partner = Some(start[u] + j);
                            break;
                        }
                    }
                }
                let p = partner.ok_or(MapError::BadMatching { vertex: v, pos: i })?;
                if p == d {
                    return Err(MapError::BadMatching { vertex: v, pos: i });
                }
                theta[d] = p;
            }
        }
        // the matching must be an involution
        for d in 0..total {
            let p = theta[d];
            if p == usize::MAX || theta[p] != d {
                let v = vertex[d];
                return Err(MapError::BadMatching {
                    vertex: v,
                    pos: d - start[v],
                });
            }
        }
        Ok(Darts {
            vertex,
            theta,
            next,
            prev,
            start,
        })
    }
}

/// A map as a flag system; the universal internal representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagSystem {
    sigma: [Vec<Flag>; 3],
    colored: bool,
}

/// Orbit partition of the flags under a set of the involutions.
#[derive(Clone, Debug)]
pub struct Orbits {
    /// orbit id of each flag; ids are ordered by smallest contained flag
    pub id: Vec<usize>,
    pub count: usize,
    pub sizes: Vec<usize>,
    /// smallest flag of each orbit
    pub rep: Vec<Flag>,
}

impl Orbits {
    fn compute(sigma: &[Vec<Flag>; 3], gens: &[usize], n: usize) -> Orbits {
        let mut id = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut rep = Vec::new();
        let mut queue = VecDeque::new();
        for f in 0..n {
            if id[f] != usize::MAX {
                continue;
            }
            let o = rep.len();
            rep.push(f);
            sizes.push(0);
            id[f] = o;
            queue.push_back(f);
            while let Some(x) = queue.pop_front() {
                sizes[o] += 1;
                for &g in gens {
                    let y = sigma[g][x];
                    if id[y] == usize::MAX {
                        id[y] = o;
                        queue.push_back(y);
                    }
                }
            }
        }
        Orbits {
            id,
            count: rep.len(),
            sizes,
            rep,
        }
    }
}

/// Derived counts of a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSummary {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub genus: usize,
    /// face sizes, sorted descending
    pub face_sizes: Vec<usize>,
    /// vertex degrees, sorted descending
    pub vertex_degrees: Vec<usize>,
}

impl fmt::Display for MapSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V={} E={} F={} genus={} faces={} degrees={}",
            self.vertex_count,
            self.edge_count,
            self.face_count,
            self.genus,
            multiset(&self.face_sizes),
            multiset(&self.vertex_degrees),
        )
    }
}

fn multiset(sorted: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let v = sorted[i];
        let mut c = 0;
        while i < sorted.len() && sorted[i] == v {
            c += 1;
            i += 1;
        }
        if c == 1 {
            parts.push(format!("{v}"));
        } else {
            parts.push(format!("{v}^{c}"));
        }
    }
    format!("{{{}}}", parts.join(","))
}

/// Why a map failed the polyhedrality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyhedralViolation {
    Loop { edge: usize },
    ParallelEdges { first: usize, second: usize },
    TooFewVertices,
    NotThreeConnected { cut: (usize, usize) },
    NonSimpleFaceWalk { face: usize },
    BadFaceIntersection { faces: (usize, usize), shared_vertices: usize, shared_edges: usize },
}

impl fmt::Display for PolyhedralViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyhedralViolation::Loop { edge } => write!(f, "edge {edge} is a loop"),
            PolyhedralViolation::ParallelEdges { first, second } => {
                write!(f, "edges {first} and {second} are parallel")
            }
            PolyhedralViolation::TooFewVertices => write!(f, "fewer than 4 vertices"),
            PolyhedralViolation::NotThreeConnected { cut } => {
                write!(f, "vertices {} and {} form a 2-cut", cut.0, cut.1)
            }
            PolyhedralViolation::NonSimpleFaceWalk { face } => {
                write!(f, "boundary walk of face {face} is not a simple cycle")
            }
            PolyhedralViolation::BadFaceIntersection {
                faces,
                shared_vertices,
                shared_edges,
            } => write!(
                f,
                "faces {} and {} intersect in {} vertices and {} edges",
                faces.0, faces.1, shared_vertices, shared_edges
            ),
        }
    }
}

/// Result of [`FlagSystem::is_polyhedral`].
#[derive(Clone, Debug)]
pub struct PolyhedralReport {
    pub polyhedral: bool,
    pub violation: Option<PolyhedralViolation>,
}

/// The underlying graph of a map: per-edge endpoints and adjacency lists.
pub(crate) struct UnderlyingGraph {
    pub vertices: Orbits,
    pub edges: Orbits,
    /// endpoints (vertex orbit ids) of each edge orbit
    pub ends: Vec<(usize, usize)>,
    pub adj: Vec<Vec<(usize, usize)>>, // (neighbor vertex, edge id)
}

impl FlagSystem {
    pub fn new(
        sigma0: Vec<Flag>,
        sigma1: Vec<Flag>,
        sigma2: Vec<Flag>,
        colored: bool,
    ) -> Result<Self, MapError> {
        let n = sigma0.len();
        if n == 0 {
            return Err(MapError::Empty);
        }
        if sigma1.len() != n || sigma2.len() != n {
            return Err(MapError::LengthMismatch);
        }
        let sigma = [sigma0, sigma1, sigma2];
        for (dim, s) in sigma.iter().enumerate() {
            for f in 0..n {
                let g = s[f];
                if g >= n || g == f || s[g] != f {
                    return Err(MapError::BadInvolution { dim, flag: f });
                }
            }
        }
        for f in 0..n {
            let g = sigma[0][sigma[2][f]];
            if g == f || sigma[0][sigma[2][g]] != f {
                return Err(MapError::BadEdgeOrbit(f));
            }
        }
        let m = FlagSystem { sigma, colored };
        if !m.is_connected() {
            return Err(MapError::Disconnected);
        }
        m.orientation_classes().ok_or(MapError::NonOrientable)?;
        Ok(m)
    }

    pub fn flag_count(&self) -> usize {
        self.sigma[0].len()
    }

    #[inline]
    pub fn sigma(&self, i: usize, f: Flag) -> Flag {
        self.sigma[i][f]
    }

    pub fn sigma_slice(&self, i: usize) -> &[Flag] {
        &self.sigma[i]
    }

    pub fn is_colored(&self) -> bool {
        self.colored
    }

    pub(crate) fn with_colored(mut self, colored: bool) -> Self {
        self.colored = colored;
        self
    }

    fn is_connected(&self) -> bool {
        let n = self.flag_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut count = 1;
        while let Some(f) = queue.pop_front() {
            for i in 0..3 {
                let g = self.sigma[i][f];
                if !seen[g] {
                    seen[g] = true;
                    count += 1;
                    queue.push_back(g);
                }
            }
        }
        count == n
    }

    /// 2-colouring of the flags by orientation; `None` when non-orientable.
    pub fn orientation_classes(&self) -> Option<Vec<u8>> {
        let n = self.flag_count();
        let mut class = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        class[0] = 0;
        queue.push_back(0);
        while let Some(f) = queue.pop_front() {
            for i in 0..3 {
                let g = self.sigma[i][f];
                let want = 1 - class[f];
                if class[g] == u8::MAX {
                    class[g] = want;
                    queue.push_back(g);
                } else if class[g] != want {
                    return None;
                }
            }
        }
        Some(class)
    }

    /// Interchanges the colours 0 and 2: vertices and faces swap roles.
    /// Exact involution: `m.dual().dual() == m`.
    pub fn dual(&self) -> FlagSystem {
        FlagSystem {
            sigma: [
                self.sigma[2].clone(),
                self.sigma[1].clone(),
                self.sigma[0].clone(),
            ],
            colored: self.colored,
        }
    }

    pub fn orbits(&self, gens: &[usize]) -> Orbits {
        Orbits::compute(&self.sigma, gens, self.flag_count())
    }

    pub fn vertex_orbits(&self) -> Orbits {
        self.orbits(&[1, 2])
    }

    pub fn edge_orbits(&self) -> Orbits {
        self.orbits(&[0, 2])
    }

    pub fn face_orbits(&self) -> Orbits {
        self.orbits(&[0, 1])
    }

    pub fn summary(&self) -> Result<MapSummary, MapError> {
        let v = self.vertex_orbits();
        let e = self.edge_orbits();
        let f = self.face_orbits();
        let chi = v.count as i64 - e.count as i64 + f.count as i64;
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(MapError::BadEuler(chi));
        }
        let genus = ((2 - chi) / 2) as usize;
        let mut face_sizes: Vec<usize> = f.sizes.iter().map(|s| s / 2).collect();
        face_sizes.sort_unstable_by(|a, b| b.cmp(a));
        let mut vertex_degrees: Vec<usize> = v.sizes.iter().map(|s| s / 2).collect();
        vertex_degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MapSummary {
            vertex_count: v.count,
            edge_count: e.count,
            face_count: f.count,
            genus,
            face_sizes,
            vertex_degrees,
        })
    }

    pub(crate) fn underlying_graph(&self) -> UnderlyingGraph {
        let vertices = self.vertex_orbits();
        let edges = self.edge_orbits();
        let mut ends = Vec::with_capacity(edges.count);
        for &rep in &edges.rep {
            let a = vertices.id[rep];
            let b = vertices.id[self.sigma[0][rep]];
            ends.push((a.min(b), a.max(b)));
        }
        let mut adj = vec![Vec::new(); vertices.count];
        for (e, &(a, b)) in ends.iter().enumerate() {
            adj[a].push((b, e));
            if a != b {
                adj[b].push((a, e));
            }
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        UnderlyingGraph {
            vertices,
            edges,
            ends,
            adj,
        }
    }

    /// Checks the polyhedral map conditions: simple underlying graph,
    /// 3-connectivity, simple face boundary walks, and face closures meeting
    /// in at most a vertex or a single edge. Reports the first violation.
    pub fn is_polyhedral(&self) -> PolyhedralReport {
        let g = self.underlying_graph();
        let nv = g.vertices.count;

        // (a) simple graph
        for (e, &(a, b)) in g.ends.iter().enumerate() {
            if a == b {
                return fail(PolyhedralViolation::Loop { edge: e });
            }
        }
        let mut sorted: Vec<(usize, usize, usize)> =
            g.ends.iter().enumerate().map(|(e, &(a, b))| (a, b, e)).collect();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return fail(PolyhedralViolation::ParallelEdges {
                    first: w[0].2,
                    second: w[1].2,
                });
            }
        }

        // (b) 3-connected, by exhaustive removal of vertex pairs
        if nv < 4 {
            return fail(PolyhedralViolation::TooFewVertices);
        }
        let mut visited = vec![usize::MAX; nv];
        let mut stack = Vec::new();
        for a in 0..nv {
            for b in (a + 1)..nv {
                let stamp = a * nv + b;
                let start = (0..nv).find(|&v| v != a && v != b).unwrap();
                visited[start] = stamp;
                stack.push(start);
                let mut reached = 1usize;
                while let Some(v) = stack.pop() {
                    for &(u, _) in &g.adj[v] {
                        if u != a && u != b && visited[u] != stamp {
                            visited[u] = stamp;
                            reached += 1;
                            stack.push(u);
                        }
                    }
                }
                if reached != nv - 2 {
                    return fail(PolyhedralViolation::NotThreeConnected { cut: (a, b) });
                }
            }
        }

        // (c) face boundary walks are simple cycles
        let faces = self.face_orbits();
        let mut face_vertices: Vec<Vec<usize>> = vec![Vec::new(); faces.count];
        let mut face_edges: Vec<Vec<usize>> = vec![Vec::new(); faces.count];
        let edge_orbit = &g.edges;
        for fl in 0..self.flag_count() {
            let fo = faces.id[fl];
            face_vertices[fo].push(g.vertices.id[fl]);
            face_edges[fo].push(edge_orbit.id[fl]);
        }
        for fo in 0..faces.count {
            face_vertices[fo].sort_unstable();
            face_vertices[fo].dedup();
            face_edges[fo].sort_unstable();
            face_edges[fo].dedup();
            let size = faces.sizes[fo] / 2;
            if face_vertices[fo].len() != size || face_edges[fo].len() != size {
                return fail(PolyhedralViolation::NonSimpleFaceWalk { face: fo });
            }
        }

        // (d) intersections of distinct face closures
        let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for fo in 0..faces.count {
            for &v in &face_vertices[fo] {
                at_vertex[v].push(fo);
            }
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for list in &at_vertex {
            for i in 0..list.len() {
                for j in (i + 1)..list.len() {
                    pairs.push((list[i], list[j]));
                }
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        for (f1, f2) in pairs {
            let sv = intersection_size(&face_vertices[f1], &face_vertices[f2]);
            let se = intersection_size(&face_edges[f1], &face_edges[f2]);
            let ok = (se == 0 && sv <= 1) || (se == 1 && sv == 2);
            if !ok {
                return fail(PolyhedralViolation::BadFaceIntersection {
                    faces: (f1, f2),
                    shared_vertices: sv,
                    shared_edges: se,
                });
            }
        }

        PolyhedralReport {
            polyhedral: true,
            violation: None,
        }
    }

    /// Builds the flag system of a rotation system: two flags per dart, four
    /// per edge. Rotation lists are read as clockwise; flag `2d+1` sits on
    /// the clockwise side of dart `d`, flag `2d` on the counterclockwise
    /// side, and the involutions are
    /// `sigma0(2d+s) = 2θ(d)+(1-s)`, `sigma1(2d+1) = 2·next(d)`,
    /// `sigma2(2d+s) = 2d+(1-s)`.
    pub fn from_rotation_system(r: &RotationSystem) -> Result<FlagSystem, MapError> {
        let d = r.darts()?;
        let total = d.vertex.len();
        // connectivity of the rotation system itself
        {
            let n = r.vertex_count();
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &(u, _) in &r.neighbors[v] {
                    if !seen[u] {
                        seen[u] = true;
                        count += 1;
                        stack.push(u);
                    }
                }
            }
            if count != n {
                return Err(MapError::RotationDisconnected);
            }
        }
        let nf = 2 * total;
        let mut s0 = vec![0; nf];
        let mut s1 = vec![0; nf];
        let mut s2 = vec![0; nf];
        for dart in 0..total {
            for s in 0..2 {
                s0[2 * dart + s] = 2 * d.theta[dart] + (1 - s);
                s2[2 * dart + s] = 2 * dart + (1 - s);
            }
            s1[2 * dart + 1] = 2 * d.next[dart];
            s1[2 * d.next[dart]] = 2 * dart + 1;
        }
        FlagSystem::new(s0, s1, s2, false)
    }

    /// Inverse of [`FlagSystem::from_rotation_system`] up to relabeling of
    /// vertices and rotation of the cyclic lists.
    pub fn to_rotation_system(&self) -> RotationSystem {
        let n = self.flag_count();
        let classes = self
            .orientation_classes()
            .expect("valid flag systems are orientable");
        let positive = classes[0];

        // darts = sigma2 orbits, ordered by smallest flag
        let mut dart_of_flag = vec![usize::MAX; n];
        let mut dart_pos_flag = Vec::new(); // positive flag of each dart
        for f in 0..n {
            if dart_of_flag[f] != usize::MAX {
                continue;
            }
            let id = dart_pos_flag.len();
            let g = self.sigma[2][f];
            dart_of_flag[f] = id;
            dart_of_flag[g] = id;
            dart_pos_flag.push(if classes[f] == positive { f } else { g });
        }

        let vertices = self.vertex_orbits();
        // gather darts per vertex; a dart belongs to the vertex of its flags
        let mut verts: Vec<Vec<usize>> = vec![Vec::new(); vertices.count];
        for (dart, &pf) in dart_pos_flag.iter().enumerate() {
            verts[vertices.id[pf]].push(dart);
        }
        // next dart clockwise around the vertex
        let next_dart = |d: usize| dart_of_flag[self.sigma[1][dart_pos_flag[d]]];

        let mut lists: Vec<Vec<usize>> = Vec::with_capacity(vertices.count);
        for v in 0..vertices.count {
            let start = *verts[v].iter().min().unwrap();
            let mut cycle = Vec::with_capacity(verts[v].len());
            let mut d = start;
            loop {
                cycle.push(d);
                d = next_dart(d);
                if d == start {
                    break;
                }
            }
            debug_assert_eq!(cycle.len(), verts[v].len());
            lists.push(cycle);
        }

        // dart -> (target vertex); partner dart via sigma0
        let partner = |d: usize| dart_of_flag[self.sigma[0][dart_pos_flag[d]]];
        let mut dart_vertex = vec![0usize; dart_pos_flag.len()];
        for v in 0..vertices.count {
            for &d in &lists[v] {
                dart_vertex[d] = v;
            }
        }
        let mut pos_in_list = vec![0usize; dart_pos_flag.len()];
        for list in &lists {
            for (i, &d) in list.iter().enumerate() {
                pos_in_list[d] = i;
            }
        }

        let mut neighbors = Vec::with_capacity(vertices.count);
        for v in 0..vertices.count {
            let mut row = Vec::with_capacity(lists[v].len());
            for &d in &lists[v] {
                let p = partner(d);
                let u = dart_vertex[p];
                // occurrence of this partner among u's darts towards v
                let mut k = 0;
                for &d2 in &lists[u] {
                    if dart_vertex[partner(d2)] == v {
                        k += 1;
                    }
                    if d2 == p {
                        break;
                    }
                }
                row.push((u, k));
            }
            neighbors.push(row);
        }
        RotationSystem { neighbors }
    }
}

fn fail(v: PolyhedralViolation) -> PolyhedralReport {
    PolyhedralReport {
        polyhedral: false,
        violation: Some(v),
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let mut i = 0;
    let mut j = 0;
    let mut n = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn tetrahedron_summary() {
        let m = families::platonic(families::PlatonicSolid::Tetrahedron);
        assert_eq!(m.flag_count(), 24);
        let s = m.summary().unwrap();
        assert_eq!(
            (s.vertex_count, s.edge_count, s.face_count, s.genus),
            (4, 6, 4, 0)
        );
        assert_eq!(s.face_sizes, vec![3, 3, 3, 3]);
        assert_eq!(s.vertex_degrees, vec![3, 3, 3, 3]);
        assert!(m.is_polyhedral().polyhedral);
    }

    #[test]
    fn square_torus_counts() {
        let m = families::square_torus(5).unwrap();
        let s = m.summary().unwrap();
        assert_eq!(
            (s.vertex_count, s.edge_count, s.face_count, s.genus),
            (25, 50, 25, 1)
        );
        assert!(m.is_polyhedral().polyhedral);
    }

    #[test]
    fn dual_is_exact_involution() {
        let m = families::h_family(3).unwrap();
        assert_eq!(m.dual().dual(), m);
        let s = families::platonic(families::PlatonicSolid::Cube)
            .dual()
            .summary()
            .unwrap();
        assert_eq!(
            (s.vertex_count, s.edge_count, s.face_count, s.genus),
            (6, 12, 8, 0)
        );
    }

    #[test]
    fn h3_face_profile() {
        let m = families::h_family(3).unwrap();
        let s = m.summary().unwrap();
        assert_eq!(
            (s.vertex_count, s.edge_count, s.face_count, s.genus),
            (12, 36, 20, 3)
        );
        let mut expect = vec![6, 6];
        expect.extend(std::iter::repeat(4).take(6));
        expect.extend(std::iter::repeat(3).take(12));
        assert_eq!(s.face_sizes, expect);
        // the h-family has face-width 2: a quadrangle always meets a
        // 2g-face in two vertices that span no common edge
        let rep = m.is_polyhedral();
        assert!(matches!(
            rep.violation,
            Some(PolyhedralViolation::BadFaceIntersection { .. })
        ));
    }

    #[test]
    fn two_by_two_torus_has_parallel_edges() {
        // built by hand since square_torus rejects n < 3;
        // vertex v=(i,j) lists E, S, W, N where E/W are the two parallel
        // darts to (i+1,j)=(i-1,j), likewise N/S
        let v = |i: usize, j: usize| i * 2 + j;
        let mut lists: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 4];
        for i in 0..2 {
            for j in 0..2 {
                let h = v((i + 1) % 2, j);
                let ve = v(i, (j + 1) % 2);
                // E pairs with partner's W (2nd dart towards us), etc.
                lists[v(i, j)] = vec![(h, 2), (ve, 2), (h, 1), (ve, 1)];
            }
        }
        let r = RotationSystem::new(lists).unwrap();
        let m = FlagSystem::from_rotation_system(&r).unwrap();
        let s = m.summary().unwrap();
        assert_eq!((s.vertex_count, s.edge_count, s.genus), (4, 8, 1));
        let rep = m.is_polyhedral();
        assert!(!rep.polyhedral);
        assert!(matches!(
            rep.violation,
            Some(PolyhedralViolation::ParallelEdges { .. })
        ));
    }

    #[test]
    fn rotation_round_trip() {
        for m in [
            families::platonic(families::PlatonicSolid::Dodecahedron),
            families::h_family(2).unwrap(),
            families::square_torus(4).unwrap(),
        ] {
            let r = m.to_rotation_system();
            let back = FlagSystem::from_rotation_system(&r).unwrap();
            assert_eq!(back.summary().unwrap(), m.summary().unwrap());
            assert!(crate::analysis::are_isomorphic(
                &back,
                &m,
                crate::analysis::Mode::ColorPreserving
            )
            .is_some());
        }
    }

    #[test]
    fn h2_to_rotation_degrees() {
        let m = families::h_family(2).unwrap();
        let r = m.to_rotation_system();
        assert_eq!(r.vertex_count(), 8);
        assert!((0..8).all(|v| r.degree(v) == 6));
    }

    #[test]
    fn genus_zero_fixtures_have_small_face() {
        use families::PlatonicSolid::*;
        for p in [Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron] {
            let s = families::platonic(p).summary().unwrap();
            assert!(s.face_sizes.iter().any(|&k| k <= 5));
        }
    }
}
