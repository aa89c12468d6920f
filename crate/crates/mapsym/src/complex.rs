//! Bordered chamber complexes and their assembly into plane patches.
//!
//! A patch (a 3-coloured triangulated disc) is conveniently described by its
//! chambers alone: each chamber is a triangle with one corner of each colour,
//! and for each colour `c` it either has a neighbor across the edge opposite
//! the colour-`c` corner or that edge lies on the boundary. Both the
//! Goldberg-Coxeter generator and operation composition produce complexes of
//! this kind; `assemble` turns one into an explicit plane map with rotation
//! lists, an outer walk and marked special vertices.

use thiserror::Error;

use crate::flagmap::RotationSystem;
use crate::util::UnionFind;

/// A bordered chamber complex. `adj[t][c]` is the chamber across the edge of
/// `t` opposite its colour-`c` corner, `None` when that edge is on the
/// boundary. Adjacency must be mutual.
#[derive(Clone, Debug)]
pub struct PatchComplex {
    pub adj: Vec<[Option<usize>; 3]>,
}

/// A corner of a chamber, addressed by (chamber, corner colour).
pub type CornerRef = (usize, usize);

/// An un-validated plane patch: vertex colours, clockwise rotation lists,
/// outer boundary walk and the three special vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPatch {
    pub colors: Vec<u8>,
    pub rotation: RotationSystem,
    pub outer: Vec<usize>,
    pub specials: [usize; 3],
}

#[derive(Debug, Error)]
pub enum AssembleError {
    #[error("complex is empty")]
    Empty,
    #[error("chamber adjacency is not mutual at chamber {0} slot {1}")]
    NotMutual(usize, usize),
    #[error("complex is not connected")]
    NotConnected,
    #[error("chamber adjacency graph is not bipartite, so the complex is not colour-consistent")]
    NotBipartite,
    #[error("complex does not assemble into a disc: {0}")]
    NotDisc(String),
    #[error("special vertex {0} is not on the boundary")]
    SpecialNotOnBoundary(usize),
    #[error(transparent)]
    Rotation(#[from] crate::flagmap::MapError),
}

impl PatchComplex {
    pub fn chamber_count(&self) -> usize {
        self.adj.len()
    }

    fn validate(&self) -> Result<(), AssembleError> {
        let n = self.adj.len();
        if n == 0 {
            return Err(AssembleError::Empty);
        }
        for t in 0..n {
            for c in 0..3 {
                if let Some(u) = self.adj[t][c] {
                    if u >= n || u == t || self.adj[u][c] != Some(t) {
                        return Err(AssembleError::NotMutual(t, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Orientation classes of the chambers; adjacent chambers are mirror
    /// images, so the adjacency graph must be bipartite.
    fn parities(&self) -> Result<Vec<u8>, AssembleError> {
        let n = self.adj.len();
        let mut parity = vec![u8::MAX; n];
        parity[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut seen = 1;
        while let Some(t) = queue.pop_front() {
            for c in 0..3 {
                if let Some(u) = self.adj[t][c] {
                    let want = 1 - parity[t];
                    if parity[u] == u8::MAX {
                        parity[u] = want;
                        seen += 1;
                        queue.push_back(u);
                    } else if parity[u] != want {
                        return Err(AssembleError::NotBipartite);
                    }
                }
            }
        }
        if seen != n {
            return Err(AssembleError::NotConnected);
        }
        Ok(parity)
    }

    /// Builds the plane patch: vertices are corner classes, edges are slot
    /// pairs, rotation lists come from sweeping clockwise around each corner
    /// (a positive chamber has its corners 0,1,2 in clockwise order).
    pub fn assemble(&self, specials: [CornerRef; 3]) -> Result<RawPatch, AssembleError> {
        let open = self.assemble_open()?;
        open.with_specials(specials)
    }

    /// Assembles the disc without choosing special vertices.
    pub fn assemble_open(&self) -> Result<Assembled, AssembleError> {
        self.validate()?;
        let parity = self.parities()?;
        let n = self.adj.len();

        // vertex classes: crossing the slot-a edge identifies the corners of
        // the two other colours
        let corner = |t: usize, c: usize| 3 * t + c;
        let mut uf = UnionFind::new(3 * n);
        for t in 0..n {
            for a in 0..3 {
                if let Some(u) = self.adj[t][a] {
                    for b in 0..3 {
                        if b != a {
                            uf.union(corner(t, b), corner(u, b));
                        }
                    }
                }
            }
        }
        let (vertex_of_corner, vertex_count, _) = uf.canonical();

        let mut colors = vec![0u8; vertex_count];
        for t in 0..n {
            for c in 0..3 {
                colors[vertex_of_corner[corner(t, c)]] = c as u8;
            }
        }

        // edges: one per glued slot pair, one per boundary slot
        let slot = |t: usize, c: usize| 3 * t + c;
        let mut edge_of_slot = vec![usize::MAX; 3 * n];
        let mut edge_ends: Vec<(usize, usize)> = Vec::new();
        let mut edge_boundary: Vec<bool> = Vec::new();
        for t in 0..n {
            for c in 0..3 {
                if edge_of_slot[slot(t, c)] != usize::MAX {
                    continue;
                }
                let id = edge_ends.len();
                edge_of_slot[slot(t, c)] = id;
                if let Some(u) = self.adj[t][c] {
                    edge_of_slot[slot(u, c)] = id;
                    edge_boundary.push(false);
                } else {
                    edge_boundary.push(true);
                }
                let (a, b) = ((c + 1) % 3, (c + 2) % 3);
                edge_ends.push((
                    vertex_of_corner[corner(t, a)],
                    vertex_of_corner[corner(t, b)],
                ));
            }
        }

        // clockwise sweep around each corner class; positive chambers are
        // entered through slot c+2 and left through slot c+1
        let cw_enter = |t: usize, c: usize| if parity[t] == 0 { (c + 2) % 3 } else { (c + 1) % 3 };
        let cw_exit = |t: usize, c: usize| if parity[t] == 0 { (c + 1) % 3 } else { (c + 2) % 3 };

        let mut corners_of_vertex: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
        for t in 0..n {
            for c in 0..3 {
                corners_of_vertex[vertex_of_corner[corner(t, c)]].push(corner(t, c));
            }
        }

        let mut rot_edges: Vec<Vec<usize>> = Vec::with_capacity(vertex_count);
        let mut boundary_pair: Vec<Option<(usize, usize)>> = vec![None; vertex_count];
        for v in 0..vertex_count {
            let corners = &corners_of_vertex[v];
            let start_corner = *corners.iter().min().unwrap();
            let (mut t, c) = (start_corner / 3, start_corner % 3);
            // rewind counterclockwise to a boundary edge if there is one
            let mut at_boundary = false;
            for _ in 0..=corners.len() {
                match self.adj[t][cw_enter(t, c)] {
                    Some(u) => t = u,
                    None => {
                        at_boundary = true;
                        break;
                    }
                }
                if 3 * t + c == start_corner {
                    break;
                }
            }
            let mut edges = Vec::with_capacity(corners.len() + 1);
            if at_boundary {
                edges.push(edge_of_slot[slot(t, cw_enter(t, c))]);
            }
            let first = t;
            for step in 0..=corners.len() {
                edges.push(edge_of_slot[slot(t, cw_exit(t, c))]);
                match self.adj[t][cw_exit(t, c)] {
                    Some(u) => {
                        t = u;
                        if !at_boundary && t == first {
                            break;
                        }
                        if step == corners.len() {
                            return Err(AssembleError::NotDisc(format!(
                                "corner sweep at vertex {v} does not close"
                            )));
                        }
                    }
                    None => break,
                }
            }
            let expect = if at_boundary { corners.len() + 1 } else { corners.len() };
            if edges.len() != expect {
                return Err(AssembleError::NotDisc(format!(
                    "corner sweep at vertex {v} visited {} edges, expected {expect}",
                    edges.len()
                )));
            }
            if at_boundary {
                boundary_pair[v] = Some((edges[0], *edges.last().unwrap()));
            }
            rot_edges.push(edges);
        }

        // boundary walk: at each boundary vertex the two extremal rotation
        // entries are its boundary edges
        let boundary_count = edge_boundary.iter().filter(|&&b| b).count();
        if boundary_count < 3 {
            return Err(AssembleError::NotDisc(format!(
                "only {boundary_count} boundary edges"
            )));
        }
        let other_end = |e: usize, v: usize| {
            let (a, b) = edge_ends[e];
            if a == v {
                b
            } else {
                a
            }
        };
        let start_edge = (0..edge_ends.len()).find(|&e| edge_boundary[e]).unwrap();
        let mut walk = vec![edge_ends[start_edge].0];
        let mut cur_edge = start_edge;
        let mut cur_vertex = edge_ends[start_edge].1;
        let mut visited_boundary = 1;
        while cur_vertex != walk[0] || visited_boundary < boundary_count {
            walk.push(cur_vertex);
            let (e1, e2) = boundary_pair[cur_vertex].ok_or_else(|| {
                AssembleError::NotDisc(format!("boundary walk reached inner vertex {cur_vertex}"))
            })?;
            let next = if e1 == cur_edge { e2 } else { e1 };
            if next == cur_edge {
                return Err(AssembleError::NotDisc("boundary walk stuck".into()));
            }
            cur_edge = next;
            cur_vertex = other_end(next, cur_vertex);
            visited_boundary += 1;
            if walk.len() > boundary_count {
                return Err(AssembleError::NotDisc(
                    "boundary has more than one component".into(),
                ));
            }
        }
        if visited_boundary != boundary_count || walk.len() != boundary_count {
            return Err(AssembleError::NotDisc(
                "boundary has more than one component".into(),
            ));
        }

        // rotation lists as (neighbor, occurrence) entries, pairing the two
        // ends of each edge by edge identity
        let mut pos_in_rotation = vec![(usize::MAX, usize::MAX); edge_ends.len()];
        for (v, edges) in rot_edges.iter().enumerate() {
            for (i, &e) in edges.iter().enumerate() {
                let p = &mut pos_in_rotation[e];
                if p.0 == usize::MAX {
                    p.0 = v * 1_000_000 + i;
                } else {
                    p.1 = v * 1_000_000 + i;
                }
            }
        }
        let mut neighbors = Vec::with_capacity(vertex_count);
        for (v, edges) in rot_edges.iter().enumerate() {
            let mut row = Vec::with_capacity(edges.len());
            for (i, &e) in edges.iter().enumerate() {
                let u = other_end(e, v);
                // which dart of e sits at the far end
                let here = v * 1_000_000 + i;
                let far = if pos_in_rotation[e].0 == here {
                    pos_in_rotation[e].1
                } else {
                    pos_in_rotation[e].0
                };
                let far_index = far % 1_000_000;
                // occurrence of this dart among u's darts towards v
                let mut k = 0;
                for (j, &e2) in rot_edges[u].iter().enumerate() {
                    if other_end(e2, u) == v {
                        k += 1;
                    }
                    if j == far_index {
                        break;
                    }
                }
                row.push((u, k));
            }
            neighbors.push(row);
        }
        let rotation = RotationSystem::new(neighbors)?;
        let on_boundary: Vec<bool> = boundary_pair.iter().map(|p| p.is_some()).collect();

        Ok(Assembled {
            colors,
            rotation,
            outer: walk,
            vertex_of_corner,
            on_boundary,
        })
    }
}

/// A patch assembled from a complex, before the special vertices are fixed.
#[derive(Clone, Debug)]
pub struct Assembled {
    pub colors: Vec<u8>,
    pub rotation: RotationSystem,
    pub outer: Vec<usize>,
    /// vertex id of each corner (3·chamber + colour)
    pub vertex_of_corner: Vec<usize>,
    pub on_boundary: Vec<bool>,
}

impl Assembled {
    pub fn with_specials(&self, specials: [CornerRef; 3]) -> Result<RawPatch, AssembleError> {
        let mut special_vertices = [0usize; 3];
        for (i, &(t, c)) in specials.iter().enumerate() {
            let v = self.vertex_of_corner[3 * t + c];
            if !self.on_boundary[v] {
                return Err(AssembleError::SpecialNotOnBoundary(i));
            }
            special_vertices[i] = v;
        }
        Ok(self.with_special_vertices(special_vertices))
    }

    pub fn with_special_vertices(&self, specials: [usize; 3]) -> RawPatch {
        RawPatch {
            colors: self.colors.clone(),
            rotation: self.rotation.clone(),
            outer: self.outer.clone(),
            specials,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_chamber_assembles_to_triangle() {
        let cx = PatchComplex {
            adj: vec![[None, None, None]],
        };
        let raw = cx.assemble([(0, 0), (0, 1), (0, 2)]).unwrap();
        assert_eq!(raw.colors.len(), 3);
        assert_eq!(raw.outer.len(), 3);
        assert_eq!(raw.colors[raw.specials[0]], 0);
        assert_eq!(raw.colors[raw.specials[1]], 1);
        assert_eq!(raw.colors[raw.specials[2]], 2);
    }

    #[test]
    fn two_chambers_share_an_edge() {
        // glued along the edge opposite the colour-2 corners
        let cx = PatchComplex {
            adj: vec![[None, None, Some(1)], [None, None, Some(0)]],
        };
        let raw = cx.assemble([(0, 2), (0, 0), (1, 2)]).unwrap();
        assert_eq!(raw.colors.len(), 4);
        assert_eq!(raw.outer.len(), 4);
    }

    #[test]
    fn sphere_complex_is_rejected() {
        // two triangles glued along all three edges: a sphere, no boundary
        let cx = PatchComplex {
            adj: vec![[Some(1), Some(1), Some(1)], [Some(0), Some(0), Some(0)]],
        };
        assert!(cx.assemble([(0, 0), (0, 1), (0, 2)]).is_err());
    }

    #[test]
    fn odd_gluing_is_rejected() {
        // three chambers glued in a cycle with mismatched parity: slot 0 all
        let cx = PatchComplex {
            adj: vec![
                [Some(1), Some(2), None],
                [Some(0), None, Some(2)],
                [None, Some(0), Some(1)],
            ],
        };
        assert!(matches!(
            cx.assemble([(0, 0), (0, 1), (0, 2)]),
            Err(AssembleError::NotBipartite)
        ));
    }
}
