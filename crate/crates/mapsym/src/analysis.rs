//! Automorphism groups, isomorphism testing, chamber orbits and
//! self-duality.
//!
//! The core primitive is equivariant extension: a candidate map is pinned by
//! the image of one base flag and propagated through the involutions; since
//! the involution group acts transitively on flags, the image of a single
//! flag determines the whole automorphism. Elements are stored as explicit
//! flag permutations and everything is exact integer arithmetic.

use std::collections::VecDeque;

use crate::flagmap::{Flag, FlagSystem};

/// Which flag bijections count as symmetries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// commute with sigma0, sigma1 and sigma2 (the map automorphisms,
    /// reflections included)
    ColorPreserving,
    /// additionally allow bijections conjugating sigma0 to sigma2
    /// (symmetries of the uncoloured barycentric subdivision; the extra
    /// elements are maps onto the dual)
    AllowDualSwap,
    /// colour-preserving bijections fixing the two orientation classes
    OrientationPreserving,
}

/// How the involution indices translate through a candidate bijection.
pub(crate) const PATTERN_ID: [usize; 3] = [0, 1, 2];
pub(crate) const PATTERN_SWAP02: [usize; 3] = [2, 1, 0];

/// One symmetry as a flag permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub flags: Vec<Flag>,
    /// true when the element conjugates sigma0 to sigma2 (a dual swap)
    pub dual_swap: bool,
}

/// Automorphism group data: order, elements, chamber orbits.
#[derive(Clone, Debug)]
pub struct AutReport {
    pub mode: Mode,
    pub order: usize,
    pub elements: Vec<Automorphism>,
    /// orbit id per flag under the group
    pub orbit_id: Vec<usize>,
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
}

/// Attempts the unique equivariant extension sending flag 0 of `a` to
/// `target` of `b`, translating involution indices through `pattern`.
fn try_extension(
    a: &FlagSystem,
    b: &FlagSystem,
    pattern: &[usize; 3],
    target: Flag,
) -> Option<Vec<Flag>> {
    let n = a.flag_count();
    debug_assert_eq!(n, b.flag_count());
    let mut img = vec![usize::MAX; n];
    img[0] = target;
    let mut queue = VecDeque::with_capacity(n);
    queue.push_back(0);
    while let Some(f) = queue.pop_front() {
        for i in 0..3 {
            let fa = a.sigma(i, f);
            let fb = b.sigma(pattern[i], img[f]);
            if img[fa] == usize::MAX {
                img[fa] = fb;
                queue.push_back(fa);
            } else if img[fa] != fb {
                return None;
            }
        }
    }
    // a is connected, so img is total; the image is closed under the
    // involutions of b and b is connected, hence img is a bijection.
    Some(img)
}

fn patterns_for(mode: Mode) -> Vec<(&'static [usize; 3], bool)> {
    match mode {
        Mode::ColorPreserving | Mode::OrientationPreserving => vec![(&PATTERN_ID, false)],
        Mode::AllowDualSwap => vec![(&PATTERN_ID, false), (&PATTERN_SWAP02, true)],
    }
}

/// Computes the symmetry group of `m` under the given mode.
pub fn automorphisms(m: &FlagSystem, mode: Mode) -> AutReport {
    let n = m.flag_count();
    let parity = if mode == Mode::OrientationPreserving {
        m.orientation_classes()
    } else {
        None
    };
    let mut elements = Vec::new();
    for (pattern, dual_swap) in patterns_for(mode) {
        for target in 0..n {
            if let Some(p) = &parity {
                if p[target] != p[0] {
                    continue;
                }
            }
            if let Some(flags) = try_extension(m, m, pattern, target) {
                elements.push(Automorphism { flags, dual_swap });
            }
        }
    }

    // orbit partition under the collected elements
    let mut uf = UnionFind::new(n);
    for e in &elements {
        for f in 0..n {
            uf.union(f, e.flags[f]);
        }
    }
    let (orbit_id, orbit_count, orbit_sizes) = uf.canonical();

    AutReport {
        mode,
        order: elements.len(),
        elements,
        orbit_id,
        orbit_count,
        orbit_sizes,
    }
}

/// Orbit partition of the flags (chambers of the barycentric subdivision)
/// under the symmetry group.
pub fn chamber_orbits(m: &FlagSystem, mode: Mode) -> (Vec<usize>, usize) {
    let report = automorphisms(m, mode);
    (report.orbit_id, report.orbit_count)
}

/// Tests `a` and `b` for isomorphism under the mode; the witness maps flags
/// of `a` to flags of `b`.
pub fn are_isomorphic(a: &FlagSystem, b: &FlagSystem, mode: Mode) -> Option<Automorphism> {
    if a.flag_count() != b.flag_count() {
        return None;
    }
    let parity_a = a.orientation_classes();
    let parity_b = b.orientation_classes();
    for (pattern, dual_swap) in patterns_for(mode) {
        for target in 0..b.flag_count() {
            if mode == Mode::OrientationPreserving {
                match (&parity_a, &parity_b) {
                    (Some(pa), Some(pb)) if pb[target] != pa[0] => continue,
                    _ => {}
                }
            }
            if let Some(flags) = try_extension(a, b, pattern, target) {
                return Some(Automorphism { flags, dual_swap });
            }
        }
    }
    None
}

/// A map is self-dual when it is colour-preservingly isomorphic to its dual.
pub fn is_self_dual(m: &FlagSystem) -> Option<Automorphism> {
    are_isomorphic(m, &m.dual(), Mode::ColorPreserving)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller representative for deterministic ids
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    /// Returns (id per element ordered by smallest member, count, sizes).
    pub fn canonical(&mut self) -> (Vec<usize>, usize, Vec<usize>) {
        let n = self.parent.len();
        let mut id = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if id[r] == usize::MAX {
                id[r] = sizes.len();
                sizes.push(0);
            }
            let o = id[r];
            if x != r {
                id[x] = o;
            }
            sizes[o] += 1;
        }
        (id, sizes.len(), sizes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, PlatonicSolid};

    #[test]
    fn tetrahedron_group_order() {
        let m = families::platonic(PlatonicSolid::Tetrahedron);
        let report = automorphisms(&m, Mode::ColorPreserving);
        assert_eq!(report.order, 24);
        assert_eq!(report.orbit_count, 1);
        // orientation-preserving subgroup has index 2 on this reflexible map
        let rot = automorphisms(&m, Mode::OrientationPreserving);
        assert_eq!(rot.order, 12);
    }

    #[test]
    fn square_torus_group_orders() {
        let m = families::square_torus(5).unwrap();
        assert_eq!(automorphisms(&m, Mode::ColorPreserving).order, 200);
        assert_eq!(automorphisms(&m, Mode::AllowDualSwap).order, 400);
    }

    #[test]
    fn square_torus4_order() {
        let m = families::square_torus(4).unwrap();
        assert_eq!(automorphisms(&m, Mode::ColorPreserving).order, 128);
    }

    #[test]
    fn h2_group_and_orbits() {
        let m = families::h_family(2).unwrap();
        let report = automorphisms(&m, Mode::ColorPreserving);
        assert_eq!(report.order, 48);
        assert_eq!(report.orbit_count, 2);
        // free action on a polyhedral map: every orbit as large as the group
        assert!(report.orbit_sizes.iter().all(|&s| s == report.order));
    }

    #[test]
    fn cube_octahedron_duality() {
        let cube = families::platonic(PlatonicSolid::Cube);
        let oct = families::platonic(PlatonicSolid::Octahedron);
        assert!(are_isomorphic(&cube, &oct, Mode::ColorPreserving).is_none());
        assert!(are_isomorphic(&cube, &oct, Mode::AllowDualSwap).is_some());
        assert!(is_self_dual(&cube).is_none());
        assert!(is_self_dual(&families::platonic(PlatonicSolid::Tetrahedron)).is_some());
    }

    #[test]
    fn self_dual_square_torus() {
        for n in [3, 4, 5] {
            let m = families::square_torus(n).unwrap();
            assert!(is_self_dual(&m).is_some(), "n={n}");
        }
    }

    #[test]
    fn dual_preserves_group_order() {
        for m in [
            families::platonic(PlatonicSolid::Dodecahedron),
            families::h_family(2).unwrap(),
            families::hex_torus(3, 3).unwrap(),
        ] {
            let a = automorphisms(&m, Mode::ColorPreserving).order;
            let b = automorphisms(&m.dual(), Mode::ColorPreserving).order;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn automorphisms_commute_with_involutions() {
        let m = families::platonic(PlatonicSolid::Octahedron);
        let report = automorphisms(&m, Mode::AllowDualSwap);
        for e in &report.elements {
            for f in 0..m.flag_count() {
                assert_eq!(e.flags[m.sigma(1, f)], m.sigma(1, e.flags[f]));
                let (s0, s2) = if e.dual_swap { (2, 0) } else { (0, 2) };
                assert_eq!(e.flags[m.sigma(0, f)], m.sigma(s0, e.flags[f]));
                assert_eq!(e.flags[m.sigma(2, f)], m.sigma(s2, e.flags[f]));
            }
        }
    }
}
