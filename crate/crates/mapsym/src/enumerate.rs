//! Exhaustive enumeration of the operations with a given inflation factor.
//!
//! Chamber complexes on k triangles are generated as colour-respecting
//! partial matchings on the edge slots, filtered down to connected,
//! colour-consistent discs; every admissible placement of the special
//! vertices is validated; the survivors are deduplicated up to isomorphism.
//! Filtering by polyhedrality-preservation then yields the complete
//! catalogue of c3 operations for each inflation factor, against which the
//! shipped fixtures are pinned.

use crate::complex::{Assembled, PatchComplex};
use crate::patch::OperationPatch;
use crate::util::UnionFind;

/// All partial matchings on `0..k`, each as a list of pairs.
fn partial_matchings(k: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(free: &[usize], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        match free.first() {
            None => out.push(cur.clone()),
            Some(&a) => {
                rec(&free[1..], cur, out);
                for i in 1..free.len() {
                    let b = free[i];
                    let rest: Vec<usize> =
                        free[1..].iter().copied().filter(|&x| x != b).collect();
                    cur.push((a, b));
                    rec(&rest, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    let free: Vec<usize> = (0..k).collect();
    rec(&free, &mut Vec::new(), &mut out);
    out
}

/// Quick structural filter before assembly: connected, bipartite adjacency,
/// disc Euler count.
fn quick_disc_check(adj: &[[Option<usize>; 3]]) -> bool {
    let k = adj.len();
    // connectivity and bipartiteness of the chamber adjacency graph
    let mut parity = vec![u8::MAX; k];
    parity[0] = 0;
    let mut stack = vec![0usize];
    let mut seen = 1;
    while let Some(t) = stack.pop() {
        for c in 0..3 {
            if let Some(u) = adj[t][c] {
                let want = 1 - parity[t];
                if parity[u] == u8::MAX {
                    parity[u] = want;
                    seen += 1;
                    stack.push(u);
                } else if parity[u] != want {
                    return false;
                }
            }
        }
    }
    if seen != k {
        return false;
    }
    // Euler count with F = chambers + outer face
    let mut uf = UnionFind::new(3 * k);
    let mut glued = 0;
    for (t, row) in adj.iter().enumerate() {
        for (c, slot) in row.iter().enumerate() {
            if let Some(u) = *slot {
                if u > t {
                    glued += 1;
                }
                for b in 0..3 {
                    if b != c {
                        uf.union(3 * t + b, 3 * u + b);
                    }
                }
            }
        }
    }
    let (_, v, _) = uf.canonical();
    let e = glued + (3 * k - 2 * glued);
    let boundary = 3 * k - 2 * glued;
    if boundary < 3 {
        return false;
    }
    v as i64 - e as i64 + (k as i64 + 1) == 2
}

/// Every valid operation with the given inflation factor, up to
/// isomorphism. Deterministic order.
pub fn enumerate_operations(inflation: usize) -> Vec<OperationPatch> {
    assert!(inflation >= 1, "inflation factor must be positive");
    let k = inflation;
    let matchings = partial_matchings(k);
    let mut found: Vec<OperationPatch> = Vec::new();
    let mut adj = vec![[None; 3]; k];
    for m0 in &matchings {
        for m1 in &matchings {
            for m2 in &matchings {
                for row in adj.iter_mut() {
                    *row = [None; 3];
                }
                for &(a, b) in m0 {
                    adj[a][0] = Some(b);
                    adj[b][0] = Some(a);
                }
                for &(a, b) in m1 {
                    adj[a][1] = Some(b);
                    adj[b][1] = Some(a);
                }
                for &(a, b) in m2 {
                    adj[a][2] = Some(b);
                    adj[b][2] = Some(a);
                }
                if !quick_disc_check(&adj) {
                    continue;
                }
                let cx = PatchComplex { adj: adj.clone() };
                let open = match cx.assemble_open() {
                    Ok(a) => a,
                    Err(_) => continue,
                };
                collect_valid_patches(&open, &mut found);
            }
        }
    }
    found
}

/// The c3 subset: operations whose results stay polyhedral.
pub fn enumerate_c3_operations(inflation: usize) -> Vec<OperationPatch> {
    enumerate_operations(inflation)
        .into_iter()
        .filter(|p| p.is_c3())
        .collect()
}

/// Tries every admissible placement of the specials on an assembled disc
/// and keeps the valid patches, deduplicated against `found`.
fn collect_valid_patches(open: &Assembled, found: &mut Vec<OperationPatch>) {
    let n = open.colors.len();
    // degree conditions that no special choice can repair
    let mut deg2_color1 = Vec::new();
    for v in 0..n {
        let deg = open.rotation.degree(v);
        if open.colors[v] != 1 {
            continue;
        }
        if open.on_boundary[v] {
            match deg {
                3 => {}
                2 => deg2_color1.push(v),
                _ => return,
            }
        } else if deg != 4 {
            return;
        }
    }
    if deg2_color1.len() > 1 {
        return;
    }

    let boundary: Vec<usize> = (0..n).filter(|&v| open.on_boundary[v]).collect();
    let non1: Vec<usize> = boundary
        .iter()
        .copied()
        .filter(|&v| open.colors[v] != 1)
        .collect();
    let v1_candidates: Vec<usize> = if let Some(&forced) = deg2_color1.first() {
        vec![forced]
    } else {
        non1.clone()
    };

    for &v0 in &non1 {
        for &v2 in &non1 {
            if v0 == v2 {
                continue;
            }
            for &v1 in &v1_candidates {
                if v1 == v0 || v1 == v2 {
                    continue;
                }
                let raw = open.with_special_vertices([v0, v1, v2]);
                if let Ok(patch) = OperationPatch::validate(raw) {
                    if !found.iter().any(|q| q.isomorphic(&patch).is_some()) {
                        found.push(patch);
                    }
                }
            }
        }
    }
}

/// Groups operations into dual-conjugation orbits
/// {O, dual∘O, O∘dual, dual∘O∘dual}; returns index groups.
pub fn dual_orbits(patches: &[OperationPatch]) -> Vec<Vec<usize>> {
    let mut orbit_of = vec![usize::MAX; patches.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..patches.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let p = &patches[i];
        let conjugates = [
            p.clone(),
            p.post_dual(),
            p.pre_dual(),
            p.pre_dual().post_dual(),
        ];
        let mut members = Vec::new();
        for (j, q) in patches.iter().enumerate() {
            if orbit_of[j] == usize::MAX && conjugates.iter().any(|c| c.isomorphic(q).is_some()) {
                orbit_of[j] = id;
                members.push(j);
            }
        }
        orbits.push(members);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts() {
        assert_eq!(partial_matchings(2).len(), 2);
        assert_eq!(partial_matchings(4).len(), 10);
        assert_eq!(partial_matchings(6).len(), 76);
    }

    #[test]
    fn tiny_inflation_catalogue() {
        let one = enumerate_c3_operations(1);
        assert_eq!(one.len(), 2); // identity and dual
        let two = enumerate_c3_operations(2);
        assert_eq!(two.len(), 2); // ambo and join
        assert_eq!(dual_orbits(&one).len(), 1);
        assert_eq!(dual_orbits(&two).len(), 1);
    }

    #[test]
    fn inflation_three_catalogue() {
        let three = enumerate_c3_operations(3);
        assert_eq!(three.len(), 4); // truncate, needle, zip, kis
        assert_eq!(dual_orbits(&three).len(), 1);
        let truncate = crate::builtin::builtin("truncate").unwrap();
        assert!(three.iter().any(|p| p.isomorphic(&truncate).is_some()));
    }
}
