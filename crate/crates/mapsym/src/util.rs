//! Small shared helpers.

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
