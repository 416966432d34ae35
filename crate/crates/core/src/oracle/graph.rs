use std::fmt;

/// Largest supported vertex count: the edge set must fit in a `u64` mask.
pub const MAX_N: usize = 11;

/// Simple undirected graph on at most [`MAX_N`] vertices, stored as
/// adjacency bit rows.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    rows: [u16; MAX_N],
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_N, "at most {MAX_N} vertices");
        SmallGraph { n, rows: [0; MAX_N] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Graph whose edges are the set bits of `mask`, pairs `(i, j)`, `i < j`,
    /// enumerated in lexicographic order.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut g = Self::empty(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    /// Inverse of [`SmallGraph::from_mask`].
    pub fn mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for i in 0..a {
            for j in a..a + b {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "invalid edge ({u}, {v})");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn row(&self, v: usize) -> u16 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Vertex `old` is renamed `perm[old]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Removes vertex `v`, shifting higher labels down.
    pub fn delete_vertex(&self, v: usize) -> Self {
        let mut g = Self::empty(self.n - 1);
        let map = |x: usize| if x > v { x - 1 } else { x };
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(map(a), map(b));
            }
        }
        g
    }

    /// Contracts edge `uv` into `u` and removes `v`.
    pub fn contract(&self, u: usize, v: usize) -> Self {
        let mut h = *self;
        let merged = (h.rows[u] | h.rows[v]) & !(1 << u) & !(1 << v);
        for w in 0..h.n {
            if merged >> w & 1 == 1 {
                h.rows[w] |= 1 << u;
            }
        }
        h.rows[u] = merged;
        h.delete_vertex(v)
    }

    /// Adds a vertex adjacent to every existing vertex.
    pub fn with_apex(&self) -> Self {
        let mut g = Self::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for u in 0..self.n {
            g.add_edge(u, self.n);
        }
        g
    }

    fn component_mask(&self, start: usize, removed: u16) -> u16 {
        let mut seen = 1u16 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.rows[v] & !seen & !removed;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    fn all_mask(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_mask(0, 0) == self.all_mask()
    }

    pub fn component_count(&self) -> usize {
        let mut left = self.all_mask();
        let mut k = 0;
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            left &= !self.component_mask(v, 0);
            k += 1;
        }
        k
    }

    /// Two-connected, or a single edge (the dissection convention).
    pub fn is_two_connected_or_edge(&self) -> bool {
        match self.n {
            0 | 1 => false,
            2 => self.edge_count() == 1,
            _ => {
                self.is_connected()
                    && (0..self.n).all(|v| {
                        let removed = 1u16 << v;
                        let start = if v == 0 { 1 } else { 0 };
                        self.component_mask(start, removed) == self.all_mask() & !removed
                    })
            }
        }
    }

    /// Two-colourability by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = [u8::MAX; MAX_N];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                let mut r = self.rows[v];
                while r != 0 {
                    let w = r.trailing_zeros() as usize;
                    r &= r - 1;
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push(w);
                    } else if colour[w] == colour[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}
