//! Minor containment for small graphs by contraction search.
//!
//! `H` is a minor of `G` exactly when `H` is a subgraph of some graph
//! obtained from `G` by contracting edges, so the search contracts edges
//! recursively and tests for a subgraph at every node. Forbidden sets used
//! here have minimum degree at least 2, which allows vertices of degree at
//! most 1 to be discarded up front.

use std::collections::HashSet;

use super::graph::SmallGraph;

/// A set of forbidden minors with an edge-count bound beyond which one of
/// them is guaranteed to be present.
pub struct ForbiddenMinors {
    patterns: Vec<SmallGraph>,
    edge_bound: fn(usize) -> usize,
}

impl ForbiddenMinors {
    /// `K4` and `K2,3`: outerplanar graphs have at most `2n - 3` edges.
    pub fn outerplanar() -> Self {
        ForbiddenMinors {
            patterns: vec![SmallGraph::complete(4), SmallGraph::complete_bipartite(2, 3)],
            edge_bound: |n| (2 * n).saturating_sub(3).max(1),
        }
    }

    /// `K5` and `K3,3`: planar graphs have at most `3n - 6` edges.
    pub fn planar() -> Self {
        ForbiddenMinors {
            patterns: vec![SmallGraph::complete(5), SmallGraph::complete_bipartite(3, 3)],
            edge_bound: |n| (3 * n).saturating_sub(6).max(3),
        }
    }

    /// True if `g` has one of the patterns as a minor.
    pub fn found_in(&self, g: &SmallGraph) -> bool {
        let mut failed = HashSet::new();
        self.search(strip_leaves(g), &mut failed)
    }

    fn search(&self, g: SmallGraph, failed: &mut HashSet<SmallGraph>) -> bool {
        let min_n = self.patterns.iter().map(SmallGraph::n).min().unwrap_or(0);
        if g.n() < min_n {
            return false;
        }
        if g.edge_count() > (self.edge_bound)(g.n()) {
            return true;
        }
        if failed.contains(&g) {
            return false;
        }
        if self.patterns.iter().any(|h| is_subgraph(h, &g)) {
            return true;
        }
        if g.n() > min_n {
            for (u, v) in g.edges() {
                if self.search(strip_leaves(&g.contract(u, v)), failed) {
                    return true;
                }
            }
        }
        failed.insert(g);
        false
    }
}

/// Repeatedly removes vertices of degree at most 1.
fn strip_leaves(g: &SmallGraph) -> SmallGraph {
    let mut g = *g;
    while let Some(v) = (0..g.n()).find(|&v| g.degree(v) <= 1) {
        g = g.delete_vertex(v);
    }
    g
}

/// Is `h` isomorphic to a (not necessarily induced) subgraph of `g`?
pub fn is_subgraph(h: &SmallGraph, g: &SmallGraph) -> bool {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return false;
    }
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let mut image = vec![usize::MAX; h.n()];
    extend(h, g, &order, 0, &mut image, 0)
}

fn extend(h: &SmallGraph, g: &SmallGraph, order: &[usize], k: usize, image: &mut [usize], used: u16) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for w in 0..g.n() {
        if used >> w & 1 == 1 || g.degree(w) < h.degree(v) {
            continue;
        }
        let ok = order[..k].iter().all(|&u| !h.has_edge(u, v) || g.has_edge(image[u], w));
        if ok {
            image[v] = w;
            if extend(h, g, order, k + 1, image, used | 1 << w) {
                return true;
            }
        }
    }
    false
}

/// Outerplanarity: no `K4` and no `K2,3` minor.
pub fn is_outerplanar(g: &SmallGraph) -> bool {
    !ForbiddenMinors::outerplanar().found_in(g)
}

/// Planarity of a small graph: no `K5` and no `K3,3` minor.
pub fn is_planar(g: &SmallGraph) -> bool {
    !ForbiddenMinors::planar().found_in(g)
}

/// Independent outerplanarity test: adding a universal vertex keeps the
/// graph planar.
pub fn is_outerplanar_via_apex(g: &SmallGraph) -> bool {
    g.n() < crate::oracle::graph::MAX_N && is_planar(&g.with_apex())
}
