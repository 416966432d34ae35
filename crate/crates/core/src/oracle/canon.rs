//! Canonical labelling by partition refinement and individualisation.
//!
//! Every leaf of the search tree (a discrete equitable partition) orders the
//! vertices; the canonical code is the largest edge mask over all leaves.
//! The tree depends only on the isomorphism class, so the code does too.

use super::graph::SmallGraph;

/// Isomorphism invariant that separates non-isomorphic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

impl CanonicalForm {
    /// A representative graph of the class.
    pub fn graph(&self) -> SmallGraph {
        SmallGraph::from_mask(self.n, self.code)
    }
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into other cells until stable.
fn refine(g: &SmallGraph, mut p: Partition) -> Partition {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < p.len() {
            let splitter: u16 = p[w].iter().fold(0, |m, &v| m | 1 << v);
            let mut next: Partition = Vec::with_capacity(p.len());
            for cell in &p {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((g.row(v) & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != p.len() {
                changed = true;
                p = next;
            }
            w += 1;
        }
        if !changed {
            return p;
        }
    }
}

fn leaf_code(g: &SmallGraph, p: &Partition) -> u64 {
    let order: Vec<usize> = p.iter().map(|c| c[0]).collect();
    let n = order.len();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

fn search(g: &SmallGraph, p: Partition, best: &mut Option<u64>) {
    let p = refine(g, p);
    let Some(target) = p.iter().position(|c| c.len() > 1) else {
        let code = leaf_code(g, &p);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    };
    for &v in &p[target] {
        let mut q: Partition = Vec::with_capacity(p.len() + 1);
        q.extend_from_slice(&p[..target]);
        q.push(vec![v]);
        q.push(p[target].iter().copied().filter(|&u| u != v).collect());
        q.extend_from_slice(&p[target + 1..]);
        search(g, q, best);
    }
}

fn canonical_from(g: &SmallGraph, p: Partition) -> CanonicalForm {
    let mut best = None;
    if g.n() == 0 {
        return CanonicalForm { n: 0, code: 0 };
    }
    search(g, p, &mut best);
    CanonicalForm { n: g.n(), code: best.unwrap_or(0) }
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    canonical_from(g, vec![(0..g.n()).collect()])
}

/// Canonical form of `g` with vertex `root` distinguished.
pub fn rooted_canonical_form(g: &SmallGraph, root: usize) -> CanonicalForm {
    let rest: Vec<usize> = (0..g.n()).filter(|&v| v != root).collect();
    let p = if rest.is_empty() { vec![vec![root]] } else { vec![vec![root], rest] };
    canonical_from(g, p)
}

/// Number of vertex orbits under the automorphism group.
pub fn vertex_orbit_count(g: &SmallGraph) -> usize {
    let mut forms: Vec<CanonicalForm> = (0..g.n()).map(|v| rooted_canonical_form(g, v)).collect();
    forms.sort_unstable();
    forms.dedup();
    forms.len()
}
