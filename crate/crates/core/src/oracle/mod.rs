//! Brute-force census of unlabeled outerplanar graphs on a few vertices.
//!
//! Every labeled graph is generated, outerplanarity is decided by a
//! forbidden-minor search, and survivors are reduced to canonical forms.
//! This is independent of the generating-function machinery and serves as
//! ground truth for it.

mod canon;
mod graph;
mod minor;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;

pub use canon::{canonical_form, rooted_canonical_form, vertex_orbit_count, CanonicalForm};
pub use graph::{SmallGraph, MAX_N};
pub use minor::{is_outerplanar, is_outerplanar_via_apex, is_planar, is_subgraph, ForbiddenMinors};

use crate::error::{usage, Result};

/// Largest `n` scanned without opting in.
pub const DEFAULT_LIMIT: usize = 7;
/// Largest `n` scanned at all (`2^28` labeled graphs).
pub const SLOW_LIMIT: usize = 8;

/// Classification of one isomorphism class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    pub edges: usize,
    pub connected: bool,
    pub two_connected: bool,
    pub bipartite: bool,
}

impl ClassKey {
    pub fn of(g: &SmallGraph) -> Self {
        ClassKey {
            edges: g.edge_count(),
            connected: g.is_connected(),
            two_connected: g.is_two_connected_or_edge(),
            bipartite: g.is_bipartite(),
        }
    }
}

/// Counts of unlabeled outerplanar graphs on `n` vertices by class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCensus {
    pub n: usize,
    pub entries: BTreeMap<ClassKey, u64>,
}

impl GraphCensus {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn count_where(&self, pred: impl Fn(&ClassKey) -> bool) -> u64 {
        self.entries.iter().filter(|(k, _)| pred(k)).map(|(_, v)| v).sum()
    }

    pub fn connected(&self) -> u64 {
        self.count_where(|k| k.connected)
    }

    pub fn two_connected(&self) -> u64 {
        self.count_where(|k| k.two_connected)
    }

    pub fn bipartite(&self) -> u64 {
        self.count_where(|k| k.bipartite)
    }

    /// Counts by edge number restricted to classes satisfying `pred`.
    pub fn by_edges(&self, pred: impl Fn(&ClassKey) -> bool) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.entries {
            if pred(k) {
                *out.entry(k.edges).or_insert(0) += v;
            }
        }
        out
    }

    /// CSV with header `n,m,connected,two_connected,bipartite,count`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,m,connected,two_connected,bipartite,count\n");
        for (k, v) in &self.entries {
            let _ = writeln!(s, "{},{},{},{},{},{}", self.n, k.edges, k.connected, k.two_connected, k.bipartite, v);
        }
        s
    }
}

/// Vertex-rooted classes: each unlabeled class contributes its number of
/// vertex orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedCensus {
    pub n: usize,
    pub entries: BTreeMap<ClassKey, u64>,
}

impl RootedCensus {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn count_where(&self, pred: impl Fn(&ClassKey) -> bool) -> u64 {
        self.entries.iter().filter(|(k, _)| pred(k)).map(|(_, v)| v).sum()
    }
}

fn check_limit(n: usize, allow_slow: bool) -> Result<()> {
    let limit = if allow_slow { SLOW_LIMIT } else { DEFAULT_LIMIT };
    if n > limit {
        let hint = if allow_slow { "" } else { " (8 needs the slow opt-in)" };
        return usage(format!("census supports n <= {limit}{hint}, got {n}"));
    }
    Ok(())
}

/// Canonical forms of all unlabeled outerplanar graphs on `n` vertices.
pub fn outerplanar_classes(n: usize, allow_slow: bool) -> Result<Vec<CanonicalForm>> {
    check_limit(n, allow_slow)?;
    let bits = n * n.saturating_sub(1) / 2;
    let max_edges = if n >= 2 { 2 * n - 3 } else { 0 } as u32;
    let total: u64 = 1 << bits;
    let chunk: u64 = 1 << 12;
    let chunks = total.div_ceil(chunk);
    let found: HashSet<CanonicalForm> = (0..chunks)
        .into_par_iter()
        .fold(HashSet::new, |mut acc, c| {
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                if mask.count_ones() > max_edges.max(1) && n >= 2 {
                    continue;
                }
                let g = SmallGraph::from_mask(n, mask);
                if is_outerplanar(&g) {
                    acc.insert(canonical_form(&g));
                }
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let sorted: BTreeSet<CanonicalForm> = found.into_iter().collect();
    Ok(sorted.into_iter().collect())
}

/// Census of unlabeled outerplanar graphs on `n <= 7` vertices (`8` when
/// `allow_slow` is set).
pub fn census(n: usize, allow_slow: bool) -> Result<GraphCensus> {
    let mut entries = BTreeMap::new();
    for f in outerplanar_classes(n, allow_slow)? {
        *entries.entry(ClassKey::of(&f.graph())).or_insert(0) += 1;
    }
    Ok(GraphCensus { n, entries })
}

pub fn rooted_census(n: usize, allow_slow: bool) -> Result<RootedCensus> {
    let mut entries = BTreeMap::new();
    for f in outerplanar_classes(n, allow_slow)? {
        let g = f.graph();
        *entries.entry(ClassKey::of(&g)).or_insert(0) += vertex_orbit_count(&g) as u64;
    }
    Ok(RootedCensus { n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forbidden_minors() {
        assert!(is_outerplanar(&SmallGraph::cycle(5)));
        assert!(!is_outerplanar(&SmallGraph::complete(4)));
        assert!(!is_outerplanar(&SmallGraph::complete_bipartite(2, 3)));
        // K4 subdivided still has a K4 minor.
        let mut g = SmallGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 4), (4, 3)]);
        assert!(!is_outerplanar(&g));
        g = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)]);
        assert!(is_outerplanar(&g));
        assert!(!is_planar(&SmallGraph::complete(5)));
        assert!(is_planar(&SmallGraph::complete(4)));
    }

    #[test]
    fn small_censuses() {
        assert_eq!(census(1, false).unwrap().total(), 1);
        let c4 = census(4, false).unwrap();
        assert_eq!(c4.total(), 10);
        assert_eq!(census(5, false).unwrap().connected(), 13);
        assert!(census(8, false).is_err());
        let r = rooted_census(3, false).unwrap();
        assert_eq!(r.count_where(|k| k.connected), 3);
        assert_eq!(rooted_census(2, false).unwrap().count_where(|k| k.connected), 1);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = SmallGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]);
        let f = canonical_form(&g);
        for perm in [[5, 4, 3, 2, 1, 0], [1, 2, 3, 4, 5, 0], [2, 0, 1, 5, 3, 4]] {
            assert_eq!(canonical_form(&g.relabel(&perm)), f);
        }
        assert_ne!(canonical_form(&SmallGraph::cycle(6)), f);
    }
}
