//! Exhaustive corpora of small connected simple graphs, used by the
//! cross-validation sweeps.
//!
//! Two flavors: every labeled connected graph on `n` vertices (edge
//! subsets filtered by connectivity), and one representative per
//! isomorphism class (grown by attaching a new vertex to every vertex
//! subset of every smaller representative, deduplicated by a canonical
//! edge code). Labeled counts for n = 3..6 are 4, 38, 728, 26704;
//! representative counts for n = 1..7 are 1, 1, 2, 6, 21, 112, 853.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// All pairs `(u, v)`, `u < v`, in the fixed order used by edge codes.
fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Every connected simple graph on `n` labeled vertices, ordered by
/// ascending edge code. Feasible for `n <= 6` (32768 subsets there).
pub fn labeled_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 6, "labeled enumeration is sized for n <= 6");
    let pairs = vertex_pairs(n);
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(t, _)| mask >> t & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::new(n, &edges).expect("pairs are loop-free and in range");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Edge-subset bitmask of a graph in the `vertex_pairs` order; the
/// label-invariant minimum over all vertex permutations is a canonical
/// form. Needs the pair count to fit in 64 bits, i.e. `n <= 11`.
pub fn edge_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "edge code is sized for n <= 11");
    let mut code = 0u64;
    for (t, &(u, v)) in vertex_pairs(n).iter().enumerate() {
        if g.has_edge(u, v) {
            code |= 1 << t;
        }
    }
    code
}

/// Minimum edge code over all relabelings — equal exactly for
/// isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let pairs = vertex_pairs(n);
    let mut best = u64::MAX;

    // Heap's algorithm over the label images.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut consider = |perm: &[usize]| {
        let mut code = 0u64;
        for (t, &(u, v)) in pairs.iter().enumerate() {
            if g.has_edge(perm[u], perm[v]) {
                code |= 1 << t;
            }
        }
        best = best.min(code);
    };
    consider(&perm);
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            consider(&perm);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    best
}

/// Rebuilds a graph from an edge code.
fn graph_from_code(n: usize, code: u64) -> Graph {
    let edges: Vec<_> = vertex_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(t, _)| code >> t & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::new(n, &edges).expect("pairs are loop-free and in range")
}

/// One representative per isomorphism class of connected simple graphs
/// on `n` vertices, ordered by canonical code.
///
/// Built inductively: every connected graph has a vertex whose removal
/// leaves it connected (a leaf of any spanning tree), so attaching a
/// new vertex to each nonempty vertex subset of each smaller
/// representative reaches every class.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 7, "isomorphism-pruned enumeration is sized for n <= 7");
    let mut reps = vec![Graph::new(1, &[]).expect("single vertex")];
    for size in 2..=n {
        let mut codes = BTreeSet::new();
        for g in &reps {
            let old = size - 1;
            let edges_base = g.edges();
            for mask in 1u32..1 << old {
                let mut edges = edges_base.clone();
                edges.extend((0..old).filter(|v| mask >> v & 1 == 1).map(|v| (v, old)));
                let candidate = Graph::new(size, &edges).expect("extension edges are valid");
                codes.insert(canonical_code(&candidate));
            }
        }
        reps = codes.into_iter().map(|code| graph_from_code(size, code)).collect();
    }
    reps
}
