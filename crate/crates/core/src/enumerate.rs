//! Exhaustive generation of small graphs up to isomorphism, by vertex
//! augmentation with canonical-form deduplication. Intended for n <= 7,
//! where the canonical form is the minimum adjacency bitstring over all
//! vertex permutations.

use std::collections::HashSet;

use crate::graph::Graph;

/// Canonical form: the minimum, over all permutations, of the upper
/// triangle of the permuted adjacency matrix read as a bit string.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical form by permutation only scales to tiny graphs");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut bits = 0u64;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(p[i], p[j]) {
                    bits |= 1 << k;
                }
                k += 1;
            }
        }
        best = best.min(bits);
    });
    best
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// All graphs on exactly `n` vertices up to isomorphism, optionally only
/// the connected ones. Builds level by level: every (connected) graph on
/// `k + 1` vertices arises from one on `k` vertices by adding a vertex
/// with some (nonempty, for connected) neighborhood, because every
/// connected graph has a non-cut vertex.
pub fn graphs_upto_iso(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!(n >= 1 && n <= 7, "enumeration is sized for n <= 7");
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let min_subset = if connected_only { 1 } else { 0 };
            for subset in min_subset..(1usize << k) {
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                for v in 0..k {
                    if subset & (1 << v) != 0 {
                        edges.push((v, k));
                    }
                }
                let candidate = Graph::from_edges(k + 1, edges).unwrap();
                if connected_only && !candidate.is_connected() {
                    continue;
                }
                if seen.insert(canonical_form(&candidate)) {
                    next.push(candidate);
                }
            }
        }
        level = next;
    }
    if n == 1 {
        return level;
    }
    level
}

/// All graphs on `1..=n` vertices up to isomorphism.
pub fn graphs_upto_iso_cumulative(n: usize, connected_only: bool) -> Vec<Graph> {
    (1..=n).flat_map(|k| graphs_upto_iso(k, connected_only)).collect()
}
