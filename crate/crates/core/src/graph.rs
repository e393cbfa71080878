//! Simple undirected graphs with dense vertex ids `0..n-1`, the basic
//! parameters (girth, degeneracy, biclique number) and the brute-force
//! path oracle used by the reachability tests.

use std::collections::VecDeque;
use std::fmt;

use crate::order::LinearOrder;
use crate::{Budget, Error, Result};

/// Girth of a graph: length of its shortest cycle, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GirthValue {
    Finite(usize),
    Infinite,
}

impl GirthValue {
    pub fn as_finite(&self) -> Option<usize> {
        match self {
            GirthValue::Finite(g) => Some(*g),
            GirthValue::Infinite => None,
        }
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(g) => write!(f, "{g}"),
            GirthValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Simple undirected graph. Immutable after construction; neighbor lists
/// are kept sorted so edge queries are binary searches and edge iteration
/// is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range
    /// endpoints are rejected; duplicate edges collapse to one.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexRange { vertex: w, n });
                }
            }
            if !g.has_edge(u, v) {
                g.adj[u].push(v);
                g.adj[v].push(u);
                g.m += 1;
            }
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(move |u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// Star with one center (vertex 0) and `k` leaves.
    pub fn star(k: usize) -> Self {
        Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).unwrap()
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(d)` if every vertex has degree exactly `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        Graph::from_edges(
            n,
            (0..n).flat_map(|u| (u + 1..n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v))),
        )
        .unwrap()
    }

    /// Induced subgraph on `verts` (need not be sorted). Returns the
    /// subgraph with compacted ids and the map from new id to old vertex.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut map = verts.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut inv = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| inv[u] != usize::MAX && inv[v] != usize::MAX)
            .map(|(u, v)| (inv[u], inv[v]));
        (Graph::from_edges(map.len(), edges).unwrap(), map)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Connected components, each as a sorted vertex list; components are
    /// ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Girth by BFS from every vertex: the first non-tree edge met on level
    /// `k` closes a cycle of length `dist(u)+dist(v)+1`, which is an upper
    /// bound on the girth, and exact for a start vertex on a shortest cycle.
    pub fn girth(&self) -> GirthValue {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            GirthValue::Infinite
        } else {
            GirthValue::Finite(best)
        }
    }

    /// Degeneracy by repeated minimum-degree removal. Also returns the
    /// removal order reversed as a linear order: under it every vertex has
    /// at most `degeneracy` earlier neighbors.
    pub fn degeneracy(&self) -> (usize, LinearOrder) {
        let n = self.n();
        if n == 0 {
            return (0, LinearOrder::identity(0));
        }
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut removal = Vec::with_capacity(n);
        let mut degeneracy = 0;
        for _ in 0..n {
            // smallest remaining degree, ties by vertex id
            let u = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            degeneracy = degeneracy.max(deg[u]);
            removed[u] = true;
            removal.push(u);
            for &w in &self.adj[u] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        removal.reverse();
        (degeneracy, LinearOrder::from_sequence(removal).unwrap())
    }

    /// Biclique number: the maximum `s` such that `K_{s,s}` occurs as a
    /// (not necessarily induced) subgraph. Branch search over candidate
    /// left sides, pruned by common neighborhoods; `budget` caps the
    /// number of branch nodes.
    pub fn bomega(&self, budget: &mut Budget) -> Result<usize> {
        if self.m == 0 {
            return Ok(0);
        }
        let mut s = 1; // any edge is a K_{1,1}
        while 2 * (s + 1) <= self.n() && self.has_biclique(s + 1, budget)? {
            s += 1;
        }
        Ok(s)
    }

    /// Whether `K_{s,s}` occurs as a subgraph.
    pub fn has_biclique(&self, s: usize, budget: &mut Budget) -> Result<bool> {
        if s == 0 {
            return Ok(true);
        }
        if 2 * s > self.n() {
            return Ok(false);
        }
        let candidates: Vec<usize> = (0..self.n()).filter(|&v| self.degree(v) >= s).collect();
        if candidates.len() < 2 * s {
            return Ok(false);
        }
        let mut side = Vec::with_capacity(s);
        self.biclique_rec(&candidates, 0, s, &mut side, None, budget)
    }

    fn biclique_rec(
        &self,
        candidates: &[usize],
        from: usize,
        s: usize,
        side: &mut Vec<usize>,
        common: Option<Vec<usize>>,
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if side.len() == s {
            let common = common.expect("nonempty side has a common neighborhood");
            let outside = common.iter().filter(|v| !side.contains(v)).count();
            return Ok(outside >= s);
        }
        for idx in from..candidates.len() {
            if candidates.len() - idx < s - side.len() {
                break;
            }
            let v = candidates[idx];
            let next_common: Vec<usize> = match &common {
                None => self.adj[v].clone(),
                Some(c) => c.iter().copied().filter(|&w| self.has_edge(v, w)).collect(),
            };
            // the other side must come out of the common neighborhood
            if next_common.len() < s {
                continue;
            }
            side.push(v);
            if self.biclique_rec(candidates, idx + 1, s, side, Some(next_common), budget)? {
                side.pop();
                return Ok(true);
            }
            side.pop();
        }
        Ok(false)
    }

    /// Enumerates all simple paths of length at most `r` (edges) between
    /// `u` and `v`, as vertex sequences starting at `u`. Bounded oracle:
    /// exceeding `budget` is an error, never a truncated answer.
    pub fn distance_paths(
        &self,
        u: usize,
        v: usize,
        r: usize,
        budget: &mut Budget,
    ) -> Result<Vec<Vec<usize>>> {
        for w in [u, v] {
            if w >= self.n() {
                return Err(Error::VertexRange { vertex: w, n: self.n() });
            }
        }
        let mut paths = Vec::new();
        let mut on_path = vec![false; self.n()];
        let mut path = vec![u];
        on_path[u] = true;
        self.paths_rec(v, r, &mut path, &mut on_path, &mut paths, budget)?;
        Ok(paths)
    }

    fn paths_rec(
        &self,
        target: usize,
        r: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        let last = *path.last().unwrap();
        if last == target && path.len() > 1 {
            out.push(path.clone());
            return Ok(()); // simple paths end at the target
        }
        if path.len() == r + 1 {
            return Ok(());
        }
        for &w in &self.adj[last] {
            if !on_path[w] {
                path.push(w);
                on_path[w] = true;
                self.paths_rec(target, r, path, on_path, out, budget)?;
                on_path[w] = false;
                path.pop();
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Graph file format: `p tww <n> <m>` header, then one `<u> <v>` line per
// edge with 1-based vertex ids; comment lines start with `c`.
// ---------------------------------------------------------------------------

/// A graph loaded from a file, together with the original 1-based labels
/// (labels are compacted when they are not the dense range `1..=n`).
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// `labels[v]` is the label in the file for internal vertex `v`.
    pub labels: Vec<usize>,
}

pub fn parse_graph(text: &str) -> Result<LoadedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw_edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_whitespace();
        if header.is_none() {
            let (p, kind) = (fields.next(), fields.next());
            if p != Some("p") || kind != Some("tww") {
                return Err(Error::Parse {
                    line: lineno + 1,
                    reason: "expected header `p tww <n> <m>`".into(),
                });
            }
            let parse = |f: Option<&str>| {
                f.and_then(|x| x.parse::<usize>().ok()).ok_or(Error::Parse {
                    line: lineno + 1,
                    reason: "header needs two integers".into(),
                })
            };
            header = Some((parse(fields.next())?, parse(fields.next())?));
        } else {
            let mut num = |what: &str| {
                fields
                    .next()
                    .and_then(|x| x.parse::<usize>().ok())
                    .ok_or(Error::Parse { line: lineno + 1, reason: format!("expected {what}") })
            };
            let (u, v) = (num("edge endpoint")?, num("edge endpoint")?);
            if u == 0 || v == 0 {
                return Err(Error::Parse { line: lineno + 1, reason: "vertex ids are 1-based".into() });
            }
            raw_edges.push((u, v));
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, reason: "missing `p tww` header".into() })?;
    if raw_edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            reason: format!("header announces {m} edges but {} were given", raw_edges.len()),
        });
    }
    let dense = raw_edges.iter().all(|&(u, v)| u <= n && v <= n);
    let labels: Vec<usize>;
    if dense {
        labels = (1..=n).collect();
    } else {
        // compact arbitrary labels, keeping the label map
        let mut all: Vec<usize> = raw_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        all.sort_unstable();
        all.dedup();
        if all.len() > n {
            return Err(Error::Parse {
                line: 0,
                reason: format!("{} distinct labels for {n} vertices", all.len()),
            });
        }
        let mut l: Vec<usize> = all;
        while l.len() < n {
            l.push(l.last().map_or(1, |x| x + 1)); // isolated vertices get fresh labels
        }
        labels = l;
    }
    let index = |label: usize| labels.binary_search(&label).expect("label recorded");
    let edges: Vec<(usize, usize)> =
        raw_edges.into_iter().map(|(u, v)| (index(u), index(v))).collect();
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in &edges {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse { line: 0, reason: format!("duplicate edge {}-{}", labels[u], labels[v]) });
        }
    }
    Ok(LoadedGraph { graph: Graph::from_edges(n, edges)?, labels })
}

/// Writes the graph file; edges sorted lexicographically, ids 1-based.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p tww {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force biclique test: enumerate both sides explicitly.
    fn bomega_naive(g: &Graph) -> usize {
        let n = g.n();
        let verts: Vec<usize> = (0..n).collect();
        let mut best = 0;
        for s in 1..=n / 2 {
            let mut found = false;
            for left in subsets(&verts, s) {
                let rest: Vec<usize> = verts.iter().copied().filter(|v| !left.contains(v)).collect();
                for right in subsets(&rest, s) {
                    if left.iter().all(|&u| right.iter().all(|&v| g.has_edge(u, v))) {
                        found = true;
                        break;
                    }
                }
                if found {
                    break;
                }
            }
            if found {
                best = s;
            } else {
                break;
            }
        }
        best
    }

    fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(items: &[usize], k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in from..items.len() {
                cur.push(items[i]);
                rec(items, k, i + 1, cur, out);
                cur.pop();
            }
        }
        rec(items, k, 0, &mut cur, &mut out);
        out
    }

    /// All simple cycles (each reported once) via DFS; oracle for girth.
    fn shortest_cycle_naive(g: &Graph) -> Option<usize> {
        let n = g.n();
        let mut best: Option<usize> = None;
        let mut path: Vec<usize> = Vec::new();
        let mut on_path = vec![false; n];
        fn rec(
            g: &Graph,
            start: usize,
            path: &mut Vec<usize>,
            on_path: &mut Vec<bool>,
            best: &mut Option<usize>,
        ) {
            let last = *path.last().unwrap();
            for &w in g.neighbors(last) {
                if w == start && path.len() >= 3 {
                    let len = path.len();
                    *best = Some(best.map_or(len, |b| b.min(len)));
                } else if w > start && !on_path[w] {
                    path.push(w);
                    on_path[w] = true;
                    rec(g, start, path, on_path, best);
                    on_path[w] = false;
                    path.pop();
                }
            }
        }
        for s in 0..n {
            path.clear();
            path.push(s);
            on_path.fill(false);
            on_path[s] = true;
            rec(g, s, &mut path, &mut on_path, &mut best);
        }
        best
    }

    fn budget() -> Budget {
        Budget::default_for("test")
    }

    #[test]
    fn girth_examples() {
        assert_eq!(Graph::complete(4).girth(), GirthValue::Finite(3));
        assert_eq!(Graph::cycle(7).girth(), GirthValue::Finite(7));
        assert_eq!(Graph::path(5).girth(), GirthValue::Infinite);
        assert_eq!(Graph::petersen().girth(), GirthValue::Finite(5));
    }

    #[test]
    fn girth_matches_cycle_enumeration() {
        let graphs = vec![
            Graph::complete(5),
            Graph::cycle(6),
            Graph::cycle(12),
            Graph::petersen(),
            Graph::complete_bipartite(3, 4),
            Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap(),
            // two cycles of different lengths sharing a path
            Graph::from_edges(
                12,
                [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 11), (11, 0)],
            )
            .unwrap(),
        ];
        for g in &graphs {
            assert_eq!(g.girth().as_finite(), shortest_cycle_naive(g), "graph {g:?}");
        }
    }

    #[test]
    fn bomega_examples() {
        assert_eq!(Graph::empty(4).bomega(&mut budget()).unwrap(), 0);
        assert_eq!(Graph::complete_bipartite(3, 3).bomega(&mut budget()).unwrap(), 3);
        // C_5 has no K_{2,2}: checked below against the subset enumeration
        assert_eq!(Graph::cycle(5).bomega(&mut budget()).unwrap(), 1);
        assert_eq!(bomega_naive(&Graph::cycle(5)), 1);
    }

    #[test]
    fn bomega_of_cliques_is_half_n() {
        for n in 2..=8 {
            let g = Graph::complete(n);
            assert_eq!(g.bomega(&mut budget()).unwrap(), n / 2);
            assert_eq!(bomega_naive(&g), n / 2);
        }
    }

    #[test]
    fn bomega_budget_error() {
        let g = Graph::complete_bipartite(8, 8);
        let mut tiny = Budget::new("bomega", 3);
        assert!(matches!(g.bomega(&mut tiny), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(Graph::complete(5).degeneracy().0, 4);
        assert_eq!(Graph::star(3).degeneracy().0, 1);
        assert_eq!(Graph::path(6).degeneracy().0, 1);
        assert_eq!(Graph::cycle(4).degeneracy().0, 2);
    }

    #[test]
    fn degeneracy_order_has_bounded_back_degree() {
        for g in [Graph::petersen(), Graph::complete(6), Graph::cycle(9)] {
            let (d, ord) = g.degeneracy();
            for v in 0..g.n() {
                let back = g.neighbors(v).iter().filter(|&&w| ord.rank(w) < ord.rank(v)).count();
                assert!(back <= d, "vertex {v} has {back} earlier neighbors, degeneracy {d}");
            }
        }
    }

    #[test]
    fn distance_paths_examples() {
        let p3 = Graph::path(3);
        assert!(p3.distance_paths(0, 2, 1, &mut budget()).unwrap().is_empty());
        assert_eq!(p3.distance_paths(0, 2, 2, &mut budget()).unwrap(), vec![vec![0, 1, 2]]);
        let c4 = Graph::cycle(4);
        let paths = c4.distance_paths(0, 2, 2, &mut budget()).unwrap();
        assert_eq!(paths.len(), 2);
    }

    #[test]
    fn graph_file_round_trip() {
        let g = Graph::petersen();
        let text = write_graph(&g);
        let loaded = parse_graph(&text).unwrap();
        assert_eq!(loaded.graph, g);
        assert_eq!(write_graph(&loaded.graph), text);
    }

    #[test]
    fn graph_file_with_comments_and_sparse_labels() {
        let text = "c a comment\np tww 3 2\nc another\n10 20\n20 30\n";
        let loaded = parse_graph(text).unwrap();
        assert_eq!(loaded.graph.n(), 3);
        assert_eq!(loaded.graph.m(), 2);
        assert_eq!(loaded.labels, vec![10, 20, 30]);
    }

    #[test]
    fn graph_file_errors() {
        assert!(parse_graph("p tww 2 1\n1 1\n").is_err()); // self-loop
        assert!(parse_graph("p tww 2 2\n1 2\n").is_err()); // edge count mismatch
        assert!(parse_graph("p edge 2 1\n1 2\n").is_err()); // wrong header
        assert!(parse_graph("p tww 2 2\n1 2\n2 1\n").is_err()); // duplicate edge
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bomega_monotone_under_edge_addition(g in arb_graph(8), extra in proptest::collection::vec((0usize..8, 0usize..8), 0..6)) {
            let n = g.n();
            let mut edges: Vec<(usize, usize)> = g.edges().collect();
            for (u, v) in extra {
                let (u, v) = (u % n, v % n);
                if u != v {
                    edges.push((u, v));
                }
            }
            let bigger = Graph::from_edges(n, edges).unwrap();
            let a = g.bomega(&mut budget()).unwrap();
            let b = bigger.bomega(&mut budget()).unwrap();
            prop_assert!(a <= b);
        }

        #[test]
        fn bomega_agrees_with_subset_enumeration(g in arb_graph(7)) {
            prop_assert_eq!(g.bomega(&mut budget()).unwrap(), bomega_naive(&g));
        }

        #[test]
        fn girth_agrees_with_enumeration(g in arb_graph(8)) {
            prop_assert_eq!(g.girth().as_finite(), shortest_cycle_naive(&g));
        }
    }
}
