//! Trigraphs over a base graph and contraction sequences.
//!
//! A trigraph partitions a subset of the base vertices into nodes joined by
//! mutually exclusive black edges (full adjacency in the base) or red edges
//! (partial adjacency). A contraction sequence merges nodes down to a single
//! one; its width is the maximum red degree ever seen, and the minimum width
//! over all sequences is the twin-width of the base graph.
//!
//! Node ids follow the PACE 2023 convention: initial vertices are `1..=n`
//! and the k-th merge creates id `n + k`, so every node of the universe has
//! a unique id.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::graph::Graph;
use crate::{Budget, Error, Result};

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriNode {
    /// Base vertices in this node, sorted.
    pub vertices: Vec<usize>,
    pub black: BTreeSet<NodeId>,
    pub red: BTreeSet<NodeId>,
}

/// Trigraph on a base graph. The node map and the edge sets index only live
/// node ids; dropping a node drops its incident edges implicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trigraph {
    nodes: BTreeMap<NodeId, TriNode>,
}

impl Trigraph {
    /// All-singleton trigraph of `g`: node `v+1` holds vertex `v`, black
    /// edges mirror the edges of `g`, no red edges.
    pub fn initial(g: &Graph) -> Self {
        let mut nodes = BTreeMap::new();
        for v in 0..g.n() {
            nodes.insert(
                v + 1,
                TriNode {
                    vertices: vec![v],
                    black: g.neighbors(v).iter().map(|&w| w + 1).collect(),
                    red: BTreeSet::new(),
                },
            );
        }
        Trigraph { nodes }
    }

    /// Trigraph computed directly from a partition of (a subset of) the
    /// base vertices by the trichotomy: a node pair is black when every
    /// cross pair is an edge, red when some but not all are, non-adjacent
    /// otherwise. This is the semantic definition; [`Trigraph::contract`]
    /// must agree with it step by step.
    pub fn quotient(g: &Graph, parts: &[(NodeId, Vec<usize>)]) -> Result<Self> {
        let mut seen = vec![false; g.n()];
        for (_, vs) in parts {
            if vs.is_empty() {
                return Err(Error::InvalidInput("empty node in partition".into()));
            }
            for &v in vs {
                if v >= g.n() {
                    return Err(Error::VertexRange { vertex: v, n: g.n() });
                }
                if seen[v] {
                    return Err(Error::InvalidInput(format!("vertex {v} in two nodes")));
                }
                seen[v] = true;
            }
        }
        let mut nodes: BTreeMap<NodeId, TriNode> = parts
            .iter()
            .map(|(id, vs)| {
                let mut vs = vs.clone();
                vs.sort_unstable();
                (*id, TriNode { vertices: vs, black: BTreeSet::new(), red: BTreeSet::new() })
            })
            .collect();
        if nodes.len() != parts.len() {
            return Err(Error::InvalidInput("duplicate node id in partition".into()));
        }
        let ids: Vec<NodeId> = nodes.keys().copied().collect();
        for (i, &x) in ids.iter().enumerate() {
            for &y in &ids[i + 1..] {
                let (xs, ys) = (&nodes[&x].vertices, &nodes[&y].vertices);
                let mut count = 0usize;
                for &u in xs {
                    for &v in ys {
                        if g.has_edge(u, v) {
                            count += 1;
                        }
                    }
                }
                if count == xs.len() * ys.len() && count > 0 {
                    nodes.get_mut(&x).unwrap().black.insert(y);
                    nodes.get_mut(&y).unwrap().black.insert(x);
                } else if count > 0 {
                    nodes.get_mut(&x).unwrap().red.insert(y);
                    nodes.get_mut(&y).unwrap().red.insert(x);
                }
            }
        }
        Ok(Trigraph { nodes })
    }

    pub fn node(&self, id: NodeId) -> Option<&TriNode> {
        self.nodes.get(&id)
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes.keys().copied()
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &TriNode)> {
        self.nodes.iter().map(|(id, n)| (*id, n))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn max_red_degree(&self) -> usize {
        self.nodes.values().map(|n| n.red.len()).max().unwrap_or(0)
    }

    /// No node pair may be both black- and red-adjacent.
    pub fn black_red_exclusive(&self) -> bool {
        self.nodes.values().all(|n| n.black.is_disjoint(&n.red))
    }

    /// Contracts nodes `x` and `y` into a new node `new_id`. Black edges of
    /// the merged node are the black edges common to both; every other
    /// surviving adjacency turns red. Adjacencies not touching `x` or `y`
    /// are unchanged.
    pub fn contract(&self, x: NodeId, y: NodeId, new_id: NodeId) -> Result<Trigraph> {
        let mut t = self.clone();
        t.contract_in_place(x, y, new_id)?;
        Ok(t)
    }

    pub(crate) fn contract_in_place(&mut self, x: NodeId, y: NodeId, new_id: NodeId) -> Result<()> {
        if x == y {
            return Err(Error::InvalidInput(format!("cannot contract node {x} with itself")));
        }
        let nx = self.nodes.remove(&x).ok_or(Error::UnknownNode(x))?;
        let ny = match self.nodes.remove(&y) {
            Some(n) => n,
            None => {
                self.nodes.insert(x, nx);
                return Err(Error::UnknownNode(y));
            }
        };
        if self.nodes.contains_key(&new_id) {
            return Err(Error::InvalidInput(format!("node id {new_id} already live")));
        }
        let mut vertices = nx.vertices;
        vertices.extend(ny.vertices);
        vertices.sort_unstable();

        let mut neighbors: BTreeSet<NodeId> = BTreeSet::new();
        for set in [&nx.black, &nx.red, &ny.black, &ny.red] {
            neighbors.extend(set.iter().copied());
        }
        neighbors.remove(&x);
        neighbors.remove(&y);
        let black: BTreeSet<NodeId> =
            nx.black.intersection(&ny.black).copied().filter(|id| *id != x && *id != y).collect();
        let red: BTreeSet<NodeId> = neighbors.difference(&black).copied().collect();

        for &w in &neighbors {
            let node = self.nodes.get_mut(&w).expect("neighbor is live");
            node.black.remove(&x);
            node.black.remove(&y);
            node.red.remove(&x);
            node.red.remove(&y);
            if black.contains(&w) {
                node.black.insert(new_id);
            } else {
                node.red.insert(new_id);
            }
        }
        self.nodes.insert(new_id, TriNode { vertices, black, red });
        Ok(())
    }

    /// Key identifying the partition regardless of node ids: sorted vertex
    /// bitmasks of the blocks. Only valid for base graphs with at most 64
    /// vertices.
    fn partition_key(&self) -> Vec<u64> {
        let mut key: Vec<u64> = self
            .nodes
            .values()
            .map(|n| n.vertices.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect();
        key.sort_unstable();
        key
    }
}

// ---------------------------------------------------------------------------
// Contraction sequences
// ---------------------------------------------------------------------------

/// A contraction sequence of a base graph: `n - 1` ordered merges, each
/// referencing two live node ids; the k-th merge creates node `n + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionSequence {
    base: Graph,
    merges: Vec<(NodeId, NodeId)>,
}

/// Birth/split/parent/children tables of every node appearing anywhere in
/// the sequence. Step indices follow the splitting view: step `i` is the
/// trigraph with `i` nodes, so a node lives exactly at steps
/// `birth..=split`, the root has birth 1, and singletons have split `n`.
#[derive(Debug, Clone)]
pub struct UniverseIndex {
    pub n: usize,
    nodes: Vec<UniverseNode>,
}

#[derive(Debug, Clone)]
pub struct UniverseNode {
    pub id: NodeId,
    pub vertices: Vec<usize>,
    pub birth: usize,
    pub split: usize,
    pub parent: Option<NodeId>,
    pub children: Option<(NodeId, NodeId)>,
}

impl UniverseIndex {
    pub fn node(&self, id: NodeId) -> &UniverseNode {
        &self.nodes[id - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = &UniverseNode> {
        self.nodes.iter()
    }

    pub fn root(&self) -> &UniverseNode {
        self.nodes.last().expect("universe is nonempty")
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Whether `id` is live at step `i` (the trigraph with `i` nodes).
    pub fn live_at(&self, id: NodeId, i: usize) -> bool {
        let nd = self.node(id);
        nd.birth <= i && i <= nd.split
    }
}

impl ContractionSequence {
    /// Validates ids and liveness; the trigraph-level invariants are
    /// re-checked on every replay.
    pub fn new(base: Graph, merges: Vec<(NodeId, NodeId)>) -> Result<Self> {
        let n = base.n();
        if n == 0 {
            return Err(Error::InvalidInput("empty base graph".into()));
        }
        if merges.len() != n - 1 {
            return Err(Error::InvalidSequence {
                step: merges.len(),
                reason: format!("expected {} merges for {n} vertices, got {}", n - 1, merges.len()),
            });
        }
        let mut live: Vec<bool> = vec![true; 2 * n]; // ids 1..=2n-1
        for (k, &(x, y)) in merges.iter().enumerate() {
            let step = k + 1;
            for id in [x, y] {
                if id == 0 || id >= n + step {
                    return Err(Error::InvalidSequence { step, reason: format!("unknown node id {id}") });
                }
                if !live[id] {
                    return Err(Error::InvalidSequence { step, reason: format!("node {id} already merged") });
                }
            }
            if x == y {
                return Err(Error::InvalidSequence { step, reason: format!("merge of node {x} with itself") });
            }
            live[x] = false;
            live[y] = false;
        }
        Ok(ContractionSequence { base, merges })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn merges(&self) -> &[(NodeId, NodeId)] {
        &self.merges
    }

    /// Replays the sequence, invoking `f(i, trigraph)` for every trigraph,
    /// from the all-singleton one (`i = n`) down to the single node (`i = 1`).
    pub fn replay(&self, mut f: impl FnMut(usize, &Trigraph) -> Result<()>) -> Result<()> {
        let n = self.base.n();
        let mut t = Trigraph::initial(&self.base);
        f(n, &t)?;
        for (k, &(x, y)) in self.merges.iter().enumerate() {
            t.contract_in_place(x, y, n + k + 1).map_err(|e| Error::InvalidSequence {
                step: k + 1,
                reason: e.to_string(),
            })?;
            f(n - k - 1, &t)?;
        }
        Ok(())
    }

    /// Minimal `d` such that this is a `d`-sequence: the maximum red degree
    /// over all trigraphs of the sequence.
    pub fn width(&self) -> Result<usize> {
        let mut width = 0;
        self.replay(|_, t| {
            debug_assert!(t.black_red_exclusive());
            width = width.max(t.max_red_degree());
            Ok(())
        })?;
        Ok(width)
    }

    /// Birth/split/parent/children tables for all `2n - 1` universe nodes.
    pub fn universe(&self) -> Result<UniverseIndex> {
        let n = self.base.n();
        let mut nodes: Vec<UniverseNode> = (0..n)
            .map(|v| UniverseNode {
                id: v + 1,
                vertices: vec![v],
                birth: n,
                split: n,
                parent: None,
                children: None,
            })
            .collect();
        for (k, &(x, y)) in self.merges.iter().enumerate() {
            let step = k + 1;
            let id = n + step;
            for child in [x, y] {
                if child > nodes.len() {
                    return Err(Error::InvalidSequence { step, reason: format!("unknown node id {child}") });
                }
                let c = &mut nodes[child - 1];
                if c.parent.is_some() {
                    return Err(Error::InvalidSequence { step, reason: format!("node {child} already merged") });
                }
                c.parent = Some(id);
                // the child last exists in the trigraph just before this merge
                c.birth = n - step + 1;
            }
            let mut vertices = nodes[x - 1].vertices.clone();
            vertices.extend(nodes[y - 1].vertices.iter().copied());
            vertices.sort_unstable();
            nodes.push(UniverseNode {
                id,
                vertices,
                birth: 1, // overwritten unless this is the root
                split: n - step,
                parent: None,
                children: Some((x, y)),
            });
        }
        Ok(UniverseIndex { n, nodes })
    }

    /// Restriction of the sequence to an induced subgraph. Merges where both
    /// sides miss `verts` are dropped; merges with one side inside keep the
    /// surviving restricted node. The restriction of a `d`-sequence has
    /// width at most `d`. Returns the induced subgraph, the restricted
    /// sequence, and the map from restricted vertex id to original vertex.
    pub fn restrict_to(&self, verts: &[usize]) -> Result<(Graph, ContractionSequence, Vec<usize>)> {
        let (sub, map) = self.base.induced(verts);
        let sub_n = sub.n();
        let mut old_to_new = vec![usize::MAX; self.base.n()];
        for (new, &old) in map.iter().enumerate() {
            old_to_new[old] = new;
        }
        // restricted[id] = restricted node id of the original node, when it meets `verts`
        let mut restricted: HashMap<NodeId, NodeId> = (0..sub_n).map(|v| (map[v] + 1, v + 1)).collect();
        let mut merges = Vec::new();
        for (k, &(x, y)) in self.merges.iter().enumerate() {
            let merged = self.base.n() + k + 1;
            match (restricted.get(&x).copied(), restricted.get(&y).copied()) {
                (Some(rx), Some(ry)) => {
                    merges.push((rx, ry));
                    restricted.insert(merged, sub_n + merges.len());
                }
                (Some(r), None) | (None, Some(r)) => {
                    restricted.insert(merged, r);
                }
                (None, None) => {}
            }
        }
        let seq = ContractionSequence::new(sub, merges)?;
        Ok((seq.base.clone(), seq, map))
    }
}

// ---------------------------------------------------------------------------
// Exact twin-width
// ---------------------------------------------------------------------------

/// Default vertex-count limit for the exact search.
pub const EXACT_TWW_LIMIT: usize = 9;

/// Exact twin-width with a witness sequence attaining it. Memoized DFS over
/// partition states: the trigraph, and hence the achievable completion
/// width, depends only on the partition of the base vertices. The witness
/// is the lexicographically least merge list among the optima.
pub fn exact_tww(g: &Graph, limit: usize, budget: &mut Budget) -> Result<(usize, ContractionSequence)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("empty graph".into()));
    }
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let mut memo: HashMap<Vec<u64>, usize> = HashMap::new();
    let initial = Trigraph::initial(g);
    let best = solve_tww(&initial, n, &mut memo, budget).map_err(|e| match e {
        Error::ResourceLimit { what, limit, .. } => {
            let ub = greedy_width_upper(g).0 as u64;
            Error::ResourceLimit { what, limit, best_known: Some(ub) }
        }
        other => other,
    })?;

    // lexicographically least witness: greedily take the smallest merge pair
    // that still admits a completion of width `best`
    let mut merges = Vec::with_capacity(n - 1);
    let mut t = initial;
    for k in 1..n {
        let ids: Vec<NodeId> = t.node_ids().collect();
        let mut chosen = None;
        'pairs: for (i, &x) in ids.iter().enumerate() {
            for &y in &ids[i + 1..] {
                let child = t.contract(x, y, n + k)?;
                if solve_tww(&child, n, &mut memo, budget)? <= best {
                    chosen = Some((x, y, child));
                    break 'pairs;
                }
            }
        }
        let (x, y, child) = chosen.expect("an optimal completion always exists");
        merges.push((x, y));
        t = child;
    }
    let seq = ContractionSequence::new(g.clone(), merges)?;
    debug_assert_eq!(seq.width()?, best);
    Ok((best, seq))
}

fn solve_tww(
    t: &Trigraph,
    n: usize,
    memo: &mut HashMap<Vec<u64>, usize>,
    budget: &mut Budget,
) -> Result<usize> {
    let red = t.max_red_degree();
    if t.len() == 1 {
        return Ok(red);
    }
    let key = t.partition_key();
    if let Some(&v) = memo.get(&key) {
        return Ok(v);
    }
    budget.tick()?;
    let ids: Vec<NodeId> = t.node_ids().collect();
    let fresh = 2 * n - t.len() + 1; // any unused id works; replaced on the witness walk
    let mut best = usize::MAX;
    for (i, &x) in ids.iter().enumerate() {
        for &y in &ids[i + 1..] {
            let child = t.contract(x, y, fresh)?;
            best = best.min(solve_tww(&child, n, memo, budget)?);
        }
    }
    let value = red.max(best);
    memo.insert(key, value);
    Ok(value)
}

/// Cheap upper bound: repeatedly contract the pair minimizing the resulting
/// maximum red degree. Used to report something useful when the exact
/// search runs out of budget.
pub fn greedy_width_upper(g: &Graph) -> (usize, ContractionSequence) {
    let n = g.n();
    let mut t = Trigraph::initial(g);
    let mut width = 0;
    let mut merges = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..n {
        let ids: Vec<NodeId> = t.node_ids().collect();
        let mut best: Option<(usize, NodeId, NodeId, Trigraph)> = None;
        for (i, &x) in ids.iter().enumerate() {
            for &y in &ids[i + 1..] {
                let child = t.contract(x, y, n + k).expect("live ids");
                let red = child.max_red_degree();
                if best.as_ref().map_or(true, |(b, ..)| red < *b) {
                    best = Some((red, x, y, child));
                }
            }
        }
        let (red, x, y, child) = best.expect("at least two nodes remain");
        width = width.max(red);
        merges.push((x, y));
        t = child;
    }
    let seq = ContractionSequence::new(g.clone(), merges).expect("greedy merges are valid");
    (width, seq)
}

// ---------------------------------------------------------------------------
// Witness file format: one `<u> <v>` line per merge, meaning "contract node
// v into node u"; ids are 1-based and, as in PACE 2023 witnesses, the merged
// node keeps answering to u's name. Comment lines start with `c`.
// ---------------------------------------------------------------------------

pub fn parse_witness(g: &Graph, text: &str) -> Result<ContractionSequence> {
    let n = g.n();
    let mut alias: HashMap<usize, NodeId> = (1..=n).map(|v| (v, v)).collect();
    let mut merges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut num = || {
            fields
                .next()
                .and_then(|x| x.parse::<usize>().ok())
                .ok_or(Error::Parse { line: lineno + 1, reason: "expected `<u> <v>`".into() })
        };
        let (u, v) = (num()?, num()?);
        let step = merges.len() + 1;
        let a = *alias.get(&u).ok_or(Error::InvalidSequence {
            step,
            reason: format!("node {u} is unknown or already merged away"),
        })?;
        let b = *alias.get(&v).ok_or(Error::InvalidSequence {
            step,
            reason: format!("node {v} is unknown or already merged away"),
        })?;
        if a == b {
            return Err(Error::InvalidSequence { step, reason: format!("{u} and {v} name the same node") });
        }
        merges.push((a, b));
        alias.insert(u, n + step);
        alias.remove(&v);
    }
    ContractionSequence::new(g.clone(), merges)
}

pub fn write_witness(seq: &ContractionSequence) -> String {
    let n = seq.base().n();
    let mut name: HashMap<NodeId, usize> = (1..=n).map(|v| (v, v)).collect();
    let mut out = String::new();
    for (k, &(x, y)) in seq.merges().iter().enumerate() {
        let (u, v) = (name[&x], name[&y]);
        out.push_str(&format!("{u} {v}\n"));
        name.insert(n + k + 1, u);
    }
    out
}
