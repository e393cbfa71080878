//! Linear vertex orders, and the construction that turns a width-`d`
//! contraction sequence into an order with bounded strong coloring number.
//!
//! A universe node is *small* when it has at most `s` vertices and *nice at
//! step i* when it is small and incident to a black edge in the trigraph
//! with `i` nodes. Nice nodes stay nice as the sequence splits further, the
//! maximal nice sets partition the vertices (for connected base graphs),
//! and ordering them by when they first became nice yields the order
//! [`nice_order`]. [`nice_order_incremental`] builds the same order by
//! refining a list of nice nodes step by step.

use std::fmt;

use crate::cograph::{self, Cotree};
use crate::graph::Graph;
use crate::trigraph::{ContractionSequence, NodeId, UniverseIndex};
use crate::{Error, Result};

/// A linear order on the vertices `0..n-1`: a bijection vertex -> rank.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearOrder {
    rank: Vec<usize>,
    seq: Vec<usize>,
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOrder{:?}", self.seq)
    }
}

impl LinearOrder {
    /// Order from the sequence of vertices, first to last.
    pub fn from_sequence(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut rank = vec![usize::MAX; n];
        for (k, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexRange { vertex: v, n });
            }
            if rank[v] != usize::MAX {
                return Err(Error::InvalidInput(format!("vertex {v} listed twice")));
            }
            rank[v] = k;
        }
        Ok(LinearOrder { rank, seq })
    }

    pub fn identity(n: usize) -> Self {
        LinearOrder { rank: (0..n).collect(), seq: (0..n).collect() }
    }

    pub fn random(n: usize, rng: &mut impl rand::Rng) -> Self {
        use rand::seq::SliceRandom;
        let mut seq: Vec<usize> = (0..n).collect();
        seq.shuffle(rng);
        LinearOrder::from_sequence(seq).unwrap()
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn vertex_at(&self, k: usize) -> usize {
        self.seq[k]
    }

    /// Vertices first to last.
    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    pub fn before(&self, u: usize, v: usize) -> bool {
        self.rank[u] < self.rank[v]
    }
}

/// Order file format: one 1-based vertex id per line, first line = first in
/// the order; comment lines start with `c`.
pub fn parse_order(n: usize, text: &str) -> Result<LinearOrder> {
    let mut seq = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let v: usize = line
            .parse()
            .map_err(|_| Error::Parse { line: lineno + 1, reason: "expected a vertex id".into() })?;
        if v == 0 || v > n {
            return Err(Error::Parse { line: lineno + 1, reason: format!("vertex {v} out of 1..={n}") });
        }
        seq.push(v - 1);
    }
    if seq.len() != n {
        return Err(Error::Parse { line: 0, reason: format!("order lists {} of {n} vertices", seq.len()) });
    }
    LinearOrder::from_sequence(seq)
}

pub fn write_order(ord: &LinearOrder) -> String {
    let mut out = String::new();
    for &v in ord.sequence() {
        out.push_str(&format!("{}\n", v + 1));
    }
    out
}

// ---------------------------------------------------------------------------
// Nice-node annotation
// ---------------------------------------------------------------------------

/// Per-universe-node niceness data for a given smallness threshold `s`.
#[derive(Debug, Clone)]
pub struct NiceAnnotation {
    pub s: usize,
    pub universe: UniverseIndex,
    /// `rho[id - 1]`: first step at which node `id` is nice, if ever.
    rho: Vec<Option<usize>>,
    /// Maximal nice sets, in order.
    maximal: Vec<NiceSet>,
}

/// A maximal nice set: a nice universe node whose parent is not nice.
#[derive(Debug, Clone)]
pub struct NiceSet {
    pub id: NodeId,
    pub vertices: Vec<usize>,
    pub rho: usize,
    pub birth: usize,
}

impl NiceAnnotation {
    pub fn rho(&self, id: NodeId) -> Option<usize> {
        self.rho[id - 1]
    }

    pub fn is_nice(&self, id: NodeId) -> bool {
        self.rho[id - 1].is_some()
    }

    pub fn nice_at(&self, id: NodeId, step: usize) -> bool {
        self.universe.live_at(id, step) && self.rho[id - 1].is_some_and(|r| r <= step)
    }

    /// Maximal nice sets ordered by (rho ascending, birth descending,
    /// node id ascending); they partition the vertex set.
    pub fn maximal_sets(&self) -> &[NiceSet] {
        &self.maximal
    }
}

/// Computes niceness of every universe node of `seq` with threshold `s`.
///
/// Requires a connected base graph on at least two vertices: connectivity
/// is what forces every singleton to become nice, which in turn makes the
/// maximal nice sets a partition of the vertex set.
pub fn annotate_nice(seq: &ContractionSequence, s: usize) -> Result<NiceAnnotation> {
    let g = seq.base();
    let n = g.n();
    if s == 0 {
        return Err(Error::InvalidInput("smallness threshold s must be positive".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n < 2 {
        return Err(Error::InvalidInput("niceness needs at least two vertices".into()));
    }
    let universe = seq.universe()?;
    let mut rho: Vec<Option<usize>> = vec![None; universe.len()];
    let mut monotone_ok = true;
    // replay visits steps i = n, n-1, ..., 1; rho is the smallest flagged i,
    // and the flagged steps of a node must be contiguous down from its split
    seq.replay(|i, t| {
        for (id, node) in t.nodes() {
            if node.vertices.len() <= s && !node.black.is_empty() {
                if let Some(prev) = rho[id - 1] {
                    monotone_ok &= prev == i + 1;
                }
                rho[id - 1] = Some(i);
            }
        }
        Ok(())
    })?;
    debug_assert!(monotone_ok, "niceness is monotone in the step");

    // niceness is inherited downward: children of a nice node are nice
    for nd in universe.iter() {
        if rho[nd.id - 1].is_some() {
            if let Some((a, b)) = nd.children {
                debug_assert!(rho[a - 1].is_some() && rho[b - 1].is_some());
            }
            debug_assert!(rho[nd.id - 1].unwrap() > 1, "the one-node trigraph is edgeless");
        }
    }

    let mut maximal: Vec<NiceSet> = universe
        .iter()
        .filter(|nd| {
            rho[nd.id - 1].is_some()
                && nd.parent.map_or(true, |p| rho[p - 1].is_none())
        })
        .map(|nd| NiceSet {
            id: nd.id,
            vertices: nd.vertices.clone(),
            rho: rho[nd.id - 1].unwrap(),
            birth: nd.birth,
        })
        .collect();
    maximal.sort_by(|a, b| {
        a.rho.cmp(&b.rho).then(b.birth.cmp(&a.birth)).then(a.id.cmp(&b.id))
    });

    let mut covered = vec![false; n];
    for set in &maximal {
        for &v in &set.vertices {
            if covered[v] {
                return Err(Error::InvalidInput(format!(
                    "maximal nice sets overlap at vertex {v}; is s >= 1 and the sequence valid?"
                )));
            }
            covered[v] = true;
        }
    }
    if !covered.iter().all(|&c| c) {
        return Err(Error::InvalidInput(
            "maximal nice sets do not cover every vertex (is the base graph connected?)".into(),
        ));
    }

    Ok(NiceAnnotation { s, universe, rho, maximal })
}

// ---------------------------------------------------------------------------
// The order
// ---------------------------------------------------------------------------

/// Vertices of the subtree rooted at `id`, children ordered by their
/// smallest vertex. This is the intra-set order used by both order
/// constructions; any refinement compatible with the splits would do.
fn laminar_vertices(universe: &UniverseIndex, id: NodeId, out: &mut Vec<usize>) {
    let nd = universe.node(id);
    match nd.children {
        None => out.push(nd.vertices[0]),
        Some((a, b)) => {
            let (first, second) = if universe.node(a).vertices[0] < universe.node(b).vertices[0] {
                (a, b)
            } else {
                (b, a)
            };
            laminar_vertices(universe, first, out);
            laminar_vertices(universe, second, out);
        }
    }
}

/// The order of the maximal nice sets, expanded to vertices.
///
/// All vertices of an earlier maximal set precede all vertices of a later
/// one; for a connected graph with a width-`d` sequence and `s` at least
/// the biclique number, every strong r-reachability set under this order
/// has size at most `(3 + d * sum_{i<r} (d-1)^i) * s`.
pub fn nice_order(seq: &ContractionSequence, s: usize) -> Result<LinearOrder> {
    let g = seq.base();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() <= s || g.n() == 1 {
        // every set is small, the bound is trivial; any order works
        return Ok(LinearOrder::identity(g.n()));
    }
    let ann = annotate_nice(seq, s)?;
    let mut out = Vec::with_capacity(g.n());
    for set in ann.maximal_sets() {
        laminar_vertices(&ann.universe, set.id, &mut out);
    }
    LinearOrder::from_sequence(out)
}

/// Same order, built incrementally over the splitting sequence.
///
/// Walk the trigraphs from one node to `n` nodes maintaining the ordered
/// list of currently nice nodes: a nice node that splits is replaced in
/// place by its two children, and nodes that just became nice are appended,
/// most recently born first. The final list orders the singletons.
pub fn nice_order_incremental(seq: &ContractionSequence, s: usize) -> Result<LinearOrder> {
    let g = seq.base();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n <= s || n == 1 {
        return Ok(LinearOrder::identity(n));
    }
    let ann = annotate_nice(seq, s)?;
    let universe = &ann.universe;

    // nodes becoming nice at each step
    let mut newly_nice_at: Vec<Vec<NodeId>> = vec![Vec::new(); n + 1];
    for nd in universe.iter() {
        if let Some(r) = ann.rho(nd.id) {
            newly_nice_at[r].push(nd.id);
        }
    }

    let mut list: Vec<NodeId> = Vec::new();
    for i in 2..=n {
        // the node splitting between the (i-1)-node and i-node trigraphs
        let k = n - i + 1;
        let z = n + k;
        let (a, b) = seq.merges()[k - 1];
        let mut replaced = None;
        if let Some(pos) = list.iter().position(|&x| x == z) {
            // a nice node's children are nice from birth: keep the position
            debug_assert_eq!(ann.rho(a), Some(i));
            debug_assert_eq!(ann.rho(b), Some(i));
            let (first, second) = if universe.node(a).vertices[0] < universe.node(b).vertices[0] {
                (a, b)
            } else {
                (b, a)
            };
            list.splice(pos..=pos, [first, second]);
            replaced = Some((a, b));
        }
        let mut newly: Vec<NodeId> = newly_nice_at[i]
            .iter()
            .copied()
            .filter(|&x| replaced.map_or(true, |(a, b)| x != a && x != b))
            .collect();
        newly.sort_by(|&x, &y| {
            universe.node(y).birth.cmp(&universe.node(x).birth).then(x.cmp(&y))
        });
        list.extend(newly);
    }
    debug_assert_eq!(list.len(), n);
    let out: Vec<usize> = list
        .iter()
        .map(|&id| {
            debug_assert_eq!(universe.node(id).vertices.len(), 1);
            universe.node(id).vertices[0]
        })
        .collect();
    LinearOrder::from_sequence(out)
}

/// Order for disconnected graphs: each component gets the nice order of the
/// restricted sequence (reachability never crosses components), components
/// are concatenated by smallest vertex. `s` is computed per component when
/// not supplied.
pub fn nice_order_components(
    seq: &ContractionSequence,
    s: Option<usize>,
    budget: &mut crate::Budget,
) -> Result<LinearOrder> {
    let g = seq.base();
    let mut out = Vec::with_capacity(g.n());
    for comp in g.components() {
        let (sub, sub_seq, map) = seq.restrict_to(&comp)?;
        let s_comp = match s {
            Some(s) => s,
            None => sub.bomega(budget)?.max(1),
        };
        let sub_ord = nice_order(&sub_seq, s_comp)?;
        out.extend(sub_ord.sequence().iter().map(|&v| map[v]));
    }
    LinearOrder::from_sequence(out)
}

// ---------------------------------------------------------------------------
// Cograph order
// ---------------------------------------------------------------------------

/// Order of a cograph along its cotree: at every join the smaller side
/// comes first, so each vertex strongly reaches at most the join partners
/// ordered before it. Guarantees per-order scol at most `2 * bomega + 1`
/// for every radius (the odd-clique pattern needs the `+ 1`).
pub fn cograph_order(g: &Graph) -> Result<LinearOrder> {
    if g.n() == 0 {
        return Ok(LinearOrder::identity(0));
    }
    let t = cograph::cotree(g)?;
    let mut out = Vec::with_capacity(g.n());
    emit_cotree(&t, &mut out);
    LinearOrder::from_sequence(out)
}

fn emit_cotree(t: &Cotree, out: &mut Vec<usize>) {
    match t {
        Cotree::Leaf(v) => out.push(*v),
        Cotree::Union(cs) | Cotree::Join(cs) => {
            let mut children: Vec<&Cotree> = cs.iter().collect();
            children.sort_by_key(|c| {
                let vs = c.vertices();
                (vs.len(), vs.into_iter().min().unwrap_or(usize::MAX))
            });
            for c in children {
                emit_cotree(c, out);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Claims checked during replay
// ---------------------------------------------------------------------------

/// Replays `seq` and checks, at every step, the three structural facts the
/// ordering bound rests on (for `s` at least the biclique number):
///
/// 1. a small node without a black edge is exactly a non-nice small node,
/// 2. no black edge joins two non-nice nodes,
/// 3. a non-nice node's black neighbors span at most `s` vertices.
pub fn check_claims(seq: &ContractionSequence, s: usize) -> Result<()> {
    seq.replay(|i, t| {
        let nice = |id: NodeId| {
            let nd = t.node(id).unwrap();
            nd.vertices.len() <= s && !nd.black.is_empty()
        };
        for (id, nd) in t.nodes() {
            if nd.vertices.len() <= s && !nice(id) && !nd.black.is_empty() {
                return Err(Error::Domain(format!(
                    "step {i}: small non-nice node {id} has a black edge"
                )));
            }
            if !nice(id) {
                for &w in &nd.black {
                    if !nice(w) {
                        return Err(Error::Domain(format!(
                            "step {i}: black edge between non-nice nodes {id} and {w}"
                        )));
                    }
                }
                let mut span: Vec<usize> = nd
                    .black
                    .iter()
                    .flat_map(|&w| t.node(w).unwrap().vertices.iter().copied())
                    .collect();
                span.sort_unstable();
                span.dedup();
                if span.len() > s {
                    return Err(Error::Domain(format!(
                        "step {i}: black neighbors of non-nice node {id} span {} > {s} vertices",
                        span.len()
                    )));
                }
            }
        }
        Ok(())
    })
}

/// A node ordered before a maximal set without being nice at the step just
/// before that set became nice. The only way this arises is a tie: an
/// earlier maximal set that became nice at the same step and already
/// existed one step before.
#[derive(Debug, Clone)]
pub struct FrontierDiscrepancy {
    pub node: NodeId,
    pub step: usize,
    pub set_rho: usize,
    pub containing_set_rho: usize,
}

/// Cross-check relating the two views of the order. For every maximal nice
/// set at position `a` with `t = rho - 1`, the claim says the nodes of the
/// `t`-node trigraph lying inside earlier maximal sets are exactly the
/// nodes nice at step `t`. The forward direction (nice implies earlier) is
/// unconditional and a failure is an error; the converse fails for rho
/// ties, and those cases are returned for inspection instead of being
/// reconciled away.
pub fn check_nice_frontier(seq: &ContractionSequence, s: usize) -> Result<Vec<FrontierDiscrepancy>> {
    let ann = annotate_nice(seq, s)?;
    let universe = &ann.universe;
    let sets = ann.maximal_sets();
    let vertex_bit = |vs: &[usize]| vs.iter().fold(0u128, |acc, &v| acc | (1 << v));
    let set_masks: Vec<u128> = sets.iter().map(|st| vertex_bit(&st.vertices)).collect();
    let mut discrepancies = Vec::new();
    for (a, set) in sets.iter().enumerate() {
        let t = set.rho - 1;
        if t == 0 {
            continue;
        }
        for nd in universe.iter() {
            if !universe.live_at(nd.id, t) {
                continue;
            }
            let mask = vertex_bit(&nd.vertices);
            let containing = set_masks[..a].iter().position(|&sm| mask & sm == mask);
            let nice_at_t = ann.nice_at(nd.id, t);
            match (containing, nice_at_t) {
                (None, true) => {
                    return Err(Error::Domain(format!(
                        "node {} is nice at step {t} but not inside an earlier maximal set",
                        nd.id
                    )));
                }
                (Some(i), false) => {
                    discrepancies.push(FrontierDiscrepancy {
                        node: nd.id,
                        step: t,
                        set_rho: set.rho,
                        containing_set_rho: sets[i].rho,
                    });
                }
                _ => {}
            }
        }
    }
    Ok(discrepancies)
}
