//! Graph families with prescribed twin-width and coloring-number behavior:
//! 2-lifts and towers of them, the full edge-indexed lift, subdivided
//! cliques, lexicographic products with cliques, and random cographs.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::trigraph::{ContractionSequence, NodeId};
use crate::{Error, Result};

/// Per-edge flag of a 2-lift: `false` keeps the two copies of an edge
/// parallel, `true` crosses them. Flags follow the base graph's edge list
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftSigning {
    pub crossing: Vec<bool>,
}

impl LiftSigning {
    pub fn all_parallel(m: usize) -> Self {
        LiftSigning { crossing: vec![false; m] }
    }

    pub fn all_crossing(m: usize) -> Self {
        LiftSigning { crossing: vec![true; m] }
    }

    pub fn random(m: usize, rng: &mut impl Rng) -> Self {
        LiftSigning { crossing: (0..m).map(|_| rng.gen_bool(0.5)).collect() }
    }
}

/// The 2-lift of `g` under `sign`: two copies of every vertex, with copy
/// `i` of `v` numbered `v + i * n`. A parallel edge joins equal copies, a
/// crossing edge joins opposite ones. Degrees are preserved.
pub fn two_lift(g: &Graph, sign: &LiftSigning) -> Result<Graph> {
    if sign.crossing.len() != g.m() {
        return Err(Error::SigningMismatch { got: sign.crossing.len(), expected: g.m() });
    }
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    for (idx, (u, v)) in g.edges().enumerate() {
        if sign.crossing[idx] {
            edges.push((u, v + n));
            edges.push((u + n, v));
        } else {
            edges.push((u, v));
            edges.push((u + n, v + n));
        }
    }
    Graph::from_edges(2 * n, edges)
}

/// A base graph together with a stack of 2-lifts applied to it.
#[derive(Debug, Clone)]
pub struct LiftTower {
    levels: Vec<Graph>,
    signings: Vec<LiftSigning>,
}

impl LiftTower {
    /// Tower with no lifts.
    pub fn trivial(base: Graph) -> Self {
        LiftTower { levels: vec![base], signings: Vec::new() }
    }

    pub fn from_signings(base: Graph, signings: Vec<LiftSigning>) -> Result<Self> {
        let mut levels = vec![base];
        for sign in &signings {
            let next = two_lift(levels.last().unwrap(), sign)?;
            levels.push(next);
        }
        Ok(LiftTower { levels, signings })
    }

    /// Tower of `num_levels` seeded random 2-lifts.
    pub fn random(base: Graph, num_levels: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut levels = vec![base];
        let mut signings = Vec::with_capacity(num_levels);
        for _ in 0..num_levels {
            let cur = levels.last().unwrap();
            let sign = LiftSigning::random(cur.m(), &mut rng);
            let next = two_lift(cur, &sign).expect("signing sized to the level");
            levels.push(next);
            signings.push(sign);
        }
        LiftTower { levels, signings }
    }

    pub fn base(&self) -> &Graph {
        &self.levels[0]
    }

    pub fn top(&self) -> &Graph {
        self.levels.last().unwrap()
    }

    pub fn levels(&self) -> &[Graph] {
        &self.levels
    }

    pub fn signings(&self) -> &[LiftSigning] {
        &self.signings
    }
}

/// Contraction sequence for the tower's top graph: contract the two copies
/// of every vertex, level by level back down to the base, then fold the
/// base one vertex at a time. For a `D`-regular base the red degree stays
/// at most `2 D` throughout the unlift phase; the width is checked by
/// replay, never assumed.
pub fn undo_lift_witness(tower: &LiftTower) -> ContractionSequence {
    let top = tower.top();
    let top_n = top.n();
    // current[x] = universe node holding the fiber over vertex x of this level
    let mut current: Vec<NodeId> = (1..=top_n).collect();
    let mut merges = Vec::with_capacity(top_n.saturating_sub(1));
    let mut next_id = top_n + 1;
    for level in (1..tower.levels.len()).rev() {
        let below_n = tower.levels[level - 1].n();
        let mut below = Vec::with_capacity(below_n);
        for w in 0..below_n {
            merges.push((current[w], current[w + below_n]));
            below.push(next_id);
            next_id += 1;
        }
        current = below;
    }
    let mut acc = current[0];
    for &node in &current[1..] {
        merges.push((acc, node));
        acc = next_id;
        next_id += 1;
    }
    ContractionSequence::new(top.clone(), merges).expect("fiber merges are live")
}

/// Default cap on lifted graph size.
pub const THETA_LIFT_GUARD: u64 = 1_000_000;

/// The simultaneous lift of `g` over all its edges: vertices are pairs of a
/// base vertex and one bit per base edge, and the copy of edge `i` from
/// `(u, x)` leads to `(v, x with bit i flipped)`. Vertex `(v, x)` is
/// numbered `v * 2^m + x`. The result keeps every degree and at least
/// doubles the girth; it has `n * 2^m` vertices, which must stay within
/// `guard`.
pub fn theta_lift(g: &Graph, guard: u64) -> Result<Graph> {
    let n = g.n() as u128;
    let m = g.m();
    let vertices: u128 = n << m;
    if vertices > guard as u128 {
        return Err(Error::SizeGuard { vertices, guard });
    }
    let shift = m as u32;
    let mut edges = Vec::with_capacity(g.m() << m);
    for (idx, (u, v)) in g.edges().enumerate() {
        for x in 0..(1usize << m) {
            let a = (u << shift) | x;
            let b = (v << shift) | (x ^ (1 << idx));
            edges.push((a, b));
        }
    }
    Graph::from_edges((n << m) as usize, edges)
}

/// The signings realizing [`theta_lift`] as a tower of single 2-lifts:
/// level `j` crosses exactly the copies of base edge `j - 1`. Lifting with
/// these produces a graph isomorphic to the full lift.
pub fn theta_lift_signings(g: &Graph) -> Vec<LiftSigning> {
    let base_edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.n();
    let mut signings = Vec::with_capacity(base_edges.len());
    let mut level = g.clone();
    for j in 0..base_edges.len() {
        // level vertex ids compose as base + n * bits, so projecting an
        // edge to the base is a residue
        let sign = LiftSigning {
            crossing: level
                .edges()
                .map(|(a, b)| base_index(&base_edges, a % n, b % n) == j)
                .collect(),
        };
        level = two_lift(&level, &sign).expect("sized signing");
        signings.push(sign);
    }
    signings
}

fn base_index(base_edges: &[(usize, usize)], u: usize, v: usize) -> usize {
    let key = (u.min(v), u.max(v));
    base_edges.binary_search(&key).expect("projected edge exists in the base")
}

/// `K_n` with every edge subdivided `k` times: `n` branch vertices
/// `0..n-1` plus `k` fresh vertices per clique edge, joining every branch
/// pair by a path of length `k + 1`. For `k >= 1` the result has no
/// `K_{2,2}` subgraph.
pub fn subdivided_clique(n: usize, k: usize) -> Graph {
    assert!(n >= 2, "need at least two branch vertices");
    let mut edges = Vec::new();
    let mut next = n;
    for u in 0..n {
        for v in u + 1..n {
            if k == 0 {
                edges.push((u, v));
            } else {
                edges.push((u, next));
                for _ in 1..k {
                    edges.push((next, next + 1));
                    next += 1;
                }
                edges.push((next, v));
                next += 1;
            }
        }
    }
    Graph::from_edges(next, edges).expect("construction is simple")
}

/// Lexicographic product of `g` with a clique on `s` vertices: vertex
/// `(v, i)` is numbered `v * s + i`; copies of adjacent vertices are fully
/// joined and the `s` copies of one vertex form a clique.
pub fn lex_product_clique(g: &Graph, s: usize) -> Graph {
    assert!(s >= 1, "the clique factor needs at least one vertex");
    let n = g.n();
    let mut edges = Vec::new();
    for v in 0..n {
        for i in 0..s {
            for j in i + 1..s {
                edges.push((v * s + i, v * s + j));
            }
        }
    }
    for (u, v) in g.edges() {
        for i in 0..s {
            for j in 0..s {
                edges.push((u * s + i, v * s + j));
            }
        }
    }
    Graph::from_edges(n * s, edges).expect("construction is simple")
}

/// Random cograph: a uniformly random full binary tree with `n` leaves
/// (grown by random leaf insertion), each internal node labeled union or
/// join with equal probability. Leaves are the vertices `0..n-1` in
/// left-to-right order. Deterministic per seed.
pub fn random_cograph(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    #[derive(Clone)]
    enum Node {
        Leaf,
        Internal { join: bool, left: usize, right: usize },
    }
    let mut nodes = vec![Node::Leaf];
    let mut root = 0;
    for _ in 1..n {
        // pick any node, push it down under a fresh internal node
        let target = rng.gen_range(0..nodes.len());
        let leaf = nodes.len();
        nodes.push(Node::Leaf);
        let internal = nodes.len();
        let (left, right) = if rng.gen_bool(0.5) { (target, leaf) } else { (leaf, target) };
        nodes.push(Node::Internal { join: rng.gen_bool(0.5), left, right });
        if target == root {
            root = internal;
        } else {
            // rewire the old parent of `target` (the new node is not scanned)
            for i in 0..internal {
                if let Node::Internal { left, right, .. } = &mut nodes[i] {
                    if *left == target {
                        *left = internal;
                        break;
                    }
                    if *right == target {
                        *right = internal;
                        break;
                    }
                }
            }
        }
    }

    // number leaves left to right, then collect join edges
    fn assign(nodes: &[Node], at: usize, next: &mut usize, leaf_of: &mut Vec<Option<usize>>) {
        match nodes[at] {
            Node::Leaf => {
                leaf_of[at] = Some(*next);
                *next += 1;
            }
            Node::Internal { left, right, .. } => {
                assign(nodes, left, next, leaf_of);
                assign(nodes, right, next, leaf_of);
            }
        }
    }
    let mut leaf_of = vec![None; nodes.len()];
    let mut next = 0;
    assign(&nodes, root, &mut next, &mut leaf_of);

    fn collect(
        nodes: &[Node],
        at: usize,
        leaf_of: &[Option<usize>],
        edges: &mut Vec<(usize, usize)>,
    ) -> Vec<usize> {
        match nodes[at] {
            Node::Leaf => vec![leaf_of[at].unwrap()],
            Node::Internal { join, left, right } => {
                let l = collect(nodes, left, leaf_of, edges);
                let r = collect(nodes, right, leaf_of, edges);
                if join {
                    for &u in &l {
                        for &v in &r {
                            edges.push((u, v));
                        }
                    }
                }
                let mut all = l;
                all.extend(r);
                all
            }
        }
    }
    let mut edges = Vec::new();
    collect(&nodes, root, &leaf_of, &mut edges);
    Graph::from_edges(n, edges).expect("cotree edges are simple")
}

/// Parses a base-graph name: `kN` (complete), `cN` (cycle), `pN` (path),
/// `petersen`, or `kA,B` (complete bipartite).
pub fn named_graph(name: &str) -> Result<Graph> {
    let lower = name.to_ascii_lowercase();
    if lower == "petersen" {
        return Ok(Graph::petersen());
    }
    let err = || Error::InvalidInput(format!("unknown graph name `{name}`"));
    let (kind, rest) = lower.split_at(1);
    if let Some((a, b)) = rest.split_once(',') {
        if kind == "k" {
            let a: usize = a.parse().map_err(|_| err())?;
            let b: usize = b.parse().map_err(|_| err())?;
            return Ok(Graph::complete_bipartite(a, b));
        }
        return Err(err());
    }
    let n: usize = rest.parse().map_err(|_| err())?;
    match kind {
        "k" => Ok(Graph::complete(n)),
        "c" if n >= 3 => Ok(Graph::cycle(n)),
        "p" => Ok(Graph::path(n)),
        _ => Err(err()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GirthValue;
    use crate::{cograph, Budget};

    fn budget() -> Budget {
        Budget::default_for("test")
    }

    #[test]
    fn two_lift_examples() {
        let k2 = Graph::complete(2);
        let parallel = two_lift(&k2, &LiftSigning::all_parallel(1)).unwrap();
        assert_eq!((parallel.n(), parallel.m()), (4, 2));
        assert!(parallel.has_edge(0, 1) && parallel.has_edge(2, 3));

        let crossing = two_lift(&k2, &LiftSigning::all_crossing(1)).unwrap();
        assert_eq!((crossing.n(), crossing.m()), (4, 2));
        assert!(crossing.has_edge(0, 3) && crossing.has_edge(2, 1));

        // C_3 with every edge crossed is C_6
        let c6 = two_lift(&Graph::cycle(3), &LiftSigning::all_crossing(3)).unwrap();
        assert_eq!((c6.n(), c6.m()), (6, 6));
        assert_eq!(c6.girth(), GirthValue::Finite(6));
        assert!(c6.is_connected());
        assert_eq!(c6.regular_degree(), Some(2));
    }

    #[test]
    fn two_lift_signing_mismatch() {
        let k3 = Graph::complete(3);
        assert!(matches!(
            two_lift(&k3, &LiftSigning::all_parallel(2)),
            Err(Error::SigningMismatch { .. })
        ));
    }

    #[test]
    fn theta_lift_examples() {
        let lifted = theta_lift(&Graph::complete(2), THETA_LIFT_GUARD).unwrap();
        assert_eq!((lifted.n(), lifted.m()), (4, 2));
        assert_eq!(lifted.regular_degree(), Some(1));

        let lifted = theta_lift(&Graph::cycle(3), THETA_LIFT_GUARD).unwrap();
        assert_eq!(lifted.n(), 24);
        assert_eq!(lifted.regular_degree(), Some(2));
        let g = lifted.girth().as_finite().unwrap();
        assert!(g >= 6, "girth {g} below twice the base girth");

        let lifted = theta_lift(&Graph::complete(4), THETA_LIFT_GUARD).unwrap();
        assert_eq!(lifted.n(), 256);
        assert_eq!(lifted.regular_degree(), Some(3));
        assert!(lifted.girth().as_finite().unwrap() >= 6);
    }

    #[test]
    fn theta_lift_size_guard() {
        assert!(matches!(
            theta_lift(&Graph::petersen(), 1000),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn theta_lift_girth_on_petersen_subgraph() {
        // a sparse subgraph of the Petersen graph keeps the lift small
        let petersen = Graph::petersen();
        let edges: Vec<(usize, usize)> = petersen.edges().take(9).collect();
        let base = Graph::from_edges(10, edges).unwrap();
        let lifted = theta_lift(&base, THETA_LIFT_GUARD).unwrap();
        assert_eq!(lifted.n(), 10 * (1 << 9));
        match (base.girth(), lifted.girth()) {
            (GirthValue::Finite(b), GirthValue::Finite(l)) => assert!(l >= 2 * b),
            (GirthValue::Infinite, g) => assert_eq!(g, GirthValue::Infinite),
            (GirthValue::Finite(_), GirthValue::Infinite) => {}
        }
    }

    #[test]
    fn theta_lift_decomposes_into_two_lifts() {
        for base in [Graph::complete(2), Graph::cycle(3)] {
            let theta = theta_lift(&base, THETA_LIFT_GUARD).unwrap();
            let signings = theta_lift_signings(&base);
            let tower = LiftTower::from_signings(base.clone(), signings).unwrap();
            let top = tower.top();
            assert_eq!(top.n(), theta.n());
            assert_eq!(top.m(), theta.m());
            // explicit bijection: tower id v + n * x  <->  theta id v * 2^m + x
            let n = base.n();
            let m = base.m();
            let map = |tower_id: usize| {
                let v = tower_id % n;
                let x = tower_id / n;
                (v << m) | x
            };
            for (a, b) in top.edges() {
                assert!(
                    theta.has_edge(map(a), map(b)),
                    "tower edge {a}-{b} missing from the full lift"
                );
            }
        }
    }

    #[test]
    fn undo_lift_examples() {
        // one crossing lift over C_3: width at most 2 * degree = 4
        let tower = LiftTower::from_signings(
            Graph::cycle(3),
            vec![LiftSigning::all_crossing(3)],
        )
        .unwrap();
        let seq = undo_lift_witness(&tower);
        assert!(seq.width().unwrap() <= 4);

        // trivial tower over K_4: plain clique contraction, width 0
        let tower = LiftTower::trivial(Graph::complete(4));
        let seq = undo_lift_witness(&tower);
        assert_eq!(seq.width().unwrap(), 0);

        // three random lifts over K_4: 32 vertices, width at most 6
        let tower = LiftTower::random(Graph::complete(4), 3, 99);
        assert_eq!(tower.top().n(), 32);
        let seq = undo_lift_witness(&tower);
        assert!(seq.width().unwrap() <= 6);
    }

    #[test]
    fn first_contraction_in_girth_five_regular_graphs() {
        // distance <= 2 endpoints share at most one neighbor (girth 5), so
        // any first contraction leaves red degree at least 2*degree - 2
        let g = Graph::petersen();
        let deg = g.regular_degree().unwrap();
        let t = crate::trigraph::Trigraph::initial(&g);
        for x in 1..=g.n() {
            for y in x + 1..=g.n() {
                let merged = t.contract(x, y, g.n() + 1).unwrap();
                let red = merged.node(g.n() + 1).unwrap().red.len();
                assert!(red >= 2 * deg - 2, "contracting {x},{y} gives red degree {red}");
            }
        }
        // the exact twin-width of such graphs is out of reach of the default
        // search limit (a degree-d girth-5 graph has at least d^2 + 1 > 9
        // vertices), so no sharper lower bound is asserted here
        assert!(g.n() > crate::trigraph::EXACT_TWW_LIMIT);
    }

    #[test]
    fn subdivided_clique_examples() {
        let g = subdivided_clique(4, 1);
        assert_eq!((g.n(), g.m()), (10, 12));

        assert_eq!(subdivided_clique(5, 0), Graph::complete(5));

        let g = subdivided_clique(6, 3);
        assert_eq!(g.n(), 6 + 15 * 3);
        assert_eq!(g.bomega(&mut budget()).unwrap(), 1);
    }

    #[test]
    fn subdivided_clique_branch_paths() {
        // every branch pair of (5, 2) is joined by a path of length 3
        let g = subdivided_clique(5, 2);
        for u in 0..5 {
            for v in u + 1..5 {
                let paths = g.distance_paths(u, v, 3, &mut budget()).unwrap();
                assert_eq!(paths.len(), 1);
                assert_eq!(paths[0].len(), 4);
            }
        }
    }

    #[test]
    fn lex_product_examples() {
        assert_eq!(lex_product_clique(&Graph::complete(2), 2), Graph::complete(4));

        let c5k2 = lex_product_clique(&Graph::cycle(5), 2);
        assert_eq!(c5k2.n(), 10);
        assert_eq!(c5k2.bomega(&mut budget()).unwrap(), 2);

        let g = Graph::petersen();
        assert_eq!(lex_product_clique(&g, 1), g);
    }

    #[test]
    fn lex_product_bomega_scales() {
        for s in 1..=3 {
            let g = lex_product_clique(&Graph::cycle(5), s);
            assert_eq!(g.bomega(&mut budget()).unwrap(), s);
        }
    }

    #[test]
    fn random_cograph_examples() {
        assert_eq!(random_cograph(1, 0), Graph::from_edges(1, []).unwrap());
        for seed in 0..30 {
            let g = random_cograph(8, seed);
            assert!(cograph::is_cograph(&g), "seed {seed} produced {g:?}");
        }
        // determinism
        assert_eq!(random_cograph(9, 42), random_cograph(9, 42));
        let a = random_cograph(16, 1);
        let b = random_cograph(16, 2);
        assert!(a != b || a.m() == b.m());
    }

    #[test]
    fn named_graphs() {
        assert_eq!(named_graph("k5").unwrap(), Graph::complete(5));
        assert_eq!(named_graph("c6").unwrap(), Graph::cycle(6));
        assert_eq!(named_graph("p4").unwrap(), Graph::path(4));
        assert_eq!(named_graph("petersen").unwrap(), Graph::petersen());
        assert_eq!(named_graph("k3,3").unwrap(), Graph::complete_bipartite(3, 3));
        assert!(named_graph("x9").is_err());
    }
}
