//! Weak and strong r-reachability with respect to a linear order, the
//! r-backconnectivity, and the three derived parameters — per fixed order,
//! and minimized over all orders for small graphs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;
use crate::order::LinearOrder;
use crate::{Budget, Error, Result};

/// Vertices weakly r-reachable from `v`: every `u` joined to `v` by a path
/// of length at most `r` on which `u` is the order minimum. Computed in the
/// reverse formulation: `u` reaches `v` within `r` steps using only
/// vertices ordered at or after `u`. Sorted output; contains `v`.
pub fn wreach_set(g: &Graph, ord: &LinearOrder, r: usize, v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..g.n())
        .filter(|&u| ord.rank(u) <= ord.rank(v) && reaches_through_tail(g, ord, r, u, v))
        .collect();
    out.sort_unstable();
    out
}

/// BFS from `u` restricted to vertices ranked at or after `u`; true when
/// `v` is within distance `r`.
fn reaches_through_tail(g: &Graph, ord: &LinearOrder, r: usize, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let base = ord.rank(u);
    let mut dist = vec![usize::MAX; g.n()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if dist[x] == r {
            continue;
        }
        for &w in g.neighbors(x) {
            if ord.rank(w) >= base && dist[w] == usize::MAX {
                if w == v {
                    return true;
                }
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
        }
    }
    false
}

/// Vertices strongly r-reachable from `v`: every `u` at or before `v` joined
/// by a path of length at most `r` whose inner vertices all come after `v`.
/// Sorted output; contains `v`.
pub fn sreach_set(g: &Graph, ord: &LinearOrder, r: usize, v: usize) -> Vec<usize> {
    // distances from v through strictly-later vertices only
    let mut dist = vec![usize::MAX; g.n()];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        if dist[x] + 1 >= r {
            continue; // inner vertices must leave room for the final edge
        }
        for &w in g.neighbors(x) {
            if ord.rank(w) > ord.rank(v) && dist[w] == usize::MAX {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<usize> = (0..g.n())
        .filter(|&u| {
            u == v
                || (ord.rank(u) < ord.rank(v)
                    && g.neighbors(u).iter().any(|&x| dist[x] != usize::MAX && dist[x] + 1 <= r))
        })
        .collect();
    out.sort_unstable();
    out
}

/// r-backconnectivity of `v`: the maximum number of paths of length at most
/// `r` starting at `v`, sharing no vertex but `v`, each ending strictly
/// before `v`. Truncating any such system at the first vertex ordered
/// before `v` keeps it disjoint, so the search may assume every path stays
/// after `v` until its final vertex. Exact backtracking with a node budget.
pub fn backconn(
    g: &Graph,
    ord: &LinearOrder,
    r: usize,
    v: usize,
    budget: &mut Budget,
) -> Result<usize> {
    let vrank = ord.rank(v);
    // distance to the closest admissible endpoint, through later vertices
    // only: an optimistic per-vertex bound used to prune path extensions
    let mut to_target = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for u in 0..g.n() {
        if ord.rank(u) < vrank {
            to_target[u] = 0;
            queue.push_back(u);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &w in g.neighbors(x) {
            if ord.rank(w) > vrank && to_target[w] == usize::MAX {
                to_target[w] = to_target[x] + 1;
                queue.push_back(w);
            }
        }
    }

    let starts: Vec<usize> = g.neighbors(v).to_vec();
    let mut used = vec![false; g.n()];
    used[v] = true;
    let mut best = 0;
    // no packing can beat the degree or the number of earlier vertices
    let ceiling = starts.len().min(vrank);
    search_paths(g, ord, r, vrank, &to_target, &starts, 0, 0, &mut used, &mut best, ceiling, budget)?;
    Ok(best)
}

/// Strong coloring number of the order: max |Sreach_r| over the vertices.
/// Cheaper than [`profile`] when the backconnectivity is not needed.
pub fn scol_of_order(g: &Graph, ord: &LinearOrder, r: usize) -> usize {
    (0..g.n()).map(|v| sreach_set(g, ord, r, v).len()).max().unwrap_or(0)
}

/// Weak coloring number of the order: max |Wreach_r| over the vertices.
pub fn wcol_of_order(g: &Graph, ord: &LinearOrder, r: usize) -> usize {
    let mut counts = vec![0usize; g.n()];
    let mut dist = vec![usize::MAX; g.n()];
    for u in 0..g.n() {
        dist.fill(usize::MAX);
        dist[u] = 0;
        counts[u] += 1;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if dist[x] == r {
                continue;
            }
            for &w in g.neighbors(x) {
                if ord.rank(w) >= ord.rank(u) && dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    if w != u {
                        counts[w] += 1;
                    }
                    queue.push_back(w);
                }
            }
        }
    }
    counts.into_iter().max().unwrap_or(0)
}

#[allow(clippy::too_many_arguments)]
fn search_paths(
    g: &Graph,
    ord: &LinearOrder,
    r: usize,
    vrank: usize,
    to_target: &[usize],
    starts: &[usize],
    next_start: usize,
    count: usize,
    used: &mut Vec<bool>,
    best: &mut usize,
    ceiling: usize,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    *best = (*best).max(count);
    if *best == ceiling
        || next_start >= starts.len()
        || count + (starts.len() - next_start) <= *best
    {
        return Ok(());
    }
    let x = starts[next_start];
    // route a path through the neighbor x, then continue with the rest
    if !used[x] {
        if ord.rank(x) < vrank {
            used[x] = true;
            search_paths(g, ord, r, vrank, to_target, starts, next_start + 1, count + 1, used, best, ceiling, budget)?;
            used[x] = false;
        } else if r >= 2 && to_target[x] != usize::MAX && 1 + to_target[x] <= r {
            used[x] = true;
            extend_path(g, ord, r, vrank, to_target, starts, next_start, count, x, 1, used, best, ceiling, budget)?;
            used[x] = false;
        }
    }
    if *best == ceiling {
        return Ok(());
    }
    // or leave x unused
    search_paths(g, ord, r, vrank, to_target, starts, next_start + 1, count, used, best, ceiling, budget)
}

#[allow(clippy::too_many_arguments)]
fn extend_path(
    g: &Graph,
    ord: &LinearOrder,
    r: usize,
    vrank: usize,
    to_target: &[usize],
    starts: &[usize],
    start_idx: usize,
    count: usize,
    tip: usize,
    len: usize,
    used: &mut Vec<bool>,
    best: &mut usize,
    ceiling: usize,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    for &w in g.neighbors(tip) {
        if used[w] {
            continue;
        }
        if *best == ceiling {
            return Ok(());
        }
        if ord.rank(w) < vrank {
            // path complete; endpoints are used vertices like inner ones
            used[w] = true;
            search_paths(g, ord, r, vrank, to_target, starts, start_idx + 1, count + 1, used, best, ceiling, budget)?;
            used[w] = false;
        } else if len + 1 < r && to_target[w] != usize::MAX && len + 1 + to_target[w] <= r {
            used[w] = true;
            extend_path(g, ord, r, vrank, to_target, starts, start_idx, count, w, len + 1, used, best, ceiling, budget)?;
            used[w] = false;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct VertexReach {
    pub vertex: usize,
    pub rank: usize,
    #[serde(skip)]
    pub wreach_set: Vec<usize>,
    #[serde(skip)]
    pub sreach_set: Vec<usize>,
    pub wreach: usize,
    pub sreach: usize,
    pub backconn: usize,
}

/// Per-vertex reachability sets and the three per-order maxima.
#[derive(Debug, Clone, Serialize)]
pub struct ReachProfile {
    pub r: usize,
    pub per_vertex: Vec<VertexReach>,
    /// max |Wreach_r| (counts the vertex itself)
    pub wcol: usize,
    /// max |Sreach_r| (counts the vertex itself)
    pub scol: usize,
    /// max backconnectivity (does not count the vertex)
    pub adm: usize,
}

pub fn profile(g: &Graph, ord: &LinearOrder, r: usize, budget: &mut Budget) -> Result<ReachProfile> {
    let n = g.n();
    assert_eq!(ord.n(), n, "order and graph sizes differ");
    let mut wreach: Vec<Vec<usize>> = vec![Vec::new(); n];
    // one BFS per source u marks u as weakly reachable in everything it reaches
    let mut dist = vec![usize::MAX; n];
    for u in 0..n {
        dist.fill(usize::MAX);
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        wreach[u].push(u);
        while let Some(x) = queue.pop_front() {
            if dist[x] == r {
                continue;
            }
            for &w in g.neighbors(x) {
                if ord.rank(w) >= ord.rank(u) && dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    if w != u {
                        wreach[w].push(u);
                    }
                    queue.push_back(w);
                }
            }
        }
    }
    let mut per_vertex = Vec::with_capacity(n);
    for v in 0..n {
        let mut w = std::mem::take(&mut wreach[v]);
        w.sort_unstable();
        let s = sreach_set(g, ord, r, v);
        let b = backconn(g, ord, r, v, budget)?;
        debug_assert!(s.iter().all(|u| w.binary_search(u).is_ok()), "Sreach within Wreach");
        debug_assert!(b + 1 <= s.len(), "truncated path systems witness strong reachability");
        per_vertex.push(VertexReach {
            vertex: v,
            rank: ord.rank(v),
            wreach: w.len(),
            sreach: s.len(),
            backconn: b,
            wreach_set: w,
            sreach_set: s,
        });
    }
    let wcol = per_vertex.iter().map(|p| p.wreach).max().unwrap_or(0);
    let scol = per_vertex.iter().map(|p| p.sreach).max().unwrap_or(0);
    let adm = per_vertex.iter().map(|p| p.backconn).max().unwrap_or(0);
    Ok(ReachProfile { r, per_vertex, wcol, scol, adm })
}

/// CSV emitter with the fixed columns `vertex,rank,wreach,sreach,backconn`;
/// vertex ids are 1-based as in the graph files.
pub fn profile_csv(p: &ReachProfile) -> String {
    let mut out = String::from("vertex,rank,wreach,sreach,backconn\n");
    for row in &p.per_vertex {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.vertex + 1,
            row.rank,
            row.wreach,
            row.sreach,
            row.backconn
        ));
    }
    out
}

pub fn profile_json(p: &ReachProfile) -> String {
    #[derive(Serialize)]
    struct Row {
        vertex: usize,
        rank: usize,
        wreach: usize,
        sreach: usize,
        backconn: usize,
    }
    let rows: Vec<Row> = p
        .per_vertex
        .iter()
        .map(|r| Row {
            vertex: r.vertex + 1,
            rank: r.rank,
            wreach: r.wreach,
            sreach: r.sreach,
            backconn: r.backconn,
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("plain structs serialize")
}

// ---------------------------------------------------------------------------
// Exact parameters: minimum over all linear orders
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Wcol,
    Scol,
    Adm,
}

impl ParamKind {
    pub fn name(&self) -> &'static str {
        match self {
            ParamKind::Wcol => "wcol",
            ParamKind::Scol => "scol",
            ParamKind::Adm => "adm",
        }
    }
}

/// Default vertex limit for the exact search over orders.
pub const EXACT_PARAM_LIMIT: usize = 11;

/// Exact `wcol_r`, `scol_r` or `adm_r`: the minimum over all linear orders
/// of the per-order maximum, with an optimal witness order (the
/// lexicographically least among the optima).
///
/// Branch and bound building the order left to right. A vertex's
/// contribution is fixed the moment it is placed — everything placed later
/// is ordered after it, everything unplaced is a candidate inner vertex —
/// so the partial maximum only grows and prunes against the incumbent.
pub fn exact_param(
    g: &Graph,
    kind: ParamKind,
    r: usize,
    limit: usize,
    budget: &mut Budget,
) -> Result<(usize, LinearOrder)> {
    let n = g.n();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 0 {
        return Ok((0, LinearOrder::identity(0)));
    }
    // seed the incumbent with two cheap orders
    let mut incumbent = usize::MAX;
    for ord in [LinearOrder::identity(n), g.degeneracy().1] {
        let p = profile(g, &ord, r, budget)?;
        let value = match kind {
            ParamKind::Wcol => p.wcol,
            ParamKind::Scol => p.scol,
            ParamKind::Adm => p.adm,
        };
        incumbent = incumbent.min(value);
    }

    let mut search = OrderSearch::new(g, kind, r);
    search.minimize(&mut incumbent, budget)?;
    let best = incumbent;

    // second phase: greedily extend the lexicographically least optimal order
    let mut search = OrderSearch::new(g, kind, r);
    let mut prefix: Vec<usize> = Vec::with_capacity(n);
    for _ in 0..n {
        let mut chosen = None;
        for v in 0..n {
            if search.placed[v] {
                continue;
            }
            let cost = search.place(v, budget)?;
            if cost <= best && search.completable(best, budget)? {
                chosen = Some(v);
                break;
            }
            search.unplace(v);
        }
        let v = chosen.expect("the optimum is attainable");
        prefix.push(v);
    }
    Ok((best, LinearOrder::from_sequence(prefix)?))
}

struct OrderSearch<'a> {
    g: &'a Graph,
    kind: ParamKind,
    r: usize,
    placed: Vec<bool>,
    ranks: Vec<usize>,
    depth: usize,
    /// wcol only: tokens[w] = number of placed u with w in Ball(u)
    tokens: Vec<usize>,
    /// wcol only: per placement, the vertices whose token count it bumped
    touched: Vec<Vec<usize>>,
    /// per placement, the cost charged to the placed vertex
    costs: Vec<usize>,
}

impl<'a> OrderSearch<'a> {
    fn new(g: &'a Graph, kind: ParamKind, r: usize) -> Self {
        OrderSearch {
            g,
            kind,
            r,
            placed: vec![false; g.n()],
            ranks: vec![usize::MAX; g.n()],
            depth: 0,
            tokens: vec![0; g.n()],
            touched: Vec::new(),
            costs: Vec::new(),
        }
    }

    /// Places `v` at the next rank and returns its final cost.
    fn place(&mut self, v: usize, budget: &mut Budget) -> Result<usize> {
        budget.tick()?;
        self.placed[v] = true;
        self.ranks[v] = self.depth;
        self.depth += 1;
        let cost = match self.kind {
            ParamKind::Scol => self.scol_cost(v),
            ParamKind::Adm => self.adm_cost(v, budget)?,
            ParamKind::Wcol => {
                // ball of v over the not-yet-placed tail
                let ball = self.tail_ball(v);
                for &w in &ball {
                    self.tokens[w] += 1;
                }
                let cost = self.tokens[v];
                self.touched.push(ball);
                cost
            }
        };
        self.costs.push(cost);
        Ok(cost)
    }

    fn unplace(&mut self, v: usize) {
        self.placed[v] = false;
        self.ranks[v] = usize::MAX;
        self.depth -= 1;
        self.costs.pop();
        if self.kind == ParamKind::Wcol {
            for w in self.touched.pop().expect("matched place") {
                self.tokens[w] -= 1;
            }
        }
    }

    /// Vertices reachable from `v` within `r` steps through unplaced
    /// vertices (plus `v` itself).
    fn tail_ball(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.g.n()];
        dist[v] = 0;
        let mut out = vec![v];
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if dist[x] == self.r {
                continue;
            }
            for &w in self.g.neighbors(x) {
                if !self.placed[w] && dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out
    }

    /// |Sreach| of `v` with the current prefix before it and everything
    /// else after it.
    fn scol_cost(&self, v: usize) -> usize {
        let mut dist = vec![usize::MAX; self.g.n()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if dist[x] + 1 >= self.r {
                continue;
            }
            for &w in self.g.neighbors(x) {
                if !self.placed[w] && dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    queue.push_back(w);
                }
            }
        }
        1 + (0..self.g.n())
            .filter(|&u| {
                u != v
                    && self.placed[u]
                    && self.g.neighbors(u).iter().any(|&x| dist[x] != usize::MAX && dist[x] + 1 <= self.r)
            })
            .count()
    }

    fn adm_cost(&self, v: usize, budget: &mut Budget) -> Result<usize> {
        // backconn against the synthetic order: prefix before v, rest after
        let mut seqv: Vec<usize> = (0..self.g.n()).collect();
        seqv.sort_by_key(|&u| {
            if u == v {
                (1, 0)
            } else if self.placed[u] {
                (0, self.ranks[u])
            } else {
                (2, u)
            }
        });
        let ord = LinearOrder::from_sequence(seqv).expect("permutation");
        backconn(self.g, &ord, self.r, v, budget)
    }

    /// Phase 1: explore all completions, updating `incumbent` in place.
    fn minimize(&mut self, incumbent: &mut usize, budget: &mut Budget) -> Result<()> {
        if self.depth == self.g.n() {
            let value = self.costs.iter().copied().max().unwrap_or(0);
            *incumbent = (*incumbent).min(value);
            return Ok(());
        }
        if self.kind == ParamKind::Wcol && self.wcol_floor() >= *incumbent {
            return Ok(());
        }
        for v in 0..self.g.n() {
            if self.placed[v] {
                continue;
            }
            let cost = self.place(v, budget)?;
            if cost < *incumbent && self.costs.iter().copied().max().unwrap_or(0) < *incumbent {
                self.minimize(incumbent, budget)?;
            }
            self.unplace(v);
        }
        Ok(())
    }

    /// Phase 2: can the current prefix be completed with all costs <= bound?
    fn completable(&mut self, bound: usize, budget: &mut Budget) -> Result<bool> {
        if self.costs.iter().any(|&c| c > bound) {
            return Ok(false);
        }
        if self.kind == ParamKind::Wcol && self.wcol_floor() > bound {
            return Ok(false);
        }
        if self.depth == self.g.n() {
            return Ok(true);
        }
        for v in 0..self.g.n() {
            if self.placed[v] {
                continue;
            }
            let cost = self.place(v, budget)?;
            let ok = cost <= bound && self.completable(bound, budget)?;
            self.unplace(v);
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Unplaced vertices will pay at least their current tokens plus one.
    fn wcol_floor(&self) -> usize {
        (0..self.g.n())
            .filter(|&w| !self.placed[w])
            .map(|w| self.tokens[w] + 1)
            .max()
            .unwrap_or(0)
    }
}
