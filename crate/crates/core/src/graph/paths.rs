//! Dijkstra, breadth-first hop counts, eccentricities and the Floyd–Warshall
//! oracle.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use super::Graph;
use crate::error::{Error, Result};

/// Distance of a node that cannot be reached from the source.
pub const UNREACHABLE: f64 = f64::INFINITY;

/// Node-count limit of [`apsp_oracle`].
pub const DEFAULT_ORACLE_CAP: usize = 512;

/// Single-source shortest-path distances and predecessors.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceField {
    pub source: usize,
    /// [`UNREACHABLE`] for nodes outside the source's reach.
    pub dist: Vec<f64>,
    pub pred: Vec<Option<usize>>,
}

impl DistanceField {
    pub fn distance(&self, v: usize) -> Option<f64> {
        let d = self.dist[v];
        (d != UNREACHABLE).then_some(d)
    }

    /// Node sequence from the source to `t`, following predecessors.
    pub fn path_to(&self, t: usize) -> Option<Vec<usize>> {
        self.distance(t)?;
        let mut path = vec![t];
        let mut cur = t;
        while let Some(p) = self.pred[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        Some(path)
    }
}

/// Breadth-first hop counts, ignoring weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopField {
    pub source: usize,
    /// `None` for unreachable nodes.
    pub hops: Vec<Option<u32>>,
}

#[derive(Copy, Clone, PartialEq)]
struct State {
    cost: f64,
    node: usize,
}

impl Eq for State {}

impl Ord for State {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on cost, then on node id
        other
            .cost
            .total_cmp(&self.cost)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for State {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dijkstra over the nodes admitted by `allowed`, stopping once `target` is
/// settled. Among equal-cost relaxations the lower predecessor id wins.
fn dijkstra_core(
    g: &Graph,
    source: usize,
    allowed: Option<&[bool]>,
    target: Option<usize>,
) -> (Vec<f64>, Vec<Option<usize>>) {
    let n = g.node_count();
    let mut dist = vec![UNREACHABLE; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(State {
        cost: 0.0,
        node: source,
    });
    while let Some(State { cost, node }) = heap.pop() {
        if cost > dist[node] {
            continue;
        }
        if Some(node) == target {
            break;
        }
        for &(next, w) in g.neighbors(node) {
            if allowed.is_some_and(|mask| !mask[next]) {
                continue;
            }
            let candidate = cost + w;
            if candidate < dist[next] {
                dist[next] = candidate;
                pred[next] = Some(node);
                heap.push(State {
                    cost: candidate,
                    node: next,
                });
            } else if candidate == dist[next] && pred[next].is_some_and(|p| node < p) {
                pred[next] = Some(node);
            }
        }
    }
    (dist, pred)
}

fn scope_mask(g: &Graph, source: usize, restrict: Option<&[usize]>) -> Result<Option<Vec<bool>>> {
    g.check_node(source)?;
    let Some(nodes) = restrict else {
        return Ok(None);
    };
    let mut mask = vec![false; g.node_count()];
    for &v in nodes {
        g.check_node(v)?;
        mask[v] = true;
    }
    if !mask[source] {
        return Err(Error::SourceOutsideScope(source));
    }
    Ok(Some(mask))
}

/// Shortest weighted distances from `source`, optionally within the subgraph
/// induced by `restrict`.
pub fn dijkstra_sssp(g: &Graph, source: usize, restrict: Option<&[usize]>) -> Result<DistanceField> {
    let mask = scope_mask(g, source, restrict)?;
    let (dist, pred) = dijkstra_core(g, source, mask.as_deref(), None);
    Ok(DistanceField { source, dist, pred })
}

/// Shortest `s`→`t` path over the whole graph with early exit, as
/// `(nodes, cost)`. Callers validate `s` and `t`.
pub(crate) fn dijkstra_path(g: &Graph, s: usize, t: usize) -> Option<(Vec<usize>, f64)> {
    let (dist, pred) = dijkstra_core(g, s, None, Some(t));
    if dist[t] == UNREACHABLE {
        return None;
    }
    let mut path = vec![t];
    let mut cur = t;
    while let Some(p) = pred[cur] {
        path.push(p);
        cur = p;
    }
    path.reverse();
    Some((path, dist[t]))
}

/// Hop counts from `source`, optionally within the subgraph induced by
/// `restrict`.
pub fn bfs_hops(g: &Graph, source: usize, restrict: Option<&[usize]>) -> Result<HopField> {
    let mask = scope_mask(g, source, restrict)?;
    let mut scratch = HopScratch::new(g.node_count());
    scratch.run(g, source, u32::MAX, |v| mask.as_ref().is_none_or(|m| m[v]));
    let hops = (0..g.node_count()).map(|v| scratch.hops(v)).collect();
    Ok(HopField { source, hops })
}

/// Hop eccentricity of every node in scope (all nodes, or `restrict`),
/// measured inside the induced subgraph.
pub fn eccentricities(g: &Graph, restrict: Option<&[usize]>) -> Result<BTreeMap<usize, u32>> {
    let nodes: Vec<usize> = match restrict {
        Some(r) => {
            let mut r = r.to_vec();
            r.sort_unstable();
            r.dedup();
            r
        }
        None => (0..g.node_count()).collect(),
    };
    let mut mask = vec![false; g.node_count()];
    for &v in &nodes {
        g.check_node(v)?;
        mask[v] = true;
    }
    let mut scratch = HopScratch::new(g.node_count());
    let mut ecc = BTreeMap::new();
    for &v in &nodes {
        let reached = scratch.run(g, v, u32::MAX, |x| mask[x]);
        if reached.len() != nodes.len() {
            return Err(Error::DisconnectedScope);
        }
        let last = *reached.last().expect("source is visited");
        let far = scratch.hops(last).expect("visited");
        ecc.insert(v, far);
    }
    Ok(ecc)
}

/// Floyd–Warshall all-pairs distances, for graphs of at most
/// [`DEFAULT_ORACLE_CAP`] nodes.
pub fn apsp_oracle(g: &Graph) -> Result<Vec<Vec<f64>>> {
    apsp_oracle_with_cap(g, DEFAULT_ORACLE_CAP)
}

pub fn apsp_oracle_with_cap(g: &Graph, cap: usize) -> Result<Vec<Vec<f64>>> {
    let n = g.node_count();
    if n > cap {
        return Err(Error::OracleCapExceeded { node_count: n, cap });
    }
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0.0;
    }
    for &(u, v, w) in g.edges() {
        d[u][v] = w;
        d[v][u] = w;
    }
    for k in 0..n {
        let via = d[k].clone();
        for row in d.iter_mut() {
            let dik = row[k];
            if dik == UNREACHABLE {
                continue;
            }
            for (dij, &dkj) in row.iter_mut().zip(&via) {
                if dik + dkj < *dij {
                    *dij = dik + dkj;
                }
            }
        }
    }
    Ok(d)
}

const UNSEEN: u32 = u32::MAX;

/// Reusable breadth-first search state. Resetting costs only the nodes the
/// previous run touched, so many small searches on a large graph stay cheap.
pub(crate) struct HopScratch {
    dist: Vec<u32>,
    order: Vec<usize>,
}

impl HopScratch {
    pub(crate) fn new(n: usize) -> Self {
        HopScratch {
            dist: vec![UNSEEN; n],
            order: Vec::new(),
        }
    }

    /// Visits nodes within `max_depth` hops of `source` through nodes accepted
    /// by `allowed` and returns them in BFS order. `source` is always visited.
    pub(crate) fn run(
        &mut self,
        g: &Graph,
        source: usize,
        max_depth: u32,
        allowed: impl Fn(usize) -> bool,
    ) -> &[usize] {
        for &v in &self.order {
            self.dist[v] = UNSEEN;
        }
        self.order.clear();
        self.dist[source] = 0;
        self.order.push(source);
        let mut head = 0;
        while head < self.order.len() {
            let x = self.order[head];
            head += 1;
            let dx = self.dist[x];
            if dx >= max_depth {
                continue;
            }
            for &(y, _) in g.neighbors(x) {
                if self.dist[y] == UNSEEN && allowed(y) {
                    self.dist[y] = dx + 1;
                    self.order.push(y);
                }
            }
        }
        &self.order
    }

    /// Hop count of `v` in the last run.
    pub(crate) fn hops(&self, v: usize) -> Option<u32> {
        let d = self.dist[v];
        (d != UNSEEN).then_some(d)
    }

    pub(crate) fn visited(&self) -> &[usize] {
        &self.order
    }
}
