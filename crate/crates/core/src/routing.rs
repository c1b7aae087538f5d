//! Hierarchical routing over a box cover.
//!
//! Each box of a cover becomes a node of a [`SuperGraph`]. A query runs
//! Dijkstra over boxes, then walks the resulting box sequence: inside each box
//! it picks the crossing edge that is cheapest to reach from the current node,
//! and finally routes to the target inside the last box. Loops created at box
//! borders are cut out of the stitched walk.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};

use serde::{Deserialize, Serialize};

use crate::cover::partition_violations;
use crate::cover::BoxCover;
use crate::error::{Error, Result};
use crate::graph::{dijkstra_path, dijkstra_sssp, Graph, UNREACHABLE};

type Link = (usize, usize, f64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Dijkstra,
    Bcr,
}

/// An `s`→`t` path through the base graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Route {
    pub method: Method,
    pub s: usize,
    pub t: usize,
    pub nodes: Vec<usize>,
    /// Sum of the traversed edge weights.
    pub cost: f64,
    /// Boxes visited by the super-graph path (BCR only).
    pub box_sequence: Option<Vec<usize>>,
    /// Legs that could not be routed inside their box and were replaced by a
    /// search over the whole graph.
    pub fallbacks: usize,
    pub stretch: Option<f64>,
}

impl Route {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("route serializes")
    }

    /// Checks that consecutive nodes are adjacent, the cost is their weight
    /// sum, the walk is simple and it joins `s` to `t`. Returns a description
    /// of the first problem found.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.nodes.first() != Some(&self.s) || self.nodes.last() != Some(&self.t) {
            return Err(format!("route does not join {} to {}", self.s, self.t));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(v) = self.nodes.iter().find(|v| !seen.insert(**v)) {
            return Err(format!("node {v} repeats"));
        }
        let cost = path_cost(g, &self.nodes).ok_or_else(|| "non-adjacent step".to_string())?;
        if cost != self.cost {
            return Err(format!("cost {} but edges sum to {cost}", self.cost));
        }
        Ok(())
    }
}

/// Boxes joined by at least one base edge.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperEdge {
    /// Box ids, `a < b`.
    pub a: usize,
    pub b: usize,
    /// Minimum weight among `links`.
    pub weight: f64,
    /// Base edges `(u, v, w)`, `u < v`, crossing between the two boxes,
    /// sorted by `(u, v)`.
    pub links: Vec<(usize, usize, f64)>,
}

/// Quotient of a graph by a box cover.
#[derive(Debug, Clone)]
pub struct SuperGraph<'a> {
    base: &'a Graph,
    cover: &'a BoxCover,
    edges: Vec<SuperEdge>,
    /// Per box: `(neighbor box, super-edge weight)`, sorted by neighbor.
    adjacency: Vec<Vec<(usize, f64)>>,
    /// Per box: index into `edges` parallel to `adjacency`.
    edge_index: Vec<Vec<usize>>,
    /// Position of each node inside its box's node list.
    local: Vec<usize>,
    /// Per box: adjacency of the induced subgraph in local indices.
    inner: Vec<Vec<Vec<(usize, f64)>>>,
}

impl<'a> SuperGraph<'a> {
    pub fn base(&self) -> &'a Graph {
        self.base
    }

    pub fn cover(&self) -> &'a BoxCover {
        self.cover
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> &[SuperEdge] {
        &self.edges
    }

    pub fn neighbors(&self, b: usize) -> &[(usize, f64)] {
        &self.adjacency[b]
    }

    fn edge_between(&self, a: usize, b: usize) -> &SuperEdge {
        let pos = self.adjacency[a]
            .binary_search_by_key(&b, |&(x, _)| x)
            .expect("consecutive boxes on a super path are adjacent");
        &self.edges[self.edge_index[a][pos]]
    }

    /// Shortest path between two nodes of box `b` inside the box, as global
    /// node ids.
    fn inner_path(&self, b: usize, from: usize, to: usize) -> Option<Vec<usize>> {
        let (dist, pred) = shortest_paths(&self.inner[b], self.local[from], Some(self.local[to]));
        if dist[self.local[to]] == UNREACHABLE {
            return None;
        }
        let nodes = &self.cover.boxes[b].nodes;
        Some(unwind(&pred, self.local[to]).into_iter().map(|i| nodes[i]).collect())
    }
}

/// Builds the quotient graph of `g` under `cover`.
///
/// The cover must partition the nodes of `g`; its shape (radius, diameter) is
/// not re-checked here.
pub fn build_supergraph<'a>(g: &'a Graph, cover: &'a BoxCover) -> Result<SuperGraph<'a>> {
    let violations = partition_violations(g, cover)?;
    if let Some(first) = violations.first() {
        return Err(Error::InvalidCover(format!(
            "{first} ({} violations)",
            violations.len()
        )));
    }
    let k = cover.box_count();

    let mut local = vec![0; g.node_count()];
    for b in &cover.boxes {
        for (i, &v) in b.nodes.iter().enumerate() {
            local[v] = i;
        }
    }
    let mut inner: Vec<Vec<Vec<(usize, f64)>>> = cover
        .boxes
        .iter()
        .map(|b| vec![Vec::new(); b.nodes.len()])
        .collect();

    let mut crossing: HashMap<(usize, usize), Vec<Link>> = HashMap::new();
    for &(u, v, w) in g.edges() {
        let (bu, bv) = (cover.assignment[u], cover.assignment[v]);
        if bu == bv {
            inner[bu][local[u]].push((local[v], w));
            inner[bu][local[v]].push((local[u], w));
        } else {
            crossing
                .entry((bu.min(bv), bu.max(bv)))
                .or_default()
                .push((u, v, w));
        }
    }
    for lists in &mut inner {
        for list in lists {
            list.sort_by_key(|&(x, _)| x);
        }
    }

    let mut edges: Vec<SuperEdge> = crossing
        .into_iter()
        .map(|((a, b), links)| {
            // g.edges() is already sorted by (u, v)
            let weight = links.iter().map(|l| l.2).fold(f64::INFINITY, f64::min);
            SuperEdge { a, b, weight, links }
        })
        .collect();
    edges.sort_by_key(|e| (e.a, e.b));

    let mut adjacency = vec![Vec::new(); k];
    let mut edge_index = vec![Vec::new(); k];
    for (i, e) in edges.iter().enumerate() {
        adjacency[e.a].push((e.b, e.weight));
        edge_index[e.a].push(i);
        adjacency[e.b].push((e.a, e.weight));
        edge_index[e.b].push(i);
    }
    // sort by neighbor box, keeping edge_index parallel
    for (adj, idx) in adjacency.iter_mut().zip(edge_index.iter_mut()) {
        let mut paired: Vec<_> = adj.drain(..).zip(idx.drain(..)).collect();
        paired.sort_by_key(|&((x, _), _)| x);
        for ((x, w), i) in paired {
            adj.push((x, w));
            idx.push(i);
        }
    }

    Ok(SuperGraph {
        base: g,
        cover,
        edges,
        adjacency,
        edge_index,
        local,
        inner,
    })
}

/// Routes `s` to `t` hierarchically through the boxes of `sg`.
pub fn bcr_route(sg: &SuperGraph<'_>, s: usize, t: usize) -> Result<Route> {
    let g = sg.base;
    g.check_node(s)?;
    g.check_node(t)?;
    let cover = sg.cover;
    let (first, last) = (cover.box_of(s), cover.box_of(t));
    let mut fallbacks = 0;

    let route = |walk: Vec<usize>, boxes: Vec<usize>, fallbacks: usize| {
        let nodes = remove_loops(walk);
        let cost = path_cost(g, &nodes).expect("stitched walks follow edges");
        Route {
            method: Method::Bcr,
            s,
            t,
            nodes,
            cost,
            box_sequence: Some(boxes),
            fallbacks,
            stretch: None,
        }
    };

    if s == t {
        return Ok(route(vec![s], vec![first], 0));
    }
    if first == last {
        let walk = match sg.inner_path(first, s, t) {
            Some(p) => p,
            None => {
                fallbacks += 1;
                full_path(g, s, t)?
            }
        };
        return Ok(route(walk, vec![first], fallbacks));
    }

    let (dist, pred) = shortest_paths(&sg.adjacency, first, Some(last));
    if dist[last] == UNREACHABLE {
        // the box path mirrors connectivity in g, so this only happens for
        // disconnected endpoints; kept for covers that are not partitions of
        // the same graph
        let walk = full_path(g, s, t)?;
        let mut boxes: Vec<usize> = walk.iter().map(|&v| cover.box_of(v)).collect();
        boxes.dedup();
        return Ok(route(walk, boxes, 1));
    }
    let boxes = unwind(&pred, last);

    let mut walk = vec![s];
    let mut current = s;
    for hop in boxes.windows(2) {
        let (here, next) = (hop[0], hop[1]);
        let edge = sg.edge_between(here, next);
        // crossing edges oriented here -> next, in (u, v) order
        let mut gates: Vec<(usize, usize, f64)> = edge
            .links
            .iter()
            .map(|&(u, v, w)| if cover.box_of(u) == here { (u, v, w) } else { (v, u, w) })
            .collect();
        gates.sort_by_key(|&(u, v, _)| (u, v));

        let (inner_dist, inner_pred) = shortest_paths(&sg.inner[here], sg.local[current], None);
        let best = pick_gate(&gates, |u| inner_dist[sg.local[u]]);
        let (leg, gate_to) = match best {
            Some((u, v)) => {
                let members = &cover.boxes[here].nodes;
                let leg: Vec<usize> = unwind(&inner_pred, sg.local[u])
                    .into_iter()
                    .map(|i| members[i])
                    .collect();
                (leg, v)
            }
            None => {
                fallbacks += 1;
                let field = dijkstra_sssp(g, current, None)?;
                let (u, v) = pick_gate(&gates, |u| field.dist[u]).ok_or(Error::NoRoute { s, t })?;
                (field.path_to(u).expect("gate is reachable"), v)
            }
        };
        walk.extend_from_slice(&leg[1..]);
        walk.push(gate_to);
        current = gate_to;
    }
    let tail = match sg.inner_path(last, current, t) {
        Some(p) => p,
        None => {
            fallbacks += 1;
            full_path(g, current, t)?
        }
    };
    walk.extend_from_slice(&tail[1..]);
    Ok(route(walk, boxes, fallbacks))
}

/// Crossing edge minimizing `reach(u) + w`, ties to the first in `gates`.
fn pick_gate(gates: &[(usize, usize, f64)], reach: impl Fn(usize) -> f64) -> Option<(usize, usize)> {
    let mut best: Option<(f64, usize, usize)> = None;
    for &(u, v, w) in gates {
        let d = reach(u);
        if d == UNREACHABLE {
            continue;
        }
        let score = d + w;
        if best.is_none_or(|(b, _, _)| score < b) {
            best = Some((score, u, v));
        }
    }
    best.map(|(_, u, v)| (u, v))
}

fn full_path(g: &Graph, s: usize, t: usize) -> Result<Vec<usize>> {
    dijkstra_path(g, s, t)
        .map(|(p, _)| p)
        .ok_or(Error::NoRoute { s, t })
}

/// Flat Dijkstra baseline.
pub fn dijkstra_route(g: &Graph, s: usize, t: usize) -> Result<Route> {
    g.check_node(s)?;
    g.check_node(t)?;
    let (nodes, cost) = dijkstra_path(g, s, t).ok_or(Error::NoRoute { s, t })?;
    Ok(Route {
        method: Method::Dijkstra,
        s,
        t,
        nodes,
        cost,
        box_sequence: None,
        fallbacks: 0,
        stretch: None,
    })
}

/// Fills `stretch`: route cost over the optimal `s`→`t` cost, 1 when `s = t`.
pub fn compute_stretch(g: &Graph, route: &Route) -> Result<Route> {
    let mut out = route.clone();
    out.stretch = Some(if route.s == route.t {
        1.0
    } else {
        let best = dijkstra_route(g, route.s, route.t)?;
        route.cost / best.cost
    });
    Ok(out)
}

/// Cuts every cycle out of a walk: when a node comes back, everything since
/// its first visit is dropped.
fn remove_loops(walk: Vec<usize>) -> Vec<usize> {
    let mut position: HashMap<usize, usize> = HashMap::new();
    let mut out: Vec<usize> = Vec::with_capacity(walk.len());
    for v in walk {
        if let Some(&i) = position.get(&v) {
            for x in out.drain(i + 1..) {
                position.remove(&x);
            }
        } else {
            position.insert(v, out.len());
            out.push(v);
        }
    }
    out
}

fn path_cost(g: &Graph, nodes: &[usize]) -> Option<f64> {
    nodes
        .windows(2)
        .try_fold(0.0, |acc, p| g.weight(p[0], p[1]).map(|w| acc + w))
}

#[derive(Copy, Clone, PartialEq)]
struct State {
    cost: f64,
    node: usize,
}

impl Eq for State {}

impl Ord for State {
    fn cmp(&self, other: &Self) -> Ordering {
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

/// Dijkstra on a plain adjacency list, lower predecessor id on ties.
fn shortest_paths(
    adjacency: &[Vec<(usize, f64)>],
    source: usize,
    target: Option<usize>,
) -> (Vec<f64>, Vec<Option<usize>>) {
    let mut dist = vec![UNREACHABLE; adjacency.len()];
    let mut pred = vec![None; adjacency.len()];
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
        for &(next, w) in &adjacency[node] {
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

fn unwind(pred: &[Option<usize>], to: usize) -> Vec<usize> {
    let mut path = vec![to];
    let mut cur = to;
    while let Some(p) = pred[cur] {
        path.push(p);
        cur = p;
    }
    path.reverse();
    path
}
