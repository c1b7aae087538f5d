//! Undirected weighted graphs and the path primitives built on them.

mod generate;
mod io;
mod paths;

pub use generate::{gen_random_graph, gen_ternary_tree};
pub use io::{parse_edge_list, write_edge_list};
pub(crate) use paths::{dijkstra_path, HopScratch};
pub use paths::{
    apsp_oracle, apsp_oracle_with_cap, bfs_hops, dijkstra_sssp, eccentricities, DistanceField,
    HopField, DEFAULT_ORACLE_CAP, UNREACHABLE,
};

use crate::error::{Error, Result};

/// An immutable undirected graph with strictly positive edge weights.
///
/// Node ids are `0..node_count()`. When the graph came from an edge list with
/// arbitrary ids, `label(v)` returns the id the input used for `v`.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    labels: Vec<u64>,
    /// Canonical edges, `u < v`, sorted by `(u, v)`.
    edges: Vec<(usize, usize, f64)>,
    /// Per-node neighbors sorted by neighbor id.
    adjacency: Vec<Vec<(usize, f64)>>,
}

impl Graph {
    /// Builds a graph over `node_count` nodes labelled `0..node_count`.
    ///
    /// Fails on out-of-range endpoints, self-loops, duplicate edges, or weights
    /// that are not strictly positive and finite.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let labels = (0..node_count as u64).collect();
        Self::with_labels(labels, edges)
    }

    pub(crate) fn with_labels(labels: Vec<u64>, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let n = labels.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidNode {
                        node: x,
                        node_count: n,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on node {u}")));
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidGraph(format!("bad weight {w} on edge ({u}, {v})")));
            }
            canonical.push((u.min(v), u.max(v), w));
            adjacency[u].push((v, w));
            adjacency[v].push((u, w));
        }
        canonical.sort_by_key(|&(u, v, _)| (u, v));
        if let Some(pair) = canonical.windows(2).find(|p| (p[0].0, p[0].1) == (p[1].0, p[1].1)) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                pair[0].0, pair[0].1
            )));
        }
        for list in &mut adjacency {
            list.sort_by_key(|&(x, _)| x);
        }
        Ok(Graph {
            labels,
            edges: canonical,
            adjacency,
        })
    }

    pub fn empty() -> Self {
        Graph {
            labels: Vec::new(),
            edges: Vec::new(),
            adjacency: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Edges as `(u, v, w)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, f64)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| list[i].1)
    }

    /// The id the original input used for node `v`.
    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Inverse of [`Graph::label`].
    pub fn node_by_label(&self, label: u64) -> Option<usize> {
        // labels are strictly increasing
        self.labels.binary_search(&label).ok()
    }

    pub fn check_node(&self, v: usize) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                node: v,
                node_count: self.node_count(),
            })
        }
    }

    pub fn is_unit_weight(&self) -> bool {
        self.edges.iter().all(|&(_, _, w)| w == 1.0)
    }
}
