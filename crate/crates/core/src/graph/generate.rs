use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Hop distances are stored as `u32`, which bounds graph size.
const MAX_NODES: usize = u32::MAX as usize;

/// Complete rooted 3-ary tree of the given depth with unit weights.
///
/// Node 0 is the root and node `i` has children `3i+1`, `3i+2`, `3i+3`, so the
/// tree has `(3^(depth+1) - 1) / 2` nodes.
pub fn gen_ternary_tree(depth: u32) -> Result<Graph> {
    let n = depth
        .checked_add(1)
        .and_then(|e| 3usize.checked_pow(e))
        .map(|p| (p - 1) / 2)
        .filter(|&n| n <= MAX_NODES)
        .ok_or(Error::DepthOverflow(depth))?;
    let edges: Vec<_> = (1..n).map(|child| ((child - 1) / 3, child, 1.0)).collect();
    Graph::from_edges(n, &edges)
}

/// Largest connected component of an Erdős–Rényi `G(n, p)` sample with unit
/// weights.
///
/// Ties between equally large components go to the one holding the smallest
/// node id. Surviving nodes are renumbered in ascending order.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if n > MAX_NODES {
        return Err(Error::InvalidGraph(format!("{n} nodes is too many")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, 1.0));
            }
        }
    }
    let full = Graph::from_edges(n, &edges)?;
    if n == 0 {
        return Ok(full);
    }

    let mut component = vec![usize::MAX; n];
    let mut best = (0, 0);
    let mut stack = Vec::new();
    for root in 0..n {
        if component[root] != usize::MAX {
            continue;
        }
        component[root] = root;
        stack.push(root);
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            for &(y, _) in full.neighbors(x) {
                if component[y] == usize::MAX {
                    component[y] = root;
                    stack.push(y);
                }
            }
        }
        if size > best.1 {
            best = (root, size);
        }
    }

    let mut remap = vec![usize::MAX; n];
    let mut kept = 0;
    for v in 0..n {
        if component[v] == best.0 {
            remap[v] = kept;
            kept += 1;
        }
    }
    let edges: Vec<_> = edges
        .into_iter()
        .filter(|&(u, _, _)| component[u] == best.0)
        .map(|(u, v, w)| (remap[u], remap[v], w))
        .collect();
    Graph::from_edges(kept, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ternary_tree_sizes() {
        let g = gen_ternary_tree(0).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (1, 0));
        assert_eq!(gen_ternary_tree(2).unwrap().node_count(), 13);
        let g = gen_ternary_tree(7).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3280, 3279));
        for d in 0..8u32 {
            let g = gen_ternary_tree(d).unwrap();
            assert_eq!(g.node_count(), (3usize.pow(d + 1) - 1) / 2);
            assert_eq!(g.edge_count(), g.node_count() - 1);
        }
    }

    #[test]
    fn ternary_tree_layout() {
        let g = gen_ternary_tree(2).unwrap();
        assert_eq!(g.neighbors(0), &[(1, 1.0), (2, 1.0), (3, 1.0)]);
        assert_eq!(g.neighbors(2), &[(0, 1.0), (7, 1.0), (8, 1.0), (9, 1.0)]);
        assert_eq!(g.degree(12), 1);
    }

    #[test]
    fn ternary_tree_overflow() {
        assert_eq!(gen_ternary_tree(40), Err(Error::DepthOverflow(40)));
        assert!(gen_ternary_tree(u32::MAX).is_err());
    }

    #[test]
    fn random_graph_extremes() {
        let g = gen_random_graph(5, 0.0, 1).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (1, 0));
        let g = gen_random_graph(4, 1.0, 1).unwrap();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(gen_random_graph(0, 0.5, 1).unwrap().node_count(), 0);
        assert!(gen_random_graph(4, 1.5, 1).is_err());
    }

    #[test]
    fn random_graph_is_deterministic_and_connected() {
        let a = gen_random_graph(50, 0.1, 42).unwrap();
        let b = gen_random_graph(50, 0.1, 42).unwrap();
        assert_eq!(a, b);
        let hops = crate::graph::bfs_hops(&a, 0, None).unwrap();
        assert!(hops.hops.iter().all(Option::is_some));
        assert_ne!(a, gen_random_graph(50, 0.1, 43).unwrap());
    }
}
