#![allow(dead_code)]

use boxroute::{gen_random_graph, Graph, Route};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Connected random graph with weights drawn from {0.5, 1.0, ..., 5.0}.
/// Halves keep every path sum exact, so distances from different algorithms
/// can be compared with `==`.
pub fn weighted_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let g = gen_random_graph(n, p, seed).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, v, _)| (u, v, rng.gen_range(1..=10) as f64 * 0.5))
        .collect();
    Graph::from_edges(g.node_count(), &edges).unwrap()
}

/// Edge probability that makes G(n, p) connected with high probability.
pub fn connected_p(n: usize) -> f64 {
    (2.0 * (n as f64).ln() / n as f64).min(1.0)
}

pub fn assert_valid_route(g: &Graph, r: &Route) {
    if let Err(msg) = r.check(g) {
        panic!("invalid route {:?}: {msg}", r.nodes);
    }
}

/// Smallest number of hop balls of radius `r_b` (centered anywhere) whose
/// union is every node, by exhaustive search.
pub fn min_ball_cover(g: &Graph, r_b: u32) -> usize {
    let n = g.node_count();
    assert!(n <= 16);
    let ball: Vec<u32> = (0..n)
        .map(|c| {
            let hops = boxroute::bfs_hops(g, c, None).unwrap().hops;
            hops.iter()
                .enumerate()
                .filter(|(_, h)| h.is_some_and(|h| h <= r_b))
                .fold(0u32, |m, (v, _)| m | 1 << v)
        })
        .collect();
    let full = (1u32 << n) - 1;
    (1..=n)
        .find(|&k| subsets(n, k).any(|set| set.iter().fold(0, |m, &c| m | ball[c]) == full))
        .expect("all singletons cover")
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n)
        .filter(move |m| m.count_ones() as usize == k)
        .map(move |m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
}
