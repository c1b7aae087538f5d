mod common;

use boxroute::{
    apsp_oracle, bfs_hops, dijkstra_sssp, gen_random_graph, gen_ternary_tree, parse_edge_list,
    write_edge_list, Graph,
};
use common::{connected_p, weighted_random_graph};
use proptest::prelude::*;

proptest! {
    #[test]
    fn dijkstra_is_a_relaxation_fixpoint(n in 2usize..60, seed in any::<u64>()) {
        let g = weighted_random_graph(n, connected_p(n), seed);
        let f = dijkstra_sssp(&g, 0, None).unwrap();
        for &(u, v, w) in g.edges() {
            prop_assert!(f.dist[v] <= f.dist[u] + w);
            prop_assert!(f.dist[u] <= f.dist[v] + w);
        }
        for v in 1..g.node_count() {
            let p = f.pred[v].unwrap();
            prop_assert_eq!(f.dist[v], f.dist[p] + g.weight(p, v).unwrap());
        }
        prop_assert_eq!(f.pred[0], None);
    }

    #[test]
    fn hops_equal_unit_dijkstra(n in 1usize..80, p in 0.02f64..0.3, seed in any::<u64>()) {
        let g = gen_random_graph(n, p, seed).unwrap();
        let src = (seed as usize) % g.node_count();
        let hops = bfs_hops(&g, src, None).unwrap();
        let dist = dijkstra_sssp(&g, src, None).unwrap();
        for v in 0..g.node_count() {
            prop_assert_eq!(hops.hops[v].map(f64::from), dist.distance(v));
        }
    }

    #[test]
    fn oracle_agrees_with_dijkstra(n in 1usize..=64, seed in any::<u64>()) {
        let g = weighted_random_graph(n, connected_p(n.max(2)), seed);
        let apsp = apsp_oracle(&g).unwrap();
        for s in 0..g.node_count() {
            let f = dijkstra_sssp(&g, s, None).unwrap();
            prop_assert_eq!(&apsp[s], &f.dist);
            prop_assert_eq!(apsp[s][s], 0.0);
            for t in 0..g.node_count() {
                prop_assert_eq!(apsp[s][t], apsp[t][s]);
            }
        }
    }

    #[test]
    fn restricted_dijkstra_matches_induced_subgraph(n in 3usize..30, seed in any::<u64>()) {
        let g = weighted_random_graph(n, connected_p(n), seed);
        let keep: Vec<usize> = (0..g.node_count()).filter(|v| v % 3 != 1).collect();
        let f = dijkstra_sssp(&g, 0, Some(&keep)).unwrap();
        // rebuild the induced subgraph explicitly and compare
        let edges: Vec<_> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v, _)| u % 3 != 1 && v % 3 != 1)
            .collect();
        let sub = Graph::from_edges(g.node_count(), &edges).unwrap();
        let expected = dijkstra_sssp(&sub, 0, None).unwrap();
        for v in 0..g.node_count() {
            if v % 3 == 1 {
                prop_assert_eq!(f.distance(v), None);
            } else {
                prop_assert_eq!(f.dist[v], expected.dist[v]);
            }
        }
    }
}

#[test]
fn random_graphs_round_trip_through_edge_lists() {
    for seed in 0..100u64 {
        let n = 2 + (seed as usize * 13) % 120;
        let g = weighted_random_graph(n, connected_p(n), seed);
        if g.node_count() < 2 {
            continue;
        }
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g, "seed {seed}");
        // unit weights too
        let g = gen_random_graph(n, connected_p(n), seed).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}

#[test]
fn ternary_trees_round_trip() {
    for d in 1..6 {
        let g = gen_ternary_tree(d).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}

#[test]
fn oracle_on_small_weighted_graphs() {
    // hand-checked: triangle where the two-edge detour beats the direct edge
    let g = Graph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.5), (0, 2, 3.0)]).unwrap();
    let d = apsp_oracle(&g).unwrap();
    assert_eq!(d[0][2], 2.5);
    assert_eq!(dijkstra_sssp(&g, 0, None).unwrap().path_to(2), Some(vec![0, 1, 2]));
}
