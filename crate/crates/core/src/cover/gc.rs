use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{check_args, Algorithm, BoxCover, CoverBox, GcMode};
use crate::error::Result;
use crate::graph::{Graph, HopScratch};

/// Greedy coloring of the dual graph.
///
/// In the dual graph two nodes are adjacent when they are too far apart to
/// share a box: more than `r_b` hops under [`GcMode::Strict`], at least
/// `2·r_b + 1` under [`GcMode::Song`], or in different components. Nodes are
/// colored in ascending id order (or a seeded shuffle of it), each taking the
/// smallest color not used by an already-colored dual neighbor. Color classes
/// become boxes, numbered by their smallest member.
pub fn gc_cover(g: &Graph, r_b: u32, mode: GcMode, order_seed: Option<u64>) -> Result<BoxCover> {
    check_args(g, r_b)?;
    let n = g.node_count();
    let reach = mode.max_pair_hops(r_b);

    let mut order: Vec<usize> = (0..n).collect();
    if let Some(seed) = order_seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }

    // A color is available to v iff every member of its class lies within
    // `reach` hops of v, i.e. none of them is a dual neighbor.
    let mut color = vec![usize::MAX; n];
    let mut class_size: Vec<usize> = Vec::new();
    let mut near: Vec<usize> = Vec::new();
    let mut touched = Vec::new();
    let mut scratch = HopScratch::new(n);
    for &v in &order {
        for &x in scratch.run(g, v, reach, |_| true) {
            let c = color[x];
            if c == usize::MAX {
                continue;
            }
            if near[c] == 0 {
                touched.push(c);
            }
            near[c] += 1;
        }
        let chosen = touched
            .iter()
            .copied()
            .filter(|&c| near[c] == class_size[c])
            .min()
            .unwrap_or_else(|| {
                class_size.push(0);
                near.push(0);
                class_size.len() - 1
            });
        for c in touched.drain(..) {
            near[c] = 0;
        }
        color[v] = chosen;
        class_size[chosen] += 1;
    }

    // renumber classes by smallest member
    let mut renumber = vec![usize::MAX; class_size.len()];
    let mut boxes: Vec<CoverBox> = Vec::with_capacity(class_size.len());
    let mut assignment = vec![0; n];
    for v in 0..n {
        let c = color[v];
        if renumber[c] == usize::MAX {
            renumber[c] = boxes.len();
            boxes.push(CoverBox {
                id: boxes.len(),
                center: None,
                nodes: Vec::with_capacity(class_size[c]),
            });
        }
        assignment[v] = renumber[c];
        boxes[renumber[c]].nodes.push(v);
    }

    Ok(BoxCover {
        algorithm: Algorithm::Gc,
        gc_mode: Some(mode),
        r_b,
        boxes,
        assignment,
    })
}
