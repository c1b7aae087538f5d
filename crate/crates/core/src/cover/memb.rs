use std::collections::HashSet;

use super::{boxes_in_creation_order, check_args, Algorithm, BoxCover};
use crate::error::Result;
use crate::graph::{Graph, HopScratch};

/// Number of uncovered nodes within `r_b` hops of `node` in the full graph,
/// `node` included when it is uncovered.
pub fn excluded_mass(g: &Graph, node: usize, r_b: u32, covered: &HashSet<usize>) -> Result<usize> {
    g.check_node(node)?;
    let mut scratch = HopScratch::new(g.node_count());
    Ok(scratch
        .run(g, node, r_b, |_| true)
        .iter()
        .filter(|v| !covered.contains(v))
        .count())
}

/// Maximum excluded mass burning, in its greedy form.
///
/// Repeatedly picks the uncovered node with the largest excluded mass (lowest
/// id on ties) as a center and covers every uncovered node reachable from it
/// within `r_b` hops through uncovered nodes. Growing the box through the
/// residual graph keeps each box connected. Boxes are numbered in creation
/// order.
pub fn memb_cover(g: &Graph, r_b: u32) -> Result<BoxCover> {
    check_args(g, r_b)?;
    let n = g.node_count();
    let mut scratch = HopScratch::new(n);

    // The r_b-ball relation is symmetric, so covering x lowers the mass of
    // exactly the nodes in ball(x).
    let balls: Vec<Vec<usize>> = (0..n)
        .map(|v| scratch.run(g, v, r_b, |_| true).to_vec())
        .collect();
    let mut mass: Vec<usize> = balls.iter().map(Vec::len).collect();
    let mut covered = vec![false; n];
    let mut remaining = n;
    let mut created = Vec::new();

    while remaining > 0 {
        let center = (0..n)
            .filter(|&v| !covered[v])
            .max_by(|&a, &b| mass[a].cmp(&mass[b]).then(b.cmp(&a)))
            .expect("an uncovered node remains");
        let members = scratch.run(g, center, r_b, |x| !covered[x]).to_vec();
        for &x in &members {
            covered[x] = true;
            for &y in &balls[x] {
                mass[y] -= 1;
            }
        }
        remaining -= members.len();
        created.push((center, members));
    }

    let (boxes, assignment) = boxes_in_creation_order(n, created);
    Ok(BoxCover {
        algorithm: Algorithm::Memb,
        gc_mode: None,
        r_b,
        boxes,
        assignment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn path5() -> Graph {
        Graph::from_edges(5, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0)]).unwrap()
    }

    #[test]
    fn excluded_mass_examples() {
        let g = path5();
        assert_eq!(excluded_mass(&g, 1, 1, &HashSet::new()).unwrap(), 3);
        assert_eq!(excluded_mass(&g, 1, 1, &HashSet::from([0])).unwrap(), 2);
        let all: HashSet<usize> = (0..5).collect();
        for v in 0..5 {
            assert_eq!(excluded_mass(&g, v, 2, &all).unwrap(), 0);
        }
        // measured in the full graph: covered 2 does not block 3
        assert_eq!(excluded_mass(&g, 1, 2, &HashSet::from([2])).unwrap(), 3);
        assert!(excluded_mass(&g, 5, 1, &HashSet::new()).is_err());
    }

    #[test]
    fn path_example() {
        let c = memb_cover(&path5(), 1).unwrap();
        assert_eq!(c.boxes.len(), 2);
        assert_eq!((c.boxes[0].center, &c.boxes[0].nodes), (Some(1), &vec![0, 1, 2]));
        assert_eq!((c.boxes[1].center, &c.boxes[1].nodes), (Some(3), &vec![3, 4]));
        assert_eq!(c.assignment, vec![0, 0, 0, 1, 1]);
    }

    #[test]
    fn star_is_one_box() {
        let g = Graph::from_edges(4, &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]).unwrap();
        let c = memb_cover(&g, 1).unwrap();
        assert_eq!(c.boxes.len(), 1);
        assert_eq!(c.boxes[0].center, Some(0));
        assert_eq!(c.boxes[0].nodes, vec![0, 1, 2, 3]);
    }

    #[test]
    fn single_node() {
        let c = memb_cover(&Graph::from_edges(1, &[]).unwrap(), 2).unwrap();
        assert_eq!(c.boxes.len(), 1);
        assert_eq!(c.boxes[0].center, Some(0));
    }

    #[test]
    fn residual_growth_keeps_boxes_connected() {
        // hexagon with a chord
        let g = Graph::from_edges(
            6,
            &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0), (4, 5, 1.0), (1, 5, 1.0)],
        )
        .unwrap();
        let c = memb_cover(&g, 1).unwrap();
        let report = crate::cover::validate_cover(&g, &c).unwrap();
        assert!(report.is_empty(), "{report:?}");
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(memb_cover(&Graph::empty(), 1), Err(Error::EmptyGraph));
        assert_eq!(memb_cover(&path5(), 0), Err(Error::InvalidRadius));
    }
}
