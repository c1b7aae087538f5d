use super::{boxes_in_creation_order, check_args, Algorithm, BoxCover};
use crate::error::Result;
use crate::graph::{Graph, HopScratch};

/// Center-including eccentricity algorithm.
///
/// Works on the residual (still uncovered) graph one connected piece at a
/// time. In a piece, take the node `e` of maximum eccentricity (lowest id on
/// ties); the candidate centers are the nodes exactly `min(r_b, ecc(e))` hops
/// from `e`. The candidate reaching the most uncovered nodes within `r_b` hops
/// becomes the center (lowest id on ties) and its residual `r_b`-ball becomes
/// the box. Original components are handled in order of their smallest node,
/// and inside one the piece holding its smallest uncovered node goes next.
pub fn ciea_cover(g: &Graph, r_b: u32) -> Result<BoxCover> {
    check_args(g, r_b)?;
    let n = g.node_count();
    let mut scratch = HopScratch::new(n);
    let mut bounds = EccBounds::new(n);
    let mut covered = vec![false; n];
    let mut created = Vec::new();

    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut component = scratch.run(g, root, u32::MAX, |_| true).to_vec();
        component.sort_unstable();
        for &v in &component {
            seen[v] = true;
        }

        let mut cursor = 0;
        loop {
            while cursor < component.len() && covered[component[cursor]] {
                cursor += 1;
            }
            let Some(&start) = component.get(cursor) else {
                break;
            };
            let mut piece = scratch.run(g, start, u32::MAX, |x| !covered[x]).to_vec();
            piece.sort_unstable();

            let (far, ecc) = bounds.peripheral(g, &piece, &covered, &mut scratch);
            let reach = r_b.min(ecc);
            scratch.run(g, far, reach, |x| !covered[x]);
            let mut candidates: Vec<usize> = scratch
                .visited()
                .iter()
                .copied()
                .filter(|&x| scratch.hops(x) == Some(reach))
                .collect();
            candidates.sort_unstable();

            let mut center = candidates[0];
            let mut best = 0;
            for &c in &candidates {
                let size = scratch.run(g, c, r_b, |x| !covered[x]).len();
                if size > best {
                    best = size;
                    center = c;
                }
            }
            let members = scratch.run(g, center, r_b, |x| !covered[x]).to_vec();
            for &x in &members {
                covered[x] = true;
            }
            created.push((center, members));
        }
    }

    let (boxes, assignment) = boxes_in_creation_order(n, created);
    Ok(BoxCover {
        algorithm: Algorithm::Ciea,
        gc_mode: None,
        r_b,
        boxes,
        assignment,
    })
}

/// Lower/upper eccentricity bounds used to find a peripheral node without a
/// breadth-first search from every node.
///
/// A search from `w` with eccentricity `e_w` shows, for every `v` at distance
/// `d`, that `max(d, e_w - d) <= ecc(v) <= e_w + d`.
struct EccBounds {
    lo: Vec<u32>,
    hi: Vec<u32>,
}

impl EccBounds {
    fn new(n: usize) -> Self {
        EccBounds {
            lo: vec![0; n],
            hi: vec![u32::MAX; n],
        }
    }

    /// Search from `w` inside the piece; tightens all bounds and returns the
    /// farthest node (lowest id among the farthest).
    fn sweep(
        &mut self,
        g: &Graph,
        w: usize,
        piece: &[usize],
        covered: &[bool],
        scratch: &mut HopScratch,
    ) -> usize {
        scratch.run(g, w, u32::MAX, |x| !covered[x]);
        let mut far = w;
        let mut ecc = 0;
        for &v in scratch.visited() {
            let d = scratch.hops(v).expect("visited");
            if d > ecc || (d == ecc && v < far) {
                ecc = d;
                far = v;
            }
        }
        for &v in piece {
            let d = scratch.hops(v).expect("piece is connected");
            self.lo[v] = self.lo[v].max(d).max(ecc - d);
            self.hi[v] = self.hi[v].min(ecc + d);
        }
        self.lo[w] = ecc;
        self.hi[w] = ecc;
        far
    }

    /// Node of maximum eccentricity in the connected `piece` (sorted
    /// ascending), lowest id on ties, and that eccentricity.
    fn peripheral(
        &mut self,
        g: &Graph,
        piece: &[usize],
        covered: &[bool],
        scratch: &mut HopScratch,
    ) -> (usize, u32) {
        if piece.len() == 1 {
            return (piece[0], 0);
        }
        for &v in piece {
            self.lo[v] = 0;
            self.hi[v] = u32::MAX;
        }
        let exact = |b: &Self, v: usize| b.lo[v] == b.hi[v];

        // double sweep
        let a = self.sweep(g, piece[0], piece, covered, scratch);
        let b = self.sweep(g, a, piece, covered, scratch);
        self.sweep(g, b, piece, covered, scratch);

        let edges: usize = piece
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&(y, _)| !covered[y]).count())
            .sum::<usize>()
            / 2;
        if edges + 1 == piece.len() {
            // In a tree a and b end a diameter, and ecc(v) = max(d(v,a), d(v,b)).
            for &v in piece {
                self.hi[v] = self.lo[v];
            }
        }

        // Pin down the diameter, alternating between the loosest upper bound
        // and the most central candidate.
        let mut pick_high = true;
        loop {
            let max_lo = piece.iter().map(|&v| self.lo[v]).max().unwrap_or(0);
            let open = piece
                .iter()
                .copied()
                .filter(|&v| !exact(self, v) && self.hi[v] > max_lo);
            let next = if pick_high {
                open.max_by(|&x, &y| self.hi[x].cmp(&self.hi[y]).then(y.cmp(&x)))
            } else {
                open.min_by(|&x, &y| self.lo[x].cmp(&self.lo[y]).then(x.cmp(&y)))
            };
            let Some(w) = next else { break };
            self.sweep(g, w, piece, covered, scratch);
            pick_high = !pick_high;
        }

        let diameter = piece.iter().map(|&v| self.lo[v]).max().unwrap_or(0);
        for &v in piece {
            if self.hi[v] < diameter {
                continue;
            }
            if !exact(self, v) {
                self.sweep(g, v, piece, covered, scratch);
            }
            if self.lo[v] == diameter {
                return (v, diameter);
            }
        }
        unreachable!("some node attains the diameter")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{eccentricities, gen_random_graph, gen_ternary_tree};

    fn path5() -> Graph {
        Graph::from_edges(5, &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0)]).unwrap()
    }

    fn brute_peripheral(g: &Graph) -> (usize, u32) {
        let ecc = eccentricities(g, None).unwrap();
        let max = *ecc.values().max().unwrap();
        let v = *ecc.iter().find(|(_, &e)| e == max).unwrap().0;
        (v, max)
    }

    fn fast_peripheral(g: &Graph) -> (usize, u32) {
        let n = g.node_count();
        let piece: Vec<usize> = (0..n).collect();
        let mut scratch = HopScratch::new(n);
        EccBounds::new(n).peripheral(g, &piece, &vec![false; n], &mut scratch)
    }

    #[test]
    fn path_example() {
        let c = ciea_cover(&path5(), 1).unwrap();
        assert_eq!(c.boxes.len(), 2);
        assert_eq!((c.boxes[0].center, &c.boxes[0].nodes), (Some(1), &vec![0, 1, 2]));
        assert_eq!((c.boxes[1].center, &c.boxes[1].nodes), (Some(4), &vec![3, 4]));
    }

    #[test]
    fn single_node() {
        let c = ciea_cover(&Graph::from_edges(1, &[]).unwrap(), 3).unwrap();
        assert_eq!(c.boxes.len(), 1);
        assert_eq!(c.boxes[0].center, Some(0));
    }

    #[test]
    fn star_is_one_box() {
        let g = Graph::from_edges(4, &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]).unwrap();
        let c = ciea_cover(&g, 1).unwrap();
        assert_eq!(c.boxes.len(), 1);
        assert_eq!(c.boxes[0].center, Some(0));
    }

    #[test]
    fn disconnected_graph() {
        let g = Graph::from_edges(5, &[(0, 3, 1.0), (1, 4, 1.0), (4, 2, 1.0)]).unwrap();
        let c = ciea_cover(&g, 1).unwrap();
        assert!(crate::cover::validate_cover(&g, &c).unwrap().is_empty());
        // component of node 0 first
        assert_eq!(c.boxes[0].nodes, vec![0, 3]);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(ciea_cover(&Graph::empty(), 1), Err(Error::EmptyGraph));
        assert_eq!(ciea_cover(&path5(), 0), Err(Error::InvalidRadius));
    }

    #[test]
    fn peripheral_matches_brute_force() {
        for d in 0..5 {
            let g = gen_ternary_tree(d).unwrap();
            assert_eq!(fast_peripheral(&g), brute_peripheral(&g), "tree depth {d}");
        }
        for seed in 0..200 {
            let n = 5 + (seed as usize * 7) % 60;
            let p = [0.05, 0.1, 0.2, 0.5][seed as usize % 4];
            let g = gen_random_graph(n, p, seed).unwrap();
            assert_eq!(fast_peripheral(&g), brute_peripheral(&g), "seed {seed}");
        }
    }
}
