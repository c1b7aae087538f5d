use std::fmt;

use super::{Algorithm, BoxCover, GcMode};
use crate::error::{Error, Result};
use crate::graph::{Graph, HopScratch};

/// One way a cover can fail to describe a valid partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Uncovered(usize),
    MultiplyAssigned(usize),
    UnknownNode { box_id: usize, node: usize },
    BoxIdMismatch { index: usize, id: usize },
    AssignmentMismatch { node: usize, assigned: usize },
    EmptyBox(usize),
    MissingCenter(usize),
    CenterOutsideBox { box_id: usize, center: usize },
    /// Two members of a GC box are farther apart than the mode allows.
    Diameter { box_id: usize, u: usize, v: usize },
    /// Two members of a MEMB/CIEA box are more than `2·r_b` hops apart in the
    /// full graph, or a member is more than `r_b` hops from the center inside
    /// the box.
    Radius { box_id: usize, u: usize, v: usize },
    Disconnected(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncovered(v) => write!(f, "uncovered: {v}"),
            Violation::MultiplyAssigned(v) => write!(f, "multiply assigned: {v}"),
            Violation::UnknownNode { box_id, node } => {
                write!(f, "box {box_id} lists unknown node {node}")
            }
            Violation::BoxIdMismatch { index, id } => {
                write!(f, "box at index {index} carries id {id}")
            }
            Violation::AssignmentMismatch { node, assigned } => {
                write!(f, "node {node} assigned to box {assigned} which does not list it")
            }
            Violation::EmptyBox(b) => write!(f, "empty box: {b}"),
            Violation::MissingCenter(b) => write!(f, "box {b} has no center"),
            Violation::CenterOutsideBox { box_id, center } => {
                write!(f, "center {center} outside box {box_id}")
            }
            Violation::Diameter { box_id, u, v } => {
                write!(f, "diameter violation in box {box_id}: {u} and {v}")
            }
            Violation::Radius { box_id, u, v } => {
                write!(f, "radius violation in box {box_id}: {u} and {v}")
            }
            Violation::Disconnected(b) => write!(f, "disconnected box: {b}"),
        }
    }
}

/// Checks `cover` against `g` and lists every violation found; an empty list
/// means the cover is valid.
///
/// Shape checks report at most one offending pair per box.
pub fn validate_cover(g: &Graph, cover: &BoxCover) -> Result<Vec<Violation>> {
    let mut out = partition_violations(g, cover)?;
    if !out.is_empty() {
        // shape checks assume a partition
        return Ok(out);
    }
    let n = g.node_count();
    let mut scratch = HopScratch::new(n);
    let mut in_box = vec![false; n];
    for b in &cover.boxes {
        let pair_limit = match cover.algorithm {
            Algorithm::Gc => cover.gc_mode.unwrap_or(GcMode::Strict).max_pair_hops(cover.r_b),
            Algorithm::Memb | Algorithm::Ciea => cover.r_b.saturating_mul(2),
        };
        if let Some((u, v)) = far_pair(g, &b.nodes, pair_limit, &mut scratch) {
            out.push(match cover.algorithm {
                Algorithm::Gc => Violation::Diameter { box_id: b.id, u, v },
                _ => Violation::Radius { box_id: b.id, u, v },
            });
        }

        if cover.algorithm == Algorithm::Gc {
            continue;
        }
        let center = b.center.expect("checked above");
        for &v in &b.nodes {
            in_box[v] = true;
        }
        let reached = scratch.run(g, center, u32::MAX, |x| in_box[x]).len();
        if reached < b.nodes.len() {
            out.push(Violation::Disconnected(b.id));
        }
        if let Some(&v) = b
            .nodes
            .iter()
            .find(|&&v| scratch.hops(v).is_some_and(|h| h > cover.r_b))
        {
            out.push(Violation::Radius {
                box_id: b.id,
                u: center,
                v,
            });
        }
        for &v in &b.nodes {
            in_box[v] = false;
        }
    }
    Ok(out)
}

/// Partition and bookkeeping checks only: every node in exactly one box,
/// consistent ids, assignment and centers.
pub(crate) fn partition_violations(g: &Graph, cover: &BoxCover) -> Result<Vec<Violation>> {
    let n = g.node_count();
    if cover.assignment.len() != n {
        return Err(Error::NodeCountMismatch {
            graph: n,
            cover: cover.assignment.len(),
        });
    }
    let mut out = Vec::new();
    let mut hits = vec![0usize; n];
    for (index, b) in cover.boxes.iter().enumerate() {
        if b.id != index {
            out.push(Violation::BoxIdMismatch { index, id: b.id });
        }
        if b.nodes.is_empty() {
            out.push(Violation::EmptyBox(b.id));
        }
        for &v in &b.nodes {
            match hits.get_mut(v) {
                Some(h) => *h += 1,
                None => out.push(Violation::UnknownNode {
                    box_id: b.id,
                    node: v,
                }),
            }
        }
        if let Some(c) = b.center {
            if !b.nodes.contains(&c) {
                out.push(Violation::CenterOutsideBox {
                    box_id: b.id,
                    center: c,
                });
            }
        } else if cover.algorithm != Algorithm::Gc {
            out.push(Violation::MissingCenter(b.id));
        }
    }
    for (v, &h) in hits.iter().enumerate() {
        match h {
            0 => out.push(Violation::Uncovered(v)),
            1 => {}
            _ => out.push(Violation::MultiplyAssigned(v)),
        }
        let a = cover.assignment[v];
        if h > 0 && cover.boxes.get(a).is_none_or(|b| !b.nodes.contains(&v)) {
            out.push(Violation::AssignmentMismatch { node: v, assigned: a });
        }
    }
    Ok(out)
}

/// First pair `(u, v)`, `u < v`, of `nodes` more than `limit` hops apart in
/// the full graph.
fn far_pair(g: &Graph, nodes: &[usize], limit: u32, scratch: &mut HopScratch) -> Option<(usize, usize)> {
    let mut sorted = nodes.to_vec();
    sorted.sort_unstable();
    for (i, &u) in sorted.iter().enumerate() {
        scratch.run(g, u, limit, |_| true);
        if let Some(&v) = sorted[i + 1..].iter().find(|&&v| scratch.hops(v).is_none()) {
            return Some((u, v));
        }
    }
    None
}
