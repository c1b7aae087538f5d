//! Box covering: partition a graph into boxes of bounded hop radius.
//!
//! Three partitioners are provided: greedy coloring of the dual graph
//! ([`gc_cover`]), maximum excluded mass burning ([`memb_cover`]) and the
//! center-including eccentricity algorithm ([`ciea_cover`]). Every radius and
//! distance here is a hop count; edge weights are ignored.

mod ciea;
mod gc;
mod memb;
mod validate;

pub use ciea::ciea_cover;
pub use gc::gc_cover;
pub use memb::{excluded_mass, memb_cover};
pub use validate::{validate_cover, Violation};
pub(crate) use validate::partition_violations;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Gc,
    Memb,
    Ciea,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Gc, Algorithm::Memb, Algorithm::Ciea];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Gc => "gc",
            Algorithm::Memb => "memb",
            Algorithm::Ciea => "ciea",
        }
    }
}

/// Dual-graph rule for greedy coloring.
///
/// Two nodes may share a box under `Strict` when they are at most `r_b` hops
/// apart, and under `Song` when they are at most `2·r_b` hops apart (box size
/// `l = 2·r_b + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GcMode {
    #[default]
    Strict,
    Song,
}

impl GcMode {
    /// Largest hop distance allowed between two members of one box.
    pub fn max_pair_hops(self, r_b: u32) -> u32 {
        match self {
            GcMode::Strict => r_b,
            GcMode::Song => r_b.saturating_mul(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverBox {
    pub id: usize,
    /// `None` for GC boxes, which have no center.
    pub center: Option<usize>,
    /// Sorted ascending.
    pub nodes: Vec<usize>,
}

/// A partition of a graph's nodes into boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxCover {
    pub algorithm: Algorithm,
    /// Present iff `algorithm` is GC.
    pub gc_mode: Option<GcMode>,
    pub r_b: u32,
    pub boxes: Vec<CoverBox>,
    /// Box index of every node.
    pub assignment: Vec<usize>,
}

impl BoxCover {
    /// Builds a cover from explicit boxes, deriving `assignment`. Nodes missing
    /// from every box get an out-of-range index, which [`validate_cover`]
    /// reports as uncovered; nodes listed twice keep their last box.
    pub fn from_boxes(
        algorithm: Algorithm,
        gc_mode: Option<GcMode>,
        r_b: u32,
        node_count: usize,
        boxes: Vec<CoverBox>,
    ) -> Self {
        let mut assignment = vec![usize::MAX; node_count];
        for b in &boxes {
            for &v in &b.nodes {
                if let Some(slot) = assignment.get_mut(v) {
                    *slot = b.id;
                }
            }
        }
        BoxCover {
            algorithm,
            gc_mode,
            r_b,
            boxes,
            assignment,
        }
    }

    /// Every node in a box of its own.
    pub fn singletons(g: &Graph) -> Self {
        let boxes = (0..g.node_count())
            .map(|v| CoverBox {
                id: v,
                center: Some(v),
                nodes: vec![v],
            })
            .collect();
        BoxCover {
            algorithm: Algorithm::Memb,
            gc_mode: None,
            r_b: 1,
            boxes,
            assignment: (0..g.node_count()).collect(),
        }
    }

    /// Box size `l = 2·r_b + 1`.
    pub fn l(&self) -> u64 {
        2 * u64::from(self.r_b) + 1
    }

    pub fn box_count(&self) -> usize {
        self.boxes.len()
    }

    pub fn node_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn box_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CoverJson::from(self)).expect("cover serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        let doc: CoverJson = serde_json::from_str(text)?;
        Ok(BoxCover {
            algorithm: doc.algorithm,
            gc_mode: doc.gc_mode,
            r_b: doc.rb,
            boxes: doc.boxes,
            assignment: doc.assignment,
        })
    }
}

/// Wire form; field order is part of the format.
#[derive(Serialize, Deserialize)]
struct CoverJson {
    algorithm: Algorithm,
    rb: u32,
    l: u64,
    gc_mode: Option<GcMode>,
    boxes: Vec<CoverBox>,
    assignment: Vec<usize>,
}

impl From<&BoxCover> for CoverJson {
    fn from(c: &BoxCover) -> Self {
        CoverJson {
            algorithm: c.algorithm,
            rb: c.r_b,
            l: c.l(),
            gc_mode: c.gc_mode,
            boxes: c.boxes.clone(),
            assignment: c.assignment.clone(),
        }
    }
}

/// Runs the named algorithm. `gc_mode` and `order_seed` only matter for GC.
pub fn cover_with(
    g: &Graph,
    algorithm: Algorithm,
    r_b: u32,
    gc_mode: GcMode,
    order_seed: Option<u64>,
) -> Result<BoxCover> {
    match algorithm {
        Algorithm::Gc => gc_cover(g, r_b, gc_mode, order_seed),
        Algorithm::Memb => memb_cover(g, r_b),
        Algorithm::Ciea => ciea_cover(g, r_b),
    }
}

fn check_args(g: &Graph, r_b: u32) -> Result<()> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if r_b == 0 {
        return Err(Error::InvalidRadius);
    }
    Ok(())
}

/// Turns per-node labels into boxes, ordered by first appearance in `created`
/// order (used by the center-based algorithms).
fn boxes_in_creation_order(
    node_count: usize,
    created: Vec<(usize, Vec<usize>)>,
) -> (Vec<CoverBox>, Vec<usize>) {
    let mut assignment = vec![usize::MAX; node_count];
    let boxes = created
        .into_iter()
        .enumerate()
        .map(|(id, (center, mut nodes))| {
            nodes.sort_unstable();
            for &v in &nodes {
                assignment[v] = id;
            }
            CoverBox {
                id,
                center: Some(center),
                nodes,
            }
        })
        .collect();
    (boxes, assignment)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_layout() {
        let cover = BoxCover::from_boxes(
            Algorithm::Memb,
            None,
            1,
            5,
            vec![
                CoverBox {
                    id: 0,
                    center: Some(1),
                    nodes: vec![0, 1, 2],
                },
                CoverBox {
                    id: 1,
                    center: Some(3),
                    nodes: vec![3, 4],
                },
            ],
        );
        let json = cover.to_json();
        assert_eq!(
            json,
            r#"{"algorithm":"memb","rb":1,"l":3,"gc_mode":null,"boxes":[{"id":0,"center":1,"nodes":[0,1,2]},{"id":1,"center":3,"nodes":[3,4]}],"assignment":[0,0,0,1,1]}"#
        );
        assert_eq!(BoxCover::from_json(&json).unwrap(), cover);
    }

    #[test]
    fn gc_json_has_null_center_and_mode() {
        let g = Graph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
        let json = gc_cover(&g, 1, GcMode::Song, None).unwrap().to_json();
        assert_eq!(
            json,
            r#"{"algorithm":"gc","rb":1,"l":3,"gc_mode":"song","boxes":[{"id":0,"center":null,"nodes":[0,1]}],"assignment":[0,0]}"#
        );
    }
}
