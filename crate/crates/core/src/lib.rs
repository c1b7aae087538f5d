//! Box-covering based hierarchical routing.
//!
//! A network [`Graph`] is partitioned into radius-bounded boxes by one of three
//! covering algorithms (greedy coloring, maximum excluded mass burning, and the
//! center-including eccentricity algorithm). Each box then becomes a node of a
//! quotient [`SuperGraph`]; a route is found by running Dijkstra over boxes,
//! then inside each box along the way, and stitching the pieces together.
//!
//! The [`bench`] module compares the scheme against flat Dijkstra on complete
//! ternary trees and the [`cli`] module exposes everything as a command-line
//! tool.

pub mod bench;
pub mod cli;
pub mod cover;
mod error;
pub mod graph;
pub mod routing;

pub use cover::{ciea_cover, excluded_mass, gc_cover, memb_cover, validate_cover};
pub use cover::{Algorithm, BoxCover, CoverBox, GcMode, Violation};
pub use error::{Error, ParseErrorKind, Result};
pub use graph::{
    apsp_oracle, bfs_hops, dijkstra_sssp, eccentricities, gen_random_graph, gen_ternary_tree,
    parse_edge_list, write_edge_list, DistanceField, Graph, HopField,
};


pub use routing::{bcr_route, build_supergraph, compute_stretch, dijkstra_route};
pub use routing::{Method, Route, SuperEdge, SuperGraph};
