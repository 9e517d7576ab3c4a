//! G-parking functions of rooted multigraphs, their bijection with colored
//! spanning trees, the bridge-vertex statistic, and the Tutte polynomial
//! computed as `Σ_f x^{b(f)} y^{w(f)}` alongside a deletion–contraction
//! reference.

pub mod bijection;
pub mod classical;
pub mod criticality;
pub mod error;
pub mod graph;
pub mod parking;
pub mod poly;
pub mod registry;
pub mod spanning;
pub mod tree;
pub mod tutte;

pub use bijection::{algorithm_a, ord, phi, rea, theta, VertexOrder};
pub use criticality::{
    bridge_vertices, critical_vertices, phi_contract, psi_delete, strong_identical, weak_identical, BridgeStats,
    ParkingAnalysis,
};
pub use error::{Error, Result};
pub use graph::{ColoredEdge, EdgeKind, GraphSpec, Multigraph, Vertex, VertexRanking};
pub use parking::{enumerate_parking, is_parking, is_parking_subset, weight, ParkingFunction};
pub use poly::BivariatePolynomial;
pub use registry::{Named, Registry};
pub use spanning::count_spanning_trees;
pub use tree::{enumerate_colored_trees, ColoredSpanningTree};
pub use tutte::{bw_multiset, tutte_delcon, tutte_parking};
