//! Rough-set approximations over finite groups, and the graphs they induce.
//!
//! The crate is organised in layers:
//!
//! - [`group`]: finite groups as operation tables, subgroup and coset
//!   machinery, and [`group::ElementSet`] bitsets.
//! - [`approx`]: lower/upper rough approximations of a subset modulo a
//!   normal subgroup, plus definability and subgroup classification.
//! - [`graph`]: Cayley and pseudo-Cayley graphs over a group, subgraph and
//!   lattice operations, connectivity, edge connectivity and optimality.
//! - [`rough`]: the three rough graph families (edge, vertex, full), pairing
//!   a lower and an upper graph for a configuration modulo a normal subgroup,
//!   and the rough generating/optimality predicates.
//! - [`laws`]: a sweep harness that checks the algebraic laws the rough
//!   families satisfy, exhaustively on small groups and by sampling above.
//! - [`groupfile`]: a small JSON interchange format for groups.

pub mod approx;
pub mod graph;
pub mod group;
pub mod groupfile;
pub mod laws;
pub mod rough;

pub use approx::{
    classify_rough_subgroup, is_definable, lower_approx, rough_pair, upper_approx, ApproxError,
    RoughPair, RoughSubgroupClassification,
};
pub use graph::{
    generates, is_minimal_cayley_set, is_minimal_cayley_set_for, ConnectionSet, Graph,
    GraphError, GraphKind,
};
pub use group::{ElementSet, FiniteGroup, GroupError, MAX_ORDER};
pub use groupfile::{GroupFile, GroupFileError};
pub use laws::{fleet_acceptance, fleet_default, run_suite, LawOptions, LawOutcome, SuiteReport};
pub use rough::{
    is_definable_by_orbit, is_edge_rough_generating, is_edge_rough_optimal, is_rough_generating,
    is_rough_optimal, is_vertex_rough_generating, is_vertex_rough_optimal, rough_edge_cayley,
    rough_pseudo, rough_vertex_pseudo, Family, RoughError, RoughGraphPair, Side,
};
