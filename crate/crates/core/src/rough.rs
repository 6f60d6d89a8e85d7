//! The three rough approximation families on Cayley and pseudo-Cayley graphs.
//!
//! Each family approximates a graph configuration modulo a normal subgroup
//! `N` and returns a [`RoughGraphPair`] of a lower and an upper graph:
//!
//! - **edge** ([`rough_edge_cayley`]): the vertex set stays the whole group;
//!   the connection set is approximated. Lower connection `N₋(S)`, upper
//!   connection `N^(S)` minus the identity.
//! - **vertex** ([`rough_vertex_pseudo`]): the connection set stays fixed;
//!   the vertex set is approximated. Upper graph `(N^(R); S)`, lower graph
//!   `(N₋(R); S ∩ N₋(R))` — the empty graph when `N₋(R)` is empty.
//! - **full** ([`rough_pseudo`]): both sides are approximated. Upper
//!   `(N^(R); N^(S) minus identity)`, lower `(N₋(R); N₋(S))`.
//!
//! Every derived graph is built through the validating constructors, so the
//! structural guarantees (symmetric identity-free connection sets, two-sided
//! closure of vertex sets) are re-checked on every construction rather than
//! assumed.
//!
//! The upper connection set of the edge and full families drops the identity
//! before use; the lower side needs no such adjustment because a lower
//! approximation of an identity-free set is contained in it. Where a
//! predicate asks whether an upper approximation "is a minimal Cayley set",
//! it is evaluated on that identity-free version — the set that actually
//! labels the edges.
//!
//! The connection-set approximations of the vertexless sides accept the
//! empty set (approximating the empty set yields empty sets); only the edge
//! family, whose whole point is the connection set, insists on a nonempty
//! `S`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::approx::{approx_unchecked, rough_pair, ApproxError};
use crate::graph::{
    is_minimal_cayley_set_for, ConnectionSet, Graph, GraphError,
};
use crate::group::{ElementSet, FiniteGroup};

/// Which of the three approximation families produced a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Approximate the connection set; vertices stay the whole group.
    Edge,
    /// Approximate the vertex set; the connection set stays fixed.
    Vertex,
    /// Approximate both the vertex and the connection set.
    Full,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Edge => "edge",
            Family::Vertex => "vertex",
            Family::Full => "full",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(text: &str) -> Result<Family, String> {
        match text {
            "edge" => Ok(Family::Edge),
            "vertex" => Ok(Family::Vertex),
            "full" => Ok(Family::Full),
            other => Err(format!(
                "unknown family {other:?}; expected edge, vertex or full"
            )),
        }
    }
}

/// Which member of a rough pair a predicate refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(text: &str) -> Result<Side, String> {
        match text {
            "lower" => Ok(Side::Lower),
            "upper" => Ok(Side::Upper),
            other => Err(format!("unknown side {other:?}; expected lower or upper")),
        }
    }
}

/// Errors raised by the rough graph constructors and predicates.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RoughError {
    #[error(transparent)]
    Approx(#[from] ApproxError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// The edge family approximates the connection set, so it must be
    /// nonempty.
    #[error("edge family requires a nonempty connection set")]
    EmptyConnectionSet,
}

/// A lower and an upper approximation graph for one configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoughGraphPair {
    pub lower: Graph,
    pub upper: Graph,
    /// The normal subgroup the approximation was taken against.
    pub modulus: ElementSet,
    pub family: Family,
    /// Connection set labelling the lower graph's edges.
    pub lower_connection: ElementSet,
    /// Connection set labelling the upper graph's edges (identity-free).
    pub upper_connection: ElementSet,
}

/// Approximate a Cayley graph's connection set modulo `modulus`.
///
/// Lower graph `(G; N₋(S))`, upper graph `(G; N^(S) minus identity)`.
pub fn rough_edge_cayley(
    group: &FiniteGroup,
    modulus: ElementSet,
    connection: &ConnectionSet,
) -> Result<RoughGraphPair, RoughError> {
    if !group.same_structure(connection.group()) {
        return Err(GraphError::GroupMismatch.into());
    }
    if connection.members().is_empty() {
        return Err(RoughError::EmptyConnectionSet);
    }
    let pair = rough_pair(group, modulus, connection.members())?;
    let lower_connection = pair.lower;
    let upper_connection = pair.upper.without(group.identity());
    let lower = Graph::cayley(group, &ConnectionSet::new(group, lower_connection)?)?;
    let upper = Graph::cayley(group, &ConnectionSet::new(group, upper_connection)?)?;
    Ok(RoughGraphPair {
        lower,
        upper,
        modulus,
        family: Family::Edge,
        lower_connection,
        upper_connection,
    })
}

/// Approximate a pseudo-Cayley graph's vertex set modulo `modulus`.
///
/// Upper graph `(N^(R); S)`, lower graph `(N₋(R); S ∩ N₋(R))`; an empty
/// lower approximation yields the empty graph. `strict` applies to the
/// validation of the input configuration `(R; S)` only.
pub fn rough_vertex_pseudo(
    group: &FiniteGroup,
    modulus: ElementSet,
    vertices: ElementSet,
    connection: &ConnectionSet,
    strict: bool,
) -> Result<RoughGraphPair, RoughError> {
    Graph::pseudo_cayley(group, vertices, connection, strict)?;
    let pair = rough_pair(group, modulus, vertices)?;
    let upper = Graph::pseudo_cayley(group, pair.upper, connection, false)?;
    let lower_connection = connection.members() & pair.lower;
    let lower = if pair.lower.is_empty() {
        Graph::empty(group)
    } else {
        let restricted = ConnectionSet::new(group, lower_connection)?;
        Graph::pseudo_cayley(group, pair.lower, &restricted, false)?
    };
    Ok(RoughGraphPair {
        lower,
        upper,
        modulus,
        family: Family::Vertex,
        lower_connection,
        upper_connection: connection.members(),
    })
}

/// Approximate both sides of a pseudo-Cayley graph modulo `modulus`.
///
/// Upper graph `(N^(R); N^(S) minus identity)`, lower graph
/// `(N₋(R); N₋(S))`; an empty lower vertex approximation yields the empty
/// graph. The empty connection set is approximated to empty sets.
pub fn rough_pseudo(
    group: &FiniteGroup,
    modulus: ElementSet,
    vertices: ElementSet,
    connection: &ConnectionSet,
    strict: bool,
) -> Result<RoughGraphPair, RoughError> {
    Graph::pseudo_cayley(group, vertices, connection, strict)?;
    let pair = rough_pair(group, modulus, vertices)?;
    let (s_lower, s_upper) = approx_unchecked(group, modulus, connection.members());
    let lower_connection = s_lower;
    let upper_connection = s_upper.without(group.identity());
    let upper = Graph::pseudo_cayley(
        group,
        pair.upper,
        &ConnectionSet::new(group, upper_connection)?,
        false,
    )?;
    let lower = if pair.lower.is_empty() {
        Graph::empty(group)
    } else {
        Graph::pseudo_cayley(
            group,
            pair.lower,
            &ConnectionSet::new(group, lower_connection)?,
            false,
        )?
    };
    Ok(RoughGraphPair {
        lower,
        upper,
        modulus,
        family: Family::Full,
        lower_connection,
        upper_connection,
    })
}

/// The approximated connection set the edge family uses on one side.
fn edge_side_connection(
    group: &FiniteGroup,
    modulus: ElementSet,
    connection: &ConnectionSet,
    side: Side,
) -> Result<ElementSet, RoughError> {
    if connection.members().is_empty() {
        return Err(RoughError::EmptyConnectionSet);
    }
    let pair = rough_pair(group, modulus, connection.members())?;
    Ok(match side {
        Side::Lower => pair.lower,
        Side::Upper => pair.upper.without(group.identity()),
    })
}

/// True iff the chosen approximation of the connection set generates the
/// whole group (which makes the corresponding approximation graph connected).
pub fn is_edge_rough_generating(
    group: &FiniteGroup,
    modulus: ElementSet,
    connection: &ConnectionSet,
    side: Side,
) -> Result<bool, RoughError> {
    let side_connection = edge_side_connection(group, modulus, connection, side)?;
    Ok(group.generated_subgroup(side_connection) == group.all())
}

/// True iff the chosen approximation of the connection set is a minimal
/// Cayley set for the whole group.
pub fn is_edge_rough_optimal(
    group: &FiniteGroup,
    modulus: ElementSet,
    connection: &ConnectionSet,
    side: Side,
) -> Result<bool, RoughError> {
    let side_connection = edge_side_connection(group, modulus, connection, side)?;
    Ok(is_minimal_cayley_set_for(group, side_connection, group.all()))
}

/// The chosen approximation of the vertex set, validated as for the vertex
/// and full family constructors.
fn vertex_side_approximation(
    group: &FiniteGroup,
    modulus: ElementSet,
    vertices: ElementSet,
    connection: &ConnectionSet,
    side: Side,
) -> Result<ElementSet, RoughError> {
    Graph::pseudo_cayley(group, vertices, connection, false)?;
    let pair = rough_pair(group, modulus, vertices)?;
    Ok(match side {
        Side::Lower => pair.lower,
        Side::Upper => pair.upper,
    })
}

/// True iff the chosen approximation of `R` is a subgroup of the group and
/// the fixed connection set `S` generates it.
pub fn is_vertex_rough_generating(
    group: &FiniteGroup,
    modulus: ElementSet,
    vertices: ElementSet,
    connection: &ConnectionSet,
    side: Side,
) -> Result<bool, RoughError> {
    let approx = vertex_side_approximation(group, modulus, vertices, connection, side)?;
    Ok(group.is_subgroup(approx) && group.generated_subgroup(connection.members()) == approx)
}

/// True iff the chosen approximation of `R` is a subgroup and the fixed
/// connection set `S` is a minimal Cayley set for it.
pub fn is_vertex_rough_optimal(
    group: &FiniteGroup,
    modulus: ElementSet,
    vertices: ElementSet,
    connection: &ConnectionSet,
    side: Side,
) -> Result<bool, RoughError> {
    let approx = vertex_side_approximation(group, modulus, vertices, connection, side)?;
    Ok(group.is_subgroup(approx) && is_minimal_cayley_set_for(group, connection.members(), approx))
}

/// The matching approximations of `R` and `S` for the full family.
fn full_side_sets(
    group: &FiniteGroup,
    modulus: ElementSet,
    vertices: ElementSet,
    connection: &ConnectionSet,
    side: Side,
) -> Result<(ElementSet, ElementSet), RoughError> {
    Graph::pseudo_cayley(group, vertices, connection, false)?;
    let pair = rough_pair(group, modulus, vertices)?;
    let (s_lower, s_upper) = approx_unchecked(group, modulus, connection.members());
    Ok(match side {
        Side::Lower => (pair.lower, s_lower),
        Side::Upper => (pair.upper, s_upper.without(group.identity())),
    })
}

/// True iff the chosen approximation of `R` is a subgroup and the matching
/// approximation of `S` generates it.
pub fn is_rough_generating(
    group: &FiniteGroup,
    modulus: ElementSet,
    vertices: ElementSet,
    connection: &ConnectionSet,
    side: Side,
) -> Result<bool, RoughError> {
    let (r_approx, s_approx) = full_side_sets(group, modulus, vertices, connection, side)?;
    Ok(group.is_subgroup(r_approx) && group.generated_subgroup(s_approx) == r_approx)
}

/// True iff the chosen approximation of `R` is a subgroup and the matching
/// approximation of `S` is a minimal Cayley set for it.
pub fn is_rough_optimal(
    group: &FiniteGroup,
    modulus: ElementSet,
    vertices: ElementSet,
    connection: &ConnectionSet,
    side: Side,
) -> Result<bool, RoughError> {
    let (r_approx, s_approx) = full_side_sets(group, modulus, vertices, connection, side)?;
    Ok(group.is_subgroup(r_approx) && is_minimal_cayley_set_for(group, s_approx, r_approx))
}

/// Sufficient condition for definability of the vertex set: the lower
/// approximation is nonempty and some vertex's orbit under the subgroup
/// generated by the connection set is the whole vertex set.
pub fn is_definable_by_orbit(
    group: &FiniteGroup,
    modulus: ElementSet,
    vertices: ElementSet,
    connection: &ConnectionSet,
) -> Result<bool, RoughError> {
    Graph::pseudo_cayley(group, vertices, connection, false)?;
    let pair = rough_pair(group, modulus, vertices)?;
    if pair.lower.is_empty() {
        return Ok(false);
    }
    let orbit_subgroup = group.generated_subgroup(connection.members());
    Ok(vertices
        .iter()
        .any(|r| group.product_set(orbit_subgroup, ElementSet::singleton(r)) == vertices))
}
