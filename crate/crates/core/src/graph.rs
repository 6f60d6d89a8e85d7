//! Cayley and pseudo-Cayley graphs over a finite group.
//!
//! A [`Graph`] is an undirected simple graph whose vertices are group
//! elements. [`Graph::cayley`] puts an edge between `g` and `g*s` for every
//! group element `g` and every member `s` of a validated [`ConnectionSet`]
//! (symmetric and identity-free, so the edge relation is loop-free and
//! orientation-independent). [`Graph::pseudo_cayley`] restricts the vertex
//! set to a subset `R` that is closed under multiplication by the connection
//! set on both sides, which is exactly what keeps every generated edge inside
//! `R` in non-abelian groups.
//!
//! Besides construction the module provides the subgraph order and
//! union/intersection lattice used by the approximation laws, connectivity
//! and components, exact edge connectivity (Edmonds-Karp max-flow, minimised
//! over sink choices), the generation and minimal-Cayley-set predicates, and
//! the connection-set / closed-vertex-set enumerations that the workbench and
//! the law sweeps share.

use std::fmt;

use thiserror::Error;

use crate::group::{ElementSet, FiniteGroup};

/// Errors raised while building or combining graphs.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    /// The identity element was offered as a connection; it would create loops.
    #[error("connection set contains the identity element")]
    IdentityInConnectionSet,
    /// A connection lacks its inverse, so the edge relation would be
    /// orientation-dependent.
    #[error("connection set contains element {element} but not its inverse {inverse}")]
    MissingInverse { element: usize, inverse: usize },
    /// A set refers to elements outside the group.
    #[error("set contains element indices outside the group (order {order})")]
    OutOfRange { order: usize },
    /// A pseudo-Cayley vertex set was empty.
    #[error("pseudo-Cayley vertex set is empty")]
    EmptyVertexSet,
    /// Multiplying a vertex by a connection escapes the vertex set.
    #[error("vertex set is not closed under the connection set: {left} * {right} = {product} lies outside")]
    NotClosed {
        left: usize,
        right: usize,
        product: usize,
    },
    /// Strict validation requires the connection set inside the vertex set.
    #[error("connection set is not contained in the vertex set; missing {missing:?}")]
    ConnectionNotInVertices { missing: ElementSet },
    /// Two graphs over different groups cannot be combined.
    #[error("graphs are defined over different groups")]
    GroupMismatch,
    /// Graph intersection requires a shared vertex.
    #[error("graphs share no vertex; intersection is undefined")]
    DisjointVertexSets,
    /// Connectivity questions are undefined on the empty graph.
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    /// Edge connectivity is defined for connected graphs only.
    #[error("graph is disconnected; edge connectivity undefined")]
    Disconnected,
}

/// A validated connection set: symmetric, identity-free, within the group.
///
/// The empty set is valid and yields edgeless graphs.
#[derive(Clone)]
pub struct ConnectionSet {
    group: FiniteGroup,
    members: ElementSet,
}

impl ConnectionSet {
    pub fn new(group: &FiniteGroup, members: ElementSet) -> Result<ConnectionSet, GraphError> {
        validate_connection_set(group, members)?;
        Ok(ConnectionSet {
            group: group.clone(),
            members,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn members(&self) -> ElementSet {
        self.members
    }
}

impl fmt::Debug for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConnectionSet({})", self.group.format_set(self.members))
    }
}

impl PartialEq for ConnectionSet {
    fn eq(&self, other: &ConnectionSet) -> bool {
        self.group.same_structure(&other.group) && self.members == other.members
    }
}

impl Eq for ConnectionSet {}

/// Check the connection-set invariants without building the wrapper.
pub fn validate_connection_set(
    group: &FiniteGroup,
    members: ElementSet,
) -> Result<(), GraphError> {
    if !members.is_subset_of(group.all()) {
        return Err(GraphError::OutOfRange {
            order: group.order(),
        });
    }
    if members.contains(group.identity()) {
        return Err(GraphError::IdentityInConnectionSet);
    }
    for s in members.iter() {
        let inverse = group.inverse(s);
        if !members.contains(inverse) {
            return Err(GraphError::MissingInverse {
                element: s,
                inverse,
            });
        }
    }
    Ok(())
}

/// How a graph's vertex set relates to the group: full Cayley graphs live on
/// all of the group, pseudo-Cayley graphs on a proper subset.
///
/// The tag is derived from the vertex set at construction time and carried
/// for presentation; it never participates in graph equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Cayley,
    PseudoCayley,
}

/// An undirected simple graph on group elements.
///
/// Edges are stored as sorted, deduplicated `(low, high)` index pairs, which
/// makes equality, the subgraph order, and serialisation deterministic.
#[derive(Clone)]
pub struct Graph {
    group: FiniteGroup,
    vertices: ElementSet,
    edges: Vec<(usize, usize)>,
    kind: GraphKind,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.group.same_structure(&other.group)
            && self.vertices == other.vertices
            && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({:?}, vertices={}, edges={:?})",
            self.kind,
            self.group.format_set(self.vertices),
            self.edges
        )
    }
}

fn kind_for(group: &FiniteGroup, vertices: ElementSet) -> GraphKind {
    if vertices == group.all() {
        GraphKind::Cayley
    } else {
        GraphKind::PseudoCayley
    }
}

/// Generate the sorted deduplicated edge list `{v, v*s}` over the vertices.
fn connection_edges(
    group: &FiniteGroup,
    vertices: ElementSet,
    connection: ElementSet,
) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for v in vertices.iter() {
        for s in connection.iter() {
            let w = group.mul(v, s);
            debug_assert!(vertices.contains(w), "edge endpoint escaped vertex set");
            edges.push((v.min(w), v.max(w)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

impl Graph {
    /// Cayley graph on the whole group with the given connection set.
    pub fn cayley(group: &FiniteGroup, connection: &ConnectionSet) -> Result<Graph, GraphError> {
        if !group.same_structure(&connection.group) {
            return Err(GraphError::GroupMismatch);
        }
        Ok(Graph {
            group: group.clone(),
            vertices: group.all(),
            edges: connection_edges(group, group.all(), connection.members),
            kind: GraphKind::Cayley,
        })
    }

    /// Pseudo-Cayley graph on the vertex subset `vertices`.
    ///
    /// The vertex set must be nonempty and closed under the connection set on
    /// both sides (`s*r` and `r*s` stay inside for every vertex `r` and
    /// connection `s`); two-sided closure is what keeps every generated edge
    /// endpoint a vertex in non-abelian groups. With `strict` the connection
    /// set must additionally be contained in the vertex set.
    pub fn pseudo_cayley(
        group: &FiniteGroup,
        vertices: ElementSet,
        connection: &ConnectionSet,
        strict: bool,
    ) -> Result<Graph, GraphError> {
        if !group.same_structure(&connection.group) {
            return Err(GraphError::GroupMismatch);
        }
        if !vertices.is_subset_of(group.all()) {
            return Err(GraphError::OutOfRange {
                order: group.order(),
            });
        }
        if vertices.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let members = connection.members;
        for r in vertices.iter() {
            for s in members.iter() {
                let sr = group.mul(s, r);
                if !vertices.contains(sr) {
                    return Err(GraphError::NotClosed {
                        left: s,
                        right: r,
                        product: sr,
                    });
                }
                let rs = group.mul(r, s);
                if !vertices.contains(rs) {
                    return Err(GraphError::NotClosed {
                        left: r,
                        right: s,
                        product: rs,
                    });
                }
            }
        }
        if strict && !members.is_subset_of(vertices) {
            return Err(GraphError::ConnectionNotInVertices {
                missing: members - vertices,
            });
        }
        Ok(Graph {
            group: group.clone(),
            vertices,
            edges: connection_edges(group, vertices, members),
            kind: kind_for(group, vertices),
        })
    }

    /// Build without validation; callers guarantee closure. Unlike the public
    /// constructor this admits the empty vertex set (the empty graph), which
    /// the approximation laws need as a legitimate lower-approximation value.
    pub(crate) fn pseudo_unchecked(
        group: &FiniteGroup,
        vertices: ElementSet,
        connection: ElementSet,
    ) -> Graph {
        Graph {
            group: group.clone(),
            vertices,
            edges: connection_edges(group, vertices, connection),
            kind: kind_for(group, vertices),
        }
    }

    /// The empty graph over a group: no vertices, no edges.
    pub fn empty(group: &FiniteGroup) -> Graph {
        Graph {
            group: group.clone(),
            vertices: ElementSet::EMPTY,
            edges: Vec::new(),
            kind: GraphKind::PseudoCayley,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn vertices(&self) -> ElementSet {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Smallest vertex degree; `None` on the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let degrees = self.degree_table();
        self.vertices.iter().map(|v| degrees[v]).min()
    }

    fn degree_table(&self) -> Vec<usize> {
        let mut degrees = vec![0usize; self.group.order()];
        for &(a, b) in &self.edges {
            degrees[a] += 1;
            degrees[b] += 1;
        }
        degrees
    }

    /// True iff `self` has a subset of the vertices and edges of `other`.
    /// Graphs over different groups are never comparable.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        if !self.group.same_structure(&other.group) {
            return false;
        }
        if !self.vertices.is_subset_of(other.vertices) {
            return false;
        }
        self.edges
            .iter()
            .all(|edge| other.edges.binary_search(edge).is_ok())
    }

    /// Union of vertex and edge sets.
    pub fn union(&self, other: &Graph) -> Result<Graph, GraphError> {
        if !self.group.same_structure(&other.group) {
            return Err(GraphError::GroupMismatch);
        }
        let mut edges: Vec<(usize, usize)> =
            self.edges.iter().chain(other.edges.iter()).copied().collect();
        edges.sort_unstable();
        edges.dedup();
        let vertices = self.vertices | other.vertices;
        Ok(Graph {
            group: self.group.clone(),
            vertices,
            edges,
            kind: kind_for(&self.group, vertices),
        })
    }

    /// Intersection of vertex and edge sets; the operands must share at
    /// least one vertex.
    pub fn intersection(&self, other: &Graph) -> Result<Graph, GraphError> {
        if !self.group.same_structure(&other.group) {
            return Err(GraphError::GroupMismatch);
        }
        if !self.vertices.intersects(other.vertices) {
            return Err(GraphError::DisjointVertexSets);
        }
        Ok(self.intersection_unchecked(other))
    }

    /// Intersection allowing disjoint (and hence empty) results; the law
    /// sweeps intersect lower approximations that may legitimately share
    /// nothing.
    pub(crate) fn intersection_unchecked(&self, other: &Graph) -> Graph {
        debug_assert!(self.group.same_structure(&other.group));
        let vertices = self.vertices & other.vertices;
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|edge| other.edges.binary_search(edge).is_ok())
            .copied()
            .collect();
        Graph {
            group: self.group.clone(),
            vertices,
            edges,
            kind: kind_for(&self.group, vertices),
        }
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.group.order()];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        adjacency
    }

    /// True iff every pair of vertices is linked by a path. Undefined (an
    /// error) on the empty graph; a single isolated vertex is connected.
    pub fn is_connected(&self) -> Result<bool, GraphError> {
        if self.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        Ok(self.connected_flag())
    }

    pub(crate) fn connected_flag(&self) -> bool {
        let start = match self.vertices.first() {
            Some(v) => v,
            None => return false,
        };
        let reached = self.reachable_from(start, &self.adjacency());
        reached == self.vertices
    }

    fn reachable_from(&self, start: usize, adjacency: &[Vec<usize>]) -> ElementSet {
        let mut reached = ElementSet::singleton(start);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for &w in &adjacency[v] {
                if !reached.contains(w) {
                    reached.insert(w);
                    queue.push(w);
                }
            }
        }
        reached
    }

    /// Connected components as vertex sets, ordered by least member.
    pub fn components(&self) -> Vec<ElementSet> {
        let adjacency = self.adjacency();
        let mut seen = ElementSet::EMPTY;
        let mut components = Vec::new();
        for v in self.vertices.iter() {
            if !seen.contains(v) {
                let component = self.reachable_from(v, &adjacency);
                seen |= component;
                components.push(component);
            }
        }
        components
    }

    /// Exact edge connectivity of a connected graph: the minimum number of
    /// edge deletions that disconnect it. A single-vertex graph reports 0.
    ///
    /// Computed as the minimum over sinks `t` of the `s`-`t` max flow with
    /// unit edge capacities (Menger), with `s` fixed to one vertex: every
    /// global minimum cut separates `s` from something.
    pub fn edge_connectivity(&self) -> Result<usize, GraphError> {
        if self.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        if !self.connected_flag() {
            return Err(GraphError::Disconnected);
        }
        let members = self.vertices.members();
        if members.len() == 1 {
            return Ok(0);
        }
        let mut position = vec![usize::MAX; self.group.order()];
        for (index, &v) in members.iter().enumerate() {
            position[v] = index;
        }
        let mut network = FlowNetwork::new(members.len());
        for &(a, b) in &self.edges {
            network.add_undirected_edge(position[a], position[b]);
        }
        let mut best = usize::MAX;
        for t in 1..members.len() {
            best = best.min(network.max_flow(0, t));
            if best == 0 {
                break;
            }
        }
        Ok(best)
    }

    /// Edge connectivity by exhaustive deletion: the smallest number of
    /// edges whose removal disconnects the graph. Exponential in the edge
    /// count — an independent cross-check of [`Graph::edge_connectivity`]
    /// for graphs with at most 24 edges, not a production path.
    pub fn edge_connectivity_by_deletion(&self) -> Result<usize, GraphError> {
        if self.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        if !self.connected_flag() {
            return Err(GraphError::Disconnected);
        }
        assert!(self.edges.len() <= 24, "deletion oracle limited to 24 edges");
        if self.vertex_count() <= 1 {
            return Ok(0);
        }
        for k in 1..=self.edges.len() {
            let disconnects = any_combination(self.edges.len(), k, |chosen| {
                let kept = Graph {
                    group: self.group.clone(),
                    vertices: self.vertices,
                    edges: self
                        .edges
                        .iter()
                        .enumerate()
                        .filter(|(index, _)| !chosen.contains(index))
                        .map(|(_, &edge)| edge)
                        .collect(),
                    kind: self.kind,
                };
                !kept.connected_flag()
            });
            if disconnects {
                return Ok(k);
            }
        }
        Ok(self.edges.len())
    }

    /// Connected with edge connectivity equal to minimum degree — the
    /// strongest edge connectivity a graph can have, since the edges at one
    /// vertex always form a cut. False on empty or disconnected graphs.
    pub fn is_optimal_connected(&self) -> bool {
        if self.is_empty() || !self.connected_flag() {
            return false;
        }
        let delta = self.min_degree().expect("nonempty graph has a degree");
        self.edge_connectivity().expect("connected") == delta
    }

    /// Connected and every single edge deletion disconnects — that is, the
    /// graph is a tree on its vertices. This is the literal reading of
    /// "every spanning subgraph is not connected".
    pub fn is_edge_minimal_connected(&self) -> bool {
        if self.is_empty() || !self.connected_flag() {
            return false;
        }
        // A connected graph is a tree iff |E| = |V| - 1.
        self.edge_count() == self.vertex_count() - 1
    }
}

/// Visit every k-subset of 0..n until `test` accepts one; true iff some
/// subset was accepted.
fn any_combination(n: usize, k: usize, mut test: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut chosen: Vec<usize> = (0..k).collect();
    loop {
        if test(&chosen) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if chosen[i] < i + n - k {
                chosen[i] += 1;
                for j in i + 1..k {
                    chosen[j] = chosen[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Unit-capacity max-flow network (Edmonds-Karp). Arcs are stored in pairs:
/// arc `i` and its reverse `i ^ 1`, so residual updates are index flips.
struct FlowNetwork {
    adjacency: Vec<Vec<usize>>,
    to: Vec<usize>,
    capacity: Vec<u32>,
}

impl FlowNetwork {
    fn new(n: usize) -> FlowNetwork {
        FlowNetwork {
            adjacency: vec![Vec::new(); n],
            to: Vec::new(),
            capacity: Vec::new(),
        }
    }

    fn add_undirected_edge(&mut self, a: usize, b: usize) {
        let index = self.to.len();
        self.to.push(b);
        self.capacity.push(1);
        self.adjacency[a].push(index);
        self.to.push(a);
        self.capacity.push(1);
        self.adjacency[b].push(index + 1);
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        // Restore full capacities from the previous sink's run.
        self.capacity.iter_mut().for_each(|c| *c = 1);
        let mut flow = 0;
        loop {
            let mut previous_arc = vec![usize::MAX; self.adjacency.len()];
            let mut visited = vec![false; self.adjacency.len()];
            visited[source] = true;
            let mut queue = std::collections::VecDeque::from([source]);
            'bfs: while let Some(v) = queue.pop_front() {
                for &arc in &self.adjacency[v] {
                    let w = self.to[arc];
                    if !visited[w] && self.capacity[arc] > 0 {
                        visited[w] = true;
                        previous_arc[w] = arc;
                        if w == sink {
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !visited[sink] {
                return flow;
            }
            let mut v = sink;
            while v != source {
                let arc = previous_arc[v];
                self.capacity[arc] -= 1;
                self.capacity[arc ^ 1] += 1;
                v = self.to[arc ^ 1];
            }
            flow += 1;
        }
    }
}

/// True iff the set generates the whole group.
pub fn generates(group: &FiniteGroup, set: ElementSet) -> bool {
    group.generated_subgroup(set) == group.all()
}

/// True iff the connection set generates `target` and dropping any inverse
/// pair `{s, s^-1}` generates a proper subgroup of `target`.
///
/// `target` must be the subgroup the set is measured against; the classic
/// minimal-Cayley-set notion is this with `target` the whole group.
pub fn is_minimal_cayley_set_for(
    group: &FiniteGroup,
    connection: ElementSet,
    target: ElementSet,
) -> bool {
    if group.generated_subgroup(connection) != target {
        return false;
    }
    for s in connection.iter() {
        let mut reduced = connection;
        reduced.remove(s);
        reduced.remove(group.inverse(s));
        if group.generated_subgroup(reduced) == target {
            return false;
        }
    }
    true
}

/// True iff the connection set is a minimal Cayley set for the whole group.
pub fn is_minimal_cayley_set(group: &FiniteGroup, connection: &ConnectionSet) -> bool {
    is_minimal_cayley_set_for(group, connection.members(), group.all())
}

/// The inverse-pair orbits `{g, g^-1}` over the non-identity elements of
/// `within`, ordered by least member. Orbits whose inverse falls outside
/// `within` are dropped — no symmetric subset of `within` can use them.
pub fn inverse_pair_orbits_within(group: &FiniteGroup, within: ElementSet) -> Vec<ElementSet> {
    let mut seen = ElementSet::EMPTY;
    let mut orbits = Vec::new();
    for g in within.iter() {
        if g == group.identity() || seen.contains(g) {
            continue;
        }
        let inverse = group.inverse(g);
        if !within.contains(inverse) {
            continue;
        }
        let orbit: ElementSet = [g, inverse].into_iter().collect();
        seen |= orbit;
        orbits.push(orbit);
    }
    orbits
}

/// All inverse-pair orbits of the group's non-identity elements.
pub fn inverse_pair_orbits(group: &FiniteGroup) -> Vec<ElementSet> {
    inverse_pair_orbits_within(group, group.all())
}

/// Every symmetric identity-free subset of `within` (every valid connection
/// set inside it), including the empty set, sorted by size then members.
///
/// There are exactly `2^k` of them for `k` inverse-pair orbits.
pub fn symmetric_subsets_within(group: &FiniteGroup, within: ElementSet) -> Vec<ElementSet> {
    let orbits = inverse_pair_orbits_within(group, within);
    let mut subsets = Vec::with_capacity(1 << orbits.len());
    for mask in 0u64..(1 << orbits.len()) {
        let mut set = ElementSet::EMPTY;
        for (index, &orbit) in orbits.iter().enumerate() {
            if mask & (1 << index) != 0 {
                set |= orbit;
            }
        }
        subsets.push(set);
    }
    subsets.sort_by(ElementSet::cmp_by_size_then_members);
    subsets
}

/// Every valid connection set of the group, including the empty one.
pub fn all_connection_sets(group: &FiniteGroup) -> Vec<ElementSet> {
    symmetric_subsets_within(group, group.all())
}

/// Every nonempty vertex set closed on both sides under the connection set:
/// exactly the nonempty unions of double cosets of the generated subgroup.
/// Sorted by size then members.
pub fn closed_vertex_sets(group: &FiniteGroup, connection: ElementSet) -> Vec<ElementSet> {
    let subgroup = group.generated_subgroup(connection);
    let blocks = group.double_cosets(subgroup);
    let mut sets = Vec::with_capacity((1usize << blocks.len()) - 1);
    for mask in 1u64..(1 << blocks.len()) {
        let mut set = ElementSet::EMPTY;
        for (index, &block) in blocks.iter().enumerate() {
            if mask & (1 << index) != 0 {
                set |= block;
            }
        }
        sets.push(set);
    }
    sets.sort_by(ElementSet::cmp_by_size_then_members);
    sets
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(indices: &[usize]) -> ElementSet {
        indices.iter().copied().collect()
    }

    fn cayley_on(group: &FiniteGroup, connection: &[usize]) -> Graph {
        let connection = ConnectionSet::new(group, set(connection)).unwrap();
        Graph::cayley(group, &connection).unwrap()
    }

    #[test]
    fn connection_set_validation_matches_examples() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert!(ConnectionSet::new(&z8, set(&[1, 2, 6, 7])).is_ok());
        assert!(ConnectionSet::new(&z8, ElementSet::EMPTY).is_ok());
        assert_eq!(
            ConnectionSet::new(&z8, set(&[0, 1, 7])).unwrap_err(),
            GraphError::IdentityInConnectionSet
        );
        assert_eq!(
            ConnectionSet::new(&z8, set(&[1])).unwrap_err(),
            GraphError::MissingInverse {
                element: 1,
                inverse: 7
            }
        );
    }

    #[test]
    fn cayley_graph_on_a_generating_pair_is_a_cycle() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let ring = cayley_on(&z8, &[1, 7]);
        assert_eq!(ring.vertex_count(), 8);
        assert_eq!(ring.edge_count(), 8);
        assert_eq!(ring.kind(), GraphKind::Cayley);
        for v in 0..8 {
            assert_eq!(ring.degree(v), 2);
        }
        assert!(ring.is_connected().unwrap());
    }

    #[test]
    fn cayley_graph_on_a_proper_subgroup_generator_splits_into_two_squares() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let squares = cayley_on(&z8, &[2, 6]);
        assert_eq!(squares.edge_count(), 8);
        assert!(!squares.is_connected().unwrap());
        assert_eq!(
            squares.components(),
            vec![set(&[0, 2, 4, 6]), set(&[1, 3, 5, 7])]
        );
    }

    #[test]
    fn empty_connection_set_gives_an_edgeless_graph() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let edgeless = cayley_on(&z8, &[]);
        assert_eq!(edgeless.edge_count(), 0);
        assert_eq!(edgeless.components().len(), 8);
    }

    #[test]
    fn pseudo_cayley_matches_the_dihedral_matching_example() {
        // D4 on the six elements missing {1, e}, connected by {e}: three
        // disjoint edges pairing each rotation with its reflection.
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let r = d4
            .set_from_labels(["P", "P2", "P3", "Pe", "P2e", "P3e"])
            .unwrap();
        let s = ConnectionSet::new(&d4, d4.set_from_labels(["e"]).unwrap()).unwrap();
        let graph = Graph::pseudo_cayley(&d4, r, &s, false).unwrap();
        assert_eq!(graph.kind(), GraphKind::PseudoCayley);
        assert_eq!(graph.edges(), &[(1, 5), (2, 6), (3, 7)]);
        assert!(!graph.is_connected().unwrap());

        // The strict reading requires S inside R, which this configuration
        // violates.
        assert_eq!(
            Graph::pseudo_cayley(&d4, r, &s, true).unwrap_err(),
            GraphError::ConnectionNotInVertices {
                missing: d4.set_from_labels(["e"]).unwrap()
            }
        );
    }

    #[test]
    fn pseudo_cayley_closure_violations_carry_witnesses() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let s = ConnectionSet::new(&z8, set(&[1, 7])).unwrap();
        // First violation found: pre-multiplying vertex 0 by connection 7.
        assert_eq!(
            Graph::pseudo_cayley(&z8, set(&[0, 1]), &s, false).unwrap_err(),
            GraphError::NotClosed {
                left: 7,
                right: 0,
                product: 7
            }
        );
        assert_eq!(
            Graph::pseudo_cayley(&z8, ElementSet::EMPTY, &s, false).unwrap_err(),
            GraphError::EmptyVertexSet
        );
    }

    #[test]
    fn pseudo_cayley_on_the_whole_group_reduces_to_the_cayley_graph() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let s = ConnectionSet::new(&z8, set(&[1, 7])).unwrap();
        let pseudo = Graph::pseudo_cayley(&z8, z8.all(), &s, true).unwrap();
        let cayley = Graph::cayley(&z8, &s).unwrap();
        assert_eq!(pseudo, cayley);
        assert_eq!(pseudo.kind(), GraphKind::Cayley);
    }

    #[test]
    fn union_and_intersection_follow_connection_set_algebra() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let a = cayley_on(&z8, &[1, 7]);
        let b = cayley_on(&z8, &[2, 6]);
        assert_eq!(a.union(&b).unwrap(), cayley_on(&z8, &[1, 2, 6, 7]));
        assert_eq!(a.intersection(&b).unwrap(), cayley_on(&z8, &[]));
        assert_eq!(a.union(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
    }

    #[test]
    fn intersection_requires_a_shared_vertex() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let none = ConnectionSet::new(&z8, ElementSet::EMPTY).unwrap();
        let left = Graph::pseudo_cayley(&z8, set(&[0, 4]), &none, false).unwrap();
        let right = Graph::pseudo_cayley(&z8, set(&[1, 5]), &none, false).unwrap();
        assert_eq!(
            left.intersection(&right).unwrap_err(),
            GraphError::DisjointVertexSets
        );
        assert!(left.intersection_unchecked(&right).is_empty());
    }

    #[test]
    fn graphs_over_different_groups_do_not_mix() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let a = cayley_on(&z8, &[1, 7]);
        let b = cayley_on(&d4, &[]);
        assert_eq!(a.union(&b).unwrap_err(), GraphError::GroupMismatch);
        assert!(!a.is_subgraph_of(&b));
        let s = ConnectionSet::new(&z8, set(&[1, 7])).unwrap();
        assert_eq!(
            Graph::cayley(&d4, &s).unwrap_err(),
            GraphError::GroupMismatch
        );
    }

    #[test]
    fn subgraph_order_matches_connection_set_containment() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let small = cayley_on(&z8, &[2, 6]);
        let large = cayley_on(&z8, &[1, 2, 6, 7]);
        assert!(small.is_subgraph_of(&large));
        assert!(!large.is_subgraph_of(&small));
        assert!(!cayley_on(&z8, &[1, 7]).is_subgraph_of(&small));
        assert!(large.is_subgraph_of(&large));
    }

    #[test]
    fn connectivity_matches_generation() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert!(generates(&z8, set(&[1, 7])));
        assert!(!generates(&z8, set(&[2, 6])));
        assert!(generates(&z8, set(&[1, 2, 3, 5, 6, 7])));
        for members in [set(&[1, 7]), set(&[2, 6]), set(&[4]), set(&[1, 2, 6, 7])] {
            let graph = cayley_on(&z8, &members.members());
            assert_eq!(graph.is_connected().unwrap(), generates(&z8, members));
        }
    }

    #[test]
    fn single_vertex_graph_is_connected_and_empty_graph_is_an_error() {
        let z1 = FiniteGroup::cyclic(1).unwrap();
        let point = cayley_on(&z1, &[]);
        assert!(point.is_connected().unwrap());
        assert_eq!(point.edge_connectivity().unwrap(), 0);

        let z8 = FiniteGroup::cyclic(8).unwrap();
        let empty = Graph::empty(&z8);
        assert_eq!(empty.is_connected().unwrap_err(), GraphError::EmptyGraph);
        assert_eq!(
            empty.edge_connectivity().unwrap_err(),
            GraphError::EmptyGraph
        );
        assert!(!empty.is_optimal_connected());
        assert!(empty.components().is_empty());
    }

    #[test]
    fn minimal_cayley_sets_match_examples() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let valid = |members: &[usize]| ConnectionSet::new(&z8, set(members)).unwrap();
        assert!(is_minimal_cayley_set(&z8, &valid(&[1, 7])));
        assert!(!is_minimal_cayley_set(&z8, &valid(&[1, 2, 6, 7])));
        assert!(!is_minimal_cayley_set(&z8, &valid(&[2, 6])));
    }

    #[test]
    fn minimal_cayley_sets_for_a_proper_target_subgroup() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert!(is_minimal_cayley_set_for(&z8, set(&[2, 6]), set(&[0, 2, 4, 6])));
        assert!(!is_minimal_cayley_set_for(&z8, set(&[2, 6]), z8.all()));
        // {2, 4, 6} generates the same subgroup but is not minimal: dropping
        // {4} leaves {2, 6} which still generates it.
        assert!(!is_minimal_cayley_set_for(
            &z8,
            set(&[2, 4, 6]),
            set(&[0, 2, 4, 6])
        ));
    }

    #[test]
    fn edge_connectivity_matches_known_values_and_the_deletion_oracle() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let ring = cayley_on(&z8, &[1, 7]);
        assert_eq!(ring.edge_connectivity().unwrap(), 2);
        assert_eq!(ring.edge_connectivity_by_deletion().unwrap(), 2);

        let z4 = FiniteGroup::cyclic(4).unwrap();
        let complete = cayley_on(&z4, &[1, 2, 3]);
        assert_eq!(complete.edge_connectivity().unwrap(), 3);
        assert_eq!(complete.edge_connectivity_by_deletion().unwrap(), 3);

        let z2 = FiniteGroup::cyclic(2).unwrap();
        let bridge = cayley_on(&z2, &[1]);
        assert_eq!(bridge.edge_connectivity().unwrap(), 1);
        assert_eq!(bridge.edge_connectivity_by_deletion().unwrap(), 1);

        let d3 = FiniteGroup::dihedral(3).unwrap();
        let hexagon = cayley_on(&d3, &[3, 4]);
        assert!(hexagon.is_connected().unwrap());
        assert_eq!(hexagon.edge_connectivity().unwrap(), 2);
        assert_eq!(hexagon.edge_connectivity_by_deletion().unwrap(), 2);

        let squares = cayley_on(&z8, &[2, 6]);
        assert_eq!(
            squares.edge_connectivity().unwrap_err(),
            GraphError::Disconnected
        );
    }

    #[test]
    fn minimal_cayley_set_graphs_reach_their_degree_in_edge_connectivity() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let members = d4.set_from_labels(["P", "P3", "e"]).unwrap();
        let connection = ConnectionSet::new(&d4, members).unwrap();
        assert!(is_minimal_cayley_set(&d4, &connection));
        let graph = Graph::cayley(&d4, &connection).unwrap();
        assert_eq!(graph.min_degree(), Some(3));
        assert_eq!(graph.edge_connectivity().unwrap(), 3);
        assert_eq!(graph.edge_connectivity_by_deletion().unwrap(), 3);
        assert!(graph.is_optimal_connected());
    }

    #[test]
    fn optimal_connectivity_is_lambda_equals_min_degree() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let ring = cayley_on(&z8, &[1, 7]);
        assert!(ring.is_optimal_connected());

        let dense = cayley_on(&z8, &[1, 2, 6, 7]);
        let lambda = dense.edge_connectivity().unwrap();
        assert_eq!(lambda, 4);
        assert_eq!(dense.edge_connectivity_by_deletion().unwrap(), 4);
        assert_eq!(dense.is_optimal_connected(), lambda == 4);

        let squares = cayley_on(&z8, &[2, 6]);
        assert!(!squares.is_optimal_connected());

        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert!(cayley_on(&z2, &[1]).is_optimal_connected());
    }

    #[test]
    fn edge_minimal_connectivity_detects_trees_only() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert!(cayley_on(&z2, &[1]).is_edge_minimal_connected());

        let z1 = FiniteGroup::cyclic(1).unwrap();
        assert!(cayley_on(&z1, &[]).is_edge_minimal_connected());

        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert!(!cayley_on(&z8, &[1, 7]).is_edge_minimal_connected());
        assert!(!cayley_on(&z8, &[2, 6]).is_edge_minimal_connected());
    }

    #[test]
    fn inverse_pair_orbits_match_hand_computation() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(
            inverse_pair_orbits(&z8),
            vec![set(&[1, 7]), set(&[2, 6]), set(&[3, 5]), set(&[4])]
        );
        assert_eq!(all_connection_sets(&z8).len(), 16);

        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(inverse_pair_orbits(&d4).len(), 6);
        assert_eq!(all_connection_sets(&d4).len(), 64);

        // Restricting to a subgroup keeps only orbits inside it.
        assert_eq!(
            inverse_pair_orbits_within(&z8, set(&[0, 2, 4, 6])),
            vec![set(&[2, 6]), set(&[4])]
        );
        assert_eq!(
            symmetric_subsets_within(&z8, set(&[0, 2, 4, 6])).len(),
            4
        );
    }

    #[test]
    fn closed_vertex_sets_are_unions_of_double_cosets() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let s = d4.set_from_labels(["e"]).unwrap();
        let sets = closed_vertex_sets(&d4, s);
        assert_eq!(sets.len(), 7);
        let example_r = d4
            .set_from_labels(["P", "P2", "P3", "Pe", "P2e", "P3e"])
            .unwrap();
        assert!(sets.contains(&example_r));
        // Every returned set really is closed on both sides.
        for &r in &sets {
            assert!(d4.product_set(s, r).is_subset_of(r));
            assert!(d4.product_set(r, s).is_subset_of(r));
        }

        // The empty connection set leaves every nonempty subset closed.
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(closed_vertex_sets(&z2, ElementSet::EMPTY).len(), 3);
    }
}
