//! Vertex-weighted simple graphs and basic connectivity predicates.
//!
//! Both graph kinds are immutable once built. Construction validates the
//! structural invariants (no self-loops, no duplicate links, positive weights,
//! indices in range), so every value of these types is well-formed.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// Vertex weight. Always at least 1 inside a constructed graph.
pub type Weight = u64;

/// Weights are bounded so that sums over twice the vertex set fit comfortably
/// in 63 bits.
const WEIGHT_LIMIT: u128 = 1 << 62;

/// Read access shared by directed and undirected graphs.
///
/// For a digraph a *link* `u -> v` is the arc `(u, v)`; for an undirected
/// graph it is the edge `{u, v}` seen from either endpoint. A vertex cut
/// `(L, S, R)` is valid iff there is no link from `L` to `R`.
pub trait Graph: Sync {
    fn vertex_count(&self) -> usize;
    fn weights(&self) -> &[Weight];
    /// Vertices `v` with a link `u -> v`, ascending.
    fn successors(&self, u: VertexId) -> &[VertexId];
    /// Vertices `v` with a link `v -> u`, ascending.
    fn predecessors(&self, u: VertexId) -> &[VertexId];
    fn is_directed(&self) -> bool;

    fn weight(&self, v: VertexId) -> Weight {
        self.weights()[v]
    }

    fn has_link(&self, u: VertexId, v: VertexId) -> bool {
        self.successors(u).binary_search(&v).is_ok()
    }

    /// Total weight `w(V)`.
    fn total_weight(&self) -> Weight {
        self.weights().iter().sum()
    }

    /// True when every ordered pair of distinct vertices is linked.
    fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|u| self.successors(u).len() == n - 1)
    }
}

fn check_weights(n: usize, weights: &[Weight]) -> Result<()> {
    if weights.len() != n {
        return Err(Error::WeightCount {
            expected: n,
            got: weights.len(),
        });
    }
    if let Some(v) = weights.iter().position(|&w| w == 0) {
        return Err(Error::NonPositiveWeight(v));
    }
    let max = weights.iter().copied().max().unwrap_or(0) as u128;
    if (n as u128) * max >= WEIGHT_LIMIT {
        return Err(Error::WeightOverflow);
    }
    Ok(())
}

fn check_link(n: usize, u: VertexId, v: VertexId) -> Result<()> {
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    Ok(())
}

/// Checks every structural invariant of a digraph given as raw parts.
///
/// With `allow_complete == false` the digraph must also have at least one
/// ordered pair of distinct non-adjacent vertices.
pub fn validate_directed(
    n: usize,
    weights: &[Weight],
    arcs: &[(VertexId, VertexId)],
    allow_complete: bool,
) -> Result<()> {
    check_weights(n, weights)?;
    let mut seen = arcs.to_vec();
    for &(u, v) in arcs {
        check_link(n, u, v)?;
    }
    seen.sort_unstable();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateArc(w[0].0, w[0].1));
    }
    if !allow_complete && seen.len() == n * n.saturating_sub(1) {
        return Err(Error::CompleteGraph);
    }
    Ok(())
}

fn sorted_lists(n: usize, pairs: impl Iterator<Item = (VertexId, VertexId)>) -> Vec<Vec<VertexId>> {
    let mut lists = vec![Vec::new(); n];
    for (u, v) in pairs {
        lists[u].push(v);
    }
    for l in &mut lists {
        l.sort_unstable();
    }
    lists
}

/// Simple vertex-weighted digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    weights: Vec<Weight>,
    arcs: Vec<(VertexId, VertexId)>,
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
}

impl DirectedGraph {
    /// Builds a digraph, rejecting self-loops, duplicate arcs, zero weights and
    /// out-of-range endpoints. Complete digraphs are accepted.
    pub fn new(weights: Vec<Weight>, arcs: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let n = weights.len();
        validate_directed(n, &weights, &arcs, true)?;
        let out_adj = sorted_lists(n, arcs.iter().copied());
        let in_adj = sorted_lists(n, arcs.iter().map(|&(u, v)| (v, u)));
        Ok(Self {
            weights,
            arcs,
            out_adj,
            in_adj,
        })
    }

    pub fn unweighted(n: usize, arcs: Vec<(VertexId, VertexId)>) -> Result<Self> {
        Self::new(vec![1; n], arcs)
    }

    /// Fails with `CompleteGraph` unless some ordered pair is non-adjacent.
    pub fn require_non_complete(&self) -> Result<()> {
        if self.is_complete() {
            Err(Error::CompleteGraph)
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in construction order.
    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.out_adj[u]
    }

    pub fn in_neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.in_adj[u]
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.has_link(u, v)
    }

    /// `N^in(R)`: vertices outside `set` with an arc into `set`.
    pub fn in_neighborhood(&self, set: &[VertexId]) -> Vec<VertexId> {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut hit = vec![false; self.n()];
        for &v in set {
            for &u in &self.in_adj[v] {
                if !inside[u] {
                    hit[u] = true;
                }
            }
        }
        (0..self.n()).filter(|&u| hit[u]).collect()
    }
}

impl Graph for DirectedGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn weights(&self) -> &[Weight] {
        &self.weights
    }
    fn successors(&self, u: VertexId) -> &[VertexId] {
        &self.out_adj[u]
    }
    fn predecessors(&self, u: VertexId) -> &[VertexId] {
        &self.in_adj[u]
    }
    fn is_directed(&self) -> bool {
        true
    }
}

/// Simple vertex-weighted undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    weights: Vec<Weight>,
    /// Edges in construction order, each stored as `(min, max)`.
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl UndirectedGraph {
    pub fn new(weights: Vec<Weight>, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let n = weights.len();
        check_weights(n, &weights)?;
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            check_link(n, u, v)?;
            normalized.push((u.min(v), u.max(v)));
        }
        let mut sorted = normalized.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArc(w[0].0, w[0].1));
        }
        let adj = sorted_lists(n, normalized.iter().flat_map(|&(u, v)| [(u, v), (v, u)]));
        Ok(Self {
            weights,
            edges: normalized,
            adj,
        })
    }

    pub fn unweighted(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        Self::new(vec![1; n], edges)
    }

    /// Skips validation; `edges` must already be simple and in range, each
    /// given as `(min, max)`.
    pub(crate) fn assemble(weights: Vec<Weight>, edges: Vec<(VertexId, VertexId)>) -> Self {
        let adj = sorted_lists(
            weights.len(),
            edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]),
        );
        Self {
            weights,
            edges,
            adj,
        }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.has_link(u, v)
    }

    /// `N(X)`: vertices outside `set` adjacent to some vertex of `set`.
    pub fn neighborhood(&self, set: &[VertexId]) -> Vec<VertexId> {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut hit = vec![false; self.n()];
        for &v in set {
            for &u in &self.adj[v] {
                if !inside[u] {
                    hit[u] = true;
                }
            }
        }
        (0..self.n()).filter(|&u| hit[u]).collect()
    }
}

impl Graph for UndirectedGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }
    fn weights(&self) -> &[Weight] {
        &self.weights
    }
    fn successors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[u]
    }
    fn predecessors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[u]
    }
    fn is_directed(&self) -> bool {
        false
    }
}

/// Breadth-first search over links (or reversed links) avoiding `blocked`.
pub(crate) fn reach<G: Graph + ?Sized>(
    g: &G,
    start: VertexId,
    blocked: &[bool],
    reverse: bool,
) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let next = if reverse {
            g.predecessors(u)
        } else {
            g.successors(u)
        };
        for &v in next {
            if !blocked[v] && !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}

fn mask(n: usize, removed: &[VertexId]) -> Vec<bool> {
    let mut blocked = vec![false; n];
    for &v in removed {
        blocked[v] = true;
    }
    blocked
}

/// True iff the subgraph induced on `V \ removed` has at most one vertex or
/// is strongly connected.
pub fn is_strongly_connected(g: &DirectedGraph, removed: &[VertexId]) -> bool {
    let blocked = mask(g.n(), removed);
    let Some(root) = (0..g.n()).find(|&v| !blocked[v]) else {
        return true;
    };
    let fwd = reach(g, root, &blocked, false);
    let bwd = reach(g, root, &blocked, true);
    (0..g.n()).all(|v| blocked[v] || (fwd[v] && bwd[v]))
}

/// True iff the subgraph induced on `V \ removed` has at most one vertex or
/// is connected.
pub fn is_connected(g: &UndirectedGraph, removed: &[VertexId]) -> bool {
    let blocked = mask(g.n(), removed);
    let Some(root) = (0..g.n()).find(|&v| !blocked[v]) else {
        return true;
    };
    let seen = reach(g, root, &blocked, false);
    (0..g.n()).all(|v| blocked[v] || seen[v])
}
