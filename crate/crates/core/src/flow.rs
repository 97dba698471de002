//! Integer max-flow (Dinic) and minimum s-t vertex cuts via vertex splitting.

use std::collections::VecDeque;

use crate::cut::{CutValue, VertexCut};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, Weight};

pub type Capacity = u64;

#[derive(Debug, Clone)]
struct Arc {
    head: usize,
    residual: Capacity,
}

/// Arc-capacitated network. Arc `i` and arc `i ^ 1` are each other's reverse.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
    inf: Capacity,
}

/// Result of a max-flow run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: Capacity,
    /// Nodes reachable from the source in the final residual network, i.e.
    /// the minimal source side of a minimum cut.
    pub source_side: Vec<bool>,
}

impl FlowNetwork {
    /// `inf` is the capacity callers use for arcs that must never be cut.
    pub fn new(nodes: usize, source: usize, sink: usize, inf: Capacity) -> Self {
        assert!(source < nodes && sink < nodes && source != sink);
        Self {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
            source,
            sink,
            inf,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Forward arcs only.
    pub fn arc_count(&self) -> usize {
        self.arcs.len() / 2
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn inf(&self) -> Capacity {
        self.inf
    }

    /// Adds `tail -> head` with the given capacity plus its zero-capacity reverse.
    pub fn add_arc(&mut self, tail: usize, head: usize, capacity: Capacity) {
        let id = self.arcs.len();
        self.arcs.push(Arc {
            head,
            residual: capacity,
        });
        self.arcs.push(Arc {
            head: tail,
            residual: 0,
        });
        self.adj[tail].push(id);
        self.adj[head].push(id + 1);
    }

    fn levels(&self) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.node_count()];
        level[self.source] = 0;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let arc = &self.arcs[a];
                if arc.residual > 0 && level[arc.head] == usize::MAX {
                    level[arc.head] = level[u] + 1;
                    queue.push_back(arc.head);
                }
            }
        }
        level
    }

    /// Saturates a blocking flow in the level graph. Returns the pushed amount.
    fn blocking_flow(&mut self, level: &mut [usize]) -> Result<Capacity> {
        let mut next = vec![0usize; self.node_count()];
        let mut path: Vec<usize> = Vec::new();
        let mut total: Capacity = 0;
        let mut u = self.source;
        loop {
            if u == self.sink {
                let push = path
                    .iter()
                    .map(|&a| self.arcs[a].residual)
                    .min()
                    .expect("sink differs from source");
                let mut first_saturated = path.len();
                for (i, &a) in path.iter().enumerate() {
                    self.arcs[a].residual -= push;
                    self.arcs[a ^ 1].residual += push;
                    if self.arcs[a].residual == 0 && first_saturated == path.len() {
                        first_saturated = i;
                    }
                }
                total = total.checked_add(push).ok_or(Error::Overflow)?;
                path.truncate(first_saturated);
                u = path
                    .last()
                    .map_or(self.source, |&a| self.arcs[a].head);
                continue;
            }
            let mut advanced = false;
            while next[u] < self.adj[u].len() {
                let a = self.adj[u][next[u]];
                let arc = &self.arcs[a];
                if arc.residual > 0 && level[arc.head] == level[u].wrapping_add(1) {
                    path.push(a);
                    u = arc.head;
                    advanced = true;
                    break;
                }
                next[u] += 1;
            }
            if advanced {
                continue;
            }
            // dead end: drop u from the level graph and retreat
            level[u] = usize::MAX;
            match path.pop() {
                None => return Ok(total),
                Some(a) => {
                    u = self.arcs[a ^ 1].head;
                    next[u] += 1;
                }
            }
        }
    }

    /// Runs Dinic's algorithm to completion. The network keeps the final
    /// residual capacities.
    pub fn max_flow(&mut self) -> Result<MaxFlow> {
        let mut value: Capacity = 0;
        loop {
            let mut level = self.levels();
            if level[self.sink] == usize::MAX {
                let source_side = level.iter().map(|&l| l != usize::MAX).collect();
                return Ok(MaxFlow { value, source_side });
            }
            let pushed = self.blocking_flow(&mut level)?;
            value = value.checked_add(pushed).ok_or(Error::Overflow)?;
        }
    }
}

/// Split-network node of `v`'s entry side.
fn entry(v: VertexId) -> usize {
    2 * v
}

/// Split-network node of `v`'s exit side.
fn exit(v: VertexId) -> usize {
    2 * v + 1
}

fn check_pair<G: Graph + ?Sized>(g: &G, s: VertexId, t: VertexId) -> Result<()> {
    let n = g.vertex_count();
    for x in [s, t] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if s == t {
        return Err(Error::SamePair(s));
    }
    Ok(())
}

/// Vertex-split network for an s-t vertex cut.
///
/// Every vertex `v` becomes `v⁻ -> v⁺` with capacity `w(v)` (capacity INF for
/// `s` and `t`), every link `u -> v` becomes `u⁺ -> v⁻` with capacity INF, and
/// the flow runs from `s⁺` to `t⁻`. INF is `w(V) + 1`, which no vertex
/// separator can reach.
pub fn build_st_vertex_network<G: Graph + ?Sized>(
    g: &G,
    s: VertexId,
    t: VertexId,
) -> Result<FlowNetwork> {
    check_pair(g, s, t)?;
    if g.has_link(s, t) {
        return Err(Error::AdjacentPair(s, t));
    }
    let n = g.vertex_count();
    let inf = g.total_weight() + 1;
    let mut net = FlowNetwork::new(2 * n, exit(s), entry(t), inf);
    for v in 0..n {
        let cap = if v == s || v == t { inf } else { g.weight(v) };
        net.add_arc(entry(v), exit(v), cap);
    }
    for u in 0..n {
        for &v in g.successors(u) {
            net.add_arc(exit(u), entry(v), inf);
        }
    }
    Ok(net)
}

/// Minimum s-t vertex cut with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct STCutResult {
    pub value: CutValue,
    /// Sorted separator; empty when `value` is `NoCut`.
    pub separator: Vec<VertexId>,
    /// Sorted source side (contains `s`); empty when `value` is `NoCut`.
    pub witness_left: Vec<VertexId>,
}

impl STCutResult {
    fn no_cut() -> Self {
        Self {
            value: CutValue::NoCut,
            separator: Vec::new(),
            witness_left: Vec::new(),
        }
    }

    /// The full tri-partition, with `R = V \ (L ∪ S)`.
    pub fn to_cut(&self, n: usize) -> Option<VertexCut> {
        if !self.value.is_finite() {
            return None;
        }
        let mut taken = vec![false; n];
        for &v in self.separator.iter().chain(&self.witness_left) {
            taken[v] = true;
        }
        let right = (0..n).filter(|&v| !taken[v]).collect();
        Some(VertexCut::new(
            self.witness_left.clone(),
            self.separator.clone(),
            right,
        ))
    }
}

/// Minimum-weight vertex set separating `t` from `s` (no path `s -> t`
/// avoiding it). `NoCut` when `s` and `t` are linked.
pub fn st_vertex_cut<G: Graph + ?Sized>(g: &G, s: VertexId, t: VertexId) -> Result<STCutResult> {
    check_pair(g, s, t)?;
    if g.has_link(s, t) {
        return Ok(STCutResult::no_cut());
    }
    let mut net = build_st_vertex_network(g, s, t)?;
    let flow = net.max_flow()?;
    let reached = &flow.source_side;
    let n = g.vertex_count();
    let witness_left: Vec<VertexId> = (0..n).filter(|&v| reached[exit(v)]).collect();
    let separator: Vec<VertexId> = (0..n)
        .filter(|&v| reached[entry(v)] && !reached[exit(v)])
        .collect();
    debug_assert_eq!(
        separator.iter().map(|&v| g.weight(v)).sum::<Weight>(),
        flow.value
    );
    Ok(STCutResult {
        value: CutValue::Finite(flow.value),
        separator,
        witness_left,
    })
}
