//! Minimum vertex cut solvers for every query variant.
//!
//! Directed queries run along one of two paths: [`Path::Reduction`] builds the
//! two-clique undirected graph `G'` and answers the matching undirected query
//! there, subtracting `w(V)` at the end; [`Path::Direct`] runs s-t vertex cuts
//! on the digraph itself. Both paths return identical values.
//!
//! Sweeps over many pairs run on the rayon pool. The winner is the pair with
//! the smallest value and, among ties, the smallest position in the sweep's
//! fixed order, so results do not depend on scheduling.

use rayon::prelude::*;

use crate::cut::{weight_of, CutValue, VertexCut};
use crate::error::{Error, Result};
use crate::flow::{st_vertex_cut, STCutResult};
use crate::graph::{DirectedGraph, Graph, UndirectedGraph, VertexId, Weight};
use crate::reduction::{
    build_reduction, extract_directed_cut, normalize_cut, NormalizedCut, ReducedGraph,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Path {
    Reduction,
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Variant {
    Global,
    Pair(VertexId, VertexId),
    Source(VertexId),
    Sink(VertexId),
    Steiner(Vec<VertexId>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariantQuery {
    pub variant: Variant,
    pub path: Path,
}

/// Answer to a cut query.
///
/// When `value` is finite, `cut` is a valid cut of the queried graph whose
/// separator weighs exactly `value`. Reduction-path answers also carry the
/// normalized cut of `G'` that `cut` was extracted from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub value: CutValue,
    pub cut: Option<VertexCut>,
    pub certificate: Option<NormalizedCut>,
    /// Max-flow computations performed.
    pub flow_calls: usize,
}

impl Solution {
    fn no_cut(flow_calls: usize) -> Self {
        Self {
            value: CutValue::NoCut,
            cut: None,
            certificate: None,
            flow_calls,
        }
    }

    fn from_st(n: usize, r: STCutResult, flow_calls: usize) -> Self {
        Self {
            cut: r.to_cut(n),
            value: r.value,
            certificate: None,
            flow_calls,
        }
    }
}

/// Cut values for all ordered pairs, row-major by source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMatrix {
    n: usize,
    values: Vec<CutValue>,
    flow_calls: usize,
}

impl PairMatrix {
    pub(crate) fn from_values(n: usize, values: Vec<CutValue>) -> Self {
        assert_eq!(values.len(), n * n);
        Self {
            n,
            values,
            flow_calls: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: VertexId, t: VertexId) -> CutValue {
        self.values[s * self.n + t]
    }

    pub fn row(&self, s: VertexId) -> &[CutValue] {
        &self.values[s * self.n..(s + 1) * self.n]
    }

    pub fn flow_calls(&self) -> usize {
        self.flow_calls
    }

    /// Smallest entry, `NoCut` if there is none.
    pub fn min(&self) -> CutValue {
        self.values.iter().copied().min().unwrap_or(CutValue::NoCut)
    }
}

fn check_vertex(n: usize, v: VertexId) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

fn terminal_set(n: usize, terminals: &[VertexId]) -> Result<Vec<VertexId>> {
    for &v in terminals {
        check_vertex(n, v)?;
    }
    let mut ts = terminals.to_vec();
    ts.sort_unstable();
    ts.dedup();
    if ts.len() < 2 {
        return Err(Error::TerminalSetTooSmall);
    }
    Ok(ts)
}

/// Runs `st_vertex_cut` on every pair and keeps the first minimum.
/// Pairs must be distinct and non-adjacent.
fn best_of_pairs<G: Graph + ?Sized>(g: &G, pairs: &[(VertexId, VertexId)]) -> Result<Solution> {
    let best = pairs
        .par_iter()
        .enumerate()
        .map(|(i, &(s, t))| st_vertex_cut(g, s, t).map(|r| (i, r)))
        .try_reduce_with(|a, b| {
            Ok(if (b.1.value, b.0) < (a.1.value, a.0) {
                b
            } else {
                a
            })
        })
        .transpose()?;
    Ok(match best {
        Some((_, r)) => Solution::from_st(g.vertex_count(), r, pairs.len()),
        None => Solution::no_cut(0),
    })
}

/// Vertex minimizing the weight of its neighborhood, smallest id on ties.
fn pivot_by<F: Fn(VertexId) -> Weight>(n: usize, degree: F) -> VertexId {
    (0..n)
        .min_by_key(|&v| (degree(v), v))
        .expect("graph has vertices")
}

// ---------------------------------------------------------------------------
// Undirected
// ---------------------------------------------------------------------------

/// Minimum vertex cut of a non-complete undirected graph.
///
/// Takes the pivot `p` of minimum weighted degree. If a minimum separator
/// misses `p`, some pair `(p, t)` with `t` non-adjacent is split by it.
/// Otherwise `p` has neighbors on both sides of the cut, so some
/// non-adjacent pair inside `N(p)` is split by it.
pub fn undirected_global(g: &UndirectedGraph) -> Result<Solution> {
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let p = pivot_by(g.n(), |v| weight_of(g, g.neighbors(v)));
    let mut pairs: Vec<(VertexId, VertexId)> = (0..g.n())
        .filter(|&t| t != p && !g.has_edge(p, t))
        .map(|t| (p, t))
        .collect();
    let nbrs = g.neighbors(p);
    for (i, &u) in nbrs.iter().enumerate() {
        for &v in &nbrs[i + 1..] {
            if !g.has_edge(u, v) {
                pairs.push((u, v));
            }
        }
    }
    best_of_pairs(g, &pairs)
}

/// Minimum `s`-`t` vertex cut; `NoCut` when `s` and `t` are adjacent.
pub fn undirected_pair(g: &UndirectedGraph, s: VertexId, t: VertexId) -> Result<Solution> {
    let calls = usize::from(s != t && s < g.n() && t < g.n() && !g.has_edge(s, t));
    let r = st_vertex_cut(g, s, t)?;
    Ok(Solution::from_st(g.n(), r, calls))
}

/// Lightest cut with `v` on the left; `NoCut` when `v` dominates the graph.
pub fn undirected_source(g: &UndirectedGraph, v: VertexId) -> Result<Solution> {
    check_vertex(g.n(), v)?;
    let pairs: Vec<_> = (0..g.n())
        .filter(|&t| t != v && !g.has_edge(v, t))
        .map(|t| (v, t))
        .collect();
    best_of_pairs(g, &pairs)
}

/// Lightest cut separating two terminals; `NoCut` when the terminals form a
/// clique.
pub fn undirected_steiner(g: &UndirectedGraph, terminals: &[VertexId]) -> Result<Solution> {
    let ts = terminal_set(g.n(), terminals)?;
    let mut pairs = Vec::new();
    for (i, &s) in ts.iter().enumerate() {
        for &t in &ts[i + 1..] {
            if !g.has_edge(s, t) {
                pairs.push((s, t));
            }
        }
    }
    best_of_pairs(g, &pairs)
}

// ---------------------------------------------------------------------------
// Directed through the reduction
// ---------------------------------------------------------------------------

/// Maps an answer on `G'` back to `G`.
fn pull_back(r: &ReducedGraph, sol: Solution) -> Result<Solution> {
    let value = sol.value.shifted_down(r.total_weight());
    let Some(cut) = sol.cut else {
        return Ok(Solution::no_cut(sol.flow_calls));
    };
    let certificate = normalize_cut(r, cut)?;
    let cut = extract_directed_cut(r, &certificate);
    // out-copy weights coincide with the original weights
    debug_assert_eq!(CutValue::Finite(weight_of(r.graph(), cut.separator())), value);
    Ok(Solution {
        value,
        cut: Some(cut),
        certificate: Some(certificate),
        flow_calls: sol.flow_calls,
    })
}

pub fn reduced_global(r: &ReducedGraph) -> Result<Solution> {
    pull_back(r, undirected_global(r.graph())?)
}

pub fn reduced_pair(r: &ReducedGraph, s: VertexId, t: VertexId) -> Result<Solution> {
    let n = r.original_n();
    check_vertex(n, s)?;
    check_vertex(n, t)?;
    if s == t {
        return Err(Error::SamePair(s));
    }
    pull_back(r, undirected_pair(r.graph(), r.out_copy(s), r.in_copy(t))?)
}

pub fn reduced_source(r: &ReducedGraph, s: VertexId) -> Result<Solution> {
    check_vertex(r.original_n(), s)?;
    pull_back(r, undirected_source(r.graph(), r.out_copy(s))?)
}

pub fn reduced_sink(r: &ReducedGraph, t: VertexId) -> Result<Solution> {
    check_vertex(r.original_n(), t)?;
    pull_back(r, undirected_source(r.graph(), r.in_copy(t))?)
}

/// Steiner query on `G'` with the terminal set `T_out ∪ T_in` of size `2|T|`.
pub fn reduced_steiner(r: &ReducedGraph, terminals: &[VertexId]) -> Result<Solution> {
    let ts = terminal_set(r.original_n(), terminals)?;
    let lifted = r.lift_terminals(&ts);
    debug_assert_eq!(lifted.len(), 2 * ts.len());
    pull_back(r, undirected_steiner(r.graph(), &lifted)?)
}

pub fn reduced_all_pairs(r: &ReducedGraph) -> Result<PairMatrix> {
    all_pairs_with(r.original_n(), |s, t| reduced_pair(r, s, t))
}

// ---------------------------------------------------------------------------
// Directed entry points
// ---------------------------------------------------------------------------

fn ordered_pair_candidates(g: &DirectedGraph, p: VertexId) -> Vec<(VertexId, VertexId)> {
    let n = g.n();
    let mut pairs: Vec<_> = (0..n)
        .filter(|&t| t != p && !g.has_arc(p, t))
        .map(|t| (p, t))
        .collect();
    pairs.extend((0..n).filter(|&s| s != p && !g.has_arc(s, p)).map(|s| (s, p)));
    for &u in g.in_neighbors(p) {
        for &v in g.out_neighbors(p) {
            if u != v && !g.has_arc(u, v) {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// Minimum directed vertex cut: the lightest `S` whose removal leaves a graph
/// that is not strongly connected.
///
/// The direct path uses a pivot `p` of minimum weighted degree: a minimum
/// cut either has `p` on a side, caught by a pair `(p, t)` or `(s, p)`, or
/// has `p` in the separator with an in-neighbor on the left and an
/// out-neighbor on the right.
pub fn directed_global(g: &DirectedGraph, path: Path) -> Result<Solution> {
    g.require_non_complete()?;
    match path {
        Path::Reduction => reduced_global(&build_reduction(g)),
        Path::Direct => {
            let p = pivot_by(g.n(), |v| {
                weight_of(g, g.in_neighbors(v)) + weight_of(g, g.out_neighbors(v))
            });
            best_of_pairs(g, &ordered_pair_candidates(g, p))
        }
    }
}

/// Minimum `s`-`t` vertex cut; `NoCut` iff `(s, t)` is an arc.
pub fn directed_pair(g: &DirectedGraph, s: VertexId, t: VertexId, path: Path) -> Result<Solution> {
    match path {
        Path::Reduction => {
            check_vertex(g.n(), s)?;
            check_vertex(g.n(), t)?;
            if s == t {
                return Err(Error::SamePair(s));
            }
            reduced_pair(&build_reduction(g), s, t)
        }
        Path::Direct => {
            let calls = usize::from(s != t && s < g.n() && t < g.n() && !g.has_arc(s, t));
            let r = st_vertex_cut(g, s, t)?;
            Ok(Solution::from_st(g.n(), r, calls))
        }
    }
}

/// `κ(s, *)`: lightest cut with `s ∈ L`.
pub fn directed_source(g: &DirectedGraph, s: VertexId, path: Path) -> Result<Solution> {
    check_vertex(g.n(), s)?;
    match path {
        Path::Reduction => reduced_source(&build_reduction(g), s),
        Path::Direct => {
            let pairs: Vec<_> = (0..g.n())
                .filter(|&t| t != s && !g.has_arc(s, t))
                .map(|t| (s, t))
                .collect();
            best_of_pairs(g, &pairs)
        }
    }
}

/// `κ(*, t)`: lightest cut with `t ∈ R`.
pub fn directed_sink(g: &DirectedGraph, t: VertexId, path: Path) -> Result<Solution> {
    check_vertex(g.n(), t)?;
    match path {
        Path::Reduction => reduced_sink(&build_reduction(g), t),
        Path::Direct => {
            let pairs: Vec<_> = (0..g.n())
                .filter(|&s| s != t && !g.has_arc(s, t))
                .map(|s| (s, t))
                .collect();
            best_of_pairs(g, &pairs)
        }
    }
}

/// Lightest cut with a terminal on each side, i.e. the minimum of `κ(s, t)`
/// over ordered terminal pairs.
pub fn directed_steiner(g: &DirectedGraph, terminals: &[VertexId], path: Path) -> Result<Solution> {
    let ts = terminal_set(g.n(), terminals)?;
    match path {
        Path::Reduction => reduced_steiner(&build_reduction(g), &ts),
        Path::Direct => {
            let pairs: Vec<_> = ts
                .iter()
                .flat_map(|&s| ts.iter().map(move |&t| (s, t)))
                .filter(|&(s, t)| s != t && !g.has_arc(s, t))
                .collect();
            best_of_pairs(g, &pairs)
        }
    }
}

fn all_pairs_with<F>(n: usize, query: F) -> Result<PairMatrix>
where
    F: Fn(VertexId, VertexId) -> Result<Solution> + Sync,
{
    let cells: Vec<(CutValue, usize)> = (0..n * n)
        .into_par_iter()
        .map(|i| {
            let (s, t) = (i / n, i % n);
            if s == t {
                Ok((CutValue::NoCut, 0))
            } else {
                query(s, t).map(|sol| (sol.value, sol.flow_calls))
            }
        })
        .collect::<Result<_>>()?;
    let flow_calls = cells.iter().map(|c| c.1).sum();
    let mut m = PairMatrix::from_values(n, cells.into_iter().map(|c| c.0).collect());
    m.flow_calls = flow_calls;
    Ok(m)
}

/// `κ(s, t)` for every ordered pair, from `n(n-1)` independent pair queries.
/// The diagonal and arcs are `NoCut`.
pub fn directed_all_pairs(g: &DirectedGraph, path: Path) -> Result<PairMatrix> {
    match path {
        Path::Reduction => reduced_all_pairs(&build_reduction(g)),
        Path::Direct => all_pairs_with(g.n(), |s, t| directed_pair(g, s, t, Path::Direct)),
    }
}

/// Dispatches a single-answer query.
pub fn solve(g: &DirectedGraph, query: &VariantQuery) -> Result<Solution> {
    let path = query.path;
    match &query.variant {
        Variant::Global => directed_global(g, path),
        &Variant::Pair(s, t) => directed_pair(g, s, t, path),
        &Variant::Source(s) => directed_source(g, s, path),
        &Variant::Sink(t) => directed_sink(g, t, path),
        Variant::Steiner(ts) => directed_steiner(g, ts, path),
    }
}
