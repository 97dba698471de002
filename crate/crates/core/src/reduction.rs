//! The two-clique gadget turning a weighted digraph `G` into a weighted
//! undirected graph `G'` whose vertex cuts correspond to directed cuts of `G`.
//!
//! `G'` has an out-copy and an in-copy of every vertex. Each copy is a
//! clique, every vertex is matched to its twin, and each arc `(u, v)` becomes
//! the edge `{u_out, v_in}`. Every separator of `G'` is heavier than its
//! directed counterpart by exactly `w(V)`.
//!
//! Layout: `v_out = v` and `v_in = v + n`.

use crate::cut::{validate_cut, weight_of, VertexCut};
use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, Graph, UndirectedGraph, VertexId, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    Out,
    In,
}

/// The undirected graph `G'` together with its copy maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    graph: UndirectedGraph,
    n: usize,
    total_weight: Weight,
}

impl ReducedGraph {
    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    /// Vertex count of the original digraph.
    pub fn original_n(&self) -> usize {
        self.n
    }

    /// `w(V)` of the original digraph, the shift between cut values.
    pub fn total_weight(&self) -> Weight {
        self.total_weight
    }

    pub fn out_copy(&self, v: VertexId) -> VertexId {
        debug_assert!(v < self.n);
        v
    }

    pub fn in_copy(&self, v: VertexId) -> VertexId {
        debug_assert!(v < self.n);
        v + self.n
    }

    /// Original vertex and copy of a vertex of `G'`.
    pub fn original(&self, x: VertexId) -> (VertexId, Layer) {
        if x < self.n {
            (x, Layer::Out)
        } else {
            (x - self.n, Layer::In)
        }
    }

    /// `T_out ∪ T_in`, out-copies first.
    pub fn lift_terminals(&self, terminals: &[VertexId]) -> Vec<VertexId> {
        terminals
            .iter()
            .map(|&v| self.out_copy(v))
            .chain(terminals.iter().map(|&v| self.in_copy(v)))
            .collect()
    }
}

/// Materializes `G'`.
///
/// Edges are laid out as the out-clique, the in-clique, the matching and then
/// the arc edges, each block in lexicographic order.
pub fn build_reduction(g: &DirectedGraph) -> ReducedGraph {
    let n = g.n();
    let m_prime = n * n.saturating_sub(1) + n + g.m();
    let mut edges = Vec::with_capacity(m_prime);
    for offset in [0, n] {
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u + offset, v + offset));
            }
        }
    }
    edges.extend((0..n).map(|v| (v, v + n)));
    let mut arcs = g.arcs().to_vec();
    arcs.sort_unstable();
    edges.extend(arcs.into_iter().map(|(u, v)| (u, v + n)));

    let weights: Vec<Weight> = g.weights().iter().chain(g.weights()).copied().collect();
    ReducedGraph {
        graph: UndirectedGraph::assemble(weights, edges),
        n,
        total_weight: g.total_weight(),
    }
}

/// A cut of `G'` oriented so that `L' ⊆ V_out` and `R' ⊆ V_in`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizedCut(VertexCut);

impl NormalizedCut {
    pub fn cut(&self) -> &VertexCut {
        &self.0
    }

    pub fn into_cut(self) -> VertexCut {
        self.0
    }
}

/// Validates an undirected cut of `G'` and orients it out-copy to in-copy.
pub fn normalize_cut(r: &ReducedGraph, cut: VertexCut) -> Result<NormalizedCut> {
    validate_cut(&r.graph, &cut).map_err(|e| Error::InvalidCut(Box::new(e)))?;
    let n = r.n;
    let in_out = |s: &[VertexId]| s.iter().all(|&x| x < n);
    let in_in = |s: &[VertexId]| s.iter().all(|&x| x >= n);
    if in_out(cut.left()) && in_in(cut.right()) {
        Ok(NormalizedCut(cut))
    } else if in_in(cut.left()) && in_out(cut.right()) {
        Ok(NormalizedCut(cut.swapped()))
    } else {
        // Both copies are cliques, so a valid cut cannot straddle them.
        unreachable!("valid cut of the reduced graph with a side in both copies")
    }
}

/// Reads a directed cut of `G` off a normalized cut of `G'`:
/// `L = {v : v_out ∈ L'}`, `R = {v : v_in ∈ R'}`, `S = V \ (L ∪ R)`.
///
/// `w(S) = w'(S') - w(V)` holds for every normalized cut, minimum or not.
pub fn extract_directed_cut(r: &ReducedGraph, cut: &NormalizedCut) -> VertexCut {
    let left = cut.0.left().to_vec();
    let right = cut.0.right().iter().map(|&x| x - r.n).collect();
    VertexCut::from_sides(r.n, left, right)
}

/// Maps a directed cut `(L, S, R)` of `G` to `(L_out, V' \ (L_out ∪ R_in), R_in)`.
///
/// The lifted separator weighs `w(S) + w(V)`. Fails with `InvalidCut` when the
/// input is not a valid directed cut.
pub fn lift_directed_cut(r: &ReducedGraph, cut: &VertexCut) -> Result<NormalizedCut> {
    let n = r.n;
    if let Some(&v) = cut.left().iter().chain(cut.right()).find(|&&v| v >= n) {
        return Err(Error::InvalidCut(Box::new(Error::VertexOutOfRange { vertex: v, n })));
    }
    let left = cut.left().to_vec();
    let right = cut.right().iter().map(|&v| v + n).collect();
    let lifted = VertexCut::from_sides(2 * n, left, right);
    // The matching catches L ∩ R, the arc edges catch crossing arcs.
    validate_cut(&r.graph, &lifted).map_err(|e| Error::InvalidCut(Box::new(e)))?;
    Ok(NormalizedCut(lifted))
}

/// `w'(N_{G'}(R_in))` for a nonempty subset of the in-copy.
pub fn reduced_neighborhood_weight(r: &ReducedGraph, r_in: &[VertexId]) -> Result<Weight> {
    if r_in.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&x) = r_in.iter().find(|&&x| x < r.n || x >= 2 * r.n) {
        return Err(Error::NotInCopy(x));
    }
    Ok(weight_of(&r.graph, &r.graph.neighborhood(r_in)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn cycle3() -> DirectedGraph {
        DirectedGraph::unweighted(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn edge_set(g: &UndirectedGraph) -> BTreeSet<(usize, usize)> {
        g.edges().iter().copied().collect()
    }

    #[test]
    fn cycle_sizes() {
        let r = build_reduction(&cycle3());
        assert_eq!(r.graph().n(), 6);
        assert_eq!(r.graph().m(), 2 * 3 + 3 + 3);
        assert_eq!(r.total_weight(), 3);
        // every pair of the 6 vertices except {u_out, v_in} with (u, v) not an arc
        let expected: BTreeSet<_> = (0..6)
            .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                if b < 3 || a >= 3 {
                    return true;
                }
                let (u, v) = (a, b - 3);
                u == v || [(0, 1), (1, 2), (2, 0)].contains(&(u, v))
            })
            .collect();
        assert_eq!(edge_set(r.graph()), expected);
    }

    #[test]
    fn single_arc_enumeration() {
        let g = DirectedGraph::unweighted(2, vec![(0, 1)]).unwrap();
        let r = build_reduction(&g);
        // 0_out=0, 1_out=1, 0_in=2, 1_in=3
        assert_eq!(r.graph().edges(), &[(0, 1), (2, 3), (0, 2), (1, 3), (0, 3)]);
    }

    #[test]
    fn single_vertex() {
        let g = DirectedGraph::unweighted(1, vec![]).unwrap();
        let r = build_reduction(&g);
        assert_eq!(r.graph().n(), 2);
        assert_eq!(r.graph().edges(), &[(0, 1)]);
    }

    #[test]
    fn normalization_swaps_in_to_out() {
        let r = build_reduction(&DirectedGraph::unweighted(2, vec![(0, 1)]).unwrap());
        let cut = VertexCut::new(vec![1], vec![0, 3], vec![2]);
        let nc = normalize_cut(&r, cut.clone()).unwrap();
        assert_eq!(nc.cut(), &cut);
        let nc2 = normalize_cut(&r, cut.clone().swapped()).unwrap();
        assert_eq!(nc2.cut(), &cut);
    }

    #[test]
    fn straddling_cut_is_invalid() {
        let r = build_reduction(&cycle3());
        // left holds 0_out and 1_in: clique edges leave it in every direction
        let cut = VertexCut::new(vec![0, 4], vec![1, 2, 3], vec![5]);
        let err = normalize_cut(&r, cut).unwrap_err();
        assert!(matches!(err, Error::InvalidCut(inner) if matches!(*inner, Error::CrossingEdge(..))));
    }

    #[test]
    fn extraction_examples() {
        let g = DirectedGraph::unweighted(2, vec![(0, 1)]).unwrap();
        let r = build_reduction(&g);
        let nc = normalize_cut(&r, VertexCut::new(vec![1], vec![0, 3], vec![2])).unwrap();
        let c = extract_directed_cut(&r, &nc);
        assert_eq!(c, VertexCut::new(vec![1], vec![], vec![0]));
        assert_eq!(weight_of(r.graph(), nc.cut().separator()) - r.total_weight(), 0);

        let g = cycle3();
        let r = build_reduction(&g);
        // R' = {1_in}, S' = N({1_in}) = {0_in, 2_in, 1_out, 0_out}
        let nc = normalize_cut(&r, VertexCut::new(vec![2], vec![0, 1, 3, 5], vec![4])).unwrap();
        assert_eq!(weight_of(r.graph(), nc.cut().separator()), 4);
        let c = extract_directed_cut(&r, &nc);
        assert_eq!(c, VertexCut::new(vec![2], vec![0], vec![1]));
        assert_eq!(validate_cut(&g, &c), Ok(()));
    }

    #[test]
    fn lifting_examples() {
        let g = cycle3();
        let r = build_reduction(&g);
        let c = VertexCut::new(vec![2], vec![0], vec![1]);
        let lifted = lift_directed_cut(&r, &c).unwrap();
        assert_eq!(lifted.cut(), &VertexCut::new(vec![2], vec![0, 1, 3, 5], vec![4]));
        assert_eq!(weight_of(r.graph(), lifted.cut().separator()), 1 + 3);
        assert_eq!(extract_directed_cut(&r, &lifted), c);

        let g = DirectedGraph::unweighted(2, vec![(0, 1)]).unwrap();
        let r = build_reduction(&g);
        let lifted = lift_directed_cut(&r, &VertexCut::new(vec![1], vec![], vec![0])).unwrap();
        assert_eq!(weight_of(r.graph(), lifted.cut().separator()), 2);
        assert!(matches!(
            lift_directed_cut(&r, &VertexCut::new(vec![0], vec![], vec![1])),
            Err(Error::InvalidCut(_))
        ));
    }

    #[test]
    fn neighborhood_weights() {
        let r = build_reduction(&cycle3());
        assert_eq!(reduced_neighborhood_weight(&r, &[4]), Ok(4));
        assert_eq!(reduced_neighborhood_weight(&r, &[3, 4, 5]), Ok(3));
        let w = build_reduction(&DirectedGraph::new(vec![5, 1, 2], vec![(0, 1), (1, 2), (2, 0)]).unwrap());
        assert_eq!(reduced_neighborhood_weight(&w, &[4]), Ok(5 + 8));
        assert_eq!(reduced_neighborhood_weight(&w, &[]), Err(Error::EmptySet));
        assert_eq!(reduced_neighborhood_weight(&w, &[1]), Err(Error::NotInCopy(1)));
    }
}
