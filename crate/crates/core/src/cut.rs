//! Vertex cuts `(L, S, R)` and cut values.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, Weight};

/// Weight of a minimum cut, or `NoCut` when the query admits no cut at all
/// (identical or adjacent endpoints, complete terminal sets).
///
/// Orders every finite value below `NoCut`, so `min` over a family of
/// queries behaves like a minimum over extended reals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutValue {
    Finite(Weight),
    NoCut,
}

impl CutValue {
    pub fn finite(self) -> Option<Weight> {
        match self {
            CutValue::Finite(x) => Some(x),
            CutValue::NoCut => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, CutValue::Finite(_))
    }

    /// Adds `delta` to a finite value; `NoCut` is absorbing.
    pub fn shifted_up(self, delta: Weight) -> CutValue {
        match self {
            CutValue::Finite(x) => CutValue::Finite(x + delta),
            CutValue::NoCut => CutValue::NoCut,
        }
    }

    /// Subtracts `delta` from a finite value; `NoCut` is absorbing.
    ///
    /// Panics if the finite value is smaller than `delta`.
    pub fn shifted_down(self, delta: Weight) -> CutValue {
        match self {
            CutValue::Finite(x) => CutValue::Finite(
                x.checked_sub(delta)
                    .expect("cut value below the weight shift"),
            ),
            CutValue::NoCut => CutValue::NoCut,
        }
    }
}

impl fmt::Display for CutValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutValue::Finite(x) => write!(f, "{x}"),
            CutValue::NoCut => f.write_str("inf"),
        }
    }
}

/// A tri-partition `(L, S, R)`; each part is kept sorted ascending.
///
/// Construction does not check anything against a graph, use
/// [`validate_cut`] for that.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexCut {
    left: Vec<VertexId>,
    separator: Vec<VertexId>,
    right: Vec<VertexId>,
}

impl VertexCut {
    pub fn new(
        mut left: Vec<VertexId>,
        mut separator: Vec<VertexId>,
        mut right: Vec<VertexId>,
    ) -> Self {
        left.sort_unstable();
        separator.sort_unstable();
        right.sort_unstable();
        Self {
            left,
            separator,
            right,
        }
    }

    /// Builds the cut with the given sides and `S = V \ (L ∪ R)`.
    pub fn from_sides(n: usize, left: Vec<VertexId>, right: Vec<VertexId>) -> Self {
        let mut taken = vec![false; n];
        for &v in left.iter().chain(&right) {
            taken[v] = true;
        }
        let separator = (0..n).filter(|&v| !taken[v]).collect();
        Self::new(left, separator, right)
    }

    pub fn left(&self) -> &[VertexId] {
        &self.left
    }

    pub fn separator(&self) -> &[VertexId] {
        &self.separator
    }

    pub fn right(&self) -> &[VertexId] {
        &self.right
    }

    /// The same partition with `L` and `R` exchanged.
    pub fn swapped(self) -> Self {
        Self {
            left: self.right,
            separator: self.separator,
            right: self.left,
        }
    }

    pub fn into_parts(self) -> (Vec<VertexId>, Vec<VertexId>, Vec<VertexId>) {
        (self.left, self.separator, self.right)
    }
}

/// `w(S)`, the summed weight of a vertex set.
pub fn weight_of<G: Graph + ?Sized>(g: &G, set: &[VertexId]) -> Weight {
    set.iter().map(|&v| g.weight(v)).sum()
}

/// Checks that `cut` is a vertex cut of `g`: a tri-partition of `V` with
/// nonempty sides and no link from `L` to `R`. For an undirected graph that
/// means no edge between `L` and `R` at all.
pub fn validate_cut<G: Graph + ?Sized>(g: &G, cut: &VertexCut) -> Result<()> {
    let n = g.vertex_count();
    // 0 = unassigned, 1 = left, 2 = separator, 3 = right
    let mut side = vec![0u8; n];
    for (tag, part) in [(1u8, cut.left()), (2, cut.separator()), (3, cut.right())] {
        for &v in part {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if side[v] != 0 {
                return Err(Error::NotTriPartition);
            }
            side[v] = tag;
        }
    }
    if side.contains(&0) {
        return Err(Error::NotTriPartition);
    }
    if cut.left().is_empty() || cut.right().is_empty() {
        return Err(Error::EmptySide);
    }
    for &u in cut.left() {
        if let Some(&v) = g.successors(u).iter().find(|&&v| side[v] == 3) {
            return Err(Error::CrossingEdge(u, v));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{DirectedGraph, UndirectedGraph};

    #[test]
    fn detects_crossing_arc() {
        let g = DirectedGraph::unweighted(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let cut = VertexCut::new(vec![2], vec![1], vec![0]);
        assert_eq!(validate_cut(&g, &cut), Err(Error::CrossingEdge(2, 0)));
        // the reverse orientation is fine: no arc 0 -> 2
        assert_eq!(validate_cut(&g, &cut.swapped()), Ok(()));
    }

    #[test]
    fn empty_separator_is_legal() {
        let g = DirectedGraph::unweighted(2, vec![(0, 1)]).unwrap();
        assert_eq!(validate_cut(&g, &VertexCut::new(vec![1], vec![], vec![0])), Ok(()));
        assert_eq!(
            validate_cut(&g, &VertexCut::new(vec![0], vec![], vec![1])),
            Err(Error::CrossingEdge(0, 1))
        );
    }

    #[test]
    fn undirected_edges_block_both_ways() {
        let tri = UndirectedGraph::unweighted(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            validate_cut(&tri, &VertexCut::new(vec![0], vec![], vec![1, 2])),
            Err(Error::CrossingEdge(0, _))
        ));
    }

    #[test]
    fn partition_errors() {
        let g = DirectedGraph::unweighted(3, vec![]).unwrap();
        assert_eq!(
            validate_cut(&g, &VertexCut::new(vec![0], vec![0], vec![1, 2])),
            Err(Error::NotTriPartition)
        );
        assert_eq!(
            validate_cut(&g, &VertexCut::new(vec![0], vec![], vec![1])),
            Err(Error::NotTriPartition)
        );
        assert_eq!(
            validate_cut(&g, &VertexCut::new(vec![], vec![0], vec![1, 2])),
            Err(Error::EmptySide)
        );
        assert_eq!(
            validate_cut(&g, &VertexCut::new(vec![0], vec![1], vec![7])),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        );
    }

    #[test]
    fn weights() {
        let g = DirectedGraph::new(vec![5, 1, 2], vec![]).unwrap();
        assert_eq!(weight_of(&g, &[1, 2]), 3);
        assert_eq!(weight_of(&g, &[]), 0);
        let u = DirectedGraph::unweighted(2, vec![]).unwrap();
        assert_eq!(weight_of(&u, &[0, 1]), 2);
    }

    #[test]
    fn cut_value_order_and_display() {
        assert!(CutValue::Finite(u64::MAX - 1) < CutValue::NoCut);
        assert!(CutValue::Finite(2) < CutValue::Finite(3));
        assert_eq!(CutValue::NoCut.to_string(), "inf");
        assert_eq!(CutValue::Finite(4).shifted_down(3), CutValue::Finite(1));
        assert_eq!(CutValue::NoCut.shifted_up(3), CutValue::NoCut);
    }
}
