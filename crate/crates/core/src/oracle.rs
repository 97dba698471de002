//! Exhaustive ground truth for small graphs.
//!
//! Every candidate separator is enumerated explicitly, by increasing size and
//! then lexicographically, and checked with a fresh traversal. A candidate is
//! skipped once its weight cannot beat the best cut found so far, and the
//! enumeration stops when the lightest set of the next size is already too
//! heavy. Nothing here shares code with the flow solver.

use crate::connectivity::{PairMatrix, Variant};
use crate::cut::{CutValue, VertexCut};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, Weight};

/// Limits on the enumeration size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    /// Upper bound on the number of candidate subsets of a single search.
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_n: 12,
            max_subsets: 1 << 24,
        }
    }
}

impl OracleBudget {
    pub fn with_max_n(max_n: usize) -> Self {
        Self {
            max_n,
            ..Self::default()
        }
    }

    fn admit(&self, n: usize, candidates: usize) -> Result<()> {
        let too_many = candidates >= 64 || (1u64 << candidates) > self.max_subsets;
        if n > self.max_n || n > 64 || too_many {
            return Err(Error::BudgetExceeded {
                n,
                max_n: self.max_n.min(64),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: CutValue,
    pub witness: Option<VertexCut>,
}

impl OracleResult {
    fn no_cut() -> Self {
        Self {
            value: CutValue::NoCut,
            witness: None,
        }
    }
}

/// Adjacency as bitmasks.
struct Masks {
    n: usize,
    succ: Vec<u64>,
    pred: Vec<u64>,
    weights: Vec<Weight>,
}

impl Masks {
    fn new<G: Graph + ?Sized>(g: &G) -> Self {
        let n = g.vertex_count();
        let to_mask = |list: &[VertexId]| list.iter().fold(0u64, |m, &v| m | (1 << v));
        Self {
            n,
            succ: (0..n).map(|u| to_mask(g.successors(u))).collect(),
            pred: (0..n).map(|u| to_mask(g.predecessors(u))).collect(),
            weights: g.weights().to_vec(),
        }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Vertices reachable from `start` inside `allowed`.
    fn reach(&self, start: VertexId, allowed: u64, forward: bool) -> u64 {
        let adj = if forward { &self.succ } else { &self.pred };
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn to_vec(&self, mask: u64) -> Vec<VertexId> {
        (0..self.n).filter(|&v| mask & (1 << v) != 0).collect()
    }

    fn cut(&self, left: u64, sep: u64, right: u64) -> VertexCut {
        VertexCut::new(self.to_vec(left), self.to_vec(sep), self.to_vec(right))
    }

    /// Minimum-weight subset of `candidates` for which `split` yields the
    /// sides `(L, R)` of a cut, in size-then-lexicographic order.
    fn search<F>(&self, candidates: u64, split: F) -> OracleResult
    where
        F: Fn(u64) -> Option<(u64, u64)>,
    {
        let positions = self.to_vec(candidates);
        let mut sorted: Vec<Weight> = positions.iter().map(|&v| self.weights[v]).collect();
        sorted.sort_unstable();
        let c = positions.len();
        let mut best: Option<(Weight, u64, u64, u64)> = None;
        let mut lightest: Weight = 0;
        for k in 0..=c {
            if k > 0 {
                lightest += sorted[k - 1];
            }
            if best.is_some_and(|b| lightest >= b.0) {
                break;
            }
            for_each_combination(c, k, |bits| {
                let mut sep = 0u64;
                let mut weight = 0;
                let mut b = bits;
                while b != 0 {
                    let v = positions[b.trailing_zeros() as usize];
                    b &= b - 1;
                    sep |= 1 << v;
                    weight += self.weights[v];
                }
                if best.is_some_and(|b| weight >= b.0) {
                    return;
                }
                if let Some((l, r)) = split(sep) {
                    best = Some((weight, l, sep, r));
                }
            });
        }
        match best {
            Some((w, l, s, r)) => OracleResult {
                value: CutValue::Finite(w),
                witness: Some(self.cut(l, s, r)),
            },
            None => OracleResult::no_cut(),
        }
    }
}

/// Calls `f` on every `k`-subset of `{0..c}` as a bitmask, in increasing
/// numeric order (Gosper's hack).
fn for_each_combination(c: usize, k: usize, mut f: impl FnMut(u64)) {
    if k > c {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = 1u128 << c;
    let mut x: u64 = (1u64 << k) - 1;
    loop {
        f(x);
        let low = x & x.wrapping_neg();
        let ripple = x as u128 + low as u128;
        if ripple >= limit {
            return;
        }
        let ripple = ripple as u64;
        x = (((ripple ^ x) >> 2) / low) | ripple;
    }
}

/// Minimum vertex cut of the whole graph by enumeration. A set `S` qualifies
/// when at least two vertices remain and they are not (strongly) connected.
/// Complete graphs yield `NoCut`.
pub fn oracle_global<G: Graph + ?Sized>(g: &G, budget: OracleBudget) -> Result<OracleResult> {
    let n = g.vertex_count();
    budget.admit(n, n)?;
    let masks = Masks::new(g);
    let full = masks.full();
    Ok(masks.search(full, |sep| {
        let rest = full & !sep;
        if rest.count_ones() < 2 {
            return None;
        }
        let root = rest.trailing_zeros() as usize;
        let fwd = masks.reach(root, rest, true);
        if fwd != rest {
            // nothing leaves the forward closure
            return Some((fwd, rest & !fwd));
        }
        let bwd = masks.reach(root, rest, false);
        if bwd != rest {
            // nothing enters the backward closure
            return Some((rest & !bwd, bwd));
        }
        None
    }))
}

/// Minimum `S ⊆ V \ {s, t}` leaving no path from `s` to `t`. `NoCut` when
/// `s = t` or `s` links to `t`.
pub fn oracle_pair<G: Graph + ?Sized>(
    g: &G,
    s: VertexId,
    t: VertexId,
    budget: OracleBudget,
) -> Result<OracleResult> {
    let n = g.vertex_count();
    for x in [s, t] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    budget.admit(n, n.saturating_sub(2))?;
    if s == t || g.has_link(s, t) {
        return Ok(OracleResult::no_cut());
    }
    let masks = Masks::new(g);
    let full = masks.full();
    let candidates = full & !(1 << s) & !(1 << t);
    Ok(masks.search(candidates, |sep| {
        let rest = full & !sep;
        let left = masks.reach(s, rest, true);
        (left & (1 << t) == 0).then_some((left, rest & !left))
    }))
}

/// First minimum over a list of ordered pairs.
fn min_over_pairs<G: Graph + ?Sized>(
    g: &G,
    pairs: impl IntoIterator<Item = (VertexId, VertexId)>,
    budget: OracleBudget,
) -> Result<OracleResult> {
    let mut best = OracleResult::no_cut();
    for (s, t) in pairs {
        let r = oracle_pair(g, s, t, budget)?;
        if r.value < best.value {
            best = r;
        }
    }
    Ok(best)
}

/// Dispatches a variant to enumeration: source, sink and Steiner queries are
/// minima of pair queries.
pub fn oracle_variant<G: Graph + ?Sized>(
    g: &G,
    variant: &Variant,
    budget: OracleBudget,
) -> Result<OracleResult> {
    let n = g.vertex_count();
    let check = |v: VertexId| {
        if v >= n {
            Err(Error::VertexOutOfRange { vertex: v, n })
        } else {
            Ok(())
        }
    };
    match variant {
        Variant::Global => oracle_global(g, budget),
        &Variant::Pair(s, t) => oracle_pair(g, s, t, budget),
        &Variant::Source(s) => {
            check(s)?;
            min_over_pairs(g, (0..n).filter(|&t| t != s).map(|t| (s, t)), budget)
        }
        &Variant::Sink(t) => {
            check(t)?;
            min_over_pairs(g, (0..n).filter(|&s| s != t).map(|s| (s, t)), budget)
        }
        Variant::Steiner(terminals) => {
            let mut ts = terminals.clone();
            ts.sort_unstable();
            ts.dedup();
            if ts.len() < 2 {
                return Err(Error::TerminalSetTooSmall);
            }
            for &v in &ts {
                check(v)?;
            }
            let pairs: Vec<_> = ts
                .iter()
                .flat_map(|&s| ts.iter().filter(move |&&t| t != s).map(move |&t| (s, t)))
                .collect();
            min_over_pairs(g, pairs, budget)
        }
    }
}

/// `oracle_pair` for every ordered pair; the diagonal is `NoCut`.
pub fn oracle_all_pairs<G: Graph + ?Sized>(g: &G, budget: OracleBudget) -> Result<PairMatrix> {
    let n = g.vertex_count();
    let mut values = Vec::with_capacity(n * n);
    for s in 0..n {
        for t in 0..n {
            values.push(oracle_pair(g, s, t, budget)?.value);
        }
    }
    Ok(PairMatrix::from_values(n, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::{validate_cut, weight_of};
    use crate::graph::{DirectedGraph, UndirectedGraph};

    fn cycle3() -> DirectedGraph {
        DirectedGraph::unweighted(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn combinations_in_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |x| seen.push(x));
        assert_eq!(seen, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        let mut count = 0;
        for_each_combination(5, 0, |_| count += 1);
        for_each_combination(5, 5, |_| count += 1);
        for_each_combination(5, 6, |_| count += 1);
        assert_eq!(count, 2);
    }

    #[test]
    fn directed_globals() {
        let g = cycle3();
        let r = oracle_global(&g, OracleBudget::default()).unwrap();
        assert_eq!(r.value, CutValue::Finite(1));
        assert_eq!(validate_cut(&g, r.witness.as_ref().unwrap()), Ok(()));

        let g = DirectedGraph::unweighted(2, vec![(0, 1)]).unwrap();
        let r = oracle_global(&g, OracleBudget::default()).unwrap();
        assert_eq!(r.value, CutValue::Finite(0));
        assert_eq!(r.witness.unwrap(), VertexCut::new(vec![1], vec![], vec![0]));
    }

    #[test]
    fn complete_graph_has_no_cut() {
        let k4 = UndirectedGraph::unweighted(
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(
            oracle_global(&k4, OracleBudget::default()).unwrap().value,
            CutValue::NoCut
        );
    }

    #[test]
    fn pairs() {
        let g = cycle3();
        let r = oracle_pair(&g, 0, 2, OracleBudget::default()).unwrap();
        assert_eq!(r.value, CutValue::Finite(1));
        assert_eq!(r.witness.unwrap().separator(), &[1]);
        assert_eq!(oracle_pair(&g, 0, 1, OracleBudget::default()).unwrap().value, CutValue::NoCut);
        assert_eq!(oracle_pair(&g, 1, 1, OracleBudget::default()).unwrap().value, CutValue::NoCut);
        let path = DirectedGraph::unweighted(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(oracle_pair(&path, 0, 2, OracleBudget::default()).unwrap().value, CutValue::Finite(1));
    }

    #[test]
    fn variants() {
        let g = cycle3();
        let b = OracleBudget::default();
        assert_eq!(oracle_variant(&g, &Variant::Steiner(vec![1, 2]), b).unwrap().value, CutValue::Finite(1));
        assert_eq!(oracle_variant(&g, &Variant::Source(0), b).unwrap().value, CutValue::Finite(1));
        assert_eq!(oracle_variant(&g, &Variant::Sink(0), b).unwrap().value, CutValue::Finite(1));
        assert_eq!(
            oracle_variant(&g, &Variant::Steiner(vec![1, 1]), b),
            Err(Error::TerminalSetTooSmall)
        );
        let single = DirectedGraph::unweighted(2, vec![(0, 1)]).unwrap();
        let m = oracle_all_pairs(&single, b).unwrap();
        assert_eq!(m.get(1, 0), CutValue::Finite(0));
        assert_eq!(m.get(0, 1), CutValue::NoCut);
        assert_eq!(m.get(0, 0), CutValue::NoCut);
    }

    #[test]
    fn weighted_witness_matches_value() {
        let g = DirectedGraph::new(vec![5, 1, 2], vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = oracle_global(&g, OracleBudget::default()).unwrap();
        assert_eq!(r.value, CutValue::Finite(1));
        let w = r.witness.unwrap();
        assert_eq!(w.separator(), &[1]);
        assert_eq!(weight_of(&g, w.separator()), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let g = DirectedGraph::unweighted(13, vec![]).unwrap();
        assert_eq!(
            oracle_global(&g, OracleBudget::default()),
            Err(Error::BudgetExceeded { n: 13, max_n: 12 })
        );
        let tight = OracleBudget {
            max_n: 20,
            max_subsets: 1 << 10,
        };
        assert!(oracle_global(&g, tight).is_err());
        assert!(oracle_global(&g, OracleBudget::with_max_n(13)).is_ok());
    }
}
