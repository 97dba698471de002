//! Seeded random instances.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64`. Draw order: one
//! `u64` per ordered pair `(u, v)`, `u != v`, in lexicographic order, kept
//! when its top 53 bits as a fraction of `2^53` fall below `p`; then one
//! uniform weight in `[1, wmax]` per vertex, ascending.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{DirectedGraph, Weight};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GnpParams {
    pub n: usize,
    pub p: f64,
    pub wmax: Weight,
    pub seed: u64,
}

fn unit_interval(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Directed `G(n, p)` with uniform vertex weights.
///
/// Fails only when the weights break the graph's size bound.
pub fn gnp(params: GnpParams) -> Result<DirectedGraph> {
    let GnpParams { n, p, wmax, seed } = params;
    assert!((0.0..=1.0).contains(&p), "p must lie in [0, 1]");
    assert!(wmax >= 1, "wmax must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && unit_interval(rng.next_u64()) < p {
                arcs.push((u, v));
            }
        }
    }
    let weights = (0..n).map(|_| rng.gen_range(1..=wmax)).collect();
    DirectedGraph::new(weights, arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, p: f64, seed: u64) -> GnpParams {
        GnpParams { n, p, wmax: 10, seed }
    }

    #[test]
    fn extreme_densities() {
        assert_eq!(gnp(params(5, 1.0, 3)).unwrap().m(), 20);
        assert_eq!(gnp(params(5, 0.0, 3)).unwrap().m(), 0);
    }

    #[test]
    fn seed_determines_instance() {
        assert_eq!(gnp(params(12, 0.4, 9)).unwrap(), gnp(params(12, 0.4, 9)).unwrap());
        assert_ne!(gnp(params(12, 0.4, 9)).unwrap(), gnp(params(12, 0.4, 10)).unwrap());
    }

    #[test]
    fn weights_in_range() {
        let g = gnp(GnpParams { n: 50, p: 0.1, wmax: 3, seed: 1 }).unwrap();
        assert!(g.weights_slice().iter().all(|&w| (1..=3).contains(&w)));
        let unit = gnp(GnpParams { n: 50, p: 0.1, wmax: 1, seed: 1 }).unwrap();
        assert!(unit.weights_slice().iter().all(|&w| w == 1));
    }

    impl DirectedGraph {
        fn weights_slice(&self) -> &[Weight] {
            crate::graph::Graph::weights(self)
        }
    }
}
