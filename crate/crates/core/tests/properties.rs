use proptest::prelude::*;
use vcut_core::connectivity::{self, Path, Variant};
use vcut_core::graph::is_strongly_connected;
use vcut_core::oracle::{self, OracleBudget};
use vcut_core::reduction::{extract_directed_cut, lift_directed_cut, normalize_cut};
use vcut_core::{build_reduction, validate_cut, weight_of, CutValue, DirectedGraph, Graph};

fn digraph(max_n: usize, max_w: u64) -> impl Strategy<Value = DirectedGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            proptest::collection::vec(1..=max_w, n),
            proptest::collection::vec(any::<bool>(), n * n),
        )
            .prop_map(move |(w, mask)| {
                let arcs = (0..n * n)
                    .filter(|&i| mask[i] && i / n != i % n)
                    .map(|i| (i / n, i % n))
                    .collect();
                DirectedGraph::new(w, arcs).unwrap()
            })
    })
}

fn budget() -> OracleBudget {
    OracleBudget::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn global_paths_match_oracle(g in digraph(8, 6)) {
        prop_assume!(!g.is_complete());
        let ora = oracle::oracle_global(&g, budget()).unwrap().value;
        for path in [Path::Reduction, Path::Direct] {
            let sol = connectivity::directed_global(&g, path).unwrap();
            prop_assert_eq!(sol.value, ora);
            let cut = sol.cut.unwrap();
            prop_assert!(validate_cut(&g, &cut).is_ok());
            // removing the separator breaks strong connectivity
            prop_assert!(!is_strongly_connected(&g, cut.separator()));
        }
    }

    #[test]
    fn complete_graphs_are_rejected(n in 1usize..6) {
        let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
        let g = DirectedGraph::unweighted(n, arcs).unwrap();
        prop_assert!(connectivity::directed_global(&g, Path::Reduction).is_err());
        prop_assert!(connectivity::directed_global(&g, Path::Direct).is_err());
        prop_assert_eq!(oracle::oracle_global(&g, budget()).unwrap().value, CutValue::NoCut);
    }

    #[test]
    fn pair_shift_on_reduced_graph(g in digraph(6, 5), s in 0usize..6, t in 0usize..6) {
        let n = g.n();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        let r = build_reduction(&g);
        let on_g = oracle::oracle_pair(&g, s, t, budget()).unwrap().value;
        let on_h = oracle::oracle_pair(r.graph(), r.out_copy(s), r.in_copy(t), budget()).unwrap().value;
        prop_assert_eq!(on_h, on_g.shifted_up(r.total_weight()));
    }

    #[test]
    fn minimum_cuts_of_reduced_graph_normalize(g in digraph(6, 5)) {
        prop_assume!(!g.is_complete());
        let r = build_reduction(&g);
        let found = oracle::oracle_global(r.graph(), budget()).unwrap();
        let cut = found.witness.unwrap();
        let norm = normalize_cut(&r, cut).unwrap();
        let back = extract_directed_cut(&r, &norm);
        prop_assert!(validate_cut(&g, &back).is_ok());
        prop_assert_eq!(
            CutValue::Finite(weight_of(&g, back.separator())),
            found.value.shifted_down(r.total_weight())
        );
    }

    #[test]
    fn lift_then_extract_is_identity(g in digraph(10, 20), seed in any::<u64>()) {
        let n = g.n();
        prop_assume!(n >= 2);
        // vertices left of the first arc-closed prefix under a seeded order
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (v as u64).wrapping_mul(seed | 1).rotate_left(17));
        let left = vec![order[0]];
        let mut sep: Vec<usize> = g.out_neighbors(order[0]).to_vec();
        sep.sort_unstable();
        let right: Vec<usize> = (0..n).filter(|v| !left.contains(v) && !sep.contains(v)).collect();
        prop_assume!(!right.is_empty());
        let cut = vcut_core::VertexCut::from_sides(n, left, right);
        prop_assert!(validate_cut(&g, &cut).is_ok());
        let r = build_reduction(&g);
        let lifted = lift_directed_cut(&r, &cut).unwrap();
        prop_assert_eq!(
            weight_of(r.graph(), lifted.cut().separator()),
            weight_of(&g, cut.separator()) + r.total_weight()
        );
        prop_assert_eq!(extract_directed_cut(&r, &lifted), cut);
    }

    #[test]
    fn weight_of_is_additive(g in digraph(10, 50), mask in any::<u16>()) {
        let n = g.n();
        let a: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let b: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        prop_assert_eq!(weight_of(&g, &a) + weight_of(&g, &b), g.total_weight());
    }

    #[test]
    fn source_sink_steiner_match_oracle(g in digraph(7, 6), v in 0usize..7, mask in 3u8..) {
        let n = g.n();
        let v = v % n;
        let ts: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut variants = vec![Variant::Source(v), Variant::Sink(v)];
        if ts.len() >= 2 {
            variants.push(Variant::Steiner(ts));
        }
        for variant in variants {
            let ora = oracle::oracle_variant(&g, &variant, budget()).unwrap().value;
            for path in [Path::Reduction, Path::Direct] {
                let q = connectivity::VariantQuery { variant: variant.clone(), path };
                prop_assert_eq!(connectivity::solve(&g, &q).unwrap().value, ora);
            }
        }
    }

    #[test]
    fn adding_an_arc_never_lowers_pair_values(g in digraph(7, 6), a in 0usize..7, b in 0usize..7) {
        let n = g.n();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b && !g.has_arc(a, b));
        let mut arcs = g.arcs().to_vec();
        arcs.push((a, b));
        let h = DirectedGraph::new(g.weights().to_vec(), arcs).unwrap();
        let before = connectivity::directed_all_pairs(&g, Path::Direct).unwrap();
        let after = connectivity::directed_all_pairs(&h, Path::Direct).unwrap();
        for s in 0..n {
            for t in 0..n {
                prop_assert!(after.get(s, t) >= before.get(s, t));
            }
        }
    }

    #[test]
    fn relabeling_preserves_values(g in digraph(7, 6), shift in 0usize..7) {
        let n = g.n();
        let pi = |v: usize| (v + shift) % n;
        let mut w = vec![0; n];
        for v in 0..n {
            w[pi(v)] = g.weight(v);
        }
        let arcs = g.arcs().iter().map(|&(u, v)| (pi(u), pi(v))).collect();
        let h = DirectedGraph::new(w, arcs).unwrap();
        let a = connectivity::directed_all_pairs(&g, Path::Reduction).unwrap();
        let b = connectivity::directed_all_pairs(&h, Path::Reduction).unwrap();
        for s in 0..n {
            for t in 0..n {
                prop_assert_eq!(a.get(s, t), b.get(pi(s), pi(t)));
            }
        }
    }
}
