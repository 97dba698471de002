//! Randomized cross-checking of the reduction path, the direct path and the
//! exhaustive oracle.

use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vcut_core::connectivity::{self, Path, Solution};
use vcut_core::oracle::{self, OracleBudget};
use vcut_core::random::{gnp, GnpParams};
use vcut_core::reduction::{extract_directed_cut, lift_directed_cut, reduced_neighborhood_weight};
use vcut_core::{
    build_reduction, validate_cut, weight_of, CutValue, DirectedGraph, Graph, ReducedGraph,
    VertexCut,
};

const CHECKS: [&str; 7] = [
    "size",
    "neighborhood",
    "global",
    "pair",
    "source-sink",
    "steiner",
    "witness",
];

/// Largest `G'` handed to the oracle (two copies of a graph with 9 vertices).
const REDUCED_ORACLE_MAX: usize = 18;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub tallies: Vec<(&'static str, Tally)>,
    pub failures: Vec<String>,
    pub text: String,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker {
    tallies: Vec<(&'static str, Tally)>,
    failures: Vec<String>,
    context: String,
}

impl Checker {
    fn tally(&mut self, check: &str) -> &mut Tally {
        &mut self
            .tallies
            .iter_mut()
            .find(|(name, _)| *name == check)
            .expect("known check")
            .1
    }

    fn record(&mut self, check: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.tally(check).pass += 1;
        } else {
            self.tally(check).fail += 1;
            let msg = format!("FAIL {check}: {} ({})", detail(), self.context);
            self.failures.push(msg);
        }
    }

    fn skip(&mut self, check: &'static str) {
        self.tally(check).skip += 1;
    }

    fn witness<G: Graph>(&mut self, g: &G, sol: &Solution, what: &str) {
        let ok = match (sol.value, &sol.cut) {
            (CutValue::Finite(x), Some(cut)) => {
                validate_cut(g, cut).is_ok() && weight_of(g, cut.separator()) == x
            }
            (CutValue::NoCut, None) => true,
            _ => false,
        };
        self.record("witness", ok, || format!("{what}: bad witness {:?}", sol.cut));
    }

    fn certificate(&mut self, r: &ReducedGraph, sol: &Solution, what: &str) {
        if let (Some(cert), Some(cut)) = (&sol.certificate, &sol.cut) {
            let ok = &extract_directed_cut(r, cert) == cut;
            self.record("witness", ok, || format!("{what}: certificate does not extract to the cut"));
        }
    }
}

fn random_subset(rng: &mut StdRng, n: usize) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

/// A random valid directed cut, or `None` after repeated failures.
pub fn random_directed_cut<R: Rng>(g: &DirectedGraph, rng: &mut R) -> Option<VertexCut> {
    let n = g.n();
    for _ in 0..32 {
        // 0 = left, 1 = separator, 2 = right
        let mut side: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        for &(u, v) in g.arcs() {
            if side[u] == 0 && side[v] == 2 {
                side[v] = 1;
            }
        }
        let left: Vec<usize> = (0..n).filter(|&v| side[v] == 0).collect();
        let right: Vec<usize> = (0..n).filter(|&v| side[v] == 2).collect();
        if !left.is_empty() && !right.is_empty() {
            return Some(VertexCut::from_sides(n, left, right));
        }
    }
    None
}

fn check_instance(ck: &mut Checker, g: &DirectedGraph, rng: &mut StdRng, budget: OracleBudget) {
    let n = g.n();
    let r = build_reduction(g);
    let shift = r.total_weight();
    let use_oracle = n <= budget.max_n;
    let reduced_budget = OracleBudget::with_max_n(REDUCED_ORACLE_MAX);

    let expected_edges = n * n.saturating_sub(1) + n + g.m();
    ck.record("size", r.graph().n() == 2 * n && r.graph().m() == expected_edges, || {
        format!("|V'|={} |E'|={} expected {} {}", r.graph().n(), r.graph().m(), 2 * n, expected_edges)
    });

    let subsets: Vec<Vec<usize>> = if n <= 6 {
        (1u32..1 << n)
            .map(|mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect())
            .collect()
    } else {
        (0..200).map(|_| random_subset(rng, n)).collect()
    };
    for set in subsets {
        let lifted: Vec<usize> = set.iter().map(|&v| r.in_copy(v)).collect();
        let lhs = reduced_neighborhood_weight(&r, &lifted).ok();
        let rhs = weight_of(g, &g.in_neighborhood(&set)) + shift;
        ck.record("neighborhood", lhs == Some(rhs), || format!("R={set:?}: {lhs:?} vs {rhs}"));
    }

    // global
    if g.is_complete() {
        let both = [Path::Reduction, Path::Direct]
            .map(|p| connectivity::directed_global(g, p).is_err());
        ck.record("global", both == [true, true], || "complete graph accepted".into());
    } else {
        let red = connectivity::directed_global(g, Path::Reduction);
        let dir = connectivity::directed_global(g, Path::Direct);
        match (red, dir) {
            (Ok(red), Ok(dir)) => {
                ck.record("global", red.value == dir.value, || {
                    format!("reduction {} direct {}", red.value, dir.value)
                });
                ck.witness(g, &red, "global/reduction");
                ck.witness(g, &dir, "global/direct");
                ck.certificate(&r, &red, "global");
                if use_oracle {
                    let o = oracle::oracle_global(g, budget).map(|o| o.value);
                    ck.record("global", o == Ok(dir.value), || format!("oracle {o:?} solver {}", dir.value));
                } else {
                    ck.skip("global");
                }
                if 2 * n <= REDUCED_ORACLE_MAX && use_oracle {
                    let o = oracle::oracle_global(r.graph(), reduced_budget).map(|o| o.value);
                    ck.record("global", o == Ok(dir.value.shifted_up(shift)), || {
                        format!("oracle on G' {o:?}, expected {} + {shift}", dir.value)
                    });
                } else {
                    ck.skip("global");
                }
            }
            (red, dir) => ck.record("global", false, || format!("errors {red:?} {dir:?}")),
        }
    }

    // every ordered pair
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let red = connectivity::reduced_pair(&r, s, t);
            let dir = connectivity::directed_pair(g, s, t, Path::Direct);
            let (Ok(red), Ok(dir)) = (red, dir) else {
                ck.record("pair", false, || format!("({s},{t}) errored"));
                continue;
            };
            let no_cut = g.has_arc(s, t);
            ck.record(
                "pair",
                red.value == dir.value && (red.value == CutValue::NoCut) == no_cut,
                || format!("({s},{t}): reduction {} direct {}", red.value, dir.value),
            );
            ck.witness(g, &red, "pair/reduction");
            ck.witness(g, &dir, "pair/direct");
            ck.certificate(&r, &red, "pair");
            if use_oracle {
                let o = oracle::oracle_pair(g, s, t, budget).map(|o| o.value);
                ck.record("pair", o == Ok(dir.value), || format!("({s},{t}): oracle {o:?} solver {}", dir.value));
            } else {
                ck.skip("pair");
            }
        }
    }

    // single source and single sink
    if n >= 2 {
        for (label, v, sink) in [("source", rng.gen_range(0..n), false), ("sink", rng.gen_range(0..n), true)] {
            let run = |p| {
                if sink {
                    connectivity::directed_sink(g, v, p)
                } else {
                    connectivity::directed_source(g, v, p)
                }
            };
            let (Ok(red), Ok(dir)) = (run(Path::Reduction), run(Path::Direct)) else {
                ck.record("source-sink", false, || format!("{label} {v} errored"));
                continue;
            };
            ck.record("source-sink", red.value == dir.value, || {
                format!("{label} {v}: reduction {} direct {}", red.value, dir.value)
            });
            ck.witness(g, &red, label);
            ck.certificate(&r, &red, label);
            if use_oracle {
                let variant = if sink {
                    connectivity::Variant::Sink(v)
                } else {
                    connectivity::Variant::Source(v)
                };
                let o = oracle::oracle_variant(g, &variant, budget).map(|o| o.value);
                ck.record("source-sink", o == Ok(dir.value), || format!("{label} {v}: oracle {o:?}"));
            } else {
                ck.skip("source-sink");
            }
        }

        // Steiner on a random terminal set of size in [2, n]
        let k = rng.gen_range(2..=n);
        let mut ts: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = rng.gen_range(i..n);
            ts.swap(i, j);
        }
        ts.truncate(k);
        let red = connectivity::directed_steiner(g, &ts, Path::Reduction);
        let dir = connectivity::directed_steiner(g, &ts, Path::Direct);
        match (red, dir) {
            (Ok(red), Ok(dir)) => {
                ck.record("steiner", red.value == dir.value && r.lift_terminals(&ts).len() == 2 * k, || {
                    format!("T={ts:?}: reduction {} direct {}", red.value, dir.value)
                });
                ck.witness(g, &red, "steiner");
                ck.certificate(&r, &red, "steiner");
                if use_oracle {
                    let o = oracle::oracle_variant(g, &connectivity::Variant::Steiner(ts.clone()), budget)
                        .map(|o| o.value);
                    ck.record("steiner", o == Ok(dir.value), || format!("T={ts:?}: oracle {o:?}"));
                } else {
                    ck.skip("steiner");
                }
            }
            (red, dir) => ck.record("steiner", false, || format!("errors {red:?} {dir:?}")),
        }
    }

    // lift / extract round trips
    for _ in 0..10 {
        if let Some(cut) = random_directed_cut(g, rng) {
            let ok = match lift_directed_cut(&r, &cut) {
                Ok(lifted) => {
                    let back = extract_directed_cut(&r, &lifted);
                    weight_of(r.graph(), lifted.cut().separator())
                        == weight_of(g, cut.separator()) + shift
                        && back == cut
                }
                Err(_) => false,
            };
            ck.record("witness", ok, || format!("lift/extract of {cut:?}"));
        }
    }
}

/// Runs `trials` random instances with `n ∈ [1, max_n]`, sweeping density and
/// weight range. Oracle comparisons are skipped for instances above the
/// oracle budget.
pub fn run_verify(trials: usize, max_n: usize, seed: u64) -> VerifyReport {
    let budget = OracleBudget::default();
    let mut text = String::new();
    writeln!(text, "verify trials {trials} max-n {max_n} seed {seed}").unwrap();
    if max_n > budget.max_n {
        writeln!(
            text,
            "note: oracle budget is {} vertices; oracle checks are skipped above it, path-equivalence checks still run",
            budget.max_n
        )
        .unwrap();
    }
    let mut ck = Checker {
        tallies: CHECKS.iter().map(|&c| (c, Tally::default())).collect(),
        failures: Vec::new(),
        context: String::new(),
    };
    let mut rng = StdRng::seed_from_u64(seed);
    let wmaxes = [1, 3, 10];
    for trial in 0..trials {
        let params = GnpParams {
            n: rng.gen_range(1..=max_n.max(1)),
            p: (trial % 11) as f64 / 10.0 * 0.99 + rng.gen_range(0.0..0.01),
            wmax: wmaxes[trial % wmaxes.len()],
            seed: rng.gen(),
        };
        ck.context = format!(
            "trial {trial}, reproduce with: vcut gen --model gnp --n {} --p {} --wmax {} --seed {}",
            params.n, params.p, params.wmax, params.seed
        );
        let g = gnp(params).expect("small weights are always valid");
        let mut inner = StdRng::seed_from_u64(params.seed ^ 0x5eed);
        check_instance(&mut ck, &g, &mut inner, budget);
    }
    for (name, t) in &ck.tallies {
        writeln!(text, "check {name} pass {} fail {} skip {}", t.pass, t.fail, t.skip).unwrap();
    }
    for f in &ck.failures {
        writeln!(text, "{f}").unwrap();
    }
    let verdict = if ck.failures.is_empty() { "pass" } else { "fail" };
    writeln!(text, "result {verdict}").unwrap();
    VerifyReport {
        tallies: ck.tallies,
        failures: ck.failures,
        text,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = run_verify(20, 6, 1);
        assert!(report.passed(), "{}", report.text);
        assert!(report.tallies.iter().all(|(_, t)| t.fail == 0));
        assert!(report.tallies.iter().find(|(n, _)| *n == "pair").unwrap().1.pass > 0);
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let report = run_verify(0, 8, 1);
        assert!(report.passed());
        assert!(report.text.ends_with("result pass\n"));
    }

    #[test]
    fn large_instances_skip_the_oracle() {
        let report = run_verify(2, 14, 3);
        assert!(report.passed(), "{}", report.text);
        assert!(report.text.contains("note: oracle budget"));
    }
}
