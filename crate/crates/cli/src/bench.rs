//! Timing of the two solver paths on generated instances.

use std::fmt::Write as _;
use std::time::Instant;

use vcut_core::connectivity::{self, Path, Variant};
use vcut_core::random::{gnp, GnpParams};
use vcut_core::{build_reduction, CutValue, DirectedGraph, Graph};

use crate::commands::{path_name, CliResult, Query};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Via {
    Reduction,
    Direct,
    Both,
}

impl Via {
    fn paths(self) -> &'static [Path] {
        match self {
            Via::Reduction => &[Path::Reduction],
            Via::Direct => &[Path::Direct],
            Via::Both => &[Path::Reduction, Path::Direct],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub path: Path,
    /// `value` for single queries; the matrix minimum for all-pairs.
    pub value: CutValue,
    pub build_ms: f64,
    pub flow_ms: f64,
    pub total_ms: f64,
    pub flow_calls: usize,
    pub pair_queries: usize,
    /// Vertices and edges (or arcs) of the graph the flows run on.
    pub graph_vertices: usize,
    pub graph_links: usize,
    /// Forward arcs of one s-t flow network on that graph.
    pub network_arcs: usize,
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn pair_queries(query: &Query, n: usize) -> usize {
    match query {
        Query::AllPairs => n * n.saturating_sub(1),
        Query::Single(Variant::Pair(..)) => 1,
        _ => 0,
    }
}

fn run_path(g: &DirectedGraph, query: &Query, path: Path) -> CliResult<BenchRow> {
    let start = Instant::now();
    let (reduced, build_ms) = match path {
        Path::Reduction => {
            let r = build_reduction(g);
            (Some(r), ms(start))
        }
        Path::Direct => (None, 0.0),
    };
    let flow_start = Instant::now();
    let (value, flow_calls) = match (&reduced, query) {
        (Some(r), Query::AllPairs) => {
            let m = connectivity::reduced_all_pairs(r)?;
            (m.min(), m.flow_calls())
        }
        (None, Query::AllPairs) => {
            let m = connectivity::directed_all_pairs(g, Path::Direct)?;
            (m.min(), m.flow_calls())
        }
        (Some(r), Query::Single(v)) => {
            let sol = match v {
                Variant::Global => connectivity::reduced_global(r),
                &Variant::Pair(s, t) => connectivity::reduced_pair(r, s, t),
                &Variant::Source(s) => connectivity::reduced_source(r, s),
                &Variant::Sink(t) => connectivity::reduced_sink(r, t),
                Variant::Steiner(ts) => connectivity::reduced_steiner(r, ts),
            }?;
            (sol.value, sol.flow_calls)
        }
        (None, Query::Single(v)) => {
            let sol = connectivity::solve(
                g,
                &connectivity::VariantQuery {
                    variant: v.clone(),
                    path: Path::Direct,
                },
            )?;
            (sol.value, sol.flow_calls)
        }
    };
    let flow_ms = ms(flow_start);
    let (graph_vertices, graph_links, network_arcs) = match &reduced {
        Some(r) => {
            let h = r.graph();
            (h.n(), h.m(), h.n() + 2 * h.m())
        }
        None => (g.n(), g.m(), g.n() + g.m()),
    };
    Ok(BenchRow {
        path,
        value,
        build_ms,
        flow_ms,
        total_ms: ms(start),
        flow_calls,
        pair_queries: pair_queries(query, g.vertex_count()),
        graph_vertices,
        graph_links,
        network_arcs,
    })
}

/// Generates one instance and times each requested path on it.
pub fn run_bench(params: GnpParams, query: &Query, via: Via) -> CliResult<Vec<BenchRow>> {
    let g = gnp(params)?;
    query.check_range(g.n())?;
    via.paths().iter().map(|&p| run_path(&g, query, p)).collect()
}

pub fn format_bench(params: GnpParams, query: &Query, rows: &[BenchRow]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "bench n={} p={} wmax={} seed={} variant {}",
        params.n,
        params.p,
        params.wmax,
        params.seed,
        query.name()
    )
    .unwrap();
    writeln!(
        out,
        "via value build_ms flow_ms total_ms flow_calls pair_queries vertices edges network_arcs"
    )
    .unwrap();
    for r in rows {
        writeln!(
            out,
            "{} {} {:.3} {:.3} {:.3} {} {} {} {} {}",
            path_name(r.path),
            r.value,
            r.build_ms,
            r.flow_ms,
            r.total_ms,
            r.flow_calls,
            r.pair_queries,
            r.graph_vertices,
            r.graph_links,
            r.network_arcs
        )
        .unwrap();
    }
    if rows.len() > 1 {
        let agree = rows.windows(2).all(|w| w[0].value == w[1].value);
        writeln!(out, "agree {}", if agree { "yes" } else { "no" }).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize) -> GnpParams {
        GnpParams {
            n,
            p: 0.5,
            wmax: 10,
            seed: 7,
        }
    }

    #[test]
    fn both_paths_agree() {
        let rows = run_bench(params(30), &Query::Single(Variant::Global), Via::Both).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].value, rows[1].value);
        assert_eq!(rows[0].graph_vertices, 60);
        let text = format_bench(params(30), &Query::Single(Variant::Global), &rows);
        assert!(text.contains("agree yes"));
    }

    #[test]
    fn all_pairs_counts_queries() {
        let rows = run_bench(params(10), &Query::AllPairs, Via::Direct).unwrap();
        assert_eq!(rows[0].pair_queries, 90);
    }
}
