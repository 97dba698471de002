//! Subcommand bodies. Each returns its full stdout text so it can be tested
//! without spawning a process.

use std::fmt::Write as _;
use std::time::Instant;

use thiserror::Error;
use vcut_core::connectivity::{self, Path, PairMatrix, Solution, Variant, VariantQuery};
use vcut_core::oracle::{self, OracleBudget};
use vcut_core::random::{gnp, GnpParams};
use vcut_core::{build_reduction, CutValue, DirectedGraph, UndirectedGraph, VertexCut, VertexId};

use crate::format::{self, Instance, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Solve(#[from] vcut_core::Error),
}

impl CliError {
    /// 1 for invalid input or unsolvable queries, 2 for usage errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// A `--variant` value with 0-based vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Query {
    Single(Variant),
    AllPairs,
}

impl Query {
    pub fn name(&self) -> &'static str {
        match self {
            Query::Single(Variant::Global) => "global",
            Query::Single(Variant::Pair(..)) => "pair",
            Query::Single(Variant::Source(_)) => "source",
            Query::Single(Variant::Sink(_)) => "sink",
            Query::Single(Variant::Steiner(_)) => "steiner",
            Query::AllPairs => "all-pairs",
        }
    }

    fn vertices(&self) -> Vec<VertexId> {
        match self {
            Query::Single(Variant::Pair(s, t)) => vec![*s, *t],
            Query::Single(Variant::Source(v)) | Query::Single(Variant::Sink(v)) => vec![*v],
            Query::Single(Variant::Steiner(ts)) => ts.clone(),
            _ => Vec::new(),
        }
    }

    pub fn check_range(&self, n: usize) -> CliResult<()> {
        match self.vertices().into_iter().find(|&v| v >= n) {
            Some(v) => Err(usage(format!("vertex {} out of range 1..={n}", v + 1))),
            None => Ok(()),
        }
    }
}

fn one_based(token: &str) -> CliResult<VertexId> {
    match token.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v - 1),
        _ => Err(usage(format!("`{token}` is not a 1-based vertex"))),
    }
}

/// Parses `global`, `pair S T`, `source S`, `sink T`, `steiner V1,V2,...` or
/// `all-pairs`.
pub fn parse_query(words: &[String]) -> CliResult<Query> {
    let (head, rest) = words
        .split_first()
        .ok_or_else(|| usage("missing variant"))?;
    let arity = |k: usize| {
        if rest.len() == k {
            Ok(())
        } else {
            Err(usage(format!("variant `{head}` takes {k} argument(s)")))
        }
    };
    let q = match head.as_str() {
        "global" => {
            arity(0)?;
            Query::Single(Variant::Global)
        }
        "all-pairs" => {
            arity(0)?;
            Query::AllPairs
        }
        "pair" => {
            arity(2)?;
            let (s, t) = (one_based(&rest[0])?, one_based(&rest[1])?);
            if s == t {
                return Err(usage("pair needs two distinct vertices"));
            }
            Query::Single(Variant::Pair(s, t))
        }
        "source" => {
            arity(1)?;
            Query::Single(Variant::Source(one_based(&rest[0])?))
        }
        "sink" => {
            arity(1)?;
            Query::Single(Variant::Sink(one_based(&rest[0])?))
        }
        "steiner" => {
            let joined = rest.join(",");
            let ts = joined
                .split(',')
                .filter(|s| !s.is_empty())
                .map(one_based)
                .collect::<CliResult<Vec<_>>>()?;
            let mut distinct = ts.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() < 2 {
                return Err(usage("steiner needs at least two distinct terminals"));
            }
            Query::Single(Variant::Steiner(ts))
        }
        other => return Err(usage(format!("unknown variant `{other}`"))),
    };
    Ok(q)
}

pub fn parse_path(word: &str) -> CliResult<Path> {
    match word {
        "reduction" => Ok(Path::Reduction),
        "direct" => Ok(Path::Direct),
        other => Err(usage(format!("unknown path `{other}`"))),
    }
}

pub fn path_name(path: Path) -> &'static str {
    match path {
        Path::Reduction => "reduction",
        Path::Direct => "direct",
    }
}

/// `[1,3,4]`, 1-based.
pub fn format_set(set: &[VertexId]) -> String {
    let items: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
    format!("[{}]", items.join(","))
}

fn write_witness(out: &mut String, cut: Option<&VertexCut>) {
    if let Some(cut) = cut {
        writeln!(out, "left {}", format_set(cut.left())).unwrap();
        writeln!(out, "separator {}", format_set(cut.separator())).unwrap();
        writeln!(out, "right {}", format_set(cut.right())).unwrap();
    }
}

fn write_matrix(out: &mut String, m: &PairMatrix) {
    writeln!(out, "matrix {}", m.n()).unwrap();
    for s in 0..m.n() {
        let row: Vec<String> = m.row(s).iter().map(CutValue::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
}

fn write_time(out: &mut String, start: Instant) {
    writeln!(out, "time_ms {:.3}", start.elapsed().as_secs_f64() * 1e3).unwrap();
}

pub fn cmd_reduce(text: &str) -> CliResult<String> {
    match format::parse(text)? {
        Instance::Directed(g) => Ok(format::write_undirected(build_reduction(&g).graph())),
        Instance::Undirected(_) => Err(usage("reduce expects a directed (`p dvc`) instance")),
    }
}

fn undirected_solution(g: &UndirectedGraph, v: &Variant) -> vcut_core::Result<Solution> {
    match v {
        Variant::Global => connectivity::undirected_global(g),
        &Variant::Pair(s, t) => connectivity::undirected_pair(g, s, t),
        &Variant::Source(s) | &Variant::Sink(s) => connectivity::undirected_source(g, s),
        Variant::Steiner(ts) => connectivity::undirected_steiner(g, ts),
    }
}

fn undirected_all_pairs(g: &UndirectedGraph) -> vcut_core::Result<Vec<Vec<CutValue>>> {
    (0..g.n())
        .map(|s| {
            (0..g.n())
                .map(|t| {
                    if s == t {
                        Ok(CutValue::NoCut)
                    } else {
                        connectivity::undirected_pair(g, s, t).map(|sol| sol.value)
                    }
                })
                .collect()
        })
        .collect()
}

/// `solve`: directed instances go through the chosen path; undirected
/// instances are solved directly and report `via direct`.
pub fn cmd_solve(text: &str, query: &Query, path: Path, witness: bool) -> CliResult<String> {
    let instance = format::parse(text)?;
    let mut out = String::new();
    let start = Instant::now();
    writeln!(out, "variant {}", query.name()).unwrap();
    match instance {
        Instance::Directed(g) => {
            query.check_range(g.n())?;
            writeln!(out, "via {}", path_name(path)).unwrap();
            match query {
                Query::AllPairs => write_matrix(&mut out, &connectivity::directed_all_pairs(&g, path)?),
                Query::Single(v) => {
                    let sol = connectivity::solve(
                        &g,
                        &VariantQuery {
                            variant: v.clone(),
                            path,
                        },
                    )?;
                    writeln!(out, "value {}", sol.value).unwrap();
                    if witness {
                        write_witness(&mut out, sol.cut.as_ref());
                    }
                }
            }
        }
        Instance::Undirected(g) => {
            query.check_range(g.n())?;
            writeln!(out, "via direct").unwrap();
            match query {
                Query::AllPairs => {
                    writeln!(out, "matrix {}", g.n()).unwrap();
                    for row in undirected_all_pairs(&g)? {
                        let row: Vec<String> = row.iter().map(CutValue::to_string).collect();
                        writeln!(out, "{}", row.join(" ")).unwrap();
                    }
                }
                Query::Single(v) => {
                    let sol = undirected_solution(&g, v)?;
                    writeln!(out, "value {}", sol.value).unwrap();
                    if witness {
                        write_witness(&mut out, sol.cut.as_ref());
                    }
                }
            }
        }
    }
    write_time(&mut out, start);
    Ok(out)
}

/// `oracle`: the same report as `solve`, computed by exhaustive enumeration.
pub fn cmd_oracle(text: &str, query: &Query, witness: bool, budget: OracleBudget) -> CliResult<String> {
    let instance = format::parse(text)?;
    let mut out = String::new();
    let start = Instant::now();
    writeln!(out, "variant {}", query.name()).unwrap();
    writeln!(out, "via oracle").unwrap();
    let result = match (&instance, query) {
        (Instance::Directed(g), Query::AllPairs) => {
            query.check_range(g.n())?;
            write_matrix(&mut out, &oracle::oracle_all_pairs(g, budget)?);
            None
        }
        (Instance::Undirected(g), Query::AllPairs) => {
            query.check_range(g.n())?;
            write_matrix(&mut out, &oracle::oracle_all_pairs(g, budget)?);
            None
        }
        (Instance::Directed(g), Query::Single(v)) => {
            query.check_range(g.n())?;
            Some(oracle::oracle_variant(g, v, budget)?)
        }
        (Instance::Undirected(g), Query::Single(v)) => {
            query.check_range(g.n())?;
            Some(oracle::oracle_variant(g, v, budget)?)
        }
    };
    if let Some(r) = result {
        writeln!(out, "value {}", r.value).unwrap();
        if witness {
            write_witness(&mut out, r.witness.as_ref());
        }
    }
    write_time(&mut out, start);
    Ok(out)
}

/// `gen --model gnp`: the instance file for the given parameters.
pub fn cmd_gen(params: GnpParams) -> CliResult<String> {
    if !(0.0..=1.0).contains(&params.p) {
        return Err(usage("p must lie in [0, 1]"));
    }
    if params.n == 0 || params.wmax == 0 {
        return Err(usage("n and wmax must be positive"));
    }
    let g: DirectedGraph = gnp(params)?;
    let mut out = format!(
        "c gnp n={} p={} wmax={} seed={}\n",
        params.n, params.p, params.wmax, params.seed
    );
    out.push_str(&format::write_directed(&g));
    Ok(out)
}
