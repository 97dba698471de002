//! Line-oriented instance files.
//!
//! ```text
//! c any comment, anywhere
//! p dvc <n> <m>          (or `p uvc <n> <m>` for undirected graphs)
//! w <v> <weight>         optional, default weight 1
//! a <u> <v>              m arc lines (`e <u> <v>` for undirected graphs)
//! ```
//!
//! Vertices are 1-based in files and 0-based in memory. Output uses single
//! spaces and `\n`, writes weight lines only for non-unit weights (ascending
//! by vertex), and keeps the graph's link order.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;
use vcut_core::{DirectedGraph, Graph, UndirectedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p` header")]
    MissingHeader,
    #[error("second `p` header")]
    DuplicateHeader,
    #[error("{0}")]
    Syntax(String),
    #[error("unknown line type `{0}`")]
    UnknownLine(String),
    #[error("`{0}` line in a {1} instance")]
    WrongLinkKind(char, &'static str),
    #[error("weight of vertex {0} given twice")]
    DuplicateWeight(usize),
    #[error("header declares {declared} links, found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error("{}", one_based(.0))]
    Graph(#[from] vcut_core::Error),
}

/// Core errors count vertices from 0; files count from 1.
fn one_based(e: &vcut_core::Error) -> String {
    use vcut_core::Error as E;
    match *e {
        E::SelfLoop(v) => format!("self-loop on vertex {}", v + 1),
        E::DuplicateArc(u, v) => format!("duplicate link {} {}", u + 1, v + 1),
        E::NonPositiveWeight(v) => format!("vertex {} has weight 0", v + 1),
        _ => e.to_string(),
    }
}

/// A parse failure; `line` is 1-based, 0 when the problem is the file as a whole.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Directed(DirectedGraph),
    Undirected(UndirectedGraph),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn number(line: usize, token: Option<&str>) -> Result<u64, ParseError> {
    let token = token.ok_or_else(|| err(line, ParseErrorKind::Syntax("missing field".into())))?;
    token
        .parse()
        .map_err(|_| err(line, ParseErrorKind::Syntax(format!("`{token}` is not a number"))))
}

/// 1-based file index to 0-based vertex.
fn vertex(line: usize, token: Option<&str>, n: usize) -> Result<usize, ParseError> {
    let v = number(line, token)?;
    if v == 0 || v > n as u64 {
        return Err(err(
            line,
            vcut_core::Error::VertexOutOfRange {
                vertex: v as usize,
                n,
            }
            .into(),
        ));
    }
    Ok(v as usize - 1)
}

pub fn parse(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(bool, usize, usize)> = None;
    let mut weights: Vec<u64> = Vec::new();
    let mut weight_given: Vec<bool> = Vec::new();
    let mut links: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        let Some(kind) = tok.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateHeader));
                }
                let directed = match tok.next() {
                    Some("dvc") => true,
                    Some("uvc") => false,
                    other => {
                        return Err(err(
                            line,
                            ParseErrorKind::Syntax(format!(
                                "expected `dvc` or `uvc`, found `{}`",
                                other.unwrap_or("")
                            )),
                        ))
                    }
                };
                let n = number(line, tok.next())? as usize;
                let m = number(line, tok.next())? as usize;
                weights = vec![1; n];
                weight_given = vec![false; n];
                header = Some((directed, n, m));
            }
            "w" | "a" | "e" => {
                let (directed, n, _) = header.ok_or_else(|| err(line, ParseErrorKind::MissingHeader))?;
                if kind == "w" {
                    let v = vertex(line, tok.next(), n)?;
                    let w = number(line, tok.next())?;
                    if w == 0 {
                        return Err(err(line, vcut_core::Error::NonPositiveWeight(v).into()));
                    }
                    if std::mem::replace(&mut weight_given[v], true) {
                        return Err(err(line, ParseErrorKind::DuplicateWeight(v + 1)));
                    }
                    weights[v] = w;
                } else {
                    let expected = if directed { "a" } else { "e" };
                    if kind != expected {
                        let label = if directed { "directed" } else { "undirected" };
                        return Err(err(line, ParseErrorKind::WrongLinkKind(kind.chars().next().unwrap(), label)));
                    }
                    let u = vertex(line, tok.next(), n)?;
                    let v = vertex(line, tok.next(), n)?;
                    if u == v {
                        return Err(err(line, vcut_core::Error::SelfLoop(u).into()));
                    }
                    let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
                    if !seen.insert(key) {
                        return Err(err(line, vcut_core::Error::DuplicateArc(u, v).into()));
                    }
                    links.push((u, v));
                }
            }
            other => return Err(err(line, ParseErrorKind::UnknownLine(other.to_string()))),
        }
        if tok.next().is_some() {
            return Err(err(line, ParseErrorKind::Syntax("trailing fields".into())));
        }
    }

    let (directed, _, m) = header.ok_or_else(|| err(0, ParseErrorKind::MissingHeader))?;
    if links.len() != m {
        return Err(err(
            0,
            ParseErrorKind::CountMismatch {
                declared: m,
                found: links.len(),
            },
        ));
    }
    let instance = if directed {
        Instance::Directed(DirectedGraph::new(weights, links).map_err(|e| err(0, e.into()))?)
    } else {
        Instance::Undirected(UndirectedGraph::new(weights, links).map_err(|e| err(0, e.into()))?)
    };
    Ok(instance)
}

fn write_body<G: Graph>(out: &mut String, kind: &str, tag: char, g: &G, links: &[(usize, usize)]) {
    writeln!(out, "p {kind} {} {}", g.vertex_count(), links.len()).unwrap();
    for (v, &w) in g.weights().iter().enumerate() {
        if w != 1 {
            writeln!(out, "w {} {w}", v + 1).unwrap();
        }
    }
    for &(u, v) in links {
        writeln!(out, "{tag} {} {}", u + 1, v + 1).unwrap();
    }
}

pub fn write_directed(g: &DirectedGraph) -> String {
    let mut out = String::new();
    write_body(&mut out, "dvc", 'a', g, g.arcs());
    out
}

pub fn write_undirected(g: &UndirectedGraph) -> String {
    let mut out = String::new();
    write_body(&mut out, "uvc", 'e', g, g.edges());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_directed_cycle() {
        let text = "c a cycle\np dvc 3 3\nw 1 5\na 1 2\na 2 3\nc mid\na 3 1\n";
        let Instance::Directed(g) = parse(text).unwrap() else {
            panic!("expected a digraph")
        };
        assert_eq!(g.weights(), &[5, 1, 1]);
        assert_eq!(g.arcs(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(write_directed(&g), "p dvc 3 3\nw 1 5\na 1 2\na 2 3\na 3 1\n");
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse("p dvc 2 1\na 1 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind, ParseErrorKind::Graph(vcut_core::Error::SelfLoop(0)));

        let e = parse("p dvc 2 2\na 1 2\na 1 2\n").unwrap_err();
        assert_eq!(e.line, 3);

        let e = parse("p dvc 2 1\nw 1 0\na 1 2\n").unwrap_err();
        assert_eq!(e.line, 2);

        let e = parse("p dvc 2 1\na 1 3\n").unwrap_err();
        assert_eq!(e.line, 2);

        let e = parse("a 1 2\n").unwrap_err();
        assert_eq!((e.line, e.kind), (1, ParseErrorKind::MissingHeader));

        let e = parse("p uvc 2 1\na 1 2\n").unwrap_err();
        assert_eq!(e.line, 2);

        let e = parse("p dvc 2 2\na 1 2\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::CountMismatch { declared: 2, found: 1 });

        assert!(parse("p dvc 2 0\nx\n").is_err());
        assert!(parse("p dvc 2 0\nw 1 2 3\n").is_err());
    }

    #[test]
    fn undirected_duplicates_in_either_order() {
        let e = parse("p uvc 2 2\ne 1 2\ne 2 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.to_string(), "line 3: duplicate link 2 1");
    }
}
