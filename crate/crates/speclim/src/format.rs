//! Text formats for graphs and uniform hypergraphs.
//!
//! Graph files start with a header `n <count>` followed by one edge per line:
//!
//! ```text
//! # simple      signed        mixed              oriented
//! n 4           n 3           n 3                n 3
//! 0 1           0 1 +         0 > 1   (arc)      0 -> 1
//! 1 2           1 2 -         1 = 2   (digon)    2 -> 1
//! ```
//!
//! The flavour is detected from the first edge line; every later edge line must use the
//! same syntax. Blank lines and anything after `#` are ignored.
//!
//! Hypergraph files start with `r n m` and list `m` edges of `r` vertices each.

use std::fmt::Write as _;

use speclim_core::hypergraph::UniformHypergraph;
use speclim_core::{Graph, MixedGraph, OrientedGraph, Sign, SignedGraph};

/// A malformed input file.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    /// 1-based line number, or 0 when the problem is the file as a whole.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

/// A graph read from a file, in whichever flavour the file uses.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphInput {
    Simple(Graph),
    Signed(SignedGraph),
    Mixed(MixedGraph),
    Oriented(OrientedGraph),
}

impl GraphInput {
    pub fn order(&self) -> usize {
        match self {
            GraphInput::Simple(g) => g.order(),
            GraphInput::Signed(s) => s.base().order(),
            GraphInput::Mixed(m) => m.order(),
            GraphInput::Oriented(o) => o.base().order(),
        }
    }

    pub fn flavour(&self) -> Flavour {
        match self {
            GraphInput::Simple(_) => Flavour::Simple,
            GraphInput::Signed(_) => Flavour::Signed,
            GraphInput::Mixed(_) => Flavour::Mixed,
            GraphInput::Oriented(_) => Flavour::Oriented,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavour {
    Simple,
    Signed,
    Mixed,
    Oriented,
}

impl Flavour {
    pub fn name(self) -> &'static str {
        match self {
            Flavour::Simple => "simple",
            Flavour::Signed => "signed",
            Flavour::Mixed => "mixed",
            Flavour::Oriented => "oriented",
        }
    }
}

enum Edge {
    Simple(usize, usize),
    Signed(usize, usize, Sign),
    Arc(usize, usize),
    Digon(usize, usize),
    Oriented(usize, usize),
}

impl Edge {
    fn flavour(&self) -> Flavour {
        match self {
            Edge::Simple(..) => Flavour::Simple,
            Edge::Signed(..) => Flavour::Signed,
            Edge::Arc(..) | Edge::Digon(..) => Flavour::Mixed,
            Edge::Oriented(..) => Flavour::Oriented,
        }
    }
}

/// Non-empty lines with comments stripped, with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn vertex(tok: &str, n: usize, line: usize) -> Result<usize, FormatError> {
    let v: usize = tok
        .parse()
        .map_err(|_| err(line, format!("expected a vertex index, found {tok:?}")))?;
    if v >= n {
        return Err(err(line, format!("vertex {v} outside 0..{n}")));
    }
    Ok(v)
}

fn parse_edge(l: &str, n: usize, line: usize) -> Result<Edge, FormatError> {
    let toks: Vec<&str> = l.split_whitespace().collect();
    match toks.as_slice() {
        [u, v] => Ok(Edge::Simple(vertex(u, n, line)?, vertex(v, n, line)?)),
        [u, v, s] if *s == "+" || *s == "-" => {
            let sign = if *s == "+" { Sign::Plus } else { Sign::Minus };
            Ok(Edge::Signed(vertex(u, n, line)?, vertex(v, n, line)?, sign))
        }
        [u, ">", v] => Ok(Edge::Arc(vertex(u, n, line)?, vertex(v, n, line)?)),
        [u, "=", v] => Ok(Edge::Digon(vertex(u, n, line)?, vertex(v, n, line)?)),
        [u, "->", v] => Ok(Edge::Oriented(vertex(u, n, line)?, vertex(v, n, line)?)),
        _ => Err(err(
            line,
            format!("cannot read {l:?} as `u v`, `u v +|-`, `u > v`, `u = v` or `u -> v`"),
        )),
    }
}

fn parse_header(text: &str) -> Result<(usize, usize), FormatError> {
    let (line, l) = content_lines(text)
        .next()
        .ok_or_else(|| err(0, "empty input; expected a header `n <count>`"))?;
    match l.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse()
            .map(|n| (line, n))
            .map_err(|_| err(line, format!("bad vertex count {count:?}"))),
        _ => Err(err(line, format!("expected a header `n <count>`, found {l:?}"))),
    }
}

/// Parses a graph file, detecting its flavour from the first edge line.
pub fn parse_graph(text: &str) -> Result<GraphInput, FormatError> {
    let (header, n) = parse_header(text)?;
    let mut edges = Vec::new();
    let mut flavour = None;
    for (line, l) in content_lines(text).filter(|&(i, _)| i > header) {
        let e = parse_edge(l, n, line)?;
        match flavour {
            None => flavour = Some(e.flavour()),
            Some(f) if f != e.flavour() => {
                return Err(err(
                    line,
                    format!("{} edge in a {} graph", e.flavour().name(), f.name()),
                ))
            }
            _ => {}
        }
        edges.push((line, e));
    }
    let lift = |line: usize| move |e: speclim_core::Error| err(line, e.to_string());
    Ok(match flavour.unwrap_or(Flavour::Simple) {
        Flavour::Simple => {
            let mut g = Graph::empty(n);
            for (line, e) in edges {
                if let Edge::Simple(u, v) = e {
                    g.try_add_edge(u, v).map_err(lift(line))?;
                }
            }
            GraphInput::Simple(g)
        }
        Flavour::Signed => {
            let mut list = Vec::new();
            for (line, e) in &edges {
                if let Edge::Signed(u, v, s) = *e {
                    if list.iter().any(|&(a, b, _)| (a, b) == (u, v) || (a, b) == (v, u)) {
                        return Err(err(*line, format!("repeated edge {u}-{v}")));
                    }
                    list.push((u, v, s));
                }
            }
            let last = edges.last().map_or(header, |e| e.0);
            GraphInput::Signed(SignedGraph::from_signed_edges(n, &list).map_err(lift(last))?)
        }
        Flavour::Mixed => {
            let mut m = MixedGraph::new(n);
            for (line, e) in edges {
                match e {
                    Edge::Arc(u, v) => m.add_arc(u, v).map_err(lift(line))?,
                    Edge::Digon(u, v) => m.add_digon(u, v).map_err(lift(line))?,
                    _ => {}
                }
            }
            GraphInput::Mixed(m)
        }
        Flavour::Oriented => {
            let mut arcs: Vec<(usize, usize)> = Vec::new();
            for (line, e) in &edges {
                if let Edge::Oriented(u, v) = *e {
                    if u == v {
                        return Err(err(*line, format!("loop at {u}")));
                    }
                    if arcs.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                        return Err(err(*line, format!("repeated edge {u}-{v}")));
                    }
                    arcs.push((u, v));
                }
            }
            let last = edges.last().map_or(header, |e| e.0);
            GraphInput::Oriented(OrientedGraph::from_arcs(n, &arcs).map_err(lift(last))?)
        }
    })
}

/// Writes a graph in the format read by [`parse_graph`].
pub fn write_graph(g: &GraphInput) -> String {
    let mut s = format!("n {}\n", g.order());
    match g {
        GraphInput::Simple(g) => {
            for (u, v) in g.edges() {
                let _ = writeln!(s, "{u} {v}");
            }
        }
        GraphInput::Signed(g) => {
            for (u, v, sign) in g.signed_edges() {
                let c = if sign == Sign::Plus { '+' } else { '-' };
                let _ = writeln!(s, "{u} {v} {c}");
            }
        }
        GraphInput::Mixed(m) => {
            for (u, v) in m.arcs() {
                if !m.is_digon(u, v) {
                    let _ = writeln!(s, "{u} > {v}");
                } else if u < v {
                    let _ = writeln!(s, "{u} = {v}");
                }
            }
        }
        GraphInput::Oriented(o) => {
            for (u, v) in o.arcs() {
                let _ = writeln!(s, "{u} -> {v}");
            }
        }
    }
    s
}

/// Parses a hypergraph file: header `r n m`, then `m` lines of `r` vertex indices.
pub fn parse_hypergraph(text: &str) -> Result<UniformHypergraph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(0, "empty input; expected a header `r n m`"))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| err(hline, format!("expected `r n m`, found {header:?}")))?;
    let [r, n, m] = nums[..] else {
        return Err(err(hline, format!("expected `r n m`, found {header:?}")));
    };
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, l) in lines {
        last = line;
        if edges.len() == m {
            return Err(err(line, format!("more than the {m} declared edges")));
        }
        let mut e: Vec<usize> = l
            .split_whitespace()
            .map(|t| vertex(t, n, line))
            .collect::<Result<_, _>>()?;
        if e.len() != r {
            return Err(err(line, format!("edge has {} vertices, expected {r}", e.len())));
        }
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(err(line, "repeated vertex in an edge"));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(err(
            last,
            format!("found {} edges, header declares {m}", edges.len()),
        ));
    }
    UniformHypergraph::new(n, r, edges).map_err(|e| err(hline, e.to_string()))
}

/// Writes a hypergraph in the format read by [`parse_hypergraph`].
pub fn write_hypergraph(h: &UniformHypergraph) -> String {
    let mut s = format!("{} {} {}\n", h.uniformity(), h.order(), h.edges().len());
    for e in h.edges() {
        let row: Vec<String> = e.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_each_flavour() {
        let f = |t: &str| parse_graph(t).unwrap().flavour();
        assert_eq!(f("n 3\n0 1\n1 2\n"), Flavour::Simple);
        assert_eq!(f("n 3\n0 1 +\n1 2 -\n"), Flavour::Signed);
        assert_eq!(f("n 3\n0 > 1\n1 = 2\n"), Flavour::Mixed);
        assert_eq!(f("n 3\n0 -> 1\n"), Flavour::Oriented);
        assert_eq!(f("# nothing\nn 2\n"), Flavour::Simple);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_graph("n 3\n0 1\n\n1 x\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = parse_graph("n 3\n0 1\n1 2 +\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("signed edge in a simple graph"));
        assert_eq!(parse_graph("n 2\n0 5\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("").unwrap_err().line, 0);
        assert_eq!(parse_graph("n 2\n0 1\n1 0\n").unwrap_err().line, 3);
    }

    #[test]
    fn hypergraph_header_and_counts() {
        let h = parse_hypergraph("3 5 2\n0 1 2\n2 3 4\n").unwrap();
        assert_eq!(h.edges().len(), 2);
        assert_eq!(parse_hypergraph("3 5 2\n0 1 2\n").unwrap_err().line, 2);
        assert_eq!(parse_hypergraph("3 5 1\n0 1\n").unwrap_err().line, 2);
        assert_eq!(parse_hypergraph("3 5 1\n0 1 1\n").unwrap_err().line, 2);
    }
}
