//! Text formats for graphs and uniform hypergraphs.
//!
//! ```text
//! # comment
//! n 4
//! 1 2
//! 2 3
//! ```
//!
//! Hypergraph files start with `n <count> m <uniformity>` and list `m` labels per
//! edge line. Blank lines and lines starting with `#` are ignored everywhere.
//! Labels that are all integers in `1..=n` are used as-is; any other labels are
//! sorted (numerically when possible) and mapped onto `1..=n`, with the mapping
//! kept in [`Labels`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, UniformHypergraph};

/// Original label of each vertex; `labels[v - 1]` belongs to vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labels(pub Vec<String>);

impl Labels {
    pub fn identity(n: usize) -> Self {
        Labels((1..=n).map(|v| v.to_string()).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, l)| *l == (i + 1).to_string())
    }

    pub fn label(&self, v: usize) -> &str {
        &self.0[v - 1]
    }
}

/// A parsed input file: a graph when the uniformity is 2, otherwise a hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Graph(Graph),
    Hypergraph(UniformHypergraph),
}

impl Input {
    pub fn n(&self) -> usize {
        match self {
            Input::Graph(g) => g.n(),
            Input::Hypergraph(h) => h.n(),
        }
    }

    pub fn uniformity(&self) -> usize {
        match self {
            Input::Graph(_) => 2,
            Input::Hypergraph(h) => h.uniformity(),
        }
    }

    pub fn to_hypergraph(&self) -> UniformHypergraph {
        match self {
            Input::Graph(g) => g.to_hypergraph(),
            Input::Hypergraph(h) => h.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInput {
    pub input: Input,
    pub labels: Labels,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t.split_whitespace().collect()))
        }
    })
}

fn parse_count(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what} count, found `{tok}`")))
}

/// Parses either file format.
pub fn parse_input(text: &str) -> Result<ParsedInput> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n <count>`"))?;
    let (n, m) = match header.as_slice() {
        ["n", count] => (parse_count(header_line, count, "vertex")?, 2),
        ["n", count, "m", unif] => (
            parse_count(header_line, count, "vertex")?,
            parse_count(header_line, unif, "uniformity")?,
        ),
        _ => {
            return Err(parse_err(
                header_line,
                "header must be `n <count>` or `n <count> m <uniformity>`",
            ))
        }
    };
    if header.len() == 4 && (m < 1 || m > n) {
        return Err(parse_err(
            header_line,
            format!("uniformity {m} is outside 1..={n}"),
        ));
    }

    let mut raw_edges: Vec<(usize, Vec<&str>)> = Vec::new();
    for (line, toks) in lines {
        if toks.len() != m {
            return Err(parse_err(
                line,
                format!("expected {m} vertex labels, found {}", toks.len()),
            ));
        }
        raw_edges.push((line, toks));
    }

    let labels = canonical_labels(n, &raw_edges)?;
    let index: BTreeMap<&str, usize> = labels
        .0
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i + 1))
        .collect();

    let mut seen = BTreeMap::new();
    let mut edges = Vec::with_capacity(raw_edges.len());
    for (line, toks) in &raw_edges {
        let mut edge: Vec<usize> = toks.iter().map(|t| index[t]).collect();
        edge.sort_unstable();
        if edge.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(*line, "edge repeats a vertex"));
        }
        if let Some(first) = seen.insert(edge.clone(), *line) {
            return Err(parse_err(
                *line,
                format!("duplicate edge (first given on line {first})"),
            ));
        }
        edges.push(edge);
    }

    let input = if m == 2 {
        Input::Graph(Graph::new(n, edges.iter().map(|e| (e[0], e[1])))?)
    } else {
        Input::Hypergraph(UniformHypergraph::new(n, m, &edges)?)
    };
    Ok(ParsedInput { input, labels })
}

fn canonical_labels(n: usize, raw_edges: &[(usize, Vec<&str>)]) -> Result<Labels> {
    let identity = raw_edges.iter().all(|(_, toks)| {
        toks.iter()
            .all(|t| t.parse::<usize>().is_ok_and(|v| (1..=n).contains(&v)))
    });
    if identity {
        return Ok(Labels::identity(n));
    }

    let distinct: BTreeSet<&str> = raw_edges
        .iter()
        .flat_map(|(_, toks)| toks.iter().copied())
        .collect();
    if distinct.len() > n {
        // report the first line that pushes the label count past n
        let mut seen = BTreeSet::new();
        for (line, toks) in raw_edges {
            seen.extend(toks.iter().copied());
            if seen.len() > n {
                return Err(parse_err(
                    *line,
                    format!("more than {n} distinct vertex labels"),
                ));
            }
        }
    }
    let mut sorted: Vec<&str> = distinct.into_iter().collect();
    if sorted.iter().all(|t| t.parse::<i64>().is_ok()) {
        sorted.sort_by_key(|t| t.parse::<i64>().unwrap());
    }
    let mut labels: Vec<String> = sorted.into_iter().map(str::to_owned).collect();
    // unused vertices become isolated, with synthetic labels
    let mut k = labels.len();
    while labels.len() < n {
        k += 1;
        labels.push(format!("_{k}"));
    }
    Ok(Labels(labels))
}

pub fn parse_graph(text: &str) -> Result<(Graph, Labels)> {
    let parsed = parse_input(text)?;
    match parsed.input {
        Input::Graph(g) => Ok((g, parsed.labels)),
        Input::Hypergraph(h) => Err(parse_err(
            1,
            format!(
                "expected a graph, found a {}-uniform hypergraph",
                h.uniformity()
            ),
        )),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_hypergraph(h: &UniformHypergraph) -> String {
    let mut out = format!("n {} m {}\n", h.n(), h.uniformity());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}
