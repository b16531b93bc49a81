//! Text input formats.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v` with 0-based
//! indices. Interval endpoints: one line `label start end` per vertex with
//! integer endpoints; the graph is the intersection graph of the closed
//! intervals. In both formats `#` starts a comment and blank lines are ignored.

use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Intervals,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edges" => Ok(Format::EdgeList),
            "intervals" | "interval-endpoints" => Ok(Format::Intervals),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: interval start {start} exceeds end {end}")]
    ReversedInterval { line: usize, start: i64, end: i64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A closed interval `[start, end]` with its vertex label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledInterval {
    pub label: String,
    pub start: i64,
    pub end: i64,
}

pub fn parse_graph(input: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(input),
        Format::Intervals => {
            let intervals = parse_intervals(input)?;
            Ok(intersection_graph(&intervals)?)
        }
    }
}

/// Non-empty, comment-stripped lines with 1-based line numbers.
fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn field<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::Malformed {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("invalid {what} {tok:?}"),
    })
}

fn expect_end<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<(), ParseError> {
    match toks.next() {
        None => Ok(()),
        Some(extra) => Err(ParseError::Malformed {
            line,
            message: format!("unexpected trailing token {extra:?}"),
        }),
    }
}

pub fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(input);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut toks = header.split_whitespace();
    let n: usize = field(toks.next(), hline, "vertex count")?;
    let m: usize = field(toks.next(), hline, "edge count")?;
    expect_end(toks, hline)?;

    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        let u: usize = field(toks.next(), line, "vertex")?;
        let v: usize = field(toks.next(), line, "vertex")?;
        expect_end(toks, line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn parse_intervals(input: &str) -> Result<Vec<LabeledInterval>, ParseError> {
    let mut out = Vec::new();
    for (line, text) in content_lines(input) {
        let mut toks = text.split_whitespace();
        let label: String = field(toks.next(), line, "label")?;
        let start: i64 = field(toks.next(), line, "start")?;
        let end: i64 = field(toks.next(), line, "end")?;
        expect_end(toks, line)?;
        if start > end {
            return Err(ParseError::ReversedInterval { line, start, end });
        }
        out.push(LabeledInterval { label, start, end });
    }
    Ok(out)
}

/// Intersection graph of closed intervals; vertex `i` is `intervals[i]`.
pub fn intersection_graph(intervals: &[LabeledInterval]) -> Result<Graph, GraphError> {
    let mut by_start: Vec<usize> = (0..intervals.len()).collect();
    by_start.sort_by_key(|&i| (intervals[i].start, i));
    let mut edges = Vec::new();
    for (k, &i) in by_start.iter().enumerate() {
        for &j in &by_start[k + 1..] {
            if intervals[j].start > intervals[i].end {
                break;
            }
            edges.push((i.min(j), i.max(j)));
        }
    }
    let labels = intervals.iter().map(|iv| iv.label.clone()).collect();
    Graph::with_labels(labels, &edges)
}

pub fn write_intervals(intervals: &[LabeledInterval]) -> String {
    intervals
        .iter()
        .map(|iv| format!("{} {} {}\n", iv.label, iv.start, iv.end))
        .collect()
}
