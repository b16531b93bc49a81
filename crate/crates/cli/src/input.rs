use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use interval_hamilton::{parse_graph, Format, Graph, VertexSet};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Edge list if the first line has two fields, interval endpoints if three.
    Auto,
    EdgeList,
    Intervals,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: PathBuf::from(path),
        source,
    })
}

fn detect(text: &str) -> Result<Format, CliError> {
    let first = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .find(|line| !line.is_empty());
    match first.map(|line| line.split_whitespace().count()) {
        Some(2) => Ok(Format::EdgeList),
        Some(3) => Ok(Format::Intervals),
        _ => Err(CliError::UnknownFormat),
    }
}

pub fn read_graph(path: &Path, format: InputFormat) -> Result<Graph, CliError> {
    let text = read_text(path)?;
    let format = match format {
        InputFormat::Auto => detect(&text)?,
        InputFormat::EdgeList => Format::EdgeList,
        InputFormat::Intervals => Format::Intervals,
    };
    Ok(parse_graph(&text, format)?)
}

pub fn vertex(g: &Graph, label: &str) -> Result<usize, CliError> {
    g.index_of(label)
        .ok_or_else(|| CliError::UnknownLabel(label.to_string()))
}

pub fn vertex_set(g: &Graph, labels: &[String]) -> Result<VertexSet, CliError> {
    let members = labels
        .iter()
        .map(|l| vertex(g, l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VertexSet::from_iter(g.n(), members))
}
