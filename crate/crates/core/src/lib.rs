//! Interval graph algorithms built on a clique-path model and a sweep that
//! finds optimal spanning staves between the extreme vertices. The scattering
//! number and the Hamiltonicity certificates are both read off that sweep.
//!
//! Every operation runs in (near-)linear time given the graph; the [`oracle`]
//! module holds exponential reference implementations for cross-checking.

pub mod generators;
pub mod graph;
pub mod hamiltonicity;
pub mod lexbfs;
pub mod model;
pub mod oracle;
pub mod parse;
pub mod scattering;
pub mod stave;

pub use graph::{components, is_clique, Components, Graph, GraphError, VertexSet};
pub use model::{build_model, verify_model, CliquePathModel, ModelError, ModelViolation};
pub use parse::{parse_graph, Format, ParseError};
