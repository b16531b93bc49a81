use std::fs;
use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use interval_hamilton::generators::{generate, Family, GenSpec, Generated};
use interval_hamilton::parse::write_intervals;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    EdgeList,
    Intervals,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub mode: GenMode,
    #[arg(long, value_enum, default_value_t = Emit::EdgeList, global = true)]
    pub emit: Emit,
    /// Write one file per graph into this directory instead of stdout.
    #[arg(long, global = true)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenMode {
    /// Every connected interval graph on n vertices up to isomorphism.
    Exhaustive {
        #[arg(long)]
        n: usize,
    },
    /// Random intervals with uniform starts and lengths.
    Random {
        #[arg(long)]
        n: usize,
        /// Mean interval length; controls the edge density.
        #[arg(long, default_value_t = 3)]
        mean_length: u32,
        #[arg(long)]
        seed: u64,
        /// Shift intervals so that the graph is connected.
        #[arg(long)]
        connected: bool,
    },
    /// A named family: path, star, complete, nested, onion or onion:WIDTH.
    Family {
        family: Family,
        #[arg(long)]
        n: usize,
    },
}

fn render(generated: &Generated, emit: Emit) -> String {
    match emit {
        Emit::EdgeList => generated.graph.to_edge_list(),
        Emit::Intervals => write_intervals(&generated.intervals),
    }
}

pub fn run(args: &GenArgs) -> Result<String, CliError> {
    let spec = match args.mode {
        GenMode::Exhaustive { n } => GenSpec::Exhaustive { n },
        GenMode::Random {
            n,
            mean_length,
            seed,
            connected,
        } => {
            if connected {
                GenSpec::RandomConnected { n, mean_length, seed }
            } else {
                GenSpec::Random { n, mean_length, seed }
            }
        }
        GenMode::Family { family, n } => GenSpec::Family { family, n },
    };
    let graphs = generate(spec)?;
    if let Some(dir) = &args.out_dir {
        fs::create_dir_all(dir).map_err(|source| CliError::Write {
            path: dir.clone(),
            source,
        })?;
        for (i, generated) in graphs.iter().enumerate() {
            let path = dir.join(format!("graph-{i:05}.txt"));
            fs::write(&path, render(generated, args.emit)).map_err(|source| CliError::Write { path, source })?;
        }
        return Ok(format!("wrote {} graphs to {}\n", graphs.len(), dir.display()));
    }
    if graphs.len() == 1 {
        return Ok(render(&graphs[0], args.emit));
    }
    let mut out = String::new();
    for (i, generated) in graphs.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("# graph {i}\n"));
        out.push_str(&render(generated, args.emit));
    }
    Ok(out)
}
