use std::time::Instant;

use clap::Args;
use interval_hamilton::build_model;
use interval_hamilton::generators::gen_random_connected;
use interval_hamilton::hamiltonicity::analyze;
use interval_hamilton::stave::{sweep_with, SweepOptions};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Vertex counts, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [100_000usize, 200_000, 400_000])]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Mean interval length of the random instances.
    #[arg(long, default_value_t = 3)]
    pub mean_length: u32,
    /// Runs per size; the median is reported.
    #[arg(long, default_value_t = 5)]
    pub runs: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub n: usize,
    pub m: usize,
    pub model_ms: f64,
    pub sweep_ms: f64,
    pub total_ms: f64,
    /// `total(n) / total(n / 2)` when the previous row has half the size.
    pub doubling_ratio: Option<f64>,
    pub memory_estimate_mb: f64,
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_secs_f64() * 1e3)
}

pub fn measure(args: &BenchArgs) -> Result<Vec<Row>, CliError> {
    if args.runs == 0 {
        return Err(CliError::Usage("--runs must be positive".into()));
    }
    let mut rows: Vec<Row> = Vec::new();
    for &n in &args.sizes {
        let g = gen_random_connected(n, args.mean_length, args.seed).graph;
        let (mut model_t, mut sweep_t, mut total_t) = (Vec::new(), Vec::new(), Vec::new());
        let mut clique_volume = 0;
        for _ in 0..args.runs {
            let (model, t) = timed(|| build_model(&g));
            let model = model.map_err(|e| CliError::Internal(e.to_string()))?;
            model_t.push(t);
            clique_volume = model.cliques().iter().map(Vec::len).sum::<usize>();
            let (_, t) = timed(|| sweep_with(&model, SweepOptions::default()));
            sweep_t.push(t);
            let (analysis, t) = timed(|| analyze(&g));
            analysis?;
            total_t.push(t);
        }
        let total_ms = median(total_t);
        let doubling_ratio = rows
            .last()
            .filter(|prev| prev.n * 2 == n)
            .map(|prev| total_ms / prev.total_ms);
        let words = g.n() + 2 * g.m() + clique_volume + 12 * g.n();
        rows.push(Row {
            n,
            m: g.m(),
            model_ms: median(model_t),
            sweep_ms: median(sweep_t),
            total_ms,
            doubling_ratio,
            memory_estimate_mb: (words * std::mem::size_of::<usize>()) as f64 / (1024.0 * 1024.0),
        });
    }
    Ok(rows)
}

pub fn run(args: &BenchArgs) -> Result<String, CliError> {
    let rows = measure(args)?;
    if args.json {
        let mut s = serde_json::to_string_pretty(&rows).map_err(|e| CliError::Internal(e.to_string()))?;
        s.push('\n');
        return Ok(s);
    }
    let mut out = format!(
        "{:>10} {:>10} {:>10} {:>10} {:>10} {:>8} {:>9}\n",
        "n", "m", "model_ms", "sweep_ms", "total_ms", "ratio", "mem_mb"
    );
    for r in &rows {
        let ratio = r.doubling_ratio.map_or_else(|| "-".to_string(), |x| format!("{x:.2}"));
        out.push_str(&format!(
            "{:>10} {:>10} {:>10.2} {:>10.2} {:>10.2} {:>8} {:>9.1}\n",
            r.n, r.m, r.model_ms, r.sweep_ms, r.total_ms, ratio, r.memory_estimate_mb
        ));
    }
    Ok(out)
}
