use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use interval_hamilton::graph::component_lists;
use interval_hamilton::hamiltonicity::{
    analyze, hamilton_cycle, hamilton_path, path_cover_certificate, stave_certificate, Analysis, CertificateJson,
    Classification,
};
use interval_hamilton::oracle::{oracle_max_stave, oracle_scattering_number, STAVE_LIMIT};
use interval_hamilton::scattering::ScatteringValue;
use interval_hamilton::Graph;
use serde::Serialize;

use crate::error::CliError;
use crate::input::{read_graph, InputFormat};

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Graph file.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
    /// Emit the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Include Hamilton path, cycle, stave and path cover certificates.
    #[arg(long)]
    pub certificates: bool,
    /// Include wall-clock timings (makes the output non-deterministic).
    #[arg(long)]
    pub timing: bool,
    /// Cross-check against the brute-force oracles (small graphs only).
    #[arg(long, hide = true)]
    pub oracle: bool,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub input: InputSummary,
    pub model: Option<ModelSummary>,
    pub scattering_number: ScatteringValue,
    pub scattering_set: Vec<String>,
    pub components_after_removal: usize,
    pub p_star: Option<usize>,
    pub classification: Classification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Certificates>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<Timing>,
}

#[derive(Debug, Serialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
    pub interval: bool,
    pub components: usize,
}

#[derive(Debug, Serialize)]
pub struct ModelSummary {
    pub s: usize,
    pub u1: String,
    pub un: String,
}

#[derive(Debug, Serialize)]
pub struct Certificates {
    pub hamilton_path: Option<CertificateJson>,
    pub hamilton_cycle: Option<CertificateJson>,
    pub stave: Option<CertificateJson>,
    pub path_cover: CertificateJson,
}

#[derive(Debug, Serialize)]
pub struct OracleCheck {
    pub scattering_number: Option<ScatteringValue>,
    pub max_stave: Option<usize>,
    pub agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub parse: f64,
    pub pipeline: f64,
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub fn build_report(g: &Graph, args: &AnalyzeArgs, parse_ms: f64) -> Result<Report, CliError> {
    let start = Instant::now();
    let Analysis {
        model,
        scattering,
        classification,
    } = analyze(g)?;
    let pipeline_ms = millis(start);

    if let Some(w) = &scattering.witness {
        if !w.recheck(g) {
            return Err(CliError::Internal("scattering witness does not reproduce its value".into()));
        }
    }
    let witness = scattering.to_json(g);
    let model_summary = model.as_ref().map(|m| ModelSummary {
        s: m.s(),
        u1: g.label(m.u1()).to_string(),
        un: g.label(m.un()).to_string(),
    });

    let certificates = if args.certificates {
        Some(Certificates {
            hamilton_path: hamilton_path(g)?.map(|c| c.to_json(g)),
            hamilton_cycle: hamilton_cycle(g)?.map(|c| c.to_json(g)),
            stave: stave_certificate(g)?.map(|c| c.to_json(g)),
            path_cover: path_cover_certificate(g)?.to_json(g),
        })
    } else {
        None
    };

    let oracle = if args.oracle {
        let sc = oracle_scattering_number(g).ok();
        let max_stave = match &model {
            Some(m) if g.n() <= STAVE_LIMIT && !classification.complete => {
                oracle_max_stave(g, m.u1(), m.un()).ok()
            }
            _ => None,
        };
        let agrees = sc.is_none_or(|v| v == scattering.value)
            && max_stave.is_none_or(|p| p == scattering.p_star.unwrap_or(0));
        Some(OracleCheck {
            scattering_number: sc,
            max_stave,
            agrees,
        })
    } else {
        None
    };

    Ok(Report {
        input: InputSummary {
            n: g.n(),
            m: g.m(),
            interval: true,
            components: component_lists(g).len(),
        },
        model: model_summary,
        scattering_number: scattering.value,
        scattering_set: witness.set,
        components_after_removal: witness.components_after_removal,
        p_star: scattering.p_star,
        classification,
        certificates,
        oracle,
        timing_ms: args.timing.then_some(Timing {
            parse: parse_ms,
            pipeline: pipeline_ms,
        }),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let r = report;
    out.push_str(&format!(
        "vertices: {}  edges: {}  components: {}\n",
        r.input.n, r.input.m, r.input.components
    ));
    if let Some(m) = &r.model {
        out.push_str(&format!("clique path: {} cliques, u1 = {}, un = {}\n", m.s, m.u1, m.un));
    }
    out.push_str(&format!("scattering number: {}", r.scattering_number));
    if r.scattering_number != ScatteringValue::NegInfinity {
        out.push_str(&format!(
            "  (set {{{}}} leaves {} components)",
            r.scattering_set.join(", "),
            r.components_after_removal
        ));
    }
    out.push('\n');
    if let Some(p) = r.p_star {
        out.push_str(&format!("optimal spanning stave: {p} paths\n"));
    }
    let c = &r.classification;
    out.push_str(&format!(
        "traceable: {}  hamiltonian: {}  hamilton-connected: {}\n",
        yes_no(c.traceable),
        yes_no(c.hamiltonian),
        yes_no(c.hamilton_connected)
    ));
    match c.k_max {
        Some(k) => out.push_str(&format!("k-hamilton-connected up to k = {k}\n")),
        None => out.push_str("k-hamilton-connected: none\n"),
    }
    if let Some(certs) = &r.certificates {
        let show = |name: &str, cert: &Option<CertificateJson>| match cert {
            Some(c) => format!("{name}: {}\n", c.vertices.join(" ")),
            None => format!("{name}: none\n"),
        };
        out.push_str(&show("hamilton path", &certs.hamilton_path));
        out.push_str(&show("hamilton cycle", &certs.hamilton_cycle));
        if let Some(stave) = &certs.stave {
            for path in stave.paths.iter().flatten() {
                out.push_str(&format!("stave path: {}\n", path.join(" ")));
            }
        }
        for path in certs.path_cover.paths.iter().flatten() {
            out.push_str(&format!("cover path: {}\n", path.join(" ")));
        }
    }
    if let Some(o) = &r.oracle {
        out.push_str(&format!("oracle agrees: {}\n", yes_no(o.agrees)));
    }
    if let Some(t) = &r.timing_ms {
        out.push_str(&format!("time: parse {:.3} ms, pipeline {:.3} ms\n", t.parse, t.pipeline));
    }
    out
}

pub fn run(args: &AnalyzeArgs) -> Result<String, CliError> {
    let start = Instant::now();
    let g = read_graph(&args.input, args.format)?;
    let parse_ms = millis(start);
    let report = build_report(&g, args, parse_ms)?;
    let text = if args.json {
        let mut s = serde_json::to_string_pretty(&report).map_err(|e| CliError::Internal(e.to_string()))?;
        s.push('\n');
        s
    } else {
        render_text(&report)
    };
    if report.oracle.as_ref().is_some_and(|o| !o.agrees) {
        return Err(CliError::Internal(format!("oracle disagrees\n{text}")));
    }
    Ok(text)
}
