use std::path::PathBuf;

use clap::{Args, ValueEnum};
use interval_hamilton::hamiltonicity::{
    analyze, hamilton_cycle, hamilton_path, hamilton_path_avoiding, hamilton_path_between, path_cover_certificate,
    stave_certificate, verify_certificate, BetweenResult, CertificateJson, HamiltonCertificate,
};
use interval_hamilton::Graph;

use crate::error::CliError;
use crate::input::{read_graph, read_text, vertex, vertex_set, InputFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Path,
    Cycle,
    PathBetween,
    Stave,
    PathCover,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Graph file.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
    #[arg(long, value_enum)]
    pub cert_kind: KindArg,
    /// Endpoint labels for path-between.
    #[arg(long, num_args = 2, value_names = ["V", "W"])]
    pub pair: Option<Vec<String>>,
    /// Labels of vertices to delete first (path-between only).
    #[arg(long, num_args = 1..)]
    pub remove: Vec<String>,
    /// Write the certificate here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Graph file.
    pub graph: PathBuf,
    /// Certificate JSON file.
    pub certificate: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
}

fn certify_graph(g: &Graph, args: &CertifyArgs) -> Result<HamiltonCertificate, CliError> {
    let analysis = analyze(g)?;
    let sc = analysis.classification.scattering_number;
    if !args.remove.is_empty() && args.cert_kind != KindArg::PathBetween {
        return Err(CliError::Usage("--remove applies to path-between only".into()));
    }
    let missing = |what: &str| CliError::NoCertificate(format!("no {what} exists (scattering number {sc})"));
    match args.cert_kind {
        KindArg::Path => hamilton_path(g)?.ok_or_else(|| missing("Hamilton path")),
        KindArg::Cycle => hamilton_cycle(g)?.ok_or_else(|| missing("Hamilton cycle")),
        KindArg::Stave => stave_certificate(g)?.ok_or_else(|| missing("spanning stave")),
        KindArg::PathCover => Ok(path_cover_certificate(g)?),
        KindArg::PathBetween => {
            let pair = args
                .pair
                .as_ref()
                .ok_or_else(|| CliError::Usage("path-between needs --pair V W".into()))?;
            let (v, w) = (vertex(g, &pair[0])?, vertex(g, &pair[1])?);
            if !args.remove.is_empty() {
                let removed = vertex_set(g, &args.remove)?;
                return Ok(hamilton_path_avoiding(g, &removed, v, w)?);
            }
            match hamilton_path_between(g, v, w)? {
                BetweenResult::Path(cert) => Ok(cert),
                BetweenResult::NoPath { scattering_number } => Err(CliError::NoCertificate(format!(
                    "graph is not hamiltonian (scattering number {scattering_number}); no path constructed"
                ))),
                BetweenResult::Unknown { scattering_number } => Err(CliError::Unknown(scattering_number)),
            }
        }
    }
}

pub fn certify(args: &CertifyArgs) -> Result<String, CliError> {
    let g = read_graph(&args.input, args.format)?;
    let cert = certify_graph(&g, args)?;
    let json = cert.to_json(&g);
    let back = HamiltonCertificate::from_json(&g, &json).map_err(|v| CliError::Internal(v.describe(&g)))?;
    if let Err(violations) = verify_certificate(&g, &back) {
        let text = violations.iter().map(|v| v.describe(&g)).collect::<Vec<_>>().join("; ");
        return Err(CliError::Internal(format!("emitted certificate fails verification: {text}")));
    }
    let mut text = serde_json::to_string_pretty(&json).map_err(|e| CliError::Internal(e.to_string()))?;
    text.push('\n');
    if let Some(path) = &args.output {
        std::fs::write(path, &text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        })?;
        return Ok(String::new());
    }
    Ok(text)
}

pub fn verify(args: &VerifyArgs) -> Result<String, CliError> {
    let g = read_graph(&args.graph, args.format)?;
    let text = read_text(&args.certificate)?;
    let json: CertificateJson =
        serde_json::from_str(&text).map_err(|e| CliError::Rejected(vec![format!("malformed certificate: {e}")]))?;
    let cert = HamiltonCertificate::from_json(&g, &json).map_err(|v| CliError::Rejected(vec![v.describe(&g)]))?;
    match verify_certificate(&g, &cert) {
        Ok(()) => Ok(format!("ok: valid {} certificate\n", cert.kind)),
        Err(violations) => Err(CliError::Rejected(violations.iter().map(|v| v.describe(&g)).collect())),
    }
}
