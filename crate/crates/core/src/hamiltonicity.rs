//! Hamiltonicity classification and constructive certificates.
//!
//! Every construction starts from an optimal spanning stave between `u1` and
//! `un` and merges its paths down to the number the target structure needs:
//! one for a Hamilton path, two for a Hamilton cycle, three for a Hamilton
//! path between an arbitrary pair of vertices. Certificates are checked by
//! [`verify_certificate`] before they are returned.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::model::{build_model, model_from_renumbered, CliquePathModel, ModelError};
use crate::scattering::{
    connected_scattering, min_path_cover, scattering_number, ScatteringError, ScatteringResult,
    ScatteringValue, WitnessSource,
};
use crate::stave::{merge, sweep, Stave, StaveError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HamiltonError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Scattering(ScatteringError),
    #[error(transparent)]
    Stave(#[from] StaveError),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid endpoint pair ({v}, {w})")]
    InvalidPair { v: usize, w: usize },
    #[error("removed set contains endpoint {vertex}")]
    EndpointRemoved { vertex: usize },
    #[error("infeasible: the remaining graph has scattering number {scattering_number}")]
    Infeasible { scattering_number: ScatteringValue },
    #[error("spanning stave has {p} paths, {needed} needed")]
    StaveTooSmall { p: usize, needed: usize },
    #[error("no vertex of the stave path dominates vertex {vertex}")]
    DominationViolated { vertex: usize },
    #[error("constructed certificate failed verification: {0:?}")]
    InvalidCertificate(Vec<CertificateViolation>),
}

impl From<ScatteringError> for HamiltonError {
    fn from(e: ScatteringError) -> Self {
        match e {
            ScatteringError::Model(m) => HamiltonError::Model(m),
            ScatteringError::Stave(s) => HamiltonError::Stave(s),
            other => HamiltonError::Scattering(other),
        }
    }
}

impl HamiltonError {
    pub fn is_not_interval(&self) -> bool {
        matches!(self, HamiltonError::Model(ModelError::NotInterval(_)))
    }
}

/// Hamiltonian properties of an interval graph read off its scattering number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub scattering_number: ScatteringValue,
    pub traceable: bool,
    pub hamiltonian: bool,
    pub hamilton_connected: bool,
    /// Largest `k` such that the graph is `k`-Hamilton-connected. For a
    /// complete graph this is `n - 2` by convention.
    pub k_max: Option<usize>,
    pub complete: bool,
    pub p_star: Option<usize>,
}

pub fn classify(g: &Graph) -> Result<Classification, HamiltonError> {
    Ok(analyze(g)?.classification)
}

/// Everything the linear-time pipeline computes for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    /// Clique path, present when the graph is connected.
    pub model: Option<CliquePathModel>,
    pub scattering: ScatteringResult,
    pub classification: Classification,
}

/// Recognition, sweep, scattering number and classification.
pub fn analyze(g: &Graph) -> Result<Analysis, HamiltonError> {
    let n = g.n();
    if n == 0 {
        return Err(ModelError::Empty.into());
    }
    if g.is_complete() {
        return Ok(Analysis {
            model: Some(build_model(g)?),
            scattering: ScatteringResult {
                value: ScatteringValue::NegInfinity,
                witness: None,
                p_star: None,
            },
            classification: Classification {
                scattering_number: ScatteringValue::NegInfinity,
                traceable: true,
                hamiltonian: n >= 3,
                hamilton_connected: true,
                k_max: Some(n.saturating_sub(2)),
                complete: true,
                p_star: None,
            },
        });
    }
    let (model, scattering) = if g.is_connected() {
        let order = g.locality_order();
        let h = g.renumbered(&order);
        let local = build_model(&h)?;
        let mut scattering = connected_scattering(&h, &local)?;
        if let Some(w) = &mut scattering.witness {
            w.set = VertexSet::from_iter(n, w.set.iter().map(|v| order[v]));
            if let WitnessSource::Neighborhood { vertex } = &mut w.source {
                *vertex = order[*vertex];
            }
        }
        (Some(model_from_renumbered(&local, &order)), scattering)
    } else {
        (None, scattering_number(g)?)
    };
    Ok(Analysis {
        model,
        classification: classification_from(&scattering),
        scattering,
    })
}

/// Classification of a non-complete graph from its scattering number.
pub fn classification_from(result: &ScatteringResult) -> Classification {
    let sc = result.value;
    let k_max = match sc.finite() {
        Some(v) if v <= -1 => Some((-v - 1) as usize),
        _ => None,
    };
    Classification {
        scattering_number: sc,
        traceable: sc.at_most(1),
        hamiltonian: sc.at_most(0),
        hamilton_connected: sc.at_most(-1),
        k_max,
        complete: false,
        p_star: result.p_star,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Path,
    Cycle,
    PathBetween,
    Stave,
    PathCover,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CertificateKind::Path => "path",
            CertificateKind::Cycle => "cycle",
            CertificateKind::PathBetween => "path-between",
            CertificateKind::Stave => "stave",
            CertificateKind::PathCover => "path-cover",
        };
        f.write_str(name)
    }
}

/// A checkable Hamiltonicity witness over vertex indices.
///
/// `vertices` holds the path or cycle sequence (a cycle lists each vertex
/// once); `paths` holds the members of a stave or path cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCertificate {
    pub kind: CertificateKind,
    pub vertices: Vec<usize>,
    pub removed: Vec<usize>,
    pub endpoints: Option<(usize, usize)>,
    pub paths: Vec<Vec<usize>>,
}

impl HamiltonCertificate {
    fn sequence(kind: CertificateKind, vertices: Vec<usize>) -> Self {
        HamiltonCertificate {
            kind,
            vertices,
            removed: Vec::new(),
            endpoints: None,
            paths: Vec::new(),
        }
    }

    fn between(vertices: Vec<usize>, v: usize, w: usize) -> Self {
        HamiltonCertificate {
            endpoints: Some((v, w)),
            ..Self::sequence(CertificateKind::PathBetween, vertices)
        }
    }

    pub fn to_json(&self, g: &Graph) -> CertificateJson {
        let names = |vs: &[usize]| {
            vs.iter()
                .map(|&v| g.label(v).to_string())
                .collect::<Vec<_>>()
        };
        let mut vertices = names(&self.vertices);
        if self.kind == CertificateKind::Cycle {
            if let Some(first) = vertices.first().cloned() {
                vertices.push(first);
            }
        }
        CertificateJson {
            kind: self.kind,
            vertices,
            removed: (!self.removed.is_empty()).then(|| names(&self.removed)),
            endpoints: self
                .endpoints
                .map(|(v, w)| [g.label(v).to_string(), g.label(w).to_string()]),
            paths: (!self.paths.is_empty()).then(|| self.paths.iter().map(|p| names(p)).collect()),
        }
    }

    /// Resolves labels against `g`. A cycle may repeat its first vertex at
    /// the end.
    pub fn from_json(g: &Graph, json: &CertificateJson) -> Result<Self, CertificateViolation> {
        let index = |label: &String| {
            g.index_of(label)
                .ok_or_else(|| CertificateViolation::UnknownLabel {
                    label: label.clone(),
                })
        };
        let list = |labels: &[String]| labels.iter().map(index).collect::<Result<Vec<_>, _>>();
        let mut vertices = list(&json.vertices)?;
        if json.kind == CertificateKind::Cycle
            && vertices.len() > 1
            && vertices.first() == vertices.last()
        {
            vertices.pop();
        }
        let endpoints = match &json.endpoints {
            Some([v, w]) => Some((index(v)?, index(w)?)),
            None => None,
        };
        let paths = match &json.paths {
            Some(paths) => paths
                .iter()
                .map(|p| list(p))
                .collect::<Result<Vec<_>, _>>()?,
            None => Vec::new(),
        };
        Ok(HamiltonCertificate {
            kind: json.kind,
            vertices,
            removed: list(json.removed.as_deref().unwrap_or(&[]))?,
            endpoints,
            paths,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub kind: CertificateKind,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removed: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoints: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateViolation {
    UnknownLabel {
        label: String,
    },
    UnknownVertex {
        vertex: usize,
    },
    RemovedVertexUsed {
        vertex: usize,
    },
    Repeated {
        vertex: usize,
    },
    Missing {
        vertex: usize,
    },
    NotAdjacent {
        u: usize,
        v: usize,
    },
    NotClosed {
        first: usize,
        last: usize,
    },
    TooShort {
        len: usize,
    },
    MissingEndpoints,
    EndpointMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    NoPaths,
}

impl CertificateViolation {
    /// Human-readable description using the labels of `g`.
    pub fn describe(&self, g: &Graph) -> String {
        let l = |v: usize| {
            if v < g.n() {
                g.label(v).to_string()
            } else {
                format!("#{v}")
            }
        };
        match self {
            CertificateViolation::UnknownLabel { label } => {
                format!("unknown vertex label {label:?}")
            }
            CertificateViolation::UnknownVertex { vertex } => {
                format!("vertex index {vertex} out of range")
            }
            CertificateViolation::RemovedVertexUsed { vertex } => {
                format!("removed vertex {} appears in the certificate", l(*vertex))
            }
            CertificateViolation::Repeated { vertex } => {
                format!("vertex {} visited more than once", l(*vertex))
            }
            CertificateViolation::Missing { vertex } => {
                format!("vertex {} not visited", l(*vertex))
            }
            CertificateViolation::NotAdjacent { u, v } => {
                format!(
                    "consecutive vertices {} and {} are not adjacent",
                    l(*u),
                    l(*v)
                )
            }
            CertificateViolation::NotClosed { first, last } => {
                format!(
                    "cycle does not close: {} and {} are not adjacent",
                    l(*last),
                    l(*first)
                )
            }
            CertificateViolation::TooShort { len } => {
                format!("sequence of length {len} is too short")
            }
            CertificateViolation::MissingEndpoints => "endpoints are missing".to_string(),
            CertificateViolation::EndpointMismatch { expected, found } => format!(
                "endpoints {}..{} do not match requested {}..{}",
                l(found.0),
                l(found.1),
                l(expected.0),
                l(expected.1)
            ),
            CertificateViolation::NoPaths => "certificate lists no paths".to_string(),
        }
    }
}

/// Structural check of a certificate against `g` minus its removed set.
pub fn verify_certificate(
    g: &Graph,
    cert: &HamiltonCertificate,
) -> Result<(), Vec<CertificateViolation>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut removed = vec![false; n];
    for &v in &cert.removed {
        if v >= n {
            out.push(CertificateViolation::UnknownVertex { vertex: v });
        } else {
            removed[v] = true;
        }
    }
    let mut seen = vec![false; n];
    let mut visit = |v: usize, out: &mut Vec<CertificateViolation>| -> bool {
        if v >= n {
            out.push(CertificateViolation::UnknownVertex { vertex: v });
            return false;
        }
        if removed[v] {
            out.push(CertificateViolation::RemovedVertexUsed { vertex: v });
        }
        if seen[v] {
            out.push(CertificateViolation::Repeated { vertex: v });
        }
        seen[v] = true;
        true
    };
    let check_walk = |seq: &[usize], out: &mut Vec<CertificateViolation>| {
        for pair in seq.windows(2) {
            let (u, v) = (pair[0], pair[1]);
            if u < n && v < n && !g.has_edge(u, v) {
                out.push(CertificateViolation::NotAdjacent { u, v });
            }
        }
    };

    match cert.kind {
        CertificateKind::Path | CertificateKind::PathBetween | CertificateKind::Cycle => {
            for &v in &cert.vertices {
                visit(v, &mut out);
            }
            check_walk(&cert.vertices, &mut out);
            if cert.kind == CertificateKind::Cycle {
                let len = cert.vertices.len();
                if len < 3 {
                    out.push(CertificateViolation::TooShort { len });
                } else {
                    let (first, last) = (cert.vertices[0], cert.vertices[len - 1]);
                    if first < n && last < n && !g.has_edge(first, last) {
                        out.push(CertificateViolation::NotClosed { first, last });
                    }
                }
            }
            if cert.kind == CertificateKind::PathBetween {
                match (cert.endpoints, cert.vertices.first(), cert.vertices.last()) {
                    (None, _, _) => out.push(CertificateViolation::MissingEndpoints),
                    (Some(expected), Some(&a), Some(&b)) if (a, b) != expected => {
                        out.push(CertificateViolation::EndpointMismatch {
                            expected,
                            found: (a, b),
                        })
                    }
                    (Some(_), None, _) | (Some(_), _, None) => {
                        out.push(CertificateViolation::TooShort { len: 0 })
                    }
                    _ => {}
                }
            }
        }
        CertificateKind::Stave => match cert.endpoints {
            None => out.push(CertificateViolation::MissingEndpoints),
            Some((u, w)) => {
                if cert.paths.is_empty() {
                    out.push(CertificateViolation::NoPaths);
                }
                for &end in &[u, w] {
                    visit(end, &mut out);
                }
                let mut direct = 0;
                for path in &cert.paths {
                    if path.len() < 2 {
                        out.push(CertificateViolation::TooShort { len: path.len() });
                        continue;
                    }
                    let found = (path[0], path[path.len() - 1]);
                    if found != (u, w) {
                        out.push(CertificateViolation::EndpointMismatch {
                            expected: (u, w),
                            found,
                        });
                    }
                    if path.len() == 2 {
                        direct += 1;
                        if direct > 1 {
                            out.push(CertificateViolation::Repeated { vertex: w });
                        }
                    }
                    for &v in &path[1..path.len() - 1] {
                        visit(v, &mut out);
                    }
                    check_walk(path, &mut out);
                }
            }
        },
        CertificateKind::PathCover => {
            if cert.paths.is_empty() && removed.iter().filter(|&&r| !r).count() > 0 {
                out.push(CertificateViolation::NoPaths);
            }
            for path in &cert.paths {
                if path.is_empty() {
                    out.push(CertificateViolation::TooShort { len: 0 });
                }
                for &v in path {
                    visit(v, &mut out);
                }
                check_walk(path, &mut out);
            }
        }
    }

    for v in 0..n {
        if !removed[v] && !seen[v] {
            out.push(CertificateViolation::Missing { vertex: v });
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

fn checked(g: &Graph, cert: HamiltonCertificate) -> Result<HamiltonCertificate, HamiltonError> {
    verify_certificate(g, &cert).map_err(HamiltonError::InvalidCertificate)?;
    Ok(cert)
}

/// `a` followed by `b`, where `b` starts at the last vertex of `a`.
fn join(mut a: Vec<usize>, b: &[usize]) -> Vec<usize> {
    debug_assert_eq!(a.last(), b.first());
    a.extend_from_slice(&b[1..]);
    a
}

fn reversed(path: &[usize]) -> Vec<usize> {
    path.iter().rev().copied().collect()
}

/// Model and spanning stave of a connected, non-complete graph, or `None`
/// when the graph has no spanning stave between its extremes.
fn stave_of(g: &Graph) -> Result<Option<(CliquePathModel, Stave)>, HamiltonError> {
    let model = build_model(g)?;
    let (result, _) = sweep(&model)?;
    Ok(result.ok().map(|stave| (model, stave)))
}

/// Merges paths `keep..` of a stave into path `keep`, leaving `keep + 1`
/// paths.
fn merge_down(
    model: &CliquePathModel,
    stave: &Stave,
    keep: usize,
) -> Result<Vec<Vec<usize>>, HamiltonError> {
    let mut paths: Vec<Vec<usize>> = stave.paths[..keep].to_vec();
    let tail = merge(model, &stave.paths[keep], &stave.paths[keep + 1..])?;
    paths.push(tail);
    Ok(paths)
}

fn check_vertex(g: &Graph, vertex: usize) -> Result<(), HamiltonError> {
    if vertex >= g.n() {
        return Err(HamiltonError::VertexOutOfRange { vertex, n: g.n() });
    }
    Ok(())
}

/// Hamilton path from `u1` to `un`, or `None` if the graph is not traceable.
pub fn hamilton_path(g: &Graph) -> Result<Option<HamiltonCertificate>, HamiltonError> {
    let n = g.n();
    if n == 0 {
        return Err(ModelError::Empty.into());
    }
    if g.is_complete() {
        return checked(
            g,
            HamiltonCertificate::sequence(CertificateKind::Path, (0..n).collect()),
        )
        .map(Some);
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let Some((model, stave)) = stave_of(g)? else {
        return Ok(None);
    };
    let path = merge(&model, &stave.paths[0], &stave.paths[1..])?;
    checked(
        g,
        HamiltonCertificate::sequence(CertificateKind::Path, path),
    )
    .map(Some)
}

/// Hamilton cycle, or `None` if the graph is not hamiltonian. Graphs on
/// fewer than three vertices have none.
pub fn hamilton_cycle(g: &Graph) -> Result<Option<HamiltonCertificate>, HamiltonError> {
    let n = g.n();
    if n == 0 {
        return Err(ModelError::Empty.into());
    }
    if n < 3 {
        return Ok(None);
    }
    if g.is_complete() {
        return checked(
            g,
            HamiltonCertificate::sequence(CertificateKind::Cycle, (0..n).collect()),
        )
        .map(Some);
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let Some((model, stave)) = stave_of(g)? else {
        return Ok(None);
    };
    if stave.p() < 2 {
        return Ok(None);
    }
    let two = merge_down(&model, &stave, 1)?;
    let (p, q) = (&two[0], &two[1]);
    let mut cycle = p.clone();
    cycle.extend(q[1..q.len() - 1].iter().rev());
    checked(
        g,
        HamiltonCertificate::sequence(CertificateKind::Cycle, cycle),
    )
    .map(Some)
}

/// Outcome of a request for a Hamilton path between two given vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BetweenResult {
    Path(HamiltonCertificate),
    /// The graph is not hamiltonian, so no such path exists for some pair
    /// and none is attempted.
    NoPath {
        scattering_number: ScatteringValue,
    },
    /// Scattering number 0 or 1: the answer depends on the pair and is not
    /// decided here.
    Unknown {
        scattering_number: ScatteringValue,
    },
}

/// Hamilton path from `v` to `w`. Constructed whenever the graph is
/// Hamilton-connected.
pub fn hamilton_path_between(
    g: &Graph,
    v: usize,
    w: usize,
) -> Result<BetweenResult, HamiltonError> {
    check_vertex(g, v)?;
    check_vertex(g, w)?;
    if v == w {
        return Err(HamiltonError::InvalidPair { v, w });
    }
    if g.is_complete() {
        let mut path = vec![v];
        path.extend((0..g.n()).filter(|&x| x != v && x != w));
        path.push(w);
        return checked(g, HamiltonCertificate::between(path, v, w)).map(BetweenResult::Path);
    }
    let sc = scattering_number(g)?.value;
    match sc.finite() {
        Some(k) if k >= 2 => {
            return Ok(BetweenResult::NoPath {
                scattering_number: sc,
            })
        }
        Some(k) if k >= 0 => {
            return Ok(BetweenResult::Unknown {
                scattering_number: sc,
            })
        }
        _ => {}
    }
    let (model, stave) = stave_of(g)?.ok_or(StaveError::MergeInfeasible)?;
    if stave.p() < 3 {
        return Err(HamiltonError::StaveTooSmall {
            p: stave.p(),
            needed: 3,
        });
    }
    let three = merge_down(&model, &stave, 2)?;
    let path = three_stave_path(g, &model, &three, v, w)?;
    checked(g, HamiltonCertificate::between(path, v, w)).map(BetweenResult::Path)
}

/// Position of `x` among the internal vertices of one of `paths`.
fn locate(paths: &[Vec<usize>], x: usize) -> Option<(usize, usize)> {
    paths.iter().enumerate().find_map(|(i, path)| {
        path[1..path.len() - 1]
            .iter()
            .position(|&y| y == x)
            .map(|pos| (i, pos + 1))
    })
}

/// The two path indices other than `i`, in increasing order.
fn rest(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn third(i: usize, j: usize) -> usize {
    3 - i - j
}

/// Hamilton path from `v` to `w` built from a spanning 3-stave.
fn three_stave_path(
    g: &Graph,
    model: &CliquePathModel,
    paths: &[Vec<usize>],
    v: usize,
    w: usize,
) -> Result<Vec<usize>, HamiltonError> {
    let (u1, un) = (model.u1(), model.un());
    if v == un || w == u1 {
        let mut path = three_stave_path(g, model, paths, w, v)?;
        path.reverse();
        return Ok(path);
    }
    if v == u1 && w == un {
        return Ok(merge(model, &paths[0], &paths[1..])?);
    }
    if v == u1 {
        let (r, pos) = locate(paths, w).expect("internal vertex");
        let (p, q) = rest(r);
        let (r1, r2) = paths[r].split_at(pos);
        let head = merge(model, &paths[p], &[paths[q].clone(), r1.to_vec()])?;
        return Ok(join(head, &reversed(r2)));
    }
    if w == un {
        let (r, pos) = locate(paths, v).expect("internal vertex");
        let (p, q) = rest(r);
        let (r1, r2) = paths[r].split_at(pos + 1);
        let tail = merge(model, &paths[p], &[paths[q].clone(), r2.to_vec()])?;
        return Ok(join(reversed(r1), &tail));
    }

    let (qi, vpos) = locate(paths, v).expect("internal vertex");
    let (ri, wpos) = locate(paths, w).expect("internal vertex");
    if qi != ri {
        let p = third(qi, ri);
        let (q1, q2) = paths[qi].split_at(vpos + 1);
        let (r1, r2) = paths[ri].split_at(wpos);
        let middle = merge(model, &paths[p], &[q2.to_vec(), r1.to_vec()])?;
        return Ok(join(join(reversed(q1), &middle), &reversed(r2)));
    }
    if wpos < vpos {
        let mut path = three_stave_path(g, model, paths, w, v)?;
        path.reverse();
        return Ok(path);
    }

    let q = &paths[qi];
    let q1 = &q[..=vpos];
    let q2 = &q[vpos + 1..wpos];
    let q3 = &q[wpos..];
    let (a, b) = rest(qi);
    if q2.is_empty() {
        let middle = merge(model, &paths[a], &[paths[b].clone()])?;
        return Ok(join(join(reversed(q1), &middle), &reversed(q3)));
    }
    let head = q2[0];
    for (pi, ri) in [(a, b), (b, a)] {
        let r = &paths[ri];
        let Some(zpos) = r[..r.len() - 1].iter().position(|&z| g.has_edge(z, head)) else {
            continue;
        };
        let mut r_prime = r[..=zpos].to_vec();
        r_prime.extend_from_slice(q2);
        let r2 = r[zpos + 1..].to_vec();
        let middle = merge(model, &paths[pi], &[r_prime, r2])?;
        return Ok(join(join(reversed(q1), &middle), &reversed(q3)));
    }
    Err(HamiltonError::DominationViolated { vertex: head })
}

/// Hamilton path from `v` to `w` in `G - removed`.
pub fn hamilton_path_avoiding(
    g: &Graph,
    removed: &VertexSet,
    v: usize,
    w: usize,
) -> Result<HamiltonCertificate, HamiltonError> {
    check_vertex(g, v)?;
    check_vertex(g, w)?;
    if v == w {
        return Err(HamiltonError::InvalidPair { v, w });
    }
    for x in [v, w] {
        if removed.contains(x) {
            return Err(HamiltonError::EndpointRemoved { vertex: x });
        }
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&x| !removed.contains(x)).collect();
    let (h, map) = g.induced_on(&keep);
    let local = |x: usize| map.binary_search(&x).expect("kept vertex");
    let result = if h.is_connected() {
        hamilton_path_between(&h, local(v), local(w))?
    } else {
        BetweenResult::NoPath {
            scattering_number: scattering_number(&h)?.value,
        }
    };
    match result {
        BetweenResult::Path(cert) => {
            let path = cert.vertices.iter().map(|&x| map[x]).collect();
            let mut cert = HamiltonCertificate::between(path, v, w);
            cert.removed = removed.iter().collect();
            checked(g, cert)
        }
        BetweenResult::NoPath { scattering_number }
        | BetweenResult::Unknown { scattering_number } => {
            Err(HamiltonError::Infeasible { scattering_number })
        }
    }
}

/// Optimal spanning stave between `u1` and `un`, or `None` if none exists.
pub fn stave_certificate(g: &Graph) -> Result<Option<HamiltonCertificate>, HamiltonError> {
    let n = g.n();
    if n == 0 {
        return Err(ModelError::Empty.into());
    }
    if n == 1 || !g.is_connected() {
        return Ok(None);
    }
    let (u1, un, paths) = if g.is_complete() {
        let mut paths = vec![vec![0, 1]];
        paths.extend((2..n).map(|x| vec![0, x, 1]));
        (0, 1, paths)
    } else {
        match stave_of(g)? {
            Some((_, stave)) => (stave.u1, stave.un, stave.paths),
            None => return Ok(None),
        }
    };
    let cert = HamiltonCertificate {
        endpoints: Some((u1, un)),
        paths,
        ..HamiltonCertificate::sequence(CertificateKind::Stave, Vec::new())
    };
    checked(g, cert).map(Some)
}

/// Minimum path cover as a certificate.
pub fn path_cover_certificate(g: &Graph) -> Result<HamiltonCertificate, HamiltonError> {
    let cover = min_path_cover(g)?;
    let cert = HamiltonCertificate {
        paths: cover.paths,
        ..HamiltonCertificate::sequence(CertificateKind::PathCover, Vec::new())
    };
    checked(g, cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_hamilton, HamiltonMode};

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn diamond() -> Graph {
        graph(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    fn k5_minus_e() -> Graph {
        let edges: Vec<_> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .filter(|&e| e != (0, 4))
            .collect();
        graph(5, &edges)
    }

    fn p3() -> Graph {
        graph(3, &[(0, 1), (1, 2)])
    }

    fn star() -> Graph {
        graph(4, &[(0, 1), (0, 2), (0, 3)])
    }

    #[test]
    fn classify_examples() {
        let c = classify(&diamond()).unwrap();
        assert_eq!(c.scattering_number, ScatteringValue::Finite(0));
        assert!(c.hamiltonian && !c.hamilton_connected);

        let c = classify(&k5_minus_e()).unwrap();
        assert_eq!(c.scattering_number, ScatteringValue::Finite(-1));
        assert_eq!(c.k_max, Some(0));

        let c = classify(&p3()).unwrap();
        assert_eq!(c.scattering_number, ScatteringValue::Finite(1));
        assert!(c.traceable && !c.hamiltonian);

        let c = classify(&Graph::complete(5)).unwrap();
        assert!(c.complete);
        assert_eq!(c.k_max, Some(3));
        assert!(!classify(&Graph::complete(2)).unwrap().hamiltonian);
    }

    #[test]
    fn classify_rejects_cycles() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(classify(&c4).unwrap_err().is_not_interval());
    }

    #[test]
    fn paths() {
        assert_eq!(
            hamilton_path(&p3()).unwrap().unwrap().vertices,
            vec![0, 1, 2]
        );
        let path = hamilton_path(&diamond()).unwrap().unwrap().vertices;
        assert_eq!((path[0], path[3]), (0, 3));
        assert!(hamilton_path(&star()).unwrap().is_none());
    }

    #[test]
    fn cycles() {
        let cycle = hamilton_cycle(&diamond()).unwrap().unwrap();
        assert_eq!(cycle.vertices.len(), 4);
        assert_eq!(
            hamilton_cycle(&Graph::complete(3))
                .unwrap()
                .unwrap()
                .vertices,
            vec![0, 1, 2]
        );
        assert!(hamilton_cycle(&p3()).unwrap().is_none());
    }

    #[test]
    fn between_examples() {
        let g = k5_minus_e();
        match hamilton_path_between(&g, 0, 4).unwrap() {
            BetweenResult::Path(cert) => assert_eq!(cert.vertices.len(), 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            hamilton_path_between(&star(), 1, 2).unwrap(),
            BetweenResult::NoPath { .. }
        ));
        assert!(matches!(
            hamilton_path_between(&diamond(), 1, 2).unwrap(),
            BetweenResult::Unknown { .. }
        ));
        assert!(!oracle_hamilton(&diamond(), HamiltonMode::Between(1, 2)).unwrap());
        assert_eq!(
            hamilton_path_between(&g, 2, 2),
            Err(HamiltonError::InvalidPair { v: 2, w: 2 })
        );
    }

    #[test]
    fn between_all_pairs_of_k5_minus_e() {
        let g = k5_minus_e();
        for v in 0..5 {
            for w in 0..5 {
                if v != w {
                    assert!(matches!(
                        hamilton_path_between(&g, v, w).unwrap(),
                        BetweenResult::Path(_)
                    ));
                }
            }
        }
    }

    #[test]
    fn avoiding() {
        let g = Graph::complete(5);
        let s = VertexSet::from_iter(5, [2]);
        let cert = hamilton_path_avoiding(&g, &s, 0, 4).unwrap();
        assert_eq!(cert.vertices.len(), 4);
        assert_eq!(cert.removed, vec![2]);

        let g = k5_minus_e();
        let s = VertexSet::from_iter(5, [1]);
        assert!(matches!(
            hamilton_path_avoiding(&g, &s, 0, 4),
            Err(HamiltonError::Infeasible { .. })
        ));
        assert_eq!(
            hamilton_path_avoiding(&g, &s, 1, 4),
            Err(HamiltonError::EndpointRemoved { vertex: 1 })
        );
    }

    #[test]
    fn verify_examples() {
        let g = p3();
        let good = HamiltonCertificate::sequence(CertificateKind::Path, vec![0, 1, 2]);
        assert!(verify_certificate(&g, &good).is_ok());
        let bad = HamiltonCertificate::sequence(CertificateKind::Path, vec![0, 2, 1]);
        assert_eq!(
            verify_certificate(&g, &bad).unwrap_err(),
            vec![CertificateViolation::NotAdjacent { u: 0, v: 2 }]
        );
        let cycle = HamiltonCertificate::sequence(CertificateKind::Cycle, vec![0, 1, 3, 2]);
        assert!(verify_certificate(&diamond(), &cycle).is_ok());
        let short = HamiltonCertificate::sequence(CertificateKind::Path, vec![0, 1]);
        assert_eq!(
            verify_certificate(&g, &short).unwrap_err(),
            vec![CertificateViolation::Missing { vertex: 2 }]
        );
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::with_labels(
            ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let cert = hamilton_cycle(&g).unwrap().unwrap();
        let json = cert.to_json(&g);
        assert_eq!(json.vertices.first(), json.vertices.last());
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.starts_with(r#"{"kind":"cycle","vertices":["#));
        let back: CertificateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(HamiltonCertificate::from_json(&g, &back).unwrap(), cert);

        let mut tampered = json.clone();
        tampered.vertices[1] = "z".into();
        assert_eq!(
            HamiltonCertificate::from_json(&g, &tampered),
            Err(CertificateViolation::UnknownLabel { label: "z".into() })
        );
    }

    #[test]
    fn staves_and_covers() {
        let cert = stave_certificate(&diamond()).unwrap().unwrap();
        assert_eq!(cert.paths.len(), 2);
        assert_eq!(cert.endpoints, Some((0, 3)));
        assert_eq!(
            stave_certificate(&Graph::complete(4))
                .unwrap()
                .unwrap()
                .paths
                .len(),
            3
        );
        assert!(stave_certificate(&star()).unwrap().is_none());
        assert_eq!(path_cover_certificate(&star()).unwrap().paths.len(), 2);
    }
}
