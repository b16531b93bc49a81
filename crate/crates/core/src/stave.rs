//! The left-to-right stave sweep over a clique path, the merge of path
//! systems into a single `u1`–`un` path, and the sweep's event trace.
//!
//! The sweep keeps a set of paths growing from `u1`. At each time step `t`
//! the path whose terminal ends earliest absorbs the free vertices that end
//! at `t`; then every path whose terminal ends at `t` is extended by the free
//! separator vertex of `C_t ∩ C_{t+1}` with the smallest end point, or dies.
//! Paths that survive to `C_s` are closed at `un`.
//!
//! The engine also supports virtual universal vertices (ids `n..`), which
//! simulate the join of the graph with a clique, and a restart mode used for
//! minimum path covers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::model::CliquePathModel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StaveError {
    #[error("model has a single clique; the sweep needs at least two")]
    SingleClique,
    #[error("paths cannot be merged into a single u1-un path")]
    MergeInfeasible,
    #[error("path does not run from u1 to un")]
    BadEndpoints,
}

/// Internally vertex-disjoint paths sharing the endpoints `u1` and `un`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stave {
    pub u1: usize,
    pub un: usize,
    pub paths: Vec<Vec<usize>>,
}

impl Stave {
    pub fn p(&self) -> usize {
        self.paths.len()
    }

    pub fn to_json(&self, g: &Graph) -> StaveJson {
        StaveJson {
            p: self.p(),
            paths: self
                .paths
                .iter()
                .map(|path| path.iter().map(|&v| g.label(v).to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StaveJson {
    pub p: usize,
    pub paths: Vec<Vec<String>>,
}

/// Paths still growing and paths that died during the sweep.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathSystem {
    pub active: Vec<Vec<usize>>,
    pub finalized: Vec<Vec<usize>>,
}

impl PathSystem {
    pub fn p(&self) -> usize {
        self.active.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DecrementEvent {
    pub t: usize,
    pub path: usize,
    pub p_after: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SweepOutcome {
    Success { p: usize },
    Failure { t: usize },
}

/// Activation and deactivation times, path links and death events of one
/// sweep. Vertex ids at or above `n_real` are virtual universal vertices.
///
/// `u1` has no activation time; its deactivation time is 1 once any path
/// leaves it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepTrace {
    pub n_real: usize,
    pub s: usize,
    pub activation: Vec<Option<usize>>,
    pub deactivation: Vec<Option<usize>>,
    pub pred: Vec<Option<usize>>,
    pub succ: Vec<Option<usize>>,
    pub path_of: Vec<Option<usize>>,
    /// Vertex sequence of each path by id, as left by the main loop.
    pub paths: Vec<Vec<usize>>,
    /// Path chosen to absorb leftover vertices at each `t = 1..s-1`.
    pub selections: Vec<usize>,
    pub events: Vec<DecrementEvent>,
    pub outcome: SweepOutcome,
}

impl SweepTrace {
    pub fn last_decrement(&self) -> Option<&DecrementEvent> {
        self.events.last()
    }
}

/// Sweep knobs beyond the plain algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepOptions {
    /// Number of paths started at `u1`; `None` means one per neighbor.
    pub initial_paths: Option<usize>,
    /// Virtual vertices adjacent to everything, ids `n..n+universal`.
    pub universal: usize,
    /// Start a new path when the last one dies instead of failing.
    pub restart: bool,
}

/// Result of the main loop, before the paths are closed at `un`.
#[derive(Debug, Clone)]
pub struct SweepRun {
    pub system: PathSystem,
    pub trace: SweepTrace,
    /// Paths finished in restart mode, in order.
    pub restarted: Vec<Vec<usize>>,
    covered: Vec<bool>,
}

impl SweepRun {
    pub fn succeeded(&self) -> bool {
        matches!(self.trace.outcome, SweepOutcome::Success { .. })
    }
}

struct Engine<'a> {
    model: &'a CliquePathModel,
    n: usize,
    s: usize,
    universal_next: usize,
    universal_end: usize,
    covered: Vec<bool>,
    sep_offset: Vec<usize>,
    sep_list: Vec<usize>,
    sep_ptr: Vec<usize>,
    paths: Vec<Vec<usize>>,
    alive: Vec<bool>,
    alive_count: usize,
    heap: BinaryHeap<Reverse<(usize, usize)>>,
    by_end: Vec<Vec<usize>>,
    trace: SweepTrace,
}

impl<'a> Engine<'a> {
    fn new(model: &'a CliquePathModel, universal: usize) -> Self {
        let n = model.n();
        let s = model.s();
        let total = n + universal;

        // Separator lists for t = 1..s-1, each sorted by (end, index).
        let mut diff = vec![0isize; s + 2];
        for v in 0..n {
            let (l, r) = (model.start(v), model.end(v));
            if l < r {
                diff[l] += 1;
                diff[r] -= 1;
            }
        }
        let mut sep_offset = vec![0usize; s + 1];
        let mut running = 0isize;
        let mut acc = 0usize;
        for t in 1..=s {
            running += diff[t];
            sep_offset[t - 1] = acc;
            acc += running as usize;
        }
        sep_offset[s] = acc;
        let mut by_r: Vec<Vec<usize>> = vec![Vec::new(); s + 1];
        for v in 0..n {
            by_r[model.end(v)].push(v);
        }
        let mut cursor: Vec<usize> = sep_offset[..s].to_vec();
        let mut sep_list = vec![0usize; acc];
        for bucket in &by_r {
            for &v in bucket {
                for t in model.start(v)..model.end(v) {
                    sep_list[cursor[t - 1]] = v;
                    cursor[t - 1] += 1;
                }
            }
        }
        let sep_ptr = sep_offset[..s].to_vec();

        Engine {
            model,
            n,
            s,
            universal_next: n,
            universal_end: total,
            covered: vec![false; total],
            sep_offset,
            sep_list,
            sep_ptr,
            paths: Vec::new(),
            alive: Vec::new(),
            alive_count: 0,
            heap: BinaryHeap::new(),
            by_end: vec![Vec::new(); s + 1],
            trace: SweepTrace {
                n_real: n,
                s,
                activation: vec![None; total],
                deactivation: vec![None; total],
                pred: vec![None; total],
                succ: vec![None; total],
                path_of: vec![None; total],
                paths: Vec::new(),
                selections: Vec::new(),
                events: Vec::new(),
                outcome: SweepOutcome::Success { p: 0 },
            },
        }
    }

    #[inline]
    fn end(&self, v: usize) -> usize {
        if v < self.n {
            self.model.end(v)
        } else {
            self.s
        }
    }

    fn terminal(&self, id: usize) -> usize {
        *self.paths[id].last().expect("paths are never empty")
    }

    fn index_terminal(&mut self, id: usize) {
        let r = self.end(self.terminal(id));
        self.heap.push(Reverse((r, id)));
        self.by_end[r].push(id);
    }

    fn open_path(&mut self, head: usize, t: Option<usize>) -> usize {
        let id = self.paths.len();
        self.paths.push(vec![head]);
        self.alive.push(true);
        self.alive_count += 1;
        if let Some(t) = t {
            self.covered[head] = true;
            self.trace.activation[head] = Some(t);
            self.trace.path_of[head] = Some(id);
        }
        self.index_terminal(id);
        id
    }

    fn extend(&mut self, id: usize, v: usize, t: usize) {
        let last = self.terminal(id);
        self.covered[v] = true;
        self.trace.activation[v] = Some(t);
        self.trace.path_of[v] = Some(id);
        self.trace.pred[v] = Some(last);
        if self.trace.deactivation[last].is_none() {
            self.trace.deactivation[last] = Some(t);
        }
        if self.trace.path_of[last] == Some(id) {
            self.trace.succ[last] = Some(v);
        }
        self.paths[id].push(v);
    }

    /// Free vertex of `C_t ∩ C_{t+1}` with the smallest end point, falling
    /// back to a virtual universal vertex.
    fn take_free_separator(&mut self, t: usize) -> Option<usize> {
        let end = self.sep_offset[t];
        let ptr = &mut self.sep_ptr[t - 1];
        while *ptr < end && self.covered[self.sep_list[*ptr]] {
            *ptr += 1;
        }
        if *ptr < end {
            return Some(self.sep_list[*ptr]);
        }
        if self.universal_next < self.universal_end {
            let u = self.universal_next;
            self.universal_next += 1;
            return Some(u);
        }
        None
    }

    /// Line 7: the live path whose terminal has the smallest end point.
    fn select(&mut self) -> usize {
        loop {
            let Reverse((r, id)) = *self.heap.peek().expect("a live path exists");
            if self.alive[id] && self.end(self.terminal(id)) == r {
                return id;
            }
            self.heap.pop();
        }
    }

    fn run(mut self, initial: usize, restart: bool) -> SweepRun {
        let u1 = self.model.u1();
        self.covered[u1] = true;
        for _ in 0..initial {
            self.open_path(u1, None);
        }
        let mut restarted = Vec::new();
        let mut was_restarted = Vec::new();
        let mut by_finish: Vec<usize> = Vec::new();
        if restart {
            by_finish = (0..self.n).collect();
            by_finish.sort_by_key(|&v| self.model.end(v));
        }
        let mut finish_ptr = 0;
        let mut outcome = None;
        'time: for t in 1..self.s {
            let chosen = self.select();
            self.trace.selections.push(chosen);
            let leftovers: Vec<usize> = self
                .model
                .clique(t)
                .iter()
                .copied()
                .filter(|&v| self.model.end(v) == t && !self.covered[v])
                .collect();
            if !leftovers.is_empty() {
                for v in leftovers {
                    self.extend(chosen, v, t);
                }
                self.index_terminal(chosen);
            }

            let mut due = std::mem::take(&mut self.by_end[t]);
            due.sort_unstable();
            due.dedup();
            for id in due {
                if !self.alive[id] || self.end(self.terminal(id)) != t {
                    continue;
                }
                if let Some(v) = self.take_free_separator(t) {
                    self.extend(id, v, t);
                    self.index_terminal(id);
                    continue;
                }
                self.alive[id] = false;
                self.alive_count -= 1;
                self.trace.events.push(DecrementEvent {
                    t,
                    path: id,
                    p_after: self.alive_count,
                });
                if self.alive_count == 0 {
                    if !restart {
                        outcome = Some(SweepOutcome::Failure { t });
                        break 'time;
                    }
                    restarted.push(self.paths[id].clone());
                    was_restarted.push(id);
                    while self.covered[by_finish[finish_ptr]] {
                        finish_ptr += 1;
                    }
                    let head = by_finish[finish_ptr];
                    let at = self.model.start(head).max(t + 1);
                    self.open_path(head, Some(at));
                }
            }
        }
        self.trace.outcome = outcome.unwrap_or(SweepOutcome::Success {
            p: self.alive_count,
        });

        let mut system = PathSystem::default();
        let mut restarted_flag = vec![false; self.paths.len()];
        for id in was_restarted {
            restarted_flag[id] = true;
        }
        for (id, path) in self.paths.iter().enumerate() {
            if self.alive[id] {
                system.active.push(path.clone());
            } else if !restarted_flag[id] {
                system.finalized.push(path.clone());
            }
        }
        self.trace.paths = self.paths;
        SweepRun {
            system,
            trace: self.trace,
            restarted,
            covered: self.covered,
        }
    }
}

/// Runs the main loop of the sweep without closing the paths.
pub fn sweep_with(model: &CliquePathModel, options: SweepOptions) -> SweepRun {
    let degree = model.clique(1).len().saturating_sub(1) + options.universal;
    let initial = options.initial_paths.unwrap_or(degree);
    Engine::new(model, options.universal).run(initial.max(1), options.restart)
}

/// Algorithm entry point: an optimal spanning stave between `u1` and `un`
/// with its trace, or the trace up to the point where the last path died.
pub fn sweep(
    model: &CliquePathModel,
) -> Result<(Result<Stave, SweepTrace>, SweepTrace), StaveError> {
    if model.s() < 2 {
        return Err(StaveError::SingleClique);
    }
    let run = sweep_with(model, SweepOptions::default());
    if !run.succeeded() {
        let trace = run.trace;
        return Ok((Err(trace.clone()), trace));
    }
    let trace = run.trace.clone();
    let stave = close_run(model, run)?;
    Ok((Ok(stave), trace))
}

fn close_run(model: &CliquePathModel, run: SweepRun) -> Result<Stave, StaveError> {
    let SweepRun {
        system, covered, ..
    } = run;
    close_with_covered(model, system, covered)
}

/// Final step of the sweep: one path absorbs the free vertices of `C_s`
/// and every dead path, the others step to `un`.
pub fn close_stave(model: &CliquePathModel, system: PathSystem) -> Result<Stave, StaveError> {
    let mut covered = vec![false; model.n()];
    for path in system.active.iter().chain(&system.finalized) {
        for &v in path {
            covered[v] = true;
        }
    }
    close_with_covered(model, system, covered)
}

fn close_with_covered(
    model: &CliquePathModel,
    system: PathSystem,
    covered: Vec<bool>,
) -> Result<Stave, StaveError> {
    let (u1, un) = (model.u1(), model.un());
    let n = model.n();
    let PathSystem {
        mut active,
        finalized,
    } = system;
    if active.is_empty() {
        return Err(StaveError::MergeInfeasible);
    }
    let mut first = active.remove(0);
    first.extend(
        model
            .clique(model.s())
            .iter()
            .copied()
            .filter(|&v| v != un && !covered[v]),
    );
    // Virtual universal vertices are never part of a closed stave.
    first.retain(|&v| v < n);
    first.push(un);
    let qs: Vec<Vec<usize>> = finalized
        .into_iter()
        .map(|q| q.into_iter().filter(|&v| v < n).collect())
        .collect();
    let merged = if qs.is_empty() {
        first
    } else {
        merge(model, &first, &qs)?
    };
    let mut paths = vec![merged];
    for mut path in active {
        path.push(un);
        paths.push(path);
    }
    Ok(Stave { u1, un, paths })
}

/// A single `u1`–`un` path on `V(P) ∪ V(Q_1) ∪ ...`, found by a one-path
/// sweep over the clique path of the induced subgraph.
pub fn merge(
    model: &CliquePathModel,
    p: &[usize],
    qs: &[Vec<usize>],
) -> Result<Vec<usize>, StaveError> {
    let (u1, un) = (model.u1(), model.un());
    if p.first() != Some(&u1) || p.last() != Some(&un) {
        return Err(StaveError::BadEndpoints);
    }
    if qs.iter().all(|q| q.iter().all(|&v| v == u1 || v == un)) {
        return Ok(p.to_vec());
    }
    let mut keep = vec![false; model.n()];
    for &v in p.iter().chain(qs.iter().flatten()) {
        keep[v] = true;
    }
    let (sub, map) = model.restrict(&keep);
    let local = single_path(&sub).ok_or(StaveError::MergeInfeasible)?;
    Ok(local.into_iter().map(|v| map[v]).collect())
}

/// Hamilton path from `u1` to `un` of the model's graph found by a one-path
/// sweep, if the sweep survives.
pub fn single_path(model: &CliquePathModel) -> Option<Vec<usize>> {
    let options = SweepOptions {
        initial_paths: Some(1),
        ..SweepOptions::default()
    };
    let run = sweep_with(model, options);
    if !run.succeeded() {
        return None;
    }
    let stave = close_run(model, run).ok()?;
    stave.paths.into_iter().next()
}

/// Minimum path cover of a connected interval graph: one-path sweep that
/// restarts whenever its path dies.
pub fn restart_cover(model: &CliquePathModel) -> Vec<Vec<usize>> {
    let options = SweepOptions {
        initial_paths: Some(1),
        universal: 0,
        restart: true,
    };
    let run = sweep_with(model, options);
    let mut paths = run.restarted.clone();
    let SweepRun {
        mut system,
        covered,
        ..
    } = run;
    let (u1, un) = (model.u1(), model.un());
    let mut last = system.active.remove(0);
    last.extend(
        model
            .clique(model.s())
            .iter()
            .copied()
            .filter(|&v| v != un && !covered[v]),
    );
    if !covered[un] && un != u1 {
        last.push(un);
    }
    paths.push(last);
    paths
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StaveViolation {
    Empty,
    Endpoints { path: usize },
    NotAdjacent { u: usize, v: usize },
    Shared { vertex: usize },
    Uncovered { vertex: usize },
    UnknownVertex { vertex: usize },
}

/// Structural check of a stave: endpoints, adjacency, internal
/// disjointness, and coverage when `spanning` is requested.
pub fn verify_stave(g: &Graph, stave: &Stave, spanning: bool) -> Result<(), Vec<StaveViolation>> {
    let mut out = Vec::new();
    if stave.paths.is_empty() {
        return Err(vec![StaveViolation::Empty]);
    }
    let n = g.n();
    let mut seen = vec![false; n];
    for (i, path) in stave.paths.iter().enumerate() {
        if path.len() < 2 || path[0] != stave.u1 || path[path.len() - 1] != stave.un {
            out.push(StaveViolation::Endpoints { path: i });
        }
        for &v in path {
            if v >= n {
                out.push(StaveViolation::UnknownVertex { vertex: v });
            }
        }
        for pair in path.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                out.push(StaveViolation::NotAdjacent {
                    u: pair[0],
                    v: pair[1],
                });
            }
        }
        for &v in path.iter().skip(1).take(path.len().saturating_sub(2)) {
            if v < n {
                if seen[v] || v == stave.u1 || v == stave.un {
                    out.push(StaveViolation::Shared { vertex: v });
                }
                seen[v] = true;
            }
        }
    }
    if stave.u1 < n {
        seen[stave.u1] = true;
    }
    if stave.un < n {
        seen[stave.un] = true;
    }
    if spanning {
        for (v, &hit) in seen.iter().enumerate() {
            if !hit {
                out.push(StaveViolation::Uncovered { vertex: v });
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Whether the internal vertices of `path` dominate `g`.
pub fn internal_dominates(g: &Graph, path: &[usize]) -> bool {
    if path.len() < 3 {
        return false;
    }
    let mut hit = vec![false; g.n()];
    for &v in &path[1..path.len() - 1] {
        hit[v] = true;
        for &w in g.neighbors(v) {
            hit[w] = true;
        }
    }
    hit.into_iter().all(|h| h)
}
