//! Clique-path interval models.
//!
//! A clique path orders the maximal cliques `C_1, ..., C_s` of an interval
//! graph so that every vertex lies in a contiguous run `[start, end]` of them.
//! Clique indices are 1-based throughout the public API.
//!
//! Recognition runs LexBFS to certify chordality and list maximal cliques,
//! then orders the cliques by partition refinement: every vertex whose
//! cliques span several classes forces those cliques to the inner ends of the
//! outer classes. When refinement stalls, a stalled class is split by placing
//! an end clique (found by a LexBFS on the vertices private to that class) at
//! its right end. The final model is always checked by [`verify_model`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{is_clique, Graph, VertexSet};
use crate::lexbfs::{is_perfect_elimination, lex_bfs_on, maximal_cliques};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotIntervalReason {
    NotChordal,
    NoCliquePath,
}

impl fmt::Display for NotIntervalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotIntervalReason::NotChordal => write!(f, "graph is not chordal"),
            NotIntervalReason::NoCliquePath => {
                write!(f, "maximal cliques admit no consecutive ordering")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("not an interval graph: {0}")]
    NotInterval(NotIntervalReason),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("clique range {j}..={k} out of bounds for {s} cliques")]
    RangeOutOfBounds { j: usize, k: usize, s: usize },
    #[error("separator index {t} out of range for {s} cliques")]
    SeparatorOutOfRange { t: usize, s: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelViolation {
    VertexCount {
        graph: usize,
        model: usize,
    },
    Empty,
    UnknownVertex {
        clique: usize,
        vertex: usize,
    },
    BadInterval {
        vertex: usize,
        start: usize,
        end: usize,
    },
    Membership {
        vertex: usize,
        clique: usize,
    },
    NotAClique {
        clique: usize,
    },
    NotMaximal {
        clique: usize,
    },
    MissingEdge {
        u: usize,
        v: usize,
    },
    ExtraAdjacency {
        intersecting_pairs: usize,
        edges: usize,
    },
    Extreme {
        vertex: usize,
        which: &'static str,
    },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ModelViolation::*;
        match self {
            VertexCount { graph, model } => {
                write!(f, "model covers {model} vertices, graph has {graph}")
            }
            Empty => write!(f, "model has no cliques"),
            UnknownVertex { clique, vertex } => {
                write!(f, "clique {clique} lists unknown vertex {vertex}")
            }
            BadInterval { vertex, start, end } => {
                write!(f, "vertex {vertex} has invalid interval [{start}, {end}]")
            }
            Membership { vertex, clique } => write!(
                f,
                "endpoint mismatch: membership of vertex {vertex} in clique {clique} disagrees with its interval"
            ),
            NotAClique { clique } => write!(f, "clique {clique} is not a clique of the graph"),
            NotMaximal { clique } => write!(f, "clique {clique} is not maximal"),
            MissingEdge { u, v } => write!(f, "edge {u}-{v} lies in no common clique"),
            ExtraAdjacency {
                intersecting_pairs,
                edges,
            } => write!(
                f,
                "{intersecting_pairs} intersecting interval pairs but only {edges} edges"
            ),
            Extreme { vertex, which } => {
                write!(f, "{which} vertex {vertex} is not exclusive to its end clique")
            }
        }
    }
}

/// A clique path `C_1..C_s` with per-vertex interval endpoints and the two
/// extreme vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePathModel {
    cliques: Vec<Vec<usize>>,
    start: Vec<usize>,
    end: Vec<usize>,
    u1: usize,
    un: usize,
}

impl CliquePathModel {
    /// Builds a model from a clique sequence, deriving each vertex's interval
    /// from the first and last clique containing it. Nothing is checked;
    /// vertices in no clique get the empty interval `[0, 0]`.
    pub fn from_cliques(n: usize, cliques: Vec<Vec<usize>>, u1: usize, un: usize) -> Self {
        let mut start = vec![0; n];
        let mut end = vec![0; n];
        for (j, clique) in cliques.iter().enumerate() {
            for &v in clique {
                if v < n {
                    if start[v] == 0 {
                        start[v] = j + 1;
                    }
                    end[v] = j + 1;
                }
            }
        }
        Self::from_raw(cliques, start, end, u1, un)
    }

    /// Assembles a model from raw parts without any consistency check.
    pub fn from_raw(
        cliques: Vec<Vec<usize>>,
        start: Vec<usize>,
        end: Vec<usize>,
        u1: usize,
        un: usize,
    ) -> Self {
        CliquePathModel {
            cliques,
            start,
            end,
            u1,
            un,
        }
    }

    pub fn n(&self) -> usize {
        self.start.len()
    }

    pub fn s(&self) -> usize {
        self.cliques.len()
    }

    /// Members of `C_j`, sorted; `j` is 1-based.
    pub fn clique(&self, j: usize) -> &[usize] {
        &self.cliques[j - 1]
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    #[inline]
    pub fn start(&self, v: usize) -> usize {
        self.start[v]
    }

    #[inline]
    pub fn end(&self, v: usize) -> usize {
        self.end[v]
    }

    pub fn u1(&self) -> usize {
        self.u1
    }

    pub fn un(&self) -> usize {
        self.un
    }

    /// `C_j ∪ ... ∪ C_k`.
    pub fn clique_range_union(&self, j: usize, k: usize) -> Result<VertexSet, ModelError> {
        let s = self.s();
        if j < 1 || j > k || k > s {
            return Err(ModelError::RangeOutOfBounds { j, k, s });
        }
        Ok(VertexSet::from_iter(
            self.n(),
            (0..self.n()).filter(|&v| self.start[v] <= k && self.end[v] >= j),
        ))
    }

    /// `C_t ∩ C_{t+1}`: the vertices with `start <= t < end`.
    pub fn separator(&self, t: usize) -> Result<VertexSet, ModelError> {
        let s = self.s();
        if t < 1 || t >= s {
            return Err(ModelError::SeparatorOutOfRange { t, s });
        }
        Ok(VertexSet::from_iter(
            self.n(),
            self.cliques[t - 1]
                .iter()
                .copied()
                .filter(|&v| self.end[v] > t),
        ))
    }

    /// The clique path of the subgraph induced by `keep`, over local indices
    /// `0..k` assigned in increasing global order. Returns the model and the
    /// local-to-global map. Both extremes must be kept.
    pub fn restrict(&self, keep: &[bool]) -> (CliquePathModel, Vec<usize>) {
        debug_assert!(keep[self.u1] && keep[self.un]);
        let map: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        // (original index, kept members)
        let mut stack: Vec<(usize, Vec<usize>)> = Vec::new();
        for (j0, clique) in self.cliques.iter().enumerate() {
            let j = j0 + 1;
            let kept: Vec<usize> = clique.iter().copied().filter(|&v| keep[v]).collect();
            if kept.is_empty() {
                continue;
            }
            if let Some((tj, _)) = stack.last() {
                if kept.iter().all(|&v| self.start[v] <= *tj) {
                    continue;
                }
            }
            while let Some((_, top)) = stack.last() {
                if top.iter().all(|&v| self.end[v] >= j) {
                    stack.pop();
                } else {
                    break;
                }
            }
            stack.push((j, kept));
        }
        let cliques: Vec<Vec<usize>> = stack
            .into_iter()
            .map(|(_, members)| members.into_iter().map(|v| local[v]).collect())
            .collect();
        let model =
            CliquePathModel::from_cliques(map.len(), cliques, local[self.u1], local[self.un]);
        (model, map)
    }

    pub fn to_json(&self, g: &Graph) -> ModelJson {
        ModelJson {
            s: self.s(),
            cliques: self
                .cliques
                .iter()
                .map(|c| c.iter().map(|&v| g.label(v).to_string()).collect())
                .collect(),
            intervals: (0..self.n())
                .map(|v| (g.label(v).to_string(), [self.start[v], self.end[v]]))
                .collect(),
            u1: g.label(self.u1).to_string(),
            un: g.label(self.un).to_string(),
        }
    }
}

/// Wire form of a [`CliquePathModel`], keyed by vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    pub s: usize,
    pub cliques: Vec<Vec<String>>,
    pub intervals: BTreeMap<String, [usize; 2]>,
    pub u1: String,
    pub un: String,
}

pub fn build_model(g: &Graph) -> Result<CliquePathModel, ModelError> {
    let n = g.n();
    if n == 0 {
        return Err(ModelError::Empty);
    }
    if !g.is_connected() {
        return Err(ModelError::Disconnected);
    }
    let mut scratch = vec![usize::MAX; n];
    let all: Vec<usize> = (0..n).collect();
    let sigma = lex_bfs_on(g, &all, &mut scratch);
    if !is_perfect_elimination(g, &sigma) {
        return Err(ModelError::NotInterval(NotIntervalReason::NotChordal));
    }
    let cliques = maximal_cliques(g, &sigma);
    let order = CliqueOrdering::new(g, &cliques, scratch)
        .run()
        .ok_or(ModelError::NotInterval(NotIntervalReason::NoCliquePath))?;
    let path: Vec<Vec<usize>> = order.into_iter().map(|c| cliques[c].clone()).collect();
    let model = canonical_model(n, path);
    if verify_model(g, &model).is_err() {
        return Err(ModelError::NotInterval(NotIntervalReason::NoCliquePath));
    }
    Ok(model)
}

/// Carries a model of `g.renumbered(order)` back to the vertex ids of `g`.
pub(crate) fn model_from_renumbered(model: &CliquePathModel, order: &[usize]) -> CliquePathModel {
    let path = model
        .cliques()
        .iter()
        .map(|clique| {
            let mut c: Vec<usize> = clique.iter().map(|&v| order[v]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    canonical_model(order.len(), path)
}

/// Orients a clique path deterministically and picks `u1`, `un`.
fn canonical_model(n: usize, mut path: Vec<Vec<usize>>) -> CliquePathModel {
    let sizes: Vec<usize> = path.iter().map(Vec::len).collect();
    let rev_sizes: Vec<usize> = sizes.iter().rev().copied().collect();
    let flip = match rev_sizes.cmp(&sizes) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => path.iter().rev().lt(path.iter()),
    };
    if flip {
        path.reverse();
    }

    let s = path.len();
    let mut model = CliquePathModel::from_cliques(n, path, 0, 0);
    if s == 1 {
        model.u1 = 0;
        model.un = if n >= 2 { 1 } else { 0 };
    } else {
        model.u1 = (0..n).find(|&v| model.end[v] == 1).unwrap_or(0);
        model.un = (0..n).find(|&v| model.start[v] == s).unwrap_or(0);
    }
    model
}

/// Ordered partition refinement over maximal cliques.
struct CliqueOrdering<'a> {
    g: &'a Graph,
    cliques: &'a [Vec<usize>],
    of_vertex: Vec<Vec<usize>>,
    order: Vec<usize>,
    pos: Vec<usize>,
    class: Vec<usize>,
    class_start: Vec<usize>,
    class_end: Vec<usize>,
    queue: Vec<usize>,
    queued: Vec<bool>,
    pending: Vec<usize>,
    seen: Vec<usize>,
    stamp: usize,
    scratch: Vec<usize>,
}

impl<'a> CliqueOrdering<'a> {
    fn new(g: &'a Graph, cliques: &'a [Vec<usize>], scratch: Vec<usize>) -> Self {
        let k = cliques.len();
        let mut of_vertex = vec![Vec::new(); g.n()];
        for (c, members) in cliques.iter().enumerate() {
            for &v in members {
                of_vertex[v].push(c);
            }
        }
        CliqueOrdering {
            g,
            cliques,
            of_vertex,
            order: (0..k).collect(),
            pos: (0..k).collect(),
            class: vec![0; k],
            class_start: vec![0],
            class_end: vec![k],
            queue: Vec::new(),
            queued: vec![false; g.n()],
            pending: vec![0],
            seen: vec![usize::MAX; g.n()],
            stamp: 0,
            scratch,
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        loop {
            if let Some(x) = self.queue.pop() {
                self.queued[x] = false;
                self.refine(x)?;
                continue;
            }
            let Some(c) = self.pending.pop() else { break };
            if self.class_end[c] - self.class_start[c] >= 2 {
                self.split_stalled(c);
            }
        }
        Some(self.order)
    }

    fn enqueue_clique(&mut self, c: usize) {
        for &v in &self.cliques[c] {
            if !self.queued[v] {
                self.queued[v] = true;
                self.queue.push(v);
            }
        }
    }

    fn new_class(&mut self, start: usize, end: usize) -> usize {
        let id = self.class_start.len();
        self.class_start.push(start);
        self.class_end.push(end);
        self.pending.push(id);
        id
    }

    fn place(&mut self, c: usize, at: usize) {
        let other = self.order[at];
        let from = self.pos[c];
        self.order.swap(at, from);
        self.pos[other] = from;
        self.pos[c] = at;
    }

    /// Pushes the cliques of `x` to the inner ends of the first and last
    /// classes they touch. `None` when they cannot be made consecutive.
    fn refine(&mut self, x: usize) -> Option<()> {
        let cl = std::mem::take(&mut self.of_vertex[x]);
        let result = self.refine_by(&cl);
        self.of_vertex[x] = cl;
        result
    }

    fn refine_by(&mut self, cl: &[usize]) -> Option<()> {
        if cl.len() < 2 {
            return Some(());
        }
        let lo = cl.iter().map(|&c| self.pos[c]).min().unwrap();
        let hi = cl.iter().map(|&c| self.pos[c]).max().unwrap();
        let a = self.class[self.order[lo]];
        let b = self.class[self.order[hi]];
        if a == b {
            return Some(());
        }
        let in_a = cl.iter().filter(|&&c| self.class[c] == a).count();
        let in_b = cl.iter().filter(|&&c| self.class[c] == b).count();
        if in_a + in_b + (self.class_start[b] - self.class_end[a]) != cl.len() {
            return None;
        }

        // Class a: members of cl move to the back.
        let (sa, ea) = (self.class_start[a], self.class_end[a]);
        if in_a < ea - sa {
            let mut back = ea;
            for &c in cl {
                if self.class[c] != a {
                    continue;
                }
                back -= 1;
                self.place(c, back);
            }
            let moved = self.new_class(back, ea);
            self.class_end[a] = back;
            for p in back..ea {
                self.class[self.order[p]] = moved;
            }
            self.pending.push(a);
            let smaller = if ea - back <= back - sa {
                back..ea
            } else {
                sa..back
            };
            for p in smaller {
                let c = self.order[p];
                self.enqueue_clique(c);
            }
        }

        // Class b: members of cl move to the front.
        let (sb, eb) = (self.class_start[b], self.class_end[b]);
        if in_b < eb - sb {
            let mut front = sb;
            for &c in cl {
                if self.class[c] != b {
                    continue;
                }
                self.place(c, front);
                front += 1;
            }
            let moved = self.new_class(sb, front);
            self.class_start[b] = front;
            for p in sb..front {
                self.class[self.order[p]] = moved;
            }
            self.pending.push(b);
            let smaller = if front - sb <= eb - front {
                sb..front
            } else {
                front..eb
            };
            for p in smaller {
                let c = self.order[p];
                self.enqueue_clique(c);
            }
        }
        Some(())
    }

    /// Splits a class no vertex can refine: its cliques group into blocks
    /// linked by vertices private to the class, and each block gets an end
    /// clique placed last.
    fn split_stalled(&mut self, x: usize) {
        let (sx, ex) = (self.class_start[x], self.class_end[x]);
        let members: Vec<usize> = self.order[sx..ex].to_vec();
        self.stamp += 1;
        let stamp = self.stamp;

        // Union-find over the class's cliques, joined through private vertices.
        let mut parent: Vec<usize> = (0..members.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let local = |pos: &[usize], c: usize| pos[c] - sx;
        let mut private = Vec::new();
        for &c in &members {
            for &v in &self.cliques[c] {
                if self.seen[v] == stamp {
                    continue;
                }
                self.seen[v] = stamp;
                let cl = &self.of_vertex[v];
                if cl.iter().all(|&d| self.class[d] == x) {
                    private.push(v);
                    let first = find(&mut parent, local(&self.pos, cl[0]));
                    for &d in &cl[1..] {
                        let r = find(&mut parent, local(&self.pos, d));
                        parent[r] = first;
                    }
                }
            }
        }

        // Blocks in order of first appearance.
        let mut block_of_root = vec![usize::MAX; members.len()];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &c in &members {
            let r = find(&mut parent, local(&self.pos, c));
            if block_of_root[r] == usize::MAX {
                block_of_root[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[block_of_root[r]].push(c);
        }
        let mut block_private: Vec<Vec<usize>> = vec![Vec::new(); blocks.len()];
        for &v in &private {
            let r = find(&mut parent, local(&self.pos, self.of_vertex[v][0]));
            block_private[block_of_root[r]].push(v);
        }

        let mut arranged = Vec::with_capacity(members.len());
        let mut bounds = Vec::with_capacity(2 * blocks.len());
        for (block, verts) in blocks.iter().zip(block_private.iter_mut()) {
            if block.len() == 1 {
                arranged.push(block[0]);
                bounds.push(arranged.len());
                continue;
            }
            verts.sort_unstable();
            let sweep = lex_bfs_on(self.g, verts, &mut self.scratch);
            let z = *sweep
                .last()
                .expect("block with two cliques has private vertices");
            let end_clique = self.of_vertex[z][0];
            arranged.extend(block.iter().copied().filter(|&c| c != end_clique));
            bounds.push(arranged.len());
            arranged.push(end_clique);
            bounds.push(arranged.len());
            self.enqueue_clique(end_clique);
        }

        for (i, &c) in arranged.iter().enumerate() {
            self.order[sx + i] = c;
            self.pos[c] = sx + i;
        }
        let mut lo = sx;
        let mut first = true;
        for b in bounds {
            let hi = sx + b;
            let id = if first {
                first = false;
                self.class_end[x] = hi;
                self.pending.push(x);
                x
            } else {
                self.new_class(lo, hi)
            };
            for p in lo..hi {
                self.class[self.order[p]] = id;
            }
            lo = hi;
        }
        debug_assert_eq!(lo, ex);
    }
}

/// Checks every clique-path invariant of `model` against `g`.
pub fn verify_model(g: &Graph, model: &CliquePathModel) -> Result<(), Vec<ModelViolation>> {
    let mut out = Vec::new();
    let n = g.n();
    if model.n() != n {
        return Err(vec![ModelViolation::VertexCount {
            graph: n,
            model: model.n(),
        }]);
    }
    let s = model.s();
    if s == 0 {
        return Err(vec![ModelViolation::Empty]);
    }

    for v in 0..n {
        let (a, b) = (model.start[v], model.end[v]);
        if a < 1 || a > b || b > s {
            out.push(ModelViolation::BadInterval {
                vertex: v,
                start: a,
                end: b,
            });
        }
    }
    // Membership must match the intervals exactly: count occurrences per
    // vertex and check each occurrence lies inside the interval.
    let mut occurrences = vec![0usize; n];
    for (j0, clique) in model.cliques.iter().enumerate() {
        let j = j0 + 1;
        for &v in clique {
            if v >= n {
                out.push(ModelViolation::UnknownVertex {
                    clique: j,
                    vertex: v,
                });
                continue;
            }
            occurrences[v] += 1;
            if j < model.start[v] || j > model.end[v] {
                out.push(ModelViolation::Membership {
                    vertex: v,
                    clique: j,
                });
            }
        }
    }
    for (v, &count) in occurrences.iter().enumerate() {
        let (a, b) = (model.start[v], model.end[v]);
        if a >= 1 && a <= b && count != b - a + 1 {
            let missing = (a..=b)
                .find(|&j| j <= s && model.cliques[j - 1].binary_search(&v).is_err())
                .unwrap_or(a);
            out.push(ModelViolation::Membership {
                vertex: v,
                clique: missing,
            });
        }
    }
    if !out.is_empty() {
        return Err(out);
    }

    for (u, v) in g.edges() {
        if model.start[u].max(model.start[v]) > model.end[u].min(model.end[v]) {
            out.push(ModelViolation::MissingEdge { u, v });
        }
    }
    // Intersecting pairs, counted at the start clique of the later-starting
    // vertex; equality with m means every clique is a clique of g.
    let mut starting = vec![0usize; s + 1];
    for v in 0..n {
        starting[model.start[v]] += 1;
    }
    let intersecting: usize = (1..=s)
        .map(|j| {
            let k = starting[j];
            k * k.saturating_sub(1) / 2 + k * (model.cliques[j - 1].len() - k)
        })
        .sum();
    if intersecting != g.m() && out.is_empty() {
        out.push(ModelViolation::ExtraAdjacency {
            intersecting_pairs: intersecting,
            edges: g.m(),
        });
        for j in 1..=s {
            let set = VertexSet::from_iter(n, model.cliques[j - 1].iter().copied());
            if !is_clique(g, &set) {
                out.push(ModelViolation::NotAClique { clique: j });
            }
        }
    }
    for j in 1..s {
        let (a, b) = (&model.cliques[j - 1], &model.cliques[j]);
        if a.iter().all(|&v| model.end[v] > j) {
            out.push(ModelViolation::NotMaximal { clique: j });
        } else if b.iter().all(|&v| model.start[v] <= j) {
            out.push(ModelViolation::NotMaximal { clique: j + 1 });
        }
    }
    if !out.is_empty() {
        // Diagnostics only: name cliques that some outside vertex extends.
        for j in 1..=s {
            let clique = &model.cliques[j - 1];
            if let Some(&v0) = clique.iter().min_by_key(|&&v| g.degree(v)) {
                let extendable = g.neighbors(v0).iter().any(|&w| {
                    clique.binary_search(&w).is_err() && clique.iter().all(|&v| g.has_edge(v, w))
                });
                let flagged = out.contains(&ModelViolation::NotMaximal { clique: j });
                if extendable && !flagged {
                    out.push(ModelViolation::NotMaximal { clique: j });
                }
            }
        }
    }

    let (u1, un) = (model.u1, model.un);
    if u1 >= n || model.start[u1] != 1 || model.end[u1] != 1 {
        out.push(ModelViolation::Extreme {
            vertex: u1,
            which: "u1",
        });
    }
    if un >= n || model.start[un] != s || model.end[un] != s || (n >= 2 && un == u1) {
        out.push(ModelViolation::Extreme {
            vertex: un,
            which: "un",
        });
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}
