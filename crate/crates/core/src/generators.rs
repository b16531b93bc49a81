//! Interval graph generators: exhaustive enumeration up to isomorphism,
//! seeded random interval families, and a few structured families.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::model::build_model;
use crate::parse::{intersection_graph, LabeledInterval};

pub const EXHAUSTIVE_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("exhaustive generation supports n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Star,
    Complete,
    /// Laminar intervals from a balanced binary split.
    Nested,
    /// Vertex `i` spans `[i, i + width]`.
    Onion {
        width: usize,
    },
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(Family::Path),
            "star" => Ok(Family::Star),
            "complete" => Ok(Family::Complete),
            "nested" => Ok(Family::Nested),
            "onion" => Ok(Family::Onion { width: 2 }),
            other => match other.strip_prefix("onion:").map(str::parse) {
                Some(Ok(width)) => Ok(Family::Onion { width }),
                _ => Err(GenError::UnknownFamily(other.to_string())),
            },
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path => write!(f, "path"),
            Family::Star => write!(f, "star"),
            Family::Complete => write!(f, "complete"),
            Family::Nested => write!(f, "nested"),
            Family::Onion { width } => write!(f, "onion:{width}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenSpec {
    Exhaustive {
        n: usize,
    },
    Random {
        n: usize,
        mean_length: u32,
        seed: u64,
    },
    RandomConnected {
        n: usize,
        mean_length: u32,
        seed: u64,
    },
    Family {
        family: Family,
        n: usize,
    },
}

/// A graph with an interval realization of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub intervals: Vec<LabeledInterval>,
}

pub fn generate(spec: GenSpec) -> Result<Vec<Generated>, GenError> {
    match spec {
        GenSpec::Exhaustive { n } => Ok(gen_exhaustive(n)?
            .into_iter()
            .map(|graph| {
                let intervals = realize(&graph);
                Generated { graph, intervals }
            })
            .collect()),
        GenSpec::Random {
            n,
            mean_length,
            seed,
        } => Ok(vec![gen_random(n, mean_length, seed)]),
        GenSpec::RandomConnected {
            n,
            mean_length,
            seed,
        } => Ok(vec![gen_random_connected(n, mean_length, seed)]),
        GenSpec::Family { family, n } => Ok(vec![gen_family(family, n)]),
    }
}

/// Intervals `[start, end]` over clique indices of a connected interval graph.
fn realize(g: &Graph) -> Vec<LabeledInterval> {
    let model = build_model(g).expect("generated graphs are connected interval graphs");
    (0..g.n())
        .map(|v| LabeledInterval {
            label: g.label(v).to_string(),
            start: model.start(v) as i64,
            end: model.end(v) as i64,
        })
        .collect()
}

/// Upper-triangle adjacency bits of a graph on at most 8 vertices.
fn pack(adj: &[u8]) -> u32 {
    let n = adj.len();
    let mut key = 0u32;
    let mut bit = 0;
    for (u, row) in adj.iter().enumerate() {
        for v in u + 1..n {
            if row & (1 << v) != 0 {
                key |= 1 << bit;
            }
            bit += 1;
        }
    }
    key
}

fn unpack(n: usize, key: u32) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if key & (1 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    edges
}

/// Smallest packed adjacency over all vertex orders that list the classes
/// of a stable color refinement in color order.
fn canonical_key(adj: &[u8]) -> u32 {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let mut signature: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] & (1 << w) != 0)
                    .map(|w| color[w])
                    .collect();
                around.sort_unstable();
                (color[v], around, v)
            })
            .collect();
        signature.sort();
        let mut next = vec![0usize; n];
        let mut rank = 0;
        for i in 0..n {
            if i > 0
                && (signature[i].0 != signature[i - 1].0 || signature[i].1 != signature[i - 1].1)
            {
                rank += 1;
            }
            next[signature[i].2] = rank;
        }
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        let done = classes(&next) == classes(&color);
        color = next;
        if done {
            break;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (color[v], v));

    fn search(adj: &[u8], color: &[usize], order: &mut Vec<usize>, pos: usize, best: &mut u32) {
        let n = order.len();
        if pos == n {
            let mut relabeled = vec![0u8; n];
            let mut at = vec![0usize; n];
            for (i, &v) in order.iter().enumerate() {
                at[v] = i;
            }
            for v in 0..n {
                for w in 0..n {
                    if adj[v] & (1 << w) != 0 {
                        relabeled[at[v]] |= 1 << at[w];
                    }
                }
            }
            *best = (*best).min(pack(&relabeled));
            return;
        }
        for i in pos..n {
            if color[order[i]] != color[order[pos]] {
                break;
            }
            order.swap(pos, i);
            search(adj, color, order, pos + 1, best);
            order.swap(pos, i);
        }
    }
    let mut best = u32::MAX;
    search(adj, &color, &mut order, 0, &mut best);
    best
}

/// Every connected interval graph on `n` vertices, one per isomorphism
/// class, in canonical labelling and sorted order.
pub fn gen_exhaustive(n: usize) -> Result<Vec<Graph>, GenError> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(GenError::TooLarge {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    // Sweep over endpoint sequences: vertices open in index order and any
    // open vertex may close next. A newly opened vertex meets every open one.
    struct Walk {
        n: usize,
        adj: Vec<u8>,
        visited: HashSet<(usize, u8, u32)>,
        labeled: HashSet<u32>,
    }
    fn walk(w: &mut Walk, opened: usize, open: u8) {
        let key = pack(&w.adj);
        if !w.visited.insert((opened, open, key)) {
            return;
        }
        if opened == w.n {
            // Remaining closes change nothing.
            w.labeled.insert(key);
            return;
        }
        if open != 0 {
            let mut rest = open;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                let after = open & !(1 << v);
                if after != 0 {
                    walk(w, opened, after);
                }
            }
        }
        let v = opened;
        let saved = w.adj.clone();
        let mut rest = open;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            w.adj[u] |= 1 << v;
            w.adj[v] |= 1 << u;
        }
        walk(w, opened + 1, open | (1 << v));
        w.adj = saved;
    }
    let mut w = Walk {
        n,
        adj: vec![0; n],
        visited: HashSet::new(),
        labeled: HashSet::new(),
    };
    walk(&mut w, 0, 0);

    let mut canonical: Vec<u32> = w
        .labeled
        .iter()
        .map(|&key| {
            let edges = unpack(n, key);
            let mut adj = vec![0u8; n];
            for (u, v) in edges {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            canonical_key(&adj)
        })
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    canonical.sort_unstable();
    Ok(canonical
        .into_iter()
        .map(|key| Graph::from_edges(n, &unpack(n, key)).expect("valid packed graph"))
        .collect())
}

/// Random intervals: starts uniform on `[0, 2n)`, lengths uniform on
/// `[0, 2 * mean_length]`. Not necessarily connected.
pub fn gen_random(n: usize, mean_length: u32, seed: u64) -> Generated {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = (2 * n).max(1) as i64;
    let intervals: Vec<LabeledInterval> = (0..n)
        .map(|i| {
            let start = rng.gen_range(0..span);
            let len = rng.gen_range(0..=2 * mean_length as i64);
            LabeledInterval {
                label: i.to_string(),
                start,
                end: start + len,
            }
        })
        .collect();
    let graph = intersection_graph(&intervals).expect("distinct labels");
    Generated { graph, intervals }
}

/// Like [`gen_random`], but every interval that would start past the reach
/// of the earlier ones (in start order) is shifted left to touch it, so the
/// graph is connected.
pub fn gen_random_connected(n: usize, mean_length: u32, seed: u64) -> Generated {
    let Generated { mut intervals, .. } = gen_random(n, mean_length, seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (intervals[i].start, i));
    let mut reach = i64::MIN;
    for &i in &order {
        let iv = &mut intervals[i];
        if reach != i64::MIN && iv.start > reach {
            let shift = iv.start - reach;
            iv.start -= shift;
            iv.end -= shift;
        }
        reach = reach.max(iv.end);
    }
    let graph = intersection_graph(&intervals).expect("distinct labels");
    Generated { graph, intervals }
}

pub fn gen_family(family: Family, n: usize) -> Generated {
    let spans: Vec<(i64, i64)> = match family {
        Family::Path => (0..n as i64).map(|i| (i, i + 1)).collect(),
        Family::Star => {
            let leaves = n.saturating_sub(1) as i64;
            std::iter::once((0, 2 * leaves.max(1)))
                .chain((0..leaves).map(|i| (2 * i + 1, 2 * i + 1)))
                .take(n)
                .collect()
        }
        Family::Complete => vec![(0, 1); n],
        Family::Nested => {
            let mut spans = Vec::with_capacity(n);
            let width = 4 * n.max(1) as i64;
            let mut queue = std::collections::VecDeque::from([(0i64, width)]);
            while spans.len() < n {
                let (lo, hi) = queue.pop_front().expect("binary split never runs dry");
                spans.push((lo, hi));
                let mid = lo + (hi - lo) / 2;
                queue.push_back((lo, mid));
                queue.push_back((mid + 1, hi));
            }
            spans
        }
        Family::Onion { width } => (0..n as i64).map(|i| (i, i + width as i64)).collect(),
    };
    let intervals: Vec<LabeledInterval> = spans
        .into_iter()
        .enumerate()
        .map(|(i, (start, end))| LabeledInterval {
            label: i.to_string(),
            start,
            end,
        })
        .collect();
    let graph = intersection_graph(&intervals).expect("distinct labels");
    Generated { graph, intervals }
}
