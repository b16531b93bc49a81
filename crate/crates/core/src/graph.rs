//! Undirected simple graphs over dense vertex indices.

use std::borrow::Cow;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
}

/// An immutable undirected simple graph with sorted adjacency lists.
///
/// Every vertex carries an external label; graphs built from bare edge lists
/// use the decimal index as label.
#[derive(Clone)]
pub struct Graph {
    /// Neighbors of `v` are `targets[offsets[v]..offsets[v + 1]]`.
    offsets: Vec<usize>,
    targets: Vec<usize>,
    m: usize,
    labels: Labels,
}

#[derive(Clone)]
enum Labels {
    Index,
    Named {
        names: Vec<String>,
        by_name: HashMap<String, usize>,
    },
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::build(n, edges, Labels::Index)
    }

    pub fn with_labels(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut by_name = HashMap::with_capacity(names.len());
        for (v, label) in names.iter().enumerate() {
            if by_name.insert(label.clone(), v).is_some() {
                return Err(GraphError::DuplicateLabel(label.clone()));
            }
        }
        Self::build(names.len(), edges, Labels::Named { names, by_name })
    }

    fn build(n: usize, edges: &[(usize, usize)], labels: Labels) -> Result<Self, GraphError> {
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; 2 * edges.len()];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for u in 0..n {
            let list = &mut targets[offsets[u]..offsets[u + 1]];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            offsets,
            targets,
            m: edges.len(),
            labels,
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edges(n, &edges).expect("complete graph is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match &self.labels {
            Labels::Index => Cow::Owned(v.to_string()),
            Labels::Named { names, .. } => Cow::Borrowed(&names[v]),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Labels::Index => label
                .parse::<usize>()
                .ok()
                .filter(|&v| v < self.n() && v.to_string() == label),
            Labels::Named { by_name, .. } => by_name.get(label).copied(),
        }
    }

    /// Breadth-first order of the component of vertex 0, started from the
    /// last vertex reached by a first search. On interval graphs this lays
    /// vertices out roughly along the line.
    pub fn locality_order(&self) -> Vec<usize> {
        let first = self.bfs_order(0);
        match first.last() {
            Some(&z) => self.bfs_order(z),
            None => first,
        }
    }

    fn bfs_order(&self, root: usize) -> Vec<usize> {
        if root >= self.n() {
            return Vec::new();
        }
        let mut seen = vec![false; self.n()];
        let mut order = vec![root];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }

    /// The same graph with vertex `i` standing for `order[i]`, labelled by
    /// the new indices.
    pub fn renumbered(&self, order: &[usize]) -> Graph {
        let n = self.n();
        let mut rank = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(self.targets.len());
        offsets.push(0);
        for &v in order {
            let start = targets.len();
            targets.extend(self.neighbors(v).iter().map(|&w| rank[w]));
            targets[start..].sort_unstable();
            offsets.push(targets.len());
        }
        Graph {
            offsets,
            targets,
            m: self.m,
            labels: Labels::Index,
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || components(self, &VertexSet::new(self.n())).count == 1
    }

    /// The subgraph induced by `keep`, relabelled densely in increasing
    /// index order. Returns the graph and the local-to-global index map.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced_on(keep.as_slice())
    }

    /// Like [`Graph::induced`] for a sorted, duplicate-free vertex list; costs
    /// time proportional to the listed vertices and their degrees only.
    pub fn induced_on(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let map = vertices.to_vec();
        let local: HashMap<usize, usize> = map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &v) in map.iter().enumerate() {
            for &w in self.neighbors(v) {
                if let Some(&j) = local.get(&w) {
                    if j > i {
                        edges.push((i, j));
                    }
                }
            }
        }
        let labels = map.iter().map(|&v| self.label(v).into_owned()).collect();
        let g = Graph::with_labels(labels, &edges).expect("induced subgraph of a simple graph");
        (g, map)
    }

    /// Canonical edge-list serialization: header `n m`, then sorted edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.offsets == other.offsets
            && self.targets == other.targets
            && (0..self.n()).all(|v| self.label(v) == other.label(v))
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A subset of `0..n` with constant-time membership and a sorted listing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    member: Vec<bool>,
    list: Vec<usize>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            member: vec![false; n],
            list: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            member: vec![true; n],
            list: (0..n).collect(),
        }
    }

    /// Panics if a member is `>= n`.
    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Self {
        let mut member = vec![false; n];
        let mut list = Vec::new();
        for v in items {
            if !member[v] {
                member[v] = true;
                list.push(v);
            }
        }
        list.sort_unstable();
        VertexSet { member, list }
    }

    pub fn universe(&self) -> usize {
        self.member.len()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        if self.member[v] {
            return false;
        }
        self.member[v] = true;
        if self.list.last().is_none_or(|&last| last < v) {
            self.list.push(v);
        } else {
            let at = self.list.partition_point(|&x| x < v);
            self.list.insert(at, v);
        }
        true
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.member.len() && self.member[v]
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.list.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.list
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for v in other.iter() {
            self.insert(v);
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.list.iter()).finish()
    }
}

/// Connected components of `G - removed`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// Component id per vertex; `None` for removed vertices.
    pub id: Vec<Option<usize>>,
}

pub fn components(g: &Graph, removed: &VertexSet) -> Components {
    let n = g.n();
    let mut id = vec![None; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for root in 0..n {
        if removed.contains(root) || id[root].is_some() {
            continue;
        }
        id[root] = Some(count);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !removed.contains(w) && id[w].is_none() {
                    id[w] = Some(count);
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    Components { count, id }
}

/// Sorted vertex lists of the connected components of `g`, ordered by
/// smallest member.
pub fn component_lists(g: &Graph) -> Vec<Vec<usize>> {
    let comps = components(g, &VertexSet::new(g.n()));
    let mut lists = vec![Vec::new(); comps.count];
    for (v, c) in comps.id.iter().enumerate() {
        lists[c.expect("nothing removed")].push(v);
    }
    lists
}

pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    let k = s.len();
    s.iter()
        .all(|v| g.neighbors(v).iter().filter(|&&w| s.contains(w)).count() == k - 1)
}
