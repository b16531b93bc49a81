//! Exponential reference implementations over vertex bitmasks.
//!
//! Each oracle enforces a hard size cap and returns [`OracleError::TooLarge`]
//! beyond it.

use thiserror::Error;

use crate::graph::Graph;
use crate::scattering::ScatteringValue;

pub const SCATTERING_LIMIT: usize = 20;
pub const STAVE_LIMIT: usize = 12;
pub const HAMILTON_LIMIT: usize = 12;
pub const PATH_COVER_LIMIT: usize = 12;
pub const K_CONNECTED_LIMIT: usize = 10;
pub const K_CONNECTED_MAX_K: usize = 2;
pub const INTERVAL_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices; oracle limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("k = {k} exceeds the oracle limit {limit}")]
    KTooLarge { k: usize, limit: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonMode {
    Path,
    Cycle,
    Between(usize, usize),
}

fn check(g: &Graph, limit: usize) -> Result<(), OracleError> {
    if g.n() > limit {
        Err(OracleError::TooLarge { n: g.n(), limit })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

/// Number of connected components of the subgraph induced by `mask`.
fn component_count(adj: &[u32], mut mask: u32) -> usize {
    let mut count = 0;
    while mask != 0 {
        let mut frontier = mask & mask.wrapping_neg();
        let mut comp = frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & mask & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        mask &= !comp;
        count += 1;
    }
    count
}

/// Maximum of `c(G - S) - |S|` over all `S` leaving at least two components.
pub fn oracle_scattering_number(g: &Graph) -> Result<ScatteringValue, OracleError> {
    Ok(match oracle_scattering_set(g)? {
        None => ScatteringValue::NegInfinity,
        Some((value, _)) => ScatteringValue::Finite(value),
    })
}

/// The scattering number with a set attaining it, or `None` for complete
/// graphs. Among optimal sets the first in mask order is returned.
pub fn oracle_scattering_set(g: &Graph) -> Result<Option<(i64, Vec<usize>)>, OracleError> {
    check(g, SCATTERING_LIMIT)?;
    if g.is_complete() {
        return Ok(None);
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let full: u32 = (1 << n) - 1;
    let mut best = (i64::MIN, 0u32);
    for removed in 0..full {
        let c = component_count(&adj, full & !removed) as i64;
        if c >= 2 {
            let value = c - removed.count_ones() as i64;
            if value > best.0 {
                best = (value, removed);
            }
        }
    }
    let members = (0..n).filter(|&v| best.1 & (1 << v) != 0).collect();
    Ok(Some((best.0, members)))
}

/// `ends[mask][v]`: bitmask of start vertices of Hamilton paths of
/// `G[mask]` that end at `v`.
fn path_table(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let mut table = vec![0u32; (1usize << n) * n];
    for v in 0..n {
        table[(1usize << v) * n + v] = 1 << v;
    }
    for mask in 1usize..(1 << n) {
        for last in 0..n {
            let starts = table[mask * n + last];
            if starts == 0 {
                continue;
            }
            let mut next = adj[last] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                table[(mask | (1 << w)) * n + w] |= starts;
            }
        }
    }
    table
}

pub fn oracle_hamilton(g: &Graph, mode: HamiltonMode) -> Result<bool, OracleError> {
    check(g, HAMILTON_LIMIT)?;
    let n = g.n();
    if let HamiltonMode::Between(v, w) = mode {
        if v >= n || w >= n {
            return Err(OracleError::VertexOutOfRange(v.max(w)));
        }
    }
    if n == 0 {
        return Ok(false);
    }
    let adj = adjacency_masks(g);
    let table = path_table(&adj);
    let full = (1usize << n) - 1;
    let row = &table[full * n..(full + 1) * n];
    Ok(match mode {
        HamiltonMode::Path => row.iter().any(|&s| s != 0),
        HamiltonMode::Cycle => n >= 3 && (0..n).any(|last| row[last] & adj[last] != 0),
        HamiltonMode::Between(v, w) => {
            if v == w {
                n == 1
            } else {
                row[w] & (1 << v) != 0
            }
        }
    })
}

/// Maximum `p` such that a spanning `p`-stave between `v` and `w` exists;
/// 0 when there is none.
pub fn oracle_max_stave(g: &Graph, v: usize, w: usize) -> Result<usize, OracleError> {
    check(g, STAVE_LIMIT)?;
    let n = g.n();
    if v >= n || w >= n {
        return Err(OracleError::VertexOutOfRange(v.max(w)));
    }
    if v == w {
        return Ok(0);
    }
    let inner: Vec<usize> = (0..n).filter(|&x| x != v && x != w).collect();
    let k = inner.len();
    let direct = usize::from(g.has_edge(v, w));
    if k == 0 {
        return Ok(direct);
    }
    // Local adjacency among inner vertices.
    let local_adj: Vec<u32> = inner
        .iter()
        .map(|&x| {
            inner
                .iter()
                .enumerate()
                .filter(|&(_, &y)| g.has_edge(x, y))
                .fold(0u32, |m, (j, _)| m | (1 << j))
        })
        .collect();
    let near_v: u32 = (0..k)
        .filter(|&j| g.has_edge(inner[j], v))
        .fold(0, |m, j| m | (1 << j));
    let near_w: u32 = (0..k)
        .filter(|&j| g.has_edge(inner[j], w))
        .fold(0, |m, j| m | (1 << j));

    // reach[mask]: set of last vertices of paths covering mask that start
    // next to v.
    let size = 1usize << k;
    let mut reach = vec![0u32; size];
    for j in 0..k {
        if near_v & (1 << j) != 0 {
            reach[1 << j] |= 1 << j;
        }
    }
    for mask in 1..size {
        let mut lasts = reach[mask];
        while lasts != 0 {
            let j = lasts.trailing_zeros() as usize;
            lasts &= lasts - 1;
            let mut next = local_adj[j] & !(mask as u32);
            while next != 0 {
                let x = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | (1 << x)] |= 1 << x;
            }
        }
    }
    // best[mask]: most parts in a partition of mask into v-w routable sets.
    const NONE: i32 = i32::MIN;
    let mut best = vec![NONE; size];
    best[0] = 0;
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if reach[part] as usize & near_w as usize != 0 && best[mask ^ part] != NONE {
                best[mask] = best[mask].max(best[mask ^ part] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let parts = best[size - 1];
    Ok(if parts == NONE {
        0
    } else {
        parts as usize + direct
    })
}

/// Size of a smallest path cover.
pub fn oracle_min_path_cover(g: &Graph) -> Result<usize, OracleError> {
    check(g, PATH_COVER_LIMIT)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_masks(g);
    let table = path_table(&adj);
    let size = 1usize << n;
    let traceable: Vec<bool> = (0..size)
        .map(|mask| mask != 0 && table[mask * n..(mask + 1) * n].iter().any(|&s| s != 0))
        .collect();
    let mut best = vec![usize::MAX; size];
    best[0] = 0;
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if traceable[part] && best[mask ^ part] != usize::MAX {
                best[mask] = best[mask].min(best[mask ^ part] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(best[size - 1])
}

/// Whether `G[mask]` has a Hamilton path between every pair of its vertices.
/// One vertex counts as Hamilton-connected; so does an edge.
fn mask_hamilton_connected(adj: &[u32], mask: u32) -> bool {
    let verts: Vec<usize> = (0..adj.len()).filter(|&v| mask & (1 << v) != 0).collect();
    let k = verts.len();
    if k <= 1 {
        return true;
    }
    let local: Vec<u32> = verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| adj[v] & (1 << w) != 0)
                .fold(0u32, |m, (j, _)| m | (1 << j))
        })
        .collect();
    let table = path_table(&local);
    let full = (1usize << k) - 1;
    (0..k).all(|w| {
        let others = (full as u32) & !(1 << w);
        table[full * k + w] & others == others
    })
}

/// Whether `G - S` is Hamilton-connected for every proper subset `S` with
/// `|S| <= k`.
pub fn oracle_k_hamilton_connected(g: &Graph, k: usize) -> Result<bool, OracleError> {
    check(g, K_CONNECTED_LIMIT)?;
    if k > K_CONNECTED_MAX_K {
        return Err(OracleError::KTooLarge {
            k,
            limit: K_CONNECTED_MAX_K,
        });
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let full: u32 = (1u32 << n) - 1;
    for removed in 0..full {
        if removed.count_ones() as usize <= k && !mask_hamilton_connected(&adj, full & !removed) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Interval recognition by trying every ordering of the maximal cliques.
pub fn oracle_is_interval(g: &Graph) -> Result<bool, OracleError> {
    check(g, INTERVAL_LIMIT)?;
    let n = g.n();
    let adj = adjacency_masks(g);
    // Maximal cliques by brute force.
    let mut cliques: Vec<u32> = Vec::new();
    for mask in 1u32..(1 << n) {
        let is_clique = (0..n)
            .filter(|&v| mask & (1 << v) != 0)
            .all(|v| (adj[v] | (1 << v)) & mask == mask);
        if !is_clique {
            continue;
        }
        let maximal = (0..n)
            .filter(|&v| mask & (1 << v) == 0)
            .all(|v| adj[v] & mask != mask);
        if maximal {
            cliques.push(mask);
        }
    }
    if n == 0 {
        return Ok(true);
    }
    let k = cliques.len();
    // Consecutive arrangement search: place cliques left to right; a vertex
    // may not reappear once it has left.
    fn place(cliques: &[u32], used: &mut Vec<bool>, prev: u32, closed: u32, depth: usize) -> bool {
        if depth == cliques.len() {
            return true;
        }
        for i in 0..cliques.len() {
            if used[i] || cliques[i] & closed != 0 {
                continue;
            }
            used[i] = true;
            let left = prev & !cliques[i];
            if place(cliques, used, cliques[i], closed | left, depth + 1) {
                return true;
            }
            used[i] = false;
        }
        false
    }
    let mut used = vec![false; k];
    Ok(place(&cliques, &mut used, 0, 0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    /// a=0 b=1 c=2 d=3
    fn diamond() -> Graph {
        graph(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    fn star() -> Graph {
        graph(4, &[(0, 1), (0, 2), (0, 3)])
    }

    fn k5_minus_edge() -> Graph {
        let edges: Vec<_> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .filter(|&e| e != (0, 4))
            .collect();
        graph(5, &edges)
    }

    #[test]
    fn scattering_examples() {
        assert_eq!(
            oracle_scattering_number(&Graph::complete(4)).unwrap(),
            ScatteringValue::NegInfinity
        );
        assert_eq!(
            oracle_scattering_number(&diamond()).unwrap(),
            ScatteringValue::Finite(0)
        );
        assert_eq!(
            oracle_scattering_number(&star()).unwrap(),
            ScatteringValue::Finite(2)
        );
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            oracle_scattering_number(&p4).unwrap(),
            ScatteringValue::Finite(1)
        );
        assert_eq!(
            oracle_scattering_number(&k5_minus_edge()).unwrap(),
            ScatteringValue::Finite(-1)
        );
        assert_eq!(
            oracle_scattering_number(&graph(2, &[])).unwrap(),
            ScatteringValue::Finite(2)
        );
    }

    #[test]
    fn stave_examples() {
        let g = diamond();
        assert_eq!(oracle_max_stave(&g, 0, 3).unwrap(), 2);
        assert_eq!(oracle_max_stave(&g, 1, 2).unwrap(), 3);
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(oracle_max_stave(&p3, 0, 2).unwrap(), 1);
        assert_eq!(oracle_max_stave(&star(), 1, 3).unwrap(), 0);
    }

    #[test]
    fn hamilton_examples() {
        assert!(oracle_hamilton(&diamond(), HamiltonMode::Cycle).unwrap());
        assert!(!oracle_hamilton(&star(), HamiltonMode::Path).unwrap());
        // The only orders from b to c are b a d c and b d a c; a and d are
        // not adjacent.
        assert!(!oracle_hamilton(&diamond(), HamiltonMode::Between(1, 2)).unwrap());
        assert!(oracle_hamilton(&diamond(), HamiltonMode::Between(0, 3)).unwrap());
        assert!(!oracle_hamilton(&Graph::complete(2), HamiltonMode::Cycle).unwrap());
    }

    #[test]
    fn path_cover_examples() {
        let p5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(oracle_min_path_cover(&p5).unwrap(), 1);
        assert_eq!(oracle_min_path_cover(&star()).unwrap(), 2);
        assert_eq!(
            oracle_min_path_cover(&graph(4, &[(0, 1), (2, 3)])).unwrap(),
            2
        );
    }

    #[test]
    fn k_connectivity_examples() {
        let g = k5_minus_edge();
        assert!(oracle_k_hamilton_connected(&g, 0).unwrap());
        assert!(!oracle_k_hamilton_connected(&g, 1).unwrap());
        assert!(!oracle_k_hamilton_connected(&graph(3, &[(0, 1), (1, 2)]), 0).unwrap());
        assert!(oracle_k_hamilton_connected(&Graph::complete(4), 2).unwrap());
        assert!(oracle_k_hamilton_connected(&Graph::complete(1), 2).unwrap());
    }

    #[test]
    fn interval_recognition_oracle() {
        assert!(oracle_is_interval(&diamond()).unwrap());
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!oracle_is_interval(&c4).unwrap());
        let claw3 = graph(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        assert!(!oracle_is_interval(&claw3).unwrap());
    }

    #[test]
    fn size_caps() {
        assert!(matches!(
            oracle_hamilton(&Graph::complete(13), HamiltonMode::Path),
            Err(OracleError::TooLarge { n: 13, limit: 12 })
        ));
        assert!(matches!(
            oracle_k_hamilton_connected(&Graph::complete(4), 3),
            Err(OracleError::KTooLarge { .. })
        ));
    }
}
