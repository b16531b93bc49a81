//! Lexicographic breadth-first search and the chordal-graph machinery built
//! on it: perfect elimination check and maximal clique listing.

use crate::graph::Graph;

/// LexBFS of the subgraph induced by `verts`, returned as global vertex ids
/// in visit order. Ties are broken by position in `verts`.
///
/// `scratch` must have length `g.n()` and hold `usize::MAX` everywhere; it is
/// restored before returning.
pub(crate) fn lex_bfs_on(g: &Graph, verts: &[usize], scratch: &mut [usize]) -> Vec<usize> {
    let k = verts.len();
    for (i, &v) in verts.iter().enumerate() {
        scratch[v] = i;
    }
    // order[pos] = local vertex; classes are contiguous ranges of `order`.
    let mut order: Vec<usize> = (0..k).collect();
    let mut pos: Vec<usize> = (0..k).collect();
    let mut class = vec![0usize; k];
    let mut class_start = vec![0usize];
    let mut split_stamp = vec![usize::MAX];
    let mut split_into = vec![0usize];

    for i in 0..k {
        let v = order[i];
        let c = class[v];
        class_start[c] += 1;
        for &w in g.neighbors(verts[v]) {
            let w = scratch[w];
            if w == usize::MAX || pos[w] <= i {
                continue;
            }
            let c = class[w];
            if split_stamp[c] != i {
                split_stamp[c] = i;
                split_into[c] = class_start.len();
                class_start.push(class_start[c]);
                split_stamp.push(usize::MAX);
                split_into.push(0);
            }
            let nc = split_into[c];
            let front = class_start[c];
            let other = order[front];
            order.swap(front, pos[w]);
            pos[other] = pos[w];
            pos[w] = front;
            class_start[c] += 1;
            class[w] = nc;
        }
    }
    for &v in verts {
        scratch[v] = usize::MAX;
    }
    order.into_iter().map(|v| verts[v]).collect()
}

pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let verts: Vec<usize> = (0..g.n()).collect();
    lex_bfs_on(g, &verts, &mut vec![usize::MAX; g.n()])
}

/// Whether the reverse of `order` is a perfect elimination ordering, i.e.
/// every vertex's earlier neighbors form a clique.
pub fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // parent(v) = latest earlier neighbor; E(v) \ parent must lie in E(parent).
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in order {
        let parent = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .max_by_key(|&w| pos[w]);
        if let Some(p) = parent {
            checks[p].push(v);
        }
    }
    let mut mark = vec![usize::MAX; n];
    for &p in order {
        if checks[p].is_empty() {
            continue;
        }
        for &w in g.neighbors(p) {
            if pos[w] < pos[p] {
                mark[w] = p;
            }
        }
        for &v in &checks[p] {
            let ok = g
                .neighbors(v)
                .iter()
                .all(|&w| pos[w] >= pos[p] || mark[w] == p);
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Maximal cliques of a chordal graph from an ordering whose reverse is a
/// perfect elimination ordering. Each clique is sorted; cliques are listed in
/// the order their defining vertices appear in `order`.
pub fn maximal_cliques(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let earlier = |v: usize| g.neighbors(v).iter().filter(|&&w| pos[w] < pos[v]).count();
    // {v} + E(v) is maximal unless some w has parent v and |E(w)| = |E(v)| + 1.
    let mut dominated = vec![false; n];
    for &w in order {
        let parent = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&x| pos[x] < pos[w])
            .max_by_key(|&x| pos[x]);
        if let Some(p) = parent {
            if earlier(w) == earlier(p) + 1 {
                dominated[p] = true;
            }
        }
    }
    order
        .iter()
        .filter(|&&v| !dominated[v])
        .map(|&v| {
            let mut clique: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] < pos[v])
                .collect();
            clique.push(v);
            clique.sort_unstable();
            clique
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    /// The chosen vertex must carry the lexicographically largest label,
    /// where a label marks adjacency to each already visited position.
    fn is_lex_bfs(g: &Graph, order: &[usize]) -> bool {
        let n = g.n();
        let label = |v: usize, upto: usize| -> Vec<bool> {
            order[..upto].iter().map(|&u| g.has_edge(u, v)).collect()
        };
        (0..n).all(|i| {
            let chosen = label(order[i], i);
            order[i + 1..].iter().all(|&w| label(w, i) <= chosen)
        })
    }

    #[test]
    fn path_order() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(lex_bfs(&g), vec![0, 1, 2, 3]);
    }

    #[test]
    fn lex_bfs_property_on_small_graphs() {
        let g = graph(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        );
        assert!(is_lex_bfs(&g, &lex_bfs(&g)));
        let g = graph(6, &[(0, 3), (0, 4), (1, 4), (2, 5), (3, 5), (1, 2)]);
        assert!(is_lex_bfs(&g, &lex_bfs(&g)));
    }

    #[test]
    fn chordality() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!is_perfect_elimination(&c4, &lex_bfs(&c4)));
        let diamond = graph(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert!(is_perfect_elimination(&diamond, &lex_bfs(&diamond)));
    }

    #[test]
    fn diamond_cliques() {
        let g = graph(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let mut cliques = maximal_cliques(&g, &lex_bfs(&g));
        cliques.sort();
        assert_eq!(cliques, vec![vec![0, 1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn star_cliques() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let mut cliques = maximal_cliques(&g, &lex_bfs(&g));
        cliques.sort();
        assert_eq!(cliques, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
    }
}
