use interval_hamilton::generators::gen_exhaustive;
use interval_hamilton::hamiltonicity::{
    classify, hamilton_cycle, hamilton_path, hamilton_path_avoiding, hamilton_path_between,
    verify_certificate, BetweenResult, HamiltonError,
};
use interval_hamilton::oracle::{oracle_hamilton, oracle_k_hamilton_connected, HamiltonMode};
use interval_hamilton::{Graph, VertexSet};
use rayon::prelude::*;

fn all_upto(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|k| gen_exhaustive(k).unwrap()).collect()
}

#[test]
fn flags_and_certificates_match_oracle() {
    all_upto(8).par_iter().for_each(|g| {
        let c = classify(g).unwrap();
        let traceable = oracle_hamilton(g, HamiltonMode::Path).unwrap();
        let hamiltonian = g.n() >= 3 && oracle_hamilton(g, HamiltonMode::Cycle).unwrap();
        assert_eq!(c.traceable, traceable, "{g:?}");
        assert_eq!(c.hamiltonian, hamiltonian, "{g:?}");

        let path = hamilton_path(g).unwrap();
        assert_eq!(path.is_some(), traceable);
        if let Some(cert) = path {
            verify_certificate(g, &cert).unwrap();
        }
        let cycle = hamilton_cycle(g).unwrap();
        assert_eq!(cycle.is_some(), hamiltonian);
        if let Some(cert) = cycle {
            verify_certificate(g, &cert).unwrap();
        }
    });
}

#[test]
fn k_max_matches_oracle() {
    all_upto(8)
        .par_iter()
        .filter(|g| !g.is_complete())
        .for_each(|g| {
            let c = classify(g).unwrap();
            for k in 0..=2usize {
                let expected = oracle_k_hamilton_connected(g, k).unwrap();
                let claimed = c.k_max.is_some_and(|m| m >= k);
                assert_eq!(claimed, expected, "k={k} {g:?}");
            }
        });
}

#[test]
fn hamilton_connected_graphs_yield_every_pair() {
    all_upto(8).par_iter().filter(|g| g.n() >= 2).for_each(|g| {
        let c = classify(g).unwrap();
        for v in 0..g.n() {
            for w in 0..g.n() {
                if v == w {
                    continue;
                }
                match hamilton_path_between(g, v, w).unwrap() {
                    BetweenResult::Path(cert) => {
                        assert!(c.hamilton_connected, "{g:?}");
                        verify_certificate(g, &cert).unwrap();
                        assert_eq!(cert.endpoints, Some((v, w)));
                    }
                    BetweenResult::NoPath { .. } => {
                        assert!(!c.hamiltonian);
                        assert!(!oracle_hamilton(g, HamiltonMode::Cycle).unwrap() || g.n() < 3);
                    }
                    BetweenResult::Unknown { .. } => {
                        assert!(c.hamiltonian || c.traceable);
                        assert!(!c.hamilton_connected);
                    }
                }
            }
        }
    });
}

#[test]
fn reversed_pair_gives_reversed_vertex_set() {
    all_upto(7).par_iter().for_each(|g| {
        if !classify(g).unwrap().hamilton_connected || g.n() < 2 {
            return;
        }
        let (BetweenResult::Path(a), BetweenResult::Path(b)) = (
            hamilton_path_between(g, 0, g.n() - 1).unwrap(),
            hamilton_path_between(g, g.n() - 1, 0).unwrap(),
        ) else {
            panic!("{g:?}");
        };
        let mut x = a.vertices.clone();
        let mut y = b.vertices.clone();
        x.sort_unstable();
        y.sort_unstable();
        assert_eq!(x, y);
    });
}

#[test]
fn avoiding_single_vertices_agrees_with_oracle() {
    all_upto(7).par_iter().filter(|g| g.n() >= 3).for_each(|g| {
        for s in 0..g.n() {
            let removed = VertexSet::from_iter(g.n(), [s]);
            let keep: Vec<usize> = (0..g.n()).filter(|&x| x != s).collect();
            let (h, map) = g.induced_on(&keep);
            for v in 0..h.n() {
                for w in 0..h.n() {
                    if v == w {
                        continue;
                    }
                    match hamilton_path_avoiding(g, &removed, map[v], map[w]) {
                        Ok(cert) => {
                            verify_certificate(g, &cert).unwrap();
                            assert!(oracle_hamilton(&h, HamiltonMode::Between(v, w)).unwrap());
                        }
                        Err(HamiltonError::Infeasible { scattering_number }) => {
                            assert!(!scattering_number.at_most(-1), "{g:?}");
                        }
                        Err(e) => panic!("{e} {g:?}"),
                    }
                }
            }
        }
    });
}
