use interval_hamilton::generators::gen_exhaustive;
use interval_hamilton::model::{build_model, verify_model};
use interval_hamilton::oracle::{
    oracle_hamilton, oracle_max_stave, oracle_min_path_cover, oracle_scattering_number,
    HamiltonMode,
};
use interval_hamilton::scattering::{min_path_cover, scattering_number};
use interval_hamilton::stave::{internal_dominates, single_path, sweep, verify_stave};
use rayon::prelude::*;

fn all_upto(n: usize) -> Vec<interval_hamilton::Graph> {
    (1..=n).flat_map(|k| gen_exhaustive(k).unwrap()).collect()
}

#[test]
fn models_verify_for_every_small_graph() {
    all_upto(8).par_iter().for_each(|g| {
        let model = build_model(g).unwrap();
        assert!(verify_model(g, &model).is_ok());
    });
}

#[test]
fn sweep_is_optimal() {
    all_upto(8)
        .par_iter()
        .filter(|g| !g.is_complete())
        .for_each(|g| {
            let model = build_model(g).unwrap();
            let best = oracle_max_stave(g, model.u1(), model.un()).unwrap();
            let (result, _) = sweep(&model).unwrap();
            match result {
                Ok(stave) => {
                    assert_eq!(stave.p(), best, "{g:?}");
                    verify_stave(g, &stave, true).unwrap();
                    for path in &stave.paths {
                        assert!(internal_dominates(g, path));
                    }
                }
                Err(_) => assert_eq!(best, 0, "{g:?}"),
            }
        });
}

#[test]
fn single_path_sweep_decides_traceability() {
    all_upto(8).par_iter().for_each(|g| {
        let model = build_model(g).unwrap();
        let traceable = oracle_hamilton(g, HamiltonMode::Path).unwrap();
        let path = single_path(&model);
        assert_eq!(path.is_some(), traceable, "{g:?}");
    });
}

#[test]
fn scattering_and_cover_match_oracles() {
    all_upto(8).par_iter().for_each(|g| {
        let r = scattering_number(g).unwrap();
        assert_eq!(r.value, oracle_scattering_number(g).unwrap(), "{g:?}");
        if let Some(w) = &r.witness {
            assert!(w.recheck(g));
        }
        let cover = min_path_cover(g).unwrap();
        assert!(cover.is_valid(g));
        assert_eq!(cover.size(), oracle_min_path_cover(g).unwrap(), "{g:?}");
    });
}

#[test]
fn stave_count_tracks_scattering_number() {
    all_upto(8).par_iter().filter(|g| g.n() >= 2).for_each(|g| {
        let model = build_model(g).unwrap();
        let best = oracle_max_stave(g, model.u1(), model.un()).unwrap();
        let sc = scattering_number(g).unwrap().value;
        for p in 1..=g.degree(model.u1()) {
            assert_eq!(best >= p, sc.at_most(2 - p as i64), "p={p} {g:?}");
        }
    });
}
