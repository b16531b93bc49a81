use interval_hamilton::generators::gen_random;
use interval_hamilton::graph::component_lists;
use interval_hamilton::hamiltonicity::{
    classify, hamilton_cycle, hamilton_path, hamilton_path_between, path_cover_certificate,
    stave_certificate, verify_certificate, BetweenResult,
};
use interval_hamilton::oracle::{oracle_min_path_cover, oracle_scattering_number};
use interval_hamilton::parse::{intersection_graph, parse_intervals, write_intervals};
use interval_hamilton::scattering::{min_path_cover, scattering_number};
use interval_hamilton::stave::{sweep_with, SweepOptions, SweepOutcome};
use interval_hamilton::{build_model, verify_model, Graph};
use proptest::prelude::*;

fn largest_component(g: &Graph) -> Graph {
    let parts = component_lists(g);
    let best = parts
        .iter()
        .max_by_key(|p| p.len())
        .expect("non-empty graph");
    g.induced_on(best).0
}

fn random_connected() -> impl Strategy<Value = Graph> {
    (1usize..60, 0u32..6, any::<u64>())
        .prop_map(|(n, len, seed)| largest_component(&gen_random(n, len, seed).graph))
}

fn random_small() -> impl Strategy<Value = Graph> {
    (1usize..=12, 0u32..4, any::<u64>()).prop_map(|(n, len, seed)| gen_random(n, len, seed).graph)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn models_reconstruct_the_graph(g in random_connected()) {
        let model = build_model(&g).unwrap();
        prop_assert!(verify_model(&g, &model).is_ok());
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let overlap = model.start(u) <= model.end(v) && model.start(v) <= model.end(u);
                prop_assert_eq!(overlap, g.has_edge(u, v));
            }
        }
        prop_assert_eq!(model.start(model.u1()), 1);
        prop_assert_eq!(model.end(model.un()), model.s());
    }

    #[test]
    fn trace_times_lie_inside_intervals(g in random_connected()) {
        prop_assume!(!g.is_complete());
        let model = build_model(&g).unwrap();
        let run = sweep_with(&model, SweepOptions::default());
        let trace = &run.trace;
        for v in 0..g.n() {
            if let Some(a) = trace.activation[v] {
                prop_assert!(model.start(v) <= a && a <= model.end(v));
                if let Some(d) = trace.deactivation[v] {
                    prop_assert!(a <= d && d <= model.end(v));
                }
            }
            if let Some(p) = trace.pred[v] {
                if trace.path_of[p] == trace.path_of[v] {
                    prop_assert_eq!(trace.succ[p], Some(v));
                }
            }
        }
        match trace.outcome {
            SweepOutcome::Success { .. } => prop_assert_eq!(trace.selections.len(), model.s() - 1),
            SweepOutcome::Failure { t } => prop_assert_eq!(trace.selections.len(), t),
        }
        let mut last = usize::MAX;
        for event in &trace.events {
            prop_assert!(event.p_after < last);
            last = event.p_after;
        }
    }

    #[test]
    fn scattering_matches_oracle_on_small_graphs(g in random_small()) {
        let r = scattering_number(&g).unwrap();
        prop_assert_eq!(r.value, oracle_scattering_number(&g).unwrap());
        if let Some(w) = &r.witness {
            prop_assert!(w.recheck(&g));
            prop_assert_eq!(Some(w.value), r.value.finite());
        }
        let cover = min_path_cover(&g).unwrap();
        prop_assert!(cover.is_valid(&g));
        prop_assert_eq!(cover.size(), oracle_min_path_cover(&g).unwrap());
        prop_assert!(r.value.at_most(cover.size() as i64));
    }

    #[test]
    fn every_certificate_verifies(g in random_connected(), pair in any::<(usize, usize)>()) {
        let c = classify(&g).unwrap();
        if let Some(cert) = hamilton_path(&g).unwrap() {
            prop_assert!(verify_certificate(&g, &cert).is_ok());
        }
        prop_assert_eq!(hamilton_path(&g).unwrap().is_some(), c.traceable);
        if g.n() >= 3 {
            prop_assert_eq!(hamilton_cycle(&g).unwrap().is_some(), c.hamiltonian);
        }
        if let Some(cert) = stave_certificate(&g).unwrap() {
            prop_assert!(verify_certificate(&g, &cert).is_ok());
        }
        let cover = path_cover_certificate(&g).unwrap();
        prop_assert!(verify_certificate(&g, &cover).is_ok());
        if g.n() >= 2 {
            let v = pair.0 % g.n();
            let w = (v + 1 + pair.1 % (g.n() - 1)) % g.n();
            let result = hamilton_path_between(&g, v, w).unwrap();
            if c.hamilton_connected {
                prop_assert!(matches!(result, BetweenResult::Path(_)));
            }
            if let BetweenResult::Path(cert) = result {
                prop_assert!(verify_certificate(&g, &cert).is_ok());
            }
        }
    }

    #[test]
    fn intervals_round_trip(n in 1usize..40, len in 0u32..5, seed in any::<u64>()) {
        let generated = gen_random(n, len, seed);
        let text = write_intervals(&generated.intervals);
        let parsed = parse_intervals(&text).unwrap();
        prop_assert_eq!(&parsed, &generated.intervals);
        let g = intersection_graph(&parsed).unwrap();
        prop_assert_eq!(g.edges().collect::<Vec<_>>(), generated.graph.edges().collect::<Vec<_>>());
        prop_assert_eq!(gen_random(n, len, seed).graph.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }
}
