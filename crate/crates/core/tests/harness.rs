use splitcon::graph::{enumerate_all, enumerate_connected, is_isomorphic, parse_graph6, Graph};
use splitcon::harness::{census, replay, sweep, verify, verify_all, Source, TheoremId, Verdict};
use splitcon::invariants::{clique_number, independence_number};
use splitcon::split::{detect_exceptional, find_nonsplit_witness, is_split};
use splitcon::Error;

fn strip_timing(v: &mut serde_json::Value) {
    v.as_object_mut().unwrap().remove("elapsed_ms");
}

#[test]
fn repeated_runs_give_identical_reports() {
    for theorem in [TheoremId::ThmContraction, TheoremId::ThmPseudo, TheoremId::Lemma2] {
        let mut a = serde_json::to_value(verify(theorem, 7, &Source::Builtin).unwrap()).unwrap();
        let mut b = serde_json::to_value(verify(theorem, 7, &Source::Builtin).unwrap()).unwrap();
        strip_timing(&mut a);
        strip_timing(&mut b);
        assert_eq!(a, b);
    }
}

#[test]
fn every_theorem_passes_at_order_six() {
    let reports = verify_all(6, &Source::Builtin).unwrap();
    assert_eq!(reports.len(), 14);
    for r in &reports {
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert!(r.counterexamples.is_empty());
    }
}

#[test]
fn false_claim_counterexamples_reproduce() {
    // "every graph with omega + alpha <= n is split": false, e.g. for C4
    let claim = |g: &Graph| {
        (clique_number(g) + independence_number(g) <= g.order() && !is_split(g)).then(|| "not split".to_string())
    };
    let graphs: Vec<Graph> = (1..=6).flat_map(|n| enumerate_all(n).unwrap().iter().cloned()).collect();
    let found = sweep(&graphs, claim);
    assert!(!found.is_empty());
    assert!(found.windows(2).all(|w| w[0].graph6 < w[1].graph6));
    for c in &found {
        let g = parse_graph6(&c.graph6).unwrap();
        assert!(claim(&g).is_some(), "{} does not reproduce", c.graph6);
    }
    let c4 = Graph::cycle(4).unwrap();
    assert!(found.iter().any(|c| is_isomorphic(&parse_graph6(&c.graph6).unwrap(), &c4).unwrap()));
}

#[test]
fn replay_of_a_passing_graph_is_clean() {
    let c = splitcon::harness::Counterexample { graph6: "Dhc".into(), detail: String::new() };
    for t in TheoremId::ALL {
        assert!(!replay(t, &c).unwrap(), "{t}");
    }
}

#[test]
fn order_one_and_zero() {
    for r in verify_all(1, &Source::Builtin).unwrap() {
        assert!(r.passed());
    }
    assert_eq!(verify_all(0, &Source::Builtin).unwrap_err(), Error::OrderOutOfRange(0));
}

#[test]
fn ng_sweep_is_capped() {
    let r = verify(TheoremId::ThmNg, 8, &Source::Builtin).unwrap();
    assert_eq!(r.order_range.max, 7);
    assert!(r.notes.iter().any(|n| n.contains("capped n at 7")));
}

#[test]
fn cycle_sweep_counts() {
    let r = verify(TheoremId::Prop4, 10, &Source::Builtin).unwrap();
    assert_eq!(r.graphs_checked, 7);
    assert!(r.passed());
}

#[test]
fn contraction_sweep_finds_expected_families() {
    let r = verify(TheoremId::ThmContraction, 7, &Source::Builtin).unwrap();
    assert!(r.passed(), "{r}");
    let note = r.notes.iter().find(|n| n.starts_with("exceptional set found")).unwrap();
    for name in ["H1(l=2)", "H1(l=5)", "H2", "H3", "H5", "H6", "H7"] {
        assert!(note.contains(name), "{note}");
    }
    assert!(!note.contains("H1(l=6)"));
}

#[test]
fn corpus_sweep_skips_large_graphs() {
    let corpus = vec![Graph::cycle(5).unwrap(), Graph::complete(11).unwrap()];
    let r = verify(TheoremId::ThmPseudo, 10, &Source::Corpus(corpus)).unwrap();
    assert_eq!(r.graphs_checked, 1);
    assert!(r.passed());
}

#[test]
fn regions_partition_connected_graphs() {
    for n in 1..=7 {
        for g in enumerate_connected(n).unwrap() {
            let hits = [is_split(g), detect_exceptional(g).is_some(), find_nonsplit_witness(g).is_some()];
            assert_eq!(hits.iter().filter(|&&h| h).count(), 1, "{g:?}");
        }
    }
}

#[test]
fn census_rows() {
    let rows = census(6).unwrap();
    assert_eq!((rows[0].connected, rows[0].split, rows[0].balanced, rows[0].unbalanced), (1, 1, 0, 1));
    assert_eq!((rows[3].connected, rows[3].split, rows[3].non_split), (6, 5, 1));
    assert_eq!(rows[3].exceptional_total(), 1);
    assert_eq!(rows[3].exceptional["H1(l=2)"], 1);
    assert_eq!(rows[4].connected, 21);
    assert_eq!(rows[5].connected, 112);
    // order 5: K2,3, W4, P5, hammer and butterfly
    assert_eq!(rows[4].exceptional_total(), 5);
}
