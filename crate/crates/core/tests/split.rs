use splitcon::graph::{enumerate_all, is_isomorphic, NamedPattern};
use splitcon::invariants::{clique_number, contains_induced, independence_number};
use splitcon::split::*;
use splitcon::{Edge, Error, Graph, VertexSet};

fn vs(v: &[usize]) -> VertexSet {
    VertexSet::from_vertices(v.iter().copied())
}

fn two_k2() -> Graph {
    Graph::build(4, &[(0, 1), (2, 3)]).unwrap()
}

#[test]
fn recognizers_on_small_graphs() {
    let (c4, p4, star3) = (Graph::cycle(4).unwrap(), Graph::path(4).unwrap(), Graph::star(3).unwrap());
    for (g, split) in [(&c4, false), (&p4, true), (&two_k2(), false), (&star3, true)] {
        assert_eq!(is_split_forbidden(g), split);
        assert_eq!(is_split_degrees(g), split);
        assert_eq!(is_split(g), split);
    }
}

#[test]
fn ks_partitions() {
    let p4 = Graph::path(4).unwrap();
    let p = ks_partition(&p4).unwrap();
    assert_eq!((p.k, p.s), (vs(&[1, 2]), vs(&[0, 3])));
    assert_eq!(classify_ks_case(&p4, &p).unwrap(), KSCase::I);

    let k3 = Graph::complete(3).unwrap();
    let p = ks_partition(&k3).unwrap();
    assert_eq!((p.k, p.s), (k3.vertices(), VertexSet::default()));
    assert_eq!(classify_ks_case(&k3, &p).unwrap(), KSCase::III);
    let q = KSPartition { k: vs(&[0, 1]), s: vs(&[2]) };
    assert_eq!(classify_ks_case(&k3, &q).unwrap(), KSCase::II);

    let e3 = Graph::empty(3).unwrap();
    let p = ks_partition(&e3).unwrap();
    assert_eq!((p.k, p.s), (vs(&[0]), vs(&[1, 2])));

    assert_eq!(ks_partition(&Graph::cycle(4).unwrap()).unwrap_err(), Error::NotSplit);
}

#[test]
fn balanced_split() {
    assert!(is_balanced_split(&Graph::path(4).unwrap()).unwrap());
    assert!(!is_balanced_split(&Graph::star(3).unwrap()).unwrap());
    assert!(!is_balanced_split(&Graph::complete(1).unwrap()).unwrap());
    assert_eq!(is_balanced_split(&Graph::cycle(5).unwrap()), Err(Error::NotSplit));
}

#[test]
fn balanced_criterion_matches_partition_search() {
    for n in 1..=7 {
        for g in enumerate_all(n).unwrap() {
            if !is_split(g) {
                continue;
            }
            let (omega, alpha) = (clique_number(g), independence_number(g));
            let exists = (0u64..1 << n).any(|k| {
                let p = KSPartition { k: VertexSet(k), s: g.vertices().difference(VertexSet(k)) };
                p.is_valid(g) && p.k.len() == omega && p.s.len() == alpha
            });
            assert_eq!(exists, is_balanced_split(g).unwrap(), "{g:?}");
        }
    }
}

#[test]
fn split_closure() {
    for n in 1..=7 {
        for g in enumerate_all(n).unwrap() {
            assert_eq!(is_split(g), is_split(&g.complement()));
            if is_split(g) {
                for e in g.edges() {
                    assert!(is_split(&g.contract(e).unwrap()));
                }
            }
        }
    }
}

#[test]
fn exceptional_detection() {
    assert_eq!(detect_exceptional(&Graph::cycle(4).unwrap()), Some(ExceptionalFamily::H1(2)));
    assert_eq!(detect_exceptional(&NamedPattern::Butterfly.template().unwrap()), Some(ExceptionalFamily::H7));
    assert_eq!(detect_exceptional(&Graph::complete(4).unwrap()), None);
    assert_eq!(detect_exceptional(&Graph::complete_bipartite(2, 5).unwrap()), Some(ExceptionalFamily::H1(5)));
}

#[test]
fn c4_witness() {
    // C4 on 0..3 with a pendant at 0
    let banner = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
    let e = find_c4_witness(&banner).unwrap().unwrap();
    assert_eq!(e, Edge::new(0, 4));
    assert!(contains_induced(&banner.contract(e).unwrap(), NamedPattern::C4));
    assert_eq!(find_c4_witness(&NamedPattern::W4.template().unwrap()).unwrap(), None);
    assert_eq!(find_c4_witness(&Graph::complete_bipartite(2, 3).unwrap()).unwrap(), None);
    assert_eq!(find_c4_witness(&Graph::path(4).unwrap()), Err(Error::NoInducedC4));
}

#[test]
fn two_k2_witness() {
    let p6 = Graph::path(6).unwrap();
    let e = find_2k2_witness(&p6).unwrap().unwrap();
    assert_eq!(e, Edge::new(0, 1));
    assert!(contains_induced(&p6.contract(e).unwrap(), NamedPattern::TwoK2));
    assert_eq!(find_2k2_witness(&Graph::path(5).unwrap()).unwrap(), None);
    assert_eq!(find_2k2_witness(&Graph::cycle(6).unwrap()).unwrap(), None);
}

#[test]
fn nonsplit_witness() {
    let c6 = Graph::cycle(6).unwrap();
    let e = find_nonsplit_witness(&c6).unwrap();
    assert!(!is_split(&c6.contract(e).unwrap()));
    assert_eq!(find_nonsplit_witness(&Graph::path(4).unwrap()), None);
    assert_eq!(find_nonsplit_witness(&NamedPattern::W4.template().unwrap()), None);
}

#[test]
fn unbalanced_witness() {
    // triangle 0-1-2 with pendant 3 on 0
    let paw = Graph::build(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
    let e = find_unbalanced_witness(&paw).unwrap().unwrap();
    assert!(is_unbalanced_witness(&paw, e).unwrap());
    assert!(is_unbalanced_witness(&paw, Edge::new(1, 2)).unwrap());
    let q = paw.contract(Edge::new(1, 2)).unwrap();
    assert!(is_isomorphic(&q, &Graph::path(3).unwrap()).unwrap());

    assert_eq!(find_unbalanced_witness(&Graph::path(4).unwrap()).unwrap(), None);
    assert_eq!(find_unbalanced_witness(&Graph::complete(2).unwrap()).unwrap(), Some(Edge::new(0, 1)));
    assert_eq!(find_unbalanced_witness(&Graph::star(3).unwrap()), Err(Error::IsStar(3)));
    assert_eq!(find_unbalanced_witness(&Graph::cycle(4).unwrap()), Err(Error::NotSplit));
}

#[test]
fn pseudo_split() {
    let d = pseudo_split_decompose(&Graph::cycle(5).unwrap()).unwrap();
    assert_eq!((d.a, d.b, d.c), (VertexSet::default(), VertexSet::default(), vs(&[0, 1, 2, 3, 4])));
    let d = pseudo_split_decompose(&Graph::path(4).unwrap()).unwrap();
    assert_eq!((d.a, d.b, d.c), (vs(&[1, 2]), vs(&[0, 3]), VertexSet::default()));
    assert_eq!(pseudo_split_decompose(&Graph::cycle(4).unwrap()), Err(Error::NotPseudoSplit));
    assert!(!is_pseudo_split(&two_k2()));
}

#[test]
fn nordhaus_gaddum() {
    for (g, ng) in [(Graph::cycle(5).unwrap(), true), (Graph::star(3).unwrap(), true), (Graph::path(4).unwrap(), false)]
    {
        assert_eq!(is_ng_by_definition(&g).unwrap(), ng);
        assert_eq!(is_ng_by_characterisation(&g), ng);
    }
    assert_eq!(is_ng_by_contraction(&Graph::cycle(5).unwrap()).unwrap(), Some(true));
    assert_eq!(is_ng_by_contraction(&Graph::path(4).unwrap()).unwrap(), Some(false));
}

#[test]
fn stars() {
    assert!(is_star(&Graph::star(3).unwrap()));
    assert!(!is_star(&Graph::path(4).unwrap()));
    assert!(is_star(&Graph::complete(2).unwrap()));
    assert_eq!(star_size(&Graph::complete(2).unwrap()), Some(1));
}

#[test]
fn reports() {
    let r = classify(&Graph::cycle(5).unwrap()).unwrap();
    assert!(!r.is_split && r.is_pseudo_split && r.is_ng && r.exceptional.is_none());
    let r = classify(&Graph::path(5).unwrap()).unwrap();
    assert_eq!(r.exceptional, Some(ExceptionalFamily::H5));
    assert!(!r.is_pseudo_split);
    let r = classify(&Graph::complete(4).unwrap()).unwrap();
    assert_eq!((r.is_split, r.is_balanced_split, r.is_ng), (true, Some(false), true));
    for n in 1..=6 {
        for g in enumerate_all(n).unwrap() {
            let r = classify(g).unwrap();
            assert_eq!(r.is_split, r.ks.is_some());
            assert!(r.ks.is_none_or(|p| p.is_valid(g)));
            assert!(r.psd.as_ref().is_none_or(|d| d.validate(g).is_ok()));
            assert!(!(r.exceptional.is_some() && r.is_split));
        }
    }
}
