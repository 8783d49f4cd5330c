//! Per-graph checks. Each returns `Some(detail)` when `g` violates the
//! statement, `None` otherwise (including when the statement is vacuous
//! for `g`).

use crate::graph::{is_isomorphic, Graph, NamedPattern, VertexSet};
use crate::invariants::{clique_number, contains_induced, dominates, independence_number, is_perfect};
use crate::split::{
    classify_ks_case, detect_exceptional, find_2k2_witness, find_c4_witness, find_nonsplit_witness,
    find_unbalanced_witness, has_c5_decomposition, is_balanced_split, is_ng_by_characterisation, is_ng_by_contraction,
    is_ng_by_definition, is_pseudo_split, is_split, is_split_degrees, is_split_forbidden, is_unbalanced_witness,
    ks_partition, pseudo_split_decompose, star_size, ExceptionalFamily, KSCase, KSPartition,
};

use super::theorem::TheoremId;

pub fn check_graph(theorem: TheoremId, g: &Graph) -> Option<String> {
    match theorem {
        TheoremId::Prop1 => prop1(g),
        TheoremId::Prop2 => prop2(g),
        TheoremId::Prop3 => prop3(g),
        TheoremId::Prop4 => prop4(g),
        TheoremId::Prop5 => prop5(g),
        TheoremId::Lemma1 => lemma1(g),
        TheoremId::Lemma2 => lemma2(g),
        TheoremId::ThmSplitForbidden => split_forbidden(g),
        TheoremId::Thm2k2Claw => two_k2_claw(g),
        TheoremId::ThmContraction => contraction(g),
        TheoremId::ThmKsCases => ks_cases(g),
        TheoremId::ThmUnbalanced => unbalanced(g),
        TheoremId::ThmPseudo => pseudo(g),
        TheoremId::ThmNg => ng(g),
    }
}

fn iso(a: &Graph, b: &Graph) -> bool {
    is_isomorphic(a, b).unwrap_or(false)
}

/// Is `G[C]` isomorphic to `(G/uv)[image of C]`?
fn preserved(g: &Graph, c: VertexSet, u: usize, v: usize) -> bool {
    let e = crate::graph::Edge::new(u, v);
    let h = g.contract(e).expect("adjacent");
    let image = Graph::contracted_set(e, c);
    iso(&g.induced(c).expect("nonempty"), &h.induced(image).expect("nonempty"))
}

fn nonempty_subsets(g: &Graph) -> impl Iterator<Item = VertexSet> {
    (1u64..1 << g.order()).map(VertexSet)
}

fn prop1(g: &Graph) -> Option<String> {
    for c in nonempty_subsets(g) {
        for u in c.iter() {
            let nc_u = g.neighbors(u).intersection(c);
            for v in g.neighbors(u).difference(c).iter() {
                let nc_v = g.neighbors(v).intersection(c).difference(VertexSet::singleton(u));
                if nc_v.is_subset(nc_u) && !preserved(g, c, u, v) {
                    return Some(format!("C={c} u={u} v={v}: G[C] not preserved"));
                }
            }
        }
    }
    None
}

fn prop2(g: &Graph) -> Option<String> {
    for c in nonempty_subsets(g) {
        for e in g.edges() {
            if !c.contains(e.u) && !c.contains(e.v) && !preserved(g, c, e.u, e.v) {
                return Some(format!("C={c} e={e}: G[C] not preserved"));
            }
        }
    }
    None
}

fn prop3(g: &Graph) -> Option<String> {
    if !g.is_connected() {
        return None;
    }
    for c in nonempty_subsets(g) {
        if dominates(g, c) {
            continue;
        }
        if !g.edges().any(|e| preserved(g, c, e.u, e.v)) {
            return Some(format!("C={c} is not dominating but no contraction preserves G[C]"));
        }
    }
    None
}

fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && g.degrees().iter().all(|&d| d == 2)
}

fn prop4(g: &Graph) -> Option<String> {
    let n = g.order();
    if n < 4 || !is_cycle(g) {
        return None;
    }
    let target = Graph::cycle(n - 1).expect("n >= 4");
    g.edges().find(|&e| !iso(&g.contract(e).expect("edge"), &target)).map(|e| format!("C{n}/{e} is not C{}", n - 1))
}

fn prop5(g: &Graph) -> Option<String> {
    let n = g.order();
    if n < 2 || g.edge_count() != n * (n - 1) / 2 {
        return None;
    }
    let target = Graph::complete(n - 1).expect("n >= 2");
    g.edges().find(|&e| !iso(&g.contract(e).expect("edge"), &target)).map(|e| format!("K{n}/{e} is not K{}", n - 1))
}

fn lemma1(g: &Graph) -> Option<String> {
    if !g.is_connected() || !contains_induced(g, NamedPattern::C4) {
        return None;
    }
    let terminal =
        matches!(detect_exceptional(g), Some(ExceptionalFamily::H1(_) | ExceptionalFamily::H2 | ExceptionalFamily::H3));
    match (find_c4_witness(g), terminal) {
        (Err(e), _) => Some(format!("witness search failed: {e}")),
        (Ok(None), true) => None,
        (Ok(Some(e)), true) => Some(format!("terminal graph has a C4-preserving contraction {e}")),
        (Ok(None), false) => Some("no contraction keeps an induced C4".into()),
        (Ok(Some(e)), false) => {
            let h = g.contract(e).expect("edge");
            (!contains_induced(&h, NamedPattern::C4)).then(|| format!("witness {e} leaves no induced C4"))
        }
    }
}

fn is_lemma2_terminal(g: &Graph) -> bool {
    matches!(
        detect_exceptional(g),
        Some(ExceptionalFamily::H4 | ExceptionalFamily::H5 | ExceptionalFamily::H6 | ExceptionalFamily::H7)
    ) || (g.order() == 6 && iso(g, &Graph::cycle(6).expect("C6")))
}

fn lemma2(g: &Graph) -> Option<String> {
    if !g.is_connected() || !contains_induced(g, NamedPattern::TwoK2) {
        return None;
    }
    let has_target = |h: &Graph| contains_induced(h, NamedPattern::TwoK2) || contains_induced(h, NamedPattern::C4);
    match (find_2k2_witness(g), is_lemma2_terminal(g)) {
        (Err(e), _) => Some(format!("witness search failed: {e}")),
        (Ok(None), true) => None,
        (Ok(Some(e)), true) => Some(format!("terminal graph has a 2K2/C4-preserving contraction {e}")),
        (Ok(None), false) => Some("no contraction keeps an induced 2K2 or C4".into()),
        (Ok(Some(e)), false) => {
            let h = g.contract(e).expect("edge");
            (!has_target(&h)).then(|| format!("witness {e} leaves neither 2K2 nor C4"))
        }
    }
}

fn brute_force_partition_exists(g: &Graph) -> bool {
    (0u64..1 << g.order()).any(|k| {
        let k = VertexSet(k);
        g.is_clique(k) && g.is_independent(g.vertices().difference(k))
    })
}

fn split_forbidden(g: &Graph) -> Option<String> {
    let forbidden = is_split_forbidden(g);
    let degrees = is_split_degrees(g);
    let brute = brute_force_partition_exists(g);
    if forbidden != degrees || degrees != brute {
        return Some(format!("forbidden={forbidden} degrees={degrees} partition={brute}"));
    }
    if is_split_degrees(&g.complement()) != degrees {
        return Some("complement disagrees on splitness".into());
    }
    if brute {
        if let Err(e) = ks_partition(g) {
            return Some(format!("ks_partition failed: {e}"));
        }
    }
    None
}

fn two_k2_claw(g: &Graph) -> Option<String> {
    if !g.is_connected()
        || contains_induced(g, NamedPattern::TwoK2)
        || contains_induced(g, NamedPattern::Claw)
        || independence_number(g) < 3
    {
        return None;
    }
    if !is_split(g) {
        return Some("(2K2, claw)-free with alpha >= 3 but not split".into());
    }
    match is_perfect(g) {
        Ok(true) => None,
        Ok(false) => Some("(2K2, claw)-free with alpha >= 3 but not perfect".into()),
        Err(e) => Some(format!("perfection test failed: {e}")),
    }
}

fn contraction(g: &Graph) -> Option<String> {
    if !g.is_connected() {
        return None;
    }
    let split = is_split(g);
    let exceptional = detect_exceptional(g);
    let witness = find_nonsplit_witness(g);
    let regions = [split, exceptional.is_some(), witness.is_some()];
    if regions.iter().filter(|&&r| r).count() != 1 {
        return Some(format!(
            "region overlap or gap: split={split} exceptional={} nonsplit_witness={}",
            exceptional.map_or("none".to_string(), |x| x.to_string()),
            witness.map_or("none".to_string(), |e| e.to_string()),
        ));
    }
    None
}

/// Connected non-split graphs all of whose contractions are split,
/// decided without the family detector.
pub(crate) fn in_exceptional_region(g: &Graph) -> bool {
    g.is_connected() && !is_split(g) && g.edges().all(|e| is_split(&g.contract(e).expect("edge")))
}

fn ks_cases(g: &Graph) -> Option<String> {
    if !is_split(g) {
        return None;
    }
    let (omega, alpha) = (clique_number(g), independence_number(g));
    let mut case_one = 0;
    let mut partitions = 0;
    for k in 0u64..1 << g.order() {
        let p = KSPartition { k: VertexSet(k), s: g.vertices().difference(VertexSet(k)) };
        if !p.is_valid(g) {
            continue;
        }
        partitions += 1;
        match classify_ks_case(g, &p) {
            Ok(KSCase::I) => case_one += 1,
            Ok(_) => {}
            Err(e) => return Some(format!("K={} S={}: {e}", p.k, p.s)),
        }
    }
    if partitions == 0 {
        return Some("split graph without a KS-partition".into());
    }
    if case_one > 1 {
        return Some(format!("{case_one} case-I partitions"));
    }
    let balanced = omega + alpha == g.order();
    if (case_one == 1) != balanced {
        return Some(format!("case-I partitions: {case_one}, but omega + alpha = {}", omega + alpha));
    }
    None
}

fn unbalanced(g: &Graph) -> Option<String> {
    if !g.is_connected() || g.order() < 2 || !is_split(g) || star_size(g).is_some_and(|m| m >= 2) {
        return None;
    }
    let balanced = match is_balanced_split(g) {
        Ok(b) => b,
        Err(e) => return Some(e.to_string()),
    };
    match find_unbalanced_witness(g) {
        Err(e) => Some(format!("witness search failed: {e}")),
        Ok(Some(e)) if balanced => Some(format!("balanced split graph has witness {e}")),
        Ok(None) if !balanced => Some("unbalanced split graph has no witness".into()),
        Ok(Some(e)) => match is_unbalanced_witness(g, e) {
            Ok(true) => None,
            _ => Some(format!("witness {e} fails re-check")),
        },
        Ok(None) => None,
    }
}

fn pseudo(g: &Graph) -> Option<String> {
    let free = !contains_induced(g, NamedPattern::TwoK2) && !contains_induced(g, NamedPattern::C4);
    match pseudo_split_decompose(g) {
        Ok(d) => {
            if !free {
                return Some("decomposition returned for a graph with an induced 2K2 or C4".into());
            }
            if let Err(msg) = d.validate(g) {
                return Some(format!("invalid decomposition: {msg}"));
            }
        }
        Err(e) if free => return Some(format!("(2K2, C4)-free graph not decomposed: {e}")),
        Err(_) => {}
    }
    // contraction form, connected graphs outside the exceptional families
    if g.is_connected() && detect_exceptional(g).is_none() {
        let all_split = find_nonsplit_witness(g).is_none();
        let rhs = all_split || has_c5_decomposition(g);
        if is_pseudo_split(g) != rhs {
            return Some(format!(
                "pseudo_split={} but all_contractions_split={all_split} c5_decomposition={}",
                is_pseudo_split(g),
                has_c5_decomposition(g)
            ));
        }
    }
    None
}

fn ng(g: &Graph) -> Option<String> {
    let by_definition = match is_ng_by_definition(g) {
        Ok(b) => b,
        Err(e) => return Some(e.to_string()),
    };
    let by_characterisation = is_ng_by_characterisation(g);
    if by_definition != by_characterisation {
        return Some(format!("definition={by_definition} characterisation={by_characterisation}"));
    }
    // contraction form: connected, at least one edge, not a star
    if g.is_connected() && g.order() >= 2 {
        match is_ng_by_contraction(g) {
            Ok(Some(b)) if b != by_definition => {
                return Some(format!("definition={by_definition} contraction_form={b}"));
            }
            Err(e) => return Some(e.to_string()),
            _ => {}
        }
    }
    None
}
