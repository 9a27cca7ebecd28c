mod common;

use proptest::prelude::*;
use superdom::graph::io::{from_edge_list, from_graph6, from_json, to_edge_list, to_graph6, to_json};
use superdom::graph::{cartesian_product, line_graph, product_vertex, twin_partition};
use superdom::harness::check_all_bounds;
use superdom::invariants::{
    domination_number, identity_crosschecks, independence_number, is_matching, matching_number, maximum_matching,
    secure_domination_number, two_packing_number, vertex_cover_number,
};
use superdom::superdom::{
    enumerate_min_superdom_sets, enumerate_pstar, gamma_sp_bnb, gamma_sp_bruteforce, is_super_dominating, lambda,
};
use superdom::{Graph, SolverConfig, VertexSet};

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn bnb_matches_oracle_with_canonical_certificate(g in common::arb_graph(1..=10)) {
        let out = gamma_sp_bnb(&g, &cfg()).unwrap();
        prop_assert!(out.exact);
        prop_assert_eq!(out.value(), Some(common::gamma_sp(&g)));
        prop_assert!(out.certificate.validate(&g));
        let smallest = common::min_superdom_sets(&g)[0];
        prop_assert_eq!(out.certificate.set.to_mask(), Some(smallest));
    }

    #[test]
    fn bruteforce_agrees_with_bnb(g in common::arb_graph(1..=12)) {
        let (v, cert) = gamma_sp_bruteforce(&g, &cfg()).unwrap();
        let out = gamma_sp_bnb(&g, &cfg()).unwrap();
        prop_assert_eq!(Some(v), out.value());
        prop_assert_eq!(cert.set, out.certificate.set);
    }

    #[test]
    fn node_budget_interval_brackets_the_value(g in common::arb_graph(4..=12), limit in 1u64..40) {
        let capped = SolverConfig { node_limit: Some(limit), ..cfg() };
        let out = gamma_sp_bnb(&g, &capped).unwrap();
        let exact = common::gamma_sp(&g);
        prop_assert!(out.lower <= exact && exact <= out.upper);
        prop_assert!(out.certificate.validate(&g));
        prop_assert_eq!(out.certificate.size(), out.upper);
    }

    #[test]
    fn companion_invariants_match_oracles(g in common::arb_graph(1..=10)) {
        let (gamma, d) = domination_number(&g).unwrap();
        prop_assert_eq!(gamma, common::domination(&g));
        prop_assert_eq!(d.len(), gamma);
        prop_assert_eq!(independence_number(&g).unwrap().0, common::independence(&g));
        prop_assert_eq!(vertex_cover_number(&g).unwrap().0, common::vertex_cover(&g));
        prop_assert_eq!(two_packing_number(&g).unwrap().0, common::two_packing(&g));
        prop_assert_eq!(secure_domination_number(&g, &cfg()).unwrap().0, common::secure_domination(&g));
    }

    #[test]
    fn blossom_matching_is_maximum(g in common::arb_graph(1..=12)) {
        let m = maximum_matching(&g);
        prop_assert!(is_matching(&g, &m));
        prop_assert_eq!(m.len(), matching_number(&g));
        prop_assert_eq!(m.len(), common::matching(&g));
    }

    #[test]
    fn identities_always_hold(g in common::arb_graph(1..=11)) {
        for c in identity_crosschecks(&g).unwrap() {
            prop_assert!(!c.applicable || c.holds, "{} fails: {} vs {}", c.name, c.lhs, c.rhs);
        }
    }

    #[test]
    fn no_bound_is_violated(g in common::arb_graph(1..=9)) {
        let r = check_all_bounds("prop", &g, &cfg()).unwrap();
        prop_assert!(r.skipped.is_none());
        let bad: Vec<_> = r.violations().map(|e| e.name).collect();
        prop_assert!(r.is_clean(), "violated: {:?} on {:?}", bad, g.edges());
    }

    #[test]
    fn relabeling_preserves_gamma_sp(
        (g, perm) in common::arb_graph(1..=9)
            .prop_flat_map(|g| {
                let n = g.order();
                (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            })
    ) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(
            gamma_sp_bnb(&g, &cfg()).unwrap().value(),
            gamma_sp_bnb(&h, &cfg()).unwrap().value()
        );
    }

    #[test]
    fn family_enumeration_matches_oracle(g in common::arb_graph(1..=8)) {
        let sets = enumerate_min_superdom_sets(&g, &cfg()).unwrap();
        let masks: Vec<u64> = sets.iter().map(|s| s.to_mask().unwrap()).collect();
        prop_assert_eq!(&masks, &common::min_superdom_sets(&g));
        for s in &sets {
            let ps: Vec<u64> = enumerate_pstar(&g, s, &cfg()).unwrap().iter().map(|p| p.to_mask().unwrap()).collect();
            prop_assert_eq!(ps, common::pstar(&g, s.to_mask().unwrap()));
        }
        prop_assert_eq!(lambda(&g, &cfg()).unwrap().0, common::lambda(&g));
    }

    #[test]
    fn super_domination_check_agrees(g in common::arb_graph(1..=10), bits in any::<u64>()) {
        let n = g.order();
        let mask = bits & ((1u64 << n) - 1);
        let d = VertexSet::from_mask(n, mask);
        let cert = is_super_dominating(&g, &d);
        prop_assert_eq!(cert.is_some(), common::is_super_dominating(&common::adjacency(&g), mask));
        if let Some(c) = cert {
            prop_assert!(c.validate(&g));
        }
    }

    #[test]
    fn serializations_round_trip(g in common::arb_graph(0..=20)) {
        let code = to_graph6(&g);
        let back = from_graph6(&code).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back), code);
        prop_assert_eq!(&from_edge_list(&to_edge_list(&g)).unwrap(), &g);
        prop_assert_eq!(&from_json(&to_json(&g)).unwrap(), &g);
    }

    #[test]
    fn cartesian_product_counts_and_swap(g in common::arb_graph(1..=5), h in common::arb_graph(1..=5)) {
        let gh = cartesian_product(&g, &h);
        let hg = cartesian_product(&h, &g);
        let (n, k) = (g.order(), h.order());
        prop_assert_eq!(gh.order(), n * k);
        prop_assert_eq!(gh.size(), n * h.size() + k * g.size());
        // (a, b) ↦ (b, a) maps one product onto the other
        let mut perm = vec![0; n * k];
        for a in 0..n {
            for b in 0..k {
                perm[product_vertex(a, b, k)] = product_vertex(b, a, n);
            }
        }
        prop_assert_eq!(gh.relabel(&perm).unwrap(), hg);
    }

    #[test]
    fn line_graph_adjacency(g in common::arb_graph(2..=8)) {
        prop_assume!(g.size() > 0);
        let l = line_graph(&g).unwrap();
        let edges = g.edges();
        prop_assert_eq!(l.graph.order(), edges.len());
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = (edges[i], edges[j]);
                let share = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
                prop_assert_eq!(l.graph.has_edge(i, j), share);
            }
        }
    }

    #[test]
    fn twin_classes_partition_vertices(g in common::arb_graph(1..=10)) {
        let t = twin_partition(&g);
        let mut seen = VertexSet::new(g.order());
        for v in g.vertices() {
            prop_assert!(t.class_of(v).is_some());
        }
        for c in &t.classes {
            for v in c.members.iter() {
                prop_assert!(seen.insert(v));
            }
        }
        prop_assert_eq!(seen.len(), g.order());
        // γ_sp ≥ n − t always
        let gsp = common::gamma_sp(&g);
        prop_assert!(gsp + t.count() >= g.order());
    }
}

#[test]
fn adjacency_is_symmetric_and_loop_free() {
    let g = Graph::new(5, [(0, 1), (1, 0), (2, 3)]).unwrap();
    assert_eq!(g.size(), 2);
    assert!(g.is_well_formed());
    assert!(Graph::new(3, [(1, 1)]).is_err());
}
