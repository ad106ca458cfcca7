use proptest::prelude::*;

use lwc::graph::{canonicalize, parse_graph, write_graph, MarkAlphabets, MarkedEdge, MarkedGraph};
use lwc::measure::{levy_prokhorov, total_variation};
use lwc::rational::integer;
use lwc::sampler::{random_marked_graph, sample_uniform_graph, DEFAULT_MAX_ATTEMPTS};
use lwc::transport::transport_general;
use lwc::verify::{random_measure, random_transport_instance};
use lwc::{seeded_rng, Error};

fn relabel(g: &MarkedGraph, perm: &[usize]) -> MarkedGraph {
    let mut tau = vec![0; g.n()];
    for (v, &w) in perm.iter().enumerate() {
        tau[w] = g.tau(v);
    }
    let edges = g.edges().map(|e| MarkedEdge::new(perm[e.u], perm[e.v], e.xi_uv, e.xi_vu));
    MarkedGraph::new(tau, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_text_round_trip(seed: u64, n in 1usize..12) {
        let g = random_marked_graph(&mut seeded_rng(seed), n, 4, 3, 2, 0.7);
        let alphabets = MarkAlphabets::new(["a", "b", "c"], ["x", "y"]).unwrap();
        prop_assert_eq!(parse_graph(&write_graph(&g, &alphabets), &alphabets).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(seed: u64, n in 1usize..10, shift in 0usize..10, r in 0usize..4) {
        // v -> 7v + shift is a bijection mod n for every n below 10 except 7.
        prop_assume!(n != 7);
        let g = random_marked_graph(&mut seeded_rng(seed), n, 3, 2, 2, 0.8);
        let perm: Vec<usize> = (0..n).map(|v| (v * 7 + shift) % n).collect();
        let h = relabel(&g, &perm);
        for v in 0..n {
            prop_assert_eq!(canonicalize(&g.ball(v, r), Some(r)), canonicalize(&h.ball(perm[v], r), Some(r)));
            prop_assert_eq!(canonicalize(&g.rooted_component(v), None), canonicalize(&h.rooted_component(perm[v]), None));
        }
    }

    #[test]
    fn levy_prokhorov_is_a_metric(seed: u64) {
        let mut rng = seeded_rng(seed);
        let a = random_measure(&mut rng, 5).unwrap();
        let b = random_measure(&mut rng, 5).unwrap();
        let c = random_measure(&mut rng, 5).unwrap();
        let ab = levy_prokhorov(&a, &b);
        prop_assert_eq!(levy_prokhorov(&a, &a), integer(0));
        prop_assert_eq!(&ab, &levy_prokhorov(&b, &a));
        prop_assert!(ab <= integer(1));
        prop_assert!(ab <= total_variation(&a, &b));
        prop_assert!(ab <= levy_prokhorov(&a, &c) + levy_prokhorov(&c, &b));
    }

    #[test]
    fn transport_hits_target(seed: u64, p in 0usize..3, m in 0usize..3, n in 1usize..8, s in 0usize..4) {
        prop_assume!(p + m > 0);
        let mut rng = seeded_rng(seed);
        let (a, beta) = random_transport_instance(&mut rng, p, m, n, 3, s.min(n)).unwrap();
        match transport_general(&a, &beta) {
            Ok(out) => {
                prop_assert_eq!(out.matrix.column_degrees(), beta.as_slice().to_vec());
                prop_assert!(out.matrix.check_membership().is_ok());
                prop_assert!(out.within_bound());
                prop_assert_eq!(out.changed_columns, a.changed_columns(&out.matrix));
            }
            Err(Error::Infeasible(_)) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn uniform_sampler_keeps_degrees(seed: u64, n in 1usize..15) {
        let mut rng = seeded_rng(seed);
        let ell = lwc::graph::DegreeSequence::new(random_marked_graph(&mut rng, n, 4, 1, 1, 0.6).degrees()).unwrap();
        let g = sample_uniform_graph(&ell, &mut rng, DEFAULT_MAX_ATTEMPTS).unwrap();
        prop_assert_eq!(g.degrees(), ell.as_slice().to_vec());
    }
}
