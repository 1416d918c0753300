mod common;

use common::{alpha_branching, alpha_exhaustive, arb_graph, omega_exhaustive};
use exclusivity_core::graph::{
    complement, induced_cycles, is_isomorphic, is_vertex_transitive, make_circulant, or_power,
    or_product, strong_power, strong_product,
};
use exclusivity_core::invariants::{fractional_packing, ge_copy_bound, theta, vt_alpha_star};
use exclusivity_core::rational::{self, Rational};
use exclusivity_core::scenario::{check_e, kcbs_scenario, ProbabilityAssignment, Weight};
use exclusivity_core::solvers::{
    enumerate_maximal_cliques, max_clique, max_independent_set, Budget,
};
use exclusivity_core::{Config, Graph};
use proptest::prelude::*;

fn budget() -> Budget {
    Budget::unlimited()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(0, 12)) {
        let back = complement(&complement(&g));
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(
            complement(&g).edge_count() + g.edge_count(),
            g.order() * g.order().saturating_sub(1) / 2
        );
    }

    #[test]
    fn or_and_strong_powers_are_complement_dual(g in arb_graph(1, 6), n in 1usize..=3) {
        let or = or_power(&g, n, 1024).unwrap();
        let dual = complement(&strong_power(&complement(&g), n, 1024).unwrap());
        prop_assert!(or.same_edges(&dual));
    }

    #[test]
    fn products_match_their_definitions(g in arb_graph(1, 5), h in arb_graph(1, 5)) {
        let or = or_product(&g, &h, 1024).unwrap();
        let strong = strong_product(&g, &h, 1024).unwrap();
        let m = h.order();
        for u in 0..g.order() * m {
            for v in 0..g.order() * m {
                if u == v {
                    continue;
                }
                let (a, b, c, d) = (u / m, u % m, v / m, v % m);
                let ga = g.has_edge(a, c);
                let hb = h.has_edge(b, d);
                prop_assert_eq!(or.has_edge(u, v), ga || hb);
                prop_assert_eq!(strong.has_edge(u, v), (a == c || ga) && (b == d || hb));
            }
        }
    }

    #[test]
    fn maximal_cliques_are_maximal_and_complete(g in arb_graph(0, 9)) {
        let cliques = enumerate_maximal_cliques(&g, 10_000).unwrap();
        let n = g.order();
        for c in &cliques {
            prop_assert!(g.is_clique(c));
            for v in 0..n {
                if !c.contains(&v) {
                    let mut bigger = c.clone();
                    bigger.push(v);
                    prop_assert!(!g.is_clique(&bigger));
                }
            }
        }
        let count = (0u32..1 << n)
            .filter(|&s| {
                let set: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
                !set.is_empty()
                    && g.is_clique(&set)
                    && (0..n).all(|v| set.contains(&v) || !set.iter().all(|&u| g.has_edge(u, v)))
            })
            .count();
        prop_assert_eq!(cliques.len(), count);
    }

    #[test]
    fn graph_json_round_trips(g in arb_graph(0, 10)) {
        prop_assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn induced_pentagons_match_subset_scan(g in arb_graph(5, 8)) {
        let found = induced_cycles(&g, 5, 32).unwrap();
        let n = g.order();
        let mut expected = Vec::new();
        for s in 0u32..1 << n {
            if s.count_ones() != 5 {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            let sub = g.induced_subgraph(&set);
            if sub.regular_degree() == Some(2) && alpha_exhaustive(&sub) == 2 {
                expected.push(set);
            }
        }
        let mut found_sets: Vec<Vec<usize>> = found
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect();
        found_sets.sort();
        expected.sort();
        prop_assert_eq!(found_sets, expected);
    }

    #[test]
    fn relabelled_graphs_are_isomorphic(g in arb_graph(1, 9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = Graph::from_edges(n, g.edges().into_iter().map(|(i, j)| (perm[i], perm[j]))).unwrap();
        let w = is_isomorphic(&g, &h, 32).unwrap();
        prop_assert!(w.is_some());
        prop_assert!(w.unwrap().validate(&g, &h));
        if let Some(&(i, j)) = g.edges().first() {
            let fewer = h.without_edge(perm[i], perm[j]).unwrap();
            prop_assert!(is_isomorphic(&g, &fewer, 32).unwrap().is_none());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn solvers_match_exhaustive_search(g in arb_graph(0, 8)) {
        let a = max_independent_set(&g, &budget());
        let w = max_clique(&g, &budget());
        prop_assert!(a.is_exact() && w.is_exact());
        prop_assert_eq!(a.size, alpha_exhaustive(&g));
        prop_assert_eq!(w.size, omega_exhaustive(&g));
        prop_assert_eq!(a.witness.len(), a.size);
        prop_assert!(g.is_independent(&a.witness));
        prop_assert!(g.is_clique(&w.witness));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn or_product_multiplies_independence(g in arb_graph(1, 6), h in arb_graph(1, 6)) {
        let p = or_product(&g, &h, 1024).unwrap();
        prop_assert_eq!(alpha_branching(&p), alpha_exhaustive(&g) * alpha_exhaustive(&h));
        prop_assert_eq!(max_independent_set(&p, &budget()).size, alpha_branching(&p));
    }

    #[test]
    fn bound_chain_and_certificates(g in arb_graph(1, 8)) {
        let cfg = Config::default();
        let t = theta(&g, &cfg).unwrap();
        let (edge, value) = t.check_vectors(&g);
        prop_assert!(edge <= 1e-6, "edge residual {}", edge);
        prop_assert!(value <= 1e-6, "value residual {}", value);
        prop_assert!(t.gap.abs() <= 1e-6);
        let a = alpha_exhaustive(&g) as f64;
        let s = rational::to_f64(&fractional_packing(&g, &cfg).unwrap().value);
        prop_assert!(a <= t.value + cfg.tol);
        prop_assert!(t.value <= s + 2.0 * cfg.tol);
        let tc = theta(&complement(&g), &cfg).unwrap().value;
        prop_assert!(t.value * tc >= g.order() as f64 - 1e-5);
    }

    #[test]
    fn packing_witnesses_are_feasible(g in arb_graph(1, 8)) {
        let cfg = Config::default();
        let p = fractional_packing(&g, &cfg).unwrap();
        let total: Rational = p.weights.iter().sum();
        prop_assert_eq!(&total, &p.value);
        for c in enumerate_maximal_cliques(&g, 10_000).unwrap() {
            let sum: Rational = c.iter().map(|&v| p.weights[v].clone()).sum();
            prop_assert!(sum <= rational::int(1));
        }
        prop_assert!(p.weights.iter().all(rational::is_probability));
    }

    #[test]
    fn copy_bounds_never_grow(g in arb_graph(1, 5)) {
        let cfg = Config::default();
        let b1 = ge_copy_bound(&g, 1, &cfg).unwrap();
        let b2 = ge_copy_bound(&g, 2, &cfg).unwrap();
        prop_assert_eq!(b1.omega_power, omega_exhaustive(&g));
        prop_assert!(b2.bound <= b1.bound + 1e-12);
    }

    #[test]
    fn exclusivity_check_is_monotone(ws in proptest::collection::vec(0u32..=10, 5), scale in 0u32..=10) {
        let s = kcbs_scenario();
        let to_assignment = |v: &[Rational]| {
            ProbabilityAssignment::new(v.iter().cloned().map(Weight::Exact).collect()).unwrap()
        };
        let w: Vec<Rational> = ws.iter().map(|&k| rational::ratio(k as i64, 10)).collect();
        let lower: Vec<Rational> = w.iter().map(|x| x * rational::ratio(scale as i64, 10)).collect();
        let upper = check_e(&to_assignment(&w), &s).unwrap().is_admissible();
        let low = check_e(&to_assignment(&lower), &s).unwrap().is_admissible();
        prop_assert!(!upper || low);
        let pairs_ok = (0..5).all(|i| &w[i] + &w[(i + 1) % 5] <= rational::int(1));
        prop_assert_eq!(upper, pairs_ok);
    }
}

#[test]
fn circulants_are_vertex_transitive_with_consistent_bounds() {
    let cfg = Config::default();
    for n in 3..=16usize {
        let half = n / 2;
        for mask in 1u32..1 << half {
            let steps: Vec<usize> = (1..=half).filter(|s| mask >> (s - 1) & 1 == 1).collect();
            let g = make_circulant(n, &steps).unwrap();
            let t = is_vertex_transitive(&g, 32).unwrap();
            assert!(t.vertex_transitive, "Ci{n}{steps:?}");
            assert_eq!(t.orbits.len(), 1);
            if n <= 10 {
                let vt = vt_alpha_star(&g, &cfg).unwrap();
                assert_eq!(
                    vt,
                    fractional_packing(&g, &cfg).unwrap().value,
                    "Ci{n}{steps:?}"
                );
                let b1 = ge_copy_bound(&g, 1, &cfg).unwrap();
                assert!((b1.bound - rational::to_f64(&vt)).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn strong_square_of_ci8_1_2_has_independence_five() {
    let g = make_circulant(8, &[1, 2]).unwrap();
    let sq = strong_power(&g, 2, 1024).unwrap();
    assert_eq!(alpha_branching(&sq), 5);
    assert_eq!(max_independent_set(&sq, &budget()).size, 5);
}

#[test]
fn solvers_match_exhaustive_search_on_every_small_graph() {
    for n in 0..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            assert_eq!(
                max_independent_set(&g, &budget()).size,
                alpha_exhaustive(&g)
            );
            assert_eq!(max_clique(&g, &budget()).size, omega_exhaustive(&g));
        }
    }
}
