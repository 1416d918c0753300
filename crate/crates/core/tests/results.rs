use exclusivity_core::graph::{complement, make_circulant};
use exclusivity_core::invariants::{
    enumerate_scvt_circulants, ge_copy_bound, shannon_bounds, uniqueness_probe, Uniqueness,
};
use exclusivity_core::rational::ratio;
use exclusivity_core::scenario::{
    chsh_scenario, kcbs_scenario, product_scenario, ProbabilityAssignment, Weight,
};
use exclusivity_core::verify::*;
use exclusivity_core::Config;

fn cfg() -> Config {
    Config::default()
}

#[test]
fn kcbs_and_chsh_triples_pass() {
    assert!(verify_kcbs_triple(&cfg()).unwrap().passed());
    assert!(verify_chsh_triple(&cfg()).unwrap().passed());
}

#[test]
fn chsh_triple_fails_on_a_mutated_graph() {
    let g = chsh_scenario().exclusivity_graph();
    let (i, j) = g.edges()[0];
    let r = verify_triple_with(
        "chsh",
        &g.without_edge(i, j).unwrap(),
        &ExpectedTriple::chsh(),
        &cfg(),
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
}

#[test]
fn result1_chain() {
    let r = verify_result1(&cfg()).unwrap();
    for prefix in [
        "graph of the 25 global events",
        "families of five",
        "alpha* of the global events",
        "uniform weight 1/5",
        "largest uniform local probability",
        "KCBS value from local probability matches",
        "one-copy bound",
    ] {
        let c = r.claim(prefix).unwrap();
        assert!(c.holds && c.exact, "{prefix}: {c:?}");
    }
    let u = r
        .claim("optimal weighting of the global events is unique")
        .unwrap();
    assert!(u.exact);
    assert_eq!(
        r.verdict,
        if u.holds {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    );
}

/// Independent of the verifier: an optimum that is not uniform, checked
/// against every maximal clique of the OR square.
#[test]
fn square_of_pentagon_has_non_uniform_optima() {
    let k = kcbs_scenario();
    let g = product_scenario(&k, &k, 1024).unwrap().exclusivity_graph();
    match uniqueness_probe(&g, &cfg()).unwrap() {
        Uniqueness::Multiple { at_max, max, .. } => {
            assert!(max > ratio(1, 5));
            let a = ProbabilityAssignment::new(at_max.iter().cloned().map(Weight::Exact).collect())
                .unwrap();
            assert!(exclusivity_core::scenario::check_e(
                &a,
                &product_scenario(&k, &k, 1024).unwrap()
            )
            .unwrap()
            .is_admissible());
            let total: exclusivity_core::Rational = at_max.iter().sum();
            assert_eq!(total, ratio(5, 1));
        }
        Uniqueness::Unique { .. } => panic!("expected several optimal weightings"),
    }
}

#[test]
fn result1_fails_on_an_edge_deleted_square() {
    let c5 = kcbs_scenario().exclusivity_graph();
    let sq = exclusivity_core::graph::or_product(&c5, &c5, 1024).unwrap();
    let mutated = sq.without_edge(0, 6).unwrap();
    let r = verify_result1_with(&mutated, &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(!r.claim("graph of the 25 global events").unwrap().holds);
}

#[test]
fn observation1_passes_and_fails_for_a_weaker_box() {
    let r = verify_observation1(&cfg()).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    assert_eq!(r.witnesses["pentagons"].as_array().unwrap().len(), 8);
    let fifth = ProbabilityAssignment::uniform(8, Weight::Exact(ratio(1, 5))).unwrap();
    let weak = verify_observation1_with(&chsh_scenario(), &fifth, &cfg()).unwrap();
    assert_eq!(weak.verdict, Verdict::Fail);
}

#[test]
fn observation2_passes_and_fails_for_a_wrong_capacity_graph() {
    let r = verify_observation2(2, &cfg()).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    let chsh = chsh_scenario().exclusivity_graph();
    let wrong = make_circulant(8, &[1, 3]).unwrap();
    let bad = verify_observation2_with(&chsh, &wrong, 2, &cfg()).unwrap();
    assert_eq!(bad.verdict, Verdict::Fail);
}

#[test]
fn chsh_capacity_and_copy_values() {
    let m4 = make_circulant(8, &[1, 4]).unwrap();
    let cap = shannon_bounds(&complement(&m4), 2, &cfg()).unwrap();
    assert!((cap.lower - 5f64.sqrt()).abs() < 1e-9);
    assert!((cap.upper - (8.0 - 4.0 * 2f64.sqrt())).abs() < 1e-6);
    let b = ge_copy_bound(&m4, 2, &cfg()).unwrap();
    assert_eq!(b.omega_power, 5);
    assert!(m4.order() == 8 && b.witness.len() == 5);
}

#[test]
fn result2_small_orders() {
    assert!(verify_result2(5, &cfg()).unwrap().passed());
    let nine = verify_result2(9, &cfg()).unwrap();
    assert!(nine.passed());
    assert_eq!(
        nine.claim("classes passing").unwrap().computed,
        Quantity::Count(0)
    );
    let r = verify_result2(13, &cfg()).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn result2_order_seventeen_lists_every_member() {
    let classes = enumerate_scvt_circulants(17, &cfg()).unwrap();
    for steps in listed_members(17) {
        assert!(classes.iter().any(|c| c.contains(steps)), "{steps:?}");
    }
    let r = verify_result2(17, &cfg()).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn result2_fails_on_mutated_and_prime_square_graphs() {
    let g = make_circulant(13, &[1, 2, 6]).unwrap();
    let r = verify_result2_graph("mutated", &g.without_edge(0, 1).unwrap(), &cfg()).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    let nine = make_circulant(9, &[1, 2]).unwrap();
    assert_eq!(
        verify_result2_graph("Ci9(1,2)", &nine, &cfg())
            .unwrap()
            .verdict,
        Verdict::Fail
    );
    assert!(verify_result2_graph("Ci13(1,2,6)", &g, &cfg())
        .unwrap()
        .passed());
}

#[test]
fn reports_are_reproducible() {
    let a = verify_observation2(2, &cfg()).unwrap();
    let b = verify_observation2(2, &cfg()).unwrap();
    assert_eq!(a.claims, b.claims);
    assert_eq!(a.witnesses, b.witnesses);
    let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(json["schema"], "1");
    assert_eq!(json["claims"][2]["expected"], 2.343145751);
}
