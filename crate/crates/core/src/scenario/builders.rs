use super::{Event, Scenario, TestId};
use crate::error::{Error, Result};

/// The five KCBS events `0,1|i,i+1`, indices mod 5.
pub fn kcbs_scenario() -> Scenario {
    let events = (0..5u32)
        .map(|i| {
            let j = (i + 1) % 5;
            Event::new(
                format!("0,1|{i},{j}"),
                [(TestId::new(0, i), 0), (TestId::new(0, j), 1)],
            )
            .expect("distinct tests")
        })
        .collect();
    Scenario::new("KCBS", events).expect("valid KCBS events")
}

/// Test identifiers of Alice's inputs in the CHSH scenario.
pub const ALICE_TESTS: [u32; 2] = [0, 1];
/// Test identifiers of Bob's inputs in the CHSH scenario.
pub const BOB_TESTS: [u32; 2] = [2, 3];

/// The eight CHSH events `a,b|x,y` with `a ⊕ b = x·y`.
pub fn chsh_scenario() -> Scenario {
    let mut events = Vec::with_capacity(8);
    for x in 0..2u32 {
        for y in 0..2u32 {
            for a in 0..2u32 {
                let b = a ^ (x * y);
                events.push(
                    Event::new(
                        format!("{a},{b}|{x},{y}"),
                        [
                            (TestId::new(0, ALICE_TESTS[x as usize]), a),
                            (TestId::new(0, BOB_TESTS[y as usize]), b),
                        ],
                    )
                    .expect("distinct tests"),
                );
            }
        }
    }
    Scenario::new("CHSH", events).expect("valid CHSH events")
}

/// A scenario with one event on one test.
pub fn single_event_scenario() -> Scenario {
    let e = Event::new("0|0", [(TestId::new(0, 0), 0)]).expect("one test");
    Scenario::new("single", vec![e]).expect("one event")
}

/// Joint events of two independent experiments.
///
/// The second factor's copies are renumbered above the first's, so events
/// are exclusive iff exclusive in at least one factor. Event `(i, j)` sits
/// at index `i * |s2| + j` with label `"(l_i, l_j)"`, matching
/// [`crate::graph::or_product`].
pub fn product_scenario(s1: &Scenario, s2: &Scenario, cap: usize) -> Result<Scenario> {
    let count = s1
        .len()
        .checked_mul(s2.len())
        .filter(|&c| c <= cap)
        .ok_or_else(|| {
            Error::resource(format!(
                "product of {} and {} events exceeds the cap of {cap}",
                s1.len(),
                s2.len()
            ))
        })?;
    let offset = s1.max_copy() + 1;
    let mut events = Vec::with_capacity(count);
    for e1 in s1.events() {
        for e2 in s2.events() {
            let e2 = e2.shifted(offset);
            let assignments = e1
                .assignments()
                .iter()
                .chain(e2.assignments())
                .map(|(&t, &o)| (t, o));
            events.push(Event::new(
                format!("({}, {})", e1.label(), e2.label()),
                assignments,
            )?);
        }
    }
    Scenario::new(format!("{} x {}", s1.name(), s2.name()), events)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, is_isomorphic, make_circulant, or_product, DEFAULT_PRODUCT_CAP};

    #[test]
    fn kcbs_is_pentagon() {
        let s = kcbs_scenario();
        assert_eq!(s.len(), 5);
        assert!(s.events().iter().all(|e| e.assignments().len() == 2));
        assert!(s.exclusivity_graph().same_edges(&cycle(5).unwrap()));
        assert_eq!(s.events()[4].label(), "0,1|4,0");
    }

    #[test]
    fn chsh_is_mobius_ladder() {
        let s = chsh_scenario();
        assert_eq!(s.len(), 8);
        let m4 = make_circulant(8, &[1, 4]).unwrap();
        assert!(is_isomorphic(&s.exclusivity_graph(), &m4, 32)
            .unwrap()
            .is_some());
        let labels: Vec<&str> = s.events()[..2].iter().map(Event::label).collect();
        assert_eq!(labels, vec!["0,0|0,0", "1,1|0,0"]);
    }

    #[test]
    fn kcbs_square_is_or_square() {
        let k = kcbs_scenario();
        let p = product_scenario(&k, &k, DEFAULT_PRODUCT_CAP).unwrap();
        assert_eq!(p.len(), 25);
        let g = k.exclusivity_graph();
        assert_eq!(
            p.exclusivity_graph(),
            or_product(&g, &g, DEFAULT_PRODUCT_CAP).unwrap()
        );
    }

    #[test]
    fn chsh_square_has_64_events() {
        let c = chsh_scenario();
        assert_eq!(
            product_scenario(&c, &c, DEFAULT_PRODUCT_CAP).unwrap().len(),
            64
        );
        assert!(matches!(
            product_scenario(&c, &c, 63),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn single_event_factor_is_neutral() {
        let k = kcbs_scenario();
        let p = product_scenario(&k, &single_event_scenario(), DEFAULT_PRODUCT_CAP).unwrap();
        assert!(p.exclusivity_graph().same_edges(&k.exclusivity_graph()));
    }
}
