use super::{Bitset, Graph};
use crate::error::{Error, Result};

/// All `k`-vertex sets inducing a `k`-cycle, in lexicographic order.
pub fn induced_cycles(g: &Graph, k: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    if k < 3 {
        return Err(Error::input(format!("induced cycles need k >= 3, got {k}")));
    }
    if g.order() > cap {
        return Err(Error::resource(format!(
            "graph of order {} exceeds the cap of {cap}",
            g.order()
        )));
    }
    let mut found = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    grow(g, k, 0, &mut chosen, &mut found);
    Ok(found)
}

fn grow(g: &Graph, k: usize, next: usize, chosen: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
    if chosen.len() == k {
        if induces_cycle(g, chosen) {
            found.push(chosen.clone());
        }
        return;
    }
    let remaining = k - chosen.len();
    for v in next..g.order() {
        if g.order() - v < remaining {
            break;
        }
        // no vertex of an induced cycle may see more than two others
        let inside = chosen.iter().filter(|&&u| g.has_edge(u, v)).count();
        if inside > 2
            || chosen
                .iter()
                .any(|&u| g.has_edge(u, v) && degree_in(g, u, chosen) >= 2)
        {
            continue;
        }
        chosen.push(v);
        grow(g, k, v + 1, chosen, found);
        chosen.pop();
    }
}

fn degree_in(g: &Graph, v: usize, set: &[usize]) -> usize {
    set.iter().filter(|&&u| g.has_edge(u, v)).count()
}

fn induces_cycle(g: &Graph, set: &[usize]) -> bool {
    if set.iter().any(|&v| degree_in(g, v, set) != 2) {
        return false;
    }
    // 2-regular: a single cycle iff connected
    let mut members = Bitset::new(g.order());
    for &v in set {
        members.insert(v);
    }
    let mut seen = Bitset::new(g.order());
    let mut stack = vec![set[0]];
    seen.insert(set[0]);
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v).intersection(&members).iter() {
            if !seen.contains(u) {
                seen.insert(u);
                stack.push(u);
            }
        }
    }
    seen.count() == set.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, make_circulant};

    #[test]
    fn mobius_ladder_has_eight_pentagons() {
        let m4 = make_circulant(8, &[1, 4]).unwrap();
        let found = induced_cycles(&m4, 5, 32).unwrap();
        assert_eq!(found.len(), 8);
        assert!(found.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn small_cases() {
        assert_eq!(induced_cycles(&cycle(5).unwrap(), 5, 32).unwrap().len(), 1);
        assert!(induced_cycles(&complete(4), 4, 32).unwrap().is_empty());
        assert_eq!(induced_cycles(&complete(4), 3, 32).unwrap().len(), 4);
        assert!(induced_cycles(&complete(4), 2, 32).is_err());
    }

    #[test]
    fn two_disjoint_triangles_are_not_a_hexagon() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(induced_cycles(&g, 6, 32).unwrap().is_empty());
    }
}
