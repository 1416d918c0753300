//! Complement and the OR (co-normal) and strong products.
//!
//! Product vertex `(a, b)` gets index `a * |H| + b`, so vertices are in
//! lexicographic order of their coordinate pairs. Labels are rendered as
//! `"(label_a, label_b)"`.

use super::Graph;
use crate::error::{Error, Result};

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                out.link(i, j);
            }
        }
    }
    out.set_labels_unchecked(g.labels().map(<[String]>::to_vec));
    out
}

fn product_order(g: &Graph, h: &Graph, cap: usize) -> Result<usize> {
    let order = g
        .order()
        .checked_mul(h.order())
        .filter(|&o| o <= cap)
        .ok_or_else(|| {
            Error::resource(format!(
                "product of orders {} and {} exceeds the cap of {cap} vertices",
                g.order(),
                h.order()
            ))
        })?;
    Ok(order)
}

fn product_labels(g: &Graph, h: &Graph) -> Vec<String> {
    let mut labels = Vec::with_capacity(g.order() * h.order());
    for a in 0..g.order() {
        for b in 0..h.order() {
            labels.push(format!("({}, {})", g.label(a), h.label(b)));
        }
    }
    labels
}

fn product_by<F>(g: &Graph, h: &Graph, cap: usize, adjacent: F) -> Result<Graph>
where
    F: Fn(usize, usize, usize, usize) -> bool,
{
    let order = product_order(g, h, cap)?;
    let m = h.order();
    let mut out = Graph::new(order);
    for u in 0..order {
        let (a, b) = (u / m, u % m);
        for v in u + 1..order {
            let (c, d) = (v / m, v % m);
            if adjacent(a, b, c, d) {
                out.link(u, v);
            }
        }
    }
    out.set_labels_unchecked(Some(product_labels(g, h)));
    Ok(out)
}

/// `(a,b) ~ (c,d)` iff `a ~ c` in `g` or `b ~ d` in `h`.
pub fn or_product(g: &Graph, h: &Graph, cap: usize) -> Result<Graph> {
    product_by(g, h, cap, |a, b, c, d| g.has_edge(a, c) || h.has_edge(b, d))
}

/// Distinct `(a,b) ~ (c,d)` iff `a` equals or is adjacent to `c`, and likewise `b`, `d`.
pub fn strong_product(g: &Graph, h: &Graph, cap: usize) -> Result<Graph> {
    product_by(g, h, cap, |a, b, c, d| {
        (a == c || g.has_edge(a, c)) && (b == d || h.has_edge(b, d))
    })
}

fn power<F>(g: &Graph, n: usize, cap: usize, product: F) -> Result<Graph>
where
    F: Fn(&Graph, &Graph, usize) -> Result<Graph>,
{
    if n == 0 {
        return Err(Error::input("graph powers need n >= 1"));
    }
    let mut acc = g.clone();
    for _ in 1..n {
        acc = product(&acc, g, cap)?;
    }
    Ok(acc)
}

/// `g^{*n}`, the OR product of `n` copies.
pub fn or_power(g: &Graph, n: usize, cap: usize) -> Result<Graph> {
    power(g, n, cap, or_product)
}

/// `g^{⊠n}`, the strong product of `n` copies.
pub fn strong_power(g: &Graph, n: usize, cap: usize) -> Result<Graph> {
    power(g, n, cap, strong_product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, is_isomorphic, make_circulant, DEFAULT_PRODUCT_CAP};

    const CAP: usize = DEFAULT_PRODUCT_CAP;

    #[test]
    fn complement_of_complete_is_edgeless() {
        assert_eq!(complement(&complete(6)).edge_count(), 0);
    }

    #[test]
    fn complement_of_mobius_ladder() {
        let m4 = make_circulant(8, &[1, 4]).unwrap();
        let ci812 = make_circulant(8, &[1, 2]).unwrap();
        assert!(is_isomorphic(&complement(&m4), &ci812, 32)
            .unwrap()
            .is_some());
    }

    #[test]
    fn or_square_of_pentagon_is_16_regular() {
        let c5 = cycle(5).unwrap();
        let p = or_product(&c5, &c5, CAP).unwrap();
        assert_eq!(p.order(), 25);
        // brute-force count: a pair is non-adjacent iff both coordinates are
        // equal-or-non-adjacent, 3 choices each, minus the vertex itself
        for v in 0..25 {
            let non_adjacent = (0..25)
                .filter(|&u| u != v)
                .filter(|&u| {
                    let (a, b, c, d) = (v / 5, v % 5, u / 5, u % 5);
                    !c5.has_edge(a, c) && !c5.has_edge(b, d)
                })
                .count();
            assert_eq!(non_adjacent, 8);
            assert_eq!(p.degree(v), 16);
        }
    }

    #[test]
    fn trivial_factor_is_identity() {
        let c5 = cycle(5).unwrap();
        let k1 = complete(1);
        assert!(or_product(&k1, &c5, CAP).unwrap().same_edges(&c5));
        assert!(strong_product(&c5, &k1, CAP).unwrap().same_edges(&c5));
        assert_eq!(or_power(&c5, 1, CAP).unwrap(), c5);
        assert_eq!(strong_power(&c5, 1, CAP).unwrap(), c5);
    }

    #[test]
    fn de_morgan_on_pentagon_square() {
        let c5 = cycle(5).unwrap();
        let lhs = or_power(&c5, 2, CAP).unwrap();
        let rhs = complement(&strong_power(&complement(&c5), 2, CAP).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn strong_square_of_pentagon_has_independent_five_set() {
        let c5 = cycle(5).unwrap();
        let s = strong_power(&c5, 2, CAP).unwrap();
        // brute force over all 5-subsets of the 25 vertices
        let mut found = None;
        let mut idx = [0usize, 1, 2, 3, 4];
        'outer: loop {
            if s.is_independent(&idx) {
                found = Some(idx);
                break;
            }
            let mut k = 4;
            loop {
                if idx[k] < 20 + k {
                    idx[k] += 1;
                    for t in k + 1..5 {
                        idx[t] = idx[t - 1] + 1;
                    }
                    break;
                }
                if k == 0 {
                    break 'outer;
                }
                k -= 1;
            }
        }
        assert!(found.is_some());
    }

    #[test]
    fn size_cap_is_enforced() {
        let m4 = make_circulant(8, &[1, 4]).unwrap();
        assert_eq!(or_power(&m4, 3, CAP).unwrap().order(), 512);
        assert!(matches!(or_power(&m4, 4, CAP), Err(Error::Resource(_))));
        assert!(or_power(&m4, 0, CAP).is_err());
    }

    #[test]
    fn product_labels_are_tuples() {
        let g = complete(2)
            .with_labels(vec!["a".into(), "b".into()])
            .unwrap();
        let p = or_product(&g, &g, CAP).unwrap();
        assert_eq!(p.labels().unwrap()[1], "(a, b)");
    }
}
