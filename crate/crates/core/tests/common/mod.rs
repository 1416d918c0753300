//! Brute-force oracles written independently of the library's solvers.
#![allow(dead_code)]

use exclusivity_core::Graph;
use proptest::prelude::*;

/// Adjacency masks, one `u64` per vertex (order ≤ 64).
pub fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.order() <= 64);
    (0..g.order())
        .map(|i| {
            (0..g.order())
                .filter(|&j| g.has_edge(i, j))
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect()
}

fn subsets_max(g: &Graph, want_edges: bool) -> usize {
    let n = g.order();
    assert!(n <= 16);
    let adj = masks(g);
    let mut best = 0;
    for s in 0u32..1 << n {
        let ok = (0..n).filter(|&v| s >> v & 1 == 1).all(|v| {
            let others = (s as u64) & !(1 << v);
            if want_edges {
                adj[v] & others == others
            } else {
                adj[v] & others == 0
            }
        });
        if ok {
            best = best.max(s.count_ones() as usize);
        }
    }
    best
}

/// Largest independent set by checking every vertex subset.
pub fn alpha_exhaustive(g: &Graph) -> usize {
    subsets_max(g, false)
}

/// Largest clique by checking every vertex subset.
pub fn omega_exhaustive(g: &Graph) -> usize {
    subsets_max(g, true)
}

/// Independence number by plain branching on a max-degree vertex; used
/// where the graph is too large for subset enumeration.
pub fn alpha_branching(g: &Graph) -> usize {
    fn go(adj: &[u64], mask: u64) -> usize {
        if mask == 0 {
            return 0;
        }
        let mut best_v = 0;
        let mut best_d = 0;
        let mut edges = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let d = (adj[v] & mask).count_ones();
            edges += d;
            if d >= best_d {
                best_d = d;
                best_v = v;
            }
        }
        match best_d {
            0 => mask.count_ones() as usize,
            1 => (mask.count_ones() - edges / 2) as usize,
            _ => {
                let without = go(adj, mask & !(1 << best_v));
                let with = 1 + go(adj, mask & !(1 << best_v) & !adj[best_v]);
                without.max(with)
            }
        }
    }
    let adj = masks(g);
    let all = if g.order() == 64 {
        u64::MAX
    } else {
        (1u64 << g.order()) - 1
    };
    go(&adj, all)
}

/// Random graph with `lo..=hi` vertices.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}
