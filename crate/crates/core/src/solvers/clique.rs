//! Maximum clique by bitset branch and bound with greedy-colouring bounds,
//! and maximal clique enumeration by pivoting Bron–Kerbosch.
//!
//! Search runs on a relabelled copy of the graph in degeneracy order. Once
//! the optimum size is known, the witness is replaced by the
//! lexicographically smallest maximum clique so results do not depend on
//! search internals.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{Budget, SearchStatus};
use crate::error::{Error, Result};
use crate::graph::{complement, Bitset, Graph};

/// Default cap on the number of maximal cliques enumerated.
pub const DEFAULT_MAXIMAL_CLIQUE_CAP: usize = 200_000;

const CHECK_EVERY: u64 = 1 << 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Sorted vertex indices.
    pub witness: Vec<usize>,
    pub status: SearchStatus,
    /// Branch-and-bound nodes expanded.
    pub nodes: u64,
}

impl CliqueResult {
    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::ProvenExact
    }
}

struct Clock {
    deadline: Option<Instant>,
    nodes: u64,
    expired: bool,
}

impl Clock {
    fn new(budget: &Budget) -> Self {
        Self {
            deadline: budget.deadline(),
            nodes: 0,
            expired: false,
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(CHECK_EVERY) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.expired = true;
                }
            }
        }
        self.expired
    }
}

/// Vertices ordered so that the densest core comes first.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut degree = g.degrees();
    let mut alive = Bitset::full(n);
    let mut removed = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        alive.remove(v);
        for u in g.neighbors(v).iter() {
            if alive.contains(u) {
                degree[u] -= 1;
            }
        }
        removed.push(v);
    }
    removed.reverse();
    removed
}

struct BranchAndBound {
    adj: Vec<Bitset>,
    best: Vec<usize>,
    current: Vec<usize>,
    clock: Clock,
}

impl BranchAndBound {
    /// Greedy sequential colouring of `p`; returns `(vertex, colour)` for
    /// vertices whose colour could still beat the incumbent, in colour order.
    fn colour(&self, p: &Bitset) -> Vec<(usize, usize)> {
        let kmin = (self.best.len() + 1).saturating_sub(self.current.len());
        let mut uncoloured = p.clone();
        let mut out = Vec::with_capacity(p.count());
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                uncoloured.remove(v);
                q.remove(v);
                q.difference_with(&self.adj[v]);
                if colour >= kmin {
                    out.push((v, colour));
                }
            }
        }
        out
    }

    fn expand(&mut self, mut p: Bitset) {
        if self.clock.tick() {
            return;
        }
        let coloured = self.colour(&p);
        for &(v, colour) in coloured.iter().rev() {
            if self.current.len() + colour <= self.best.len() || self.clock.expired {
                return;
            }
            self.current.push(v);
            let next = p.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.remove(v);
        }
    }
}

/// Search for a clique of exactly `k` vertices, extending in increasing
/// vertex order so the first hit is the lexicographically smallest.
fn lex_first_clique(g: &Graph, k: usize, clock: &mut Clock) -> Option<Vec<usize>> {
    fn colour_bound(g: &Graph, p: &Bitset) -> usize {
        let mut uncoloured = p.clone();
        let mut colours = 0;
        while !uncoloured.is_empty() {
            colours += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                uncoloured.remove(v);
                q.remove(v);
                q.difference_with(g.neighbors(v));
            }
        }
        colours
    }

    fn go(g: &Graph, k: usize, p: Bitset, current: &mut Vec<usize>, clock: &mut Clock) -> bool {
        if current.len() == k {
            return true;
        }
        if clock.tick() {
            return false;
        }
        let need = k - current.len();
        if p.count() < need || colour_bound(g, &p) < need {
            return false;
        }
        let mut rest = p.clone();
        for v in p.iter() {
            if rest.count() < need || clock.expired {
                return false;
            }
            rest.remove(v);
            current.push(v);
            if go(g, k, rest.intersection(g.neighbors(v)), current, clock) {
                return true;
            }
            current.pop();
        }
        false
    }

    let mut current = Vec::with_capacity(k);
    go(g, k, Bitset::full(g.order()), &mut current, clock).then_some(current)
}

/// Maximum clique with witness; `status` records whether the search
/// finished inside the budget.
pub fn max_clique(g: &Graph, budget: &Budget) -> CliqueResult {
    let n = g.order();
    if n == 0 {
        return CliqueResult {
            size: 0,
            witness: Vec::new(),
            status: SearchStatus::ProvenExact,
            nodes: 0,
        };
    }
    let order = degeneracy_order(g);
    let mut position = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        position[v] = k;
    }
    let adj: Vec<Bitset> = order
        .iter()
        .map(|&v| {
            let mut row = Bitset::new(n);
            for u in g.neighbors(v).iter() {
                row.insert(position[u]);
            }
            row
        })
        .collect();
    let mut bb = BranchAndBound {
        adj,
        best: vec![0],
        current: Vec::new(),
        clock: Clock::new(budget),
    };
    bb.expand(Bitset::full(n));

    let mut witness: Vec<usize> = bb.best.iter().map(|&k| order[k]).collect();
    witness.sort_unstable();
    let mut clock = bb.clock;
    let status = if clock.expired {
        SearchStatus::LowerBoundOnly
    } else {
        if let Some(first) = lex_first_clique(g, witness.len(), &mut clock) {
            witness = first;
        }
        SearchStatus::ProvenExact
    };
    debug_assert!(g.is_clique(&witness));
    CliqueResult {
        size: witness.len(),
        witness,
        status,
        nodes: clock.nodes,
    }
}

/// Maximum independent set, as a maximum clique of the complement.
pub fn max_independent_set(g: &Graph, budget: &Budget) -> CliqueResult {
    max_clique(&complement(g), budget)
}

/// All maximal cliques, each sorted, in lexicographic order.
pub fn enumerate_maximal_cliques(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    struct Enumerator<'a> {
        g: &'a Graph,
        out: Vec<Vec<usize>>,
        cap: usize,
    }

    impl Enumerator<'_> {
        fn run(&mut self, r: &mut Vec<usize>, mut p: Bitset, mut x: Bitset) -> Result<()> {
            if p.is_empty() {
                if x.is_empty() {
                    if self.out.len() == self.cap {
                        return Err(Error::resource(format!(
                            "more than {} maximal cliques",
                            self.cap
                        )));
                    }
                    let mut clique = r.clone();
                    clique.sort_unstable();
                    self.out.push(clique);
                }
                return Ok(());
            }
            // pivot maximising |P ∩ N(u)|
            let pivot = p
                .iter()
                .chain(x.iter())
                .max_by_key(|&u| {
                    (
                        p.intersection_count(self.g.neighbors(u)),
                        std::cmp::Reverse(u),
                    )
                })
                .expect("P is non-empty");
            let mut branch = p.clone();
            branch.difference_with(self.g.neighbors(pivot));
            for v in branch.iter() {
                r.push(v);
                let nv = self.g.neighbors(v);
                self.run(r, p.intersection(nv), x.intersection(nv))?;
                r.pop();
                p.remove(v);
                x.insert(v);
            }
            Ok(())
        }
    }

    let n = g.order();
    let mut e = Enumerator {
        g,
        out: Vec::new(),
        cap,
    };
    if n > 0 {
        e.run(&mut Vec::new(), Bitset::full(n), Bitset::new(n))?;
    }
    e.out.sort();
    Ok(e.out)
}
