//! Isomorphism and automorphism search by backtracking over bitsets.
//!
//! Vertices are matched only inside classes of a local invariant (degree,
//! neighbour degree multiset, common-neighbour profile), and every partial
//! map is kept adjacency-consistent with the vertices already placed.

use serde::{Deserialize, Serialize};

use super::{complement, Bitset, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismWitness {
    /// `mapping[v]` is the image in the second graph of vertex `v` of the first.
    pub mapping: Vec<usize>,
}

impl IsomorphismWitness {
    /// Exhaustive check that the mapping is a bijection preserving
    /// adjacency and non-adjacency.
    pub fn validate(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.order();
        if h.order() != n || self.mapping.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in &self.mapping {
            if m >= n || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        (0..n).all(|u| {
            (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(self.mapping[u], self.mapping[v]))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transitivity {
    pub vertex_transitive: bool,
    /// Vertex orbits of the automorphism group, each sorted, ordered by
    /// smallest member.
    pub orbits: Vec<Vec<usize>>,
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::resource(format!(
            "graph of order {} exceeds the isomorphism cap of {cap}",
            g.order()
        )));
    }
    Ok(())
}

fn vertex_invariants(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let degrees = g.degrees();
    (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| degrees[u]).collect();
            nd.sort_unstable();
            // common-neighbour counts split by adjacency, offset to keep them apart
            let mut profile: Vec<usize> = (0..n)
                .filter(|&u| u != v)
                .map(|u| {
                    let common = g.neighbors(v).intersection_count(g.neighbors(u));
                    if g.has_edge(u, v) {
                        common
                    } else {
                        n + common
                    }
                })
                .collect();
            profile.sort_unstable();
            let mut key = vec![degrees[v]];
            key.extend(nd);
            key.push(usize::MAX);
            key.extend(profile);
            key
        })
        .collect()
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    /// Candidate images per vertex of `g`, by invariant class.
    classes: Vec<Bitset>,
    mapping: Vec<usize>,
    used: Bitset,
}

impl<'a> Matcher<'a> {
    /// `None` when the invariant multisets already differ.
    fn new(g: &'a Graph, h: &'a Graph) -> Option<Self> {
        let n = g.order();
        if h.order() != n || g.edge_count() != h.edge_count() {
            return None;
        }
        let inv_g = vertex_invariants(g);
        let inv_h = vertex_invariants(h);
        let mut sg = inv_g.clone();
        let mut sh = inv_h.clone();
        sg.sort();
        sh.sort();
        if sg != sh {
            return None;
        }
        let classes: Vec<Bitset> = inv_g
            .iter()
            .map(|key| {
                let mut set = Bitset::new(n);
                for (w, kh) in inv_h.iter().enumerate() {
                    if kh == key {
                        set.insert(w);
                    }
                }
                set
            })
            .collect();
        Some(Self {
            g,
            h,
            order: Vec::new(),
            classes,
            mapping: vec![usize::MAX; n],
            used: Bitset::new(n),
        })
    }

    /// Search order: rarest class first, then the vertex with the most
    /// already-ordered neighbours.
    fn plan(&mut self, first: Option<usize>) {
        let n = self.g.order();
        let mut placed = Bitset::new(n);
        let mut order = Vec::with_capacity(n);
        let class_size: Vec<usize> = self.classes.iter().map(Bitset::count).collect();
        while order.len() < n {
            let start = if order.is_empty() { first } else { None };
            let next = if let Some(v) = start {
                v
            } else {
                (0..n)
                    .filter(|&v| !placed.contains(v))
                    .max_by_key(|&v| {
                        (
                            self.g.neighbors(v).intersection_count(&placed),
                            std::cmp::Reverse(class_size[v]),
                            std::cmp::Reverse(v),
                        )
                    })
                    .unwrap()
            };
            placed.insert(next);
            order.push(next);
        }
        self.order = order;
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let mut allowed = self.classes[v].clone();
        allowed.difference_with(&self.used);
        for &u in &self.order[..depth] {
            let image = self.mapping[u];
            if self.g.has_edge(u, v) {
                allowed.intersect_with(self.h.neighbors(image));
            } else {
                allowed.difference_with(self.h.neighbors(image));
            }
            if allowed.is_empty() {
                return false;
            }
        }
        let candidates: Vec<usize> = allowed.iter().collect();
        for w in candidates {
            self.mapping[v] = w;
            self.used.insert(w);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(w);
        }
        self.mapping[v] = usize::MAX;
        false
    }

    fn run(mut self, fixed: Option<(usize, usize)>) -> Option<Vec<usize>> {
        if let Some((v, w)) = fixed {
            if !self.classes[v].contains(w) {
                return None;
            }
            let mut only = Bitset::new(self.g.order());
            only.insert(w);
            self.classes[v] = only;
        }
        self.plan(fixed.map(|(v, _)| v));
        if self.extend(0) {
            Some(self.mapping)
        } else {
            None
        }
    }
}

/// Isomorphism search without a size cap. Prefer [`is_isomorphic`].
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<IsomorphismWitness> {
    Matcher::new(g, h)?
        .run(None)
        .map(|mapping| IsomorphismWitness { mapping })
}

pub fn is_isomorphic(g: &Graph, h: &Graph, cap: usize) -> Result<Option<IsomorphismWitness>> {
    check_cap(g, cap)?;
    check_cap(h, cap)?;
    Ok(find_isomorphism(g, h))
}

fn automorphism_mapping(g: &Graph, from: usize, to: usize) -> Option<Vec<usize>> {
    Matcher::new(g, g)?.run(Some((from, to)))
}

fn find_root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Vertex orbits of the automorphism group.
pub fn automorphism_orbits(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    check_cap(g, cap)?;
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    for v in 1..n {
        let roots: Vec<usize> = {
            let mut r: Vec<usize> = (0..v).map(|u| find_root(&mut parent, u)).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let rv = find_root(&mut parent, v);
        for r in roots {
            if r == rv || find_root(&mut parent, v) == r {
                continue;
            }
            if let Some(map) = automorphism_mapping(g, r, v) {
                for (a, &b) in map.iter().enumerate() {
                    let (ra, rb) = (find_root(&mut parent, a), find_root(&mut parent, b));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
                break;
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut index_of = vec![usize::MAX; n];
    for v in 0..n {
        let r = find_root(&mut parent, v);
        if index_of[r] == usize::MAX {
            index_of[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[index_of[r]].push(v);
    }
    Ok(orbits)
}

pub fn is_vertex_transitive(g: &Graph, cap: usize) -> Result<Transitivity> {
    let orbits = automorphism_orbits(g, cap)?;
    Ok(Transitivity {
        vertex_transitive: orbits.len() <= 1,
        orbits,
    })
}

pub fn is_self_complementary(g: &Graph, cap: usize) -> Result<bool> {
    check_cap(g, cap)?;
    Ok(find_isomorphism(g, &complement(g)).is_some())
}
