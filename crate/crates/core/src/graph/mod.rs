//! Finite simple undirected graphs with bitset adjacency.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..order`; optional
//! display labels travel through products as tuples so that events stay
//! traceable in product scenarios.

mod bitset;
mod constructors;
mod cycles;
mod io;
mod iso;
mod products;

pub use bitset::{Bitset, Ones};
pub use constructors::{complete, cycle, edgeless, make_circulant, path};
pub use cycles::induced_cycles;
pub use io::GraphJson;
pub use iso::{
    automorphism_orbits, find_isomorphism, is_isomorphic, is_self_complementary,
    is_vertex_transitive, IsomorphismWitness, Transitivity,
};
pub use products::{complement, or_power, or_product, strong_power, strong_product};

use crate::error::{Error, Result};

/// Default cap on the order of product graphs.
pub const DEFAULT_PRODUCT_CAP: usize = 1024;
/// Default cap on the order of graphs handed to isomorphism search.
pub const DEFAULT_ISO_CAP: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Bitset>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Graph on `order` vertices with no edges.
    pub fn new(order: usize) -> Self {
        Self {
            adjacency: (0..order).map(|_| Bitset::new(order)).collect(),
            labels: None,
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(order);
        for (i, j) in edges {
            if i >= order || j >= order {
                return Err(Error::input(format!(
                    "edge ({i},{j}) out of range for order {order}"
                )));
            }
            if i == j {
                return Err(Error::input(format!("self-loop at vertex {i}")));
            }
            g.link(i, j);
        }
        Ok(g)
    }

    /// Attach display labels; they must be unique and one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::input(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order()
            )));
        }
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!("duplicate vertex label {:?}", w[0])));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub(crate) fn link(&mut self, i: usize, j: usize) {
        self.adjacency[i].insert(j);
        self.adjacency[j].insert(i);
    }

    pub(crate) fn set_labels_unchecked(&mut self, labels: Option<Vec<String>>) {
        self.labels = labels;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Bitset::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            Some(&first) if d.iter().all(|&x| x == first) => Some(first),
            None => Some(0),
            _ => None,
        }
    }

    /// Edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.order() {
            out.extend(self.adjacency[i].iter().filter(|&j| j > i).map(|j| (i, j)));
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Copy of the graph with the edge `{i, j}` removed.
    pub fn without_edge(&self, i: usize, j: usize) -> Result<Graph> {
        if i >= self.order() || j >= self.order() || !self.has_edge(i, j) {
            return Err(Error::input(format!("no edge ({i},{j}) to remove")));
        }
        let mut g = self.clone();
        g.adjacency[i].remove(j);
        g.adjacency[j].remove(i);
        Ok(g)
    }

    /// Subgraph induced by `vertices`, in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.link(a, b);
                }
            }
        }
        g.labels = self
            .labels
            .as_ref()
            .map(|l| vertices.iter().map(|&v| l[v].clone()).collect());
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(a, &u)| {
            vertices[a + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(a, &u)| {
            vertices[a + 1..]
                .iter()
                .all(|&v| u != v && !self.has_edge(u, v))
        })
    }

    /// Equality of adjacency, ignoring labels.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adjacency == other.adjacency
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges())
            .field("labels", &self.labels)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn labels_must_be_unique_and_complete() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(g.clone().with_labels(vec!["a".into()]).is_err());
        assert!(g.clone().with_labels(vec!["a".into(), "a".into()]).is_err());
        let g = g.with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.label(1), "b");
    }

    #[test]
    fn edges_are_sorted_and_symmetric() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert!(g.has_edge(3, 1) && g.has_edge(1, 3));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn edge_removal_and_induced_subgraph() {
        let g = cycle(5).unwrap();
        let h = g.without_edge(0, 1).unwrap();
        assert_eq!(h.edge_count(), 4);
        assert!(g.without_edge(0, 2).is_err());
        let sub = g.induced_subgraph(&[0, 1, 2]);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.is_clique(&[3, 4]));
        assert!(g.is_independent(&[0, 2]));
    }
}
