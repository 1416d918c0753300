use super::Graph;
use crate::error::{Error, Result};

/// Circulant graph `Ci_n(steps)`: vertex `i` is adjacent to `i ± s mod n`.
pub fn make_circulant(n: usize, steps: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("circulant needs at least one vertex"));
    }
    let mut seen = vec![false; n / 2 + 1];
    for &s in steps {
        if s == 0 || s > n / 2 {
            return Err(Error::input(format!(
                "circulant step {s} outside 1..={} for n = {n}",
                n / 2
            )));
        }
        if std::mem::replace(&mut seen[s], true) {
            return Err(Error::input(format!("duplicate circulant step {s}")));
        }
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        for &s in steps {
            g.link(i, (i + s) % n);
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("cycle needs n >= 3, got {n}")));
    }
    make_circulant(n, &[1])
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            g.link(i, j);
        }
    }
    g
}

pub fn edgeless(n: usize) -> Graph {
    Graph::new(n)
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.link(i - 1, i);
    }
    g
}
