//! Exact two-phase simplex over rationals with Bland's anti-cycling rule.
//!
//! Solves `max c·x` subject to linear rows `a·x (<=|>=|=) b`, `x >= 0`
//! and optional per-variable upper bounds.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    LessEq,
    GreaterEq,
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn holds_at(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
        match self.relation {
            Relation::LessEq => lhs <= self.rhs,
            Relation::GreaterEq => lhs >= self.rhs,
            Relation::Equal => lhs == self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    /// Per-variable upper bound; empty means none.
    pub upper_bounds: Vec<Option<Rational>>,
}

impl LinearProgram {
    pub fn new(objective: Vec<Rational>) -> Self {
        Self {
            objective,
            ..Self::default()
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    /// Exact feasibility check of `x` against every row and bound.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| c.holds_at(x))
            && self
                .upper_bounds
                .iter()
                .zip(x)
                .all(|(u, v)| u.as_ref().is_none_or(|u| v <= u))
    }

    pub fn objective_at(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpResult {
    pub value: Rational,
    pub witness: Vec<Rational>,
    pub pivots: usize,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced costs per column; the final slot holds minus the objective value.
    costs: Vec<Rational>,
    width: usize,
    pivots: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        let nonzero: Vec<usize> = (0..=self.width)
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &nonzero {
                row[j] -= &factor * &pivot_row[j];
            }
        }
        if !self.costs[c].is_zero() {
            let factor = self.costs[c].clone();
            for &j in &nonzero {
                self.costs[j] -= &factor * &pivot_row[j];
            }
        }
        self.basis[r] = c;
        self.pivots += 1;
    }

    /// Reduced costs for objective `c` over the current basis.
    fn price(&mut self, c: &[Rational]) {
        let mut costs: Vec<Rational> = (0..=self.width)
            .map(|j| c.get(j).cloned().unwrap_or_else(Rational::zero))
            .collect();
        costs[self.width] = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &c[b];
            if cb.is_zero() {
                continue;
            }
            for (j, x) in self.rows[i].iter().enumerate() {
                if !x.is_zero() {
                    costs[j] -= cb * x;
                }
            }
        }
        self.costs = costs;
    }

    /// Primal simplex on columns `< allowed`; `Err(Unbounded)` if no ratio row exists.
    fn optimize(&mut self, allowed: usize) -> Result<()> {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.costs[j].is_positive()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((k, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return Err(Error::Unbounded);
            };
            self.pivot(row, enter);
        }
    }
}

/// Maximise the program exactly. Infeasible and unbounded programs are
/// reported as [`Error::Infeasible`] and [`Error::Unbounded`].
pub fn lp_maximize(lp: &LinearProgram) -> Result<LpResult> {
    let n = lp.num_vars();
    if lp.constraints.iter().any(|c| c.coeffs.len() != n) {
        return Err(Error::input(
            "constraint length differs from objective length",
        ));
    }
    if !lp.upper_bounds.is_empty() && lp.upper_bounds.len() != n {
        return Err(Error::input(
            "upper bound count differs from variable count",
        ));
    }

    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = lp
        .constraints
        .iter()
        .map(|c| (c.coeffs.clone(), c.relation, c.rhs.clone()))
        .collect();
    for (j, u) in lp.upper_bounds.iter().enumerate() {
        if let Some(u) = u {
            let mut coeffs = vec![Rational::zero(); n];
            coeffs[j] = Rational::from_integer(1.into());
            rows.push((coeffs, Relation::LessEq, u.clone()));
        }
    }
    for (coeffs, rel, rhs) in rows.iter_mut() {
        if rhs.is_negative() {
            for a in coeffs.iter_mut() {
                *a = -a.clone();
            }
            *rhs = -rhs.clone();
            *rel = match rel {
                Relation::LessEq => Relation::GreaterEq,
                Relation::GreaterEq => Relation::LessEq,
                Relation::Equal => Relation::Equal,
            };
        }
    }

    let m = rows.len();
    let slacks = rows.iter().filter(|r| r.1 != Relation::Equal).count();
    let artificials = rows.iter().filter(|r| r.1 != Relation::LessEq).count();
    let art_start = n + slacks;
    let width = art_start + artificials;
    let one = Rational::from_integer(1.into());

    let mut table = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut s, mut a) = (n, art_start);
    for (coeffs, rel, rhs) in rows {
        let mut row = vec![Rational::zero(); width + 1];
        row[..n].clone_from_slice(&coeffs);
        row[width] = rhs;
        match rel {
            Relation::LessEq => {
                row[s] = one.clone();
                basis.push(s);
                s += 1;
            }
            Relation::GreaterEq => {
                row[s] = -one.clone();
                s += 1;
                row[a] = one.clone();
                basis.push(a);
                a += 1;
            }
            Relation::Equal => {
                row[a] = one.clone();
                basis.push(a);
                a += 1;
            }
        }
        table.push(row);
    }
    let mut t = Tableau {
        rows: table,
        basis,
        costs: Vec::new(),
        width,
        pivots: 0,
    };

    if artificials > 0 {
        let phase1: Vec<Rational> = (0..width)
            .map(|j| {
                if j >= art_start {
                    -one.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        t.price(&phase1);
        t.optimize(width)?;
        if !t.costs[width].is_zero() {
            return Err(Error::Infeasible);
        }
        // drive remaining (zero-valued) artificials out of the basis
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= art_start {
                match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut c: Vec<Rational> = vec![Rational::zero(); width];
    c[..n].clone_from_slice(&lp.objective);
    t.price(&c);
    t.optimize(art_start)?;

    let mut witness = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            witness[b] = t.rhs(i).clone();
        }
    }
    let value = lp.objective_at(&witness);
    debug_assert_eq!(value, -t.costs[width].clone());
    Ok(LpResult {
        value,
        witness,
        pivots: t.pivots,
    })
}
