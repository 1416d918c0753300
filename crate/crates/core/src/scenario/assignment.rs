//! Probability assignments over scenario events and the exclusivity check.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{chsh_scenario, Scenario};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::solvers::{enumerate_maximal_cliques, DEFAULT_MAXIMAL_CLIQUE_CAP};

/// Slack allowed when comparing floating-point clique sums against 1.
pub const REAL_SLACK: f64 = 1e-9;

/// An event weight, exact when it came from rational inputs.
#[derive(Clone, Debug, PartialEq)]
pub enum Weight {
    Exact(Rational),
    Real(f64),
}

impl Weight {
    pub fn zero() -> Self {
        Weight::Exact(Rational::zero())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Weight::Exact(r) => rational::to_f64(r),
            Weight::Real(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Weight::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Weight::Exact(r) => Some(r),
            Weight::Real(_) => None,
        }
    }

    /// `self <= 1`, exactly for rationals and up to [`REAL_SLACK`] otherwise.
    pub fn at_most_one(&self) -> bool {
        match self {
            Weight::Exact(r) => *r <= Rational::one(),
            Weight::Real(x) => *x <= 1.0 + REAL_SLACK,
        }
    }

    fn is_probability(&self) -> bool {
        match self {
            Weight::Exact(r) => rational::is_probability(r),
            Weight::Real(x) => (0.0..=1.0).contains(x),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Exact(r) => f.write_str(&rational::format(r)),
            Weight::Real(x) => write!(f, "{x}"),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        match (self, rhs) {
            (Weight::Exact(a), Weight::Exact(b)) => Weight::Exact(a + b),
            _ => Weight::Real(self.to_f64() + rhs.to_f64()),
        }
    }
}

impl Mul for &Weight {
    type Output = Weight;

    fn mul(self, rhs: &Weight) -> Weight {
        match (self, rhs) {
            (Weight::Exact(a), Weight::Exact(b)) => Weight::Exact(a * b),
            _ => Weight::Real(self.to_f64() * rhs.to_f64()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityAssignment {
    weights: Vec<Weight>,
}

impl ProbabilityAssignment {
    pub fn new(weights: Vec<Weight>) -> Result<Self> {
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_probability())
        {
            return Err(Error::input(format!(
                "weight {w} of event {i} is outside [0, 1]"
            )));
        }
        Ok(Self { weights })
    }

    pub fn uniform(len: usize, w: Weight) -> Result<Self> {
        Self::new(vec![w; len])
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Copy with one weight replaced.
    pub fn with_weight(&self, i: usize, w: Weight) -> Result<Self> {
        if i >= self.len() {
            return Err(Error::input(format!("event index {i} out of range")));
        }
        let mut weights = self.weights.clone();
        weights[i] = w;
        Self::new(weights)
    }
}

/// Weight 1/2 on each CHSH event with `a ⊕ b = x·y`.
pub fn pr_box_assignment() -> ProbabilityAssignment {
    ProbabilityAssignment::uniform(chsh_scenario().len(), Weight::Exact(rational::ratio(1, 2)))
        .expect("1/2 is a probability")
}

/// Weights of independent joint events, `w(e1, e2) = w1(e1) · w2(e2)`,
/// laid out like [`super::product_scenario`].
pub fn product_assignment(
    a1: &ProbabilityAssignment,
    a2: &ProbabilityAssignment,
) -> ProbabilityAssignment {
    let weights = a1
        .weights
        .iter()
        .flat_map(|w1| a2.weights.iter().map(move |w2| w1 * w2))
        .collect();
    ProbabilityAssignment { weights }
}

/// Sum of weights over `subset`, or over every event.
pub fn assignment_value(a: &ProbabilityAssignment, subset: Option<&[usize]>) -> Result<Weight> {
    let mut total = Weight::zero();
    match subset {
        None => {
            for w in &a.weights {
                total = &total + w;
            }
        }
        Some(indices) => {
            for &i in indices {
                let w = a
                    .weights
                    .get(i)
                    .ok_or_else(|| Error::input(format!("event index {i} out of range")))?;
                total = &total + w;
            }
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Admissibility {
    /// Every clique sums to at most 1.
    Admissible { max_clique_sum: Weight },
    /// First maximal clique, in lexicographic order, whose sum exceeds 1.
    Violated { clique: Vec<usize>, sum: Weight },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible { .. })
    }
}

/// Exclusivity check: every set of pairwise exclusive events has total
/// weight at most 1. Only maximal cliques are evaluated since weights are
/// non-negative.
pub fn check_e(a: &ProbabilityAssignment, s: &Scenario) -> Result<Admissibility> {
    if a.len() != s.len() {
        return Err(Error::input(format!(
            "assignment has {} weights for {} events",
            a.len(),
            s.len()
        )));
    }
    let g = s.exclusivity_graph();
    let cliques = enumerate_maximal_cliques(&g, DEFAULT_MAXIMAL_CLIQUE_CAP)?;
    let mut max_sum = Weight::zero();
    for clique in cliques {
        let sum = assignment_value(a, Some(&clique))?;
        if !sum.at_most_one() {
            return Ok(Admissibility::Violated { clique, sum });
        }
        if sum.to_f64() > max_sum.to_f64() {
            max_sum = sum;
        }
    }
    Ok(Admissibility::Admissible {
        max_clique_sum: max_sum,
    })
}

/// Serialisable form of a weight: `"p/q"` for exact values, a number otherwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightRepr {
    Text(String),
    Number(f64),
}

impl From<&Weight> for WeightRepr {
    fn from(w: &Weight) -> Self {
        match w {
            Weight::Exact(r) => WeightRepr::Text(rational::format(r)),
            Weight::Real(x) => WeightRepr::Number(*x),
        }
    }
}

impl TryFrom<&WeightRepr> for Weight {
    type Error = Error;

    fn try_from(w: &WeightRepr) -> Result<Weight> {
        match w {
            WeightRepr::Text(s) => rational::parse(s).map(Weight::Exact),
            WeightRepr::Number(x) => Ok(Weight::Real(*x)),
        }
    }
}
