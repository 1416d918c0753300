//! Graph invariants that bound noncontextuality scenarios, and the
//! multi-copy machinery built on them.
//!
//! For an exclusivity graph `G`: the independence number `α(G)` is the
//! classical bound, the Lovász number `ϑ(G)` the quantum bound and the
//! fractional packing number `α*(G)` the bound from exclusivity alone.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{
    complement, is_self_complementary, is_vertex_transitive, make_circulant, or_power,
    strong_power, Graph,
};
use crate::rational::{self, Rational};
use crate::scenario::Scenario;
use crate::solvers::{
    enumerate_maximal_cliques, lp_maximize, max_clique, max_independent_set, sdp_theta,
    CliqueResult, LinearProgram, Relation, SearchStatus, ThetaCertificate,
};

/// `α*(G)` with an optimal weighting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalPacking {
    pub value: Rational,
    pub weights: Vec<Rational>,
    /// Maximal cliques used as constraints.
    pub cliques: Vec<Vec<usize>>,
}

fn ones(n: usize) -> Vec<Rational> {
    vec![Rational::one(); n]
}

fn indicator(n: usize, members: &[usize]) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); n];
    for &v in members {
        row[v] = Rational::one();
    }
    row
}

/// The packing LP: one `≤ 1` row per maximal clique. Bounds `w_i ≤ 1` are
/// implied since every vertex lies in some maximal clique.
fn packing_program(g: &Graph, cliques: &[Vec<usize>]) -> LinearProgram {
    let n = g.order();
    let mut lp = LinearProgram::new(ones(n));
    for c in cliques {
        lp.constrain(indicator(n, c), Relation::LessEq, Rational::one());
    }
    lp
}

pub fn fractional_packing(g: &Graph, cfg: &Config) -> Result<FractionalPacking> {
    let cliques = enumerate_maximal_cliques(g, cfg.clique_cap)?;
    let lp = packing_program(g, &cliques);
    let solved = lp_maximize(&lp)?;
    debug_assert!(lp.is_feasible(&solved.witness));
    Ok(FractionalPacking {
        value: solved.value,
        weights: solved.witness,
        cliques,
    })
}

pub fn independence_number(g: &Graph, cfg: &Config) -> CliqueResult {
    max_independent_set(g, &cfg.budget)
}

pub fn clique_number(g: &Graph, cfg: &Config) -> CliqueResult {
    max_clique(g, &cfg.budget)
}

pub fn theta(g: &Graph, cfg: &Config) -> Result<ThetaCertificate> {
    sdp_theta(g, &cfg.sdp())
}

/// Classical, quantum and exclusivity bounds of one exclusivity graph.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundTriple {
    pub classical: CliqueResult,
    pub quantum: ThetaCertificate,
    pub exclusivity: FractionalPacking,
}

impl BoundTriple {
    pub fn alpha(&self) -> usize {
        self.classical.size
    }

    pub fn theta(&self) -> f64 {
        self.quantum.value
    }

    pub fn alpha_star(&self) -> &Rational {
        &self.exclusivity.value
    }

    /// `α ≤ ϑ + tol ≤ α* + 2·tol`.
    pub fn is_ordered(&self, tol: f64) -> bool {
        let a = self.alpha() as f64;
        let t = self.theta();
        let s = rational::to_f64(self.alpha_star());
        a <= t + tol && t <= s + tol
    }
}

pub fn bound_triple_of_graph(g: &Graph, cfg: &Config) -> Result<BoundTriple> {
    Ok(BoundTriple {
        classical: independence_number(g, cfg),
        quantum: theta(g, cfg)?,
        exclusivity: fractional_packing(g, cfg)?,
    })
}

pub fn bound_triple(s: &Scenario, cfg: &Config) -> Result<BoundTriple> {
    bound_triple_of_graph(&s.exclusivity_graph(), cfg)
}

/// `α*(G) = |G| / ω(G)` for vertex-transitive `G`.
pub fn vt_alpha_star(g: &Graph, cfg: &Config) -> Result<Rational> {
    if !is_vertex_transitive(g, cfg.iso_cap)?.vertex_transitive {
        return Err(Error::Precondition(
            "graph is not vertex-transitive".to_owned(),
        ));
    }
    let omega = clique_number(g, cfg);
    if !omega.is_exact() {
        return Err(Error::resource("clique number search ran out of budget"));
    }
    Ok(rational::ratio(g.order() as i64, omega.size as i64))
}

/// Bound on the sum of an inequality's probabilities from exclusivity
/// applied to `n` independent copies, assuming equal weight per event.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CopyBound {
    pub n: usize,
    /// `ω(G^{*n})`.
    pub omega_power: usize,
    /// `ω(G^{*n})^{-1/n}`, the largest uniform per-event probability.
    pub p_n: f64,
    /// `|G| · p_n`.
    pub bound: f64,
    pub status: SearchStatus,
    pub witness: Vec<usize>,
}

pub fn ge_copy_bound(g: &Graph, n: usize, cfg: &Config) -> Result<CopyBound> {
    let power = or_power(g, n, cfg.product_cap)?;
    let omega = clique_number(&power, cfg);
    let p_n = (omega.size as f64).powf(-1.0 / n as f64);
    Ok(CopyBound {
        n,
        omega_power: omega.size,
        p_n,
        bound: g.order() as f64 * p_n,
        status: omega.status,
        witness: omega.witness,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PowerAlpha {
    pub n: usize,
    /// `α(G^{⊠n})`, or the best lower bound found.
    pub alpha: usize,
    pub status: SearchStatus,
}

/// Interval containing the Shannon capacity `Θ(G)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CapacityBounds {
    /// Best `α(G^{⊠n})^{1/n}` over proven-exact powers.
    pub lower: f64,
    /// `ϑ(G)`.
    pub upper: f64,
    pub per_power: Vec<PowerAlpha>,
}

pub fn shannon_bounds(g: &Graph, max_power: usize, cfg: &Config) -> Result<CapacityBounds> {
    if max_power == 0 {
        return Err(Error::input("capacity bounds need max_power >= 1"));
    }
    if g.order() == 0 {
        return Err(Error::input("capacity of the empty graph is undefined"));
    }
    let upper = theta(g, cfg)?.value;
    let mut lower: f64 = 1.0;
    let mut per_power = Vec::with_capacity(max_power);
    for n in 1..=max_power {
        let power = strong_power(g, n, cfg.product_cap)?;
        let alpha = independence_number(&power, cfg);
        if alpha.is_exact() {
            lower = lower.max((alpha.size as f64).powf(1.0 / n as f64));
        }
        per_power.push(PowerAlpha {
            n,
            alpha: alpha.size,
            status: alpha.status,
        });
    }
    Ok(CapacityBounds {
        lower,
        upper,
        per_power,
    })
}

/// Whether the packing LP has a single optimal weighting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    Unique {
        weights: Vec<Rational>,
    },
    /// Vertex whose weight varies over the optimal face, with its range and
    /// two optimal weightings attaining the ends.
    Multiple {
        vertex: usize,
        min: Rational,
        max: Rational,
        at_min: Vec<Rational>,
        at_max: Vec<Rational>,
    },
}

impl Uniqueness {
    pub fn is_unique(&self) -> bool {
        matches!(self, Uniqueness::Unique { .. })
    }
}

/// For each vertex, minimise and maximise its weight over the optimal face
/// `{w feasible, Σ w = α*}`; the optimum is unique iff every range is a point.
pub fn uniqueness_probe(g: &Graph, cfg: &Config) -> Result<Uniqueness> {
    let packing = fractional_packing(g, cfg)?;
    let n = g.order();
    let mut face = packing_program(g, &packing.cliques);
    face.constrain(ones(n), Relation::Equal, packing.value.clone());

    let extreme = |i: usize, sign: i64| -> Result<(Rational, Vec<Rational>)> {
        let mut lp = face.clone();
        lp.objective = vec![Rational::zero(); n];
        lp.objective[i] = rational::int(sign);
        let r = lp_maximize(&lp)?;
        Ok((r.witness[i].clone(), r.witness))
    };

    for i in 0..n {
        let (max, at_max) = extreme(i, 1)?;
        let (min, at_min) = extreme(i, -1)?;
        if min != max {
            return Ok(Uniqueness::Multiple {
                vertex: i,
                min,
                max,
                at_min,
                at_max,
            });
        }
    }
    Ok(Uniqueness::Unique {
        weights: packing.weights,
    })
}

/// Trial-division test for `n = p²` with `p` prime.
pub fn is_prime_square(n: usize) -> bool {
    let root = (n as f64).sqrt().round() as usize;
    if root * root != n || root < 2 {
        return false;
    }
    (2..root)
        .take_while(|d| d * d <= root)
        .all(|d| !root.is_multiple_of(d))
}

/// Conditions under which exclusivity on two copies reaches the quantum bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Result2Report {
    pub order: usize,
    pub self_complementary: bool,
    pub vertex_transitive: bool,
    pub order_is_prime_square: bool,
    pub alpha: usize,
    pub theta: f64,
    pub sqrt_order: f64,
    pub alpha_below_theta: bool,
    pub theta_matches_sqrt: bool,
    pub copy_bound: CopyBound,
    pub copy_bound_matches_sqrt: bool,
    /// False when a clique search ran out of budget.
    pub exact: bool,
}

impl Result2Report {
    pub fn passes(&self) -> bool {
        self.exact
            && self.self_complementary
            && self.vertex_transitive
            && !self.order_is_prime_square
            && self.alpha_below_theta
            && self.theta_matches_sqrt
            && self.copy_bound_matches_sqrt
    }
}

pub fn result2_check(g: &Graph, cfg: &Config) -> Result<Result2Report> {
    let n = g.order();
    let self_complementary = is_self_complementary(g, cfg.iso_cap)?;
    let vertex_transitive = is_vertex_transitive(g, cfg.iso_cap)?.vertex_transitive;
    let alpha = independence_number(g, cfg);
    let theta = theta(g, cfg)?.value;
    let sqrt_order = (n as f64).sqrt();
    let copy_bound = ge_copy_bound(g, 2, cfg)?;
    Ok(Result2Report {
        order: n,
        self_complementary,
        vertex_transitive,
        order_is_prime_square: is_prime_square(n),
        alpha: alpha.size,
        theta,
        sqrt_order,
        alpha_below_theta: (alpha.size as f64) < theta - cfg.tol,
        theta_matches_sqrt: cfg.close(theta, sqrt_order),
        copy_bound_matches_sqrt: cfg.close(copy_bound.bound, sqrt_order),
        exact: alpha.is_exact() && copy_bound.status == SearchStatus::ProvenExact,
        copy_bound,
    })
}

/// Self-complementary circulants on `n` vertices, grouped by isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CirculantClass {
    /// Lexicographically smallest step set in the class.
    pub representative: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl CirculantClass {
    pub fn contains(&self, steps: &[usize]) -> bool {
        let mut s = steps.to_vec();
        s.sort_unstable();
        self.members.contains(&s)
    }
}

pub const SCVT_MAX_ORDER: usize = 20;

pub fn enumerate_scvt_circulants(n: usize, cfg: &Config) -> Result<Vec<CirculantClass>> {
    if n == 0 || n > SCVT_MAX_ORDER {
        return Err(Error::input(format!(
            "circulant enumeration supports 1 <= n <= {SCVT_MAX_ORDER}, got {n}"
        )));
    }
    let half = n / 2;
    let mut step_sets: Vec<Vec<usize>> = (0u32..1 << half)
        .map(|mask| (1..=half).filter(|s| mask >> (s - 1) & 1 == 1).collect())
        .collect();
    step_sets.sort();

    let mut classes: Vec<(Graph, CirculantClass)> = Vec::new();
    for steps in step_sets {
        let g = make_circulant(n, &steps)?;
        if 4 * g.edge_count() != n * (n - 1) || !is_self_complementary(&g, cfg.iso_cap)? {
            continue;
        }
        let mut placed = false;
        for (rep, class) in classes.iter_mut() {
            if crate::graph::is_isomorphic(&g, rep, cfg.iso_cap)?.is_some() {
                class.members.push(steps.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((
                g,
                CirculantClass {
                    representative: steps.clone(),
                    members: vec![steps],
                },
            ));
        }
    }
    Ok(classes.into_iter().map(|(_, c)| c).collect())
}

/// `ω(G) = α(Ḡ)` evaluated both ways.
pub fn clique_independence_duality(g: &Graph, cfg: &Config) -> (usize, usize) {
    (
        clique_number(g, cfg).size,
        independence_number(&complement(g), cfg).size,
    )
}
