use crate::graph::{DEFAULT_ISO_CAP, DEFAULT_PRODUCT_CAP};
use crate::solvers::{Budget, SdpOptions, DEFAULT_MAXIMAL_CLIQUE_CAP};

/// Tolerances, budgets and size caps shared by invariants and verifiers.
#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    /// SDP objective tolerance.
    pub tol: f64,
    /// Tolerance on orthogonal-representation residuals.
    pub cert_tol: f64,
    /// Relative tolerance for comparisons against closed-form constants.
    pub rel_tol: f64,
    pub budget: Budget,
    pub product_cap: usize,
    pub iso_cap: usize,
    pub clique_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            tol: 1e-7,
            cert_tol: 1e-6,
            rel_tol: 1e-6,
            budget: Budget::default(),
            product_cap: DEFAULT_PRODUCT_CAP,
            iso_cap: DEFAULT_ISO_CAP,
            clique_cap: DEFAULT_MAXIMAL_CLIQUE_CAP,
        }
    }
}

impl Config {
    pub fn sdp(&self) -> SdpOptions {
        SdpOptions {
            tol: self.tol,
            ..SdpOptions::default()
        }
    }

    /// `|computed - expected| <= rel_tol · max(1, |expected|)`.
    pub fn close(&self, computed: f64, expected: f64) -> bool {
        (computed - expected).abs() <= self.rel_tol * expected.abs().max(1.0)
    }
}
