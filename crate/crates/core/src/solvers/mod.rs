//! Exact combinatorial and numerical backends.

mod clique;
mod lp;
mod sdp;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use clique::{
    enumerate_maximal_cliques, max_clique, max_independent_set, CliqueResult,
    DEFAULT_MAXIMAL_CLIQUE_CAP,
};
pub use lp::{lp_maximize, Constraint, LinearProgram, LpResult, Relation};
pub use sdp::{sdp_theta, SdpOptions, ThetaCertificate};

/// Whether a search result is proven optimal or only a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    ProvenExact,
    LowerBoundOnly,
}

/// Wall-clock allowance for one solver invocation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub const DEFAULT_SECONDS: u64 = 60;

    pub fn seconds(secs: u64) -> Self {
        Self {
            time_limit: Some(Duration::from_secs(secs)),
        }
    }

    pub fn unlimited() -> Self {
        Self { time_limit: None }
    }

    pub(crate) fn deadline(&self) -> Option<Instant> {
        self.time_limit.map(|d| Instant::now() + d)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::seconds(Self::DEFAULT_SECONDS)
    }
}
