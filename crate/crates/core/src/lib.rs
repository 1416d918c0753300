//! Bounds of noncontextuality scenarios from their exclusivity graphs.

pub mod config;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod rational;
pub mod scenario;
pub mod solvers;
pub mod verify;

pub use config::Config;
pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
