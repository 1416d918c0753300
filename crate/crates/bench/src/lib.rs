//! Criterion benchmarks for the solver backends; see `benches/`.
