//! Criterion benchmarks for the speiser workspace; see `benches/`.
