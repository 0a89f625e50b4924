//! Criterion benchmarks for schurweyl-core live under `benches/`.
