//! Criterion benchmarks for the `hyperladder` engine live in `benches/`.
