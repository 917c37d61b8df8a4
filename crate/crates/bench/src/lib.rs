//! Benchmarks for the bqkz engine live in `benches/`.
