//! Benchmarks for the normalizer live in `benches/`.
