//! Benchmarks for `tuenter-core` live under `benches/`.
