//! Benchmark-only package; see `benches/classification.rs`.
