//! Benchmark crate; see the `benches` directory.
