//! Benchmarks for `laman-core`; run with `cargo bench -p laman-bench`.
