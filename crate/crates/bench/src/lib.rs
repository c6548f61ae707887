//! Benchmarks for gridfree-core live in `benches/`; run `cargo bench -p gridfree-bench`.
