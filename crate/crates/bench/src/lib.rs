//! Criterion benchmarks for the `randcomplex` kernels; see `benches/`.
