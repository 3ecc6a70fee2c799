//! Criterion benchmarks for `vdw-core`; see `benches/`.
