//! Criterion benchmarks for the sorting programs and obligation runs; see
//! `benches/sorting.rs`.
