//! Criterion benchmarks for hankel-core; see benches/.
