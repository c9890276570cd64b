//! Benchmark crate; see benches/invariants.rs.
