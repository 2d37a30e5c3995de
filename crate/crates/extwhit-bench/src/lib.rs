//! Benchmark-only crate; see the `functions` bench target.
