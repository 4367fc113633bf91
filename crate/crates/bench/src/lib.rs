//! Benchmarks live in `benches/`; run them with `cargo bench -p pfun-bench`.
//!
//! The shared inputs below keep the kernel and suite benchmarks on the same
//! parameter values.

use pfun_core::PParam;

/// Exponents used throughout the benchmarks.
pub const P_VALUES: [f64; 4] = [1.5, 2.0, 3.0, 10.0];

pub fn params() -> Vec<PParam> {
    P_VALUES
        .iter()
        .map(|&p| PParam::new(p).expect("benchmark p > 1"))
        .collect()
}
