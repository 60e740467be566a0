//! Benchmark-only crate; see `benches/kernels.rs`. Problem fixtures live here
//! so the bench target stays small.

use fano_core::{FanoProblem, MultiDegree};

/// The heaviest rows of the built-in tables, the cases worth tracking.
pub fn heavy_problems() -> Vec<FanoProblem> {
    [(2u32, 5u32, 9u32), (3, 3, 9), (4, 3, 11)]
        .into_iter()
        .map(|(r, d, n)| {
            FanoProblem::new(n, MultiDegree::single(d).unwrap(), r).unwrap()
        })
        .collect()
}
