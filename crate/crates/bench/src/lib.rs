//! Shared inputs for the benchmarks.

use podium_core::partitions::{gf_series, FunctionId};
use podium_core::Series;

/// Orders used across the benchmark groups.
pub const ORDERS: [usize; 3] = [100, 300, 1000];

/// Two dense series with multi-word coefficients at larger orders.
pub fn dense_pair(order: usize) -> (Series, Series) {
    (
        gf_series(FunctionId::P, order),
        gf_series(FunctionId::Cubic, order),
    )
}
