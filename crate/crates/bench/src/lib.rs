//! Shared fixtures for the criterion benchmarks.

pub use lexlift;

use lexlift::{Label, PointConfiguration};

/// Points on the moment curve t ↦ (t, t², …) for t = 1..=n, labeled in
/// curve order. Exact, in general and convex position, so every benchmark
/// input is valid without per-run checks.
pub fn moment_curve(dim: usize, n: usize) -> PointConfiguration {
    let rows: Vec<Vec<i64>> = (1..=n as i64)
        .map(|t| (1..=dim as u32).map(|e| t.pow(e)).collect())
        .collect();
    let refs: Vec<(Label, &[i64])> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| (i as Label + 1, row.as_slice()))
        .collect();
    PointConfiguration::from_int_rows(dim, &refs).expect("curve labels are distinct")
}
