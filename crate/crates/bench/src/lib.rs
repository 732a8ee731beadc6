//! Benchmark fixtures shared by the criterion targets.

use secdom::generate;
use secdom::Graph;

/// Graphs the solver benchmarks run on, with a short name for each.
pub fn solver_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("path_16", generate::path(16)),
        ("cycle_14", generate::cycle(14)),
        ("grid_4x4", generate::grid(4, 4)),
        ("wheel_10", generate::wheel(10)),
    ]
}
