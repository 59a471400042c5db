//! Eigenvalue minimization over rectangles and disjoint unions of
//! rectangles, the 3-to-1 transition system, and convergence/sum probes.

mod probes;
mod rect;
mod transition;
mod union;

pub use probes::{
    dirichlet_convergence_probe, optimal_sum_probe, optimal_sum_probe_with, DirichletProbe,
    DirichletProbeRow, SumProbe,
};
pub use rect::{optimize_rectangle, optimize_rectangle_with, RectOptConfig, RectOptResult};
pub use transition::{
    solve_transition, three_merge_candidate, transition_crossing_check, CrossingCheck,
    TransitionSolution,
};
pub use union::{
    equal_squares_optimality_check, optimize_union, optimize_union_with, EqualSquaresCheck,
    SplitTree, UnionOptConfig, UnionOptResult,
};
