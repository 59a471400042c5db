//! Robin Laplacian spectra on intervals, rectangles and disjoint unions
//! of rectangles, and eigenvalue-minimizing domain search over those
//! families.
//!
//! The crate computes exact interval eigenvalues by bracketed bisection
//! on the transcendental secular equations, assembles rectangle and union
//! spectra by separation of variables, minimizes the k-th eigenvalue over
//! aspect ratios and over Wolf–Keller splits, solves the 3-to-1 square
//! transition system, and evaluates a catalogue of closed-form two-sided
//! bounds and series expansions. A verification harness re-checks the
//! computable content of each headline inequality at desk scale and
//! writes machine-readable CSV/JSON reports.
//!
//! The `examples/` directory is the guided tour, with one runnable example
//! per capability:
//!
//! ```bash
//! cargo run --release --example interval_eigenvalues
//! cargo run --release --example rectangle_modes
//! cargo run --release --example counting_functions
//! cargo run --release --example appendix_bounds
//! cargo run --release --example optimize_rectangle
//! cargo run --release --example optimize_union
//! cargo run --release --example transition_curve
//! cargo run --release --example verification_suites
//! ```
//!
//! The same functionality is scriptable through the thin `robin-spectra`
//! binary (`eig`, `optimize`, `transition`, `count`, `sum`, `verify`,
//! `bounds`).

pub mod bounds;
pub mod cache;
pub mod cli;
pub mod error;
pub mod interval;
pub mod optimize;
pub mod roots;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use interval::{
    interval_count_below, interval_eigenvalue, interval_eigenvalue_with_tol, interval_residual,
    BoundaryParam, IntervalSpec,
};
pub use spectrum::{
    equal_squares_eigenvalue, is_k1_mode, mode_eigenvalue, rect_counting, rect_eigenvalue,
    union_eigenvalue, ModeEigen, ModeIndex, RectSpec, RectSpectrum, UnionEigen, UnionSpec,
    UnionSpectrum,
};
