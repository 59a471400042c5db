//! The closed-form catalogue: two-sided eigenvalue bounds, small-length
//! and large-alpha series, tangent envelope, thresholds and envelope
//! constants, each shown against the exact solver.
//!
//! ```bash
//! cargo run --release --example appendix_bounds
//! ```

use robin_spectra::bounds::*;
use robin_spectra::{interval_eigenvalue, BoundaryParam, IntervalSpec};

fn main() -> robin_spectra::Result<()> {
    let (a, alpha) = (1.0, 1.0);
    let iv = IntervalSpec::new(a)?;
    let bc = BoundaryParam::robin(alpha)?;

    let l1 = interval_eigenvalue(iv, bc, 1)?;
    let b1 = eig1_bounds(a, alpha)?;
    println!("first eigenvalue, a = alpha = 1:");
    println!("  {:.6} <= {l1:.6} <= {:.6}   (simple upper 2a/alpha = {:.3})",
        b1.lower, b1.upper, eig1_upper_simple(a, alpha)?);

    let l2 = interval_eigenvalue(iv, bc, 2)?;
    let b2 = eig2_bounds(a, alpha)?;
    println!("second eigenvalue:");
    println!("  {:.6} <= {l2:.6} <= {:.6}", b2.lower, b2.upper);

    println!("\nsmall-length series vs exact (alpha = 1):");
    for a in [0.1, 0.01, 0.001] {
        let exact = interval_eigenvalue(IntervalSpec::new(a)?, bc, 1)?;
        let s = eig1_series_small_a(a, alpha, 4)?;
        println!("  a = {a:6}: series(4) = {v:14.6}, exact = {exact:14.6}, diff = {d:+.3e}",
            v = s.value, d = s.value - exact);
    }

    println!("\nlarge-alpha series vs exact (a = 1):");
    for alpha in [10.0, 100.0, 1000.0] {
        let exact = interval_eigenvalue(iv, BoundaryParam::robin(alpha)?, 1)?;
        let s = eig1_series_large_alpha(1.0, alpha, 4)?;
        println!("  alpha = {alpha:6}: series(4) = {v:10.6}, exact = {exact:10.6}, diff = {d:+.3e}",
            v = s.value, d = s.value - exact);
    }

    let t = tan_envelope(std::f64::consts::PI / 4.0)?;
    println!("\ntangent envelope at pi/4: {:.6} <= tan = 1 <= {:.6}", t.lower, t.upper);

    let th = thresholds(9, 1.0)?;
    println!("\nthresholds at k = 9, A = 1:");
    println!("  alpha_sufficient = {:.4} (squares regime), k* ~ {:.3}·A·alpha^2, C3 = {:.5}",
        th.alpha_sufficient, th.k_star_coeff, th.rect_c3);

    let e = envelope_constants(2)?;
    println!("\nplanar envelope constants: upper regime {:.5}, lower regime {:.5}",
        e.upper_regime, e.lower_regime);

    let u = union_squares_bounds(4, 4.0, 1.0)?;
    println!("\nk equal squares (k=4, A=4, alpha=1): {:.5} <= value <= {:.5}", u.lower, u.upper);
    Ok(())
}
