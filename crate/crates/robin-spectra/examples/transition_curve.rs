//! The 3-to-1 transition curve alpha = C·sqrt(k/A): solving the
//! dimensionless system and watching the tie flip on either side.
//!
//! ```bash
//! cargo run --release --example transition_curve
//! ```

use robin_spectra::optimize::{solve_transition, three_merge_candidate, transition_crossing_check};
use robin_spectra::{equal_squares_eigenvalue, BoundaryParam};

fn main() -> robin_spectra::Result<()> {
    let sol = solve_transition();
    println!("transition system solution:");
    println!("  c1 = {:.6}, c2 = {:.6}, c3 = {:.6}", sol.c1, sol.c2, sol.c3);
    println!("  curve constant C = {:.6}  (alpha = C·sqrt(k/A))", sol.curve_constant);
    println!("  residuals {:?}", sol.residuals);

    let check = transition_crossing_check(12, 1.0)?;
    println!("\ntie identity at k = 12 on the curve (alpha = {:.4}):", check.alpha);
    println!("  lambda_1(square A/k)   = {:.8}", check.lambda1_small_square);
    println!("  lambda_2(square 3A/k)  = {:.8}", check.lambda2_large_square);
    println!("  lambda_3(square 3A/k)  = {:.8}", check.lambda3_large_square);
    println!("  mismatch {:.2e}, degeneracy {:.2e}", check.mismatch, check.degeneracy);

    println!("\nthe equalized 3-merge candidate against k equal squares (k = 12):");
    for factor in [0.95, 1.0, 1.05] {
        let alpha = factor * sol.curve_constant * 12f64.sqrt();
        let bc = BoundaryParam::robin(alpha)?;
        let (_, candidate) = three_merge_candidate(12, 1.0, bc)?;
        let squares = equal_squares_eigenvalue(12, 1.0, bc)?;
        let verdict = if candidate < squares {
            "merge wins"
        } else if candidate > squares {
            "squares win"
        } else {
            "tie"
        };
        println!(
            "  {factor:4.2}·C: candidate {candidate:12.6} vs squares {squares:12.6}  ({verdict})"
        );
    }
    Ok(())
}
