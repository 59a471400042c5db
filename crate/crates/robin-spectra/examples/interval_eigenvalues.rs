//! Interval Robin eigenvalues: the transcendental solver, the
//! Neumann/Dirichlet sandwich, and the homothetic scaling law.
//!
//! ```bash
//! cargo run --release --example interval_eigenvalues
//! ```

use robin_spectra::{interval_count_below, interval_eigenvalue, BoundaryParam, IntervalSpec};
use std::f64::consts::PI;

fn main() -> robin_spectra::Result<()> {
    let unit = IntervalSpec::new(1.0)?;

    println!("first eigenvalues of the unit interval, alpha = 1:");
    let bc = BoundaryParam::robin(1.0)?;
    for k in 1..=6 {
        let lambda = interval_eigenvalue(unit, bc, k)?;
        let neumann = (PI * (k - 1) as f64).powi(2);
        let dirichlet = (PI * k as f64).powi(2);
        println!("  lambda_{k} = {lambda:12.6}   (Neumann {neumann:9.4} < . < Dirichlet {dirichlet:9.4})");
    }

    println!("\nthe boundary parameter interpolates Neumann to Dirichlet:");
    for alpha in [0.0, 0.1, 1.0, 10.0, 100.0] {
        let lambda = interval_eigenvalue(unit, BoundaryParam::robin(alpha)?, 1)?;
        println!("  alpha = {alpha:6.1}: lambda_1 = {lambda:10.6}");
    }
    let dirichlet = interval_eigenvalue(unit, BoundaryParam::Dirichlet, 1)?;
    println!("  dirichlet:      lambda_1 = {dirichlet:10.6}  (= pi^2)");

    println!("\nhomothetic scaling lambda_k(I_a, alpha) = t^2 lambda_k(I_ta, alpha/t):");
    let (a, alpha, k, t) = (2.0, 1.0, 3, 0.5);
    let lhs = interval_eigenvalue(IntervalSpec::new(a)?, BoundaryParam::robin(alpha)?, k)?;
    let rhs = t * t
        * interval_eigenvalue(IntervalSpec::new(t * a)?, BoundaryParam::robin(alpha / t)?, k)?;
    println!("  lhs = {lhs:.12}, rhs = {rhs:.12}, rel diff = {:.2e}", (lhs - rhs).abs() / lhs);

    println!("\ncounting below a threshold (closed-form sandwich + one root check):");
    for lambda in [1.7, 1.71, 50.0, 500.0] {
        let n = interval_count_below(unit, bc, lambda)?;
        println!("  #eigenvalues <= {lambda:7.2}: {n}");
    }
    Ok(())
}
