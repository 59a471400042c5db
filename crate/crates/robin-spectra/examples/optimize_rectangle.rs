//! Minimizing the k-th eigenvalue over rectangles of fixed area: the
//! optimal aspect grows like k^{2/3} and the optimal value like
//! 3(pi·alpha/A)^{2/3}·k^{2/3}.
//!
//! ```bash
//! cargo run --release --example optimize_rectangle
//! ```

use robin_spectra::optimize::optimize_rectangle;
use robin_spectra::BoundaryParam;
use std::f64::consts::PI;

fn main() -> robin_spectra::Result<()> {
    let bc = BoundaryParam::robin(1.0)?;

    println!("optimal rectangles for the k-th eigenvalue (A = 1, alpha = 1):");
    println!("{:>7} {:>12} {:>12} {:>8} {:>12}", "k", "aspect*", "value", "mode", "value/k^2/3");
    for k in [1usize, 2, 5, 10, 100, 1000, 10_000] {
        let r = optimize_rectangle(k, 1.0, bc)?;
        println!(
            "{k:7} {a:12.4} {v:12.4} ({i:3},{j:1}) {n:12.5}",
            a = r.aspect_star,
            v = r.value,
            i = r.mode.i,
            j = r.mode.j,
            n = r.value / (k as f64).powf(2.0 / 3.0)
        );
    }
    println!("asymptotic constant 3·pi^(2/3) = {:.5}", 3.0 * PI.powf(2.0 / 3.0));

    println!("\nthe first eigenvalue is minimized by the square for any alpha:");
    for alpha in [0.1, 1.0, 10.0] {
        let r = optimize_rectangle(1, 1.0, BoundaryParam::robin(alpha)?)?;
        println!("  alpha = {alpha:5.1}: aspect* = {:.6}, value = {:.6}", r.aspect_star, r.value);
    }

    let d = optimize_rectangle(4, 1.0, BoundaryParam::Dirichlet)?;
    println!("\nDirichlet limit, k = 4: aspect* = {:.4}, value = {:.4}", d.aspect_star, d.value);
    Ok(())
}
