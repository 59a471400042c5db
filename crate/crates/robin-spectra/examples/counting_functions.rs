//! Exact eigenvalue counting against the lattice-point upper bound.
//!
//! ```bash
//! cargo run --release --example counting_functions
//! ```

use robin_spectra::bounds::counting_upper_bound;
use robin_spectra::{rect_counting, BoundaryParam, RectSpec};
use std::f64::consts::PI;

fn main() -> robin_spectra::Result<()> {
    let rect = RectSpec::new(1.0, 2.0)?;

    println!("area 1, aspect 2 rectangle: exact count vs lattice bound");
    println!("{:>10} {:>8} {:>8} {:>10}", "lambda", "alpha=1", "alpha=0", "bound");
    for m in [1.0, 2.0, 5.0, 10.0, 20.0, 50.0] {
        let lambda = m * PI * PI;
        let robin = rect_counting(rect, BoundaryParam::robin(1.0)?, lambda)?;
        let neumann = rect_counting(rect, BoundaryParam::neumann(), lambda)?;
        let bound = counting_upper_bound(rect.aspect(), rect.area(), lambda)?;
        println!("{lambda:10.3} {robin:8} {neumann:8} {bound:10.3}");
    }

    println!("\nthe bound is independent of alpha and grows with the aspect:");
    for aspect in [1.0, 2.0, 5.0, 10.0] {
        let bound = counting_upper_bound(aspect, 1.0, 40.0 * PI * PI)?;
        println!("  aspect {aspect:5.1}: bound {bound:8.2}");
    }
    Ok(())
}
