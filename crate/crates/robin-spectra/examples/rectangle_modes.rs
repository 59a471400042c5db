//! Rectangle spectra by separation of variables: (i,j) mode provenance,
//! degeneracies on the square, and the best-first enumeration.
//!
//! ```bash
//! cargo run --release --example rectangle_modes
//! ```

use robin_spectra::{is_k1_mode, rect_eigenvalue, BoundaryParam, RectSpec, RectSpectrum};

fn main() -> robin_spectra::Result<()> {
    let bc = BoundaryParam::robin(1.0)?;

    println!("unit square, alpha = 1 (note the (1,2)/(2,1) degeneracy):");
    let square = RectSpec::square(1.0)?;
    let mut spectrum = RectSpectrum::new(square, bc)?;
    for k in 1..=6 {
        let e = spectrum.eigenvalue(k)?;
        println!("  lambda_{k} = {v:10.6}  mode ({i},{j})", v = e.value, i = e.mode.i, j = e.mode.j);
    }

    println!("\naspect 3 rectangle of area 1 (long thin: (k,1) modes dominate):");
    let thin = RectSpec::new(1.0, 3.0)?;
    let mut spectrum = RectSpectrum::new(thin, bc)?;
    for k in 1..=6 {
        let e = spectrum.eigenvalue(k)?;
        println!("  lambda_{k} = {v:10.6}  mode ({i},{j})", v = e.value, i = e.mode.i, j = e.mode.j);
    }

    println!("\n(k,1)-mode detection at the guaranteed aspect sqrt(k):");
    for k in [4usize, 9, 25] {
        let rect = RectSpec::new(1.0, (k as f64).sqrt())?;
        println!(
            "  k = {k:2}, aspect = {a:5.2}: is_k1_mode = {flag}",
            a = rect.aspect(),
            flag = is_k1_mode(rect, bc, k)?
        );
    }
    let square4 = rect_eigenvalue(square, bc, 4)?;
    println!(
        "  counterexample: the square's lambda_4 is the ({},{}) mode",
        square4.mode.i, square4.mode.j
    );
    Ok(())
}
