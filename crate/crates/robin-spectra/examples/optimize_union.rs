//! Minimizing over disjoint unions of rectangles: the equalized-split
//! principle. In the small-alpha regime the optimizer is k equal squares;
//! past the transition it merges components.
//!
//! ```bash
//! cargo run --release --example optimize_union
//! ```

use robin_spectra::optimize::{optimize_union, SplitTree};
use robin_spectra::{equal_squares_eigenvalue, BoundaryParam};

fn print_tree(tree: &SplitTree, indent: usize) {
    let pad = "  ".repeat(indent);
    match tree {
        SplitTree::Leaf { rect, count } => println!(
            "{pad}leaf: {count} eigenvalue(s) from area {a:.5}, aspect {s:.4}",
            a = rect.area(),
            s = rect.aspect()
        ),
        SplitTree::Node { fraction, left, right } => {
            println!("{pad}split: left share {fraction:.5}");
            print_tree(left, indent + 1);
            print_tree(right, indent + 1);
        }
    }
}

fn main() -> robin_spectra::Result<()> {
    println!("k = 5, alpha = 0.5 (inside the equal-squares regime):");
    let r = optimize_union(5, 1.0, BoundaryParam::robin(0.5)?)?;
    print_tree(&r.tree, 1);
    let squares = equal_squares_eigenvalue(5, 1.0, BoundaryParam::robin(0.5)?)?;
    println!("  value {v:.8} vs five equal squares {squares:.8}", v = r.value);

    println!("\nk = 3, alpha = 50 (far above the transition):");
    let r = optimize_union(3, 1.0, BoundaryParam::robin(50.0)?)?;
    print_tree(&r.tree, 1);
    let squares = equal_squares_eigenvalue(3, 1.0, BoundaryParam::robin(50.0)?)?;
    println!("  value {v:.6} beats three equal squares {squares:.6}", v = r.value);

    println!("\nk = 6 just above the transition curve (alpha = 1.05·C·sqrt(6)):");
    let sol = robin_spectra::optimize::solve_transition();
    let alpha = 1.05 * sol.curve_constant * 6f64.sqrt();
    let r = optimize_union(6, 1.0, BoundaryParam::robin(alpha)?)?;
    print_tree(&r.tree, 1);
    let squares = equal_squares_eigenvalue(6, 1.0, BoundaryParam::robin(alpha)?)?;
    println!("  value {v:.6} vs six equal squares {squares:.6}", v = r.value);
    Ok(())
}
