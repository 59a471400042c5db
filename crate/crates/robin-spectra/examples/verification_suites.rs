//! Running the verification suites programmatically and writing the
//! CSV/JSON reports.
//!
//! ```bash
//! cargo run --release --example verification_suites
//! ```

use robin_spectra::verify::{report_to_csv, run_suite, SuiteConfig, SUITE_NAMES};

fn main() -> robin_spectra::Result<()> {
    println!("available suites: {}", SUITE_NAMES.join(", "));

    // a fast tour: small sample counts, fixed seed
    for suite in ["transition", "counting", "isoperimetric"] {
        let config = SuiteConfig { seed: 0, samples: Some(100), ..Default::default() };
        let report = run_suite(suite, &config)?;
        println!(
            "\nsuite {suite}: {} passed, {} failed in {:.1} ms",
            report.passed, report.failed, report.wall_ms
        );
        for row in report.rows.iter().take(4) {
            println!(
                "  {case}: expected {e:.6}, observed {o:.6} [{m} tol {t:.1e}] pass={p}",
                case = row.case,
                e = row.expected,
                o = row.observed,
                m = row.mode,
                t = row.tolerance,
                p = row.pass
            );
        }
        if report.rows.len() > 4 {
            println!("  ... {} more rows", report.rows.len() - 4);
        }
    }

    let report = run_suite("transition", &SuiteConfig::default())?;
    let path = std::env::temp_dir().join("robin-spectra-transition.csv");
    std::fs::write(&path, report_to_csv(&report)?)?;
    println!("\nwrote {}", path.display());
    Ok(())
}
