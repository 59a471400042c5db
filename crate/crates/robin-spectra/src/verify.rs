//! Named verification suites with machine-readable reports.
//!
//! Each suite re-checks the computable content of one headline result at
//! desk scale and emits one row per case: `(suite, case, expected,
//! observed, tolerance, mode, pass)`. Randomized grids draw from a seeded
//! 64-bit generator recorded in the report header, rows are sorted by
//! case key, and reports are reproducible bit-for-bit for a fixed
//! `(suite, config, seed)`.
//!
//! Default configurations finish in well under five minutes each, except
//! `union-12` and `sums`, whose union-search depth is capped by
//! `SuiteConfig::max_k` (defaults 25 and 30).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;
use std::time::Instant;

use crate::bounds;
use crate::error::{usage, Result};
use crate::interval::{interval_eigenvalue, BoundaryParam, IntervalSpec};
use crate::optimize::{
    equal_squares_optimality_check, optimal_sum_probe_with, optimize_rectangle, optimize_union,
    solve_transition, three_merge_candidate, transition_crossing_check, UnionOptConfig,
};
use crate::spectrum::{
    equal_squares_eigenvalue, is_k1_mode, rect_counting, rect_eigenvalue, RectSpec,
};

pub const SUITE_NAMES: [&str; 10] = [
    "appendix-bounds",
    "isoperimetric",
    "k1-mode",
    "counting",
    "k-squares",
    "transition",
    "rectangles-23",
    "union-12",
    "dirichlet-limit",
    "sums",
];

/// How a row's tolerance is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TolMode {
    Abs,
    Rel,
}

impl std::fmt::Display for TolMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TolMode::Abs => write!(f, "abs"),
            TolMode::Rel => write!(f, "rel"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteRow {
    pub case: String,
    pub expected: f64,
    pub observed: f64,
    pub tolerance: f64,
    pub mode: TolMode,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub wall_ms: f64,
    pub rows: Vec<SuiteRow>,
}

/// Suite knobs with documented defaults; `None` means the suite default.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Sample count for randomized suites (default 10_000 rows for
    /// `appendix-bounds`, 500 for `counting`).
    pub samples: Option<usize>,
    /// Depth cap for suites that run union searches
    /// (default 20 for `k-squares`, 25 for `union-12`, 30 for `sums`).
    pub max_k: Option<usize>,
    /// Boundary parameters for grid suites (default {0.1, 1, 10}).
    pub alphas: Option<Vec<f64>>,
    /// Cap for the heavy rectangle-asymptotics run (default 100_000).
    pub big_k: Option<usize>,
}

struct Collector {
    rows: Vec<SuiteRow>,
}

impl Collector {
    fn new() -> Self {
        Collector { rows: Vec::new() }
    }

    fn push(&mut self, case: String, expected: f64, observed: f64, tolerance: f64, mode: TolMode) {
        let pass = match mode {
            TolMode::Abs => (observed - expected).abs() <= tolerance,
            TolMode::Rel => (observed - expected).abs() <= tolerance * expected.abs(),
        };
        self.rows.push(SuiteRow { case, expected, observed, tolerance, mode, pass });
    }

    /// A one-sided check encoded as a violation row: `observed` is the
    /// clamped violation amount and must vanish to tolerance.
    fn violation(&mut self, case: String, violation: f64, tolerance: f64) {
        self.push(case, 0.0, violation.max(0.0), tolerance, TolMode::Abs);
    }

    /// A boolean check: observed 1.0 must equal expected 1.0.
    fn flag(&mut self, case: String, ok: bool) {
        self.push(case, 1.0, if ok { 1.0 } else { 0.0 }, 0.5, TolMode::Abs);
    }

    fn finish(mut self, suite: &str, seed: u64, started: Instant) -> SuiteReport {
        self.rows.sort_by(|a, b| a.case.cmp(&b.case));
        let passed = self.rows.iter().filter(|r| r.pass).count();
        let failed = self.rows.len() - passed;
        SuiteReport {
            suite: suite.to_string(),
            seed,
            passed,
            failed,
            wall_ms: started.elapsed().as_secs_f64() * 1e3,
            rows: self.rows,
        }
    }
}

/// Runs one named suite. Unknown names are usage errors.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteReport> {
    let started = Instant::now();
    let mut rows = Collector::new();
    match name {
        "appendix-bounds" => suite_appendix_bounds(config, &mut rows)?,
        "isoperimetric" => suite_isoperimetric(config, &mut rows)?,
        "k1-mode" => suite_k1_mode(config, &mut rows)?,
        "counting" => suite_counting(config, &mut rows)?,
        "k-squares" => suite_k_squares(config, &mut rows)?,
        "transition" => suite_transition(config, &mut rows)?,
        "rectangles-23" => suite_rectangles_23(config, &mut rows)?,
        "union-12" => suite_union_12(config, &mut rows)?,
        "dirichlet-limit" => suite_dirichlet_limit(config, &mut rows)?,
        "sums" => suite_sums(config, &mut rows)?,
        other => {
            return Err(usage(format!(
                "unknown suite `{other}`; valid names: {}",
                SUITE_NAMES.join(", ")
            )))
        }
    }
    Ok(rows.finish(name, config.seed, started))
}

fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.gen::<f64>() * (hi / lo).ln()).exp() * lo
}

fn default_alphas(config: &SuiteConfig) -> Vec<f64> {
    config.alphas.clone().unwrap_or_else(|| vec![0.1, 1.0, 10.0])
}

/// Sandwich checks for the first- and second-eigenvalue bounds and the
/// union-of-equal-squares bounds, plus the tangent envelope.
fn suite_appendix_bounds(config: &SuiteConfig, rows: &mut Collector) -> Result<()> {
    let total = config.samples.unwrap_or(10_000);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n_tan = total / 10;
    let n_eig = (total - n_tan) / 3;
    let n_sq = total - n_tan - 2 * n_eig;

    for idx in 0..n_eig {
        let a = log_uniform(&mut rng, 0.01, 100.0);
        let alpha = log_uniform(&mut rng, 0.01, 100.0);
        let l1 = interval_eigenvalue(IntervalSpec::new(a)?, BoundaryParam::Robin(alpha), 1)?;
        let b = bounds::eig1_bounds(a, alpha)?;
        let violation = (b.lower - l1).max(l1 - b.upper);
        rows.violation(format!("eig1[{idx:05}]"), violation, 1e-10 * l1);
    }
    for idx in 0..n_eig {
        let a = log_uniform(&mut rng, 0.01, 100.0);
        let alpha = log_uniform(&mut rng, 0.01, 100.0);
        let l2 = interval_eigenvalue(IntervalSpec::new(a)?, BoundaryParam::Robin(alpha), 2)?;
        let b = bounds::eig2_bounds(a, alpha)?;
        let violation = (b.lower - l2).max(l2 - b.upper);
        rows.violation(format!("eig2[{idx:05}]"), violation, 1e-10 * l2);
    }
    for idx in 0..n_sq {
        let area = log_uniform(&mut rng, 0.01, 100.0);
        let alpha = log_uniform(&mut rng, 0.01, 100.0);
        let k = rng.gen_range(1..=400);
        let v = equal_squares_eigenvalue(k, area, BoundaryParam::Robin(alpha))?;
        let b = bounds::union_squares_bounds(k, area, alpha)?;
        let violation = (b.lower - v).max(v - b.upper);
        rows.violation(format!("squares[{idx:05}]"), violation, 1e-10 * v);
    }
    for idx in 0..n_tan {
        let x = rng.gen::<f64>() * (PI / 2.0 - 2e-6) + 1e-6;
        let b = bounds::tan_envelope(x)?;
        let t = x.tan();
        let violation = (b.lower - t).max(t - b.upper);
        rows.violation(format!("tan[{idx:05}]"), violation, 1e-10 * t.abs().max(1.0));
    }
    Ok(())
}

/// λ₁ is minimized by the square over an aspect grid, strictly elsewhere;
/// λ₂ is minimized by two equal squares.
fn suite_isoperimetric(config: &SuiteConfig, rows: &mut Collector) -> Result<()> {
    let alphas = default_alphas(config);
    let grid = config.samples.unwrap_or(64);
    for &alpha in &alphas {
        let bc = BoundaryParam::robin(alpha)?;
        let square = rect_eigenvalue(RectSpec::square(1.0)?, bc, 1)?.value;
        let mut argmin = 0usize;
        let mut best = f64::INFINITY;
        for idx in 0..grid {
            let aspect = 10f64.powf(idx as f64 / (grid - 1) as f64);
            let v = rect_eigenvalue(RectSpec::new(1.0, aspect)?, bc, 1)?.value;
            if v < best {
                best = v;
                argmin = idx;
            }
            rows.violation(
                format!("lambda1-dominates[a={alpha}][{idx:03}]"),
                square - v,
                1e-10 * square,
            );
            if idx > 0 {
                // strictness away from the square
                rows.flag(format!("lambda1-strict[a={alpha}][{idx:03}]"), v > square);
            }
        }
        rows.flag(format!("lambda1-argmin-at-square[a={alpha}]"), argmin == 0);

        let two_squares = equal_squares_eigenvalue(2, 1.0, bc)?;
        let opt = optimize_union(2, 1.0, bc)?;
        rows.push(
            format!("lambda2-two-squares[a={alpha}]"),
            two_squares,
            opt.value,
            1e-6,
            TolMode::Rel,
        );
    }
    Ok(())
}

/// The k-th eigenvalue of a long thin rectangle is its (k,1) mode from
/// aspect √k on.
fn suite_k1_mode(config: &SuiteConfig, rows: &mut Collector) -> Result<()> {
    let alphas = default_alphas(config);
    let kmax = config.max_k.unwrap_or(50);
    for &alpha in &alphas {
        let bc = BoundaryParam::robin(alpha)?;
        for k in 1..=kmax {
            for (tag, factor) in [("sqrt", 1.0), ("x1.5", 1.5)] {
                let aspect = factor * (k as f64).sqrt();
                let rect = RectSpec::new(1.0, aspect.max(1.0))?;
                rows.flag(
                    format!("k1-mode[a={alpha}][k={k:02}][{tag}]"),
                    is_k1_mode(rect, bc, k)?,
                );
            }
        }
    }
    Ok(())
}

/// Exact counting never exceeds the lattice upper bound, and matches a
/// brute-force mode enumeration on small cases.
fn suite_counting(config: &SuiteConfig, rows: &mut Collector) -> Result<()> {
    let samples = config.samples.unwrap_or(500);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for idx in 0..samples {
        let aspect = log_uniform(&mut rng, 1.0, 20.0);
        let area = log_uniform(&mut rng, 0.1, 10.0);
        let alpha = log_uniform(&mut rng, 0.01, 100.0);
        let lambda = log_uniform(&mut rng, 1.0, 400.0) * PI * PI / area;
        let rect = RectSpec::new(area, aspect)?;
        let exact = rect_counting(rect, BoundaryParam::Robin(alpha), lambda)? as f64;
        let bound = bounds::counting_upper_bound(aspect, area, lambda)?;
        rows.violation(format!("count-bound[{idx:04}]"), exact - bound, 1e-9 * bound);
    }
    // cross-check against direct mode enumeration on small spectra
    for idx in 0..40 {
        let aspect = log_uniform(&mut rng, 1.0, 4.0);
        let alpha = log_uniform(&mut rng, 0.1, 10.0);
        let rect = RectSpec::new(1.0, aspect)?;
        let bc = BoundaryParam::Robin(alpha);
        let kth = rect_eigenvalue(rect, bc, 12)?.value;
        let lambda = kth * (1.0 + 1e-9);
        let exact = rect_counting(rect, bc, lambda)?;
        let mut brute = 0usize;
        for i in 1..=40 {
            for j in 1..=40 {
                let v = crate::spectrum::mode_eigenvalue(rect, bc, crate::spectrum::ModeIndex { i, j })?;
                if v.value <= lambda {
                    brute += 1;
                }
            }
        }
        rows.push(
            format!("count-exact[{idx:04}]"),
            brute as f64,
            exact as f64,
            0.5,
            TolMode::Abs,
        );
    }
    Ok(())
}

/// In the sufficient regime α = 0.9·(π²/18)(7−2√10)√(k/A), the union
/// search returns k equal squares and the value sits strictly inside the
/// two-sided estimate.
fn suite_k_squares(config: &SuiteConfig, rows: &mut Collector) -> Result<()> {
    let kmax = config.max_k.unwrap_or(20);
    for k in 3..=kmax {
        let alpha = 0.9 * bounds::square_optimality_coeff() * (k as f64).sqrt();
        let check = equal_squares_optimality_check(k, 1.0, alpha)?;
        rows.flag(format!("sufficient[k={k:02}]"), check.sufficient_condition_met);
        rows.flag(format!("dp-agrees[k={k:02}]"), check.dp_agrees);
        let lower = 4.0 * PI * PI * k as f64 * alpha / (PI * PI * (k as f64).sqrt() + 2.0 * alpha);
        let upper = 4.0 * (k as f64).sqrt() * alpha;
        rows.flag(
            format!("strictly-inside[k={k:02}]"),
            check.union_value > lower && check.union_value <= upper,
        );
    }
    Ok(())
}

/// Transition constants against their published values, the tie identity
/// on the curve, and the strict orderings on either side of it.
fn suite_transition(_config: &SuiteConfig, rows: &mut Collector) -> Result<()> {
    let sol = solve_transition();
    rows.push("constant-c".into(), 7.58442, sol.curve_constant, 1e-4, TolMode::Abs);
    rows.push("constant-c1".into(), 1.25193, sol.c1, 1e-4, TolMode::Abs);
    rows.push("constant-c2".into(), 0.788535, sol.c2, 1e-4, TolMode::Abs);
    rows.push("constant-c3".into(), 1.58520, sol.c3, 1e-4, TolMode::Abs);
    for (idx, r) in sol.residuals.iter().enumerate() {
        rows.push(format!("residual-{idx}"), 0.0, r.abs(), 1e-9, TolMode::Abs);
    }
    rows.flag("range-c".into(), sol.curve_constant > 0.8 && sol.curve_constant < 2.5 * PI * PI);

    let crossing = transition_crossing_check(12, 1.0)?;
    rows.push(
        "crossing-identity[k=12]".into(),
        0.0,
        crossing.mismatch / crossing.lambda1_small_square,
        1e-6,
        TolMode::Abs,
    );
    rows.push(
        "crossing-degeneracy[k=12]".into(),
        0.0,
        crossing.degeneracy / crossing.lambda2_large_square,
        1e-10,
        TolMode::Abs,
    );
    for k in [6usize, 12] {
        for (tag, factor, expect_better) in
            [("above", 1.05, true), ("below", 0.95, false)]
        {
            let alpha = factor * sol.curve_constant * (k as f64).sqrt();
            let bc = BoundaryParam::robin(alpha)?;
            let (_, candidate) = three_merge_candidate(k, 1.0, bc)?;
            let squares = equal_squares_eigenvalue(k, 1.0, bc)?;
            let better = candidate < squares * (1.0 - 1e-8);
            let worse = candidate > squares * (1.0 + 1e-8);
            rows.flag(
                format!("merge-{tag}-curve[k={k:02}]"),
                if expect_better { better } else { worse },
            );
        }
    }
    Ok(())
}

/// Rectangle optimality: two-sided k^{2/3} bounds in the admissible
/// regime, the asymptotic constant 3(πα/A)^{2/3}, and the growth exponent
/// of the optimal aspect.
fn suite_rectangles_23(config: &SuiteConfig, rows: &mut Collector) -> Result<()> {
    let c3 = bounds::thresholds(3, 1.0)?.rect_c3;
    for k in [3usize, 5, 8, 13, 21, 34, 55, 89, 144, 200] {
        let alpha = 0.9 * c3 * (k as f64).sqrt();
        let r = optimize_rectangle(k, 1.0, BoundaryParam::robin(alpha)?)?;
        let lower = 3.0 * PI * PI * alpha.powf(2.0 / 3.0) * ((k - 2) as f64).powf(2.0 / 3.0)
            / (PI * PI + 2.0 * alpha).powf(2.0 / 3.0);
        let upper = 3.0 * PI.powf(2.0 / 3.0) * alpha.powf(2.0 / 3.0) * (k as f64).powf(2.0 / 3.0);
        rows.violation(format!("two-sided-lower[k={k:03}]"), lower - r.value, 1e-9 * r.value);
        rows.violation(format!("two-sided-upper[k={k:03}]"), r.value - upper, 1e-9 * r.value);
    }

    let big_k = config.big_k.unwrap_or(100_000);
    let mut aspects = Vec::new();
    let mut ks = Vec::new();
    let mut k = 100usize;
    while k <= big_k {
        let r = optimize_rectangle(k, 1.0, BoundaryParam::Robin(1.0))?;
        if k == big_k {
            rows.push(
                format!("asymptotic-constant[k={k}]"),
                3.0 * PI.powf(2.0 / 3.0),
                r.value / (k as f64).powf(2.0 / 3.0),
                0.05,
                TolMode::Rel,
            );
        }
        aspects.push(r.aspect_star.ln());
        ks.push((k as f64).ln());
        k *= 10;
    }
    let slope = fit_slope(&ks, &aspects);
    rows.push("aspect-growth-exponent".into(), 0.665, slope, 0.035, TolMode::Abs);
    Ok(())
}

/// Union optimality: the √k regime. Sandwich of the optimal value in the
/// equal-squares regime, the 4α√(k/A) asymptotic constant, the series
/// match, and the growth exponents behind the optimal-exponent claim.
fn suite_union_12(config: &SuiteConfig, rows: &mut Collector) -> Result<()> {
    let kmax = config.max_k.unwrap_or(25);
    for k in [4usize, 9, 16, 25] {
        if k > kmax {
            continue;
        }
        let alpha = 0.9 * bounds::square_optimality_coeff() * (k as f64).sqrt();
        let opt = optimize_union(k, 1.0, BoundaryParam::robin(alpha)?)?;
        let lower = 4.0 * PI * PI * k as f64 * alpha / (PI * PI * (k as f64).sqrt() + 2.0 * alpha);
        let upper = 4.0 * (k as f64).sqrt() * alpha;
        rows.flag(
            format!("sandwich[k={k:02}]"),
            opt.value > lower && opt.value <= upper,
        );
    }

    // asymptotics of the equal-squares value (the optimizer for large k)
    let v = equal_squares_eigenvalue(10_000, 1.0, BoundaryParam::Robin(1.0))?;
    rows.push("sqrt-k-constant[k=10000]".into(), 4.0, v / 100.0, 0.01, TolMode::Rel);
    let v6 = equal_squares_eigenvalue(1_000_000, 1.0, BoundaryParam::Robin(1.0))?;
    let series = bounds::optimal_union_series(1_000_000, 1.0, 1.0, 5)?.value;
    rows.push("series-match[k=1e6]".into(), v6, series, 1e-6, TolMode::Abs);

    // growth exponents: 1/2 for unions (equal squares are optimal for
    // k ≥ 8 at α = 1), 2/3 for rectangles
    let ks: Vec<f64> = [16.0f64, 64.0, 256.0, 1024.0].iter().map(|k| k.ln()).collect();
    let vs: Vec<f64> = [16usize, 64, 256, 1024]
        .iter()
        .map(|&k| equal_squares_eigenvalue(k, 1.0, BoundaryParam::Robin(1.0)).map(f64::ln))
        .collect::<Result<_>>()?;
    rows.push("union-exponent".into(), 0.5, fit_slope(&ks, &vs), 0.05, TolMode::Abs);
    let rks: Vec<f64> = [100.0f64, 1000.0, 10000.0].iter().map(|k| k.ln()).collect();
    let rvs: Vec<f64> = [100usize, 1000, 10000]
        .iter()
        .map(|&k| optimize_rectangle(k, 1.0, BoundaryParam::Robin(1.0)).map(|r| r.value.ln()))
        .collect::<Result<_>>()?;
    rows.push("rectangle-exponent".into(), 2.0 / 3.0, fit_slope(&rks, &rvs), 0.05, TolMode::Abs);

    // spot-check that the search agrees with equal squares at α = 1
    for k in [9usize, 16] {
        if k > kmax {
            continue;
        }
        let check = equal_squares_optimality_check(k, 1.0, 1.0)?;
        rows.flag(format!("dp-at-alpha-1[k={k:02}]"), check.dp_agrees);
    }
    Ok(())
}

/// Optimal values converge to their Dirichlet counterparts from below as
/// α grows.
fn suite_dirichlet_limit(config: &SuiteConfig, rows: &mut Collector) -> Result<()> {
    let alphas = config
        .alphas
        .clone()
        .unwrap_or_else(|| vec![1.0, 10.0, 100.0, 1000.0, 10000.0]);
    let probe = crate::optimize::dirichlet_convergence_probe(3, 1.0, &alphas)?;
    for (idx, pair) in probe.rows.windows(2).enumerate() {
        rows.flag(
            format!("rect-gap-decreasing[{idx}]"),
            pair[1].rect_value_gap <= pair[0].rect_value_gap * (1.0 + 1e-9),
        );
        rows.flag(
            format!("union-gap-decreasing[{idx}]"),
            pair[1].union_value_gap <= pair[0].union_value_gap * (1.0 + 1e-9),
        );
    }
    for (idx, row) in probe.rows.iter().enumerate() {
        rows.violation(
            format!("rect-below-dirichlet[{idx}]"),
            row.rect_value - probe.dirichlet_rect_value,
            1e-9 * probe.dirichlet_rect_value,
        );
        rows.violation(
            format!("union-below-dirichlet[{idx}]"),
            row.union_value - probe.dirichlet_union_value,
            1e-9 * probe.dirichlet_union_value,
        );
    }
    // the Dirichlet first-eigenvalue optimum is the square at 2π²/A
    let r = optimize_rectangle(1, 1.0, BoundaryParam::Dirichlet)?;
    rows.push("dirichlet-k1-square".into(), 2.0 * PI * PI, r.value, 1e-8, TolMode::Rel);
    rows.push("dirichlet-k1-aspect".into(), 1.0, r.aspect_star, 1e-5, TolMode::Abs);
    Ok(())
}

/// Sum asymptotics: sum of per-index optima normalized by k^{3/2} sits in
/// the asymptotic window (widened for finite k), and the equal-squares
/// test domain obeys its closed-form cap.
fn suite_sums(config: &SuiteConfig, rows: &mut Collector) -> Result<()> {
    let k = config.max_k.unwrap_or(30);
    let union_config = UnionOptConfig::default();
    let probe = optimal_sum_probe_with(k, 1.0, 1.0, &union_config)?;
    rows.push(format!("normalized-window[k={k}]"), 3.0, probe.normalized, 1.0, TolMode::Abs);
    rows.violation(
        format!("equal-squares-cap[k={k}]"),
        probe.sum_equal_squares - 4.0 * (k as f64).powf(1.5),
        1e-12 * probe.sum_equal_squares,
    );
    rows.violation(
        format!("optima-below-squares[k={k}]"),
        probe.sum_of_optima - probe.sum_equal_squares,
        1e-9 * probe.sum_equal_squares,
    );
    // the cheap cap holds at larger k too
    let k100 = 100usize;
    let sum100 = k100 as f64 * equal_squares_eigenvalue(k100, 1.0, BoundaryParam::Robin(1.0))?;
    rows.violation(
        format!("equal-squares-cap[k={k100}]"),
        sum100 - 4.0 * (k100 as f64).powf(1.5),
        1e-12 * sum100,
    );
    Ok(())
}

fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

/// CSV rendering with the fixed header
/// `suite,case,expected,observed,tolerance,mode,pass`.
pub fn report_to_csv(report: &SuiteReport) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["suite", "case", "expected", "observed", "tolerance", "mode", "pass"])?;
    for row in &report.rows {
        writer.write_record([
            report.suite.as_str(),
            row.case.as_str(),
            &format!("{}", row.expected),
            &format!("{}", row.observed),
            &format!("{}", row.tolerance),
            &row.mode.to_string(),
            if row.pass { "true" } else { "false" },
        ])?;
    }
    let bytes = writer.into_inner().map_err(|e| crate::error::Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn report_to_json(report: &SuiteReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)?)
}
