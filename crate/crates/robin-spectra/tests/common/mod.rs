//! Shared test oracles, independent of the library's solver paths.
//!
//! - a cell-centered finite-difference discretization of the interval
//!   Robin problem with Sturm-sequence bisection for its eigenvalues,
//!   plus Richardson extrapolation across two grids;
//! - Neumann lattice-point counting for rectangles;
//! - dense-scan rectangle minimization and exhaustive-partition union
//!   minimization built on brute-force mode tables.

#![allow(dead_code)]

use robin_spectra::interval::{interval_eigenvalue, BoundaryParam, IntervalSpec};

/// k-th eigenvalue of the N-point cell-centered finite-difference
/// approximation of −u'' = λu on (−a/2, a/2) with u'(±a/2) = ∓αu.
///
/// The Robin condition enters through the ghost-cell ratio
/// u_{-1} = u_0·(1 − αh/2)/(1 + αh/2), which keeps the matrix symmetric
/// tridiagonal and the scheme O(h²). The Sturm bisection runs on the
/// h²-scaled matrix (diagonal ≈ 2, off-diagonal −1, shift y = λh²) so
/// every pivot is O(1); the unscaled form loses the small eigenvalues in
/// the 1/h⁴ terms.
pub fn fd_interval_eigenvalue(a: f64, alpha: f64, k: usize, n: usize) -> f64 {
    let h = a / n as f64;
    let c = (1.0 - alpha * h / 2.0) / (1.0 + alpha * h / 2.0);
    let diag_interior = 2.0f64;
    let diag_boundary = 2.0 - c;

    // Sturm count: negative pivots of LDLᵀ of (h²T − y·I)
    let count_below = |y: f64| -> usize {
        let mut count = 0usize;
        let mut q = diag_boundary - y;
        if q < 0.0 {
            count += 1;
        }
        for row in 1..n {
            let d = if row == n - 1 { diag_boundary } else { diag_interior };
            let mut denom = q;
            if denom.abs() < 1e-300 {
                denom = -1e-300;
            }
            q = (d - y) - 1.0 / denom;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    };

    let mut lo = 0.0;
    let mut hi = 4.2;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(mid) >= k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi) / (h * h)
}

/// Richardson-extrapolated finite-difference eigenvalue: the O(h²) error
/// terms of the n and 2n grids cancel in (4λ_{2n} − λ_n)/3.
pub fn richardson_interval_eigenvalue(a: f64, alpha: f64, k: usize, n: usize) -> f64 {
    let coarse = fd_interval_eigenvalue(a, alpha, k, n);
    let fine = fd_interval_eigenvalue(a, alpha, k, 2 * n);
    (4.0 * fine - coarse) / 3.0
}

/// Richardson FD oracle with a grid sized to the mode: h is chosen so the
/// phase per cell x·h stays near 2e-3 (small enough for the O((xh)⁴)
/// extrapolated error, large enough that λh² stays far above the Sturm
/// count's machine floor).
pub fn oracle_interval_eigenvalue(a: f64, alpha: f64, k: usize) -> f64 {
    let pi = std::f64::consts::PI;
    let x_est = if k == 1 {
        (pi / a).min((2.0 * alpha / a).sqrt())
    } else {
        k as f64 * pi / a
    };
    let n = ((600.0 * a * x_est).ceil() as usize).clamp(256, 16_384);
    richardson_interval_eigenvalue(a, alpha, k, n)
}

/// Exact Neumann counting by lattice enumeration:
/// #{(x, y) ≥ 0 : π²x²/ℓ₁² + π²y²/ℓ₂² ≤ λ}.
pub fn neumann_lattice_count(aspect: f64, area: f64, lambda: f64) -> usize {
    let l1 = area.sqrt() * aspect;
    let l2 = area.sqrt() / aspect;
    let pi = std::f64::consts::PI;
    let xmax = (l1 * lambda.sqrt() / pi).floor() as i64;
    let mut count = 0usize;
    for x in 0..=xmax {
        let rem = lambda - (pi * x as f64 / l1).powi(2);
        if rem < 0.0 {
            break;
        }
        count += (l2 * rem.sqrt() / pi).floor() as usize + 1;
    }
    count
}

/// Brute-force k-th rectangle eigenvalue from a sorted mode table.
pub fn brute_rect_eigenvalue(area: f64, aspect: f64, alpha: f64, k: usize) -> f64 {
    let l1 = IntervalSpec::new(area.sqrt() * aspect).unwrap();
    let l2 = IntervalSpec::new(area.sqrt() / aspect).unwrap();
    let bc = BoundaryParam::Robin(alpha);
    let cap = k + 2;
    let e1: Vec<f64> = (1..=cap).map(|i| interval_eigenvalue(l1, bc, i).unwrap()).collect();
    let e2: Vec<f64> = (1..=cap).map(|j| interval_eigenvalue(l2, bc, j).unwrap()).collect();
    let mut table: Vec<f64> = e1.iter().flat_map(|a| e2.iter().map(move |b| a + b)).collect();
    table.sort_by(f64::total_cmp);
    table[k - 1]
}

/// Dense-scan + golden-section minimization of the k-th rectangle
/// eigenvalue over aspects in [1, a_max], using only the brute-force mode
/// table. Returns (aspect*, value).
pub fn scan_rect_minimum(k: usize, area: f64, alpha: f64, a_max: f64, steps: usize) -> (f64, f64) {
    let value = |aspect: f64| brute_rect_eigenvalue(area, aspect, alpha, k);
    let mut best_idx = 0;
    let mut best = f64::INFINITY;
    let grid: Vec<f64> = (0..steps)
        .map(|i| a_max.powf(i as f64 / (steps - 1) as f64))
        .collect();
    for (idx, &a) in grid.iter().enumerate() {
        let v = value(a);
        if v < best {
            best = v;
            best_idx = idx;
        }
    }
    let lo = grid[best_idx.saturating_sub(1)];
    let hi = grid[(best_idx + 1).min(steps - 1)];
    golden(&value, lo, hi, 1e-10)
}

fn golden(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64) {
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INVPHI * (b - a);
    let mut x2 = a + INVPHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > xtol * b.abs().max(1e-12) {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INVPHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INVPHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 { (x1, f1) } else { (x2, f2) }
}

/// Optimal rectangle value for a part contributing j eigenvalues, for the
/// brute-force union oracle.
fn oracle_rect_value(j: usize, area: f64, alpha: f64) -> f64 {
    if j == 1 {
        // λ₁(R_a) increases with the aspect, so the basin is [1, small]
        let value = |aspect: f64| brute_rect_eigenvalue(area, aspect, alpha, 1);
        return golden(&value, 1.0, 4.0, 1e-11).1;
    }
    let a_max = 2.5 * (j as f64).sqrt().max((j as f64).powf(2.0 / 3.0) * 4.0);
    scan_rect_minimum(j, area, alpha, a_max, 60 * j).1
}

/// Minimal max-of-parts value for a fixed part-size list and total area,
/// by recursive golden-section over the area split between the halves of
/// the list (max(decreasing, increasing) is unimodal in the split).
fn oracle_alloc_value(parts: &[usize], area: f64, alpha: f64) -> f64 {
    if parts.len() == 1 {
        return oracle_rect_value(parts[0], area, alpha);
    }
    let (left, right) = parts.split_at(parts.len() / 2);
    let objective = |s: f64| {
        oracle_alloc_value(left, s * area, alpha).max(oracle_alloc_value(right, (1.0 - s) * area, alpha))
    };
    golden(&objective, 1e-4, 1.0 - 1e-4, 3e-7).1
}

fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Exhaustive union minimization: all multiset partitions of k, each with
/// continuous area allocation by nested golden-section.
pub fn brute_force_union_minimum(k: usize, area: f64, alpha: f64) -> f64 {
    partitions_of(k)
        .iter()
        .map(|parts| oracle_alloc_value(parts, area, alpha))
        .fold(f64::INFINITY, f64::min)
}
