//! The 3-to-1 transition curve: the locus α = C·√(k/A) where k equal
//! squares tie with k−3 equal squares plus one square of three times
//! their area.
//!
//! In rescaled variables c_i the tie condition reduces to the
//! dimensionless system
//!
//! ```text
//!     c₁·tan(c₁) = c₂·tan(√3·c₂) = −c₃·cot(√3·c₃),   2c₁² = c₂² + c₃²,
//! ```
//!
//! with c₁ ∈ (0, π/2), c₂ ∈ (0, π/(2√3)), c₃ ∈ (π/(2√3), π/√3). The
//! first two equations define c₂ and c₃ as increasing functions of c₁
//! (solved by inner bisections on pole-free product forms), and the
//! third is closed by an outer bisection on 2c₁² − c₂² − c₃², which
//! changes sign from −π²/12 to +π²/12 across the c₁ range.

use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{domain, Result};
use crate::interval::BoundaryParam;
use crate::roots::{bisect_known_signs, brent_root};
use crate::spectrum::{rect_eigenvalue, RectSpec, UnionSpec};

/// Solution of the transition system, with the curve constant C such that
/// the tie happens at α = C·√(k/A).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TransitionSolution {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    /// α = curve_constant·√(k/A) on the transition curve; equals 2c₁tan(c₁).
    pub curve_constant: f64,
    /// Residuals of the three equations at the returned solution.
    pub residuals: [f64; 3],
}

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// c₂(T): root of u·tan(√3·u) = T on (0, π/(2√3)), via the product form
/// u·sin(√3u) − T·cos(√3u) whose endpoint signs are −T and +u.
fn c2_of(t: f64) -> f64 {
    bisect_known_signs(
        0.0,
        FRAC_PI_2 / SQRT3,
        |u| u * (SQRT3 * u).sin() - t * (SQRT3 * u).cos(),
        |lo, _| 1e-14 * lo.max(1e-3),
    )
}

/// c₃(T): root of −u·cot(√3·u) = T on (π/(2√3), π/√3), via the product
/// form −u·cos(√3u) − T·sin(√3u) whose endpoint signs are −T and +u.
fn c3_of(t: f64) -> f64 {
    bisect_known_signs(
        FRAC_PI_2 / SQRT3,
        PI / SQRT3,
        |u| -u * (SQRT3 * u).cos() - t * (SQRT3 * u).sin(),
        |_, _| 1e-15,
    )
}

/// Solves the transition system for the branch with the smallest positive
/// curve constant.
pub fn solve_transition() -> TransitionSolution {
    let f = |c1: f64| {
        let t = c1 * c1.tan();
        2.0 * c1 * c1 - c2_of(t).powi(2) - c3_of(t).powi(2)
    };
    // F(0⁺) = −π²/12 < 0 < π²/12 = F(π/2⁻); brackets shrunk off the poles
    let c1 = bisect_known_signs(1e-12, FRAC_PI_2 - 1e-12, f, |_, _| 1e-15);
    let t = c1 * c1.tan();
    let (c2, c3) = (c2_of(t), c3_of(t));
    TransitionSolution {
        c1,
        c2,
        c3,
        curve_constant: 2.0 * t,
        residuals: [
            c1 * c1.tan() - c2 * (SQRT3 * c2).tan(),
            c1 * c1.tan() + c3 / (SQRT3 * c3).tan(),
            2.0 * c1 * c1 - c2 * c2 - c3 * c3,
        ],
    }
}

/// Both sides of the tie identity evaluated at α = C·√(k/A).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CrossingCheck {
    pub k: usize,
    pub area: f64,
    pub alpha: f64,
    pub lambda1_small_square: f64,
    pub lambda2_large_square: f64,
    pub lambda3_large_square: f64,
    /// |λ₁(square A/k) − λ₂(square 3A/k)|
    pub mismatch: f64,
    /// |λ₂ − λ₃| of the larger square (zero by mode symmetry)
    pub degeneracy: f64,
}

/// Evaluates the defining identity of the transition curve at the solved
/// constant: λ₁ of a square of area A/k against the degenerate λ₂ = λ₃ of
/// a square of area 3A/k.
pub fn transition_crossing_check(k: usize, area: f64) -> Result<CrossingCheck> {
    if k < 4 {
        return Err(domain("the 3-to-1 comparison needs k of at least 4"));
    }
    if !area.is_finite() || area <= 0.0 {
        return Err(domain(format!("area must be positive, got {area}")));
    }
    let sol = solve_transition();
    let alpha = sol.curve_constant * (k as f64 / area).sqrt();
    let bc = BoundaryParam::robin(alpha)?;
    let small = RectSpec::square(area / k as f64)?;
    let large = RectSpec::square(3.0 * area / k as f64)?;
    let l1 = rect_eigenvalue(small, bc, 1)?.value;
    let l2 = rect_eigenvalue(large, bc, 2)?.value;
    let l3 = rect_eigenvalue(large, bc, 3)?.value;
    Ok(CrossingCheck {
        k,
        area,
        alpha,
        lambda1_small_square: l1,
        lambda2_large_square: l2,
        lambda3_large_square: l3,
        mismatch: (l1 - l2).abs(),
        degeneracy: (l2 - l3).abs(),
    })
}

/// The 3-to-1 merge candidate at a given α: k−3 equal squares plus one
/// larger square, with areas equalized so the small squares' first
/// eigenvalue matches the larger square's third. Returns the candidate
/// union and its k-th eigenvalue (the common value). On the transition
/// curve the larger square has exactly three times the small area.
pub fn three_merge_candidate(k: usize, area: f64, bc: BoundaryParam) -> Result<(UnionSpec, f64)> {
    if k < 4 {
        return Err(domain("the 3-merge candidate needs k of at least 4"));
    }
    if !area.is_finite() || area <= 0.0 {
        return Err(domain(format!("area must be positive, got {area}")));
    }
    bc.validate()?;
    if bc == BoundaryParam::Robin(0.0) {
        return Err(domain("the 3-merge equalization is degenerate for Neumann"));
    }
    let m = (k - 3) as f64;
    // residual λ₁(square s) − λ₃(square A − m·s): decreasing in s,
    // +∞ at s→0 and −∞ at s→A/m
    let mut f = |s: f64| -> f64 {
        let small = RectSpec::square(s).expect("small square area positive");
        let large = RectSpec::square(area - m * s).expect("large square area positive");
        rect_eigenvalue(small, bc, 1).expect("solver").value
            - rect_eigenvalue(large, bc, 3).expect("solver").value
    };
    let s = brent_root(&mut f, area / m * 1e-9, area / m * (1.0 - 1e-9), 1e-12, 300);
    let small = RectSpec::square(s)?;
    let large = RectSpec::square(area - m * s)?;
    let mut components = vec![small; k - 3];
    components.push(large);
    let value = rect_eigenvalue(small, bc, 1)?
        .value
        .max(rect_eigenvalue(large, bc, 3)?.value);
    Ok((UnionSpec::new(components)?, value))
}
