//! Robin Laplacian eigenvalues on an interval.
//!
//! On an interval of length `a` with boundary parameter α, the k-th
//! eigenvalue λ_k lies strictly between the Neumann value π²(k−1)²/a² and
//! the Dirichlet value π²k²/a². Odd-k eigenvalues solve
//! α = √λ·tan(a√λ/2) and even-k eigenvalues solve α = −√λ·cot(a√λ/2),
//! each on its own branch.
//!
//! Instead of chasing tangent branches, the solver works in the offset
//! variable θ = a√λ/2 − (k−1)π/2 ∈ (0, π/2). Reducing the phase modulo
//! the quadrant collapses *every* branch of both equations to the single
//! secular function
//!
//! ```text
//!     g(θ) = x(θ)·sin θ − α·cos θ,      x(θ) = ((k−1)π + 2θ) / a,
//! ```
//!
//! which runs from −α at θ=0 to x > 0 at θ=π/2 and is strictly
//! increasing. This form is free of poles (it is the tan/cot equation
//! multiplied through by the cosine/sine of known sign) and never
//! evaluates trigonometric functions at large arguments, so bisection on
//! θ is sign-stable everywhere including the branch endpoints.

use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Result};
use crate::roots::bisect_known_signs;

/// Default relative tolerance on √λ for the bisection solver.
pub const DEFAULT_REL_TOL: f64 = 1e-12;

/// Robin boundary parameter: a finite coefficient α ≥ 0 (α = 0 is
/// Neumann), or the Dirichlet limit as a distinct state. Dirichlet is
/// deliberately not encoded as a large float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryParam {
    Robin(f64),
    Dirichlet,
}

impl BoundaryParam {
    pub fn robin(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(domain(format!(
                "boundary parameter must be finite and nonnegative, got {alpha}"
            )));
        }
        Ok(BoundaryParam::Robin(alpha))
    }

    pub fn neumann() -> Self {
        BoundaryParam::Robin(0.0)
    }

    pub fn is_dirichlet(&self) -> bool {
        matches!(self, BoundaryParam::Dirichlet)
    }

    /// Finite coefficient, if not Dirichlet.
    pub fn alpha(&self) -> Option<f64> {
        match self {
            BoundaryParam::Robin(a) => Some(*a),
            BoundaryParam::Dirichlet => None,
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        match self {
            BoundaryParam::Robin(a) if !a.is_finite() || *a < 0.0 => Err(domain(format!(
                "boundary parameter must be finite and nonnegative, got {a}"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for BoundaryParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryParam::Robin(a) => write!(f, "{a}"),
            BoundaryParam::Dirichlet => write!(f, "dirichlet"),
        }
    }
}

impl FromStr for BoundaryParam {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("dirichlet") {
            return Ok(BoundaryParam::Dirichlet);
        }
        let alpha: f64 = s
            .parse()
            .map_err(|_| domain(format!("cannot parse boundary parameter `{s}`")))?;
        BoundaryParam::robin(alpha)
    }
}

impl Serialize for BoundaryParam {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BoundaryParam::Robin(a) => ser.serialize_f64(*a),
            BoundaryParam::Dirichlet => ser.serialize_str("dirichlet"),
        }
    }
}

impl<'de> Deserialize<'de> for BoundaryParam {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(a) => BoundaryParam::robin(a).map_err(serde::de::Error::custom),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// An interval of positive length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntervalSpec {
    length: f64,
}

impl IntervalSpec {
    pub fn new(length: f64) -> Result<Self> {
        if !length.is_finite() || length <= 0.0 {
            return Err(domain(format!(
                "interval length must be positive and finite, got {length}"
            )));
        }
        Ok(IntervalSpec { length })
    }

    pub fn length(&self) -> f64 {
        self.length
    }
}

/// Secular function g(θ) for the k-th eigenvalue, θ ∈ (0, π/2).
/// Negative below the root, positive above it.
#[inline]
fn secular(a: f64, alpha: f64, k: usize, theta: f64) -> f64 {
    let x = ((k - 1) as f64 * PI + 2.0 * theta) / a;
    x * theta.sin() - alpha * theta.cos()
}

fn check_index(k: usize) -> Result<()> {
    if k < 1 {
        return Err(domain("eigenvalue index k must be at least 1"));
    }
    Ok(())
}

/// k-th Robin eigenvalue of an interval (1-based), at the default solver
/// tolerance. Neumann and Dirichlet short-circuit to their closed forms.
pub fn interval_eigenvalue(interval: IntervalSpec, bc: BoundaryParam, k: usize) -> Result<f64> {
    interval_eigenvalue_with_tol(interval, bc, k, DEFAULT_REL_TOL)
}

/// Same as [`interval_eigenvalue`] with an explicit relative tolerance on √λ.
pub fn interval_eigenvalue_with_tol(
    interval: IntervalSpec,
    bc: BoundaryParam,
    k: usize,
    rel_tol: f64,
) -> Result<f64> {
    check_index(k)?;
    bc.validate()?;
    let a = interval.length();
    let km1 = (k - 1) as f64;
    match bc {
        BoundaryParam::Dirichlet => Ok((PI * k as f64 / a).powi(2)),
        BoundaryParam::Robin(alpha) => {
            if alpha == 0.0 {
                return Ok((PI * km1 / a).powi(2));
            }
            // Bracket in θ is always (0, π/2); the endpoint signs are
            // −α and x > 0 by construction, so they are never evaluated.
            let theta = bisect_known_signs(
                0.0,
                FRAC_PI_2,
                |t| secular(a, alpha, k, t),
                |lo, _| rel_tol * (km1 * FRAC_PI_2 + lo),
            );
            let x = (km1 * PI + 2.0 * theta) / a;
            Ok(x * x)
        }
    }
}

/// Number of interval eigenvalues ≤ λ, computed from the closed-form
/// Neumann/Dirichlet sandwich plus a single boundary root check, not by
/// enumerating eigenvalues one at a time.
pub fn interval_count_below(interval: IntervalSpec, bc: BoundaryParam, lambda: f64) -> Result<usize> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(domain(format!("counting threshold must be positive, got {lambda}")));
    }
    bc.validate()?;
    Ok(count_below_inclusive(interval.length(), bc, lambda))
}

/// Internal counting that also accepts λ = 0 (needed when rectangle
/// counting subtracts an exact Neumann ground level).
pub(crate) fn count_below_inclusive(a: f64, bc: BoundaryParam, lambda: f64) -> usize {
    debug_assert!(lambda >= 0.0);
    let s = a * lambda.sqrt() / PI; // λ_k boundaries sit at integers of s
    match bc {
        BoundaryParam::Dirichlet => s.floor() as usize,
        BoundaryParam::Robin(alpha) => {
            if alpha == 0.0 {
                return s.floor() as usize + 1;
            }
            // k ≤ n are certainly ≤ λ (their Dirichlet caps are ≤ λ);
            // k ≥ n+2 are certainly > λ (their Neumann floors are > λ);
            // only k = n+1 needs a root-side check.
            let n = s.floor() as usize;
            let theta = (0.5 * (a * lambda.sqrt() - n as f64 * PI)).clamp(0.0, FRAC_PI_2);
            let crossed = if theta <= 0.0 {
                false
            } else if theta >= FRAC_PI_2 {
                true
            } else {
                secular(a, alpha, n + 1, theta) >= 0.0
            };
            n + usize::from(crossed)
        }
    }
}

/// Residual of the defining transcendental equation at a computed
/// eigenvalue, in the pole-free reparametrized form and normalized so the
/// scale is O(1): |x sin θ − α cos θ| / (x + α).
pub fn interval_residual(interval: IntervalSpec, bc: BoundaryParam, k: usize, lambda: f64) -> Result<f64> {
    check_index(k)?;
    bc.validate()?;
    let a = interval.length();
    let x = lambda.sqrt();
    match bc {
        BoundaryParam::Dirichlet => {
            let target = PI * k as f64 / a;
            Ok((x - target).abs() / target)
        }
        BoundaryParam::Robin(alpha) => {
            if alpha == 0.0 {
                let target = PI * (k - 1) as f64 / a;
                return Ok(if target == 0.0 { x.abs() } else { (x - target).abs() / target });
            }
            let theta = 0.5 * (a * x - (k - 1) as f64 * PI);
            Ok((x * theta.sin() - alpha * theta.cos()).abs() / (x + alpha))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn lam(a: f64, alpha: f64, k: usize) -> f64 {
        interval_eigenvalue(IntervalSpec::new(a).unwrap(), BoundaryParam::Robin(alpha), k).unwrap()
    }

    #[test]
    fn dirichlet_closed_form() {
        let i = IntervalSpec::new(1.0).unwrap();
        let l1 = interval_eigenvalue(i, BoundaryParam::Dirichlet, 1).unwrap();
        assert_relative_eq!(l1, PI * PI, max_relative = 1e-15);
    }

    #[test]
    fn neumann_closed_form() {
        let i = IntervalSpec::new(1.0).unwrap();
        let l2 = interval_eigenvalue(i, BoundaryParam::neumann(), 2).unwrap();
        assert_relative_eq!(l2, PI * PI, max_relative = 1e-15);
        assert_eq!(interval_eigenvalue(i, BoundaryParam::neumann(), 1).unwrap(), 0.0);
    }

    #[test]
    fn unit_interval_alpha_one_ground_state() {
        // Root of x·tan(x/2) = 1; frozen from two independent solvers.
        assert!((lam(1.0, 1.0, 1) - 1.7070529755509227).abs() < 1e-3);
        assert_relative_eq!(lam(1.0, 1.0, 1), 1.7070529755509227, max_relative = 1e-10);
    }

    #[test]
    fn second_and_third_eigenvalues_frozen() {
        assert_relative_eq!(lam(1.0, 1.0, 2), 13.49235714650484, max_relative = 1e-10);
        assert_relative_eq!(lam(1.0, 1.0, 3), 43.35722110493781, max_relative = 1e-10);
    }

    #[test]
    fn homothetic_scaling_identity() {
        // λ_k(I_a, α) = t²·λ_k(I_{ta}, α/t): here (a=2, α=1) vs ¼·(a=1, α=2).
        assert_relative_eq!(lam(2.0, 1.0, 3), 0.25 * lam(1.0, 2.0, 3), max_relative = 1e-11);
    }

    #[test]
    fn neumann_dirichlet_sandwich_strict() {
        for k in 1..=12 {
            for &(a, alpha) in &[(0.3, 0.7), (1.0, 1.0), (5.0, 20.0), (0.05, 90.0)] {
                let l = lam(a, alpha, k);
                let lo = (PI * (k - 1) as f64 / a).powi(2);
                let hi = (PI * k as f64 / a).powi(2);
                assert!(l > lo && l < hi, "sandwich broken at a={a} alpha={alpha} k={k}: {l}");
            }
        }
    }

    #[test]
    fn residual_small_at_solution() {
        for &(a, alpha, k) in &[(1.0, 1.0, 1), (0.01, 3.0, 2), (17.0, 0.2, 9)] {
            let i = IntervalSpec::new(a).unwrap();
            let bc = BoundaryParam::Robin(alpha);
            let l = interval_eigenvalue(i, bc, k).unwrap();
            let r = interval_residual(i, bc, k, l).unwrap();
            assert!(r <= 1e-9, "residual {r} too large at a={a} alpha={alpha} k={k}");
        }
    }

    #[test]
    fn count_below_examples() {
        let i = IntervalSpec::new(1.0).unwrap();
        assert_eq!(interval_count_below(i, BoundaryParam::Dirichlet, 9.9).unwrap(), 1);
        assert_eq!(interval_count_below(i, BoundaryParam::neumann(), 0.5).unwrap(), 1);
        // λ₁(1, 1) ≈ 1.7071 > 1.7
        assert_eq!(interval_count_below(i, BoundaryParam::Robin(1.0), 1.7).unwrap(), 0);
        assert_eq!(interval_count_below(i, BoundaryParam::Robin(1.0), 1.71).unwrap(), 1);
    }

    #[test]
    fn count_below_matches_solver_on_grid() {
        let i = IntervalSpec::new(2.7).unwrap();
        let bc = BoundaryParam::Robin(4.2);
        for k in 1..=15 {
            let l = interval_eigenvalue(i, bc, k).unwrap();
            let just_above = interval_count_below(i, bc, l * (1.0 + 1e-9)).unwrap();
            let just_below = interval_count_below(i, bc, l * (1.0 - 1e-9)).unwrap();
            assert_eq!(just_above, k);
            assert_eq!(just_below, k - 1);
        }
    }

    #[test]
    fn count_below_rejects_nonpositive_lambda() {
        let i = IntervalSpec::new(1.0).unwrap();
        assert!(interval_count_below(i, BoundaryParam::Robin(1.0), 0.0).is_err());
        assert!(interval_count_below(i, BoundaryParam::Robin(1.0), -3.0).is_err());
    }

    #[test]
    fn invalid_inputs_are_domain_errors() {
        assert!(IntervalSpec::new(0.0).is_err());
        assert!(IntervalSpec::new(-1.0).is_err());
        assert!(IntervalSpec::new(f64::NAN).is_err());
        assert!(BoundaryParam::robin(-0.5).is_err());
        let i = IntervalSpec::new(1.0).unwrap();
        assert!(interval_eigenvalue(i, BoundaryParam::Robin(1.0), 0).is_err());
    }

    #[test]
    fn boundary_param_parses_dirichlet_literal() {
        assert_eq!("dirichlet".parse::<BoundaryParam>().unwrap(), BoundaryParam::Dirichlet);
        assert_eq!("2.5".parse::<BoundaryParam>().unwrap(), BoundaryParam::Robin(2.5));
        assert!("-1".parse::<BoundaryParam>().is_err());
        assert!("infinity-ish".parse::<BoundaryParam>().is_err());
    }

    #[test]
    fn fundamental_gap_on_samples() {
        for &(a, alpha) in &[(1.0, 1.0), (0.5, 10.0), (3.0, 0.2)] {
            let gap = lam(a, alpha, 2) - lam(a, alpha, 1);
            assert!(gap >= PI * PI / (a * a) - 1e-9, "gap {gap} below π²/a² at a={a} alpha={alpha}");
        }
    }
}
