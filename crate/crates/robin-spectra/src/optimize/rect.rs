//! Minimization of the k-th eigenvalue over rectangles of fixed area.
//!
//! The objective a ↦ λ_k(R_a) on [1, a_max] is continuous but only
//! piecewise smooth: it has kinks where the identity of the k-th mode
//! changes. The search is therefore derivative-free and multi-start: a
//! geometric coarse grid isolates candidate basins, then golden-section
//! (in log-aspect) refines the best few and keeps the overall winner.
//! Among equally good minimizers the smallest aspect wins.

use serde::Serialize;
use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::interval::BoundaryParam;
use crate::roots::golden_min;
use crate::spectrum::{ModeIndex, RectSpec, RectSpectrum};

/// Search parameters for [`optimize_rectangle`].
#[derive(Debug, Clone, Copy)]
pub struct RectOptConfig {
    /// Points of the geometric aspect grid on [1, a_max].
    pub grid_points: usize,
    /// Relative tolerance on the optimal aspect for the refinement stage.
    pub rel_tol: f64,
    /// How many of the best grid basins are refined.
    pub multi_start: usize,
    /// Relative tolerance handed to the interval solver.
    pub solver_rel_tol: f64,
}

impl Default for RectOptConfig {
    fn default() -> Self {
        RectOptConfig {
            grid_points: 512,
            rel_tol: 1e-8,
            multi_start: 3,
            solver_rel_tol: crate::interval::DEFAULT_REL_TOL,
        }
    }
}

/// Result of a rectangle search: the optimal aspect, value, realizing
/// mode, and the bracket the refinement ran on. Serializes as
/// `{k, A, alpha, aspect_star, value, mode: [i, j], bracket}`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RectOptResult {
    pub k: usize,
    #[serde(rename = "A")]
    pub area: f64,
    pub alpha: BoundaryParam,
    pub aspect_star: f64,
    pub value: f64,
    #[serde(serialize_with = "serialize_mode_pair")]
    pub mode: ModeIndex,
    pub bracket: (f64, f64),
}

fn serialize_mode_pair<S: serde::Serializer>(
    mode: &ModeIndex,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    [mode.i, mode.j].serialize(ser)
}

/// Upper end of the aspect search range: max(2√k, 4·c₂·k^{2/3}), where c₂
/// is the coefficient of the optimal long side in the (k,1)-mode bound.
fn aspect_upper_bound(k: usize, area: f64, bc: BoundaryParam) -> f64 {
    let kf = k as f64;
    let c2 = match bc {
        // limit of (√A·α / (π² + 2√A·α))^(-1/3) as α → ∞
        BoundaryParam::Dirichlet => 2f64.powf(1.0 / 3.0),
        BoundaryParam::Robin(alpha) => {
            let t = area.sqrt() * alpha / (PI * PI + 2.0 * area.sqrt() * alpha);
            t.powf(-1.0 / 3.0)
        }
    };
    (2.0 * kf.sqrt()).max(4.0 * c2 * kf.powf(2.0 / 3.0))
}

/// Global minimum of λ_k over rectangles of the given area, with the
/// default search configuration (512-point grid, 1e-8 aspect tolerance).
pub fn optimize_rectangle(k: usize, area: f64, bc: BoundaryParam) -> Result<RectOptResult> {
    optimize_rectangle_with(k, area, bc, &RectOptConfig::default())
}

pub fn optimize_rectangle_with(
    k: usize,
    area: f64,
    bc: BoundaryParam,
    config: &RectOptConfig,
) -> Result<RectOptResult> {
    if k < 1 {
        return Err(domain("k must be at least 1"));
    }
    if !area.is_finite() || area <= 0.0 {
        return Err(domain(format!("area must be positive, got {area}")));
    }
    bc.validate()?;
    if bc == BoundaryParam::Robin(0.0) {
        return Err(domain(
            "the Neumann k-th eigenvalue has no minimizing rectangle (infimum 0 as the aspect grows)",
        ));
    }
    if config.grid_points < 3 {
        return Err(domain("grid must have at least 3 points"));
    }

    let a_max = aspect_upper_bound(k, area, bc);
    let n = config.grid_points;
    let log_max = a_max.ln();
    let eval = |u: f64| -> Result<f64> {
        let rect = RectSpec::new(area, u.exp())?;
        Ok(RectSpectrum::with_tol(rect, bc, config.solver_rel_tol)?
            .eigenvalue(k)?
            .value)
    };

    let mut grid_u = Vec::with_capacity(n);
    let mut grid_v = Vec::with_capacity(n);
    for idx in 0..n {
        let u = log_max * idx as f64 / (n - 1) as f64;
        grid_u.push(u);
        grid_v.push(eval(u)?);
    }

    // Candidate basins: strict-or-equal local minima of the grid values,
    // endpoints included.
    let mut basins: Vec<usize> = (0..n)
        .filter(|&i| {
            (i == 0 || grid_v[i] <= grid_v[i - 1]) && (i == n - 1 || grid_v[i] <= grid_v[i + 1])
        })
        .collect();
    basins.sort_by(|&a, &b| grid_v[a].total_cmp(&grid_v[b]).then(a.cmp(&b)));
    basins.truncate(config.multi_start.max(1));
    // Refine in aspect order so ties resolve to the smallest aspect.
    basins.sort_unstable();

    let mut best: Option<(f64, f64)> = None; // (u, value)
    for &i in &basins {
        let lo = grid_u[i.saturating_sub(1)];
        let hi = grid_u[(i + 1).min(n - 1)];
        let (u, v) = if lo < hi {
            golden_min(|u| eval(u).expect("aspect objective failed"), lo, hi, config.rel_tol, 400)
        } else {
            (grid_u[i], grid_v[i])
        };
        // keep the grid point if refinement somehow did not improve on it
        let (u, v) = if grid_v[i] < v { (grid_u[i], grid_v[i]) } else { (u, v) };
        if best.is_none_or(|(_, bv)| v < bv) {
            best = Some((u, v));
        }
    }

    let (u_star, value) = best.expect("at least one basin exists");
    let aspect_star = u_star.exp().max(1.0);
    let rect = RectSpec::new(area, aspect_star)?;
    let eig = RectSpectrum::with_tol(rect, bc, config.solver_rel_tol)?.eigenvalue(k)?;
    let i_star = grid_u.partition_point(|&u| u < u_star).min(n - 1);
    let bracket = (
        grid_u[i_star.saturating_sub(1)].exp(),
        grid_u[(i_star + 1).min(n - 1)].exp(),
    );
    Ok(RectOptResult {
        k,
        area,
        alpha: bc,
        aspect_star,
        value,
        mode: eig.mode,
        bracket,
    })
}
