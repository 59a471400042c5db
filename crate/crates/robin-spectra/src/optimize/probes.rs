//! Convergence and sum probes built on top of the optimizers.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::interval::BoundaryParam;
use crate::spectrum::equal_squares_eigenvalue;

use super::rect::{optimize_rectangle, RectOptResult};
use super::union::{optimize_union, optimize_union_with, UnionOptConfig};

/// One row of the Dirichlet-limit probe.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DirichletProbeRow {
    pub alpha: f64,
    pub rect_value: f64,
    pub rect_aspect: f64,
    pub union_value: f64,
    pub rect_value_gap: f64,
    pub rect_aspect_gap: f64,
    pub union_value_gap: f64,
}

/// Robin optimizer runs along an α-ladder against their Dirichlet limits.
#[derive(Debug, Clone, Serialize)]
pub struct DirichletProbe {
    pub k: usize,
    pub area: f64,
    pub dirichlet_rect_value: f64,
    pub dirichlet_rect_aspect: f64,
    pub dirichlet_union_value: f64,
    pub rows: Vec<DirichletProbeRow>,
}

/// Runs the rectangle and union optimizers for each α in the list plus the
/// Dirichlet limit, and reports the gaps |value(α) − value(∞)| and
/// |a*(α) − a*(∞)|.
pub fn dirichlet_convergence_probe(
    k: usize,
    area: f64,
    alphas: &[f64],
) -> Result<DirichletProbe> {
    if alphas.is_empty() {
        return Err(domain("the probe needs at least one alpha"));
    }
    let d_rect: RectOptResult = optimize_rectangle(k, area, BoundaryParam::Dirichlet)?;
    let d_union = optimize_union(k, area, BoundaryParam::Dirichlet)?;
    let mut rows = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let bc = BoundaryParam::robin(alpha)?;
        let r = optimize_rectangle(k, area, bc)?;
        let u = optimize_union(k, area, bc)?;
        rows.push(DirichletProbeRow {
            alpha,
            rect_value: r.value,
            rect_aspect: r.aspect_star,
            union_value: u.value,
            rect_value_gap: (r.value - d_rect.value).abs(),
            rect_aspect_gap: (r.aspect_star - d_rect.aspect_star).abs(),
            union_value_gap: (u.value - d_union.value).abs(),
        });
    }
    Ok(DirichletProbe {
        k,
        area,
        dirichlet_rect_value: d_rect.value,
        dirichlet_rect_aspect: d_rect.aspect_star,
        dirichlet_union_value: d_union.value,
        rows,
    })
}

/// Sum-of-eigenvalues probe at desk scale.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SumProbe {
    pub k: usize,
    pub area: f64,
    pub alpha: f64,
    /// k · λ_k(k equal squares): the sum over the equal-squares test domain.
    pub sum_equal_squares: f64,
    /// Σ_{j=1..k} of the optimal j-th values.
    pub sum_of_optima: f64,
    /// sum_of_optima / k^{3/2}.
    pub normalized: f64,
}

/// Computes the equal-squares sum and the sum of per-index optimal union
/// values. The latter runs k union optimizations, so it is guarded by the
/// configured desk-scale cap.
pub fn optimal_sum_probe(k: usize, area: f64, alpha: f64) -> Result<SumProbe> {
    optimal_sum_probe_with(k, area, alpha, &UnionOptConfig::default())
}

pub fn optimal_sum_probe_with(
    k: usize,
    area: f64,
    alpha: f64,
    config: &UnionOptConfig,
) -> Result<SumProbe> {
    if k < 1 {
        return Err(domain("k must be at least 1"));
    }
    if k > config.max_k {
        return Err(domain(format!(
            "k = {k} exceeds the configured desk-scale cap {} for the sum probe",
            config.max_k
        )));
    }
    let bc = BoundaryParam::robin(alpha)?;
    let sum_equal_squares = k as f64 * equal_squares_eigenvalue(k, area, bc)?;
    let mut sum_of_optima = 0.0;
    for j in 1..=k {
        sum_of_optima += optimize_union_with(j, area, bc, config)?.value;
    }
    Ok(SumProbe {
        k,
        area,
        alpha,
        sum_equal_squares,
        sum_of_optima,
        normalized: sum_of_optima / (k as f64).powf(1.5),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_probe_small() {
        let p = optimal_sum_probe(4, 1.0, 1.0).unwrap();
        assert!(p.sum_of_optima <= p.sum_equal_squares + 1e-9);
        assert!(p.sum_equal_squares <= 4.0 * 4f64.powf(1.5) + 1e-12);
        assert!(p.normalized > 0.0);
    }

    #[test]
    fn sum_probe_guard() {
        assert!(optimal_sum_probe(51, 1.0, 1.0).is_err());
    }

    #[test]
    fn dirichlet_probe_small() {
        let p = dirichlet_convergence_probe(2, 1.0, &[1.0, 10.0, 100.0]).unwrap();
        // values approach the Dirichlet limit from below and the gaps shrink
        for w in p.rows.windows(2) {
            assert!(w[1].union_value_gap <= w[0].union_value_gap + 1e-9);
        }
        for row in &p.rows {
            assert!(row.union_value <= p.dirichlet_union_value + 1e-9);
            assert!(row.rect_value <= p.dirichlet_rect_value + 1e-9);
        }
    }
}
