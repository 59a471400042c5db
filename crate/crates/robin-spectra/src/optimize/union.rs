//! Minimization of the k-th eigenvalue over disjoint unions of rectangles.
//!
//! By the Wolf–Keller splitting principle, an optimal disconnected domain
//! decomposes into optimal sub-domains whose contributing eigenvalues all
//! equalize. Descending recursively until every component is connected,
//! the optimum is: choose a partition k = k₁ + ... + k_m, give part l an
//! optimal rectangle for its k_l-th eigenvalue, and allocate areas so
//! every part's eigenvalue equals the common value v.
//!
//! The engine searches on v directly. For a part size j, `area_cost(j, v)`
//! is the area an optimal j-rectangle needs to bring its j-th eigenvalue
//! down to v (well defined: the value is continuous and strictly
//! decreasing in area, by homothety). For fixed v the cheapest partition
//! is a one-dimensional knapsack over part sizes, and the outer solve
//! finds the v at which the cheapest partition spends exactly the
//! prescribed total area. Equalization at every split node then holds by
//! construction. Solving the per-pair equalized fraction s with
//! F(i, sB) = F(k−i, (1−s)B) by nested bisection computes the same
//! optimum, but re-solves sub-splits at every bisection iterate and blows
//! up exponentially in k; the value parametrization is the same principle
//! with the common value as the free variable.

use serde::Serialize;
use std::collections::HashMap;

use crate::error::{domain, Result};
use crate::interval::BoundaryParam;
use crate::roots::brent_root;
use crate::spectrum::{equal_squares_eigenvalue, RectSpec, UnionSpec};

use super::rect::{optimize_rectangle_with, RectOptConfig};

/// Parameters for [`optimize_union`].
#[derive(Debug, Clone, Copy)]
pub struct UnionOptConfig {
    /// Relative tolerance on the optimal value.
    pub value_rel_tol: f64,
    /// Relative tolerance on per-part area allocations.
    pub area_rel_tol: f64,
    /// Guard: the recursion is meant for desk-scale k.
    pub max_k: usize,
    /// Base grid size for the per-part rectangle searches.
    pub leaf_grid_base: usize,
    /// Extra grid points per unit of part size.
    pub leaf_grid_per_k: usize,
}

impl Default for UnionOptConfig {
    fn default() -> Self {
        UnionOptConfig {
            value_rel_tol: 1e-9,
            area_rel_tol: 1e-10,
            max_k: 50,
            leaf_grid_base: 96,
            leaf_grid_per_k: 6,
        }
    }
}

/// Binary split tree of the optimizing union. Leaves carry the rectangle
/// and how many eigenvalues it contributes; nodes carry the left child's
/// share of the node's area.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitTree {
    Leaf { rect: RectSpec, count: usize },
    Node { fraction: f64, left: Box<SplitTree>, right: Box<SplitTree> },
}

impl SplitTree {
    pub fn leaf_count_total(&self) -> usize {
        match self {
            SplitTree::Leaf { count, .. } => *count,
            SplitTree::Node { left, right, .. } => {
                left.leaf_count_total() + right.leaf_count_total()
            }
        }
    }

    pub fn area_total(&self) -> f64 {
        match self {
            SplitTree::Leaf { rect, .. } => rect.area(),
            SplitTree::Node { left, right, .. } => left.area_total() + right.area_total(),
        }
    }

    /// All leaves in tree order as (rectangle, contributed count) pairs.
    pub fn leaves(&self) -> Vec<(RectSpec, usize)> {
        fn walk(tree: &SplitTree, out: &mut Vec<(RectSpec, usize)>) {
            match tree {
                SplitTree::Leaf { rect, count } => out.push((*rect, *count)),
                SplitTree::Node { left, right, .. } => {
                    walk(left, out);
                    walk(right, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

/// Result of the union search: the optimal value, the equalized split
/// tree, and its flattened component list.
#[derive(Debug, Clone, Serialize)]
pub struct UnionOptResult {
    pub k: usize,
    #[serde(rename = "A")]
    pub area: f64,
    pub alpha: BoundaryParam,
    pub value: f64,
    pub tree: SplitTree,
    pub flattened: UnionSpec,
}

struct LeafOpt {
    value: f64,
    aspect: f64,
}

/// Evaluation context owned by a single optimization run: exact-key memo
/// for rectangle optima plus warm-start seeds for the area inversions.
struct DpContext {
    bc: BoundaryParam,
    cfg: UnionOptConfig,
    rect_memo: HashMap<(usize, u64), LeafOpt>,
    warm_area: HashMap<usize, (f64, f64)>, // j -> (v, area) of last inversion
}

impl DpContext {
    fn new(bc: BoundaryParam, cfg: UnionOptConfig) -> Self {
        DpContext {
            bc,
            cfg,
            rect_memo: HashMap::new(),
            warm_area: HashMap::new(),
        }
    }

    fn leaf_config(&self, j: usize) -> RectOptConfig {
        RectOptConfig {
            grid_points: self.cfg.leaf_grid_base + self.cfg.leaf_grid_per_k * j,
            rel_tol: 1e-9,
            ..RectOptConfig::default()
        }
    }

    /// Optimal j-th eigenvalue over rectangles of the given area.
    fn rect_value(&mut self, j: usize, area: f64) -> Result<f64> {
        let key = (j, area.to_bits());
        if let Some(hit) = self.rect_memo.get(&key) {
            return Ok(hit.value);
        }
        let r = optimize_rectangle_with(j, area, self.bc, &self.leaf_config(j))?;
        self.rect_memo.insert(key, LeafOpt { value: r.value, aspect: r.aspect_star });
        Ok(r.value)
    }

    fn rect_aspect(&mut self, j: usize, area: f64) -> Result<f64> {
        self.rect_value(j, area)?;
        Ok(self.rect_memo[&(j, area.to_bits())].aspect)
    }

    /// Area at which the optimal j-rectangle's j-th eigenvalue equals v.
    fn area_cost(&mut self, j: usize, v: f64) -> Result<f64> {
        // Bracket by doubling/halving around the warm start (or the
        // leading-order guess), then Brent on the monotone residual.
        let mut guess = match self.warm_area.get(&j) {
            Some(&(v_prev, a_prev)) => a_prev * (v_prev / v).clamp(1e-6, 1e6),
            None => {
                // value scales roughly like j/area at moderate α
                let v1 = self.rect_value(j, 1.0)?;
                (v1 / v).clamp(1e-12, 1e12)
            }
        };
        if !guess.is_finite() || guess <= 0.0 {
            guess = 1.0;
        }
        let mut lo = guess; // will hold area with value > v  (area too small)
        let mut hi = guess; // will hold area with value < v  (area too large)
        let mut f_guess = self.rect_value(j, guess)? - v;
        if f_guess == 0.0 {
            return Ok(guess);
        }
        if f_guess > 0.0 {
            // value too high: grow the area
            for _ in 0..200 {
                hi *= 2.0;
                f_guess = self.rect_value(j, hi)? - v;
                if f_guess <= 0.0 {
                    break;
                }
                lo = hi;
            }
        } else {
            for _ in 0..200 {
                lo *= 0.5;
                f_guess = self.rect_value(j, lo)? - v;
                if f_guess >= 0.0 {
                    break;
                }
                hi = lo;
            }
        }
        let tol = self.cfg.area_rel_tol;
        let mut eval = |a: f64| self.rect_value(j, a).map(|x| x - v);
        let area = {
            let mut call = |a: f64| eval(a).expect("rectangle optimization failed in area inversion");
            brent_root(&mut call, lo, hi, tol, 200)
        };
        self.warm_area.insert(j, (v, area));
        Ok(area)
    }

    /// Minimal total area over all partitions of n with common value v,
    /// with the realizing part sizes. Ties prefer more, smaller parts.
    fn best_partition(&mut self, n: usize, v: f64) -> Result<(f64, Vec<usize>)> {
        let mut costs = Vec::with_capacity(n + 1);
        for j in 1..=n {
            costs.push(self.area_cost(j, v)?);
        }
        let mut total = vec![0.0f64; n + 1];
        let mut choice = vec![0usize; n + 1];
        for m in 1..=n {
            let mut best = f64::INFINITY;
            let mut best_j = 1;
            for j in 1..=m {
                let c = costs[j - 1] + total[m - j];
                if c < best {
                    best = c;
                    best_j = j;
                }
            }
            total[m] = best;
            choice[m] = best_j;
        }
        let mut parts = Vec::new();
        let mut m = n;
        while m > 0 {
            parts.push(choice[m]);
            m -= choice[m];
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok((total[n], parts))
    }
}

/// Balanced binary split tree over the leaf list, recorded with each
/// node's left-area fraction.
fn build_tree(leaves: &[(usize, f64, f64)]) -> SplitTree {
    // (count, area, aspect)
    if leaves.len() == 1 {
        let (count, area, aspect) = leaves[0];
        return SplitTree::Leaf {
            rect: RectSpec::new(area, aspect).expect("leaf rectangle is valid"),
            count,
        };
    }
    let total: usize = leaves.iter().map(|l| l.0).sum();
    // split point balancing the eigenvalue counts
    let mut acc = 0usize;
    let mut split = 1;
    let mut best_imbalance = usize::MAX;
    for (idx, leaf) in leaves.iter().enumerate().take(leaves.len() - 1) {
        acc += leaf.0;
        let imbalance = (2 * acc).abs_diff(total);
        if imbalance < best_imbalance {
            best_imbalance = imbalance;
            split = idx + 1;
        }
    }
    let (l, r) = leaves.split_at(split);
    let area_l: f64 = l.iter().map(|x| x.1).sum();
    let area_r: f64 = r.iter().map(|x| x.1).sum();
    SplitTree::Node {
        fraction: area_l / (area_l + area_r),
        left: Box::new(build_tree(l)),
        right: Box::new(build_tree(r)),
    }
}

/// Global minimum of λ_k over disjoint unions of rectangles of the given
/// total area, with the default configuration.
pub fn optimize_union(k: usize, area: f64, bc: BoundaryParam) -> Result<UnionOptResult> {
    optimize_union_with(k, area, bc, &UnionOptConfig::default())
}

pub fn optimize_union_with(
    k: usize,
    area: f64,
    bc: BoundaryParam,
    config: &UnionOptConfig,
) -> Result<UnionOptResult> {
    if k < 1 {
        return Err(domain("k must be at least 1"));
    }
    if k > config.max_k {
        return Err(domain(format!(
            "k = {k} exceeds the configured desk-scale cap {} for the union search",
            config.max_k
        )));
    }
    if !area.is_finite() || area <= 0.0 {
        return Err(domain(format!("area must be positive, got {area}")));
    }
    bc.validate()?;
    if bc == BoundaryParam::Robin(0.0) {
        return Err(domain(
            "the Neumann k-th eigenvalue has no minimizing union (infimum 0 under inflation)",
        ));
    }

    let mut ctx = DpContext::new(bc, *config);

    if k == 1 {
        // a single contributing eigenvalue: the optimal union is the
        // optimal rectangle on the full area
        let v = ctx.rect_value(1, area)?;
        let aspect = ctx.rect_aspect(1, area)?;
        let rect = RectSpec::new(area, aspect)?;
        return Ok(UnionOptResult {
            k,
            area,
            alpha: bc,
            value: v,
            tree: SplitTree::Leaf { rect, count: 1 },
            flattened: UnionSpec::new(vec![rect])?,
        });
    }

    // Bracket the common value: the single rectangle and the k equal
    // squares both realize candidates, so the optimum sits at or below
    // their minimum; the first eigenvalue of the full-area optimal
    // rectangle is a strict lower bound for k >= 2.
    let single = ctx.rect_value(k, area)?;
    let squares = equal_squares_eigenvalue(k, area, bc)?;
    let mut v_hi = single.min(squares);
    let mut v_lo = 0.999 * ctx.rect_value(1, area)?;
    for _ in 0..200 {
        if ctx.best_partition(k, v_lo)?.0 > area {
            break;
        }
        v_lo *= 0.5;
    }
    if ctx.best_partition(k, v_hi)?.0 > area {
        // numerical slack: nudge the cap up until it is feasible
        for _ in 0..60 {
            v_hi *= 1.0 + 1e-9;
            if ctx.best_partition(k, v_hi)?.0 <= area {
                break;
            }
        }
    }

    let v_star = {
        let mut call = |v: f64| {
            ctx.best_partition(k, v)
                .map(|(a, _)| a - area)
                .expect("partition evaluation failed")
        };
        // best_partition area decreases in v, so the residual is
        // decreasing: positive at v_lo, negative at v_hi
        brent_root(&mut call, v_hi, v_lo, config.value_rel_tol, 200)
    };

    let (_, parts) = ctx.best_partition(k, v_star)?;
    let mut leaf_areas = Vec::with_capacity(parts.len());
    for &j in &parts {
        leaf_areas.push(ctx.area_cost(j, v_star)?);
    }
    // absorb the residual of the value solve so areas sum exactly to A
    let scale = area / leaf_areas.iter().sum::<f64>();
    let mut leaves = Vec::with_capacity(parts.len());
    for (&j, &a_leaf) in parts.iter().zip(&leaf_areas) {
        let a = a_leaf * scale;
        leaves.push((j, a, ctx.rect_aspect(j, a)?));
    }
    let tree = build_tree(&leaves);
    let flattened = UnionSpec::new(
        leaves
            .iter()
            .map(|&(_, a, asp)| RectSpec::new(a, asp))
            .collect::<Result<Vec<_>>>()?,
    )?;
    // the realized value: the worst contribution after rescaling
    let mut value = f64::NEG_INFINITY;
    for &(j, a, _) in &leaves {
        value = value.max(ctx.rect_value(j, a)?);
    }
    Ok(UnionOptResult { k, area, alpha: bc, value, tree, flattened })
}

/// Report of [`equal_squares_optimality_check`].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EqualSquaresCheck {
    pub sufficient_condition_met: bool,
    pub dp_agrees: bool,
    pub union_value: f64,
    pub equal_squares_value: f64,
}

/// Checks whether k equal squares minimize: the explicit sufficient
/// condition α ≤ (π²/18)(7−2√10)·√(k/A), and whether the union search
/// lands on the equal-squares value within relative 1e-6.
pub fn equal_squares_optimality_check(
    k: usize,
    area: f64,
    alpha: f64,
) -> Result<EqualSquaresCheck> {
    let bc = BoundaryParam::robin(alpha)?;
    let thresholds = crate::bounds::thresholds(k, area)?;
    let opt = optimize_union(k, area, bc)?;
    let eqsq = equal_squares_eigenvalue(k, area, bc)?;
    Ok(EqualSquaresCheck {
        sufficient_condition_met: alpha <= thresholds.alpha_sufficient,
        dp_agrees: (opt.value - eqsq).abs() <= 1e-6 * eqsq,
        union_value: opt.value,
        equal_squares_value: eqsq,
    })
}
