//! Rectangle and union-of-rectangles spectra via separation of variables.
//!
//! A rectangle of area A and aspect a ≥ 1 has side lengths √A·a and √A/a,
//! and its eigenvalues are exactly the sums of interval eigenvalues of the
//! two sides: the (i,j) mode. Sorting the mode grid by value is done by
//! best-first expansion (the grid is monotone in both indices), so finding
//! the k-th eigenvalue costs O(k) interval solves, never a full
//! enumeration up to a guessed cap. Unions merge per-component spectra
//! lazily, caching each component's already-produced prefix.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{domain, Result};
use crate::interval::{
    count_below_inclusive, interval_eigenvalue_with_tol, BoundaryParam, IntervalSpec,
    DEFAULT_REL_TOL,
};

/// Rectangle of given area and aspect ratio a ≥ 1 (canonical orientation).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RectSpec {
    area: f64,
    aspect: f64,
}

impl RectSpec {
    pub fn new(area: f64, aspect: f64) -> Result<Self> {
        if !area.is_finite() || area <= 0.0 {
            return Err(domain(format!("rectangle area must be positive, got {area}")));
        }
        if !aspect.is_finite() || aspect < 1.0 {
            return Err(domain(format!("rectangle aspect must be at least 1, got {aspect}")));
        }
        Ok(RectSpec { area, aspect })
    }

    pub fn square(area: f64) -> Result<Self> {
        RectSpec::new(area, 1.0)
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn aspect(&self) -> f64 {
        self.aspect
    }

    /// Longer side, √A·a.
    pub fn side_long(&self) -> f64 {
        self.area.sqrt() * self.aspect
    }

    /// Shorter side, √A/a.
    pub fn side_short(&self) -> f64 {
        self.area.sqrt() / self.aspect
    }
}

impl<'de> Deserialize<'de> for RectSpec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            area: f64,
            aspect: f64,
        }
        let raw = Raw::deserialize(de)?;
        RectSpec::new(raw.area, raw.aspect).map_err(serde::de::Error::custom)
    }
}

/// Mode indices (i, j), both 1-based: i counts nodal intervals along the
/// longer side, j along the shorter side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModeIndex {
    pub i: usize,
    pub j: usize,
}

/// An eigenvalue with its mode provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeEigen {
    pub value: f64,
    pub mode: ModeIndex,
}

/// Finite disjoint union of rectangles with absolute areas.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnionSpec {
    components: Vec<RectSpec>,
}

impl UnionSpec {
    pub fn new(components: Vec<RectSpec>) -> Result<Self> {
        if components.is_empty() {
            return Err(domain("a union must have at least one rectangle"));
        }
        Ok(UnionSpec { components })
    }

    pub fn components(&self) -> &[RectSpec] {
        &self.components
    }

    pub fn total_area(&self) -> f64 {
        self.components.iter().map(RectSpec::area).sum()
    }
}

impl<'de> Deserialize<'de> for UnionSpec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            components: Vec<RectSpec>,
        }
        let raw = Raw::deserialize(de)?;
        UnionSpec::new(raw.components).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy)]
struct HeapNode {
    value: f64,
    i: usize,
    j: usize,
}

impl PartialEq for HeapNode {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for HeapNode {}
impl PartialOrd for HeapNode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapNode {
    // Min-first by value, then lexicographic (i, j): the deterministic
    // tie-break for degenerate eigenvalues.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .value
            .total_cmp(&self.value)
            .then(other.i.cmp(&self.i))
            .then(other.j.cmp(&self.j))
    }
}

/// Lazy sorted enumeration of a rectangle spectrum. Already-produced
/// eigenvalues are cached, so asking for increasing k reuses all work.
#[derive(Debug, Clone)]
pub struct RectSpectrum {
    rect: RectSpec,
    bc: BoundaryParam,
    rel_tol: f64,
    long_eigs: Vec<f64>,
    short_eigs: Vec<f64>,
    produced: Vec<ModeEigen>,
    frontier: BinaryHeap<HeapNode>,
}

impl RectSpectrum {
    pub fn new(rect: RectSpec, bc: BoundaryParam) -> Result<Self> {
        Self::with_tol(rect, bc, DEFAULT_REL_TOL)
    }

    pub fn with_tol(rect: RectSpec, bc: BoundaryParam, rel_tol: f64) -> Result<Self> {
        bc.validate()?;
        let mut spectrum = RectSpectrum {
            rect,
            bc,
            rel_tol,
            long_eigs: Vec::new(),
            short_eigs: Vec::new(),
            produced: Vec::new(),
            frontier: BinaryHeap::new(),
        };
        let v = spectrum.long_eig(1)? + spectrum.short_eig(1)?;
        spectrum.frontier.push(HeapNode { value: v, i: 1, j: 1 });
        Ok(spectrum)
    }

    pub fn rect(&self) -> RectSpec {
        self.rect
    }

    fn long_eig(&mut self, i: usize) -> Result<f64> {
        let side = IntervalSpec::new(self.rect.side_long())?;
        while self.long_eigs.len() < i {
            let idx = self.long_eigs.len() + 1;
            self.long_eigs
                .push(interval_eigenvalue_with_tol(side, self.bc, idx, self.rel_tol)?);
        }
        Ok(self.long_eigs[i - 1])
    }

    fn short_eig(&mut self, j: usize) -> Result<f64> {
        let side = IntervalSpec::new(self.rect.side_short())?;
        while self.short_eigs.len() < j {
            let idx = self.short_eigs.len() + 1;
            self.short_eigs
                .push(interval_eigenvalue_with_tol(side, self.bc, idx, self.rel_tol)?);
        }
        Ok(self.short_eigs[j - 1])
    }

    /// k-th smallest eigenvalue (1-based) with its mode.
    pub fn eigenvalue(&mut self, k: usize) -> Result<ModeEigen> {
        if k < 1 {
            return Err(domain("eigenvalue index k must be at least 1"));
        }
        while self.produced.len() < k {
            let node = self
                .frontier
                .pop()
                .expect("mode frontier exhausted: the mode grid is infinite");
            self.produced.push(ModeEigen {
                value: node.value,
                mode: ModeIndex { i: node.i, j: node.j },
            });
            // Each cell is pushed exactly once: (i, j+1) from (i, j), and
            // (i+1, 1) only from (i, 1).
            let right = self.long_eig(node.i)? + self.short_eig(node.j + 1)?;
            self.frontier.push(HeapNode { value: right, i: node.i, j: node.j + 1 });
            if node.j == 1 {
                let down = self.long_eig(node.i + 1)? + self.short_eig(1)?;
                self.frontier.push(HeapNode { value: down, i: node.i + 1, j: 1 });
            }
        }
        Ok(self.produced[k - 1])
    }
}

/// Eigenvalue of the (i, j) mode: the sum of the i-th eigenvalue of the
/// longer side and the j-th eigenvalue of the shorter side.
pub fn mode_eigenvalue(rect: RectSpec, bc: BoundaryParam, mode: ModeIndex) -> Result<ModeEigen> {
    if mode.i < 1 || mode.j < 1 {
        return Err(domain("mode indices must be at least 1"));
    }
    bc.validate()?;
    let vi = interval_eigenvalue_with_tol(IntervalSpec::new(rect.side_long())?, bc, mode.i, DEFAULT_REL_TOL)?;
    let vj = interval_eigenvalue_with_tol(IntervalSpec::new(rect.side_short())?, bc, mode.j, DEFAULT_REL_TOL)?;
    Ok(ModeEigen { value: vi + vj, mode })
}

/// k-th smallest rectangle eigenvalue with deterministic lexicographic
/// tie-break on (i, j).
pub fn rect_eigenvalue(rect: RectSpec, bc: BoundaryParam, k: usize) -> Result<ModeEigen> {
    RectSpectrum::new(rect, bc)?.eigenvalue(k)
}

/// Exact rectangle counting function #{k : λ_k ≤ λ}. Iterates eigenvalues
/// of the shorter side (the sparser of the two) and counts the longer
/// side's contribution in closed form.
pub fn rect_counting(rect: RectSpec, bc: BoundaryParam, lambda: f64) -> Result<usize> {
    if !lambda.is_finite() || lambda < 0.0 {
        return Err(domain(format!("counting threshold must be nonnegative, got {lambda}")));
    }
    bc.validate()?;
    let short = IntervalSpec::new(rect.side_short())?;
    let long_len = rect.side_long();
    let mut count = 0usize;
    let mut j = 1usize;
    loop {
        let vj = interval_eigenvalue_with_tol(short, bc, j, DEFAULT_REL_TOL)?;
        if vj > lambda {
            break;
        }
        count += count_below_inclusive(long_len, bc, lambda - vj);
        j += 1;
    }
    Ok(count)
}

/// One entry of a union spectrum: the value, which component produced it
/// (0-based), and its 1-based index within that component.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnionEigen {
    pub value: f64,
    pub component: usize,
    pub index: usize,
}

#[derive(Debug, Clone, Copy)]
struct MergeNode {
    value: f64,
    component: usize,
    index: usize,
}

impl PartialEq for MergeNode {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for MergeNode {}
impl PartialOrd for MergeNode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for MergeNode {
    // Min-first by value, then component index: the deterministic
    // tie-break across components.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .value
            .total_cmp(&self.value)
            .then(other.component.cmp(&self.component))
    }
}

/// Lazy k-way merge of the component spectra of a union.
#[derive(Debug, Clone)]
pub struct UnionSpectrum {
    components: Vec<RectSpectrum>,
    produced: Vec<UnionEigen>,
    frontier: BinaryHeap<MergeNode>,
}

impl UnionSpectrum {
    pub fn new(union: &UnionSpec, bc: BoundaryParam) -> Result<Self> {
        Self::with_tol(union, bc, DEFAULT_REL_TOL)
    }

    pub fn with_tol(union: &UnionSpec, bc: BoundaryParam, rel_tol: f64) -> Result<Self> {
        let mut components = Vec::with_capacity(union.components().len());
        for &rect in union.components() {
            components.push(RectSpectrum::with_tol(rect, bc, rel_tol)?);
        }
        let mut frontier = BinaryHeap::new();
        for (c, spec) in components.iter_mut().enumerate() {
            let v = spec.eigenvalue(1)?.value;
            frontier.push(MergeNode { value: v, component: c, index: 1 });
        }
        Ok(UnionSpectrum { components, produced: Vec::new(), frontier })
    }

    pub fn eigenvalue(&mut self, k: usize) -> Result<UnionEigen> {
        if k < 1 {
            return Err(domain("eigenvalue index k must be at least 1"));
        }
        while self.produced.len() < k {
            let node = self.frontier.pop().expect("union merge frontier exhausted");
            self.produced.push(UnionEigen {
                value: node.value,
                component: node.component,
                index: node.index,
            });
            let next = self.components[node.component].eigenvalue(node.index + 1)?;
            self.frontier.push(MergeNode {
                value: next.value,
                component: node.component,
                index: node.index + 1,
            });
        }
        Ok(self.produced[k - 1])
    }
}

/// k-th smallest eigenvalue of a disjoint union of rectangles.
pub fn union_eigenvalue(union: &UnionSpec, bc: BoundaryParam, k: usize) -> Result<UnionEigen> {
    UnionSpectrum::new(union, bc)?.eigenvalue(k)
}

/// k-th eigenvalue of the disjoint union of k equal squares of total area
/// A: twice the first interval eigenvalue at side length √(A/k).
pub fn equal_squares_eigenvalue(k: usize, area: f64, bc: BoundaryParam) -> Result<f64> {
    if k < 1 {
        return Err(domain("k must be at least 1"));
    }
    if !area.is_finite() || area <= 0.0 {
        return Err(domain(format!("area must be positive, got {area}")));
    }
    let side = IntervalSpec::new((area / k as f64).sqrt())?;
    Ok(2.0 * interval_eigenvalue_with_tol(side, bc, 1, DEFAULT_REL_TOL)?)
}

/// Whether the k-th eigenvalue of the rectangle is realized by the (k, 1)
/// mode. Guaranteed true for aspect ≥ √k.
pub fn is_k1_mode(rect: RectSpec, bc: BoundaryParam, k: usize) -> Result<bool> {
    let eig = rect_eigenvalue(rect, bc, k)?;
    Ok(eig.mode == ModeIndex { i: k, j: 1 })
}
