//! Young–Fenchel (Legendre) conjugation.
//!
//! `g*(y) = sup_x (x·y − g(x))`.
//!
//! Sampled functions are conjugated exactly on their samples: the lower convex
//! hull of the finite samples is built with exact orientation predicates, and
//! each query walks the hull. Every candidate value is evaluated as
//! `fma(x, y, -g)`, a single correctly rounded operation, so rounding is
//! monotone in the exact value and the hull maximum coincides bit for bit with
//! the maximum over all samples.
//!
//! Evaluable functions (closures) are conjugated pointwise on an adaptive
//! window: sample, expand while the maximiser sits on the window edge, then
//! refine the bracket around the best sample with golden-section search.

use rayon::prelude::*;
use robust::{orient2d, Coord};

use crate::error::{Error, Result};

/// Values of a function on a strictly increasing abscissa grid. `+inf` marks
/// points outside the domain.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction1D {
    xs: Vec<f64>,
    gs: Vec<f64>,
}

impl SampledFunction1D {
    pub fn new(xs: Vec<f64>, gs: Vec<f64>) -> Result<Self> {
        if xs.len() != gs.len() {
            return Err(Error::InvalidInput(format!(
                "{} abscissae but {} values",
                xs.len(),
                gs.len()
            )));
        }
        if xs.len() < 2 {
            return Err(Error::DegenerateDomain("need at least two samples".into()));
        }
        check_strictly_increasing(&xs, "xs")?;
        if gs.iter().any(|g| g.is_nan() || *g == f64::NEG_INFINITY) {
            return Err(Error::InvalidInput("g values must be finite or +inf".into()));
        }
        if gs.iter().filter(|g| g.is_finite()).count() < 2 {
            return Err(Error::DegenerateDomain(
                "fewer than two finite samples".into(),
            ));
        }
        Ok(SampledFunction1D { xs, gs })
    }

    pub fn from_fn<F: Fn(f64) -> f64>(xs: Vec<f64>, f: F) -> Result<Self> {
        let gs = xs.iter().map(|&x| f(x)).collect();
        Self::new(xs, gs)
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn gs(&self) -> &[f64] {
        &self.gs
    }

    pub fn window(&self) -> (f64, f64) {
        (self.xs[0], self.xs[self.xs.len() - 1])
    }

    /// Piecewise-linear interpolation between samples; `+inf` if either
    /// neighbour is `+inf`.
    pub fn interpolate(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.window();
        if !(lo..=hi).contains(&x) {
            return Err(Error::Extrapolation { value: x, lo, hi });
        }
        let j = self.xs.partition_point(|&s| s <= x);
        if j == 0 {
            return Ok(self.gs[0]);
        }
        let i = j - 1;
        if self.xs[i] == x || i + 1 == self.xs.len() {
            return Ok(self.gs[i]);
        }
        let (x0, x1, g0, g1) = (self.xs[i], self.xs[i + 1], self.gs[i], self.gs[i + 1]);
        if !g0.is_finite() || !g1.is_finite() {
            return Ok(f64::INFINITY);
        }
        let t = (x - x0) / (x1 - x0);
        Ok(g0 + t * (g1 - g0))
    }

    /// Indices of the vertices of the lower convex hull of the finite samples.
    /// Collinear interior points are dropped.
    pub fn lower_hull(&self) -> Vec<usize> {
        let mut hull: Vec<usize> = Vec::new();
        for (i, g) in self.gs.iter().enumerate() {
            if !g.is_finite() {
                continue;
            }
            while hull.len() >= 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if orient2d(self.coord(a), self.coord(b), self.coord(i)) <= 0.0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(i);
        }
        hull
    }

    fn coord(&self, i: usize) -> Coord<f64> {
        Coord {
            x: self.xs[i],
            y: self.gs[i],
        }
    }
}

/// Conjugate values on a query grid together with the maximising abscissae.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjugateTable {
    pub ys: Vec<f64>,
    pub gstars: Vec<f64>,
    pub argmax_xs: Vec<f64>,
}

impl ConjugateTable {
    /// Value-form discrete convexity: each interior value lies at most
    /// `tol·max|g*|` above the chord through its neighbours.
    pub fn is_convex(&self, tol: f64) -> bool {
        let finite: Vec<(f64, f64)> = self
            .ys
            .iter()
            .zip(&self.gstars)
            .filter(|(_, g)| g.is_finite())
            .map(|(y, g)| (*y, *g))
            .collect();
        let scale = finite.iter().map(|(_, g)| g.abs()).fold(1.0_f64, f64::max);
        finite.windows(3).all(|w| {
            let (y0, g0) = w[0];
            let (y1, g1) = w[1];
            let (y2, g2) = w[2];
            let t = (y1 - y0) / (y2 - y0);
            let chord = g0 + t * (g2 - g0);
            g1 <= chord + tol * scale
        })
    }

    pub fn len(&self) -> usize {
        self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ys.is_empty()
    }
}

pub const DEFAULT_CONVEXITY_TOL: f64 = 1e-12;

fn check_strictly_increasing(v: &[f64], what: &str) -> Result<()> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput(format!("{what} must be finite")));
    }
    if v.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(format!("{what} must be strictly increasing")));
    }
    Ok(())
}

#[inline]
fn affine_gap(x: f64, y: f64, g: f64) -> f64 {
    x.mul_add(y, -g)
}

/// Discrete conjugate `max_i (xs[i]·y − gs[i])` for every query.
///
/// Ties are broken toward the smallest abscissa among hull vertices.
pub fn conjugate_1d(g: &SampledFunction1D, ys: &[f64]) -> Result<ConjugateTable> {
    check_strictly_increasing(ys, "ys")?;
    let hull = g.lower_hull();
    let val = |k: usize, y: f64| {
        let i = hull[k];
        affine_gap(g.xs[i], y, g.gs[i])
    };
    let mut gstars = Vec::with_capacity(ys.len());
    let mut argmax_xs = Vec::with_capacity(ys.len());
    let mut p = 0usize;
    for &y in ys {
        // Hull values are weakly unimodal in the vertex index; from any start,
        // a forward climb followed by a backward climb lands on the first
        // vertex of the top plateau.
        while p + 1 < hull.len() && val(p + 1, y) >= val(p, y) {
            p += 1;
        }
        while p > 0 && val(p - 1, y) >= val(p, y) {
            p -= 1;
        }
        gstars.push(val(p, y));
        argmax_xs.push(g.xs[hull[p]]);
    }
    Ok(ConjugateTable {
        ys: ys.to_vec(),
        gstars,
        argmax_xs,
    })
}

/// `(g*)*` on `xs_out`: the convex envelope of the samples, `+inf` outside the
/// span of the finite samples. `argmax_xs` holds the maximising slope, i.e. the
/// left slope of the envelope at each point (`-inf` at the left end).
pub fn biconjugate_1d(g: &SampledFunction1D, xs_out: &[f64]) -> Result<ConjugateTable> {
    check_strictly_increasing(xs_out, "xs_out")?;
    let hull = g.lower_hull();
    let hx: Vec<f64> = hull.iter().map(|&i| g.xs[i]).collect();
    let hg: Vec<f64> = hull.iter().map(|&i| g.gs[i]).collect();
    let (lo, hi) = (hx[0], hx[hx.len() - 1]);
    let mut values = Vec::with_capacity(xs_out.len());
    let mut slopes = Vec::with_capacity(xs_out.len());
    for &x in xs_out {
        if x < lo || x > hi {
            values.push(f64::INFINITY);
            slopes.push(f64::NAN);
            continue;
        }
        // first vertex with abscissa >= x
        let j = hx.partition_point(|&s| s < x);
        if hx[j] == x {
            values.push(hg[j]);
            slopes.push(if j == 0 {
                f64::NEG_INFINITY
            } else {
                (hg[j] - hg[j - 1]) / (hx[j] - hx[j - 1])
            });
            continue;
        }
        let (x0, x1, g0, g1) = (hx[j - 1], hx[j], hg[j - 1], hg[j]);
        let t = (x - x0) / (x1 - x0);
        values.push(g0 + t * (g1 - g0));
        slopes.push((g1 - g0) / (x1 - x0));
    }
    Ok(ConjugateTable {
        ys: xs_out.to_vec(),
        gstars: values,
        argmax_xs: slopes,
    })
}

/// `g(γx) + g*(y/γ) − x·y`, nonnegative by the Young inequality.
///
/// `g(γx)` is interpolated linearly, `g*(y/γ)` is the exact discrete conjugate.
pub fn young_gap(g: &SampledFunction1D, x: f64, y: f64, gamma: f64) -> Result<f64> {
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(Error::InvalidInput(format!("gamma must be positive, got {gamma}")));
    }
    let lhs = g.interpolate(gamma * x)?;
    let conj = conjugate_1d(g, &[y / gamma])?;
    Ok(lhs + conj.gstars[0] - x * y)
}

/// Window policy for conjugating an evaluable function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugateOptions {
    pub initial_half_width: f64,
    /// Hard cap on `|x − centre|`; 700 keeps `e^x` representable.
    pub cap: f64,
    pub grid_points: usize,
    /// Relative bracket width at which golden-section refinement stops.
    pub refine_tol: f64,
}

impl Default for ConjugateOptions {
    fn default() -> Self {
        ConjugateOptions {
            initial_half_width: 8.0,
            cap: 700.0,
            grid_points: 129,
            refine_tol: 1e-13,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugatePoint {
    pub value: f64,
    pub argmax: f64,
    /// The maximiser stayed on the window edge at the hard cap; the value is a
    /// lower estimate of the supremum.
    pub saturated: bool,
}

/// `sup_{x ∈ domain} (x·y − f(x))` for an evaluable `f`, with the adaptive
/// window policy of [`ConjugateOptions`].
///
/// The window is centred at the point of `domain` nearest to zero and doubled
/// while the best sample sits on a window edge that is not a domain edge. When
/// a doubling does not improve the best value (a flat tail, e.g. `y = 0` for
/// a function constant near `-inf`), the current value is accepted.
pub fn conjugate_point<F>(f: &F, y: f64, domain: (f64, f64), opts: &ConjugateOptions) -> ConjugatePoint
where
    F: Fn(f64) -> f64 + ?Sized,
{
    let objective = |x: f64| {
        let v = y * x - f(x);
        if v.is_nan() {
            f64::NEG_INFINITY
        } else {
            v
        }
    };
    let centre = 0.0_f64.clamp(domain.0, domain.1);
    let n = opts.grid_points.max(5);
    let mut half = opts.initial_half_width.min(opts.cap);
    let mut previous_best: Option<f64> = None;
    loop {
        let lo = (centre - half).max(domain.0);
        let hi = (centre + half).min(domain.1);
        if !(hi > lo) {
            let v = objective(lo);
            return ConjugatePoint { value: v, argmax: lo, saturated: false };
        }
        let step = (hi - lo) / (n - 1) as f64;
        let grid_x = |i: usize| if i == n - 1 { hi } else { lo + step * i as f64 };
        let mut best_i = 0;
        let mut best_v = f64::NEG_INFINITY;
        for i in 0..n {
            let v = objective(grid_x(i));
            if v > best_v {
                best_v = v;
                best_i = i;
            }
        }
        let on_left_edge = best_i == 0 && lo > domain.0;
        let on_right_edge = best_i == n - 1 && hi < domain.1;
        let interior = !(on_left_edge || on_right_edge);
        let flat = previous_best
            .map(|p| best_v - p <= 1e-15 * best_v.abs().max(1.0))
            .unwrap_or(false);
        let at_cap = half >= opts.cap;
        if interior || flat || at_cap {
            let a = grid_x(best_i.saturating_sub(1));
            let b = grid_x((best_i + 1).min(n - 1));
            let (xr, vr) = golden_max(&objective, a, b, opts.refine_tol);
            let (value, argmax) = if vr > best_v { (vr, xr) } else { (best_v, grid_x(best_i)) };
            return ConjugatePoint {
                value,
                argmax,
                saturated: !interior && !flat && at_cap,
            };
        }
        previous_best = Some(best_v);
        half = (half * 2.0).min(opts.cap);
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section maximisation of a unimodal function on `[a, b]`.
pub(crate) fn golden_max<F: Fn(f64) -> f64 + ?Sized>(f: &F, mut a: f64, mut b: f64, rel_tol: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..200 {
        if (b - a).abs() <= rel_tol * (1.0 + a.abs().max(b.abs())) {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Largest product-grid table `conjugate_nd` accepts (input or output cells).
pub const MAX_ND_CELLS: usize = 1 << 24;
/// Largest brute-force work (input cells × output cells).
pub const MAX_ND_WORK: u128 = 1 << 36;
pub const MAX_DIMENSION: usize = 3;

/// A function sampled on a product grid of dimension `d ≤ 3`, row-major
/// (last axis fastest). A separable function keeps its per-axis parts so that
/// its conjugate can be formed axis by axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunctionND {
    grids: Vec<Vec<f64>>,
    values: Vec<f64>,
    parts: Option<Vec<SampledFunction1D>>,
}

impl SampledFunctionND {
    pub fn new(grids: Vec<Vec<f64>>, values: Vec<f64>) -> Result<Self> {
        validate_grids(&grids)?;
        let cells = cell_count(&grids)?;
        if values.len() != cells {
            return Err(Error::InvalidInput(format!(
                "value table has {} entries, grid has {cells}",
                values.len()
            )));
        }
        if values.iter().any(|v| v.is_nan() || *v == f64::NEG_INFINITY) {
            return Err(Error::InvalidInput("values must be finite or +inf".into()));
        }
        Ok(SampledFunctionND { grids, values, parts: None })
    }

    pub fn from_fn<F: Fn(&[f64]) -> f64>(grids: Vec<Vec<f64>>, f: F) -> Result<Self> {
        validate_grids(&grids)?;
        let cells = cell_count(&grids)?;
        let mut values = Vec::with_capacity(cells);
        let mut point = vec![0.0; grids.len()];
        for flat in 0..cells {
            unflatten(&grids, flat, |axis, i| point[axis] = grids[axis][i]);
            values.push(f(&point));
        }
        Self::new(grids, values)
    }

    /// `g(x) = Σ_j parts[j](x_j)` on the product of the parts' grids.
    pub fn separable(parts: Vec<SampledFunction1D>) -> Result<Self> {
        let grids: Vec<Vec<f64>> = parts.iter().map(|p| p.xs().to_vec()).collect();
        let mut table = Self::from_fn(grids, |x| {
            parts
                .iter()
                .zip(x)
                .map(|(p, xi)| {
                    let i = p.xs().partition_point(|s| s < xi);
                    p.gs()[i]
                })
                .sum()
        })?;
        table.parts = Some(parts);
        Ok(table)
    }

    pub fn dimension(&self) -> usize {
        self.grids.len()
    }

    pub fn grids(&self) -> &[Vec<f64>] {
        &self.grids
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn is_separable(&self) -> bool {
        self.parts.is_some()
    }

    pub fn parts(&self) -> Option<&[SampledFunction1D]> {
        self.parts.as_deref()
    }

    pub fn value_at(&self, index: &[usize]) -> f64 {
        let mut flat = 0;
        for (axis, &i) in index.iter().enumerate() {
            flat = flat * self.grids[axis].len() + i;
        }
        self.values[flat]
    }
}

fn validate_grids(grids: &[Vec<f64>]) -> Result<()> {
    if grids.is_empty() {
        return Err(Error::InvalidInput("dimension must be at least 1".into()));
    }
    if grids.len() > MAX_DIMENSION {
        return Err(Error::Unsupported(format!(
            "dimension {} exceeds {MAX_DIMENSION}",
            grids.len()
        )));
    }
    for (axis, g) in grids.iter().enumerate() {
        if g.is_empty() {
            return Err(Error::InvalidInput(format!("axis {axis} grid is empty")));
        }
        check_strictly_increasing(g, &format!("axis {axis} grid"))?;
    }
    Ok(())
}

fn cell_count(grids: &[Vec<f64>]) -> Result<usize> {
    let mut cells: usize = 1;
    for g in grids {
        cells = cells
            .checked_mul(g.len())
            .filter(|&c| c <= MAX_ND_CELLS)
            .ok_or_else(|| Error::Resource(format!("product grid exceeds {MAX_ND_CELLS} cells")))?;
    }
    Ok(cells)
}

fn unflatten<F: FnMut(usize, usize)>(grids: &[Vec<f64>], mut flat: usize, mut visit: F) {
    for axis in (0..grids.len()).rev() {
        let len = grids[axis].len();
        visit(axis, flat % len);
        flat /= len;
    }
}

/// Conjugate of a product-grid function on a product query grid:
/// `g*(y) = max_x (⟨x, y⟩ − g(x))`.
///
/// Separable inputs are conjugated axis by axis and the result is again
/// separable. Anything else is maximised by brute force over the whole input
/// grid, parallel over query cells.
pub fn conjugate_nd(g: &SampledFunctionND, query: &[Vec<f64>]) -> Result<SampledFunctionND> {
    validate_grids(query)?;
    if query.len() != g.dimension() {
        return Err(Error::InvalidInput(format!(
            "query dimension {} does not match function dimension {}",
            query.len(),
            g.dimension()
        )));
    }
    let out_cells = cell_count(query)?;
    if let Some(parts) = &g.parts {
        let conj: Vec<SampledFunction1D> = parts
            .iter()
            .zip(query)
            .map(|(p, ys)| {
                let t = conjugate_1d(p, ys)?;
                Ok(SampledFunction1D { xs: t.ys, gs: t.gstars })
            })
            .collect::<Result<_>>()?;
        return SampledFunctionND::separable(conj);
    }
    let in_cells = g.values.len();
    if (in_cells as u128) * (out_cells as u128) > MAX_ND_WORK {
        return Err(Error::Resource(format!(
            "brute-force conjugate needs {in_cells} x {out_cells} evaluations"
        )));
    }
    let d = g.dimension();
    let finite: Vec<(Vec<f64>, f64)> = (0..in_cells)
        .filter(|&flat| g.values[flat].is_finite())
        .map(|flat| {
            let mut x = vec![0.0; d];
            unflatten(&g.grids, flat, |axis, i| x[axis] = g.grids[axis][i]);
            (x, g.values[flat])
        })
        .collect();
    if finite.is_empty() {
        return Err(Error::DegenerateDomain("no finite samples".into()));
    }
    let values: Vec<f64> = (0..out_cells)
        .into_par_iter()
        .map(|flat| {
            let mut y = vec![0.0; d];
            unflatten(query, flat, |axis, i| y[axis] = query[axis][i]);
            let mut best = f64::NEG_INFINITY;
            for (x, gx) in &finite {
                let mut dot = 0.0;
                for j in 0..d {
                    dot += x[j] * y[j];
                }
                let v = dot - gx;
                if v > best {
                    best = v;
                }
            }
            best
        })
        .collect();
    SampledFunctionND::new(query.to_vec(), values)
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let step = (b - a) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { b } else { a + step * i as f64 })
                .collect()
        }
    }
}
