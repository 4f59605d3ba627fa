//! Bilateral estimates between the maximal function and the coefficients.
//!
//! * Coefficient side: `ln M_f(e^v) ≤ Λ(v)` for all `v` implies
//!   `ln|c_n| ≤ −Λ*(n)` ([`coeff_upper_bound`]).
//! * Maximal-function side: `|c_n| ≤ e^{−Q*(n)}` for a convex growth profile
//!   `Q` implies `ln M_f(e^v) ≤ ln R_Q(v) ≤ ln Y(ε) + Q(v/(1−ε))` for every
//!   `ε ∈ (0,1)`, where `Y = min(K, U)` and
//!
//!   ```text
//!   K(ε) = Σ_n exp(−ε·Q*(n))
//!   U(ε) = Σ_n exp(Q*((1−ε)n) − Q*(n))
//!   ```
//!
//!   ([`max_function_upper_bound`], [`EpsilonScan`]).
//! * Tauberian diagnostics compare `ln M_f(r)/Λ(ln r)` with
//!   `|ln|c_n||/Λ*(n)` ([`tauberian_report`]); limits are never asserted.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::entire::{CoefficientSequence, MaxFunctionEvaluator, SignPattern};
use crate::error::{Error, Result};
use crate::legendre::{conjugate_1d, conjugate_point, golden_max, ConjugateOptions, ConjugatePoint, SampledFunction1D};
use crate::logsum::{sum_log_series, SeriesOptions, SeriesOutcome};

type ProfileFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A growth profile `Λ(v)`, standing for `ln M_f(e^v)` or a majorant of it.
///
/// The same type serves as the profile `Q` whose conjugate bounds the
/// coefficients in the reverse direction.
#[derive(Clone)]
pub enum GrowthFunction {
    /// `c·e^{ρv}`, i.e. `ln M(r) = c·r^ρ`.
    PowerOfExp { c: f64, rho: f64 },
    /// `c·max(v, 0)^m`, i.e. `ln M(r) = c·(ln r)^m` for `r ≥ 1`.
    PowerLog { c: f64, m: f64 },
    /// `c5·exp(c6·e^v)`, i.e. `ln M(r) = c5·e^{c6·r}`.
    ExpOfExp { c5: f64, c6: f64 },
    /// Linear interpolation of samples, `+inf` outside the sampled window.
    Sampled(SampledFunction1D),
    Custom {
        name: String,
        f: ProfileFn,
        domain: (f64, f64),
        convex: bool,
    },
}

impl fmt::Debug for GrowthFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn positive(name: &str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidGrowth(format!("{name} must be positive and finite, got {x}")))
    }
}

impl GrowthFunction {
    pub fn power_of_exp(c: f64, rho: f64) -> Result<Self> {
        positive("C", c)?;
        positive("rho", rho)?;
        Ok(GrowthFunction::PowerOfExp { c, rho })
    }

    pub fn power_log(c: f64, m: f64) -> Result<Self> {
        positive("C", c)?;
        if !(m >= 1.0) || !m.is_finite() {
            return Err(Error::InvalidGrowth(format!("m must be at least 1, got {m}")));
        }
        Ok(GrowthFunction::PowerLog { c, m })
    }

    pub fn exp_of_exp(c5: f64, c6: f64) -> Result<Self> {
        positive("C5", c5)?;
        positive("C6", c6)?;
        Ok(GrowthFunction::ExpOfExp { c5, c6 })
    }

    pub fn sampled(samples: SampledFunction1D) -> Self {
        GrowthFunction::Sampled(samples)
    }

    pub fn custom<F>(name: impl Into<String>, convex: bool, f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        GrowthFunction::Custom {
            name: name.into(),
            f: Arc::new(f),
            domain: (f64::NEG_INFINITY, f64::INFINITY),
            convex,
        }
    }

    /// Restricts a custom profile to `[lo, hi]` (`+inf` outside).
    pub fn with_domain(self, lo: f64, hi: f64) -> Self {
        match self {
            GrowthFunction::Custom { name, f, convex, .. } => GrowthFunction::Custom { name, f, domain: (lo, hi), convex },
            other => other,
        }
    }

    /// Growth profile of a coefficient sequence, sampled on `v_grid`:
    /// `Λ(v) = ln M̂_f(e^v)`.
    pub fn from_series(f: &CoefficientSequence, v_grid: Vec<f64>) -> Result<Self> {
        let ev = MaxFunctionEvaluator::new(f.clone())?;
        let gs = v_grid
            .iter()
            .map(|&v| ev.log_max_at_log_radius(v).map(|m| m.log_value))
            .collect::<Result<Vec<_>>>()?;
        Ok(GrowthFunction::Sampled(SampledFunction1D::new(v_grid, gs)?))
    }

    pub fn name(&self) -> String {
        match self {
            GrowthFunction::PowerOfExp { c, rho } => format!("{c}*exp({rho}*v)"),
            GrowthFunction::PowerLog { c, m } => format!("{c}*max(v,0)^{m}"),
            GrowthFunction::ExpOfExp { c5, c6 } => format!("{c5}*exp({c6}*exp(v))"),
            GrowthFunction::Sampled(s) => format!("sampled[{} pts]", s.xs().len()),
            GrowthFunction::Custom { name, .. } => name.clone(),
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        match self {
            GrowthFunction::Sampled(s) => s.window(),
            GrowthFunction::Custom { domain, .. } => *domain,
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    pub fn is_convex(&self) -> bool {
        match self {
            GrowthFunction::Sampled(s) => {
                let hull = s.lower_hull();
                hull.len() == s.gs().iter().filter(|g| g.is_finite()).count()
            }
            GrowthFunction::Custom { convex, .. } => *convex,
            _ => true,
        }
    }

    pub fn eval(&self, v: f64) -> f64 {
        let (lo, hi) = self.domain();
        if v < lo || v > hi || v.is_nan() {
            return f64::INFINITY;
        }
        match self {
            GrowthFunction::PowerOfExp { c, rho } => c * (rho * v).exp(),
            GrowthFunction::PowerLog { c, m } => c * v.max(0.0).powf(*m),
            GrowthFunction::ExpOfExp { c5, c6 } => c5 * (c6 * v.exp()).exp(),
            GrowthFunction::Sampled(s) => s.interpolate(v).unwrap_or(f64::INFINITY),
            GrowthFunction::Custom { f, .. } => f(v),
        }
    }

    /// `Λ*(y)`. Sampled profiles use the exact discrete conjugate and report
    /// saturation when the maximiser is a window end; evaluable profiles use
    /// the adaptive window of [`conjugate_point`].
    pub fn conjugate(&self, y: f64, opts: &ConjugateOptions) -> ConjugatePoint {
        match self {
            GrowthFunction::Sampled(s) => {
                let t = conjugate_1d(s, &[y]).expect("single finite query is valid");
                let (lo, hi) = s.window();
                let arg = t.argmax_xs[0];
                ConjugatePoint {
                    value: t.gstars[0],
                    argmax: arg,
                    saturated: arg == lo || arg == hi,
                }
            }
            // polynomial growth cannot overflow, so the window may keep doubling
            GrowthFunction::PowerLog { .. } => {
                let wide = ConjugateOptions { cap: f64::MAX, ..*opts };
                conjugate_point(&|v| self.eval(v), y, self.domain(), &wide)
            }
            _ => conjugate_point(&|v| self.eval(v), y, self.domain(), opts),
        }
    }
}

/// A log-scale bound with its saturation flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBound {
    pub value: f64,
    pub argmax: f64,
    /// The conjugate's maximiser hit the hard window cap: the bound is still
    /// valid but possibly loose.
    pub saturated: bool,
}

/// `−Λ*(n)`: for any `f` with `ln M_f(e^v) ≤ Λ(v)`, `ln|c_n| ≤ −Λ*(n)`.
pub fn coeff_upper_bound(lambda: &GrowthFunction, n: usize) -> LogBound {
    coeff_upper_bound_with(lambda, n, &ConjugateOptions::default())
}

pub fn coeff_upper_bound_with(lambda: &GrowthFunction, n: usize, opts: &ConjugateOptions) -> LogBound {
    let p = lambda.conjugate(n as f64, opts);
    LogBound {
        value: -p.value,
        argmax: p.argmax,
        saturated: p.saturated,
    }
}

/// Coefficients `c_n = e^{−Λ*(n)}`, the largest sequence the coefficient bound
/// admits.
pub fn extremal_coefficients(lambda: &GrowthFunction) -> CoefficientSequence {
    let lambda = lambda.clone();
    CoefficientSequence::from_rule(format!("extremal[{}]", lambda.name()), SignPattern::Nonnegative, move |n| {
        Some(coeff_upper_bound(&lambda, n).value)
    })
}

/// Evaluates a conjugate `Q*` at real points, with a fast path on integers.
pub trait ConjugateFn: Sync {
    fn at(&self, y: f64) -> f64;

    fn at_index(&self, n: usize) -> f64 {
        self.at(n as f64)
    }
}

impl<F: Fn(f64) -> f64 + Sync> ConjugateFn for F {
    fn at(&self, y: f64) -> f64 {
        self(y)
    }
}

/// Numerical conjugate of a growth profile with integer values cached.
pub struct ProfileConjugate<'a> {
    profile: &'a GrowthFunction,
    opts: ConjugateOptions,
    integers: Vec<f64>,
}

impl<'a> ProfileConjugate<'a> {
    pub fn new(profile: &'a GrowthFunction, opts: ConjugateOptions, cache_len: usize) -> Self {
        let integers = (0..cache_len)
            .into_par_iter()
            .map(|n| profile.conjugate(n as f64, &opts).value)
            .collect();
        ProfileConjugate { profile, opts, integers }
    }

    pub fn profile(&self) -> &GrowthFunction {
        self.profile
    }

    pub fn cached(&self) -> &[f64] {
        &self.integers
    }
}

impl ConjugateFn for ProfileConjugate<'_> {
    fn at(&self, y: f64) -> f64 {
        if y >= 0.0 && y.fract() == 0.0 && (y as usize) < self.integers.len() {
            return self.integers[y as usize];
        }
        self.profile.conjugate(y, &self.opts).value
    }

    fn at_index(&self, n: usize) -> f64 {
        match self.integers.get(n) {
            Some(v) => *v,
            None => self.profile.conjugate(n as f64, &self.opts).value,
        }
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if (0.0..1.0).contains(&eps) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("eps must lie in [0, 1), got {eps}")))
    }
}

/// `ln K(ε) = ln Σ_n exp(−ε·(Q*(n) + shift))`, `+inf` on divergence.
pub fn ln_k_sum<Q: ConjugateFn + ?Sized>(qstar: &Q, eps: f64, shift: f64, opts: &SeriesOptions) -> Result<f64> {
    check_eps(eps)?;
    Ok(sum_log_series(opts, |n| -eps * (qstar.at_index(n) + shift)).log_value())
}

/// `ln U(ε) = ln Σ_n exp(Q*((1−ε)n) − Q*(n))`, `+inf` on divergence.
pub fn ln_u_sum<Q: ConjugateFn + ?Sized>(qstar: &Q, eps: f64, opts: &SeriesOptions) -> Result<f64> {
    check_eps(eps)?;
    Ok(sum_log_series(opts, |n| {
        let t = qstar.at((1.0 - eps) * n as f64) - qstar.at_index(n);
        if t.is_nan() {
            f64::NEG_INFINITY
        } else {
            t
        }
    })
    .log_value())
}

/// `K(ε) = Σ_n exp(−ε·Q*(n))`; `+inf` marks divergence.
pub fn k_sum<Q: ConjugateFn + ?Sized>(qstar: &Q, eps: f64) -> Result<f64> {
    Ok(ln_k_sum(qstar, eps, 0.0, &SeriesOptions::default())?.exp())
}

/// `U(ε) = Σ_n exp(Q*((1−ε)n) − Q*(n))`; `+inf` marks divergence.
pub fn u_sum<Q: ConjugateFn + ?Sized>(qstar: &Q, eps: f64) -> Result<f64> {
    Ok(ln_u_sum(qstar, eps, &SeriesOptions::default())?.exp())
}

/// `ln R(v) = ln Σ_n exp(n·v − P(n))` for a coefficient exponent `P`
/// (`+inf` allowed for vanishing coefficients). Returns `+inf` on divergence.
pub fn log_r_sum<P: Fn(usize) -> f64>(p: P, v: f64, opts: &SeriesOptions) -> f64 {
    match sum_log_series(opts, |n| {
        let e = p(n);
        if e == f64::INFINITY {
            f64::NEG_INFINITY
        } else {
            n as f64 * v - e
        }
    }) {
        SeriesOutcome::Converged { log_sum, .. } => log_sum,
        _ => f64::INFINITY,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundOptions {
    pub eps_grid: Vec<f64>,
    pub series: SeriesOptions,
    pub conjugate: ConjugateOptions,
    /// Golden-section refinement of `ε` around the best grid point.
    pub refine: bool,
    /// Integer conjugate values computed up front.
    pub cache_len: usize,
}

/// `ε = 0.005·j`, `j = 1..=199`.
pub fn default_eps_grid() -> Vec<f64> {
    eps_grid(199)
}

/// `points` evenly spaced values strictly inside `(0, 1)`.
pub fn eps_grid(points: usize) -> Vec<f64> {
    let h = 1.0 / (points + 1) as f64;
    (1..=points).map(|j| j as f64 * h).collect()
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            eps_grid: default_eps_grid(),
            series: SeriesOptions::default(),
            conjugate: ConjugateOptions::default(),
            refine: true,
            cache_len: 4096,
        }
    }
}

/// `K`, `U`, `Y` over the `ε` grid and the minimiser of the final bound.
///
/// `K` is computed with the normalised conjugate `Q*(n) + shift ≥ 0`; `U` is
/// invariant under the shift. The bound is
/// `ln Y(ε*) + max(Q_s(w), (1−ε*)·Q_s(w)) − shift` with `w = v/(1−ε*)` and
/// `Q_s = Q + shift`, which reduces to `ln S0 + Q(w)` whenever `Q_s(w) ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonReport {
    pub eps_grid: Vec<f64>,
    pub k_vals: Vec<f64>,
    pub u_vals: Vec<f64>,
    pub y_vals: Vec<f64>,
    pub eps_star: f64,
    /// `Y(ε*)`.
    pub s0: f64,
    pub shift: f64,
    pub log_bound: f64,
    /// `1/(1−ε*)`, the dilation constant of the bound.
    pub c_eff: f64,
}

/// The `ε`-scan of `K`, `U`, `Y` for a profile `Q`, reusable across `v`.
pub struct EpsilonScan<'a> {
    qstar: ProfileConjugate<'a>,
    opts: BoundOptions,
    shift: f64,
    ln_k: Vec<f64>,
    ln_u: Vec<f64>,
}

impl<'a> EpsilonScan<'a> {
    pub fn new(q: &'a GrowthFunction, opts: BoundOptions) -> Result<Self> {
        check_eps_grid(&opts.eps_grid)?;
        let qstar = ProfileConjugate::new(q, opts.conjugate, opts.cache_len);
        let shift = normalisation_shift(&qstar);
        let ln_k: Vec<f64> = opts
            .eps_grid
            .par_iter()
            .map(|&e| ln_k_sum(&qstar, e, shift, &opts.series))
            .collect::<Result<_>>()?;
        let ln_u: Vec<f64> = opts
            .eps_grid
            .par_iter()
            .map(|&e| ln_u_sum(&qstar, e, &opts.series))
            .collect::<Result<_>>()?;
        Ok(EpsilonScan { qstar, opts, shift, ln_k, ln_u })
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    pub fn qstar(&self) -> &ProfileConjugate<'a> {
        &self.qstar
    }

    fn ln_y_at(&self, eps: f64) -> f64 {
        let k = ln_k_sum(&self.qstar, eps, self.shift, &self.opts.series).unwrap_or(f64::INFINITY);
        let u = ln_u_sum(&self.qstar, eps, &self.opts.series).unwrap_or(f64::INFINITY);
        k.min(u)
    }

    /// `min_ε [ln Y(ε) + Q(v/(1−ε))]` and the report.
    pub fn bound_at(&self, v: f64) -> Result<(f64, EpsilonReport)> {
        let q = self.qstar.profile();
        minimise_over_eps(
            &self.opts.eps_grid,
            &self.ln_k,
            &self.ln_u,
            self.shift,
            self.opts.refine,
            |e| q.eval(v / (1.0 - e)),
            |e| self.ln_y_at(e),
        )
    }
}

/// Shared `ε` minimisation: `q_at(ε) = Q(v/(1−ε))`, `ln_y_at` recomputes
/// `ln Y` off the grid for the refinement step.
pub(crate) fn minimise_over_eps<QA, YA>(
    grid: &[f64],
    ln_k: &[f64],
    ln_u: &[f64],
    shift: f64,
    refine: bool,
    q_at: QA,
    ln_y_at: YA,
) -> Result<(f64, EpsilonReport)>
where
    QA: Fn(f64) -> f64,
    YA: Fn(f64) -> f64,
{
    let objective = |ln_y: f64, eps: f64| {
        if ln_y == f64::INFINITY {
            return f64::INFINITY;
        }
        let qs = q_at(eps) + shift;
        ln_y + qs.max((1.0 - eps) * qs) - shift
    };
    let ln_y = |i: usize| ln_k[i].min(ln_u[i]);
    let mut best_i = None;
    let mut best = f64::INFINITY;
    for i in 0..grid.len() {
        let obj = objective(ln_y(i), grid[i]);
        if obj < best {
            best = obj;
            best_i = Some(i);
        }
    }
    let Some(bi) = best_i else {
        return Err(Error::NoFiniteBound);
    };
    let mut eps_star = grid[bi];
    let mut ln_s0 = ln_y(bi);
    if refine && grid.len() > 1 {
        let lo = if bi == 0 { grid[0] / 2.0 } else { grid[bi - 1] };
        let hi = if bi + 1 == grid.len() { (grid[bi] + 1.0) / 2.0 } else { grid[bi + 1] };
        let neg = |e: f64| -objective(ln_y_at(e), e);
        let (e, val) = golden_max(&neg, lo, hi, 1e-7);
        if -val < best {
            best = -val;
            eps_star = e;
            ln_s0 = ln_y_at(e);
        }
    }
    let k_vals: Vec<f64> = ln_k.iter().map(|x| x.exp()).collect();
    let u_vals: Vec<f64> = ln_u.iter().map(|x| x.exp()).collect();
    let y_vals = k_vals.iter().zip(&u_vals).map(|(k, u)| k.min(*u)).collect();
    let report = EpsilonReport {
        eps_grid: grid.to_vec(),
        k_vals,
        u_vals,
        y_vals,
        eps_star,
        s0: ln_s0.exp(),
        shift,
        log_bound: best,
        c_eff: 1.0 / (1.0 - eps_star),
    };
    Ok((best, report))
}

pub(crate) fn check_eps_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() || grid.iter().any(|e| !(*e > 0.0 && *e < 1.0)) {
        return Err(Error::InvalidInput("eps grid must be nonempty and inside (0, 1)".into()));
    }
    Ok(())
}

/// `max(0, −min_n Q*(n))`. `Q*` is convex, so the scan stops at the first
/// increase.
pub(crate) fn normalisation_shift(qstar: &ProfileConjugate<'_>) -> f64 {
    let mut min = qstar.at_index(0);
    let limit = qstar.cached().len().max(2);
    for n in 1..limit {
        let v = qstar.at_index(n);
        if v > min {
            break;
        }
        min = v;
    }
    (-min).max(0.0)
}

/// Upper bound for `ln M_f(e^v)` when `|c_n| ≤ e^{−Q*(n)}` for the convex
/// profile `q`.
pub fn max_function_upper_bound(q: &GrowthFunction, v: f64) -> Result<(f64, EpsilonReport)> {
    max_function_upper_bound_with(q, v, BoundOptions::default())
}

pub fn max_function_upper_bound_with(q: &GrowthFunction, v: f64, opts: BoundOptions) -> Result<(f64, EpsilonReport)> {
    EpsilonScan::new(q, opts)?.bound_at(v)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GammaReport {
    pub ratios: Vec<(f64, f64)>,
    pub gamma: f64,
    /// The supremum is not being pushed up by the tail of the grid.
    pub holds: bool,
}

/// `sup_v Λ(v/(1−ε₀))/Λ(v)` over `v_grid ⊂ [1, ∞)`.
///
/// `holds` is true when the maximum over the last quarter of the grid does not
/// exceed the maximum over the rest (relative slack `1e-12`).
pub fn gamma_condition(lambda: &GrowthFunction, eps0: f64, v_grid: &[f64]) -> Result<GammaReport> {
    if !(eps0 > 0.0 && eps0 < 1.0) {
        return Err(Error::InvalidInput(format!("eps0 must lie in (0, 1), got {eps0}")));
    }
    if v_grid.len() < 2 {
        return Err(Error::InvalidInput("gamma condition needs at least two grid points".into()));
    }
    if v_grid.iter().any(|v| !(*v >= 1.0)) {
        return Err(Error::InvalidInput("gamma condition grid must lie in [1, inf)".into()));
    }
    let mut ratios = Vec::with_capacity(v_grid.len());
    for &v in v_grid {
        let base = lambda.eval(v);
        if !(base > 0.0) || !base.is_finite() {
            return Err(Error::InvalidGrowth(format!("Lambda({v}) = {base} is not positive")));
        }
        ratios.push((v, lambda.eval(v / (1.0 - eps0)) / base));
    }
    let gamma = ratios.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
    let split = ratios.len() - (ratios.len() / 4).max(1);
    let head = ratios[..split].iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
    let tail = ratios[split..].iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
    let holds = gamma.is_finite() && tail <= head * (1.0 + 1e-12);
    Ok(GammaReport { ratios, gamma, holds })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TauberianOptions {
    pub conjugate: ConjugateOptions,
    /// `ε₀` for the γ-condition diagnostic.
    pub eps0: f64,
}

impl Default for TauberianOptions {
    fn default() -> Self {
        TauberianOptions {
            conjugate: ConjugateOptions::default(),
            eps0: 0.5,
        }
    }
}

/// Both sides of the Tauberian ratio comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct TauberianReport {
    pub r_grid: Vec<f64>,
    /// `ln M̂_f(r) / Λ(ln r)`.
    pub lhs_ratios: Vec<f64>,
    pub n_grid: Vec<usize>,
    /// `|ln|c_n|| / Λ*(n)`.
    pub rhs_ratios: Vec<f64>,
    /// Indices dropped from the right side and why.
    pub excluded: Vec<(usize, String)>,
    pub lhs_terminal_mean: f64,
    pub rhs_terminal_mean: f64,
    pub terminal_difference: f64,
    pub gamma_estimate: f64,
    pub gamma_holds: bool,
}

/// Mean of the last quarter (at least one point).
pub fn terminal_mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    let k = (xs.len() / 4).max(1);
    xs[xs.len() - k..].iter().sum::<f64>() / k as f64
}

pub fn tauberian_report(
    f: &CoefficientSequence,
    lambda: &GrowthFunction,
    r_grid: &[f64],
    n_grid: &[usize],
) -> Result<TauberianReport> {
    tauberian_report_with(f, lambda, r_grid, n_grid, &TauberianOptions::default())
}

pub fn tauberian_report_with(
    f: &CoefficientSequence,
    lambda: &GrowthFunction,
    r_grid: &[f64],
    n_grid: &[usize],
    opts: &TauberianOptions,
) -> Result<TauberianReport> {
    if let Some(d) = f.polynomial_degree() {
        return Err(Error::Precondition(format!(
            "{} is a polynomial of degree {d}; the Tauberian ratios need infinitely many nonzero coefficients",
            f.name()
        )));
    }
    let ev = MaxFunctionEvaluator::new(f.clone())?;
    let mut lhs = Vec::with_capacity(r_grid.len());
    for &r in r_grid {
        let denom = lambda.eval(r.ln());
        if !(denom > 0.0) || !denom.is_finite() {
            return Err(Error::Precondition(format!("Lambda(ln {r}) = {denom} is not positive")));
        }
        lhs.push(ev.log_max(r)?.log_value / denom);
    }
    let mut used = Vec::new();
    let mut rhs = Vec::new();
    let mut excluded = Vec::new();
    for &n in n_grid {
        let Some(l) = f.log_abs(n) else {
            excluded.push((n, "zero coefficient".to_string()));
            continue;
        };
        let p = lambda.conjugate(n as f64, &opts.conjugate);
        if p.saturated {
            excluded.push((n, "conjugate window saturated".to_string()));
            continue;
        }
        if !(p.value > 0.0) {
            return Err(Error::Precondition(format!("Lambda*({n}) = {} is not positive", p.value)));
        }
        used.push(n);
        rhs.push(l.abs() / p.value);
    }
    let v_grid: Vec<f64> = r_grid.iter().map(|r| r.ln()).filter(|v| *v >= 1.0).collect();
    let (gamma_estimate, gamma_holds) = match gamma_condition(lambda, opts.eps0, &v_grid) {
        Ok(g) => (g.gamma, g.holds),
        Err(_) => (f64::NAN, false),
    };
    let lhs_terminal_mean = terminal_mean(&lhs);
    let rhs_terminal_mean = terminal_mean(&rhs);
    Ok(TauberianReport {
        r_grid: r_grid.to_vec(),
        lhs_ratios: lhs,
        n_grid: used,
        rhs_ratios: rhs,
        excluded,
        lhs_terminal_mean,
        rhs_terminal_mean,
        terminal_difference: (lhs_terminal_mean - rhs_terminal_mean).abs(),
        gamma_estimate,
        gamma_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entire::ln_factorial;

    fn exp_profile() -> GrowthFunction {
        GrowthFunction::power_of_exp(1.0, 1.0).unwrap()
    }

    /// Direct summation until the terms drop below 1e-17 of the running sum.
    fn direct_sum<F: Fn(usize) -> f64>(term: F) -> f64 {
        let mut s = 0.0;
        let mut n = 0;
        loop {
            let t = term(n);
            s += t;
            if n > 5 && t < 1e-17 * s {
                return s;
            }
            n += 1;
        }
    }

    #[test]
    fn exp_coefficient_bound_at_five() {
        let b = coeff_upper_bound(&exp_profile(), 5);
        let expected = -(5.0 * 5f64.ln() - 5.0);
        assert!((b.value - expected).abs() < 1e-12);
        assert!((b.value + 3.0472).abs() < 1e-4);
        assert!(-ln_factorial(5) <= b.value);
    }

    #[test]
    fn exp_coefficient_bound_at_zero() {
        let b = coeff_upper_bound(&exp_profile(), 0);
        assert!(b.value >= 0.0 && b.value < 1e-12);
        assert!(!b.saturated);
    }

    #[test]
    fn parabola_vertex() {
        let b = coeff_upper_bound(&GrowthFunction::power_log(1.0, 2.0).unwrap(), 4);
        assert!((b.value + 4.0).abs() < 1e-12);
    }

    #[test]
    fn k_sum_examples() {
        let quad = |y: f64| y * y;
        let oracle = direct_sum(|n| (-((n * n) as f64) / 2.0).exp());
        assert!((k_sum(&quad, 0.5).unwrap() - oracle).abs() < 1e-14);
        let lin = |y: f64| y;
        let geo = 1.0 / (1.0 - (-0.5f64).exp());
        assert!((k_sum(&lin, 0.5).unwrap() - geo).abs() < 1e-13);
        assert!((geo - 2.5415).abs() < 1e-4);
        let zero = |_: f64| 0.0;
        assert_eq!(k_sum(&zero, 0.5).unwrap(), f64::INFINITY);
        assert!(k_sum(&quad, 1.0).is_err());
    }

    #[test]
    fn u_sum_examples() {
        let quad = |y: f64| y * y;
        let oracle = direct_sum(|n| (-0.75 * (n * n) as f64).exp());
        assert!((u_sum(&quad, 0.5).unwrap() - oracle).abs() < 1e-14);
        let lin = |y: f64| y;
        for eps in [0.1, 0.3, 0.7] {
            let geo = 1.0 / (1.0 - (-eps as f64).exp());
            assert!((u_sum(&lin, eps).unwrap() - geo).abs() < 1e-12 * geo);
        }
        assert_eq!(u_sum(&quad, 0.0).unwrap(), f64::INFINITY);
    }

    #[test]
    fn r_sum_examples() {
        let opts = SeriesOptions::default();
        let p_exp = |n: usize| if n == 0 { 0.0 } else { n as f64 * (n as f64).ln() - n as f64 };
        let oracle = direct_sum(|n| (-p_exp(n)).exp());
        assert!((log_r_sum(p_exp, 0.0, &opts) - oracle.ln()).abs() < 1e-14);
        let single = |n: usize| if n == 0 { 0.0 } else { f64::INFINITY };
        for v in [-3.0, 0.0, 10.0] {
            assert_eq!(log_r_sum(single, v, &opts), 0.0);
        }
        let quad = |n: usize| (n * n) as f64 / 2.0;
        let oracle = direct_sum(|n| (n as f64 - (n * n) as f64 / 2.0).exp());
        assert!((log_r_sum(quad, 1.0, &opts) - oracle.ln()).abs() < 1e-14);
        assert_eq!(log_r_sum(|_| 0.0, 0.0, &opts), f64::INFINITY);
    }

    #[test]
    fn exp_sandwich_at_two() {
        let q = exp_profile();
        let (bound, report) = max_function_upper_bound(&q, 2.0).unwrap();
        let ln_m = crate::entire::log_max_function(&CoefficientSequence::exp(), 2f64.exp()).unwrap().log_value;
        let p = |n: usize| if n == 0 { 0.0 } else { n as f64 * (n as f64).ln() - n as f64 };
        let ln_r = log_r_sum(p, 2.0, &SeriesOptions::default());
        assert!((ln_m - 2f64.exp()).abs() < 1e-9);
        assert!(ln_m <= ln_r && ln_r <= bound, "{ln_m} {ln_r} {bound}");
        for (y, (k, u)) in report.y_vals.iter().zip(report.k_vals.iter().zip(&report.u_vals)) {
            assert_eq!(*y, k.min(*u));
        }
        assert!((report.c_eff - 1.0 / (1.0 - report.eps_star)).abs() < 1e-15);
        assert!((report.shift - 1.0).abs() < 1e-9);
    }

    #[test]
    fn quadratic_profile_bound_matches_direct_eps_scan() {
        let q = GrowthFunction::custom("v^2/2", true, |v| v * v / 2.0);
        let opts = BoundOptions { refine: false, ..Default::default() };
        let (bound, report) = max_function_upper_bound_with(&q, 1.0, opts).unwrap();
        assert_eq!(report.shift, 0.0);
        // closed-form pieces on a 1e-3 eps scan
        let series = SeriesOptions::default();
        let qs = |y: f64| y * y / 2.0;
        let mut oracle = f64::INFINITY;
        for j in 1..1000 {
            let e = j as f64 * 1e-3;
            let ln_y = ln_k_sum(&qs, e, 0.0, &series).unwrap().min(ln_u_sum(&qs, e, &series).unwrap());
            oracle = oracle.min(ln_y + 1.0 / (2.0 * (1.0 - e) * (1.0 - e)));
        }
        assert!((bound - oracle).abs() < 1e-4, "{bound} vs {oracle}");
        assert!(k_sum(&qs, 0.5).unwrap().is_finite());
        let r = log_r_sum(|n| (n * n) as f64 / 2.0, 1.0, &series);
        assert!(r <= bound);
    }

    #[test]
    fn bound_respects_constant_term_floor() {
        let q = exp_profile();
        let scan = EpsilonScan::new(&q, BoundOptions::default()).unwrap();
        for v in [-30.0, -5.0, 0.0] {
            let (b, _) = scan.bound_at(v).unwrap();
            // ln|c_0| ≤ −Q*(0) = 0 and the bound dominates the n = 0 term
            assert!(b >= -scan.qstar().at_index(0) - 1e-12, "v={v}: {b}");
        }
    }

    #[test]
    fn k_is_monotone_in_eps_after_normalisation() {
        let q = exp_profile();
        let opts = BoundOptions { refine: false, ..Default::default() };
        let scan = EpsilonScan::new(&q, opts).unwrap();
        let (_, report) = scan.bound_at(1.0).unwrap();
        assert!(report.k_vals.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn round_trip_never_beats_the_truth() {
        for q in [exp_profile(), GrowthFunction::power_of_exp(0.5, 2.0).unwrap(), GrowthFunction::power_log(1.0, 2.0).unwrap()] {
            let scan = EpsilonScan::new(&q, BoundOptions::default()).unwrap();
            for v in [0.5, 1.0, 2.0, 3.0] {
                let (b, rep) = scan.bound_at(v).unwrap();
                assert!(b >= q.eval(v), "{q:?} v={v}: {b} < {}", q.eval(v));
                let formula = rep.s0.ln() + q.eval(v / (1.0 - rep.eps_star));
                assert!((b - formula).abs() <= 1e-9 * formula.abs().max(1.0));
            }
        }
    }

    #[test]
    fn no_finite_bound_when_y_diverges() {
        // Q = 0 on {0}: Q* vanishes identically, so K and U both diverge
        let q = GrowthFunction::custom("point", true, |_| 0.0).with_domain(0.0, 0.0);
        let r = max_function_upper_bound_with(&q, 0.0, BoundOptions { eps_grid: vec![0.5], refine: false, cache_len: 16, ..Default::default() });
        assert!(matches!(r, Err(Error::NoFiniteBound)));
    }

    #[test]
    fn gamma_condition_cases() {
        let sq = GrowthFunction::power_log(1.0, 2.0).unwrap();
        let grid: Vec<f64> = (1..=40).map(|i| i as f64).collect();
        let g = gamma_condition(&sq, 0.5, &grid).unwrap();
        assert!((g.gamma - 4.0).abs() < 1e-12 && g.holds);
        let e = gamma_condition(&exp_profile(), 0.5, &grid).unwrap();
        assert!(!e.holds);
        let lin = GrowthFunction::power_log(1.0, 1.0).unwrap();
        let l = gamma_condition(&lin, 0.1, &grid).unwrap();
        assert!((l.gamma - 1.0 / 0.9).abs() < 1e-12 && l.holds);
        let neg = GrowthFunction::custom("neg", true, |v| -v);
        assert!(matches!(gamma_condition(&neg, 0.5, &grid), Err(Error::InvalidGrowth(_))));
        assert!(gamma_condition(&sq, 0.5, &[0.5, 2.0]).is_err());
    }

    #[test]
    fn tauberian_exp() {
        let r_grid: Vec<f64> = (1..=5).map(|k| ((2 * k) as f64).exp()).collect();
        let n_grid: Vec<usize> = (50..=500).step_by(50).collect();
        let rep = tauberian_report(&CoefficientSequence::exp(), &exp_profile(), &r_grid, &n_grid).unwrap();
        assert!(rep.lhs_ratios.iter().all(|x| (x - 1.0).abs() < 1e-12));
        let n500 = *rep.rhs_ratios.last().unwrap();
        let oracle = ln_factorial(500) / (500.0 * 500f64.ln() - 500.0);
        assert!((n500 - oracle).abs() < 1e-12);
        assert!(rep.terminal_difference <= 0.02);
        assert!(!rep.gamma_holds);
    }

    #[test]
    fn tauberian_gaussian_coefficients_with_quadratic_profile() {
        let f = CoefficientSequence::from_rule("e^{-n^2}", SignPattern::Nonnegative, |n| Some(-((n * n) as f64)));
        let lam = GrowthFunction::power_log(1.0, 2.0).unwrap();
        let r_grid: Vec<f64> = (2..=6).map(|k| (k as f64 * 5.0).exp()).collect();
        let n_grid: Vec<usize> = (10..=100).step_by(10).collect();
        let rep = tauberian_report(&f, &lam, &r_grid, &n_grid).unwrap();
        for r in &rep.rhs_ratios {
            assert!((r - 4.0).abs() < 1e-9);
        }
        assert!(rep.gamma_holds);
    }

    #[test]
    fn tauberian_rejects_polynomials() {
        let p = CoefficientSequence::polynomial("1+z", &[1.0, 1.0]).unwrap();
        let r = tauberian_report(&p, &exp_profile(), &[10.0], &[2]);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn coefficient_bound_holds_for_known_profiles() {
        let exp = exp_profile();
        for n in 0..=1000 {
            assert!(-ln_factorial(n) <= coeff_upper_bound(&exp, n).value + 1e-9);
        }
        // ln M(r) of the Mittag-Leffler function E_{1/2}(r) is bounded by r^2 + ln 2 for r >= 0
        let ml = CoefficientSequence::mittag_leffler(2.0, 1.0).unwrap();
        let prof = GrowthFunction::custom("e^{2v}+ln2", true, |v| (2.0 * v).exp() + 2f64.ln());
        for n in (0..=1000).step_by(7) {
            assert!(ml.log_abs(n).unwrap() <= coeff_upper_bound(&prof, n).value + 1e-9, "n={n}");
        }
    }

    #[test]
    fn sampled_profile_from_series_is_convex_and_conjugable() {
        let g = GrowthFunction::from_series(&CoefficientSequence::exp(), crate::legendre::linspace(-10.0, 6.0, 801)).unwrap();
        assert!(g.is_convex());
        let b = coeff_upper_bound(&g, 20);
        assert!(!b.saturated);
        assert!((b.value + (20.0 * 20f64.ln() - 20.0)).abs() < 1e-2);
    }
}
