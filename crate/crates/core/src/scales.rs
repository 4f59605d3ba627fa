//! Regularly varying growth scales and their conjugates.
//!
//! The scale `ψ(λ) = C₁·λ^m·(ln λ)^q` covers both the `φ_{m,L}` family with
//! `L(λ) = (ln λ)^q` (take `C₁ = 1/m`) and its rescalings. Its conjugate
//! behaves like `C₂·x^{m'}·(ln x)^{−q/(m−1)}` with
//! `C₂ = (1/m')·(m·C₁)^{−1/(m−1)}·(m−1)^{q/(m−1)}`.
//!
//! The `example_3x` functions turn the three standard growth regimes
//! (`(ln r)^m`, `r^ρ`, `e^{r}`) into coefficient reports.

use crate::bounds::{coeff_upper_bound, coeff_upper_bound_with, GrowthFunction};
use crate::entire::CoefficientSequence;
use crate::error::{Error, Result};
use crate::legendre::{conjugate_point, ConjugateOptions, ConjugatePoint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegVarScale {
    pub c1: f64,
    pub m: f64,
    pub q: f64,
}

impl RegVarScale {
    /// `φ_{m,L}(λ) = λ^m·L(λ)/m` with `L(λ) = (ln λ)^q`.
    pub fn phi(m: f64, q: f64) -> Result<Self> {
        Self::psi(1.0 / m, m, q)
    }

    /// `ψ_{m,q}(λ) = C₁·λ^m·(ln λ)^q`.
    pub fn psi(c1: f64, m: f64, q: f64) -> Result<Self> {
        if !(m > 1.0) || !m.is_finite() {
            return Err(Error::InvalidGrowth(format!("scale exponent m must exceed 1, got {m}")));
        }
        if !(c1 > 0.0) || !c1.is_finite() {
            return Err(Error::InvalidGrowth(format!("scale constant must be positive, got {c1}")));
        }
        if !(q >= 0.0) || !q.is_finite() {
            return Err(Error::InvalidGrowth(format!("log power q must be nonnegative, got {q}")));
        }
        Ok(RegVarScale { c1, m, q })
    }

    /// `m' = m/(m−1)`.
    pub fn conjugate_exponent(&self) -> f64 {
        self.m / (self.m - 1.0)
    }

    /// Left end of the evaluation domain: `e` with a log factor, else 0.
    pub fn domain_start(&self) -> f64 {
        if self.q > 0.0 {
            std::f64::consts::E
        } else {
            0.0
        }
    }

    pub fn eval(&self, lambda: f64) -> f64 {
        if lambda < self.domain_start() {
            return f64::INFINITY;
        }
        let log_part = if self.q > 0.0 { lambda.ln().powf(self.q) } else { 1.0 };
        self.c1 * lambda.powf(self.m) * log_part
    }

    /// `C₂(m, q)`.
    pub fn asymptotic_constant(&self) -> f64 {
        let m = self.m;
        (m * self.c1).powf(-1.0 / (m - 1.0)) * (m - 1.0).powf(self.q / (m - 1.0)) / self.conjugate_exponent()
    }

    /// Closed-form asymptotic of the conjugate, `C₂·x^{m'}·(ln x)^{−q/(m−1)}`.
    pub fn conjugate_asymptotic(&self, x: f64) -> Result<f64> {
        if !(x >= std::f64::consts::E) {
            return Err(Error::InvalidInput(format!("asymptotic conjugate needs x >= e, got {x}")));
        }
        let m = self.m;
        Ok(self.asymptotic_constant() * x.powf(self.conjugate_exponent()) * x.ln().powf(-self.q / (m - 1.0)))
    }

    /// `sup_{λ ≥ start} (x·λ − ψ(λ))`, computed numerically. The window is
    /// uncapped since the maximiser grows like `x^{1/(m−1)}`.
    pub fn conjugate_numeric(&self, x: f64) -> ConjugatePoint {
        let opts = ConjugateOptions {
            cap: f64::MAX,
            ..Default::default()
        };
        conjugate_point(&|l| self.eval(l), x, (self.domain_start(), f64::INFINITY), &opts)
    }

    /// Numeric conjugate divided by the asymptotic formula.
    pub fn asymptotic_ratio(&self, x: f64) -> Result<f64> {
        Ok(self.conjugate_numeric(x).value / self.conjugate_asymptotic(x)?)
    }
}

/// Local log-log slope `d ln Λ*(n) / d ln n` by a symmetric difference.
pub fn exponent_fit(lambda: &GrowthFunction, n: f64) -> f64 {
    if !(n > 0.0) {
        return f64::NAN;
    }
    let h = 1e-3;
    let opts = ConjugateOptions::default();
    let hi = lambda.conjugate(n * (1.0 + h), &opts).value;
    let lo = lambda.conjugate(n * (1.0 - h), &opts).value;
    if !(hi > 0.0 && lo > 0.0) {
        return f64::NAN;
    }
    (hi.ln() - lo.ln()) / ((1.0 + h).ln() - (1.0 - h).ln())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Example31Row {
    pub n: usize,
    /// `Λ*(n)`; the coefficient bound is `−Λ*(n)`.
    pub lambda_star: f64,
    pub exponent_fit: f64,
    /// `Λ*(n)/n^{m'}`.
    pub c4: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Example31Report {
    pub m: f64,
    pub c3: f64,
    pub conjugate_exponent: f64,
    pub rows: Vec<Example31Row>,
}

/// Growth `ln M(r) = C₃·(ln r)^m`: the coefficient bound `−Λ*(n)` should
/// behave like `−C₄·n^{m'}`.
pub fn example_31_check(m: f64, c3: f64, n_grid: &[usize]) -> Result<Example31Report> {
    if !(m > 1.0) {
        return Err(Error::InvalidGrowth(format!("m must exceed 1, got {m}")));
    }
    let lambda = GrowthFunction::power_log(c3, m)?;
    let mp = m / (m - 1.0);
    let rows = n_grid
        .iter()
        .map(|&n| {
            let lambda_star = -coeff_upper_bound(&lambda, n).value;
            Example31Row {
                n,
                lambda_star,
                exponent_fit: exponent_fit(&lambda, n as f64),
                c4: if n == 0 { f64::NAN } else { lambda_star / (n as f64).powf(mp) },
            }
        })
        .collect();
    Ok(Example31Report { m, c3, conjugate_exponent: mp, rows })
}

/// `ln` of the coefficient bound for `ln M(r) ~ C₄·r^ρ`:
/// `−(n/ρ)·ln(n/(C₄ρ)) + n/ρ`, and 0 at `n = 0`.
pub fn example_32_bound(rho: f64, c4: f64, n: usize) -> Result<f64> {
    if !(rho > 0.0) || !(c4 > 0.0) {
        return Err(Error::InvalidGrowth(format!("rho and C4 must be positive, got {rho}, {c4}")));
    }
    if n == 0 {
        return Ok(0.0);
    }
    let k = n as f64 / rho;
    Ok(-k * (n as f64 / (c4 * rho)).ln() + k)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Example32Row {
    pub n: usize,
    pub ln_abs_c: f64,
    pub log_bound: f64,
    /// `log_bound − ln|c_n|`.
    pub slack: f64,
    /// `n ln n/ρ + γ·n·ln ln n/ρ − n/ρ`.
    pub refinement: f64,
    /// `ln(1/|c_n|) / refinement`.
    pub refinement_ratio: f64,
}

/// Compares a coefficient sequence with the order-`ρ` bound and with the
/// `r^ρ·ln^γ r` refinement of `ln(1/|c_n|)`.
pub fn example_32_report(rho: f64, c4: f64, gamma: f64, f: &CoefficientSequence, n_grid: &[usize]) -> Result<Vec<Example32Row>> {
    let mut rows = Vec::with_capacity(n_grid.len());
    for &n in n_grid {
        let log_bound = example_32_bound(rho, c4, n)?;
        let ln_abs_c = f.log_abs(n).unwrap_or(f64::NEG_INFINITY);
        let nf = n as f64;
        let refinement = (nf * nf.ln() + gamma * nf * nf.ln().ln() - nf) / rho;
        rows.push(Example32Row {
            n,
            ln_abs_c,
            log_bound,
            slack: log_bound - ln_abs_c,
            refinement,
            refinement_ratio: -ln_abs_c / refinement,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Example33Row {
    pub n: usize,
    pub lambda_star: f64,
    /// `n·ln ln n`.
    pub leading: f64,
    /// `Λ*(n) / (n·ln ln n)`.
    pub ratio: f64,
    /// `ln C₇ − n·ln ln n`.
    pub log_c7_bound: f64,
    pub saturated: bool,
}

/// Growth `ln M(r) = C₅·e^{C₆·r}`: the coefficient bound `−Λ*(n)` should lead
/// with `−n·ln ln n`.
pub fn example_33_check(c5: f64, c6: f64, c7: f64, n_grid: &[usize]) -> Result<Vec<Example33Row>> {
    if !(c7 > 0.0) {
        return Err(Error::InvalidGrowth(format!("C7 must be positive, got {c7}")));
    }
    let lambda = GrowthFunction::exp_of_exp(c5, c6)?;
    let mut rows = Vec::with_capacity(n_grid.len());
    for &n in n_grid {
        if n < 3 {
            return Err(Error::InvalidInput(format!("index {n} below 3: ln ln n is not positive")));
        }
        let mut b = coeff_upper_bound(&lambda, n);
        if b.saturated {
            let wide = ConjugateOptions {
                grid_points: 1025,
                initial_half_width: 64.0,
                ..Default::default()
            };
            b = coeff_upper_bound_with(&lambda, n, &wide);
        }
        let nf = n as f64;
        let leading = nf * nf.ln().ln();
        rows.push(Example33Row {
            n,
            lambda_star: -b.value,
            leading,
            ratio: -b.value / leading,
            log_c7_bound: c7.ln() - leading,
            saturated: b.saturated,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entire::ln_factorial;

    /// Ternary search for the maximum of a unimodal function.
    fn ternary_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
        for _ in 0..300 {
            let m1 = a + (b - a) / 3.0;
            let m2 = b - (b - a) / 3.0;
            if f(m1) < f(m2) {
                a = m1;
            } else {
                b = m2;
            }
        }
        f((a + b) / 2.0)
    }

    #[test]
    fn quadratic_scale_is_self_dual() {
        let s = RegVarScale::phi(2.0, 0.0).unwrap();
        for x in [3.0, 5.0, 10.0, 40.0] {
            assert!((s.conjugate_asymptotic(x).unwrap() - x * x / 2.0).abs() < 1e-12 * x * x);
            assert!((s.asymptotic_ratio(x).unwrap() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn cubic_scale_at_eight() {
        let s = RegVarScale::phi(3.0, 0.0).unwrap();
        let oracle = ternary_max(|l| 8.0 * l - l.powi(3) / 3.0, 0.0, 10.0);
        let closed = 8.0 * 8f64.sqrt() - 8f64.sqrt().powi(3) / 3.0;
        assert!((oracle - closed).abs() < 1e-12);
        assert!((s.conjugate_asymptotic(8.0).unwrap() - closed).abs() < 1e-12);
        assert!((s.conjugate_numeric(8.0).value - closed).abs() < 1e-9);
        assert!((closed - 15.085).abs() < 1e-3);
    }

    #[test]
    fn asymptotic_rejects_small_x_and_bad_scales() {
        let s = RegVarScale::phi(2.0, 1.0).unwrap();
        assert!(s.conjugate_asymptotic(2.0).is_err());
        assert!(RegVarScale::phi(1.0, 0.0).is_err());
        assert!(RegVarScale::psi(1.0, 2.0, -1.0).is_err());
    }

    #[test]
    fn log_scale_ratio_approaches_one() {
        let s = RegVarScale::psi(1.0, 2.0, 1.0).unwrap();
        let xs: Vec<f64> = [3.0, 6.0, 12.0, 24.0, 48.0, 96.0].iter().map(|k: &f64| k.exp()).collect();
        let errs: Vec<f64> = xs.iter().map(|&x| {
            let oracle = ternary_max(|l| x * l - s.eval(l), std::f64::consts::E, x);
            assert!((s.conjugate_numeric(x).value - oracle).abs() <= 1e-9 * oracle);
            (oracle / s.conjugate_asymptotic(x).unwrap() - 1.0).abs()
        }).collect();
        assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
        assert!(*errs.last().unwrap() < 0.06, "{errs:?}");
    }

    #[test]
    fn example_31_quadratic() {
        let grid: Vec<usize> = (0..=1000).collect();
        let rep = example_31_check(2.0, 1.0, &grid).unwrap();
        for row in &rep.rows {
            let oracle = (row.n * row.n) as f64 / 4.0;
            assert!((row.lambda_star - oracle).abs() <= 1e-9 * oracle.max(1.0), "n={}", row.n);
            if row.n > 0 {
                assert!((row.exponent_fit - 2.0).abs() < 1e-3);
                assert!((row.c4 - 0.25).abs() < 1e-9);
            }
        }
        assert_eq!(rep.rows[0].lambda_star, 0.0);
    }

    #[test]
    fn example_31_cubic_fit() {
        let rep = example_31_check(3.0, 1.0, &[10, 100, 1000]).unwrap();
        let last = rep.rows.last().unwrap();
        assert!((last.exponent_fit - 1.5).abs() < 1e-3);
        // sup_v (n v − v³) at v = sqrt(n/3)
        let v = (1000.0f64 / 3.0).sqrt();
        let oracle = 1000.0 * v - v.powi(3);
        assert!((last.lambda_star - oracle).abs() < 1e-9 * oracle);
    }

    #[test]
    fn exponent_duality() {
        for m in [1.5, 2.5, 4.0] {
            let mp = m / (m - 1.0);
            let there = exponent_fit(&GrowthFunction::power_log(1.0, m).unwrap(), 500.0);
            let back = exponent_fit(&GrowthFunction::power_log(1.0, there).unwrap(), 500.0);
            assert!((there - mp).abs() < 1e-6, "{m}: {there}");
            assert!((back - m).abs() < 1e-5);
        }
    }

    #[test]
    fn example_32_matches_coefficient_bound() {
        let v = example_32_bound(1.0, 1.0, 5).unwrap();
        assert!((v - (5.0 - 5.0 * 5f64.ln())).abs() < 1e-12);
        let lam = GrowthFunction::power_of_exp(1.0, 1.0).unwrap();
        assert!((v - coeff_upper_bound(&lam, 5).value).abs() < 1e-12);
        let lam2 = GrowthFunction::power_of_exp(1.5, 2.0).unwrap();
        for n in [1, 4, 17, 300] {
            let b = example_32_bound(2.0, 1.5, n).unwrap();
            assert!((b - coeff_upper_bound(&lam2, n).value).abs() < 1e-9 * b.abs().max(1.0));
        }
        assert_eq!(example_32_bound(2.0, 1.0, 0).unwrap(), 0.0);
    }

    #[test]
    fn example_32_order_two_family() {
        let b = example_32_bound(2.0, 1.0, 4).unwrap();
        assert!((b - (2.0 - 2.0 * 2f64.ln())).abs() < 1e-12);
        let f = CoefficientSequence::mittag_leffler(2.0, 1.0).unwrap();
        let grid: Vec<usize> = (1..=1000).collect();
        let rows = example_32_report(2.0, 1.0, 0.0, &f, &grid).unwrap();
        for r in &rows {
            let oracle = -libm::lgamma(r.n as f64 / 2.0 + 1.0);
            assert!((r.ln_abs_c - oracle).abs() < 1e-9 * oracle.abs().max(1.0));
            assert!(r.slack > 0.0, "n={}", r.n);
        }
        let at = |n: usize| rows[n - 1].slack / n as f64;
        assert!(at(1000) <= at(100));
        // ln M(r) ~ r² carries an extra ln 2 per index relative to ρ⁻¹r^ρ
        let ratio = |n: usize| rows[n - 1].refinement_ratio;
        assert!(ratio(100) < ratio(1000) && ratio(1000) < 1.0);
    }

    #[test]
    fn example_33_oracle_and_trend() {
        let rows = example_33_check(1.0, 1.0, 1.0, &[3, 15, 1000, 10_000]).unwrap();
        let oracle = ternary_max(|v| 15.0 * v - v.exp().exp(), -5.0, 3.0);
        assert!((rows[1].lambda_star - oracle).abs() < 1e-9 * oracle.abs());
        assert!(rows[0].lambda_star.is_finite());
        assert!((rows[2].ratio - 1.0).abs() < 0.35);
        assert!((rows[3].ratio - 1.0).abs() < (rows[2].ratio - 1.0).abs());
        assert!(rows.iter().all(|r| !r.saturated));
        assert!(example_33_check(1.0, 1.0, 1.0, &[2]).is_err());
    }

    #[test]
    fn example_33_tail_error_nonincreasing() {
        let grid: Vec<usize> = (1..=9).map(|k| 10usize.pow(2) * 3usize.pow(k)).collect();
        let rows = example_33_check(1.0, 1.0, 1.0, &grid).unwrap();
        let errs: Vec<f64> = rows.iter().map(|r| (r.ratio - 1.0).abs()).collect();
        assert!(errs[errs.len() - 5..].windows(2).all(|w| w[1] <= w[0]), "{errs:?}");
    }

    #[test]
    fn factorial_coefficients_sit_below_exp_bound() {
        let lam = GrowthFunction::power_of_exp(1.0, 1.0).unwrap();
        for n in 1..=200 {
            assert!(-ln_factorial(n) <= example_32_bound(1.0, 1.0, n).unwrap());
            assert!(-ln_factorial(n) <= coeff_upper_bound(&lam, n).value);
        }
    }
}
