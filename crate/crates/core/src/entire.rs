//! Entire functions given by their Taylor coefficients.
//!
//! Coefficients are carried as `ln|c_n|`, with `None` standing for an exact
//! zero. The maximal function is replaced by the majorant
//! `M̂(r) = Σ |c_n| r^n`, which equals `M_f(r)` when every coefficient is
//! nonnegative and bounds it from above otherwise.

use std::fmt;
use std::io::Read;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::logsum::{sum_log_series, sum_log_terms, SeriesOptions, SeriesOutcome};

/// `ln|c_n|`, or `None` for a zero coefficient.
pub type LogCoeff = Option<f64>;

type Rule = Arc<dyn Fn(usize) -> LogCoeff + Send + Sync>;

/// What is known about the signs of the coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignPattern {
    Nonnegative,
    Unknown,
}

#[derive(Clone)]
enum Source {
    Rule(Rule),
    Table(Arc<Vec<LogCoeff>>),
}

/// Taylor coefficients `{c_n}` of an entire function.
#[derive(Clone)]
pub struct CoefficientSequence {
    name: String,
    source: Source,
    signs: SignPattern,
    degree: Option<usize>,
}

impl fmt::Debug for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoefficientSequence")
            .field("name", &self.name)
            .field("signs", &self.signs)
            .field("degree", &self.degree)
            .field("max_index", &self.max_index())
            .finish()
    }
}

/// `ln n!` via the log-gamma function.
pub fn ln_factorial(n: usize) -> f64 {
    libm::lgamma(n as f64 + 1.0)
}

impl CoefficientSequence {
    pub fn from_rule<F>(name: impl Into<String>, signs: SignPattern, rule: F) -> Self
    where
        F: Fn(usize) -> LogCoeff + Send + Sync + 'static,
    {
        CoefficientSequence {
            name: name.into(),
            source: Source::Rule(Arc::new(rule)),
            signs,
            degree: None,
        }
    }

    /// A rule whose coefficients vanish past `degree`.
    pub fn polynomial_rule<F>(name: impl Into<String>, signs: SignPattern, degree: usize, rule: F) -> Self
    where
        F: Fn(usize) -> LogCoeff + Send + Sync + 'static,
    {
        let mut s = Self::from_rule(name, signs, move |n| if n > degree { None } else { rule(n) });
        s.degree = Some(degree);
        s
    }

    /// A finite table of `ln|c_n|`, `n = 0..len`. The table is treated as a
    /// polynomial only when it ends in an explicit zero entry; otherwise it is
    /// the available head of an entire function.
    pub fn from_table(name: impl Into<String>, signs: SignPattern, entries: Vec<LogCoeff>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("coefficient table is empty".into()));
        }
        if entries.iter().flatten().any(|v| v.is_nan() || *v == f64::INFINITY) {
            return Err(Error::InvalidInput("ln|c_n| must be finite or ZERO".into()));
        }
        let degree = if entries.last() == Some(&None) {
            Some(entries.iter().rposition(|e| e.is_some()).unwrap_or(0))
        } else {
            None
        };
        Ok(CoefficientSequence {
            name: name.into(),
            source: Source::Table(Arc::new(entries)),
            signs,
            degree,
        })
    }

    /// Polynomial with the given (real) coefficients.
    pub fn polynomial(name: impl Into<String>, coeffs: &[f64]) -> Result<Self> {
        let signs = if coeffs.iter().all(|c| *c >= 0.0) {
            SignPattern::Nonnegative
        } else {
            SignPattern::Unknown
        };
        let mut entries: Vec<LogCoeff> = coeffs.iter().map(|c| if *c == 0.0 { None } else { Some(c.abs().ln()) }).collect();
        entries.push(None);
        Self::from_table(name, signs, entries)
    }

    /// `c_n = 1/n!`, i.e. `e^z`.
    pub fn exp() -> Self {
        Self::from_rule("exp", SignPattern::Nonnegative, |n| Some(-ln_factorial(n)))
    }

    /// `c_n = C^{n/ρ} / Γ(n/ρ + 1)`: a Mittag-Leffler function with
    /// `ln M(r) ~ C r^ρ`. `ρ = C = 1` is `e^z`.
    pub fn mittag_leffler(rho: f64, c: f64) -> Result<Self> {
        if !(rho > 0.0 && rho.is_finite()) || !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidInput(format!("need rho > 0 and C > 0, got rho={rho}, C={c}")));
        }
        Ok(Self::from_rule(format!("mittag_leffler(rho={rho},C={c})"), SignPattern::Nonnegative, move |n| {
            let t = n as f64 / rho;
            Some(t * c.ln() - libm::lgamma(t + 1.0))
        }))
    }

    /// Reads a two-column CSV `n, ln_abs_c` where the second column may be the
    /// literal `ZERO`. A header row is optional; missing indices are zeros.
    pub fn from_csv<R: Read>(name: impl Into<String>, reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(reader);
        let mut rows: Vec<(usize, LogCoeff)> = Vec::new();
        for (line, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(|e| Error::InvalidInput(format!("coefficient csv: {e}")))?;
            if rec.len() < 2 {
                return Err(Error::InvalidInput(format!("coefficient csv row {}: expected 2 columns", line + 1)));
            }
            let (n_raw, v_raw) = (&rec[0], &rec[1]);
            let n: usize = match n_raw.parse() {
                Ok(n) => n,
                Err(_) if line == 0 => continue,
                Err(_) => return Err(Error::InvalidInput(format!("coefficient csv row {}: bad index {n_raw:?}", line + 1))),
            };
            let v = if v_raw.eq_ignore_ascii_case("zero") {
                None
            } else {
                Some(v_raw.parse::<f64>().map_err(|_| {
                    Error::InvalidInput(format!("coefficient csv row {}: bad value {v_raw:?}", line + 1))
                })?)
            };
            rows.push((n, v));
        }
        let len = rows.iter().map(|(n, _)| n + 1).max().unwrap_or(0);
        let mut entries = vec![None; len];
        for (n, v) in rows {
            entries[n] = v;
        }
        Self::from_table(name, SignPattern::Unknown, entries)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn signs(&self) -> SignPattern {
        self.signs
    }

    pub fn log_abs(&self, n: usize) -> LogCoeff {
        if let Some(d) = self.degree {
            if n > d {
                return None;
            }
        }
        match &self.source {
            Source::Rule(f) => f(n),
            Source::Table(t) => t.get(n).copied().flatten(),
        }
    }

    /// Last index with data, `None` for an unbounded rule.
    pub fn max_index(&self) -> Option<usize> {
        match (&self.source, self.degree) {
            (_, Some(d)) => Some(d),
            (Source::Table(t), None) => Some(t.len() - 1),
            (Source::Rule(_), None) => None,
        }
    }

    /// `Some(d)` when every coefficient past `d` is known to vanish.
    pub fn polynomial_degree(&self) -> Option<usize> {
        self.degree
    }

    /// Coefficients of `f'`: `c_k[f'] = (k+1)·c_{k+1}[f]`.
    pub fn derivative(&self) -> Self {
        let name = format!("d/dz {}", self.name);
        let degree = self.degree.map(|d| d.saturating_sub(1));
        match &self.source {
            Source::Table(t) => {
                let mut entries: Vec<LogCoeff> = t
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, v)| v.map(|l| (k as f64).ln() + l))
                    .collect();
                if entries.is_empty() || self.degree.is_some() {
                    entries.push(None);
                }
                let mut s = Self::from_table(name, self.signs, entries).expect("derived table is valid");
                if self.degree.is_some() {
                    s.degree = degree;
                }
                s
            }
            Source::Rule(f) => {
                let f = f.clone();
                let rule = move |k: usize| f(k + 1).map(|l| ((k + 1) as f64).ln() + l);
                let mut s = Self::from_rule(name, self.signs, rule);
                s.degree = degree;
                s
            }
        }
    }

    /// Numerical entirety check: `(1/n)·ln|c_n|` must trend downward over
    /// `[n0, n1]` (mean of the last tenth below the mean of the first tenth).
    /// Polynomials pass trivially.
    pub fn check_entire(&self, n0: usize, n1: usize) -> Result<()> {
        if self.degree.is_some() {
            return Ok(());
        }
        let end = self.max_index().map_or(n1, |m| m.min(n1));
        let vals: Vec<f64> = (n0.max(1)..=end)
            .filter_map(|n| self.log_abs(n).map(|l| l / n as f64))
            .collect();
        if vals.len() < 10 {
            return Ok(());
        }
        let k = (vals.len() / 10).max(1);
        let head = vals[..k].iter().sum::<f64>() / k as f64;
        let tail = vals[vals.len() - k..].iter().sum::<f64>() / k as f64;
        if tail < head {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "{}: (1/n) ln|c_n| does not decrease on [{n0}, {end}] (head mean {head:.6}, tail mean {tail:.6}); \
                 the series has a finite radius of convergence",
                self.name
            )))
        }
    }
}

/// Whether `ln M̂` is the exact `ln M_f` or an upper bound for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajorantRegime {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxFunctionValue {
    pub log_value: f64,
    pub regime: MajorantRegime,
    pub terms: usize,
}

/// Default window of the entirety check run by [`MaxFunctionEvaluator::new`].
pub const ENTIRE_CHECK_WINDOW: (usize, usize) = (10, 400);

/// Evaluates `ln M̂_f(r) = ln Σ |c_n| r^n` by log-domain summation.
#[derive(Debug, Clone)]
pub struct MaxFunctionEvaluator {
    source: CoefficientSequence,
    opts: SeriesOptions,
}

impl MaxFunctionEvaluator {
    pub fn new(source: CoefficientSequence) -> Result<Self> {
        Self::with_options(source, SeriesOptions::taylor())
    }

    pub fn with_options(source: CoefficientSequence, opts: SeriesOptions) -> Result<Self> {
        source.check_entire(ENTIRE_CHECK_WINDOW.0, ENTIRE_CHECK_WINDOW.1)?;
        Ok(MaxFunctionEvaluator { source, opts })
    }

    pub fn source(&self) -> &CoefficientSequence {
        &self.source
    }

    pub fn regime(&self) -> MajorantRegime {
        match self.source.signs {
            SignPattern::Nonnegative => MajorantRegime::Exact,
            SignPattern::Unknown => MajorantRegime::UpperBound,
        }
    }

    pub fn log_max(&self, r: f64) -> Result<MaxFunctionValue> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::InvalidInput(format!("radius must be positive and finite, got {r}")));
        }
        self.log_max_at_log_radius(r.ln())
    }

    /// `ln M̂(e^v)`; the growth profile `Λ(v)` of the coefficients.
    pub fn log_max_at_log_radius(&self, v: f64) -> Result<MaxFunctionValue> {
        let term = |n: usize| match self.source.log_abs(n) {
            Some(l) => l + n as f64 * v,
            None => f64::NEG_INFINITY,
        };
        let regime = self.regime();
        if let Some(last) = self.source.max_index() {
            if last < self.opts.max_terms {
                let log_value = sum_log_terms((0..=last).map(term));
                return Ok(MaxFunctionValue { log_value, regime, terms: last + 1 });
            }
        }
        match sum_log_series(&self.opts, term) {
            SeriesOutcome::Converged { log_sum, terms } => Ok(MaxFunctionValue { log_value: log_sum, regime, terms }),
            SeriesOutcome::Exhausted { log_sum, last_log_term } => Err(Error::Truncation {
                max_terms: self.opts.max_terms,
                last_log_term,
                log_sum,
            }),
            SeriesOutcome::Diverged { index } => Err(Error::Truncation {
                max_terms: index,
                last_log_term: f64::INFINITY,
                log_sum: f64::INFINITY,
            }),
        }
    }
}

/// `ln M̂_f(r)`, checking entirety first.
pub fn log_max_function(f: &CoefficientSequence, r: f64) -> Result<MaxFunctionValue> {
    MaxFunctionEvaluator::new(f.clone())?.log_max(r)
}

/// Finite-window surrogate for a `limsup`: the maximum over the window and the
/// running maxima `(n, max_{m ≤ n})` for convergence diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct LimsupEstimate {
    pub estimate: f64,
    pub values: Vec<(usize, f64)>,
    pub running_max: Vec<(usize, f64)>,
}

fn limsup_scan<F>(f: &CoefficientSequence, n_min: usize, n_max: usize, what: &str, value: F) -> Result<LimsupEstimate>
where
    F: Fn(usize, f64) -> Option<f64>,
{
    if n_min < 2 || n_max <= n_min {
        return Err(Error::InvalidInput(format!("need n_max > n_min >= 2, got [{n_min}, {n_max}]")));
    }
    let mut values = Vec::new();
    let mut running_max = Vec::new();
    let mut best = f64::NEG_INFINITY;
    for n in n_min..=n_max {
        let Some(l) = f.log_abs(n) else { continue };
        let Some(v) = value(n, l) else { continue };
        best = best.max(v);
        values.push((n, v));
        running_max.push((n, best));
    }
    if values.is_empty() {
        return Err(Error::UndefinedOrder(format!(
            "{}: every coefficient in [{n_min}, {n_max}] is zero; {what} is undefined (polynomial)",
            f.name()
        )));
    }
    Ok(LimsupEstimate { estimate: best, values, running_max })
}

/// `max_{n_min ≤ n ≤ n_max} n·ln n / |ln|c_n||`, the windowed order estimate.
pub fn order_estimate(f: &CoefficientSequence, n_min: usize, n_max: usize) -> Result<LimsupEstimate> {
    limsup_scan(f, n_min, n_max, "order", |n, l| {
        if l == 0.0 {
            return None;
        }
        let n = n as f64;
        Some(n * n.ln() / l.abs())
    })
}

/// `max_{n_min ≤ n ≤ n_max} n^{1/ρ}·|c_n|^{1/n}`.
///
/// This is the un-normalised type `limsup n^{1/ρ} |c_n|^{1/n}`; the classical
/// type `σ = limsup (n/(eρ)) |c_n|^{ρ/n}` relates to it by `σ = β^ρ/(eρ)`.
pub fn type_estimate(f: &CoefficientSequence, rho: f64, n_min: usize, n_max: usize) -> Result<LimsupEstimate> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(Error::InvalidInput(format!("rho must be positive, got {rho}")));
    }
    limsup_scan(f, n_min, n_max, "type", |n, l| {
        let nf = n as f64;
        Some((nf.ln() / rho + l / nf).exp())
    })
}

/// Coefficients of the derivative; see [`CoefficientSequence::derivative`].
pub fn derivative_coeffs(f: &CoefficientSequence) -> CoefficientSequence {
    f.derivative()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent `ln n!` by direct summation.
    fn ln_fact_sum(n: usize) -> f64 {
        (2..=n).map(|k| (k as f64).ln()).sum()
    }

    #[test]
    fn exp_at_one_and_ten() {
        let f = CoefficientSequence::exp();
        let m1 = log_max_function(&f, 1.0).unwrap();
        assert!((m1.log_value - 1.0).abs() < 1e-14);
        assert_eq!(m1.regime, MajorantRegime::Exact);
        assert!((log_max_function(&f, 10.0).unwrap().log_value - 10.0).abs() < 1e-9);
    }

    #[test]
    fn exp_exact_up_to_500() {
        let ev = MaxFunctionEvaluator::new(CoefficientSequence::exp()).unwrap();
        for r in [0.001, 0.5, 3.0, 42.0, 137.0, 250.0, 499.0, 500.0] {
            let v = ev.log_max(r).unwrap().log_value;
            assert!((v - r).abs() <= 1e-9, "r={r}: {v}");
        }
    }

    #[test]
    fn polynomial_sum_is_finite() {
        let f = CoefficientSequence::polynomial("1+z", &[1.0, 1.0]).unwrap();
        assert_eq!(f.polynomial_degree(), Some(1));
        assert!((log_max_function(&f, 2.0).unwrap().log_value - 3.0f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn unknown_signs_give_upper_bound_regime() {
        let f = CoefficientSequence::polynomial("1-z", &[1.0, -1.0]).unwrap();
        assert_eq!(log_max_function(&f, 1.0).unwrap().regime, MajorantRegime::UpperBound);
    }

    #[test]
    fn finite_radius_is_rejected() {
        let geometric = CoefficientSequence::from_rule("1/(1-z/2)", SignPattern::Nonnegative, |n| Some(-(n as f64) * 2f64.ln()));
        assert!(matches!(log_max_function(&geometric, 1.0), Err(Error::Precondition(_))));
    }

    #[test]
    fn truncation_error_when_cap_is_too_small() {
        let opts = SeriesOptions { max_terms: 100, ..SeriesOptions::taylor() };
        let ev = MaxFunctionEvaluator::with_options(CoefficientSequence::exp(), opts).unwrap();
        assert!(matches!(ev.log_max(1000.0), Err(Error::Truncation { .. })));
    }

    #[test]
    fn majorant_is_monotone_in_r() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let families = [
            CoefficientSequence::exp(),
            CoefficientSequence::mittag_leffler(2.0, 1.0).unwrap(),
            CoefficientSequence::from_rule("e^{-n^2}", SignPattern::Nonnegative, |n| Some(-((n * n) as f64))),
        ];
        for f in families {
            let ev = MaxFunctionEvaluator::new(f).unwrap();
            for _ in 0..100 {
                let a: f64 = rng.gen_range(0.01..60.0);
                let b: f64 = rng.gen_range(0.01..60.0);
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                assert!(ev.log_max(lo).unwrap().log_value <= ev.log_max(hi).unwrap().log_value);
            }
        }
    }

    #[test]
    fn scaling_coefficients_rescales_radius() {
        let a = 2.0f64;
        let scaled = CoefficientSequence::from_rule("exp scaled", SignPattern::Nonnegative, move |n| {
            Some(-ln_factorial(n) + n as f64 * a.ln())
        });
        let base = MaxFunctionEvaluator::new(CoefficientSequence::exp()).unwrap();
        let sc = MaxFunctionEvaluator::new(scaled).unwrap();
        for r in [0.5, 1.0, 7.0, 30.0] {
            let d = sc.log_max(r).unwrap().log_value - base.log_max(a * r).unwrap().log_value;
            assert!(d.abs() < 1e-12, "r={r}: {d}");
        }
    }

    #[test]
    fn order_of_exp_in_window() {
        let est = order_estimate(&CoefficientSequence::exp(), 100, 1000).unwrap();
        // n ln n / ln n! decreases toward 1 from above
        let oracle_100 = 100.0 * 100f64.ln() / ln_fact_sum(100);
        assert!((est.estimate - oracle_100).abs() < 1e-12);
        let last = est.values.last().unwrap().1;
        assert!((last - 1000.0 * 1000f64.ln() / ln_fact_sum(1000)).abs() < 1e-12);
        assert!(est.values.windows(2).all(|w| w[1].1 < w[0].1));
    }

    #[test]
    fn order_of_gaussian_coefficients() {
        let f = CoefficientSequence::from_rule("e^{-n^2}", SignPattern::Nonnegative, |n| Some(-((n * n) as f64)));
        let est = order_estimate(&f, 100, 1000).unwrap();
        assert!(est.estimate <= 0.07);
        assert!((est.estimate - 100f64.ln() / 100.0).abs() < 1e-15);
    }

    #[test]
    fn order_two_family_is_exactly_two() {
        let f = CoefficientSequence::from_rule("n^{-n/2}", SignPattern::Nonnegative, |n| Some(-(n as f64) / 2.0 * (n as f64).ln()));
        let est = order_estimate(&f, 100, 1000).unwrap();
        assert!(est.values.iter().all(|(_, v)| (v - 2.0).abs() < 1e-12));
    }

    #[test]
    fn order_estimate_monotone_in_window() {
        let f = CoefficientSequence::mittag_leffler(2.0, 1.0).unwrap();
        let a = order_estimate(&f, 10, 200).unwrap().estimate;
        let b = order_estimate(&f, 10, 400).unwrap().estimate;
        assert!(b >= a);
    }

    #[test]
    fn type_of_exp_tends_to_e() {
        let est = type_estimate(&CoefficientSequence::exp(), 1.0, 100, 1000).unwrap();
        let at_1000 = (1000f64.ln() - ln_fact_sum(1000) / 1000.0).exp();
        assert!((est.estimate - at_1000).abs() < 1e-12);
        assert!((est.estimate / std::f64::consts::E - 1.0).abs() < 0.02);
    }

    #[test]
    fn type_of_n_to_minus_n_is_one() {
        let f = CoefficientSequence::from_rule("n^{-n}", SignPattern::Nonnegative, |n| Some(-(n as f64) * (n as f64).ln()));
        let est = type_estimate(&f, 1.0, 100, 1000).unwrap();
        assert!((est.estimate - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_function_has_undefined_order() {
        let f = CoefficientSequence::polynomial("1", &[1.0]).unwrap();
        assert!(matches!(order_estimate(&f, 2, 10), Err(Error::UndefinedOrder(_))));
        assert!(matches!(type_estimate(&f, 1.5, 2, 10), Err(Error::UndefinedOrder(_))));
    }

    #[test]
    fn derivative_of_exp_is_exp() {
        let d = derivative_coeffs(&CoefficientSequence::exp());
        for k in 0..200 {
            assert!((d.log_abs(k).unwrap() + ln_factorial(k)).abs() < 1e-10 * (k as f64 + 1.0));
        }
    }

    #[test]
    fn derivative_of_quadratic_polynomial() {
        let f = CoefficientSequence::polynomial("1+z+z^2", &[1.0, 1.0, 1.0]).unwrap();
        let d = derivative_coeffs(&f);
        assert_eq!(d.log_abs(0), Some(0.0));
        assert!((d.log_abs(1).unwrap() - 2f64.ln()).abs() < 1e-15);
        assert_eq!(d.log_abs(2), None);
        assert_eq!(d.polynomial_degree(), Some(1));
    }

    #[test]
    fn derivative_of_n_to_minus_n() {
        let f = CoefficientSequence::from_rule("n^{-n}", SignPattern::Nonnegative, |n| Some(-(n as f64) * (n as f64).ln()));
        let d = derivative_coeffs(&f);
        for k in 0..100usize {
            let expected = -(k as f64) * ((k + 1) as f64).ln();
            assert!((d.log_abs(k).unwrap() - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn derivative_then_integral_round_trip() {
        let f = CoefficientSequence::mittag_leffler(1.5, 2.0).unwrap();
        let d = f.derivative();
        for k in 0..=1000usize {
            let back = d.log_abs(k).unwrap() - ((k + 1) as f64).ln();
            let orig = f.log_abs(k + 1).unwrap();
            assert!((back - orig).abs() <= 1e-15 * orig.abs().max(1.0) * 4.0, "k={k}");
        }
    }

    #[test]
    fn csv_table_with_zero_marker() {
        let data = "n,ln_abs_c\n0,0.0\n1,ZERO\n2,-0.6931471805599453\n3,ZERO\n";
        let f = CoefficientSequence::from_csv("t", data.as_bytes()).unwrap();
        assert_eq!(f.log_abs(1), None);
        assert_eq!(f.polynomial_degree(), Some(2));
        // 1 + z^2/2 at r = 2
        assert!((log_max_function(&f, 2.0).unwrap().log_value - 3f64.ln()).abs() < 1e-15);
        assert!(CoefficientSequence::from_csv("bad", "0,abc\n".as_bytes()).is_err());
    }
}
