//! Integer-valued random variables through their generating functions.
//!
//! For `P(ξ = k) = c_k`, the generating function `g(z) = E z^ξ = Σ c_k z^k`
//! has nonnegative coefficients, so `ln g(r)` is exactly `ln M_g(r)` and the
//! growth profile is `Λ_P(v) = ln g(e^v)`. The Tauberian comparison then
//! relates the tail of the law to `Λ_P*`.

use std::io::Read;

use crate::bounds::{tauberian_report, GrowthFunction, TauberianReport};
use crate::entire::{ln_factorial, CoefficientSequence, MaxFunctionEvaluator, SignPattern};
use crate::error::{Error, Result};
use crate::logsum::{sum_log_series, sum_log_terms, SeriesOptions, SeriesOutcome};

/// Tolerance on `Σ_k P(ξ = k) = 1` for tabulated laws.
pub const NORMALIZATION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Poisson { lambda: f64 },
    /// `P(ξ = k) = p·(1 − p)^k`.
    Geometric { p: f64 },
    /// `ξ ≡ k`.
    Point { k: usize },
    /// Finite table of `ln P(ξ = k)`, `None` for zero mass.
    Table(Vec<Option<f64>>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    name: String,
    family: Family,
}

impl DiscreteDistribution {
    pub fn poisson(lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidInput(format!("poisson rate must be positive, got {lambda}")));
        }
        Ok(DiscreteDistribution {
            name: format!("poisson({lambda})"),
            family: Family::Poisson { lambda },
        })
    }

    pub fn geometric(p: f64) -> Result<Self> {
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::InvalidInput(format!("geometric parameter must lie in (0, 1], got {p}")));
        }
        Ok(DiscreteDistribution {
            name: format!("geometric({p})"),
            family: Family::Geometric { p },
        })
    }

    pub fn point(k: usize) -> Self {
        DiscreteDistribution {
            name: format!("point({k})"),
            family: Family::Point { k },
        }
    }

    /// A finite law from `ln P(ξ = k)`; the masses must sum to one.
    pub fn from_log_masses(name: impl Into<String>, log_masses: Vec<Option<f64>>) -> Result<Self> {
        if log_masses.iter().flatten().any(|l| l.is_nan() || *l > 0.0) {
            return Err(Error::InvalidInput("log masses must be finite and at most 0".into()));
        }
        let total = sum_log_terms(log_masses.iter().map(|l| l.unwrap_or(f64::NEG_INFINITY)));
        if !(total.exp_m1().abs() <= NORMALIZATION_TOL) {
            return Err(Error::InvalidInput(format!(
                "masses sum to {} instead of 1",
                total.exp()
            )));
        }
        Ok(DiscreteDistribution {
            name: name.into(),
            family: Family::Table(log_masses),
        })
    }

    /// Reads `k, ln_mass` rows (optional header, `ZERO` for zero mass).
    pub fn from_csv<R: Read>(name: impl Into<String>, reader: R) -> Result<Self> {
        let name = name.into();
        let seq = CoefficientSequence::from_csv(name.clone(), reader)?;
        let last = seq.max_index().unwrap_or(0);
        Self::from_log_masses(name, (0..=last).map(|k| seq.log_abs(k)).collect())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// `ln P(ξ = k)`, `None` for zero mass.
    pub fn log_mass(&self, k: usize) -> Option<f64> {
        match &self.family {
            Family::Poisson { lambda } => Some(k as f64 * lambda.ln() - lambda - ln_factorial(k)),
            Family::Geometric { p } => Some(p.ln() + k as f64 * (-p).ln_1p()),
            Family::Point { k: atom } => (k == *atom).then_some(0.0),
            Family::Table(t) => t.get(k).copied().flatten(),
        }
    }

    /// Radius of convergence of the generating function.
    pub fn radius(&self) -> f64 {
        match &self.family {
            Family::Geometric { p } if *p < 1.0 => 1.0 / (1.0 - p),
            _ => f64::INFINITY,
        }
    }

    pub fn is_entire(&self) -> bool {
        self.radius() == f64::INFINITY
    }

    /// The mass sequence as power series coefficients.
    pub fn coefficients(&self) -> CoefficientSequence {
        let name = format!("masses[{}]", self.name);
        match &self.family {
            Family::Point { k } => {
                let mut entries = vec![None; k + 2];
                entries[*k] = Some(0.0);
                CoefficientSequence::from_table(name, SignPattern::Nonnegative, entries).expect("valid table")
            }
            Family::Table(t) => {
                let mut entries = t.clone();
                entries.push(None);
                CoefficientSequence::from_table(name, SignPattern::Nonnegative, entries).expect("valid table")
            }
            _ => {
                let d = self.clone();
                CoefficientSequence::from_rule(name, SignPattern::Nonnegative, move |k| d.log_mass(k))
            }
        }
    }

    /// `Λ_P(v) = ln g(e^v)`. Poisson laws use the closed form `λ(e^v − 1)`;
    /// other entire laws are sampled on `v_grid`.
    pub fn growth_profile(&self, v_grid: Vec<f64>) -> Result<GrowthFunction> {
        match &self.family {
            Family::Poisson { lambda } => {
                let l = *lambda;
                Ok(GrowthFunction::custom(format!("{l}*(exp(v)-1)"), true, move |v| l * v.exp_m1()))
            }
            _ if !self.is_entire() => Err(Error::Precondition(format!(
                "{} has a finite radius of convergence",
                self.name
            ))),
            _ => GrowthFunction::from_series(&self.coefficients(), v_grid),
        }
    }
}

/// `Λ_P*(k) = k ln(k/λ) − k + λ` for the Poisson law.
pub fn poisson_profile_conjugate(lambda: f64, k: f64) -> f64 {
    if k == 0.0 {
        lambda
    } else {
        k * (k / lambda).ln() - k + lambda
    }
}

/// `ln g[ξ](r) = ln E r^ξ`.
pub fn generating_function_log(dist: &DiscreteDistribution, r: f64) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InvalidInput(format!("r must be positive and finite, got {r}")));
    }
    if !dist.is_entire() {
        if r >= dist.radius() {
            return Err(Error::Divergence(format!(
                "generating function of {} diverges at r = {r} (radius {})",
                dist.name(),
                dist.radius()
            )));
        }
        let lr = r.ln();
        return match sum_log_series(&SeriesOptions::taylor(), |k| {
            dist.log_mass(k).map_or(f64::NEG_INFINITY, |l| l + k as f64 * lr)
        }) {
            SeriesOutcome::Converged { log_sum, .. } => Ok(log_sum),
            SeriesOutcome::Exhausted { log_sum, last_log_term } => Err(Error::Truncation {
                max_terms: SeriesOptions::taylor().max_terms,
                last_log_term,
                log_sum,
            }),
            SeriesOutcome::Diverged { .. } => Err(Error::Divergence(dist.name().to_string())),
        };
    }
    Ok(MaxFunctionEvaluator::new(dist.coefficients())?.log_max(r)?.log_value)
}

/// Tauberian ratios for the mass sequence against `Λ_P`.
pub fn prob_tauberian_report(
    dist: &DiscreteDistribution,
    lambda_p: &GrowthFunction,
    r_grid: &[f64],
    n_grid: &[usize],
) -> Result<TauberianReport> {
    if !dist.is_entire() {
        return Err(Error::Precondition(format!(
            "{} is not entire (radius {})",
            dist.name(),
            dist.radius()
        )));
    }
    tauberian_report(&dist.coefficients(), lambda_p, r_grid, n_grid)
}
