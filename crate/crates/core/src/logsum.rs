//! Log-domain accumulation and truncated series summation.
//!
//! Every series in this crate (Taylor sums, `R_Q`, `K`, `U`) is summed term by
//! term in log space with the same truncation rule: stop once `tail_run`
//! consecutive terms each fall more than `tail_log_gap` below the running
//! log-sum.


/// Streaming log-sum-exp accumulator.
#[derive(Debug, Clone, Copy)]
pub struct LogSum {
    max: f64,
    scaled: f64,
}

impl Default for LogSum {
    fn default() -> Self {
        Self::new()
    }
}

impl LogSum {
    pub fn new() -> Self {
        LogSum {
            max: f64::NEG_INFINITY,
            scaled: 0.0,
        }
    }

    pub fn add(&mut self, log_term: f64) {
        if log_term == f64::NEG_INFINITY {
            return;
        }
        if self.max == f64::INFINITY {
            return;
        }
        if log_term.is_nan() || log_term == f64::INFINITY {
            self.max = if log_term.is_nan() { f64::NAN } else { f64::INFINITY };
            self.scaled = 1.0;
            return;
        }
        if log_term <= self.max {
            self.scaled += (log_term - self.max).exp();
        } else {
            self.scaled = self.scaled * (self.max - log_term).exp() + 1.0;
            self.max = log_term;
        }
    }

    pub fn value(&self) -> f64 {
        if self.max == f64::NEG_INFINITY || !self.max.is_finite() {
            self.max
        } else {
            self.max + self.scaled.ln()
        }
    }
}

/// `ln(e^a + e^b)` without overflow.
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    let mut acc = LogSum::new();
    acc.add(a);
    acc.add(b);
    acc.value()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    pub max_terms: usize,
    pub tail_log_gap: f64,
    pub tail_run: usize,
    /// Index past which terms must decrease for `tail_run` consecutive indices,
    /// otherwise the series is declared divergent. `None` disables the check.
    pub divergence_check: Option<usize>,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            max_terms: 1_000_000,
            tail_log_gap: 45.0,
            tail_run: 50,
            divergence_check: Some(10_000),
        }
    }
}

impl SeriesOptions {
    /// Options for Taylor sums: no divergence heuristic, only the term cap.
    pub fn taylor() -> Self {
        SeriesOptions {
            divergence_check: None,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeriesOutcome {
    Converged { log_sum: f64, terms: usize },
    Diverged { index: usize },
    Exhausted { log_sum: f64, last_log_term: f64 },
}

impl SeriesOutcome {
    /// Log of the sum with divergence and exhaustion mapped to `+inf`.
    pub fn log_value(&self) -> f64 {
        match *self {
            SeriesOutcome::Converged { log_sum, .. } => log_sum,
            _ => f64::INFINITY,
        }
    }
}

/// Sums `exp(log_term(n))` for `n = 0, 1, 2, ...`.
///
/// A `-inf` term is an exact zero. It counts toward the tail run only once
/// the running sum is nonzero, so leading zero coefficients never stop the sum.
pub fn sum_log_series<F>(opts: &SeriesOptions, mut log_term: F) -> SeriesOutcome
where
    F: FnMut(usize) -> f64,
{
    let mut acc = LogSum::new();
    let mut small_run = 0usize;
    let mut prev = f64::NEG_INFINITY;
    let mut last = f64::NEG_INFINITY;
    for n in 0..opts.max_terms {
        let t = log_term(n);
        if t.is_nan() || t == f64::INFINITY {
            return SeriesOutcome::Diverged { index: n };
        }
        acc.add(t);
        last = t;
        if let Some(start) = opts.divergence_check {
            if n > start && n <= start + opts.tail_run && !(t < prev || t == f64::NEG_INFINITY) {
                return SeriesOutcome::Diverged { index: n };
            }
        }
        prev = t;
        let current = acc.value();
        let small = if current == f64::NEG_INFINITY {
            false
        } else {
            t < current - opts.tail_log_gap
        };
        if small {
            small_run += 1;
            if small_run >= opts.tail_run {
                return SeriesOutcome::Converged {
                    log_sum: current,
                    terms: n + 1,
                };
            }
        } else {
            small_run = 0;
        }
    }
    SeriesOutcome::Exhausted {
        log_sum: acc.value(),
        last_log_term: last,
    }
}

/// Sums a finite list of log-terms.
pub fn sum_log_terms<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut acc = LogSum::new();
    for t in terms {
        acc.add(t);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn log_add_exp_matches_direct(x in -30f64..30.0, y in -30f64..30.0) {
            let direct = (x.exp() + y.exp()).ln();
            prop_assert!((log_add_exp(x, y) - direct).abs() < 1e-12);
            prop_assert_eq!(log_add_exp(x, y), log_add_exp(y, x));
            prop_assert_eq!(log_add_exp(x, f64::NEG_INFINITY), x);
        }
    }

    #[test]
    fn empty_sum_is_log_zero() {
        assert_eq!(LogSum::new().value(), f64::NEG_INFINITY);
        assert_eq!(sum_log_terms(vec![f64::NEG_INFINITY, f64::NEG_INFINITY]), f64::NEG_INFINITY);
    }

    #[test]
    fn geometric_series_converges() {
        let out = sum_log_series(&SeriesOptions::default(), |n| -(n as f64) * 0.5);
        let expected = -(1.0 - (-0.5f64).exp()).ln();
        match out {
            SeriesOutcome::Converged { log_sum, .. } => assert!((log_sum - expected).abs() < 1e-14),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn constant_terms_diverge_at_check_index() {
        let out = sum_log_series(&SeriesOptions::default(), |_| 0.0);
        assert!(matches!(out, SeriesOutcome::Diverged { index } if index == 10_001));
    }

    #[test]
    fn leading_zeros_do_not_stop_summation() {
        let out = sum_log_series(&SeriesOptions::taylor(), |n| if n < 200 { f64::NEG_INFINITY } else if n == 200 { 1.0 } else { f64::NEG_INFINITY });
        match out {
            SeriesOutcome::Converged { log_sum, terms } => {
                assert_eq!(log_sum, 1.0);
                assert_eq!(terms, 251);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn term_cap_reports_exhaustion() {
        let opts = SeriesOptions { max_terms: 100, divergence_check: None, ..Default::default() };
        assert!(matches!(sum_log_series(&opts, |n| n as f64), SeriesOutcome::Exhausted { .. }));
    }
}
