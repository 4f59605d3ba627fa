//! Turns a config section into the objects of the library and runs the
//! requested analyses, producing tables and summary lines.

use std::collections::BTreeMap;
use std::fs::File;

use crate::bounds::{
    eps_grid, extremal_coefficients, gamma_condition, log_r_sum, tauberian_report, BoundOptions, ConjugateFn,
    EpsilonScan, GrowthFunction,
};
use crate::entire::{order_estimate, type_estimate, CoefficientSequence, MaxFunctionEvaluator};
use crate::error::{Error, Result};
use crate::legendre::linspace;
use crate::logsum::SeriesOptions;
use crate::multivar::{factorizable_demo, multi_coeff_bound, multi_max_bound, MultiCoefficientSequence, MultiGrowthFunction};
use crate::probgen::{generating_function_log, DiscreteDistribution};
use crate::scales::{example_31_check, example_32_report, example_33_check};

use super::config::{Analysis, Family, Section};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Bool(bool),
    Blank,
}

impl Cell {
    /// 17 significant digits in scientific notation.
    pub fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => format!("{x:.16e}"),
            Cell::Bool(b) => b.to_string(),
            Cell::Blank => String::new(),
        }
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as u64)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    /// File name inside the section directory.
    pub file: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(file: &str, header: &[&str]) -> Self {
        Table {
            file: file.to_string(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct AnalysisOutput {
    pub tables: Vec<Table>,
    pub summary: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunSettings {
    pub max_terms: usize,
    pub eps_points: usize,
}

impl Default for RunSettings {
    fn default() -> Self {
        RunSettings {
            max_terms: SeriesOptions::default().max_terms,
            eps_points: 199,
        }
    }
}

fn g(x: f64) -> String {
    format!("{x:.10e}")
}

/// Window on which profiles of tabulated coefficients are sampled.
fn sampling_window() -> Vec<f64> {
    linspace(-20.0, 20.0, 801)
}

pub fn coefficients(family: &Family) -> Result<CoefficientSequence> {
    match family {
        Family::Exp => Ok(CoefficientSequence::exp()),
        Family::PowerOrder { rho, c } => CoefficientSequence::mittag_leffler(*rho, *c),
        Family::LogPowerGrowth { .. } | Family::DoubleExp { .. } => Ok(extremal_coefficients(&profile(family)?)),
        Family::CustomCoeffCsv { path } => {
            let file = File::open(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            CoefficientSequence::from_csv(path.display().to_string(), file)
        }
        Family::Poisson { lambda } => Ok(DiscreteDistribution::poisson(*lambda)?.coefficients()),
        Family::Factorized(_) => Err(Error::Unsupported("factorized families have multi-index coefficients".into())),
    }
}

pub fn profile(family: &Family) -> Result<GrowthFunction> {
    match family {
        Family::Exp => GrowthFunction::power_of_exp(1.0, 1.0),
        Family::PowerOrder { rho, c } => GrowthFunction::power_of_exp(*c, *rho),
        Family::LogPowerGrowth { m, c } => GrowthFunction::power_log(*c, *m),
        Family::DoubleExp { c5, c6 } => GrowthFunction::exp_of_exp(*c5, *c6),
        Family::CustomCoeffCsv { .. } => GrowthFunction::from_series(&coefficients(family)?, sampling_window()),
        Family::Poisson { lambda } => DiscreteDistribution::poisson(*lambda)?.growth_profile(Vec::new()),
        Family::Factorized(_) => Err(Error::Unsupported("factorized families have multivariate profiles".into())),
    }
}

fn factors(family: &Family) -> &[Family] {
    match family {
        Family::Factorized(fs) => fs,
        _ => &[],
    }
}

fn multi_profile(family: &Family) -> Result<MultiGrowthFunction> {
    MultiGrowthFunction::separable(factors(family).iter().map(profile).collect::<Result<_>>()?)
}

fn multi_coefficients(family: &Family) -> Result<MultiCoefficientSequence> {
    MultiCoefficientSequence::factorized(factors(family).iter().map(coefficients).collect::<Result<_>>()?)
}

fn evaluator(f: CoefficientSequence, settings: &RunSettings) -> Result<MaxFunctionEvaluator> {
    MaxFunctionEvaluator::with_options(f, SeriesOptions { max_terms: settings.max_terms, ..SeriesOptions::taylor() })
}

fn bound_options(section: &Section, settings: &RunSettings) -> BoundOptions {
    BoundOptions {
        eps_grid: eps_grid(section.grids.eps_points.unwrap_or(settings.eps_points)),
        series: SeriesOptions { max_terms: settings.max_terms, ..SeriesOptions::default() },
        ..Default::default()
    }
}

pub fn run_analysis(section: &Section, analysis: Analysis, settings: &RunSettings) -> Result<AnalysisOutput> {
    match analysis {
        Analysis::CoeffBound => coeff_bound(section),
        Analysis::MaxBound => max_bound(section, settings),
        Analysis::Tauberian => tauberian(section),
        Analysis::OrderType => order_type(section),
        Analysis::Gamma => gamma(section),
        Analysis::Example31 => example_31(section),
        Analysis::Example32 => example_32(section),
        Analysis::Example33 => example_33(section),
        Analysis::Factorizable => factorizable(section),
        Analysis::Generating => generating(section),
    }
}

fn coeff_bound(section: &Section) -> Result<AnalysisOutput> {
    let fam = &section.family;
    if let Family::Factorized(fs) = fam {
        let lam = multi_profile(fam)?;
        let f = multi_coefficients(fam)?;
        let axis = section.grids.n_grid.clone().unwrap_or_else(|| (0..=20).collect());
        let d = fs.len();
        let mut header: Vec<String> = (1..=d).map(|j| format!("k{j}")).collect();
        header.extend(["ln_abs_c", "log_bound", "slack"].map(String::from));
        let mut table = Table { file: "coeff_bound.csv".into(), header, rows: Vec::new() };
        let mut violations = 0;
        let mut k = vec![0usize; d];
        let total = axis.len().pow(d as u32);
        for flat in 0..total {
            let mut rest = flat;
            for j in (0..d).rev() {
                k[j] = axis[rest % axis.len()];
                rest /= axis.len();
            }
            let c = f.log_abs(&k).unwrap_or(f64::NEG_INFINITY);
            let b = multi_coeff_bound(&lam, &k)?;
            if c > b + 1e-9 * b.abs().max(1.0) {
                violations += 1;
            }
            let mut row: Vec<Cell> = k.iter().map(|&x| Cell::from(x)).collect();
            row.extend([c.into(), b.into(), (b - c).into()]);
            table.push(row);
        }
        return Ok(AnalysisOutput {
            tables: vec![table],
            summary: vec![format!("coefficient bound violations: {violations} of {total}")],
        });
    }
    let lam = profile(fam)?;
    let f = coefficients(fam)?;
    let n_grid = section.grids.n_grid.clone().unwrap_or_else(|| (0..=100).collect());
    let mut table = Table::new("coeff_bound.csv", &["n", "ln_abs_c", "log_bound", "slack"]);
    let mut violations = 0;
    let mut saturated = 0;
    let mut min_slack = f64::INFINITY;
    for &n in &n_grid {
        let c = f.log_abs(n).unwrap_or(f64::NEG_INFINITY);
        let b = crate::bounds::coeff_upper_bound(&lam, n);
        saturated += b.saturated as usize;
        let slack = b.value - c;
        min_slack = min_slack.min(slack);
        if slack < -1e-9 * b.value.abs().max(1.0) {
            violations += 1;
        }
        table.push(vec![n.into(), c.into(), b.value.into(), slack.into()]);
    }
    Ok(AnalysisOutput {
        tables: vec![table],
        summary: vec![
            format!("coefficient bound violations: {violations} of {}", n_grid.len()),
            format!("minimum slack: {}", g(min_slack)),
            format!("saturated conjugates: {saturated}"),
        ],
    })
}

fn max_bound(section: &Section, settings: &RunSettings) -> Result<AnalysisOutput> {
    let fam = &section.family;
    let opts = bound_options(section, settings);
    let v_grid = section.grids.v_grid.clone().unwrap_or_else(|| vec![0.0, 1.0, 2.0, 3.0]);
    let mut table = Table::new("max_bound.csv", &["v", "ln_m", "ln_r", "log_bound", "eps_star", "s0", "c_eff"]);
    let mut eps = Table::new("epsilon.csv", &["eps", "K", "U", "Y"]);
    let mut summary = Vec::new();
    if let Family::Factorized(fs) = fam {
        let q = multi_profile(fam)?;
        let f = multi_coefficients(fam)?;
        for (i, &v) in v_grid.iter().enumerate() {
            let point = vec![v; fs.len()];
            let (ln_m, _) = crate::multivar::log_max_function_multi(&f, &vec![v.exp(); fs.len()])?;
            let (b, rep) = multi_max_bound(&q, &point, &opts)?;
            table.push(vec![v.into(), ln_m.into(), Cell::Blank, b.into(), rep.eps_star.into(), rep.s0.into(), rep.c_eff.into()]);
            if i == 0 {
                fill_eps(&mut eps, &rep);
            }
            summary.push(format!("v = {v} (all axes): ln M = {}, bound = {}, eps* = {}", g(ln_m), g(b), g(rep.eps_star)));
        }
        return Ok(AnalysisOutput { tables: vec![table, eps], summary });
    }
    let q = profile(fam)?;
    let ev = evaluator(coefficients(fam)?, settings)?;
    let scan = EpsilonScan::new(&q, opts.clone())?;
    for (i, &v) in v_grid.iter().enumerate() {
        let ln_m = ev.log_max_at_log_radius(v)?.log_value;
        let qstar = scan.qstar();
        let ln_r = log_r_sum(|n| qstar.at_index(n), v, &opts.series);
        let (b, rep) = scan.bound_at(v)?;
        table.push(vec![v.into(), ln_m.into(), ln_r.into(), b.into(), rep.eps_star.into(), rep.s0.into(), rep.c_eff.into()]);
        if i == 0 {
            fill_eps(&mut eps, &rep);
        }
        summary.push(format!(
            "v = {v}: ln M = {}, ln R = {}, bound = {}, eps* = {}",
            g(ln_m),
            g(ln_r),
            g(b),
            g(rep.eps_star)
        ));
    }
    Ok(AnalysisOutput { tables: vec![table, eps], summary })
}

fn fill_eps(t: &mut Table, rep: &crate::bounds::EpsilonReport) {
    for i in 0..rep.eps_grid.len() {
        t.push(vec![rep.eps_grid[i].into(), rep.k_vals[i].into(), rep.u_vals[i].into(), rep.y_vals[i].into()]);
    }
}

fn default_r_grid() -> Vec<f64> {
    (1..=5).map(|k| ((2 * k) as f64).exp()).collect()
}

fn tauberian(section: &Section) -> Result<AnalysisOutput> {
    let f = coefficients(&section.family)?;
    let lam = profile(&section.family)?;
    let r_grid = section.grids.r_grid.clone().unwrap_or_else(default_r_grid);
    let n_grid = section.grids.n_grid.clone().unwrap_or_else(|| (50..=500).step_by(50).collect());
    let rep = tauberian_report(&f, &lam, &r_grid, &n_grid)?;
    let mut table = Table::new("tauberian.csv", &["r", "lhs_ratio", "n", "rhs_ratio"]);
    for i in 0..rep.r_grid.len().max(rep.n_grid.len()) {
        let left = match (rep.r_grid.get(i), rep.lhs_ratios.get(i)) {
            (Some(&r), Some(&x)) => [Cell::from(r), Cell::from(x)],
            _ => [Cell::Blank, Cell::Blank],
        };
        let right = match (rep.n_grid.get(i), rep.rhs_ratios.get(i)) {
            (Some(&n), Some(&x)) => [Cell::from(n), Cell::from(x)],
            _ => [Cell::Blank, Cell::Blank],
        };
        let mut row = left.to_vec();
        row.extend(right);
        table.push(row);
    }
    let mut summary = vec![
        format!("terminal lhs ratio: {}", g(rep.lhs_terminal_mean)),
        format!("terminal rhs ratio: {}", g(rep.rhs_terminal_mean)),
        format!("terminal difference: {}", g(rep.terminal_difference)),
        format!("gamma estimate: {} (condition holds: {})", g(rep.gamma_estimate), rep.gamma_holds),
    ];
    for (n, why) in &rep.excluded {
        summary.push(format!("excluded n = {n}: {why}"));
    }
    Ok(AnalysisOutput { tables: vec![table], summary })
}

fn order_type(section: &Section) -> Result<AnalysisOutput> {
    let f = coefficients(&section.family)?;
    let n_min = section.grids.n_min.unwrap_or(100);
    let n_max = section.grids.n_max.unwrap_or(1000);
    let order = order_estimate(&f, n_min, n_max)?;
    let rho = match &section.family {
        Family::Exp => 1.0,
        Family::PowerOrder { rho, .. } => *rho,
        _ => order.estimate,
    };
    let kind = if rho > 0.0 && rho.is_finite() { type_estimate(&f, rho, n_min, n_max).ok() } else { None };
    let mut types: BTreeMap<usize, (f64, f64)> = BTreeMap::new();
    if let Some(t) = &kind {
        for ((n, v), (_, m)) in t.values.iter().zip(&t.running_max) {
            types.insert(*n, (*v, *m));
        }
    }
    let mut table = Table::new(
        "order_type.csv",
        &["n", "order_value", "order_running_max", "type_value", "type_running_max"],
    );
    for ((n, v), (_, m)) in order.values.iter().zip(&order.running_max) {
        let (tv, tm) = match types.get(n) {
            Some((a, b)) => (Cell::from(*a), Cell::from(*b)),
            None => (Cell::Blank, Cell::Blank),
        };
        table.push(vec![(*n).into(), (*v).into(), (*m).into(), tv, tm]);
    }
    let mut summary = vec![format!("order estimate on [{n_min}, {n_max}]: {}", g(order.estimate))];
    match kind {
        Some(t) => summary.push(format!("type estimate (rho = {}): {}", g(rho), g(t.estimate))),
        None => summary.push("type estimate: not available".into()),
    }
    Ok(AnalysisOutput { tables: vec![table], summary })
}

fn gamma(section: &Section) -> Result<AnalysisOutput> {
    let lam = profile(&section.family)?;
    let eps0 = section.grids.eps0.unwrap_or(0.5);
    let v_grid: Vec<f64> = match &section.grids.v_grid {
        Some(v) => v.iter().copied().filter(|x| *x >= 1.0).collect(),
        None => (1..=40).map(|i| i as f64).collect(),
    };
    let rep = gamma_condition(&lam, eps0, &v_grid)?;
    let mut table = Table::new("gamma.csv", &["v", "ratio"]);
    for (v, r) in &rep.ratios {
        table.push(vec![(*v).into(), (*r).into()]);
    }
    Ok(AnalysisOutput {
        tables: vec![table],
        summary: vec![format!("gamma (eps0 = {eps0}): {} (condition holds: {})", g(rep.gamma), rep.holds)],
    })
}

fn example_31(section: &Section) -> Result<AnalysisOutput> {
    let Family::LogPowerGrowth { m, c } = section.family else {
        return Err(Error::Unsupported("example_31 needs log_power_growth".into()));
    };
    let n_grid = section.grids.n_grid.clone().unwrap_or_else(|| vec![1, 2, 5, 10, 20, 50, 100, 200, 500, 1000]);
    let rep = example_31_check(m, c, &n_grid)?;
    let mut table = Table::new("example_31.csv", &["n", "lambda_star", "exponent_fit", "c4"]);
    for r in &rep.rows {
        table.push(vec![r.n.into(), r.lambda_star.into(), r.exponent_fit.into(), r.c4.into()]);
    }
    let last = rep.rows.last().expect("nonempty grid");
    Ok(AnalysisOutput {
        tables: vec![table],
        summary: vec![
            format!("conjugate exponent m' = {}", g(rep.conjugate_exponent)),
            format!("terminal exponent fit: {}", g(last.exponent_fit)),
            format!("terminal C4: {}", g(last.c4)),
        ],
    })
}

fn example_32(section: &Section) -> Result<AnalysisOutput> {
    let (rho, c) = match section.family {
        Family::Exp => (1.0, 1.0),
        Family::PowerOrder { rho, c } => (rho, c),
        _ => return Err(Error::Unsupported("example_32 needs exp or power_order".into())),
    };
    let f = coefficients(&section.family)?;
    let n_grid = section.grids.n_grid.clone().unwrap_or_else(|| vec![1, 2, 5, 10, 20, 50, 100, 200, 500, 1000]);
    let rows = example_32_report(rho, c, section.grids.gamma.unwrap_or(0.0), &f, &n_grid)?;
    let mut table = Table::new(
        "example_32.csv",
        &["n", "ln_abs_c", "log_bound", "slack", "refinement", "refinement_ratio"],
    );
    let mut violations = 0;
    for r in &rows {
        violations += (r.slack < 0.0) as usize;
        table.push(vec![
            r.n.into(),
            r.ln_abs_c.into(),
            r.log_bound.into(),
            r.slack.into(),
            r.refinement.into(),
            r.refinement_ratio.into(),
        ]);
    }
    Ok(AnalysisOutput {
        tables: vec![table],
        summary: vec![format!("bound violations: {violations} of {}", rows.len())],
    })
}

fn example_33(section: &Section) -> Result<AnalysisOutput> {
    let Family::DoubleExp { c5, c6 } = section.family else {
        return Err(Error::Unsupported("example_33 needs double_exp".into()));
    };
    let n_grid = section.grids.n_grid.clone().unwrap_or_else(|| vec![3, 10, 100, 1000, 10_000]);
    let rows = example_33_check(c5, c6, section.grids.c7.unwrap_or(1.0), &n_grid)?;
    let mut table = Table::new("example_33.csv", &["n", "lambda_star", "leading", "ratio", "log_c7_bound", "saturated"]);
    for r in &rows {
        table.push(vec![
            r.n.into(),
            r.lambda_star.into(),
            r.leading.into(),
            r.ratio.into(),
            r.log_c7_bound.into(),
            r.saturated.into(),
        ]);
    }
    let last = rows.last().expect("nonempty grid");
    Ok(AnalysisOutput {
        tables: vec![table],
        summary: vec![format!("terminal leading-term ratio: {}", g(last.ratio))],
    })
}

fn factorizable(section: &Section) -> Result<AnalysisOutput> {
    let fs = factors(&section.family);
    let f1 = coefficients(&fs[0])?;
    let f2 = coefficients(&fs[1])?;
    let size = section.grids.n_max.unwrap_or(20);
    let r_grid = section.grids.r_grid.clone().unwrap_or_else(|| vec![1.0, 2.0]);
    let v_grid = linspace(-6.0, 4.0, 201);
    let mut max_table = Table::new(
        "factorizable_max.csv",
        &["r1", "r2", "log_max", "log_max_1", "log_max_2", "residual"],
    );
    let mut rows_table = Table::new(
        "factorizable.csv",
        &["k", "l", "ln_abs_c", "log_bound", "bound_residual", "coeff_residual"],
    );
    let mut summary = Vec::new();
    for (i, &r) in r_grid.iter().enumerate() {
        let rep = factorizable_demo(&f1, &f2, (r, r), if i == 0 { size } else { 1 }, &v_grid)?;
        max_table.push(vec![
            r.into(),
            r.into(),
            rep.log_max.into(),
            rep.log_max_1.into(),
            rep.log_max_2.into(),
            rep.log_max_residual.into(),
        ]);
        summary.push(format!("r = ({r}, {r}): ln M residual {}", g(rep.log_max_residual)));
        if i == 0 {
            let mut worst_bound = 0.0f64;
            let mut worst_coeff = 0.0f64;
            for row in &rep.rows {
                worst_bound = worst_bound.max(row.bound_residual.abs());
                worst_coeff = worst_coeff.max(row.coeff_residual.abs());
                rows_table.push(vec![
                    row.k.into(),
                    row.l.into(),
                    row.ln_abs_c.into(),
                    row.log_bound.into(),
                    row.bound_residual.into(),
                    row.coeff_residual.into(),
                ]);
            }
            summary.push(format!("max coefficient separability residual: {}", g(worst_coeff)));
            summary.push(format!("max bound separability residual: {}", g(worst_bound)));
        }
    }
    Ok(AnalysisOutput { tables: vec![rows_table, max_table], summary })
}

fn generating(section: &Section) -> Result<AnalysisOutput> {
    let Family::Poisson { lambda } = section.family else {
        return Err(Error::Unsupported("generating needs poisson".into()));
    };
    let d = DiscreteDistribution::poisson(lambda)?;
    let r_grid = section.grids.r_grid.clone().unwrap_or_else(|| vec![0.5, 1.0, 2.0, 3.0, 5.0]);
    let mut table = Table::new("generating.csv", &["r", "ln_g", "closed_form"]);
    let mut worst = 0.0f64;
    for &r in &r_grid {
        let v = generating_function_log(&d, r)?;
        let closed = lambda * (r - 1.0);
        worst = worst.max((v - closed).abs());
        table.push(vec![r.into(), v.into(), closed.into()]);
    }
    Ok(AnalysisOutput {
        tables: vec![table],
        summary: vec![
            format!("ln g at r = 1: {}", g(generating_function_log(&d, 1.0)?)),
            format!("max deviation from lambda (r - 1): {}", g(worst)),
        ],
    })
}
