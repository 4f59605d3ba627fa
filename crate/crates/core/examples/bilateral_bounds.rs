// Two-sided estimates: coefficient bounds from a growth profile, the
// epsilon-optimised upper bound of ln M, and the Tauberian ratios.

use entire_growth::bounds::{
    coeff_upper_bound, gamma_condition, max_function_upper_bound, tauberian_report, GrowthFunction,
};
use entire_growth::entire::{CoefficientSequence, MaxFunctionEvaluator};

pub fn run_example() -> entire_growth::Result<()> {
    let f = CoefficientSequence::exp();
    let lambda = GrowthFunction::power_of_exp(1.0, 1.0)?;
    for n in [1, 10, 100] {
        let b = coeff_upper_bound(&lambda, n);
        println!("n = {n:>3}: ln|c_n| = {:>12.6} <= {:>12.6}", f.log_abs(n).unwrap(), b.value);
    }

    let ev = MaxFunctionEvaluator::new(f.clone())?;
    for v in [0.0, 1.0, 2.0, 3.0] {
        let (bound, rep) = max_function_upper_bound(&lambda, v)?;
        let ln_m = ev.log_max_at_log_radius(v)?.log_value;
        println!("v = {v}: ln M = {ln_m:.6} <= {bound:.6} (eps* = {:.4})", rep.eps_star);
    }

    let r_grid: Vec<f64> = (1..=5).map(|k| (2.0 * k as f64).exp()).collect();
    let n_grid: Vec<usize> = (50..=500).step_by(50).collect();
    let rep = tauberian_report(&f, &lambda, &r_grid, &n_grid)?;
    println!(
        "Tauberian ratios: lhs {:.6}, rhs {:.6}",
        rep.lhs_terminal_mean, rep.rhs_terminal_mean
    );

    let square = GrowthFunction::power_log(1.0, 2.0)?;
    let g = gamma_condition(&square, 0.5, &[1.0, 2.0, 5.0, 10.0])?;
    println!("v^2 with eps0 = 0.5: gamma = {} (holds: {})", g.gamma, g.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
