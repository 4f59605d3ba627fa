// Entire functions of two variables: a factorizable example and a profile
// that does not split along the axes.

use entire_growth::bounds::{BoundOptions, GrowthFunction};
use entire_growth::entire::CoefficientSequence;
use entire_growth::legendre::linspace;
use entire_growth::multivar::{
    factorizable_demo, log_max_function_multi, multi_coeff_bound, multi_max_bound, MultiCoefficientSequence,
    MultiGrowthFunction,
};

pub fn run_example() -> entire_growth::Result<()> {
    let f = MultiCoefficientSequence::factorized(vec![CoefficientSequence::exp(), CoefficientSequence::exp()])?;
    let (ln_m, _) = log_max_function_multi(&f, &[1.0, 2.0])?;
    println!("exp(z1 + z2): ln M(1, 2) = {ln_m:.12}");

    let exp = GrowthFunction::power_of_exp(1.0, 1.0)?;
    let lambda = MultiGrowthFunction::separable(vec![exp.clone(), exp])?;
    println!("coefficient bound at k = (3, 4): {:.6}", multi_coeff_bound(&lambda, &[3, 4])?);
    let (bound, rep) = multi_max_bound(&lambda, &[1.0, 1.0], &BoundOptions::default())?;
    println!("ln M(e, e) <= {bound:.6} (eps* = {:.4})", rep.eps_star);

    let demo = factorizable_demo(
        &CoefficientSequence::exp(),
        &CoefficientSequence::exp(),
        (1.0, 1.0),
        5,
        &linspace(-6.0, 4.0, 201),
    )?;
    println!("factorizable residual of ln M: {:.2e}", demo.log_max_residual);

    // Lambda(v) = e^{max(v1, v2)} is convex and does not split.
    let grid = linspace(-6.0, 3.0, 46);
    let general = MultiGrowthFunction::general("exp of max", vec![grid.clone(), grid], |v| v[0].max(v[1]).exp())?;
    println!("non-separable bound at k = (2, 2): {:.6}", multi_coeff_bound(&general, &[2, 2])?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
