// Probability generating functions of integer-valued laws viewed as
// entire functions.

use entire_growth::bounds::coeff_upper_bound;
use entire_growth::probgen::{generating_function_log, prob_tauberian_report, DiscreteDistribution};

pub fn run_example() -> entire_growth::Result<()> {
    let d = DiscreteDistribution::poisson(2.0)?;
    for r in [0.5, 1.0, 3.0] {
        println!("Poisson(2): ln g({r}) = {:.12}, closed form {:.12}", generating_function_log(&d, r)?, 2.0 * (r - 1.0));
    }

    let lambda = d.growth_profile(Vec::new())?;
    for k in [1, 10, 100] {
        let b = coeff_upper_bound(&lambda, k);
        println!("k = {k:>3}: ln P(xi = k) = {:>12.6} <= {:>12.6}", d.log_mass(k).unwrap(), b.value);
    }

    let rep = prob_tauberian_report(&d, &lambda, &[2.0, 5.0, 10.0], &[100, 200, 300])?;
    println!("Tauberian ratios: lhs {:.6}, rhs {:.6}", rep.lhs_terminal_mean, rep.rhs_terminal_mean);

    let geo = DiscreteDistribution::geometric(0.5)?;
    println!("geometric(1/2) has radius {} and is entire: {}", geo.radius(), geo.is_entire());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
