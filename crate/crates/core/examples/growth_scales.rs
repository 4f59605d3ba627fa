// Conjugates of the standard growth scales: powers of the logarithm,
// functions of finite order and double exponentials.

use entire_growth::scales::{example_31_check, example_32_report, example_33_check, RegVarScale};
use entire_growth::entire::CoefficientSequence;

pub fn run_example() -> entire_growth::Result<()> {
    let rep = example_31_check(2.0, 1.0, &[10, 100, 1000])?;
    println!("Lambda(v) = v^2: conjugate exponent {}", rep.conjugate_exponent);
    for r in &rep.rows {
        println!("  n = {:>4}: Lambda*(n) = {:.6}, fitted exponent {:.6}", r.n, r.lambda_star, r.exponent_fit);
    }

    let f = CoefficientSequence::mittag_leffler(2.0, 1.0)?;
    for r in example_32_report(2.0, 1.0, 0.0, &f, &[10, 100, 1000])? {
        println!("order 2, n = {:>4}: slack {:.6}", r.n, r.slack);
    }

    for r in example_33_check(1.0, 1.0, 1.0, &[100, 10_000])? {
        println!("double exponential, n = {:>5}: leading-term ratio {:.4}", r.n, r.ratio);
    }

    let phi = RegVarScale::phi(2.0, 1.0)?;
    let x = 1e6;
    println!("phi scale at x = {x}: asymptotic / numeric conjugate = {:.4}", phi.asymptotic_ratio(x)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
