// Maximal modulus of an entire function from its Taylor coefficients,
// with the order and type read off the coefficients.

use entire_growth::entire::{order_estimate, type_estimate, CoefficientSequence, MaxFunctionEvaluator};

pub fn run_example() -> entire_growth::Result<()> {
    let exp = MaxFunctionEvaluator::new(CoefficientSequence::exp())?;
    for r in [1.0, 10.0, 100.0] {
        let m = exp.log_max(r)?;
        println!("exp: ln M({r}) = {:.12} ({} terms, {:?})", m.log_value, m.terms, m.regime);
    }

    // E_{1/2}(z) = sum z^n / (2n)! has order 1/2; the un-normalised type is (e/2)^2.
    let ml = CoefficientSequence::mittag_leffler(0.5, 1.0)?;
    let order = order_estimate(&ml, 100, 2000)?;
    let kind = type_estimate(&ml, 0.5, 100, 2000)?;
    println!("{}: order ~ {:.4}, type ~ {:.4}", ml.name(), order.estimate, kind.estimate);

    let p = CoefficientSequence::polynomial("1 - 3z + z^4", &[1.0, -3.0, 0.0, 0.0, 1.0])?;
    let m = MaxFunctionEvaluator::new(p)?.log_max(2.0)?;
    println!("polynomial: majorant bound ln M(2) <= {:.6} ({:?})", m.log_value, m.regime);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
