// Discrete Legendre-Fenchel transform of a sampled function, its
// biconjugate and the Young gap.

use entire_growth::legendre::{biconjugate_1d, conjugate_1d, linspace, young_gap, SampledFunction1D};

pub fn run_example() -> entire_growth::Result<()> {
    // g(x) = x^2 / 2 is its own conjugate.
    let g = SampledFunction1D::from_fn(linspace(-4.0, 4.0, 801), |x| 0.5 * x * x)?;
    let ys = [-2.0, -1.0, 0.0, 0.5, 1.5, 3.0];
    let table = conjugate_1d(&g, &ys)?;
    println!("{:>6} {:>12} {:>12}", "y", "g*(y)", "y^2/2");
    for (y, v) in ys.iter().zip(&table.gstars) {
        println!("{y:>6.2} {v:>12.8} {:>12.8}", 0.5 * y * y);
    }

    // A nonconvex input: the biconjugate is its convex envelope.
    let w = SampledFunction1D::from_fn(linspace(-2.0, 2.0, 401), |x| (x * x - 1.0).powi(2))?;
    let env = biconjugate_1d(&w, &[-1.0, -0.5, 0.0, 0.5, 1.0])?;
    println!("double well envelope at -1, -0.5, 0, 0.5, 1: {:?}", env.gstars);

    let gap = young_gap(&g, 1.0, 1.0, 1.0)?;
    println!("Young gap g(1) + g*(1) - 1 = {gap:.3e}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
