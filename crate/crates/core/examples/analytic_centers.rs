//! Bounded chambers of {Ax = b} cut by the coordinate hyperplanes and their
//! analytic centers.

use entropic::algebra::{rat, Rational};
use entropic::fixtures;
use entropic::matroid::MatroidRep;
use entropic::solver::{analytic_centers, enumerate_chambers};

fn main() -> entropic::Result<()> {
    let a = fixtures::fan_matrix();
    let b: Vec<Rational> = [3, 2, 2].iter().map(|&x| rat(x)).collect();
    let chambers = enumerate_chambers(&a, &b)?;
    println!(
        "{} chambers with a vertex, {} bounded, mu = {}",
        chambers.len(),
        chambers.iter().filter(|c| c.bounded).count(),
        MatroidRep::build(&a)?.mobius_invariant()
    );
    let sol = analytic_centers(&a, &b)?;
    for (x, label) in sol.solutions.iter().zip(&sol.chambers) {
        let z: Vec<f64> = x[..3].iter().map(|v| 1.0 / v).collect();
        println!("{label}: x = {x:.6?}");
        println!("       1/z1 + 1/(z1+z2) + 1/(z1+z3) = {:.12}", 1.0 / z[0] + 1.0 / (z[0] + z[1]) + 1.0 / (z[0] + z[2]));
    }
    println!("min pairwise gap {:.6}", sol.min_pairwise_gap);
    Ok(())
}
