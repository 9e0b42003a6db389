//! Circuit polynomials, the Cauchy-Binet polynomial and the singular strata
//! of a reciprocal plane.

use entropic::algebra::poly::default_names;
use entropic::fixtures;
use entropic::matroid::MatroidRep;
use entropic::reciprocal::{circuit_polys, g_a, hessian_direct, hessian_product, one_based, singular_strata, tangent_codim};

fn main() -> entropic::Result<()> {
    let m = MatroidRep::build(&fixtures::neg_k4_matrix())?;
    let x = default_names("x", m.n());
    println!("circuit polynomials of the all-negative K4:");
    for c in circuit_polys(&m) {
        println!("  {:?}: {}", one_based(&c.circuit.support), c.poly.display_with(&x));
    }

    let a = fixtures::fan_matrix();
    let m = MatroidRep::build(&a)?;
    let g = g_a(&a)?;
    println!("g_A has {} terms of degree {:?}", g.len(), g.total_degree());
    for f in singular_strata(&m)? {
        println!("singular along {:?}, tangent codimension {}", one_based(&f.members), tangent_codim(&m, &f.members)?);
    }

    let u = fixtures::uniform_matrix(2, 4);
    println!("Hessian product formula agrees with the direct determinant: {}", hessian_product(&u)? == hessian_direct(&u)?);
    Ok(())
}
