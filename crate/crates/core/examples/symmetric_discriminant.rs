//! Discriminants of symmetric pencils as commutator Gram determinants, with a
//! sum-of-squares certificate.

use entropic::algebra::ExactMatrix;
use entropic::discriminant::all_ones_plus_identity;
use entropic::sampling;
use entropic::symdisc::{
    generalized_charpoly_disc, gram_determinant, sos_certificate, symbolic_symmetric, symdisc, symdisc_poly,
    symmetric_variable_names,
};

fn main() -> entropic::Result<()> {
    let p = symdisc_poly(&symbolic_symmetric(2), &ExactMatrix::identity(2))?;
    println!("2x2: {}", p.display_with(&symmetric_variable_names(2)));

    let mut rng = sampling::rng(11);
    let x = sampling::symmetric(&mut rng, 3);
    let e = all_ones_plus_identity(3);
    let s = symdisc(&x, &e)?;
    let direct = generalized_charpoly_disc(&x, &e)?;
    println!("3x3 with E = I + J: identity holds = {}", direct == num::pow(e.det()?, 4) * &s);

    let terms = sos_certificate(&x, &e)?;
    let sum: entropic::algebra::Rational = terms.iter().sum();
    println!("{} nonnegative terms, sum equals det G: {}", terms.len(), sum == gram_determinant(&x, &e)?);
    Ok(())
}
