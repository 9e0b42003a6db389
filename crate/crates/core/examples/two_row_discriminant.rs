//! Exact entropic discriminants of 2 x n matrices.

use entropic::algebra::rat;
use entropic::discriminant::{disc_d2, plucker_sos_eval};
use entropic::fixtures;

fn main() -> entropic::Result<()> {
    let names = ["b1".to_string(), "b2".to_string()];
    for a in [1, 6] {
        let h = disc_d2(&fixtures::pencil_family_matrix(rat(a)))?;
        println!("a = {a}: H = {}", h.poly.display_with(&names));
    }
    let a = fixtures::uniform_matrix(2, 4);
    let h = disc_d2(&a)?;
    let b = [rat(3), rat(-7)];
    println!("2x4 Vandermonde: H(b) = {}, minor-square sum = {}", h.poly.eval(&b), plucker_sos_eval(&a, &b)?);
    Ok(())
}
