//! Entropic discriminants of d x (d+1) matrices, their elementary symmetric
//! expansion and the derivative-discriminant identity.

use std::time::Instant;

use entropic::algebra::{rat, to_elementary};
use entropic::discriminant::{corank_one_disc, derivative_disc_check};
use entropic::fixtures;

fn main() -> entropic::Result<()> {
    for d in 2..=5 {
        let start = Instant::now();
        let h = corank_one_disc(&fixtures::special_matrix(d))?.poly;
        let (lead, _) = h.lex_leading_term().expect("nonzero");
        println!(
            "d = {d}: {} terms, degree {:?}, leading exponents {:?}, {:.2?}",
            h.len(),
            h.total_degree(),
            lead.exps(),
            start.elapsed()
        );
    }
    let h3 = corank_one_disc(&fixtures::special_matrix(3))?.poly;
    let e = to_elementary(&h3)?;
    println!("d = 3 in elementary symmetric polynomials: {}", e.display_with(&["e1".into(), "e2".into(), "e3".into()]));

    let (lhs, rhs) = derivative_disc_check(&[rat(0), rat(2), rat(3)])?;
    println!("disc f' = {lhs}, H at the root differences = {rhs}");
    Ok(())
}
