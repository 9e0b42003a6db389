//! Characteristic polynomial, Möbius invariant and flats of a few matrices.

use entropic::fixtures;
use entropic::matroid::MatroidRep;

fn main() -> entropic::Result<()> {
    for (name, a) in [
        ("3x5 example", fixtures::fan_matrix()),
        ("all-negative K4", fixtures::neg_k4_matrix()),
        ("graphic K4", fixtures::k4_graphic_matrix()),
    ] {
        let m = MatroidRep::build(&a)?;
        let flats: Vec<usize> = (0..=m.rank()).map(|r| m.flat_masks(r).len()).collect();
        println!("{name}");
        println!("  chi(t)    = {}", m.char_poly().display_with(&["t".into()]));
        println!("  mu        = {}", m.mobius_invariant());
        println!("  circuits  = {}", m.circuits().len());
        println!("  flats     = {flats:?}");
        println!("  basic     = {}", m.is_basic());
    }
    Ok(())
}
