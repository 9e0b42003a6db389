//! Degree of the entropic discriminant from the characteristic polynomial
//! and again from restrictions to hyperplane flats.

use entropic::fixtures;
use entropic::matroid::MatroidRep;

fn main() -> entropic::Result<()> {
    let cases = [
        ("3x5 example", fixtures::fan_matrix()),
        ("generic 3x5", fixtures::uniform_matrix(3, 5)),
        ("all-negative K4", fixtures::neg_k4_matrix()),
        ("graphic K4", fixtures::k4_graphic_matrix()),
        ("corank one, d = 5", fixtures::special_matrix(5)),
    ];
    for (name, a) in cases {
        let m = MatroidRep::build(&a)?;
        println!("{name:>20}: degree {} (crosscheck {})", m.entropic_degree()?, m.entropic_degree_crosscheck()?);
    }
    match MatroidRep::build(&fixtures::basic_matrix())?.entropic_degree() {
        Err(e) => println!("{:>20}: {e}", "basic"),
        Ok(d) => println!("{:>20}: {d}", "basic"),
    }
    Ok(())
}
