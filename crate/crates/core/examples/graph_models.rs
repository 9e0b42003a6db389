//! Incidence matrices of graphs and the degree table of all-negative
//! complete graphs.

use entropic::algebra::rat;
use entropic::graph::{incidence_matrix, retina_table, zaslavsky_charpoly, GraphModel, Signing};
use entropic::matroid::MatroidRep;
use entropic::solver::analytic_centers;

fn main() -> entropic::Result<()> {
    let g = GraphModel::complete(4, Signing::AllNegative);
    let a = incidence_matrix(&g);
    print!("{a}");
    let m = MatroidRep::build(&a)?;
    println!("chi from the lattice  = {}", m.char_poly().display_with(&["t".into()]));
    println!("chi from the formula  = {}", zaslavsky_charpoly(4).display_with(&["t".into()]));
    for row in retina_table(10) {
        println!("d = {:>2}: degree {:>10}, mu {:>8}", row.d, row.degree, row.mu);
    }
    let b = [3, 5, 7, 11].map(rat);
    let sol = analytic_centers(&a, &b)?;
    println!("{} real solutions of the retina equations for b = (3, 5, 7, 11)", sol.len());
    Ok(())
}
