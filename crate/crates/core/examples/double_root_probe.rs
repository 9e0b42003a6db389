//! Two analytic centers merge as b approaches a real zero of the entropic
//! discriminant.

use entropic::algebra::{rat, ratio};
use entropic::fixtures;
use entropic::matroid::MatroidRep;
use entropic::reciprocal::one_based;
use entropic::solver::double_root_probe;

fn main() -> entropic::Result<()> {
    let a = fixtures::fan_matrix();
    for (flat, span) in MatroidRep::build(&a)?.real_locus_components()? {
        let pts: Vec<Vec<String>> = span.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect();
        println!("real zero spanned by {pts:?} (flat {:?})", one_based(&flat.members));
    }
    let start = [ratio(3, 4), ratio(5, 4), ratio(1, 2)];
    let report = double_root_probe(&a, &start, &[rat(0), rat(1), rat(0)], 24)?;
    for s in report.steps.iter().step_by(4) {
        let b: Vec<String> = s.b.iter().map(|x| format!("{x:.3e}")).collect();
        println!("step {:>2}  b = ({})  gap = {:.3e}", s.step, b.join(", "), s.gap);
    }
    let control = double_root_probe(&a, &[rat(3), rat(2), rat(2)], &[rat(7), rat(3), rat(2)], 24)?;
    println!("control segment keeps the gap above {:.3}", control.min_gap());
    Ok(())
}
