use num::Zero;

use super::entropic_discriminant;
use crate::algebra::{to_f64, ExactMatrix, Rational};
use crate::error::{Error, Result};
use crate::reciprocal::subsets;
use crate::solver::analytic_centers;

/// `g_A(x) / |x|^{2d}` with `g_A(x) = sum_I det(A_I)^2 prod_{i in I} x_i^2`.
/// At a fiber point `x` (with `1/x = A^T z`) this is the minor-square sum of
/// the Hessian of the arrangement form at `z`, up to a positive factor.
pub fn normalized_minor_square_sum(a: &ExactMatrix, x: &[f64]) -> Result<f64> {
    let d = a.rows();
    let norm2: f64 = x.iter().map(|v| v * v).sum();
    let mut total = 0.0;
    for idx in subsets(a.cols(), d) {
        let det = a.select_columns(&idx).det()?;
        if det.is_zero() {
            continue;
        }
        let det = to_f64(&det);
        total += det * det * idx.iter().map(|&i| x[i] * x[i] / norm2).product::<f64>();
    }
    Ok(total)
}

/// Minor-square sums at every real solution of the fiber over `b`.
pub fn hessian_values_at_roots(a: &ExactMatrix, b: &[Rational]) -> Result<Vec<f64>> {
    let h = entropic_discriminant(a, None)?;
    if h.poly.eval(b).is_zero() {
        return Err(Error::OnDiscriminant);
    }
    let sol = analytic_centers(a, b)?;
    sol.solutions.iter().map(|x| normalized_minor_square_sum(a, x)).collect()
}

/// Every fiber value is strictly positive.
pub fn hessian_sos_at_roots_check(a: &ExactMatrix, b: &[Rational]) -> Result<bool> {
    Ok(hessian_values_at_roots(a, b)?.iter().all(|v| *v > 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::fixtures;

    #[test]
    fn fiber_values_positive() {
        let v = hessian_values_at_roots(&fixtures::pencil_family_matrix(rat(1)), &[rat(2), rat(3)]).unwrap();
        assert_eq!(v.len(), 3);
        assert!(v.iter().all(|x| *x > 0.0));
        assert!(hessian_sos_at_roots_check(&fixtures::special_matrix(3), &[rat(1), rat(2), rat(3)]).unwrap());
    }
}
