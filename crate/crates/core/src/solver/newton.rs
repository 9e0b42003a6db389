use nalgebra::{DMatrix, DVector};

/// Stop when `|Q^T (1/x)| <= GRADIENT_TOL * |1/x|`.
pub const GRADIENT_TOL: f64 = 1e-12;
/// Accepted membership residual once the Newton decrement reaches the rounding floor.
pub const RESIDUAL_TOL: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 200;
const DECREMENT_FLOOR: f64 = 1e-24;
const ARMIJO: f64 = 0.25;

#[derive(Clone, Debug)]
pub struct NewtonOutcome {
    pub x: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

fn objective(x: &DVector<f64>, signs: &[i8]) -> Option<f64> {
    let mut s = 0.0;
    for (v, &sg) in x.iter().zip(signs) {
        let y = v * f64::from(sg);
        if y <= 0.0 {
            return None;
        }
        s += y.ln();
    }
    Some(s)
}

/// Relative length of the projection of `1/x` onto the columns of `q`.
pub fn membership_residual(q: &DMatrix<f64>, x: &[f64]) -> f64 {
    let inv = DVector::from_iterator(x.len(), x.iter().map(|v| 1.0 / v));
    if q.ncols() == 0 {
        return 0.0;
    }
    (q.transpose() * &inv).norm() / inv.norm()
}

/// Maximizes `sum log(sign_i x_i)` over `x = start + q s`, where the columns
/// of `q` are an orthonormal basis of the kernel. `None` on failure.
pub fn analytic_center(q: &DMatrix<f64>, start: &[f64], signs: &[i8]) -> Option<NewtonOutcome> {
    let n = start.len();
    let mut x = DVector::from_column_slice(start);
    let mut value = objective(&x, signs)?;
    for it in 0..=MAX_ITERATIONS {
        let inv = x.map(|v| 1.0 / v);
        let residual = membership_residual(q, x.as_slice());
        if q.ncols() == 0 || residual <= GRADIENT_TOL {
            return Some(NewtonOutcome { x: x.iter().copied().collect(), residual, iterations: it });
        }
        if it == MAX_ITERATIONS {
            return None;
        }
        let g = q.transpose() * &inv;
        let weighted = DMatrix::from_fn(n, q.ncols(), |i, j| q[(i, j)] * inv[i] * inv[i]);
        let h = q.transpose() * weighted;
        let chol = h.cholesky()?;
        let step = chol.solve(&g);
        let decrement = g.dot(&step);
        if decrement < DECREMENT_FLOOR {
            return (residual < RESIDUAL_TOL)
                .then(|| NewtonOutcome { x: x.iter().copied().collect(), residual, iterations: it });
        }
        let dx = q * step;
        let mut alpha = 1.0;
        loop {
            let trial = &x + &dx * alpha;
            if let Some(v) = objective(&trial, signs) {
                if v >= value + ARMIJO * alpha * decrement || (alpha == 1.0 && decrement < 1e-16) {
                    x = trial;
                    value = v;
                    break;
                }
            }
            alpha *= 0.5;
            if alpha < 1e-20 {
                return (residual < RESIDUAL_TOL)
                    .then(|| NewtonOutcome { x: x.iter().copied().collect(), residual, iterations: it });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_center_is_midpoint() {
        let q = DMatrix::from_column_slice(2, 1, &[1.0 / 2f64.sqrt(), -1.0 / 2f64.sqrt()]);
        let out = analytic_center(&q, &[0.1, 0.9], &[1, 1]).unwrap();
        assert!((out.x[0] - 0.5).abs() < 1e-12 && (out.x[1] - 0.5).abs() < 1e-12);
        assert!(out.residual < RESIDUAL_TOL);
    }
}
