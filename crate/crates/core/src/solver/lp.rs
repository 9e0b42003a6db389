use num::{Signed, Zero};

use crate::algebra::{ExactMatrix, Rational};

/// Exact phase-one simplex with Bland's rule: is `{z >= 0 : M z = c}` nonempty?
pub fn feasible_nonnegative(m: &ExactMatrix, c: &[Rational]) -> bool {
    let (rows, cols) = (m.rows(), m.cols());
    let width = cols + rows + 1;
    let mut t = vec![vec![Rational::zero(); width]; rows];
    for r in 0..rows {
        let flip = c[r].is_negative();
        for j in 0..cols {
            t[r][j] = if flip { -m.get(r, j) } else { m.get(r, j).clone() };
        }
        t[r][cols + r] = Rational::from_integer(1.into());
        t[r][width - 1] = if flip { -&c[r] } else { c[r].clone() };
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    let mut cost = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..width {
            if j < cols || j == width - 1 {
                cost[j] -= &row[j];
            }
        }
    }
    loop {
        let Some(enter) = (0..width - 1).find(|&j| cost[j].is_negative()) else { break };
        let mut leave: Option<usize> = None;
        for r in 0..rows {
            if !t[r][enter].is_positive() {
                continue;
            }
            let q = &t[r][width - 1] / &t[r][enter];
            leave = match leave {
                None => Some(r),
                Some(l) => {
                    let ql = &t[l][width - 1] / &t[l][enter];
                    if q < ql || (q == ql && basis[r] < basis[l]) {
                        Some(r)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let Some(l) = leave else { break };
        let p = t[l][enter].clone();
        for v in t[l].iter_mut() {
            *v /= &p;
        }
        let pivot_row = t[l].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r != l && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        let f = cost[enter].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            *v -= &f * pv;
        }
        basis[l] = enter;
    }
    cost[width - 1].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn simple_systems() {
        let m = ExactMatrix::from_i64_rows(&[&[1, 1]]);
        assert!(feasible_nonnegative(&m, &[rat(1)]));
        assert!(!feasible_nonnegative(&m, &[rat(-1)]));
        let m = ExactMatrix::from_i64_rows(&[&[1, -1], &[1, 1]]);
        assert!(feasible_nonnegative(&m, &[rat(0), rat(1)]));
        let m = ExactMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert!(feasible_nonnegative(&m, &[rat(0), rat(0)]));
        assert!(!feasible_nonnegative(&m, &[rat(1), rat(2)]));
    }
}
