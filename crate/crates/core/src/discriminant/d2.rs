use num::Zero;

use super::{EntropicPoly, Regime};
use crate::algebra::{discriminant, ratio, ExactMatrix, Poly, Rational, UnivariateOverPoly};
use crate::error::{Error, Result};
use crate::reciprocal::arrangement_form;

/// Entropic discriminant of a `2 x n` matrix: the discriminant in `z` of
/// `b2 df/dz1 - b1 df/dz2` at `z2 = 1`.
pub fn disc_d2(a: &ExactMatrix) -> Result<EntropicPoly> {
    if a.rows() != 2 {
        return Err(Error::DimensionMismatch(format!("expected 2 rows, got {}", a.rows())));
    }
    let n = a.cols();
    if n < 3 {
        return Err(Error::DimensionMismatch(format!("expected at least 3 columns, got {n}")));
    }
    for i in 0..n {
        for j in i + 1..n {
            if a.select_columns(&[i, j]).det()?.is_zero() {
                return Err(Error::ParallelColumns(i, j));
            }
        }
    }
    let f = arrangement_form(a);
    let dehomogenized = |g: &Poly| -> Vec<Rational> {
        let mut c = vec![Rational::zero(); n];
        for (m, v) in g.terms() {
            c[m.exps()[0] as usize] += v;
        }
        c
    };
    let f1 = dehomogenized(&f.derivative(0));
    let f2 = dehomogenized(&f.derivative(1));
    let coeffs: Vec<Poly> =
        f1.iter().zip(&f2).map(|(c1, c2)| Poly::linear(&[-c2.clone(), c1.clone()])).collect();
    if coeffs[n - 1].is_zero() {
        return Err(Error::DegreeDrop);
    }
    let p = UnivariateOverPoly::new(2, coeffs);
    let poly = discriminant(&p)?.primitive_normalize()?;
    debug_assert_eq!(poly.total_degree(), Some(2 * n as u32 - 4));
    Ok(EntropicPoly { poly, regime: Regime::D2 })
}

/// Evaluates the printed sums of squared products of `2 x 2` minors `p_ij`
/// of `(A | b)` for `n = 3` and `n = 4`.
pub fn plucker_sos_eval(a: &ExactMatrix, b: &[Rational]) -> Result<Rational> {
    if a.rows() != 2 || b.len() != 2 {
        return Err(Error::DimensionMismatch("expected a 2 x n matrix and a pair b".into()));
    }
    let n = a.cols();
    let col = |k: usize| -> (Rational, Rational) {
        if k == n + 1 {
            (b[0].clone(), b[1].clone())
        } else {
            (a.get(0, k - 1).clone(), a.get(1, k - 1).clone())
        }
    };
    let p = |i: usize, j: usize| -> Rational {
        let (a0, a1) = col(i);
        let (b0, b1) = col(j);
        a0 * b1 - a1 * b0
    };
    let sq = |x: Rational| &x * &x;
    match n {
        3 => Ok(sq(p(1, 2) * p(3, 4)) + sq(p(1, 3) * p(2, 4)) + sq(p(2, 3) * p(1, 4))),
        4 => {
            let seven_halves = ratio(7, 2);
            let plain = sq(p(1, 2) * p(1, 2) * p(3, 4) * p(3, 5) * p(4, 5))
                + sq(p(1, 3) * p(1, 3) * p(2, 4) * p(2, 5) * p(4, 5))
                + sq(p(1, 4) * p(1, 4) * p(2, 3) * p(2, 5) * p(3, 5))
                + sq(p(1, 4) * p(2, 3) * p(2, 3) * p(1, 5) * p(4, 5))
                + sq(p(1, 3) * p(2, 4) * p(2, 4) * p(1, 5) * p(3, 5))
                + sq(p(1, 2) * p(3, 4) * p(3, 4) * p(1, 5) * p(2, 5));
            let weighted = sq(p(2, 3) * p(2, 4) * p(3, 4) * p(1, 5) * p(1, 5))
                + sq(p(1, 3) * p(1, 4) * p(3, 4) * p(2, 5) * p(2, 5))
                + sq(p(1, 2) * p(1, 4) * p(2, 4) * p(3, 5) * p(3, 5))
                + sq(p(1, 2) * p(1, 3) * p(2, 3) * p(4, 5) * p(4, 5));
            Ok(plain + seven_halves * weighted)
        }
        _ => Err(Error::UnsupportedN(n)),
    }
}
