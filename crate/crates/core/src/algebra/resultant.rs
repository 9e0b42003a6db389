//! Sylvester resultants and discriminants over a multivariate coefficient ring.

use super::{Matrix, Poly, UnivariateOverPoly};
use crate::error::{Error, Result};

/// Determinant of the Sylvester matrix of `p` and `q` in `t`.
///
/// Sign convention: `Res(t - b1, t - b2) = b1 - b2`, i.e. `Res(p, q)` is
/// `lc(p)^deg q` times the product of `q` over the roots of `p`.
pub fn resultant(p: &UnivariateOverPoly, q: &UnivariateOverPoly) -> Result<Poly> {
    let (Some(m), Some(n)) = (p.degree(), q.degree()) else {
        return Err(Error::ZeroInput);
    };
    if p.arity() != q.arity() {
        return Err(Error::DimensionMismatch("resultant operands over different rings".into()));
    }
    let arity = p.arity();
    let size = m + n;
    if size == 0 {
        return Ok(Poly::one(arity));
    }
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        rows.push(sylvester_row(p, shift, size));
    }
    for shift in 0..m {
        rows.push(sylvester_row(q, shift, size));
    }
    Matrix::from_rows(rows)?.bareiss_det()
}

fn sylvester_row(p: &UnivariateOverPoly, shift: usize, size: usize) -> Vec<Poly> {
    let deg = p.coeffs().len() - 1;
    let mut row = vec![Poly::zero(p.arity()); size];
    for (k, c) in p.coeffs().iter().enumerate() {
        row[shift + deg - k] = c.clone();
    }
    row
}

/// `(-1)^{m(m-1)/2} Res(p, p') / lc(p)` with exact division.
pub fn discriminant(p: &UnivariateOverPoly) -> Result<Poly> {
    let m = match p.degree() {
        None => return Err(Error::ZeroInput),
        Some(0) => return Err(Error::DegreeDrop),
        Some(m) => m,
    };
    let res = resultant(p, &p.derivative())?;
    let disc = res.div_exact(p.leading_coeff().unwrap())?;
    Ok(if (m * (m - 1) / 2) % 2 == 1 { disc.neg_poly() } else { disc })
}

/// Discriminant of `c_0 + c_1 t + ... + c_m t^m` as a polynomial in the
/// coefficient variables `c_0, ..., c_m`.
pub fn generic_discriminant(m: usize) -> Result<Poly> {
    let arity = m + 1;
    let p = UnivariateOverPoly::new(arity, (0..arity).map(|k| Poly::var(arity, k)).collect());
    discriminant(&p)
}
