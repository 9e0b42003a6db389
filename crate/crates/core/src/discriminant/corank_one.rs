use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::{One, Zero};

use super::{all_ones_plus_identity, EntropicPoly, Regime};
use crate::algebra::resultant::generic_discriminant;
use crate::algebra::symmetric::from_elementary;
use crate::algebra::{discriminant, rat, ExactMatrix, Matrix, Poly, Rational, UnivariateOverPoly};
use crate::error::{Error, Result};

/// `det(tE + diag(b))` expanded by fraction-free elimination, as a
/// polynomial in `t` over `Q[b_1..b_d]`.
pub fn special_pencil(d: usize) -> Result<UnivariateOverPoly> {
    let arity = d + 1;
    let t = Poly::var(arity, d);
    let e = all_ones_plus_identity(d);
    let rows: Vec<Vec<Poly>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut entry = t.scale(e.get(i, j));
                    if i == j {
                        entry = entry.add_poly(&Poly::var(arity, i));
                    }
                    entry
                })
                .collect()
        })
        .collect();
    let det = Matrix::from_rows(rows)?.bareiss_det()?;
    let u = UnivariateOverPoly::from_poly(&det, d);
    let keep: Vec<usize> = (0..d).collect();
    let coeffs = u
        .coeffs()
        .iter()
        .map(|c| {
            let mut out = Poly::zero(d);
            for (m, v) in c.terms() {
                out = out.add_poly(&Poly::monomial(keep.iter().map(|&i| m.exps()[i]).collect(), v.clone()));
            }
            out
        })
        .collect();
    Ok(UnivariateOverPoly::new(d, coeffs))
}

/// Discriminant of `det(tE + diag(b))` written in `e_1..e_d`. The pencil has
/// coefficients `(k + 1) e_{d-k}` on `t^k`, so this is the generic
/// discriminant of degree `d` with those coefficients substituted.
pub fn special_disc_elementary(d: usize) -> Result<Poly> {
    let generic = generic_discriminant(d)?;
    let values: Vec<Poly> = (0..=d)
        .map(|k| {
            let scale = rat(k as i64 + 1);
            if k == d {
                Poly::constant(d, scale)
            } else {
                Poly::var(d, d - k - 1).scale(&scale)
            }
        })
        .collect();
    Ok(generic.substitute(&values))
}

fn raw_cache() -> &'static Mutex<HashMap<usize, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Poly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Unnormalized discriminant of `det(tE + diag(b))` in `b_1..b_d`.
pub fn special_disc_raw(d: usize) -> Result<Poly> {
    if let Some(p) = raw_cache().lock().unwrap().get(&d) {
        return Ok(p.clone());
    }
    let p = if d == 0 { Poly::one(0) } else { from_elementary(&special_disc_elementary(d)?) };
    raw_cache().lock().unwrap().insert(d, p.clone());
    Ok(p)
}

/// `A = U S D` with `S = (I | -1)` and `D` diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialReduction {
    /// Kernel vector of `A`, all coordinates nonzero.
    pub kernel: Vec<Rational>,
    /// `U = (v_1 A_1 | ... | v_d A_d)`.
    pub u: ExactMatrix,
    /// Diagonal of `D`, i.e. `1 / v_i`.
    pub diagonal: Vec<Rational>,
}

pub fn special_form_reduction(a: &ExactMatrix) -> Result<SpecialReduction> {
    let d = a.rows();
    if a.cols() != d + 1 || a.rank() != d {
        return Err(Error::NotCorankOne);
    }
    let k = a.kernel_basis();
    let kernel = k.row(0).to_vec();
    if let Some(i) = kernel.iter().position(Zero::is_zero) {
        return Err(Error::KernelZeroCoordinate(i));
    }
    let mut u = ExactMatrix::zeros(d, d);
    for j in 0..d {
        for i in 0..d {
            u.set(i, j, a.get(i, j) * &kernel[j]);
        }
    }
    let diagonal = kernel.iter().map(|v| v.recip()).collect();
    Ok(SpecialReduction { kernel, u, diagonal })
}

/// Entropic discriminant of a `d x (d+1)` matrix of rank `d` whose kernel
/// vector has no zero coordinate.
pub fn corank_one_disc(a: &ExactMatrix) -> Result<EntropicPoly> {
    let d = a.rows();
    let red = special_form_reduction(a)?;
    let raw = special_disc_raw(d)?;
    let poly = if red.u == ExactMatrix::identity(d) {
        raw
    } else {
        let inv = red.u.inverse()?;
        let forms: Vec<Poly> = (0..d).map(|i| Poly::linear(inv.row(i))).collect();
        raw.substitute(&forms)
    };
    Ok(EntropicPoly { poly: poly.primitive_normalize()?, regime: Regime::CorankOne })
}

/// `(disc_t f'(t), H(b))` for `f = prod (t - a_i)` and `b_i = a_n - a_i`,
/// where `H` is the normalized corank-one discriminant of size `n - 1`.
pub fn derivative_disc_check(a: &[Rational]) -> Result<(Rational, Rational)> {
    let n = a.len();
    if n < 2 {
        return Err(Error::DimensionMismatch("need at least two roots".into()));
    }
    let mut f = UnivariateOverPoly::from_rationals(&[Rational::one()]);
    for ai in a {
        f = f.mul(&UnivariateOverPoly::from_rationals(&[-ai.clone(), Rational::one()]));
    }
    let lhs = discriminant(&f.derivative())?.constant_value().unwrap_or_default();
    let d = n - 1;
    let h = corank_one_disc(&crate::fixtures::special_matrix(d))?;
    let b: Vec<Rational> = a[..d].iter().map(|ai| &a[d] - ai).collect();
    Ok((lhs, h.poly.eval(&b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symmetric::to_elementary;
    use crate::fixtures;

    #[test]
    fn pencil_coefficients_are_scaled_elementary() {
        for d in 1..=4 {
            let p = special_pencil(d).unwrap();
            for (k, c) in p.coeffs().iter().enumerate() {
                let e = crate::algebra::elementary_symmetric(d, d - k).scale(&rat(k as i64 + 1));
                assert_eq!(c, &e, "d={d} k={k}");
            }
        }
    }

    #[test]
    fn two_routes_agree() {
        for d in 2..=4 {
            let direct = discriminant(&special_pencil(d).unwrap()).unwrap();
            assert_eq!(direct, special_disc_raw(d).unwrap(), "d={d}");
        }
    }

    #[test]
    fn monomial_counts_and_leaders() {
        let expected = [(2, 3, vec![2, 0]), (3, 19, vec![4, 2, 0]), (4, 201, vec![6, 4, 2, 0])];
        for (d, count, lead) in expected {
            let h = corank_one_disc(&fixtures::special_matrix(d)).unwrap().poly;
            assert_eq!(h.len(), count);
            assert_eq!(h.lex_leading_term().unwrap().0.exps(), lead.as_slice());
            assert_eq!(h.total_degree(), Some((d * (d - 1)) as u32));
        }
    }

    #[test]
    fn elementary_expansion_matches_direct() {
        let h = special_disc_raw(4).unwrap();
        assert_eq!(to_elementary(&h).unwrap(), special_disc_elementary(4).unwrap());
        assert!(special_disc_elementary(4).unwrap().proportionality(&fixtures::sixteen_term_e_poly()).is_some());
    }

    #[test]
    fn zero_kernel_coordinate() {
        let a = ExactMatrix::from_i64_rows(&[&[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(corank_one_disc(&a).unwrap_err(), Error::KernelZeroCoordinate(1));
        assert_eq!(corank_one_disc(&fixtures::fan_matrix()).unwrap_err(), Error::NotCorankOne);
    }

    #[test]
    fn derivative_discriminants() {
        let (l, r) = derivative_disc_check(&[rat(0), rat(1), rat(2)]).unwrap();
        assert_eq!(l, rat(12));
        let (l2, r2) = derivative_disc_check(&[rat(0), rat(2), rat(3)]).unwrap();
        assert_eq!(l2, rat(28));
        assert_eq!(&l / &r, &l2 / &r2);
        let (a, b) = derivative_disc_check(&[rat(5), rat(-1)]).unwrap();
        assert_eq!((a, b), (rat(1), rat(1)));
    }
}
