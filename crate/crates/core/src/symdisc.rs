//! Discriminants of (generalized) characteristic polynomials of symmetric
//! matrices as Gram determinants of the commutator map on skew-symmetric
//! matrices.
//!
//! For the skew basis `W_ij = e_i e_j^T - e_j e_i^T` let
//! `C_ij = E^{-1} X W_ij - W_ij X E^{-1}` and
//! `G_(ij),(kl) = tr(C_ij^T E C_kl E)`. Every entry is rational in `E` and
//! polynomial in `X`, and
//! `det G = 2^{C(m,2)} det(E)^{m-1} disc_t det(tI - M^{-1} X M^{-T})`
//! for any factorization `E = M M^T`.

use num::{One, Zero};

use crate::algebra::{binomial, discriminant, ExactMatrix, Matrix, Poly, Rational, UnivariateOverPoly};
use crate::error::{Error, Result};

/// `m x m` symmetric matrix of indeterminates `X_ij` (`i <= j`), numbered
/// row by row: `X_11, X_12, ..., X_1m, X_22, ...`.
pub fn symbolic_symmetric(m: usize) -> Matrix<Poly> {
    let arity = m * (m + 1) / 2;
    let mut idx = vec![vec![0usize; m]; m];
    let mut k = 0;
    for i in 0..m {
        for j in i..m {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    let rows = (0..m).map(|i| (0..m).map(|j| Poly::var(arity, idx[i][j])).collect()).collect();
    Matrix::from_rows(rows).expect("square")
}

/// Names `x11, x12, ...` matching [`symbolic_symmetric`].
pub fn symmetric_variable_names(m: usize) -> Vec<String> {
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i..=m {
            out.push(format!("x{i}{j}"));
        }
    }
    out
}

pub fn is_symmetric_matrix(x: &ExactMatrix) -> bool {
    x.rows() == x.cols() && (0..x.rows()).all(|i| (0..i).all(|j| x.get(i, j) == x.get(j, i)))
}

/// Symmetric with all leading principal minors positive.
pub fn check_positive_definite(e: &ExactMatrix) -> Result<()> {
    if !is_symmetric_matrix(e) {
        return Err(Error::NotPositiveDefinite);
    }
    for k in 1..=e.rows() {
        let idx: Vec<usize> = (0..k).collect();
        if e.select_rows(&idx).select_columns(&idx).det()? <= Rational::zero() {
            return Err(Error::NotPositiveDefinite);
        }
    }
    Ok(())
}

fn lift(e: &ExactMatrix, arity: usize) -> Matrix<Poly> {
    e.map(|q| Poly::constant(arity, q.clone()))
}

fn skew_basis(m: usize) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut w = ExactMatrix::zeros(m, m);
            w.set(i, j, Rational::one());
            w.set(j, i, -Rational::one());
            out.push(w);
        }
    }
    out
}

fn trace(a: &Matrix<Poly>) -> Poly {
    (0..a.rows()).fold(Poly::zero(a.get(0, 0).arity()), |acc, i| acc.add_poly(a.get(i, i)))
}

fn check_sizes(x: &Matrix<Poly>, e: &ExactMatrix) -> Result<()> {
    if x.rows() != x.cols() || e.rows() != x.rows() {
        return Err(Error::DimensionMismatch(format!(
            "X is {}x{}, E is {}x{}",
            x.rows(),
            x.cols(),
            e.rows(),
            e.cols()
        )));
    }
    if x.rows() < 2 {
        return Err(Error::DimensionMismatch("need m >= 2".into()));
    }
    check_positive_definite(e)
}

fn commutators(x: &Matrix<Poly>, e: &ExactMatrix) -> Result<Vec<Matrix<Poly>>> {
    let arity = x.get(0, 0).arity();
    let e_inv = lift(&e.inverse()?, arity);
    let left = e_inv.mul_matrix(x)?;
    let right = x.mul_matrix(&e_inv)?;
    skew_basis(x.rows())
        .iter()
        .map(|w| {
            let w = lift(w, arity);
            let a = left.mul_matrix(&w)?;
            let b = w.mul_matrix(&right)?;
            Ok(Matrix::from_vec(
                a.rows(),
                a.cols(),
                a.entries().iter().zip(b.entries()).map(|(p, q)| p.sub_poly(q)).collect(),
            ))
        })
        .collect()
}

/// Gram matrix of the commutator images under `<A, B> = tr(A^T E B E)`.
pub fn commutator_gram(x: &Matrix<Poly>, e: &ExactMatrix) -> Result<Matrix<Poly>> {
    check_sizes(x, e)?;
    let arity = x.get(0, 0).arity();
    let el = lift(e, arity);
    let cs = commutators(x, e)?;
    let weighted: Vec<Matrix<Poly>> = cs.iter().map(|c| c.mul_matrix(&el)).collect::<Result<_>>()?;
    let k = cs.len();
    let mut g = Matrix::from_vec(k, k, vec![Poly::zero(arity); k * k]);
    for a in 0..k {
        let lhs = cs[a].transpose().mul_matrix(&el)?;
        for b in a..k {
            let v = trace(&lhs.mul_matrix(&weighted[b])?);
            g.set(b, a, v.clone());
            g.set(a, b, v);
        }
    }
    Ok(g)
}

fn normalizer(e: &ExactMatrix) -> Result<Rational> {
    let m = e.rows() as u64;
    let two_pow = Rational::from_integer(num::BigInt::from(2u32).pow(binomial(m, 2) as u32));
    Ok(two_pow * num::pow(e.det()?, m as usize - 1))
}

/// `det G / (2^{C(m,2)} det(E)^{m-1})`, the discriminant of the normalized
/// generalized characteristic polynomial `det(tE - X) / det(E)`.
pub fn symdisc_poly(x: &Matrix<Poly>, e: &ExactMatrix) -> Result<Poly> {
    let g = commutator_gram(x, e)?;
    Ok(g.bareiss_det()?.scale(&normalizer(e)?.recip()))
}

/// Rational version of [`symdisc_poly`].
pub fn symdisc(x: &ExactMatrix, e: &ExactMatrix) -> Result<Rational> {
    if !is_symmetric_matrix(x) {
        return Err(Error::DimensionMismatch("X must be symmetric".into()));
    }
    let p = symdisc_poly(&lift(x, 0), e)?;
    Ok(p.constant_value().unwrap_or_default())
}

/// `disc_t det(tE - X)`, computed directly.
pub fn generalized_charpoly_disc(x: &ExactMatrix, e: &ExactMatrix) -> Result<Rational> {
    let m = x.rows();
    let t = Poly::var(1, 0);
    let rows: Vec<Vec<Poly>> = (0..m)
        .map(|i| {
            (0..m).map(|j| t.scale(e.get(i, j)).sub_poly(&Poly::constant(1, x.get(i, j).clone()))).collect()
        })
        .collect();
    let det = Matrix::from_rows(rows)?.bareiss_det()?;
    let u = UnivariateOverPoly::from_poly(&det, 0);
    let coeffs: Vec<Rational> = u.coeffs().iter().map(|c| c.constant_value().unwrap_or_default()).collect();
    Ok(discriminant(&UnivariateOverPoly::from_rationals(&coeffs))?.constant_value().unwrap_or_default())
}

/// Coordinates of a symmetric matrix in the basis `S_ij` (`i <= j`), where
/// `S_ii = e_i e_i^T` and `S_ij = e_i e_j^T + e_j e_i^T`.
fn sym_coords(s: &Matrix<Poly>) -> Vec<Poly> {
    let m = s.rows();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i..m {
            out.push(s.get(i, j).clone());
        }
    }
    out
}

fn sym_basis(m: usize) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i..m {
            let mut s = ExactMatrix::zeros(m, m);
            s.set(i, j, Rational::one());
            s.set(j, i, Rational::one());
            out.push(s);
        }
    }
    out
}

/// `L D L^T` factorization of a symmetric positive definite rational matrix.
fn ldl(k: &ExactMatrix) -> (ExactMatrix, Vec<Rational>) {
    let n = k.rows();
    let mut l = ExactMatrix::identity(n);
    let mut d = vec![Rational::zero(); n];
    for j in 0..n {
        let mut dj = k.get(j, j).clone();
        for p in 0..j {
            dj -= l.get(j, p) * l.get(j, p) * &d[p];
        }
        d[j] = dj;
        for i in j + 1..n {
            let mut v = k.get(i, j).clone();
            for p in 0..j {
                v -= l.get(i, p) * l.get(j, p) * &d[p];
            }
            l.set(i, j, v / &d[j]);
        }
    }
    (l, d)
}

/// Cauchy-Binet expansion of `det G` for rational `X`: with `G = P^T D P`
/// (`D` diagonal positive) the terms are `prod_{i in I} D_ii det(P_I)^2`
/// over all maximal row subsets `I`. Every term is nonnegative.
pub fn sos_certificate(x: &ExactMatrix, e: &ExactMatrix) -> Result<Vec<Rational>> {
    if !is_symmetric_matrix(x) {
        return Err(Error::DimensionMismatch("X must be symmetric".into()));
    }
    let xl = lift(x, 0);
    check_sizes(&xl, e)?;
    let m = x.rows();
    let basis = sym_basis(m);
    let nb = basis.len();
    let mut k = ExactMatrix::zeros(nb, nb);
    for a in 0..nb {
        for b in 0..nb {
            let prod = basis[a].mul_matrix(e)?.mul_matrix(&basis[b])?.mul_matrix(e)?;
            let tr: Rational = (0..m).map(|i| prod.get(i, i).clone()).sum();
            k.set(a, b, tr);
        }
    }
    let cs = commutators(&xl, e)?;
    let mut phi = ExactMatrix::zeros(nb, cs.len());
    for (c, cm) in cs.iter().enumerate() {
        let coords = sym_coords(cm);
        for (r, v) in coords.iter().enumerate() {
            phi.set(r, c, v.constant_value().unwrap_or_default());
        }
    }
    let (l, d) = ldl(&k);
    let p = l.transpose().mul_matrix(&phi)?;
    let mut terms = Vec::new();
    for rows in crate::reciprocal::subsets(nb, cs.len()) {
        let minor = p.select_rows(&rows).det()?;
        let weight: Rational = rows.iter().map(|&r| d[r].clone()).product();
        terms.push(weight * &minor * &minor);
    }
    Ok(terms)
}

/// `det(G)` for rational `X`, for comparison with the certificate.
pub fn gram_determinant(x: &ExactMatrix, e: &ExactMatrix) -> Result<Rational> {
    Ok(commutator_gram(&lift(x, 0), e)?.bareiss_det()?.constant_value().unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use crate::discriminant::all_ones_plus_identity;

    #[test]
    fn two_by_two_gram_and_discriminant() {
        let x = symbolic_symmetric(2);
        let g = commutator_gram(&x, &ExactMatrix::identity(2)).unwrap();
        let v = |i| Poly::var(3, i);
        let diff = &v(0) - &v(2);
        let expected = &v(1).pow(2).scale(&rat(8)) + &diff.pow(2).scale(&rat(2));
        assert_eq!(g.get(0, 0), &expected);
        let s = symdisc_poly(&x, &ExactMatrix::identity(2)).unwrap();
        assert_eq!(s, &diff.pow(2) + &v(1).pow(2).scale(&rat(4)));
    }

    #[test]
    fn scalar_matrix_has_zero_discriminant() {
        let e = all_ones_plus_identity(3);
        let x = ExactMatrix::from_rows(
            e.row_vecs().into_iter().map(|r| r.into_iter().map(|q| q * ratio(5, 3)).collect()).collect(),
        )
        .unwrap();
        assert!(symdisc(&x, &e).unwrap().is_zero());
    }

    #[test]
    fn generalized_identity_small() {
        let e = ExactMatrix::from_i64_rows(&[&[2, 1], &[1, 3]]);
        let x = ExactMatrix::from_i64_rows(&[&[1, 4], &[4, -2]]);
        let lhs = generalized_charpoly_disc(&x, &e).unwrap();
        let rhs = num::pow(e.det().unwrap(), 2) * symdisc(&x, &e).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn certificate_sums_to_gram_determinant() {
        let x = ExactMatrix::from_i64_rows(&[&[1, 2, 0], &[2, -1, 3], &[0, 3, 4]]);
        let e = all_ones_plus_identity(3);
        let terms = sos_certificate(&x, &e).unwrap();
        assert_eq!(terms.len(), 20);
        assert!(terms.iter().all(|t| *t >= Rational::zero()));
        assert_eq!(terms.iter().sum::<Rational>(), gram_determinant(&x, &e).unwrap());
        assert_eq!(sos_certificate(&ExactMatrix::identity(2), &ExactMatrix::identity(2)).unwrap().len(), 3);
    }

    #[test]
    fn rejects_indefinite() {
        let e = ExactMatrix::from_i64_rows(&[&[1, 2], &[2, 1]]);
        assert_eq!(symdisc(&ExactMatrix::identity(2), &e), Err(Error::NotPositiveDefinite));
    }
}
