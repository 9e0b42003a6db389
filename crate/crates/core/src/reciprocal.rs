//! Circuit polynomials of the reciprocal plane, the Cauchy-Binet polynomial
//! `g_A`, tangent-space data at coordinate strata, the Hessian of the
//! arrangement product and its polar map.

use num::{One, Zero};

use crate::algebra::{ExactMatrix, Matrix, Poly, Rational};
use crate::error::{Error, Result};
use crate::matroid::{check_budget, mask_to_vec, vec_to_mask, Circuit, Flat, MatroidRep};

#[derive(Clone, Debug, PartialEq)]
pub struct CircuitPolynomial {
    pub circuit: Circuit,
    /// `h_v(x) = sum_i v_i prod_{j != i} x_j` over the support, in `x_1..x_n`.
    pub poly: Poly,
}

/// `h_v` for a kernel vector `v` on `support`, as a polynomial in `n` variables.
pub fn circuit_poly(n: usize, support: &[usize], v: &[Rational]) -> Poly {
    let mut out = Poly::zero(n);
    for (k, &i) in support.iter().enumerate() {
        let mut e = vec![0u32; n];
        for &j in support {
            if j != i {
                e[j] = 1;
            }
        }
        out = out.add_poly(&Poly::monomial(e, v[k].clone()));
    }
    out
}

/// One circuit polynomial per circuit, in the matroid's circuit order.
pub fn circuit_polys(m: &MatroidRep) -> Vec<CircuitPolynomial> {
    m.circuits()
        .iter()
        .map(|c| CircuitPolynomial { circuit: c.clone(), poly: circuit_poly(m.n(), &c.support, &c.vector) })
        .collect()
}

/// True when every non-flat `J` has a circuit in `subset` (indices into
/// `m.circuits()`) meeting the complement of `J` in exactly one element.
pub fn exposes(m: &MatroidRep, subset: &[usize]) -> Result<bool> {
    check_budget(m.n())?;
    let supports: Vec<u32> = subset.iter().map(|&k| vec_to_mask(&m.circuits()[k].support)).collect();
    let full = m.full_mask();
    for j in 0..=full {
        if m.is_flat(j) {
            continue;
        }
        let comp = full & !j;
        if !supports.iter().any(|&s| (s & comp).count_ones() == 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Indices of circuits whose support contains column `col`.
pub fn circuits_through(m: &MatroidRep, col: usize) -> Vec<usize> {
    m.circuits().iter().enumerate().filter(|(_, c)| c.support.contains(&col)).map(|(k, _)| k).collect()
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), &mut f);
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_subset(n, k, |s| out.push(s.to_vec()));
    out
}

/// `sum_I det(A_I)^2 prod_{i in I} x_i^2` over maximal minors; variable `i`
/// of the result belongs to column `cols[i]` inside a ring of arity `arity`.
fn minor_square_sum(a: &ExactMatrix, cols: &[usize], arity: usize) -> Result<Poly> {
    let d = a.rows();
    let mut out = Poly::zero(arity);
    for idx in subsets(a.cols(), d) {
        let det = a.select_columns(&idx).det()?;
        if det.is_zero() {
            continue;
        }
        let mut e = vec![0u32; arity];
        for &i in &idx {
            e[cols[i]] = 2;
        }
        out = out.add_poly(&Poly::monomial(e, &det * &det));
    }
    Ok(out)
}

/// `g_A(x) = sum_I det(A_I)^2 prod_{i in I} x_i^2`.
pub fn g_a(a: &ExactMatrix) -> Result<Poly> {
    let rank = a.rank();
    if rank < a.rows() {
        return Err(Error::RankDeficient { rank, rows: a.rows() });
    }
    let cols: Vec<usize> = (0..a.cols()).collect();
    minor_square_sum(a, &cols, a.cols())
}

/// `det(A diag(x)^2 A^T)` expanded symbolically.
pub fn g_a_determinant(a: &ExactMatrix) -> Result<Poly> {
    let (d, n) = (a.rows(), a.cols());
    let lifted: Matrix<Poly> = a.map(|q| Poly::constant(n, q.clone()));
    let mut scaled = lifted.clone();
    for j in 0..n {
        let x2 = Poly::var(n, j).pow(2);
        for i in 0..d {
            let v = scaled.get(i, j).mul_poly(&x2);
            scaled.set(i, j, v);
        }
    }
    scaled.mul_matrix(&lifted.transpose())?.bareiss_det()
}

/// `g` of a full-row-rank row selection of `A_J`, in `x_1..x_n`.
pub fn g_a_restricted(m: &MatroidRep, flat: &[usize]) -> Result<Poly> {
    let mask = vec_to_mask(flat);
    if !m.is_flat(mask) {
        return Err(Error::NotAFlat(flat.to_vec()));
    }
    let sub = m.matrix().select_columns(flat);
    let sub = sub.select_rows(&sub.independent_rows());
    minor_square_sum(&sub, flat, m.n())
}

/// Codimension of the tangent space of the reciprocal plane at a generic
/// point with support `J`: `|J| - rk(A_J) + |J^c| - #parallel classes of A/J`.
pub fn tangent_codim(m: &MatroidRep, flat: &[usize]) -> Result<usize> {
    if !m.is_flat(vec_to_mask(flat)) {
        return Err(Error::NotAFlat(flat.to_vec()));
    }
    let contraction = m.contraction(flat)?;
    let rest = m.n() - flat.len();
    Ok(flat.len() - m.rank_of_cols(flat) + rest - contraction.matroid.parallel_classes())
}

/// Nonempty flats whose contraction is non-basic.
pub fn singular_strata(m: &MatroidRep) -> Result<Vec<Flat>> {
    let mut out = Vec::new();
    for flat in m.flats() {
        if flat.members.is_empty() {
            continue;
        }
        if !m.contraction(&flat.members)?.matroid.is_basic() {
            out.push(flat);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TangentCone {
    pub support: Vec<usize>,
    /// `-sum_{i in C} (v_i / p_i^2) x_i` for circuits `C` inside the support.
    pub linear_forms: Vec<Poly>,
    /// Circuit polynomials of the contraction, in the original variables.
    pub contraction_circuits: Vec<Poly>,
}

/// Generators for the tangent cone at `p`; the support of `p` must be a flat
/// `J` and `1/p_J` must lie in the row space of `A_J`.
pub fn tangent_cone_generators(m: &MatroidRep, p: &[Rational]) -> Result<TangentCone> {
    if p.len() != m.n() {
        return Err(Error::DimensionMismatch(format!("point has {} coordinates, expected {}", p.len(), m.n())));
    }
    let support: Vec<usize> = (0..m.n()).filter(|&j| !p[j].is_zero()).collect();
    if !m.is_flat(vec_to_mask(&support)) {
        return Err(Error::NotAFlat(support));
    }
    let a_j = m.matrix().select_columns(&support);
    let inv: Vec<Rational> = support.iter().map(|&j| p[j].recip()).collect();
    let mut stacked = a_j.row_vecs();
    stacked.push(inv);
    if ExactMatrix::from_rows(stacked)?.rank() != a_j.rank() {
        return Err(Error::NotOnStratum);
    }
    let n = m.n();
    let linear_forms = m
        .circuits()
        .iter()
        .filter(|c| c.support.iter().all(|j| support.contains(j)))
        .map(|c| {
            let coeffs: Vec<Rational> = (0..n)
                .map(|j| match c.support.iter().position(|&s| s == j) {
                    Some(k) => -(&c.vector[k] / (&p[j] * &p[j])),
                    None => Rational::zero(),
                })
                .collect();
            Poly::linear(&coeffs)
        })
        .collect();
    let contraction = m.contraction(&support)?;
    let contraction_circuits = contraction
        .matroid
        .circuits()
        .iter()
        .map(|c| {
            let original: Vec<usize> = c.support.iter().map(|&k| contraction.columns[k]).collect();
            circuit_poly(n, &original, &c.vector)
        })
        .collect();
    Ok(TangentCone { support, linear_forms, contraction_circuits })
}

/// `ell_j(z) = sum_i a_ij z_i` for every column.
pub fn column_forms(a: &ExactMatrix) -> Vec<Poly> {
    (0..a.cols()).map(|j| Poly::linear(&a.column(j))).collect()
}

/// `f(z) = prod_j ell_j(z)`.
pub fn arrangement_form(a: &ExactMatrix) -> Poly {
    column_forms(a).iter().fold(Poly::one(a.rows()), |acc, l| acc.mul_poly(l))
}

/// `(-1)^{d-1} (n-1) f^{d-2} sum_I det(A_I)^2 prod_{k not in I} ell_k^2`.
pub fn hessian_product(a: &ExactMatrix) -> Result<Poly> {
    let (d, n) = (a.rows(), a.cols());
    if n < 2 {
        return Err(Error::DimensionMismatch("need at least two columns".into()));
    }
    let forms = column_forms(a);
    let squares: Vec<Poly> = forms.iter().map(|l| l.pow(2)).collect();
    let mut sum = Poly::zero(d);
    for idx in subsets(n, d) {
        let det = a.select_columns(&idx).det()?;
        if det.is_zero() {
            continue;
        }
        let mut term = Poly::constant(d, &det * &det);
        for k in (0..n).filter(|k| !idx.contains(k)) {
            term = term.mul_poly(&squares[k]);
        }
        sum = sum.add_poly(&term);
    }
    let f = arrangement_form(a);
    let sign = if d % 2 == 1 { 1 } else { -1 };
    let scalar = Rational::from_integer((sign * (n as i64 - 1)).into());
    Ok(f.pow(d as u32 - 2).mul_poly(&sum).scale(&scalar))
}

/// Determinant of the symbolic second-derivative matrix of `f`.
pub fn hessian_direct(a: &ExactMatrix) -> Result<Poly> {
    let d = a.rows();
    let f = arrangement_form(a);
    let grads: Vec<Poly> = (0..d).map(|i| f.derivative(i)).collect();
    let rows: Vec<Vec<Poly>> = (0..d).map(|i| (0..d).map(|j| grads[i].derivative(j)).collect()).collect();
    Matrix::from_rows(rows)?.bareiss_det()
}

/// `grad f(z)`; fails when `z` lies on one of the hyperplanes.
pub fn polar_map_eval(a: &ExactMatrix, z: &[Rational]) -> Result<Vec<Rational>> {
    if z.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!("point has {} coordinates, expected {}", z.len(), a.rows())));
    }
    let forms = column_forms(a);
    if let Some(j) = forms.iter().position(|l| l.eval(z).is_zero()) {
        return Err(Error::OnArrangement(j));
    }
    let f = arrangement_form(a);
    Ok((0..a.rows()).map(|i| f.derivative(i).eval(z)).collect())
}

/// `A ((zA)^{-1})` with the inverse taken entrywise.
pub fn polar_map_composition(a: &ExactMatrix, z: &[Rational]) -> Result<Vec<Rational>> {
    let za = a.transpose().mul_vec(z);
    if let Some(j) = za.iter().position(Zero::is_zero) {
        return Err(Error::OnArrangement(j));
    }
    let inv: Vec<Rational> = za.iter().map(|x| x.recip()).collect();
    Ok(a.mul_vec(&inv))
}

/// True when `u = c v` for some nonzero rational `c` (both nonzero).
pub fn projectively_equal(u: &[Rational], v: &[Rational]) -> bool {
    let Some(k) = u.iter().position(|x| !x.is_zero()) else { return false };
    if v[k].is_zero() {
        return false;
    }
    let c = &u[k] / &v[k];
    u.iter().zip(v).all(|(x, y)| *x == &c * y)
}

/// Columns of `m` listed with 1-based names, handy for display.
pub fn one_based(cols: &[usize]) -> Vec<usize> {
    cols.iter().map(|c| c + 1).collect()
}

/// Unit vector `e_i` of length `n`.
pub fn coordinate_point(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|j| if j == i { Rational::one() } else { Rational::zero() }).collect()
}

/// Every column subset (bitmask) that is not a flat.
pub fn non_flats(m: &MatroidRep) -> Result<Vec<Vec<usize>>> {
    check_budget(m.n())?;
    Ok((0..=m.full_mask()).filter(|&j| !m.is_flat(j)).map(mask_to_vec).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use crate::fixtures;

    #[test]
    fn circuit_polynomial_of_small_matrix() {
        let m = MatroidRep::build(&ExactMatrix::from_i64_rows(&[&[1, 0, 1], &[0, 1, 1]])).unwrap();
        let polys = circuit_polys(&m);
        assert_eq!(polys.len(), 1);
        assert_eq!(polys[0].circuit.vector, vec![rat(1), rat(1), rat(-1)]);
        let x = |i| Poly::var(3, i);
        let expected = &(&(&x(1) * &x(2)) + &(&x(0) * &x(2))) - &(&x(0) * &x(1));
        assert_eq!(polys[0].poly, expected);
    }

    #[test]
    fn parallel_columns_give_binomial() {
        let m = MatroidRep::build(&ExactMatrix::from_i64_rows(&[&[1, 2, 0], &[0, 0, 1]])).unwrap();
        let h = &circuit_polys(&m)[0];
        assert_eq!(h.circuit.vector, vec![rat(2), rat(-1)]);
        assert_eq!(h.poly, Poly::linear(&[rat(-1), rat(2), rat(0)]));
    }

    #[test]
    fn g_a_small_cases() {
        let one = ExactMatrix::from_i64_rows(&[&[1, 1]]);
        assert_eq!(g_a(&one).unwrap(), &Poly::var(2, 0).pow(2) + &Poly::var(2, 1).pow(2));
        let id = ExactMatrix::identity(3);
        assert_eq!(g_a(&id).unwrap(), Poly::monomial(vec![2, 2, 2], rat(1)));
        for a in [fixtures::fan_matrix(), fixtures::pencil_family_matrix(rat(6))] {
            assert_eq!(g_a(&a).unwrap(), g_a_determinant(&a).unwrap());
        }
    }

    #[test]
    fn g_restricted_to_flats() {
        let m = MatroidRep::build(&fixtures::fan_matrix()).unwrap();
        assert_eq!(g_a_restricted(&m, &[2]).unwrap(), Poly::var(5, 2).pow(2));
        assert_eq!(g_a_restricted(&m, &[0, 1, 3]).unwrap().len(), 3);
        assert!(matches!(g_a_restricted(&m, &[0, 1]), Err(Error::NotAFlat(_))));
    }

    #[test]
    fn tangent_codimensions_on_example() {
        let m = MatroidRep::build(&fixtures::fan_matrix()).unwrap();
        assert_eq!(tangent_codim(&m, &[0, 1, 2, 3, 4]).unwrap(), 2);
        assert_eq!(tangent_codim(&m, &[0]).unwrap(), 2);
        for i in 1..5 {
            assert!(tangent_codim(&m, &[i]).unwrap() < 2);
        }
        let strata: Vec<Vec<usize>> = singular_strata(&m).unwrap().into_iter().map(|f| f.members).collect();
        assert_eq!(strata, vec![vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn tangent_cone_at_coordinate_points() {
        let m = MatroidRep::build(&fixtures::fan_matrix()).unwrap();
        let smooth = tangent_cone_generators(&m, &coordinate_point(5, 0)).unwrap();
        assert!(smooth.contraction_circuits.iter().all(|h| h.total_degree() == Some(1)));
        let singular = tangent_cone_generators(&m, &coordinate_point(5, 1)).unwrap();
        assert!(singular.contraction_circuits.iter().any(|h| h.total_degree() == Some(2)));
        let off = vec![rat(1), rat(1), rat(0), rat(1), rat(0)];
        assert!(tangent_cone_generators(&m, &off).is_err());
    }

    #[test]
    fn hessian_identity_small() {
        for a in [
            ExactMatrix::from_i64_rows(&[&[1, 0, 1], &[0, 1, 2]]),
            ExactMatrix::from_i64_rows(&[&[1, 0, 1, 1], &[0, 1, 2, -3]]),
            ExactMatrix::identity(3),
        ] {
            assert_eq!(hessian_product(&a).unwrap(), hessian_direct(&a).unwrap());
        }
    }

    #[test]
    fn polar_map() {
        let id = ExactMatrix::identity(2);
        assert_eq!(polar_map_eval(&id, &[rat(1), rat(1)]).unwrap(), vec![rat(1), rat(1)]);
        let a = fixtures::fan_matrix();
        let z = [rat(1), rat(2), rat(3)];
        assert!(projectively_equal(&polar_map_eval(&a, &z).unwrap(), &polar_map_composition(&a, &z).unwrap()));
        assert_eq!(polar_map_eval(&a, &[rat(1), rat(-1), rat(0)]), Err(Error::OnArrangement(2)));
        let scaled: Vec<Rational> = z.iter().map(|x| x * ratio(1, 2)).collect();
        let g = polar_map_eval(&a, &z).unwrap();
        let gs = polar_map_eval(&a, &scaled).unwrap();
        assert!(g.iter().zip(&gs).all(|(x, y)| *y == x * ratio(1, 16)));
    }

    #[test]
    fn exposure() {
        let m = MatroidRep::build(&fixtures::fan_matrix()).unwrap();
        let all: Vec<usize> = (0..m.circuits().len()).collect();
        assert!(exposes(&m, &all).unwrap());
        assert!(!exposes(&m, &[]).unwrap());
        for (d, n) in [(2, 4), (2, 5), (3, 5)] {
            let u = MatroidRep::build(&fixtures::uniform_matrix(d, n)).unwrap();
            let basic = circuits_through(&u, n - 1)
                .into_iter()
                .filter(|&k| u.circuits()[k].support.len() == d + 1)
                .collect::<Vec<_>>();
            assert_eq!(basic.len() as u64, crate::algebra::binomial(n as u64 - 1, d as u64));
            assert!(exposes(&u, &basic).unwrap());
        }
    }
}
