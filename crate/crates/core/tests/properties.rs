mod common;

use common::*;
use entropic::algebra::{from_elementary, to_elementary, ExactMatrix, Poly, Rational};
use entropic::discriminant::{corank_one_disc, disc_d2};
use entropic::fixtures;
use entropic::matroid::MatroidRep;
use entropic::solver::analytic_centers;
use entropic::symdisc::symdisc;
use num::{Signed, Zero};
use proptest::prelude::*;

fn small_poly(arity: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..3, arity), -5i64..=5), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(Poly::zero(arity), |acc, (e, c)| acc.add_poly(&Poly::monomial(e, q(c))))
    })
}

fn int_matrix(rows: usize, cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(lo..=hi, rows * cols).prop_map(move |v| {
        let rows_v: Vec<Vec<Rational>> = v.chunks(cols).map(qv).collect();
        ExactMatrix::from_rows(rows_v).unwrap()
    })
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-6i64..=-1, 1i64..=6]
}

fn symmetrize(p: &Poly) -> Poly {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS.iter().fold(Poly::zero(3), |acc, perm| acc.add_poly(&p.permute(perm)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ring_laws(a in small_poly(3), b in small_poly(3), c in small_poly(3), pt in prop::collection::vec(-4i64..=4, 3)) {
        prop_assert_eq!(a.mul_poly(&b), b.mul_poly(&a));
        prop_assert_eq!(a.add_poly(&b).mul_poly(&c), a.mul_poly(&c).add_poly(&b.mul_poly(&c)));
        prop_assert_eq!(a.mul_poly(&b).mul_poly(&c), a.mul_poly(&b.mul_poly(&c)));
        prop_assert!(a.sub_poly(&a).is_zero());
        let x = qv(&pt);
        prop_assert_eq!(a.mul_poly(&b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn elementary_round_trip(p in small_poly(3)) {
        let s = symmetrize(&p);
        let e = to_elementary(&s).unwrap();
        prop_assert_eq!(from_elementary(&e), s);
    }

    #[test]
    fn characteristic_polynomial_vanishes_at_one(a in int_matrix(3, 5, -2, 2)) {
        let m = MatroidRep::build(&a);
        prop_assume!(m.is_ok());
        let m = m.unwrap();
        prop_assume!((0..a.cols()).all(|j| (0..a.rows()).any(|i| !a.get(i, j).is_zero())));
        prop_assert_eq!(m.char_poly_coeffs().iter().sum::<i64>(), 0);
        prop_assert_eq!(m.char_poly_coeffs(), whitney_charpoly(&a));
    }

    #[test]
    fn delta_recurrence(a in int_matrix(3, 5, -2, 2), e in 0usize..5) {
        let m = MatroidRep::build(&a);
        prop_assume!(m.is_ok());
        let m = m.unwrap();
        prop_assume!(!m.is_isthmus(e) && m.rank() == 3);
        prop_assert!(m.delta_recurrence_check(e).unwrap());
    }

    #[test]
    fn symdisc_is_nonnegative(v in prop::collection::vec(-9i64..=9, 6)) {
        let rows = vec![qv(&[v[0], v[1], v[2]]), qv(&[v[1], v[3], v[4]]), qv(&[v[2], v[4], v[5]])];
        let x = ExactMatrix::from_rows(rows).unwrap();
        let s = symdisc(&x, &ExactMatrix::identity(3)).unwrap();
        prop_assert!(!s.is_negative());
        prop_assert_eq!(s, sylvester_disc(&pencil_coefficients(&x, &ExactMatrix::identity(3))));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn solutions_scale_with_b(b in prop::collection::vec(1i64..=20, 3), lambda in 2i64..=5) {
        let a = fixtures::fan_matrix();
        let base = analytic_centers(&a, &qv(&b));
        prop_assume!(base.is_ok());
        let base = base.unwrap();
        let scaled_b: Vec<i64> = b.iter().map(|v| v * lambda).collect();
        let scaled = analytic_centers(&a, &qv(&scaled_b)).unwrap();
        prop_assert_eq!(&base.chambers, &scaled.chambers);
        for (x, y) in base.solutions.iter().zip(&scaled.solutions) {
            for (xi, yi) in x.iter().zip(y) {
                prop_assert!((xi * lambda as f64 - yi).abs() <= 1e-8 * (1.0 + yi.abs()));
            }
        }
    }

    #[test]
    fn two_row_discriminant_is_nonnegative(a in int_matrix(2, 4, -4, 4), pts in prop::collection::vec(prop::collection::vec(-20i64..=20, 2), 10)) {
        let h = disc_d2(&a);
        prop_assume!(h.is_ok());
        let h = h.unwrap().poly;
        for pt in pts {
            prop_assert!(!h.eval(&qv(&pt)).is_negative());
        }
    }

    #[test]
    fn corank_one_transformation_rule(
        u in int_matrix(3, 3, -3, 3),
        diag in prop::collection::vec(nonzero(), 4),
        pts in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 6),
    ) {
        let det_u = det(rows_of(&u));
        prop_assume!(!det_u.is_zero());
        let base = fixtures::special_matrix(3);
        let d = ExactMatrix::diagonal(&qv(&diag));
        let a = u.mul_matrix(&base).unwrap().mul_matrix(&d).unwrap();
        let h = corank_one_disc(&base).unwrap().poly;
        let h2 = corank_one_disc(&a).unwrap().poly;
        let u_inv = u.inverse().unwrap();
        let pairs: Vec<(Rational, Rational)> = pts
            .iter()
            .map(|pt| {
                let b = qv(pt);
                (h2.eval(&b), h.eval(&u_inv.mul_vec(&b)))
            })
            .collect();
        prop_assume!(pairs.iter().any(|(_, v)| !v.is_zero()));
        prop_assert!(constant_ratio(&pairs).is_ok());
    }
}

#[test]
fn special_discriminant_is_permutation_symmetric() {
    let h = corank_one_disc(&fixtures::special_matrix(4)).unwrap().poly;
    for perm in [[1, 0, 2, 3], [0, 2, 3, 1], [3, 2, 1, 0]] {
        assert_eq!(h.permute(&perm), h);
    }
}
