//! Quick consistency suite over the shipped fixtures.

use num::{Signed, Zero};

use crate::algebra::{rat, ratio, Rational};
use crate::discriminant::{
    corank_one_disc, derivative_disc_check, disc_d2, plucker_sos_eval, special_disc_elementary,
};
use crate::error::Result;
use crate::fixtures;
use crate::graph::{retina_table, zaslavsky_egf_check};
use crate::matroid::MatroidRep;
use crate::reciprocal::{hessian_direct, hessian_product};
use crate::sampling;
use crate::solver::{analytic_centers, double_root_probe, RESIDUAL_TOL};
use crate::symdisc::{generalized_charpoly_disc, symdisc};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, f: impl FnOnce() -> Result<std::result::Result<(), String>>) -> Check {
    match f() {
        Ok(Ok(())) => Check { name, passed: true, detail: String::new() },
        Ok(Err(detail)) => Check { name, passed: false, detail },
        Err(e) => Check { name, passed: false, detail: e.to_string() },
    }
}

fn expect(ok: bool, detail: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat(x)).collect()
}

/// Same ratio `a_i / b_i` for every pair, with no zero denominators.
fn constant_ratio(pairs: &[(Rational, Rational)]) -> bool {
    let mut ratio: Option<Rational> = None;
    for (a, b) in pairs {
        if b.is_zero() {
            if !a.is_zero() {
                return false;
            }
            continue;
        }
        let r = a / b;
        match &ratio {
            None => ratio = Some(r),
            Some(q) if *q != r => return false,
            _ => {}
        }
    }
    ratio.is_some()
}

pub fn run(seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(check("matroid invariants", || {
        let k4 = MatroidRep::build(&fixtures::neg_k4_matrix())?;
        let g = MatroidRep::build(&fixtures::k4_graphic_matrix())?;
        let ex = MatroidRep::build(&fixtures::fan_matrix())?;
        Ok(expect(
            k4.char_poly_coeffs() == vec![7, -17, 15, -6, 1]
                && g.char_poly_coeffs() == vec![-6, 11, -6, 1]
                && ex.mobius_invariant() == 4,
            || "characteristic polynomial mismatch".into(),
        ))
    }));
    out.push(check("entropic degrees", || {
        let mut got = Vec::new();
        for a in [
            fixtures::fan_matrix(),
            fixtures::uniform_matrix(3, 5),
            fixtures::neg_k4_matrix(),
            fixtures::k4_graphic_matrix(),
        ] {
            let m = MatroidRep::build(&a)?;
            got.push((m.entropic_degree()?, m.entropic_degree_crosscheck()?));
        }
        Ok(expect(got == vec![(8, 8), (16, 16), (22, 22), (14, 14)], || format!("{got:?}")))
    }));
    out.push(check("degree and Möbius table", || {
        let t = retina_table(10);
        let last = t.last().map(|r| (r.degree, r.mu));
        Ok(expect(last == Some((123087958, 8161237)) && zaslavsky_egf_check(6), || format!("{last:?}")))
    }));
    out.push(check("corank-one discriminants", || {
        let mut counts = Vec::new();
        for d in 2..=4 {
            counts.push(corank_one_disc(&fixtures::special_matrix(d))?.poly.len());
        }
        let e = special_disc_elementary(4)?;
        Ok(expect(
            counts == vec![3, 19, 201] && e.proportionality(&fixtures::sixteen_term_e_poly()).is_some(),
            || format!("{counts:?}"),
        ))
    }));
    out.push(check("two-row discriminants", || {
        let h1 = disc_d2(&fixtures::pencil_family_matrix(rat(1)))?.poly;
        let h6 = disc_d2(&fixtures::pencil_family_matrix(rat(6)))?.poly;
        Ok(expect(
            h1.proportionality(&fixtures::pencil_family_printed_poly(&rat(1))).is_some()
                && h6.proportionality(&fixtures::pencil_family_a6_square_root().pow(2)).is_some(),
            || "printed family mismatch".into(),
        ))
    }));
    out.push(check("sum-of-squares identities", || {
        let mut rng = sampling::rng(seed);
        let a = fixtures::uniform_matrix(2, 3);
        let h = disc_d2(&a)?.poly;
        let h3 = corank_one_disc(&fixtures::special_matrix(3))?.poly;
        let ten = fixtures::ten_squares();
        let mut pairs = Vec::new();
        let mut pairs3 = Vec::new();
        for _ in 0..20 {
            let b = sampling::vector(&mut rng, 2);
            pairs.push((h.eval(&b), plucker_sos_eval(&a, &b)?));
            let b3 = sampling::vector(&mut rng, 3);
            pairs3.push((h3.eval(&b3), ten.eval(&b3)));
        }
        Ok(expect(constant_ratio(&pairs) && constant_ratio(&pairs3), || "ratio not constant".into()))
    }));
    out.push(check("symmetric discriminant identity", || {
        let mut rng = sampling::rng(seed);
        for m in 2..=3 {
            let x = sampling::symmetric(&mut rng, m);
            let e = sampling::positive_definite(&mut rng, m);
            let lhs = generalized_charpoly_disc(&x, &e)?;
            let rhs = num::pow(e.det()?, 2 * m - 2) * symdisc(&x, &e)?;
            if lhs != rhs {
                return Ok(Err(format!("m = {m}")));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("Hessian minor-square formula", || {
        for a in [fixtures::uniform_matrix(2, 3), fixtures::uniform_matrix(3, 4)] {
            if hessian_product(&a)? != hessian_direct(&a)? {
                return Ok(Err(format!("{}x{}", a.rows(), a.cols())));
            }
        }
        Ok(Ok(()))
    }));
    out.push(check("analytic centers", || {
        let a = fixtures::fan_matrix();
        let s = analytic_centers(&a, &v(&[3, 2, 2]))?;
        let k4 = analytic_centers(&fixtures::neg_k4_matrix(), &v(&[3, 5, 7, 11]))?;
        Ok(expect(
            s.len() == 4 && k4.len() == 7 && s.residuals.iter().chain(&k4.residuals).all(|r| *r < RESIDUAL_TOL),
            || format!("{} and {} solutions", s.len(), k4.len()),
        ))
    }));
    out.push(check("real locus", || {
        let m = MatroidRep::build(&fixtures::fan_matrix())?;
        let comps = m.real_locus_components()?;
        let start = [ratio(3, 4), ratio(5, 4), ratio(1, 2)];
        let probe = double_root_probe(&fixtures::fan_matrix(), &start, &v(&[0, 1, 0]), 20)?;
        Ok(expect(comps.len() == 4 && probe.min_gap() < 1e-4, || {
            format!("{} components, gap {:e}", comps.len(), probe.min_gap())
        }))
    }));
    out.push(check("derivative discriminant", || {
        let mut rng = sampling::rng(seed);
        let mut pairs = Vec::new();
        for _ in 0..5 {
            let (l, r) = derivative_disc_check(&sampling::distinct(&mut rng, 4))?;
            pairs.push((l, r));
        }
        Ok(expect(constant_ratio(&pairs), || "ratio not constant".into()))
    }));
    out.push(check("printed 3x5 polynomial", || {
        let p = fixtures::fan_printed_poly();
        let mut rng = sampling::rng(seed);
        let vanishes = fixtures::fan_real_points().iter().all(|pt| p.eval(&v(pt)).is_zero());
        let nonneg = (0..200).all(|_| !p.eval(&sampling::vector(&mut rng, 3)).is_negative());
        Ok(expect(vanishes && nonneg, || "vanishing or sign check failed".into()))
    }));
    out
}
