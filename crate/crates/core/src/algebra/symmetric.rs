//! Symmetric polynomials in the basis of elementary symmetric polynomials.

use super::{Monomial, Poly};
use crate::error::{Error, Result};

/// `e_k` in `arity` variables; `e_0 = 1`.
pub fn elementary_symmetric(arity: usize, k: usize) -> Poly {
    if k > arity {
        return Poly::zero(arity);
    }
    let mut out = Poly::zero(arity);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0; arity];
        for &i in &idx {
            e[i] = 1;
        }
        out = out.add_poly(&Poly::monomial(e, super::rat(1)));
        // next k-subset in lexicographic order
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] < arity - k + pos {
                idx[pos] += 1;
                for j in pos + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// True when every transposition of adjacent variables fixes `p`.
pub fn is_symmetric(p: &Poly) -> bool {
    let n = p.arity();
    (0..n.saturating_sub(1)).all(|i| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        &p.permute(&perm) == p
    })
}

/// Rewrites a symmetric polynomial as a polynomial in `e_1, ..., e_d`
/// (variable `k` of the result is `e_{k+1}`) by repeatedly cancelling the
/// lex-leading term.
pub fn to_elementary(p: &Poly) -> Result<Poly> {
    if !is_symmetric(p) {
        return Err(Error::NotSymmetric);
    }
    let d = p.arity();
    let es: Vec<Poly> = (1..=d).map(|k| elementary_symmetric(d, k)).collect();
    let mut powers: Vec<Vec<Poly>> = es.iter().map(|e| vec![Poly::one(d), e.clone()]).collect();
    let mut rest = p.clone();
    let mut out = Poly::zero(d);
    while let Some((m, c)) = rest.lex_leading_term() {
        let a = m.exps().to_vec();
        let c = c.clone();
        let mut target = vec![0u32; d];
        for k in 0..d {
            let next = if k + 1 < d { a[k + 1] } else { 0 };
            if a[k] < next {
                return Err(Error::NotSymmetric);
            }
            target[k] = a[k] - next;
        }
        let mut term = Poly::constant(d, c.clone());
        for (k, &e) in target.iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[k].len() <= e as usize {
                let nxt = powers[k].last().unwrap().mul_poly(&es[k]);
                powers[k].push(nxt);
            }
            term = term.mul_poly(&powers[k][e as usize]);
        }
        rest = rest.sub_poly(&term);
        out = out.add_poly(&Poly::monomial(target, c));
        debug_assert!(rest.lex_leading_term().map_or(true, |(n, _)| n.lex_cmp(&Monomial::new(a.clone())).is_lt()));
    }
    Ok(out)
}

/// Inverse of [`to_elementary`]: substitutes `e_k(b)` for variable `k-1`.
pub fn from_elementary(q: &Poly) -> Poly {
    let d = q.arity();
    let es: Vec<Poly> = (1..=d).map(|k| elementary_symmetric(d, k)).collect();
    if q.is_zero() {
        return Poly::zero(d);
    }
    q.substitute(&es)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn power_sum_two_variables() {
        let b = |i| Poly::var(2, i);
        let p = &b(0).pow(2) + &b(1).pow(2);
        let e = |i| Poly::var(2, i);
        let expected = &e(0).pow(2) - &e(1).scale(&rat(2));
        assert_eq!(to_elementary(&p).unwrap(), expected);
    }

    #[test]
    fn e2_in_three_variables() {
        let p = elementary_symmetric(3, 2);
        assert_eq!(to_elementary(&p).unwrap(), Poly::var(3, 1));
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn rejects_non_symmetric() {
        let p = Poly::var(2, 0);
        assert_eq!(to_elementary(&p), Err(Error::NotSymmetric));
    }

    #[test]
    fn roundtrip() {
        let b = |i| Poly::var(3, i);
        let p = &(&b(0) * &b(1)).pow(2) + &(&(&b(0) * &b(2)).pow(2) + &(&b(1) * &b(2)).pow(2));
        let q = to_elementary(&p).unwrap();
        assert_eq!(from_elementary(&q), p);
    }
}
