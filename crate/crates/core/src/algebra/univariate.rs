use super::{Poly, Rational};

/// Polynomial in a distinguished variable `t` whose coefficients are
/// multivariate polynomials sharing one arity. `coeffs[k]` multiplies `t^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnivariateOverPoly {
    arity: usize,
    coeffs: Vec<Poly>,
}

impl UnivariateOverPoly {
    /// Trailing zero coefficients are dropped so the leading one is nonzero.
    pub fn new(arity: usize, mut coeffs: Vec<Poly>) -> Self {
        for c in &coeffs {
            assert_eq!(c.arity(), arity, "coefficient arity mismatch");
        }
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        UnivariateOverPoly { arity, coeffs }
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        Self::new(0, coeffs.iter().map(|c| Poly::constant(0, c.clone())).collect())
    }

    /// Views `p` as a polynomial in its variable `var`; coefficients keep the
    /// original arity and do not involve `var`.
    pub fn from_poly(p: &Poly, var: usize) -> Self {
        let arity = p.arity();
        let deg = p.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Poly::zero(arity); deg + 1];
        for (m, c) in p.terms() {
            let k = m.exps()[var] as usize;
            let mut e = m.exps().to_vec();
            e[var] = 0;
            coeffs[k] = coeffs[k].add_poly(&Poly::monomial(e, c.clone()));
        }
        Self::new(arity, coeffs)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Poly> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&super::rat(k as i64)))
            .collect();
        Self::new(self.arity, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        if self.is_zero() || other.is_zero() {
            return Self::new(self.arity, vec![]);
        }
        let mut out = vec![Poly::zero(self.arity); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_poly(&a.mul_poly(b));
            }
        }
        Self::new(self.arity, out)
    }

    /// Substitutes values for the coefficient variables.
    pub fn eval_coeffs(&self, point: &[Rational]) -> Vec<Rational> {
        self.coeffs.iter().map(|c| c.eval(point)).collect()
    }

    /// Back to a single polynomial with `t` inserted as variable `var` of a
    /// ring with one more variable.
    pub fn to_poly(&self, var: usize) -> Poly {
        let arity = self.arity + 1;
        let map: Vec<usize> = (0..self.arity).map(|i| if i < var { i } else { i + 1 }).collect();
        let t = Poly::var(arity, var);
        let mut out = Poly::zero(arity);
        for (k, c) in self.coeffs.iter().enumerate() {
            out = out.add_poly(&c.embed(arity, &map).mul_poly(&t.pow(k as u32)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn from_poly_splits_by_degree() {
        let p = Poly::from_terms(2, [(vec![2, 1], rat(3)), (vec![0, 1], rat(1)), (vec![1, 0], rat(-2))]);
        let u = UnivariateOverPoly::from_poly(&p, 0);
        assert_eq!(u.degree(), Some(2));
        assert_eq!(u.leading_coeff().unwrap(), &Poly::var(2, 1).scale(&rat(3)));
        assert!(u.coeffs()[1].constant_value() == Some(rat(-2)));
    }

    #[test]
    fn to_poly_inserts_t() {
        let b = Poly::var(1, 0);
        let u = UnivariateOverPoly::new(1, vec![b.clone(), Poly::one(1)]);
        let expected = Poly::from_terms(2, [(vec![1, 0], rat(1)), (vec![0, 1], rat(1))]);
        assert_eq!(u.to_poly(0), expected);
    }

    #[test]
    fn derivative_drops_constant() {
        let u = UnivariateOverPoly::from_rationals(&[rat(5), rat(0), rat(1)]);
        assert_eq!(u.derivative(), UnivariateOverPoly::from_rationals(&[rat(0), rat(2)]));
    }
}
