//! Seeded random rational inputs: numerators in `[-1000, 1000]`,
//! denominators in `[1, 100]`.

use num::{BigInt, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ExactMatrix, Rational};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-1000i64..=1000)), BigInt::from(rng.gen_range(1i64..=100)))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let q = rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rational(rng)).collect()
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> ExactMatrix {
    ExactMatrix::from_rows((0..rows).map(|_| vector(rng, cols)).collect()).expect("rectangular")
}

pub fn symmetric<R: Rng>(rng: &mut R, m: usize) -> ExactMatrix {
    let mut x = ExactMatrix::zeros(m, m);
    for i in 0..m {
        for j in i..m {
            let q = rational(rng);
            x.set(i, j, q.clone());
            x.set(j, i, q);
        }
    }
    x
}

/// `B B^T + I` for a random square `B`.
pub fn positive_definite<R: Rng>(rng: &mut R, m: usize) -> ExactMatrix {
    let b = matrix(rng, m, m);
    let mut e = b.mul_matrix(&b.transpose()).expect("square");
    for i in 0..m {
        let v = e.get(i, i) + Rational::from_integer(1.into());
        e.set(i, i, v);
    }
    e
}

/// Distinct random rationals.
pub fn distinct<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let q = rational(rng);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symdisc::check_positive_definite;

    #[test]
    fn reproducible_and_well_formed() {
        assert_eq!(vector(&mut rng(7), 5), vector(&mut rng(7), 5));
        let mut r = rng(1);
        for m in 1..=4 {
            assert!(check_positive_definite(&positive_definite(&mut r, m)).is_ok());
        }
    }
}
