//! Reference computations written independently of the library internals.
#![allow(dead_code)]

use entropic::algebra::{ExactMatrix, Rational};
use num::{BigInt, One, Signed, Zero};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qv(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| q(x)).collect()
}

pub fn rows_of(a: &ExactMatrix) -> Vec<Vec<Rational>> {
    (0..a.rows()).map(|i| (0..a.cols()).map(|j| a.get(i, j).clone()).collect()).collect()
}

/// Determinant by Gaussian elimination with row swaps.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return Rational::zero() };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let pivot = m[c][c].clone();
        d *= &pivot;
        for r in c + 1..n {
            let f = &m[r][c] / &pivot;
            if f.is_zero() {
                continue;
            }
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    d
}

pub fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(p, r);
        for i in r + 1..rows {
            let f = &m[i][c] / &m[r][c];
            for k in c..cols {
                let v = &f * &m[r][k];
                m[i][k] -= v;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn column_rank(a: &ExactMatrix, cols: &[usize]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let m: Vec<Vec<Rational>> = (0..a.rows()).map(|i| cols.iter().map(|&j| a.get(i, j).clone()).collect()).collect();
    rank(m)
}

/// `chi(t) = sum_S (-1)^|S| t^{r - rk S}`, coefficient `k` for `t^k`.
pub fn whitney_charpoly(a: &ExactMatrix) -> Vec<i64> {
    let n = a.cols();
    let r = column_rank(a, &(0..n).collect::<Vec<_>>());
    let mut c = vec![0i64; r + 1];
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sign = if s.len() % 2 == 0 { 1 } else { -1 };
        c[r - column_rank(a, &s)] += sign;
    }
    c
}

/// Discriminant `(-1)^{m(m-1)/2} Res(p, p') / lc(p)` from the Sylvester
/// matrix; `p[k]` is the coefficient of `t^k`.
pub fn sylvester_disc(p: &[Rational]) -> Rational {
    let mut p = p.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let m = p.len() - 1;
    let dp: Vec<Rational> = (1..=m).map(|k| &p[k] * q(k as i64)).collect();
    let n = m - 1;
    let size = m + n;
    let mut s = vec![vec![Rational::zero(); size]; size];
    for i in 0..n {
        for (k, c) in p.iter().rev().enumerate() {
            s[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in dp.iter().rev().enumerate() {
            s[n + i][i + k] = c.clone();
        }
    }
    let res = det(s);
    let sign = if (m * (m - 1) / 2) % 2 == 0 { q(1) } else { q(-1) };
    sign * res / &p[m]
}

/// Coefficients of `det(tE - X)` by interpolation at `t = 0..=m`.
pub fn pencil_coefficients(x: &ExactMatrix, e: &ExactMatrix) -> Vec<Rational> {
    let m = x.rows();
    let values: Vec<Rational> = (0..=m)
        .map(|t| {
            let rows = (0..m).map(|i| (0..m).map(|j| q(t as i64) * e.get(i, j) - x.get(i, j)).collect()).collect();
            det(rows)
        })
        .collect();
    let mut vand: Vec<Vec<Rational>> = (0..=m)
        .map(|t| (0..=m).map(|k| num::pow(q(t as i64), k)).collect())
        .collect();
    solve(&mut vand, values)
}

/// Gauss-Jordan solve of a square nonsingular system.
pub fn solve(a: &mut [Vec<Rational>], mut b: Vec<Rational>) -> Vec<Rational> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("nonsingular");
        a.swap(p, c);
        b.swap(p, c);
        let pivot = a[c][c].clone();
        for k in 0..n {
            a[c][k] /= &pivot;
        }
        b[c] /= &pivot;
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..n {
                    let v = &f * &a[c][k];
                    a[r][k] -= v;
                }
                let v = &f * &b[c];
                b[r] -= v;
            }
        }
    }
    b
}

/// `prod (t - a_i)` differentiated, as coefficients.
pub fn derivative_of_root_product(a: &[Rational]) -> Vec<Rational> {
    let mut f = vec![q(1)];
    for ai in a {
        let mut g = vec![Rational::zero(); f.len() + 1];
        for (k, c) in f.iter().enumerate() {
            g[k + 1] += c;
            g[k] -= c * ai;
        }
        f = g;
    }
    (1..f.len()).map(|k| &f[k] * q(k as i64)).collect()
}

/// `u = c v` for some nonzero `c`.
pub fn proportional(u: &[Rational], v: &[Rational]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let mut ratio: Option<Rational> = None;
    for (a, b) in u.iter().zip(v) {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => {}
            (false, false) => {
                let r = a / b;
                if ratio.as_ref().is_some_and(|x| *x != r) {
                    return false;
                }
                ratio = Some(r);
            }
            _ => return false,
        }
    }
    ratio.is_some()
}

/// All pairs share one ratio `a / b`; zero pairs must vanish together.
pub fn constant_ratio(pairs: &[(Rational, Rational)]) -> Result<Rational, String> {
    let mut ratio: Option<Rational> = None;
    for (a, b) in pairs {
        if b.is_zero() {
            if !a.is_zero() {
                return Err(format!("{a} against zero"));
            }
            continue;
        }
        let r = a / b;
        match &ratio {
            Some(x) if *x != r => return Err(format!("ratio {r} differs from {x}")),
            _ => ratio = Some(r),
        }
    }
    ratio.ok_or_else(|| "all samples were zero".to_string())
}

pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
