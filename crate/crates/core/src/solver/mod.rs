//! Bounded chambers of the coordinate arrangement on `{Ax = b}` and their
//! analytic centers, the real solutions of
//! `Ax = b, (1/x_1, ..., 1/x_n) in rowspan(A)`.

mod lp;
mod newton;

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{binomial, sign, to_f64, ExactMatrix, Rational};
use crate::error::{Error, Result};
use crate::matroid::{subset_budget, MatroidRep};
use crate::reciprocal::subsets;

pub use lp::feasible_nonnegative;
pub use newton::{analytic_center, membership_residual, NewtonOutcome, GRADIENT_TOL, MAX_ITERATIONS, RESIDUAL_TOL};

/// `{x : Ax = b}` as `x0 + t^T K`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSlice {
    pub particular: Vec<Rational>,
    pub kernel: ExactMatrix,
}

impl AffineSlice {
    pub fn new(a: &ExactMatrix, b: &[Rational]) -> Result<Self> {
        check_shape(a, b)?;
        let (_, pivots) = a.rref();
        let sub = a.select_columns(&pivots);
        let xb = sub.solve(b)?;
        let mut particular = vec![Rational::zero(); a.cols()];
        for (&p, v) in pivots.iter().zip(xb) {
            particular[p] = v;
        }
        Ok(AffineSlice { particular, kernel: a.kernel_basis() })
    }

    pub fn dimension(&self) -> usize {
        self.kernel.rows()
    }

    pub fn point(&self, t: &[Rational]) -> Vec<Rational> {
        let mut x = self.particular.clone();
        for (k, tk) in t.iter().enumerate() {
            for (xi, v) in x.iter_mut().zip(self.kernel.row(k)) {
                *xi += tk * v;
            }
        }
        x
    }

    /// Kernel coordinates of a point of the slice.
    pub fn coordinates(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let k = self.dimension();
        if k == 0 {
            return Ok(Vec::new());
        }
        let diff: Vec<Rational> = x.iter().zip(&self.particular).map(|(a, b)| a - b).collect();
        let gram = self.kernel.mul_matrix(&self.kernel.transpose())?;
        gram.solve(&self.kernel.mul_vec(&diff))
    }

    /// Orthonormal basis of the kernel as columns.
    pub fn orthonormal_kernel(&self) -> DMatrix<f64> {
        if self.dimension() == 0 {
            return DMatrix::zeros(self.particular.len(), 0);
        }
        self.kernel.to_f64().transpose().qr().q()
    }
}

fn check_shape(a: &ExactMatrix, b: &[Rational]) -> Result<()> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!("b has {} entries, A has {} rows", b.len(), a.rows())));
    }
    let rank = a.rank();
    if rank < a.rows() {
        return Err(Error::RankDeficient { rank, rows: a.rows() });
    }
    Ok(())
}

/// A region of the slice cut out by the coordinate hyperplanes.
#[derive(Clone, Debug, PartialEq)]
pub struct Chamber {
    /// `+1` or `-1` per coordinate.
    pub signs: Vec<i8>,
    /// Interior point in kernel coordinates of the slice.
    pub witness: Vec<Rational>,
    pub bounded: bool,
}

impl Chamber {
    pub fn label(&self) -> String {
        self.signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
    }
}

/// Recession cone of the chamber is trivial.
pub fn is_bounded(a: &ExactMatrix, signs: &[i8]) -> bool {
    let (d, n) = (a.rows(), a.cols());
    let mut m = ExactMatrix::zeros(d + 1, n);
    for j in 0..n {
        let s = Rational::from_integer(signs[j].into());
        for i in 0..d {
            m.set(i, j, a.get(i, j) * &s);
        }
        m.set(d, j, Rational::from_integer(1.into()));
    }
    let mut c = vec![Rational::zero(); d + 1];
    c[d] = Rational::from_integer(1.into());
    !feasible_nonnegative(&m, &c)
}

/// All chambers that have a vertex, sorted by sign vector (`-` before `+`).
pub fn enumerate_chambers(a: &ExactMatrix, b: &[Rational]) -> Result<Vec<Chamber>> {
    let slice = AffineSlice::new(a, b)?;
    let (d, n) = (a.rows(), a.cols());
    let k = n - d;
    let needed = binomial(n as u64, d as u64).saturating_mul(1u64.checked_shl(k as u32).unwrap_or(u64::MAX));
    let budget = subset_budget();
    if k >= 63 || needed > budget {
        return Err(Error::TooLarge { needed, budget });
    }
    let mut found: BTreeMap<Vec<i8>, Vec<Rational>> = BTreeMap::new();
    let mut degenerate: Vec<Vec<usize>> = Vec::new();
    for basis in subsets(n, d) {
        let ab = a.select_columns(&basis);
        if ab.det()?.is_zero() {
            continue;
        }
        let inv = ab.inverse()?;
        let xb = inv.mul_vec(b);
        if xb.iter().any(Zero::is_zero) {
            let mut zeros: Vec<usize> = (0..n).filter(|i| !basis.contains(i)).collect();
            zeros.extend(basis.iter().zip(&xb).filter(|(_, v)| v.is_zero()).map(|(&i, _)| i));
            zeros.sort_unstable();
            if !degenerate.contains(&zeros) {
                degenerate.push(zeros);
            }
            continue;
        }
        let free: Vec<usize> = (0..n).filter(|i| !basis.contains(i)).collect();
        let r = inv.mul_matrix(&a.select_columns(&free))?;
        let mut eps = Rational::from_integer(1.into());
        for (i, xi) in xb.iter().enumerate() {
            let row_sum: Rational = r.row(i).iter().map(|v| v.abs()).sum();
            if row_sum.is_positive() {
                let bound = xi.abs() / row_sum;
                if bound < eps {
                    eps = bound;
                }
            }
        }
        eps /= Rational::from_integer(2.into());
        for mask in 0u64..(1u64 << k) {
            let sf: Vec<Rational> = (0..k)
                .map(|j| if mask >> j & 1 == 1 { -eps.clone() } else { eps.clone() })
                .collect();
            let shift = r.mul_vec(&sf);
            let mut x = vec![Rational::zero(); n];
            for (j, &c) in free.iter().enumerate() {
                x[c] = sf[j].clone();
            }
            for (i, &c) in basis.iter().enumerate() {
                x[c] = &xb[i] - &shift[i];
            }
            let signs: Vec<i8> = x.iter().map(|v| sign(v) as i8).collect();
            found.entry(signs).or_insert(x);
        }
    }
    if !degenerate.is_empty() {
        degenerate.sort();
        return Err(Error::DegenerateRhs { subsets: degenerate });
    }
    found
        .into_iter()
        .map(|(signs, x)| {
            let witness = slice.coordinates(&x)?;
            let bounded = is_bounded(a, &signs);
            Ok(Chamber { signs, witness, bounded })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SolutionSet {
    pub solutions: Vec<Vec<f64>>,
    pub residuals: Vec<f64>,
    pub min_pairwise_gap: f64,
    /// Sign vector of the chamber each solution came from.
    pub chambers: Vec<String>,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    /// Largest `|Ax - b| / max(1, |b|)` over the solutions.
    pub fn max_equation_defect(&self, a: &ExactMatrix, b: &[Rational]) -> f64 {
        let af = a.to_f64();
        let bf = nalgebra::DVector::from_iterator(b.len(), b.iter().map(to_f64));
        let scale = bf.norm().max(1.0);
        self.solutions
            .iter()
            .map(|x| (&af * nalgebra::DVector::from_column_slice(x) - &bf).norm() / scale)
            .fold(0.0, f64::max)
    }
}

pub fn min_pairwise_gap(points: &[Vec<f64>]) -> f64 {
    let mut gap = f64::INFINITY;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d: f64 = points[i].iter().zip(&points[j]).map(|(u, v)| (u - v) * (u - v)).sum::<f64>().sqrt();
            gap = gap.min(d);
        }
    }
    gap
}

/// Analytic center of every bounded chamber, solved in parallel.
pub fn analytic_centers(a: &ExactMatrix, b: &[Rational]) -> Result<SolutionSet> {
    let chambers = enumerate_chambers(a, b)?;
    let slice = AffineSlice::new(a, b)?;
    let q = slice.orthonormal_kernel();
    let bounded: Vec<&Chamber> = chambers.iter().filter(|c| c.bounded).collect();
    let outcomes: Vec<NewtonOutcome> = bounded
        .par_iter()
        .map(|c| {
            let start: Vec<f64> = slice.point(&c.witness).iter().map(to_f64).collect();
            analytic_center(&q, &start, &c.signs).ok_or_else(|| Error::NewtonDivergence { chamber: c.label() })
        })
        .collect::<Result<_>>()?;
    let solutions: Vec<Vec<f64>> = outcomes.iter().map(|o| o.x.clone()).collect();
    Ok(SolutionSet {
        min_pairwise_gap: min_pairwise_gap(&solutions),
        residuals: outcomes.iter().map(|o| o.residual).collect(),
        chambers: bounded.iter().map(|c| c.label()).collect(),
        solutions,
    })
}

/// Number of real solutions equals the Möbius invariant.
pub fn solution_count_check(a: &ExactMatrix, b: &[Rational]) -> Result<bool> {
    let mu = MatroidRep::build(a)?.mobius_invariant();
    Ok(analytic_centers(a, b)?.len() as i64 == mu)
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeStep {
    pub step: usize,
    pub b: Vec<f64>,
    pub gap: f64,
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub steps: Vec<ProbeStep>,
    /// Error that ended the walk early, if any.
    pub stopped: Option<Error>,
}

impl ProbeReport {
    pub fn final_gap(&self) -> Option<f64> {
        self.steps.last().map(|s| s.gap)
    }

    pub fn min_gap(&self) -> f64 {
        self.steps.iter().map(|s| s.gap).fold(f64::INFINITY, f64::min)
    }
}

/// Walks `b_s = b_end + 2^{-s} (b_start - b_end)` for `s = 0..=steps`,
/// recording the minimum distance between solutions at each step.
pub fn double_root_probe(a: &ExactMatrix, b_start: &[Rational], b_end: &[Rational], steps: usize) -> Result<ProbeReport> {
    check_shape(a, b_start)?;
    check_shape(a, b_end)?;
    let mut out = Vec::new();
    let mut weight = Rational::from_integer(1.into());
    for step in 0..=steps {
        let b: Vec<Rational> = b_start.iter().zip(b_end).map(|(s, e)| e + (s - e) * &weight).collect();
        match analytic_centers(a, &b) {
            Ok(sol) => out.push(ProbeStep { step, b: b.iter().map(to_f64).collect(), gap: sol.min_pairwise_gap }),
            Err(e) => return Ok(ProbeReport { steps: out, stopped: Some(e) }),
        }
        weight /= Rational::from_integer(2.into());
    }
    Ok(ProbeReport { steps: out, stopped: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::fixtures;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn example_chambers() {
        let a = fixtures::fan_matrix();
        let ch = enumerate_chambers(&a, &v(&[3, 2, 2])).unwrap();
        assert_eq!(ch.iter().filter(|c| c.bounded).count(), 4);
        let slice = AffineSlice::new(&a, &v(&[3, 2, 2])).unwrap();
        for c in &ch {
            let x = slice.point(&c.witness);
            assert_eq!(a.mul_vec(&x), v(&[3, 2, 2]));
            assert!(x.iter().zip(&c.signs).all(|(xi, &s)| sign(xi) == i32::from(s)));
        }
    }

    #[test]
    fn degenerate_rhs_is_reported() {
        let a = fixtures::fan_matrix();
        match enumerate_chambers(&a, &v(&[1, 1, 1])) {
            Err(Error::DegenerateRhs { subsets }) => assert!(!subsets.is_empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn corank_one_segments() {
        let a = fixtures::special_matrix(3);
        let sol = analytic_centers(&a, &v(&[1, 2, 3])).unwrap();
        assert_eq!(sol.len(), 3);
        assert!(sol.residuals.iter().all(|r| *r < RESIDUAL_TOL));
    }

    #[test]
    fn boundedness() {
        let a = ExactMatrix::from_i64_rows(&[&[1, 1]]);
        assert!(is_bounded(&a, &[1, 1]));
        assert!(!is_bounded(&a, &[1, -1]));
    }
}
