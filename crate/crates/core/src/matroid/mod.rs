//! The matroid of a rational matrix: rank oracle, circuits, flats, Möbius
//! function, characteristic polynomial and the degree formulas built on them.
//!
//! Column subsets are `u32` bitmasks; bit `j` stands for column `j` (0-based).

mod minor;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::algebra::{binomial, ExactMatrix, Poly, Rational};
use crate::error::{Error, Result};

pub use minor::Minor;

/// Default cap on `2^n` when enumerating column subsets.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Reads `ENTROPIC_BUDGET`, falling back to [`DEFAULT_BUDGET`].
pub fn subset_budget() -> u64 {
    std::env::var("ENTROPIC_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

pub fn check_budget(n: usize) -> Result<()> {
    let budget = subset_budget();
    let needed = if n >= 64 { u64::MAX } else { 1u64 << n };
    if n > 31 || needed > budget {
        return Err(Error::TooLarge { needed, budget });
    }
    Ok(())
}

pub fn mask_to_vec(mask: u32) -> Vec<usize> {
    (0..32).filter(|j| mask >> j & 1 == 1).collect()
}

pub fn vec_to_mask(cols: &[usize]) -> u32 {
    cols.iter().fold(0, |m, &j| m | 1 << j)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    /// Sorted column indices.
    pub support: Vec<usize>,
    /// Primitive integer kernel vector on the support, first entry positive.
    pub vector: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    pub rank: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct MatroidRep {
    matrix: ExactMatrix,
    n: usize,
    rank: usize,
    ranks: Vec<u8>,
    circuits: Vec<Circuit>,
    flats_by_rank: Vec<Vec<u32>>,
    mobius: std::collections::HashMap<u32, i64>,
}

/// Scales a nonzero rational vector to coprime integers with first nonzero entry positive.
pub fn primitive_vector(v: &[Rational]) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| {
            let q = x / &g;
            Rational::from_integer(if neg { -q } else { q })
        })
        .collect()
}

impl MatroidRep {
    /// Builds the matroid of a full-row-rank matrix without zero columns.
    pub fn build(matrix: &ExactMatrix) -> Result<Self> {
        let (d, n) = (matrix.rows(), matrix.cols());
        for j in 0..n {
            if matrix.column(j).iter().all(Zero::is_zero) {
                return Err(Error::ZeroColumn(j));
            }
        }
        let rank = matrix.rank();
        if rank < d {
            return Err(Error::RankDeficient { rank, rows: d });
        }
        check_budget(n)?;

        let mut ranks = vec![0u8; 1 << n];
        for s in 1u32..(1 << n) {
            let high = 31 - s.leading_zeros();
            let rest = s & !(1 << high);
            ranks[s as usize] = if ranks[rest as usize] as usize == d {
                d as u8
            } else {
                matrix.select_columns(&mask_to_vec(s)).rank() as u8
            };
        }

        let mut m = MatroidRep {
            matrix: matrix.clone(),
            n,
            rank,
            ranks,
            circuits: Vec::new(),
            flats_by_rank: Vec::new(),
            mobius: Default::default(),
        };
        m.circuits = m.enumerate_circuits();
        m.flats_by_rank = m.enumerate_flats();
        m.mobius = m.compute_mobius();
        Ok(m)
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn full_mask(&self) -> u32 {
        if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 }
    }

    pub fn rank_of(&self, mask: u32) -> usize {
        self.ranks[mask as usize] as usize
    }

    pub fn rank_of_cols(&self, cols: &[usize]) -> usize {
        self.rank_of(vec_to_mask(cols))
    }

    pub fn closure(&self, mask: u32) -> u32 {
        let r = self.rank_of(mask);
        (0..self.n).filter(|&j| self.rank_of(mask | 1 << j) == r).fold(mask, |m, j| m | 1 << j)
    }

    pub fn is_flat(&self, mask: u32) -> bool {
        self.closure(mask) == mask
    }

    fn enumerate_circuits(&self) -> Vec<Circuit> {
        let mut masks: Vec<u32> = (1u32..=self.full_mask())
            .filter(|&s| {
                let k = s.count_ones() as usize;
                k <= self.rank + 1
                    && self.rank_of(s) + 1 == k
                    && mask_to_vec(s).iter().all(|&i| self.rank_of(s & !(1 << i)) + 1 == k)
            })
            .collect();
        masks.sort_by_key(|&s| (s.count_ones(), mask_to_vec(s)));
        masks
            .into_iter()
            .map(|s| {
                let support = mask_to_vec(s);
                let kernel = self.matrix.select_columns(&support).kernel_basis();
                debug_assert_eq!(kernel.rows(), 1);
                Circuit { vector: primitive_vector(kernel.row(0)), support }
            })
            .collect()
    }

    fn enumerate_flats(&self) -> Vec<Vec<u32>> {
        let bottom = self.closure(0);
        let mut layers = vec![vec![bottom]];
        for r in 0..self.rank {
            let mut next: Vec<u32> = Vec::new();
            for &f in &layers[r] {
                for j in 0..self.n {
                    if f >> j & 1 == 0 {
                        next.push(self.closure(f | 1 << j));
                    }
                }
            }
            next.sort_by_key(|&s| mask_to_vec(s));
            next.dedup();
            layers.push(next);
        }
        layers
    }

    fn compute_mobius(&self) -> std::collections::HashMap<u32, i64> {
        let mut mu = std::collections::HashMap::new();
        let mut seen: Vec<u32> = Vec::new();
        for layer in &self.flats_by_rank {
            for &f in layer {
                let v = if seen.is_empty() {
                    1
                } else {
                    -seen.iter().filter(|&&g| g & !f == 0).map(|g| mu[g]).sum::<i64>()
                };
                mu.insert(f, v);
            }
            seen.extend_from_slice(layer);
        }
        mu
    }

    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    pub fn flat_masks(&self, rank: usize) -> &[u32] {
        &self.flats_by_rank[rank]
    }

    pub fn flats(&self) -> Vec<Flat> {
        self.flats_by_rank
            .iter()
            .enumerate()
            .flat_map(|(r, layer)| layer.iter().map(move |&m| Flat { rank: r, members: mask_to_vec(m) }))
            .collect()
    }

    pub fn flats_of_rank(&self, rank: usize) -> Vec<Flat> {
        self.flats_by_rank
            .get(rank)
            .map(|l| l.iter().map(|&m| Flat { rank, members: mask_to_vec(m) }).collect())
            .unwrap_or_default()
    }

    /// `mu(0, F)` for a flat `F`.
    pub fn mobius_value(&self, flat: u32) -> Option<i64> {
        self.mobius.get(&flat).copied()
    }

    /// Coefficients of `chi(t)`, index `k` multiplying `t^k`.
    pub fn char_poly_coeffs(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.rank + 1];
        for (r, layer) in self.flats_by_rank.iter().enumerate() {
            for f in layer {
                c[self.rank - r] += self.mobius[f];
            }
        }
        c
    }

    /// `chi(t)` as a univariate polynomial.
    pub fn char_poly(&self) -> Poly {
        Poly::from_terms(
            1,
            self.char_poly_coeffs()
                .into_iter()
                .enumerate()
                .map(|(k, c)| (vec![k as u32], Rational::from_integer(c.into()))),
        )
    }

    /// `(-1)^d chi(0)`.
    pub fn mobius_invariant(&self) -> i64 {
        let c0 = self.char_poly_coeffs()[0];
        if self.rank % 2 == 0 { c0 } else { -c0 }
    }

    /// Columns span exactly `d` distinct lines.
    pub fn is_basic(&self) -> bool {
        self.flats_by_rank.get(1).map_or(0, Vec::len) == self.rank
    }

    /// `2 (-1)^d (d chi(0) + chi'(0))`, defined for every matroid.
    pub fn delta(&self) -> i64 {
        let c = self.char_poly_coeffs();
        let d = self.rank as i64;
        let chi1 = c.get(1).copied().unwrap_or(0);
        let v = 2 * (d * c[0] + chi1);
        if self.rank % 2 == 0 { v } else { -v }
    }

    /// Degree of the entropic discriminant.
    pub fn entropic_degree(&self) -> Result<i64> {
        if self.is_basic() {
            return Err(Error::BasicMatrix);
        }
        Ok(self.delta())
    }

    /// The same degree from restricted Möbius invariants of hyperplane flats.
    pub fn entropic_degree_crosscheck(&self) -> Result<i64> {
        if self.is_basic() {
            return Err(Error::BasicMatrix);
        }
        let d = self.rank as i64;
        let mut total = 2 * d * self.mobius_invariant();
        for &j in &self.flats_by_rank[self.rank - 1] {
            let restricted = self.restriction(&mask_to_vec(j))?;
            total -= 2 * restricted.matroid.mobius_invariant();
        }
        Ok(total)
    }

    pub fn is_isthmus(&self, e: usize) -> bool {
        self.rank_of(self.full_mask() & !(1 << e)) < self.rank
    }

    /// Checks `delta(M) = delta(M\e) + delta(M/e) + 2 mu(M/e)`, which follows
    /// from `chi_M = chi_{M\e} - chi_{M/e}`.
    ///
    /// A contraction that creates loops has characteristic polynomial zero,
    /// so both of its terms vanish.
    pub fn delta_recurrence_check(&self, e: usize) -> Result<bool> {
        if self.is_isthmus(e) {
            return Err(Error::IsthmusElement(e));
        }
        let rest: Vec<usize> = (0..self.n).filter(|&j| j != e).collect();
        let deletion = self.restriction(&rest)?;
        let contraction = self.contraction(&[e])?;
        let (dc, mc) = if contraction.dropped.is_empty() {
            (contraction.matroid.delta(), contraction.matroid.mobius_invariant())
        } else {
            (0, 0)
        };
        Ok(self.delta() == deletion.matroid.delta() + dc + 2 * mc)
    }

    /// Rank-`(d-2)` flats whose contraction is non-basic, with a basis of
    /// the span of their columns.
    pub fn real_locus_components(&self) -> Result<Vec<(Flat, Vec<Vec<Rational>>)>> {
        if self.is_basic() {
            return Err(Error::BasicMatrix);
        }
        if self.rank < 2 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for flat in self.flats_of_rank(self.rank - 2) {
            let c = self.contraction(&flat.members)?;
            if !c.matroid.is_basic() {
                let spanning = self.spanning_vectors(&flat.members);
                out.push((flat, spanning));
            }
        }
        Ok(out)
    }

    /// Greedy basis of the column span of `cols`, each vector primitive.
    pub fn spanning_vectors(&self, cols: &[usize]) -> Vec<Vec<Rational>> {
        let mut chosen = 0u32;
        let mut out = Vec::new();
        for &j in cols {
            if self.rank_of(chosen | 1 << j) > self.rank_of(chosen) {
                chosen |= 1 << j;
                out.push(primitive_vector(&self.matrix.column(j)));
            }
        }
        out
    }

    /// Number of parallel classes, i.e. rank-one flats.
    pub fn parallel_classes(&self) -> usize {
        self.flats_by_rank.get(1).map_or(0, Vec::len)
    }
}

/// `2 (n - d) C(n-1, d-2)`.
pub fn generic_degree(d: usize, n: usize) -> u64 {
    if d < 2 || n <= d {
        return 0;
    }
    2 * (n - d) as u64 * binomial(n as u64 - 1, d as u64 - 2)
}
