//! Incidence matrices of oriented and all-negative graphs and the
//! characteristic polynomials of all-negative complete graphs.

use std::collections::HashSet;

use num::{BigInt, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, ratio, ExactMatrix, Poly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Signing {
    Oriented,
    AllNegative,
}

/// Graph on nodes `0..nodes`; edge `(u, v)` is oriented from `v` to `u`
/// (entry `+1` at `u`, `-1` at `v`) in the oriented case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphModel {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
    pub signing: Signing,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub nodes: usize,
    pub edges: Vec<[usize; 2]>,
    pub signing: Signing,
}

impl GraphModel {
    pub fn new(nodes: usize, edges: Vec<(usize, usize)>, signing: Signing) -> Result<Self> {
        let mut seen = HashSet::new();
        for (k, &(u, v)) in edges.iter().enumerate() {
            if u >= nodes || v >= nodes {
                return Err(Error::DimensionMismatch(format!("edge {k} uses a node outside 0..{nodes}")));
            }
            if u == v {
                return Err(Error::SelfLoop(k));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(k));
            }
        }
        Ok(GraphModel { nodes, edges, signing })
    }

    pub fn complete(d: usize, signing: Signing) -> Self {
        let edges = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
        GraphModel { nodes: d, edges, signing }
    }

    pub fn cycle(n: usize, signing: Signing) -> Self {
        let edges = (0..n).map(|i| if i + 1 < n { (i, i + 1) } else { (0, n - 1) }).collect();
        GraphModel { nodes: n, edges, signing }
    }

    /// Connected component index of every node.
    pub fn components(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.nodes).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a.max(b)] = a.min(b);
        }
        (0..self.nodes).map(|x| find(&mut parent, x)).collect()
    }

    pub fn from_json(g: &GraphJson) -> Result<Self> {
        let edges = g
            .edges
            .iter()
            .map(|&[u, v]| {
                if u == 0 || v == 0 {
                    Err(Error::Parse("graph nodes are numbered from 1".into()))
                } else {
                    Ok((u - 1, v - 1))
                }
            })
            .collect::<Result<_>>()?;
        GraphModel::new(g.nodes, edges, g.signing)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            nodes: self.nodes,
            edges: self.edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
            signing: self.signing,
        }
    }
}

pub fn parse_graph(text: &str) -> Result<GraphModel> {
    let g: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    GraphModel::from_json(&g)
}

/// Oriented graphs lose the row of the last node of every component, so the
/// result has full rank. All-negative graphs keep the full 0/1 matrix.
pub fn incidence_matrix(g: &GraphModel) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(g.nodes, g.edges.len());
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        match g.signing {
            Signing::Oriented => {
                m.set(u, k, rat(1));
                m.set(v, k, rat(-1));
            }
            Signing::AllNegative => {
                m.set(u, k, rat(1));
                m.set(v, k, rat(1));
            }
        }
    }
    if g.signing == Signing::AllNegative {
        return m;
    }
    let comp = g.components();
    let keep: Vec<usize> = (0..g.nodes).filter(|&i| (i + 1..g.nodes).any(|j| comp[j] == comp[i])).collect();
    m.select_rows(&keep)
}

fn stirling2(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n + 1]; n + 1];
    s[0][0] = BigInt::one();
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = &s[i - 1][k] * k + &s[i - 1][k - 1];
        }
    }
    s
}

/// `sum_k (S(d,k) + d S(d-1,k)) (t-1)(t-3)...(t-2k+1)` with `S` the Stirling
/// numbers of the second kind.
pub fn zaslavsky_charpoly(d: usize) -> Poly {
    let s = stirling2(d);
    let t = Poly::var(1, 0);
    let mut out = Poly::zero(1);
    let mut falling = Poly::one(1);
    for k in 0..=d {
        let lower = if d >= 1 { s[d - 1][k].clone() } else { BigInt::zero() };
        let c = &s[d][k] + lower * d;
        out = out.add_poly(&falling.scale(&Rational::from_integer(c)));
        falling = falling.mul_poly(&t.sub_poly(&Poly::constant(1, rat(2 * k as i64 + 1))));
    }
    out
}

/// Coefficients of a univariate polynomial, index `k` for `t^k`.
pub fn univariate_coeffs(p: &Poly) -> Vec<Rational> {
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut c = vec![Rational::zero(); deg + 1];
    for (m, v) in p.terms() {
        c[m.exps()[0] as usize] = v.clone();
    }
    c
}

type Series = Vec<Poly>;

fn series_mul(a: &Series, b: &Series, order: usize) -> Series {
    let mut out = vec![Poly::zero(1); order + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] = out[i + j].add_poly(&x.mul_poly(y));
        }
    }
    out
}

/// `sum_j s^j / j!` for a series `s` with zero constant term.
fn series_exp(s: &Series, order: usize) -> Series {
    let mut out = vec![Poly::zero(1); order + 1];
    out[0] = Poly::one(1);
    let mut power = out.clone();
    let mut fact = Rational::one();
    for j in 1..=order {
        power = series_mul(&power, s, order);
        fact *= rat(j as i64);
        for k in 0..=order {
            out[k] = out[k].add_poly(&power[k].scale(&fact.recip()));
        }
    }
    out
}

/// `d! [x^d] (1 + x)(2e^x - 1)^{(t-1)/2}` for `d = 0..=order`, expanded over `Q[t]`.
pub fn zaslavsky_egf(order: usize) -> Vec<Poly> {
    let mut u = vec![Poly::zero(1); order + 1];
    let mut fact = Rational::one();
    for k in 1..=order {
        fact *= rat(k as i64);
        u[k] = Poly::constant(1, rat(2) / &fact);
    }
    let mut log = vec![Poly::zero(1); order + 1];
    let mut power = vec![Poly::zero(1); order + 1];
    power[0] = Poly::one(1);
    for j in 1..=order {
        power = series_mul(&power, &u, order);
        let c = Rational::new(if j % 2 == 1 { 1.into() } else { (-1).into() }, (j as i64).into());
        for k in 0..=order {
            log[k] = log[k].add_poly(&power[k].scale(&c));
        }
    }
    let half = Poly::var(1, 0).sub_poly(&Poly::one(1)).scale(&ratio(1, 2));
    let scaled: Series = log.iter().map(|c| c.mul_poly(&half)).collect();
    let e = series_exp(&scaled, order);
    let mut one_plus_x = vec![Poly::zero(1); order + 1];
    one_plus_x[0] = Poly::one(1);
    if order >= 1 {
        one_plus_x[1] = Poly::one(1);
    }
    let prod = series_mul(&e, &one_plus_x, order);
    let mut fact = Rational::one();
    prod.into_iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                fact *= rat(k as i64);
            }
            c.scale(&fact)
        })
        .collect()
}

/// Series expansion agrees with the closed formula for `1 <= d <= d_max`.
pub fn zaslavsky_egf_check(d_max: usize) -> bool {
    let series = zaslavsky_egf(d_max);
    (1..=d_max).all(|d| series[d] == zaslavsky_charpoly(d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RetinaRow {
    pub d: usize,
    pub degree: u64,
    pub mu: u64,
}

/// `(d, 2 (-1)^d (d chi(0) + chi'(0)), (-1)^d chi(0))` for `4 <= d <= d_max`.
pub fn retina_table(d_max: usize) -> Vec<RetinaRow> {
    (4..=d_max)
        .map(|d| {
            let c = univariate_coeffs(&zaslavsky_charpoly(d));
            let sign = if d % 2 == 0 { rat(1) } else { rat(-1) };
            let mu = &sign * &c[0];
            let degree = rat(2) * &sign * (rat(d as i64) * &c[0] + &c[1]);
            let as_u64 = |q: Rational| q.to_integer().to_u64().expect("table entries fit in u64 for d <= 16");
            RetinaRow { d, degree: as_u64(degree), mu: as_u64(mu) }
        })
        .collect()
}

/// Integer coefficients of a polynomial with integral coefficients.
pub fn integer_coeffs(p: &Poly) -> Option<Vec<i64>> {
    univariate_coeffs(p)
        .iter()
        .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matroid::MatroidRep;

    #[test]
    fn incidence_matrices() {
        let neg = GraphModel::complete(4, Signing::AllNegative);
        assert_eq!(incidence_matrix(&neg), fixtures::neg_k4_matrix());
        let k4 = GraphModel::complete(4, Signing::Oriented);
        assert_eq!(incidence_matrix(&k4), fixtures::k4_graphic_matrix());
        let c = incidence_matrix(&GraphModel::cycle(4, Signing::Oriented));
        assert_eq!((c.rows(), c.cols(), c.rank()), (3, 4, 3));
    }

    #[test]
    fn invalid_graphs() {
        assert_eq!(GraphModel::new(3, vec![(0, 1), (1, 1)], Signing::Oriented), Err(Error::SelfLoop(1)));
        assert_eq!(GraphModel::new(3, vec![(0, 1), (1, 0)], Signing::Oriented), Err(Error::DuplicateEdge(1)));
        let g = parse_graph(include_str!("../fixtures/neg_k4_graph.json")).unwrap();
        assert_eq!(g, GraphModel::complete(4, Signing::AllNegative));
    }

    #[test]
    fn formula_small_cases() {
        assert_eq!(integer_coeffs(&zaslavsky_charpoly(1)), Some(vec![0, 1]));
        assert_eq!(integer_coeffs(&zaslavsky_charpoly(4)), Some(vec![7, -17, 15, -6, 1]));
        for d in 3..=5 {
            let m = MatroidRep::build(&incidence_matrix(&GraphModel::complete(d, Signing::AllNegative))).unwrap();
            assert_eq!(integer_coeffs(&zaslavsky_charpoly(d)).unwrap(), m.char_poly_coeffs());
        }
    }

    #[test]
    fn series_matches_formula() {
        assert!(zaslavsky_egf_check(6));
    }

    #[test]
    fn table_rows() {
        let t = retina_table(6);
        assert_eq!((t[0].degree, t[0].mu), (22, 7));
        assert_eq!((t[2].degree, t[2].mu), (3148, 431));
    }
}
