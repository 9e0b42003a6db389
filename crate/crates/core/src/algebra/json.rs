//! JSON exchange formats for matrices and polynomials.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{parse_rational, poly::default_names, ExactMatrix, Poly, Rational};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Value>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

fn entry_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        other => Err(Error::Parse(format!("matrix entry must be an integer or fraction string, got {other}"))),
    }
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<ExactMatrix> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::Parse("matrix must have positive rows and cols".into()));
        }
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Parse(format!(
                "entries do not form a {}x{} grid",
                self.rows, self.cols
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(entry_value).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        ExactMatrix::from_rows(rows)
    }

    pub fn from_matrix(m: &ExactMatrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: m
                .row_vecs()
                .iter()
                .map(|r| r.iter().map(|q| Value::String(q.to_string())).collect())
                .collect(),
        }
    }
}

pub fn parse_matrix(text: &str) -> Result<ExactMatrix> {
    let mj: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    mj.to_matrix()
}

impl PolyJson {
    pub fn from_poly(p: &Poly, vars: &[String]) -> Self {
        assert_eq!(vars.len(), p.arity());
        PolyJson {
            vars: vars.to_vec(),
            terms: p.terms().map(|(m, c)| TermJson { c: c.to_string(), e: m.exps().to_vec() }).collect(),
        }
    }

    /// Uses `prefix1, prefix2, ...` as variable names.
    pub fn with_prefix(p: &Poly, prefix: &str) -> Self {
        Self::from_poly(p, &default_names(prefix, p.arity()))
    }

    pub fn to_poly(&self) -> Result<Poly> {
        let arity = self.vars.len();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.e.len() != arity {
                return Err(Error::Parse(format!(
                    "exponent vector {:?} does not match {} variables",
                    t.e, arity
                )));
            }
            terms.push((t.e.clone(), parse_rational(&t.c)?));
        }
        Ok(Poly::from_terms(arity, terms))
    }
}

pub fn parse_poly(text: &str) -> Result<Poly> {
    let pj: PolyJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    pj.to_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn matrix_accepts_ints_and_fractions() {
        let m = parse_matrix(r#"{"rows":1,"cols":3,"entries":[[1,"-2","3/4"]]}"#).unwrap();
        assert_eq!(m.row(0), &[rat(1), rat(-2), ratio(3, 4)]);
        assert!(parse_matrix(r#"{"rows":2,"cols":3,"entries":[[1,2,3]]}"#).is_err());
        assert!(parse_matrix(r#"{"rows":1,"cols":1,"entries":[["x"]]}"#).is_err());
    }

    #[test]
    fn polynomial_roundtrip() {
        let p = Poly::from_terms(2, [(vec![2, 0], ratio(1, 2)), (vec![0, 1], rat(-3))]);
        let j = serde_json::to_string(&PolyJson::with_prefix(&p, "b")).unwrap();
        assert_eq!(j, r#"{"vars":["b1","b2"],"terms":[{"c":"1/2","e":[2,0]},{"c":"-3","e":[0,1]}]}"#);
        assert_eq!(parse_poly(&j).unwrap(), p);
    }
}
