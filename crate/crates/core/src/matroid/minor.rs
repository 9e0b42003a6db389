use super::MatroidRep;
use crate::algebra::ExactMatrix;
use crate::error::Result;

/// A restriction or contraction together with its column bookkeeping.
#[derive(Clone, Debug)]
pub struct Minor {
    pub matroid: MatroidRep,
    /// Original index of each column of the minor.
    pub columns: Vec<usize>,
    /// Original indices of columns that became zero and were removed.
    pub dropped: Vec<usize>,
}

/// Keeps a maximal independent set of rows so the result has full row rank.
fn full_row_rank(m: &ExactMatrix) -> ExactMatrix {
    let rows = m.independent_rows();
    m.select_rows(&rows)
}

impl MatroidRep {
    /// The matroid of the columns `cols`, re-represented with full row rank.
    pub fn restriction(&self, cols: &[usize]) -> Result<Minor> {
        let sub = full_row_rank(&self.matrix().select_columns(cols));
        Ok(Minor { matroid: MatroidRep::build(&sub)?, columns: cols.to_vec(), dropped: Vec::new() })
    }

    /// Quotient by the span of the columns `cols`: the remaining columns are
    /// mapped through a left-kernel basis of `A_J`. Columns that land on zero
    /// are dropped and recorded.
    pub fn contraction(&self, cols: &[usize]) -> Result<Minor> {
        let a = self.matrix();
        let proj = a.select_columns(cols).left_kernel_basis();
        let rest: Vec<usize> = (0..self.n()).filter(|j| !cols.contains(j)).collect();
        let image = if proj.rows() == 0 {
            ExactMatrix::zeros(0, rest.len())
        } else {
            proj.mul_matrix(&a.select_columns(&rest))?
        };
        let (mut kept, mut kept_cols, mut dropped) = (Vec::new(), Vec::new(), Vec::new());
        for (k, &j) in rest.iter().enumerate() {
            if image.column(k).iter().all(num::Zero::is_zero) {
                dropped.push(j);
            } else {
                kept.push(k);
                kept_cols.push(j);
            }
        }
        let quotient = image.select_columns(&kept);
        Ok(Minor { matroid: MatroidRep::build(&quotient)?, columns: kept_cols, dropped })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn example_contractions() {
        let m = MatroidRep::build(&fixtures::fan_matrix()).unwrap();
        assert!(m.contraction(&[0]).unwrap().matroid.is_basic());
        for i in 1..5 {
            assert!(!m.contraction(&[i]).unwrap().matroid.is_basic(), "column {i}");
        }
    }

    #[test]
    fn restriction_to_basis_is_free() {
        let m = MatroidRep::build(&fixtures::fan_matrix()).unwrap();
        let r = m.restriction(&[0, 1, 2]).unwrap();
        assert_eq!(r.matroid.mobius_invariant(), 1);
        assert_eq!(r.matroid.rank(), 3);
    }

    #[test]
    fn contraction_records_loops() {
        let a = ExactMatrix::from_i64_rows(&[&[1, 2, 0], &[0, 0, 1]]);
        let m = MatroidRep::build(&a).unwrap();
        let c = m.contraction(&[0]).unwrap();
        assert_eq!(c.dropped, vec![1]);
        assert_eq!(c.columns, vec![2]);
    }

    #[test]
    fn deletion_contraction_for_mobius() {
        let m = MatroidRep::build(&fixtures::neg_k4_matrix()).unwrap();
        for e in 0..m.n() {
            let del: Vec<usize> = (0..m.n()).filter(|&j| j != e).collect();
            let d = m.restriction(&del).unwrap().matroid.mobius_invariant();
            let c = m.contraction(&[e]).unwrap();
            let cm = if c.dropped.is_empty() { c.matroid.mobius_invariant() } else { 0 };
            assert_eq!(m.mobius_invariant(), d + cm);
            assert!(m.delta_recurrence_check(e).unwrap());
        }
    }
}
