//! Exact entropic discriminants in the two closed-form regimes: two rows
//! (`d = 2`) and corank one (`n = d + 1`).

mod corank_one;
mod d2;
mod fiber;

use serde::Serialize;

use crate::algebra::{ExactMatrix, Poly};
use crate::error::{Error, Result};
use crate::matroid::MatroidRep;

pub use corank_one::{
    corank_one_disc, derivative_disc_check, special_disc_elementary, special_disc_raw, special_form_reduction,
    special_pencil, SpecialReduction,
};
pub use d2::{disc_d2, plucker_sos_eval};
pub use fiber::{hessian_sos_at_roots_check, hessian_values_at_roots, normalized_minor_square_sum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    D2,
    CorankOne,
}

/// A primitive-normalized entropic discriminant in `b_1..b_d`.
#[derive(Clone, Debug, PartialEq)]
pub struct EntropicPoly {
    pub poly: Poly,
    pub regime: Regime,
}

/// Which exact regime (if any) fits a `d x n` matrix. `d = 2` wins when both do.
pub fn detect_regime(a: &ExactMatrix) -> Result<Regime> {
    if a.rows() == 2 {
        Ok(Regime::D2)
    } else if a.cols() == a.rows() + 1 {
        Ok(Regime::CorankOne)
    } else {
        Err(Error::NoExactRegime)
    }
}

/// Computes the entropic discriminant in the requested (or detected) regime.
/// Basic matrices are rejected first since their discriminant is not a
/// hypersurface.
pub fn entropic_discriminant(a: &ExactMatrix, regime: Option<Regime>) -> Result<EntropicPoly> {
    let m = MatroidRep::build(a)?;
    if m.is_basic() {
        return Err(Error::BasicMatrix);
    }
    match regime.map_or_else(|| detect_regime(a), Ok)? {
        Regime::D2 => disc_d2(a),
        Regime::CorankOne => corank_one_disc(a),
    }
}

/// `E = I + J`, the `d x d` matrix with 2 on the diagonal and 1 elsewhere.
pub fn all_ones_plus_identity(d: usize) -> ExactMatrix {
    let mut e = ExactMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            e.set(i, j, crate::algebra::rat(if i == j { 2 } else { 1 }));
        }
    }
    e
}
