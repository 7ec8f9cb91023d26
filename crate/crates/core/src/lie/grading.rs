//! Eigenspace decomposition under ad of a semisimple grader.

use std::collections::BTreeMap;

use super::algebra::{Element, LieAlgebra, DIM};
use crate::arith::Scalar;
use crate::error::{Error, Result};

/// Weight of each basis vector under ad(grader), or an error if some
/// basis vector is not an eigenvector with a constant eigenvalue.
pub fn basis_weights(g: &LieAlgebra, grader: &Element) -> Result<Vec<Scalar>> {
    let not_semisimple = || Error::NotSemisimple { grader: grader.to_string() };
    let mut weights = Vec::with_capacity(DIM);
    for k in 0..DIM {
        let b = g.basis(k);
        let image = g.bracket(grader, &b)?;
        let w = if image.is_zero() {
            Scalar::zero()
        } else {
            image.ratio_to(&b).ok_or_else(not_semisimple)?
        };
        weights.push(w);
    }
    Ok(weights)
}

/// Splits `x` into ad(grader)-eigencomponents, ordered by weight.
pub fn d_weight_decomposition(g: &LieAlgebra, x: &Element, grader: &Element) -> Result<Vec<(Scalar, Element)>> {
    let weights = basis_weights(g, grader)?;
    let mut parts: BTreeMap<Scalar, Element> = BTreeMap::new();
    for (k, c) in x.terms() {
        let e = g.basis(k).scale(c);
        parts.entry(weights[k].clone()).or_insert_with(|| g.zero()).add_assign(&e)?;
    }
    Ok(parts.into_iter().collect())
}
