//! Pfaffians by expansion along the first row over perfect matchings.

use std::collections::{BTreeMap, HashMap};

use crate::arith::{linalg, MultiPoly, Param, Scalar};
use crate::error::{Error, Result};

/// Exact Pfaffian of a skew matrix.
///
/// Expands Pf(A) = Σ_k (−1)^(k+1) a_{i₀ i_k} Pf(A without i₀, i_k) over all
/// perfect matchings; sub-Pfaffians of the same index set are shared.
/// The result is cross-checked against Pf² = det at numeric points.
pub fn pfaffian(a: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let m = a.len();
    if m % 2 == 1 {
        return Err(Error::OddDimension(m));
    }
    if m > 30 {
        return Err(Error::Internal(format!("Pfaffian of size {m} not supported")));
    }
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    let full = if m == 0 { 0 } else { (1u32 << m) - 1 };
    let pf = expand(a, full, &mut memo);
    spot_check(a, &pf)?;
    Ok(pf)
}

fn expand(a: &[Vec<MultiPoly>], mask: u32, memo: &mut HashMap<u32, MultiPoly>) -> MultiPoly {
    if mask == 0 {
        return MultiPoly::one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let i0 = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << i0);
    let mut acc = MultiPoly::zero();
    let mut sign = Scalar::one();
    let mut bits = rest;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if !a[i0][k].is_zero() {
            let sub = expand(a, rest & !(1 << k), memo);
            if !sub.is_zero() {
                acc.add_scaled(&(&a[i0][k] * &sub), &sign);
            }
        }
        sign = -sign;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Deterministic parameter points with nonzero values.
fn sample_points(params: &[Param], count: usize) -> Vec<BTreeMap<Param, Scalar>> {
    (0..count)
        .map(|k| {
            params
                .iter()
                .map(|&p| {
                    let n = (3 * p.index() as i64 + 5 * k as i64) % 11 + 2;
                    (p, Scalar::ratio(n, k as i64 + 1))
                })
                .collect()
        })
        .collect()
}

fn spot_check(a: &[Vec<MultiPoly>], pf: &MultiPoly) -> Result<()> {
    let params: Vec<Param> = a
        .iter()
        .flatten()
        .flat_map(MultiPoly::params)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let count = if params.is_empty() { 1 } else { 5 };
    for point in sample_points(&params, count) {
        let numeric: linalg::Matrix =
            a.iter().map(|row| row.iter().map(|x| x.eval(&point)).collect::<Result<_>>()).collect::<Result<_>>()?;
        let p = pf.eval(&point)?;
        if &p * &p != linalg::det(&numeric) {
            return Err(Error::Internal("Pf² ≠ det at a sample point".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<MultiPoly>> {
        rows.iter().map(|r| r.iter().map(|&x| MultiPoly::int(x)).collect()).collect()
    }

    #[test]
    fn standard_block() {
        assert_eq!(pfaffian(&int_matrix(&[&[0, 1], &[-1, 0]])).unwrap(), MultiPoly::one());
    }

    #[test]
    fn four_by_four_formula() {
        // Pf = a01 a23 − a02 a13 + a03 a12
        let p = |k| MultiPoly::param(Param::generic(k));
        let z = MultiPoly::zero;
        let a = vec![
            vec![z(), p(1), p(2), p(3)],
            vec![-p(1), z(), p(4), p(5)],
            vec![-p(2), -p(4), z(), p(6)],
            vec![-p(3), -p(5), -p(6), z()],
        ];
        let expected = &(&(p(1) * p(6)) - &(p(2) * p(5))) + &(p(3) * p(4));
        assert_eq!(pfaffian(&a).unwrap(), expected);
    }

    #[test]
    fn odd_rejected() {
        assert_eq!(pfaffian(&int_matrix(&[&[0]])).unwrap_err(), Error::OddDimension(1));
    }

    #[test]
    fn empty_is_one() {
        assert_eq!(pfaffian(&[]).unwrap(), MultiPoly::one());
    }
}
