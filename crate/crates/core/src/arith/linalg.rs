//! Exact dense linear algebra over Q(i) and fraction-free elimination over MultiPoly.

use super::{MultiPoly, Scalar};
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn row_reduce(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    row_reduce(&mut m.clone()).len()
}

/// Determinant by Gaussian elimination.
pub fn det(m: &Matrix) -> Scalar {
    let n = m.len();
    let mut a = m.clone();
    let mut acc = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            acc = -acc;
        }
        acc = &acc * &a[c][c];
        let inv = a[c][c].inv().expect("pivot is nonzero");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let d = &f * &a[c][j];
                a[i][j] -= &d;
            }
        }
    }
    acc
}

/// Inverse by Gauss–Jordan on `[m | I]`.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::NotInvertible("singular matrix".into()));
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Bareiss fraction-free determinant. Every intermediate division is exact.
pub fn bareiss_det(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut sign = Scalar::one();
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(a[n - 1][n - 1].scale(&sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Param;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rank_and_det() {
        let m = vec![vec![s(1), s(2)], vec![s(2), s(4)]];
        assert_eq!(rank(&m), 1);
        assert!(det(&m).is_zero());
        let m = vec![vec![s(0), s(1)], vec![s(1), s(0)]];
        assert_eq!(det(&m), s(-1));
    }

    #[test]
    fn inverse_round_trip() {
        let m = vec![vec![s(2), s(1)], vec![Scalar::i(), s(1)]];
        let inv = inverse(&m).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Scalar::zero();
                for k in 0..2 {
                    acc += &(&m[i][k] * &inv[k][j]);
                }
                assert_eq!(acc, if i == j { s(1) } else { s(0) });
            }
        }
        assert!(inverse(&vec![vec![s(1), s(1)], vec![s(1), s(1)]]).is_err());
    }

    #[test]
    fn bareiss_symbolic() {
        let x = MultiPoly::param(Param::A);
        let one = MultiPoly::one();
        // det [[x,1,0],[1,x,1],[0,1,x]] = x^3 - 2x
        let z = MultiPoly::zero();
        let m = vec![vec![x.clone(), one.clone(), z.clone()], vec![one.clone(), x.clone(), one.clone()], vec![z, one, x.clone()]];
        let expected = &x.pow(3) - &x.scale(&s(2));
        assert_eq!(bareiss_det(&m).unwrap(), expected);
    }
}
