//! Independent matrix model of sl(4) used as a test oracle.
//!
//! Nothing here calls into the bracket or Schouten code of the library: the
//! basis is rebuilt from 4×4 matrix units and CYBE is evaluated as a sum of
//! commutators of 64×64 Kronecker products.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cybe::arith::{MultiPoly, Param, Scalar};
use cybe::wedge::{BiVector, TriVector};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
pub type Mat = Vec<Vec<Q>>;

pub const POSITIONS: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (0, 3)];

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn zeros(n: usize) -> Mat {
    vec![vec![Q::zero(); n]; n]
}

/// Defining representation of basis element `k` (h1..h3, e1..e6, em1..em6).
pub fn rep(k: usize) -> Mat {
    let mut m = zeros(4);
    match k {
        0..=2 => {
            m[k][k] = q(1);
            m[k + 1][k + 1] = q(-1);
        }
        3..=8 => {
            let (a, b) = POSITIONS[k - 3];
            m[a][b] = q(1);
        }
        _ => {
            let (a, b) = POSITIONS[k - 9];
            m[b][a] = q(1);
        }
    }
    m
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut c = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    c[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    c
}

pub fn add_scaled(acc: &mut Mat, m: &Mat, s: &Q) {
    for (ra, rm) in acc.iter_mut().zip(m) {
        for (x, y) in ra.iter_mut().zip(rm) {
            if !y.is_zero() {
                *x += y * s;
            }
        }
    }
}

pub fn commutator(a: &Mat, b: &Mat) -> Mat {
    let mut c = mul(a, b);
    add_scaled(&mut c, &mul(b, a), &q(-1));
    c
}

pub fn trace(a: &Mat) -> Q {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Coordinates of a traceless 4×4 matrix in the basis.
pub fn coords(m: &Mat) -> Vec<Q> {
    let mut c = vec![Q::zero(); 15];
    c[0] = m[0][0].clone();
    c[1] = &m[0][0] + &m[1][1];
    c[2] = &m[0][0] + &m[1][1] + &m[2][2];
    for (n, &(a, b)) in POSITIONS.iter().enumerate() {
        c[3 + n] = m[a][b].clone();
        c[9 + n] = m[b][a].clone();
    }
    c
}

pub fn kron3(a: &Mat, b: &Mat, c: &Mat) -> Mat {
    let mut out = zeros(64);
    for (i1, j1) in nonzero(a) {
        for (i2, j2) in nonzero(b) {
            let ab = &a[i1][j1] * &b[i2][j2];
            for (i3, j3) in nonzero(c) {
                out[16 * i1 + 4 * i2 + i3][16 * j1 + 4 * j2 + j3] = &ab * &c[i3][j3];
            }
        }
    }
    out
}

fn nonzero(m: &Mat) -> Vec<(usize, usize)> {
    (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|&(i, j)| !m[i][j].is_zero()).collect()
}

pub fn identity4() -> Mat {
    let mut m = zeros(4);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

/// A deterministic nonzero rational point for every parameter.
pub fn sample_point() -> BTreeMap<Param, Scalar> {
    Param::all().enumerate().map(|(k, p)| (p, Scalar::ratio(k as i64 + 2, 3))).collect()
}

pub fn real_value(c: &MultiPoly, point: &BTreeMap<Param, Scalar>) -> Q {
    let s = c.eval(point).expect("evaluates");
    assert!(s.im().is_zero(), "oracle handles rational coefficients only");
    s.re().clone()
}

/// [r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃] in End(C⁴)^⊗3, at a parameter point.
pub fn cybe_kron(r: &BiVector, point: &BTreeMap<Param, Scalar>) -> Mat {
    let id = identity4();
    let mut r12 = zeros(64);
    let mut r13 = zeros(64);
    let mut r23 = zeros(64);
    for (a, b, c) in r.tensor_entries() {
        let c = real_value(&c, point);
        if c.is_zero() {
            continue;
        }
        let (x, y) = (rep(a), rep(b));
        add_scaled(&mut r12, &kron3(&x, &y, &id), &c);
        add_scaled(&mut r13, &kron3(&x, &id, &y), &c);
        add_scaled(&mut r23, &kron3(&id, &x, &y), &c);
    }
    let mut total = commutator(&r12, &r13);
    add_scaled(&mut total, &commutator(&r12, &r23), &q(1));
    add_scaled(&mut total, &commutator(&r13, &r23), &q(1));
    total
}

/// Image of a trivector, expanded to its full antisymmetric tensor.
pub fn trivector_kron(t: &TriVector, point: &BTreeMap<Param, Scalar>) -> Mat {
    let mut out = zeros(64);
    for (&(i, j, k), c) in t.terms() {
        let c = real_value(c, point);
        for (p, sign) in [((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1), ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1)] {
            add_scaled(&mut out, &kron3(&rep(p.0), &rep(p.1), &rep(p.2)), &(&c * q(sign)));
        }
    }
    out
}

pub fn is_zero(m: &Mat) -> bool {
    m.iter().flatten().all(Zero::is_zero)
}
