//! Physical d=4 conformal generators inside sl(4,C) and the o(4,2) relation scan.

use std::collections::BTreeMap;
use std::fmt;

use super::algebra::{Element, LieAlgebra};
use crate::arith::{linalg, MultiPoly, Scalar};
use crate::error::Result;

/// Generator names of the conformal basis (case with (B±)* ⊂ B±).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Physical {
    Mp,
    Mm,
    M3,
    Lp,
    Lm,
    L3,
    P0,
    P1,
    P2,
    P3,
    K0,
    K1,
    K2,
    K3,
    D,
}

impl Physical {
    pub const ALL: [Physical; 15] = [
        Physical::Mp,
        Physical::Mm,
        Physical::M3,
        Physical::Lp,
        Physical::Lm,
        Physical::L3,
        Physical::P0,
        Physical::P1,
        Physical::P2,
        Physical::P3,
        Physical::K0,
        Physical::K1,
        Physical::K2,
        Physical::K3,
        Physical::D,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Physical::Mp => "M+",
            Physical::Mm => "M-",
            Physical::M3 => "M3",
            Physical::Lp => "L+",
            Physical::Lm => "L-",
            Physical::L3 => "L3",
            Physical::P0 => "P0",
            Physical::P1 => "P1",
            Physical::P2 => "P2",
            Physical::P3 => "P3",
            Physical::K0 => "K0",
            Physical::K1 => "K1",
            Physical::K2 => "K2",
            Physical::K3 => "K3",
            Physical::D => "D",
        }
    }
}

impl fmt::Display for Physical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn combo(g: &LieAlgebra, terms: &[(Scalar, &str)]) -> Element {
    let mut x = g.zero();
    for (c, n) in terms {
        let y = g.generator(n).expect("basis name").scale_scalar(c);
        x.add_assign(&y).expect("same algebra");
    }
    x
}

/// The fifteen generators exactly as assigned in the Cartan–Weyl basis.
pub fn conformal_basis(g: &LieAlgebra) -> BTreeMap<Physical, Element> {
    let one = Scalar::one;
    let m1 = || -Scalar::one();
    let i = Scalar::i;
    let mi = || -Scalar::i();
    let half = || Scalar::ratio(1, 2);
    let half_i = || &Scalar::ratio(1, 2) * &Scalar::i();
    use Physical::*;
    let table: Vec<(Physical, Vec<(Scalar, &str)>)> = vec![
        (Mp, vec![(one(), "e1"), (one(), "em3")]),
        (Mm, vec![(m1(), "e3"), (m1(), "em1")]),
        (M3, vec![(half_i(), "h1"), (-half_i(), "h3")]),
        (Lp, vec![(i(), "em3"), (mi(), "e1")]),
        (Lm, vec![(mi(), "e3"), (i(), "em1")]),
        (L3, vec![(half(), "h1"), (half(), "h3")]),
        (P1, vec![(m1(), "e4"), (m1(), "e5")]),
        (P2, vec![(i(), "e4"), (mi(), "e5")]),
        (P3, vec![(i(), "e2"), (mi(), "e6")]),
        (K1, vec![(one(), "em4"), (m1(), "em5")]),
        (K2, vec![(i(), "em4"), (i(), "em5")]),
        (K3, vec![(i(), "em2"), (mi(), "em6")]),
        (P0, vec![(mi(), "e2"), (mi(), "e6")]),
        (K0, vec![(i(), "em2"), (i(), "em6")]),
        (D, vec![(half(), "h1"), (one(), "h2"), (half(), "h3")]),
    ];
    table.into_iter().map(|(p, t)| (p, combo(g, &t))).collect()
}

/// Hermitian-type generators M₁, M₂, L₁, L₂ replacing the ladder pairs,
/// via M± = M₁ ± iM₂.
pub fn real_generators(g: &LieAlgebra) -> Vec<(&'static str, Element)> {
    let b = conformal_basis(g);
    let half = Scalar::ratio(1, 2);
    let half_over_i = Scalar::ratio(1, 2).checked_div(&Scalar::i()).expect("i is invertible");
    let sum = |p: Physical, q: Physical, c: &Scalar, d: &Scalar| &b[&p].scale_scalar(c) + &b[&q].scale_scalar(d);
    let mut out = vec![
        ("M1", sum(Physical::Mp, Physical::Mm, &half, &half)),
        ("M2", sum(Physical::Mp, Physical::Mm, &half_over_i, &-half_over_i.clone())),
        ("M3", b[&Physical::M3].clone()),
        ("L1", sum(Physical::Lp, Physical::Lm, &half, &half)),
        ("L2", sum(Physical::Lp, Physical::Lm, &half_over_i, &-half_over_i.clone())),
        ("L3", b[&Physical::L3].clone()),
    ];
    for p in [Physical::P0, Physical::P1, Physical::P2, Physical::P3, Physical::K0, Physical::K1, Physical::K2, Physical::K3, Physical::D] {
        out.push((p.name(), b[&p].clone()));
    }
    out
}

/// Compact Cartan generators M₁₂, M₃₄ = ½(P₃−K₃), M₅₀ = ½(P₀+K₀).
pub fn compact_cartan(g: &LieAlgebra) -> Vec<(&'static str, Element)> {
    let b = conformal_basis(g);
    let h = Scalar::ratio(1, 2);
    vec![
        ("M12", b[&Physical::M3].clone()),
        ("M34", (&b[&Physical::P3] - &b[&Physical::K3]).scale_scalar(&h)),
        ("M50", (&b[&Physical::P0] + &b[&Physical::K0]).scale_scalar(&h)),
    ]
}

/// Rank of the coefficient matrix of a family of constant Elements.
pub fn rank_of(elems: &[Element]) -> usize {
    let m: linalg::Matrix = elems
        .iter()
        .map(|e| (0..super::DIM).map(|k| e.coeff(k).as_constant().unwrap_or_else(Scalar::zero)).collect())
        .collect();
    linalg::rank(&m)
}

/// Metric η = diag(−1, 1, 1, 1, 1, −1) on indices 0..5.
pub const ETA: [i64; 6] = [-1, 1, 1, 1, 1, -1];

/// Antisymmetric family M_{PQ}, P,Q ∈ 0..5, assembled from the physical generators.
pub fn lorentz_tensor(g: &LieAlgebra) -> Vec<Vec<Element>> {
    let real: BTreeMap<&str, Element> = real_generators(g).into_iter().collect();
    let h = Scalar::ratio(1, 2);
    let mut m = vec![vec![g.zero(); 6]; 6];
    let mut set = |p: usize, q: usize, v: Element| {
        m[q][p] = -&v;
        m[p][q] = v;
    };
    set(2, 3, real["M1"].clone());
    set(3, 1, real["M2"].clone());
    set(1, 2, real["M3"].clone());
    for (i, l) in [(1, "L1"), (2, "L2"), (3, "L3")] {
        set(i, 0, real[l].clone());
    }
    let pk = ["P0", "P1", "P2", "P3"].iter().zip(["K0", "K1", "K2", "K3"]);
    for (mu, (p, k)) in pk.enumerate() {
        set(4, mu, (&real[p] - &real[k]).scale_scalar(&h));
        set(5, mu, (&real[p] + &real[k]).scale_scalar(&h));
    }
    set(4, 5, real["D"].clone());
    m
}

#[derive(Clone, Debug, PartialEq)]
pub struct O42Residual {
    pub pq: (usize, usize),
    pub rs: (usize, usize),
    pub residual: Element,
}

/// Scans all 225 ordered pairs (P<Q, R<S) of
/// [M_PQ, M_RS] = η_PS M_QR − η_PR M_QS + η_QR M_PS − η_QS M_PR
/// and returns every nonzero residual.
pub fn verify_o42_relations(g: &LieAlgebra, m: &[Vec<Element>], eta: &[i64; 6]) -> Result<Vec<O42Residual>> {
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|p| (p + 1..6).map(move |q| (p, q))).collect();
    let delta = |a: usize, b: usize| if a == b { eta[a] } else { 0 };
    let mut out = Vec::new();
    for &(p, q) in &pairs {
        for &(r, s) in &pairs {
            let lhs = g.bracket(&m[p][q], &m[r][s])?;
            let mut rhs = g.zero();
            for (c, x) in [
                (delta(p, s), &m[q][r]),
                (-delta(p, r), &m[q][s]),
                (delta(q, r), &m[p][s]),
                (-delta(q, s), &m[p][r]),
            ] {
                if c != 0 {
                    rhs.add_assign(&x.scale(&MultiPoly::int(c)))?;
                }
            }
            let residual = &lhs - &rhs;
            if !residual.is_zero() {
                out.push(O42Residual { pq: (p, q), rs: (r, s), residual });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::sl4;

    #[test]
    fn dilatation_and_momentum() {
        let g = sl4();
        let b = conformal_basis(g);
        let d = &(&g.generator("h1").unwrap() + &g.generator("h2").unwrap().scale_scalar(&Scalar::from_int(2)))
            + &g.generator("h3").unwrap();
        assert_eq!(b[&Physical::D], d.scale_scalar(&Scalar::ratio(1, 2)));
        let p1 = -&(&g.generator("e4").unwrap() + &g.generator("e5").unwrap());
        assert_eq!(b[&Physical::P1], p1);
    }

    #[test]
    fn full_rank() {
        let g = sl4();
        let elems: Vec<Element> = conformal_basis(g).into_values().collect();
        assert_eq!(rank_of(&elems), 15);
        let real: Vec<Element> = real_generators(g).into_iter().map(|(_, e)| e).collect();
        assert_eq!(rank_of(&real), 15);
    }

    #[test]
    fn self_pairs_have_no_residual() {
        let g = sl4();
        let m = lorentz_tensor(g);
        let res = verify_o42_relations(g, &m, &ETA).unwrap();
        assert!(res.iter().all(|r| r.pq != r.rs));
    }
}
