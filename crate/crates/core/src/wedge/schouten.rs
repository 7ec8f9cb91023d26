//! Schouten bracket on Λ²g via the tensor cube, CYBE residuals and the invariant three-form.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::multivector::{sort3, wedge3, BiVector, TriVector};
use crate::arith::{linalg, MultiPoly, Param, Scalar};
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra, DIM};

/// A monomial with its Gaussian-integer coefficient.
type MonoCoeff = (crate::arith::Monomial, GaussInt);

type Cube = BTreeMap<(usize, usize, usize), MultiPoly>;

fn add_into(cube: &mut Cube, key: (usize, usize, usize), c: &MultiPoly, s: &Scalar) {
    let slot = cube.entry(key).or_default();
    slot.add_scaled(c, s);
    if slot.is_zero() {
        cube.remove(&key);
    }
}

/// Raw tensor-cube sum [r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃] before projection.
///
/// With r = Σ r^{ab} x_a⊗x_b (full antisymmetric tensor):
/// [a⊗b⊗1, c⊗1⊗d] = [a,c]⊗b⊗d, [a⊗b⊗1, 1⊗c⊗d] = a⊗[b,c]⊗d,
/// [a⊗1⊗b, 1⊗c⊗d] = a⊗c⊗[b,d].
pub fn tensor_cube(g: &LieAlgebra, r: &BiVector) -> Result<Cube> {
    if r.algebra() != g.id() {
        return Err(Error::MixedAlgebra);
    }
    let entries = r.tensor_entries();
    // Partition over the first factor; exact sums merge identically in any order.
    let partials: Vec<Cube> = entries
        .par_iter()
        .map(|(a, b, x)| {
            let mut cube = Cube::new();
            for (c, d, y) in &entries {
                let xy = x * y;
                for (k, s) in g.structure(*a, *c) {
                    add_into(&mut cube, (*k, *b, *d), &xy, s);
                }
                for (k, s) in g.structure(*b, *c) {
                    add_into(&mut cube, (*a, *k, *d), &xy, s);
                }
                for (k, s) in g.structure(*b, *d) {
                    add_into(&mut cube, (*a, *c, *k), &xy, s);
                }
            }
            cube
        })
        .collect();
    let mut total = Cube::new();
    for p in partials {
        for (k, v) in p {
            add_into(&mut total, k, &v, &Scalar::one());
        }
    }
    Ok(total)
}

/// Projects a cube to Λ³ after checking it is totally antisymmetric.
fn project(g: &LieAlgebra, cube: &Cube) -> Result<TriVector> {
    let mut canonical = BTreeMap::new();
    for (&(i, j, k), v) in cube {
        let Some((key, sign)) = sort3(i, j, k) else {
            return Err(Error::Internal(format!("Schouten cube has diagonal entry at ({i}, {j}, {k})")));
        };
        let expected = cube.get(&key).map(|c| c.scale(&Scalar::from_int(sign)));
        if expected.as_ref() != Some(v) {
            return Err(Error::Internal(format!("Schouten cube not antisymmetric at ({i}, {j}, {k})")));
        }
        if (i, j, k) == key {
            canonical.insert(key, v.clone());
        }
    }
    Ok(TriVector::from_canonical(g.id(), canonical))
}

/// ⟨⟨r, r⟩⟩
pub fn schouten_self(g: &LieAlgebra, r: &BiVector) -> Result<TriVector> {
    project(g, &tensor_cube(g, r)?)
}

/// ½(⟨⟨r+s⟩⟩ − ⟨⟨r⟩⟩ − ⟨⟨s⟩⟩)
pub fn schouten_mixed(g: &LieAlgebra, r: &BiVector, s: &BiVector) -> Result<TriVector> {
    let mut sum = r.clone();
    sum.add_assign(s)?;
    let mut out = schouten_self(g, &sum)?;
    out.add_scaled(&schouten_self(g, r)?, &-Scalar::one())?;
    out.add_scaled(&schouten_self(g, s)?, &-Scalar::one())?;
    Ok(out.scale_scalar(&Scalar::ratio(1, 2)))
}

#[derive(Clone, Debug)]
pub struct CybeResidual {
    pub is_solution: bool,
    pub residual: TriVector,
    /// For each parameter of r: residual components by degree in that parameter,
    /// covering every degree 0..=2·deg(r) (zero components included).
    pub per_degree: BTreeMap<Param, BTreeMap<i32, TriVector>>,
}

impl CybeResidual {
    /// Degrees in `p` whose residual component is nonzero.
    pub fn failing_degrees(&self, p: Param) -> Vec<i32> {
        self.per_degree
            .get(&p)
            .map(|m| m.iter().filter(|(_, t)| !t.is_zero()).map(|(d, _)| *d).collect())
            .unwrap_or_default()
    }
}

pub fn cybe_residual(g: &LieAlgebra, r: &BiVector) -> Result<CybeResidual> {
    let residual = schouten_self(g, r)?;
    let mut per_degree = BTreeMap::new();
    for p in r.params() {
        let top = r.terms().map(|(_, c)| c.degree_in(p)).max().unwrap_or(0);
        let mut parts = residual.split_by_degree(p);
        for d in 0..=2 * top {
            parts.entry(d).or_insert_with(|| TriVector::zero(g.id()));
        }
        per_degree.insert(p, parts);
    }
    Ok(CybeResidual { is_solution: residual.is_zero(), residual, per_degree })
}

/// Exact zero test for ⟨⟨r, r⟩⟩ on integer-scaled coefficients.
///
/// Clears denominators (the residual is homogeneous of degree 2) and
/// accumulates Gaussian integers per parameter monomial. Falls back to
/// [`schouten_self`] if anything does not fit in `i128`.
pub fn cybe_vanishes(g: &LieAlgebra, r: &BiVector) -> Result<bool> {
    match cybe_vanishes_int(g, r) {
        Some(v) => Ok(v),
        None => Ok(schouten_self(g, r)?.is_zero()),
    }
}

type GaussInt = (i128, i128);

fn gauss_mul(a: GaussInt, b: GaussInt) -> Option<GaussInt> {
    let re = a.0.checked_mul(b.0)?.checked_sub(a.1.checked_mul(b.1)?)?;
    let im = a.0.checked_mul(b.1)?.checked_add(a.1.checked_mul(b.0)?)?;
    Some((re, im))
}

fn cybe_vanishes_int(g: &LieAlgebra, r: &BiVector) -> Option<bool> {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    use std::collections::HashMap;

    if r.algebra() != g.id() {
        return None;
    }
    let mut lcm = num_bigint::BigInt::from(1);
    for (_, c) in r.terms() {
        for (_, s) in c.terms() {
            lcm = lcm.lcm(s.re().denom()).lcm(s.im().denom());
        }
    }
    let to_int = |q: &num_rational::BigRational| -> Option<i128> { (q.numer() * (&lcm / q.denom())).to_i128() };
    // Full antisymmetric entries, each coefficient split into monomials.
    let mut entries: Vec<(usize, usize, Vec<MonoCoeff>)> = Vec::new();
    for (&(i, j), c) in r.terms() {
        let mut parts = Vec::new();
        for (m, s) in c.terms() {
            parts.push((*m, (to_int(s.re())?, to_int(s.im())?)));
        }
        let neg = parts.iter().map(|(m, (a, b))| Some((*m, (a.checked_neg()?, b.checked_neg()?)))).collect::<Option<Vec<_>>>()?;
        entries.push((i, j, parts));
        entries.push((j, i, neg));
    }
    let mut structure: Vec<Vec<Vec<(usize, i128)>>> = vec![vec![Vec::new(); DIM]; DIM];
    for (a, row) in structure.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            for (k, s) in g.structure(a, b) {
                slot.push((*k, s.as_i64()? as i128));
            }
        }
    }
    if entries.iter().all(|(_, _, x)| x.iter().all(|(m, _)| m.is_one())) {
        return dense_vanishes(&entries, &structure);
    }
    let mut cube: HashMap<(crate::arith::Monomial, usize), GaussInt> = HashMap::new();
    let mut bump = |m: crate::arith::Monomial, key: usize, v: GaussInt, s: i128| -> Option<()> {
        let slot = cube.entry((m, key)).or_insert((0, 0));
        slot.0 = slot.0.checked_add(v.0.checked_mul(s)?)?;
        slot.1 = slot.1.checked_add(v.1.checked_mul(s)?)?;
        Some(())
    };
    for (a, b, x) in &entries {
        for (c, d, y) in &entries {
            let (sac, sbc, sbd) = (&structure[*a][*c], &structure[*b][*c], &structure[*b][*d]);
            if sac.is_empty() && sbc.is_empty() && sbd.is_empty() {
                continue;
            }
            for (mx, vx) in x {
                for (my, vy) in y {
                    let m = mx.product(my);
                    let v = gauss_mul(*vx, *vy)?;
                    for (k, s) in sac {
                        bump(m, (k * DIM + b) * DIM + d, v, *s)?;
                    }
                    for (k, s) in sbc {
                        bump(m, (a * DIM + k) * DIM + d, v, *s)?;
                    }
                    for (k, s) in sbd {
                        bump(m, (a * DIM + c) * DIM + k, v, *s)?;
                    }
                }
            }
        }
    }
    Some(cube.values().all(|v| *v == (0, 0)))
}

type IntEntries = [(usize, usize, Vec<(crate::arith::Monomial, GaussInt)>)];

/// Constant-coefficient case: a flat 15³ accumulator.
fn dense_vanishes(entries: &IntEntries, structure: &[Vec<Vec<(usize, i128)>>]) -> Option<bool> {
    let mut cube = vec![(0i128, 0i128); DIM * DIM * DIM];
    let mut bump = |key: usize, v: GaussInt, s: i128| -> Option<()> {
        let slot = &mut cube[key];
        slot.0 = slot.0.checked_add(v.0.checked_mul(s)?)?;
        slot.1 = slot.1.checked_add(v.1.checked_mul(s)?)?;
        Some(())
    };
    for (a, b, x) in entries {
        let vx = x.first().map_or((0, 0), |(_, v)| *v);
        for (c, d, y) in entries {
            let vy = y.first().map_or((0, 0), |(_, v)| *v);
            let v = gauss_mul(vx, vy)?;
            for (k, s) in &structure[*a][*c] {
                bump((k * DIM + b) * DIM + d, v, *s)?;
            }
            for (k, s) in &structure[*b][*c] {
                bump((a * DIM + k) * DIM + d, v, *s)?;
            }
            for (k, s) in &structure[*b][*d] {
                bump((a * DIM + c) * DIM + k, v, *s)?;
            }
        }
    }
    Some(cube.iter().all(|v| *v == (0, 0)))
}

/// Leibniz extension of ad_x to Λ³.
pub fn adjoint_action_triv(g: &LieAlgebra, x: &Element, t: &TriVector) -> Result<TriVector> {
    let mut out = TriVector::zero(g.id());
    for (&(i, j, k), c) in t.terms() {
        let (a, b, d) = (g.basis(i), g.basis(j), g.basis(k));
        let parts = [
            wedge3(&g.bracket(x, &a)?, &b, &d)?,
            wedge3(&a, &g.bracket(x, &b)?, &d)?,
            wedge3(&a, &b, &g.bracket(x, &d)?)?,
        ];
        for p in parts {
            out.add_assign(&p.scale(c))?;
        }
    }
    Ok(out)
}

/// Ω = Σ_{a,b} x^a ∧ x^b ∧ [x_a, x_b] with x^a = Σ K^{ac} x_c.
pub fn canonical_trivector(g: &LieAlgebra) -> Result<TriVector> {
    let kinv = linalg::inverse(&g.killing_matrix().to_vec()).map_err(|_| Error::DegenerateKilling)?;
    let dual: Vec<Element> = (0..DIM)
        .map(|a| {
            let mut x = g.zero();
            for (c, v) in kinv[a].iter().enumerate() {
                if !v.is_zero() {
                    x.add_assign(&g.basis(c).scale_scalar(v)).expect("same algebra");
                }
            }
            x
        })
        .collect();
    let mut omega = TriVector::zero(g.id());
    for a in 0..DIM {
        for b in 0..DIM {
            let br = g.bracket(&g.basis(a), &g.basis(b))?;
            if br.is_zero() {
                continue;
            }
            omega.add_assign(&wedge3(&dual[a], &dual[b], &br)?)?;
        }
    }
    Ok(omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::sl4;
    use crate::wedge::wedge;

    fn e(n: &str) -> Element {
        sl4().generator(n).unwrap()
    }

    #[test]
    fn jordanian_sl2_solves() {
        let r = wedge(&e("h1"), &e("e1")).unwrap();
        assert!(schouten_self(sl4(), &r).unwrap().is_zero());
    }

    #[test]
    fn casimir_type_obstruction() {
        let r = wedge(&e("e1"), &e("em1")).unwrap();
        let t = schouten_self(sl4(), &r).unwrap();
        assert_eq!(t.len(), 1);
        assert!(!t.coeff((0, 3, 9)).is_zero());
    }

    #[test]
    fn mixed_reduces_to_self() {
        let g = sl4();
        let r = &wedge(&e("e1"), &e("em1")).unwrap() + &wedge(&e("h2"), &e("e4")).unwrap();
        assert_eq!(schouten_mixed(g, &r, &r).unwrap(), schouten_self(g, &r).unwrap());
        assert!(schouten_mixed(g, &r, &BiVector::zero(g.id())).unwrap().is_zero());
    }

    #[test]
    fn root_weight_action() {
        let g = sl4();
        let t = wedge3(&e("e1"), &e("e2"), &e("e3")).unwrap();
        assert_eq!(adjoint_action_triv(g, &e("h1"), &t).unwrap(), t);
        assert!(adjoint_action_triv(g, &e("e1"), &TriVector::zero(g.id())).unwrap().is_zero());
    }

    #[test]
    fn per_degree_covers_all_parts() {
        let g = sl4();
        let lam = MultiPoly::param(Param::LAMBDA);
        let r = &wedge(&e("h1"), &e("e1")).unwrap() + &wedge(&e("e3"), &e("em3")).unwrap().scale(&lam);
        let res = cybe_residual(g, &r).unwrap();
        assert!(!res.is_solution);
        assert_eq!(res.per_degree[&Param::LAMBDA].len(), 3);
        assert_eq!(res.failing_degrees(Param::LAMBDA), vec![2]);
    }

    #[test]
    fn fast_path_agrees() {
        let g = sl4();
        let lam = MultiPoly::param(Param::LAMBDA);
        let half = Scalar::ratio(1, 2);
        let cases = [
            wedge(&e("h1"), &e("e1")).unwrap(),
            wedge(&e("e1"), &e("em1")).unwrap().scale_scalar(&half),
            &wedge(&e("h1"), &e("e1")).unwrap() + &wedge(&e("e3"), &e("em3")).unwrap().scale(&lam),
            &wedge(&e("h1"), &e("e1")).unwrap().scale(&lam) + &wedge(&e("h3"), &e("e3")).unwrap().scale_scalar(&Scalar::i()),
        ];
        for r in &cases {
            assert_eq!(cybe_vanishes(g, r).unwrap(), schouten_self(g, r).unwrap().is_zero(), "{r}");
        }
    }

    #[test]
    fn omega_is_invariant() {
        let g = sl4();
        let omega = canonical_trivector(g).unwrap();
        assert!(!omega.is_zero());
        for k in 0..DIM {
            assert!(adjoint_action_triv(g, &g.basis(k), &omega).unwrap().is_zero());
        }
    }
}
