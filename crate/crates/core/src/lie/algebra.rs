//! sl(4,C) in the Cartan–Weyl basis, built from 4×4 matrix units.
//!
//! Basis order: h₁,h₂,h₃, e₁…e₆, e₋₁…e₋₆ with e₄=e₁₃, e₅=e₂₄, e₆=e₁₄.
//! Structure constants are never typed in; they are read off the
//! commutators of the matrix units.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use once_cell::sync::Lazy;

use crate::arith::{MultiPoly, Scalar};
use crate::error::{Error, Result};

pub const DIM: usize = 15;

/// Canonical basis names in basis order.
pub const BASIS_NAMES: [&str; DIM] = [
    "h1", "h2", "h3", "e1", "e2", "e3", "e4", "e5", "e6", "em1", "em2", "em3", "em4", "em5", "em6",
];

/// Matrix position (A,B) of the positive root vector e_k, k = 1..6.
const ROOT_POSITION: [(usize, usize); 6] = [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4), (1, 4)];

/// A basis vector of the 15-dimensional algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BasisLabel {
    /// hᵢ, i = 1..3
    Cartan(u8),
    /// e_{±A}, A = 1..6; sign carried by the value
    Root(i8),
}

impl BasisLabel {
    pub fn index(self) -> usize {
        match self {
            BasisLabel::Cartan(i) => i as usize - 1,
            BasisLabel::Root(a) if a > 0 => 2 + a as usize,
            BasisLabel::Root(a) => 8 + (-a) as usize,
        }
    }

    pub fn from_index(i: usize) -> BasisLabel {
        match i {
            0..=2 => BasisLabel::Cartan(i as u8 + 1),
            3..=8 => BasisLabel::Root(i as i8 - 2),
            9..=14 => BasisLabel::Root(-(i as i8 - 8)),
            _ => panic!("basis index {i} out of range"),
        }
    }

    pub fn name(self) -> &'static str {
        BASIS_NAMES[self.index()]
    }

    /// Root index with sign (±1..±6) for root vectors.
    pub fn root(self) -> Option<i8> {
        match self {
            BasisLabel::Root(a) => Some(a),
            BasisLabel::Cartan(_) => None,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Index of basis vector `name` (`h1`, `e4`, `em6`, ...).
pub fn basis_index(name: &str) -> Option<usize> {
    BASIS_NAMES.iter().position(|n| *n == name)
}

/// Matrix position of a root vector, e.g. e₋₄ ↦ (3,1).
pub fn root_matrix_position(root: i8) -> (usize, usize) {
    let (a, b) = ROOT_POSITION[root.unsigned_abs() as usize - 1];
    if root > 0 {
        (a, b)
    } else {
        (b, a)
    }
}

/// Root vector sitting at matrix position (A,B), A ≠ B.
pub fn root_at(a: usize, b: usize) -> Option<i8> {
    ROOT_POSITION.iter().enumerate().find_map(|(k, &(p, q))| {
        if (p, q) == (a, b) {
            Some(k as i8 + 1)
        } else if (q, p) == (a, b) {
            Some(-(k as i8 + 1))
        } else {
            None
        }
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraId(u64);

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Sparse 4×4 integer matrix.
type Mat4 = BTreeMap<(usize, usize), i64>;

fn basis_matrix(i: usize) -> Mat4 {
    let mut m = Mat4::new();
    match BasisLabel::from_index(i) {
        BasisLabel::Cartan(k) => {
            let k = k as usize;
            m.insert((k, k), 1);
            m.insert((k + 1, k + 1), -1);
        }
        BasisLabel::Root(r) => {
            m.insert(root_matrix_position(r), 1);
        }
    }
    m
}

/// [e_AB, e_CD] = δ_BC e_AD − δ_DA e_CB, extended bilinearly.
fn matrix_commutator(x: &Mat4, y: &Mat4) -> Mat4 {
    let mut out = Mat4::new();
    for (&(a, b), &u) in x {
        for (&(c, d), &v) in y {
            if b == c {
                *out.entry((a, d)).or_insert(0) += u * v;
            }
            if d == a {
                *out.entry((c, b)).or_insert(0) -= u * v;
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Coordinates of a traceless matrix in the Cartan–Weyl basis.
fn decompose(m: &Mat4) -> Result<Vec<(usize, i64)>> {
    let diag = |k: usize| m.get(&(k, k)).copied().unwrap_or(0);
    let trace: i64 = (1..=4).map(diag).sum();
    if trace != 0 {
        return Err(Error::Internal("commutator left the traceless matrices".into()));
    }
    let mut out = Vec::new();
    let mut running = 0;
    for k in 1..=3 {
        running += diag(k);
        if running != 0 {
            out.push((k - 1, running));
        }
    }
    for (&(a, b), &v) in m {
        if a != b {
            let r = root_at(a, b).ok_or_else(|| Error::Internal("bad matrix position".into()))?;
            out.push((BasisLabel::Root(r).index(), v));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Structure-constant table with cached Killing form.
pub struct LieAlgebra {
    id: AlgebraId,
    table: Vec<Vec<Vec<(usize, Scalar)>>>,
    killing: Vec<Vec<Scalar>>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra").field("id", &self.id).field("dim", &DIM).finish()
    }
}

static SL4: Lazy<LieAlgebra> = Lazy::new(|| build_sl4().expect("sl(4) construction is infallible"));

/// Shared sl(4) instance.
pub fn sl4() -> &'static LieAlgebra {
    &SL4
}

/// Builds sl(4,C) from matrix units and verifies Jacobi on all 455 basis triples.
pub fn build_sl4() -> Result<LieAlgebra> {
    let mats: Vec<Mat4> = (0..DIM).map(basis_matrix).collect();
    let mut table = vec![vec![Vec::new(); DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            let c = matrix_commutator(&mats[i], &mats[j]);
            table[i][j] = decompose(&c)?.into_iter().map(|(k, v)| (k, Scalar::from_int(v))).collect();
        }
    }
    let mut g = LieAlgebra {
        id: AlgebraId(NEXT_ID.fetch_add(1, Ordering::Relaxed)),
        table,
        killing: Vec::new(),
    };
    g.killing = g.compute_killing();
    g.check_antisymmetry()?;
    let violations = g.jacobi_violations();
    if let Some((i, j, k)) = violations.first() {
        return Err(Error::Internal(format!(
            "Jacobi fails on ({}, {}, {})",
            BASIS_NAMES[*i], BASIS_NAMES[*j], BASIS_NAMES[*k]
        )));
    }
    Ok(g)
}

impl LieAlgebra {
    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn dim(&self) -> usize {
        DIM
    }

    pub fn labels(&self) -> impl Iterator<Item = BasisLabel> {
        (0..DIM).map(BasisLabel::from_index)
    }

    /// Structure constants of [xᵢ, xⱼ].
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.id, i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.id)
    }

    /// Element for a basis name or composite name (h4..h6).
    pub fn generator(&self, name: &str) -> Result<Element> {
        if let Some(i) = basis_index(name) {
            return Ok(self.basis(i));
        }
        let cartans: &[usize] = match name {
            "h4" => &[0, 1],
            "h5" => &[1, 2],
            "h6" => &[0, 1, 2],
            _ => return Err(Error::UnknownGenerator(name.to_string())),
        };
        let mut x = self.zero();
        for &i in cartans {
            x.add_assign(&self.basis(i))?;
        }
        Ok(x)
    }

    /// Matrix unit e_AB (A ≠ B) or the traceless diagonal difference e_AA − e_BB.
    pub fn matrix_unit(&self, a: usize, b: usize) -> Result<Element> {
        if a == b || !(1..=4).contains(&a) || !(1..=4).contains(&b) {
            return Err(Error::UnknownGenerator(format!("e{a}{b}")));
        }
        let r = root_at(a, b).ok_or_else(|| Error::UnknownGenerator(format!("e{a}{b}")))?;
        Ok(self.basis(BasisLabel::Root(r).index()))
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        if x.alg != self.id || y.alg != self.id {
            return Err(Error::MixedAlgebra);
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero(self.id);
        for (&i, a) in &x.coeffs {
            for (&j, b) in &y.coeffs {
                let s = &self.table[i][j];
                if s.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in s {
                    out.add_coeff(*k, &ab, c);
                }
            }
        }
        out
    }

    /// [x, basis_j] as a sparse scalar row, for constant x.
    pub fn ad_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    fn compute_killing(&self) -> Vec<Vec<Scalar>> {
        // K_ij = Σ_l Σ_k f_{il}^k f_{jk}^l
        let mut k = vec![vec![Scalar::zero(); DIM]; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                let mut acc = Scalar::zero();
                for l in 0..DIM {
                    for (kk, a) in &self.table[i][l] {
                        for (ll, b) in &self.table[j][*kk] {
                            if *ll == l {
                                acc += &(a * b);
                            }
                        }
                    }
                }
                k[i][j] = acc;
            }
        }
        k
    }

    /// Killing form on basis vectors.
    pub fn killing_matrix(&self) -> &[Vec<Scalar>] {
        &self.killing
    }

    pub fn killing_form(&self, x: &Element, y: &Element) -> Result<MultiPoly> {
        if x.alg != self.id || y.alg != self.id {
            return Err(Error::MixedAlgebra);
        }
        let mut acc = MultiPoly::zero();
        for (&i, a) in &x.coeffs {
            for (&j, b) in &y.coeffs {
                let k = &self.killing[i][j];
                if !k.is_zero() {
                    acc.add_scaled(&(a * b), k);
                }
            }
        }
        Ok(acc)
    }

    fn check_antisymmetry(&self) -> Result<()> {
        for i in 0..DIM {
            for j in 0..DIM {
                let x = self.bracket_unchecked(&self.basis(i), &self.basis(j));
                let y = self.bracket_unchecked(&self.basis(j), &self.basis(i));
                if !(&x + &y).is_zero() {
                    return Err(Error::Internal(format!("antisymmetry fails on ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// Basis triples i<j<k where the Jacobi identity fails (expected empty).
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..DIM {
            for j in i + 1..DIM {
                for k in j + 1..DIM {
                    let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
                    let t1 = self.bracket_unchecked(&self.bracket_unchecked(&x, &y), &z);
                    let t2 = self.bracket_unchecked(&self.bracket_unchecked(&y, &z), &x);
                    let t3 = self.bracket_unchecked(&self.bracket_unchecked(&z, &x), &y);
                    if !(&(&t1 + &t2) + &t3).is_zero() {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// Number of triples checked by [`jacobi_violations`](Self::jacobi_violations).
    pub fn jacobi_triple_count(&self) -> usize {
        DIM * (DIM - 1) * (DIM - 2) / 6
    }
}

/// Sparse vector of the algebra with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    alg: AlgebraId,
    coeffs: BTreeMap<usize, MultiPoly>,
}

impl Element {
    pub fn zero(alg: AlgebraId) -> Element {
        Element { alg, coeffs: BTreeMap::new() }
    }

    pub fn basis(alg: AlgebraId, i: usize) -> Element {
        assert!(i < DIM, "basis index out of range");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, MultiPoly::one());
        Element { alg, coeffs }
    }

    pub fn from_coeffs(alg: AlgebraId, coeffs: impl IntoIterator<Item = (usize, MultiPoly)>) -> Element {
        let mut e = Element::zero(alg);
        for (i, c) in coeffs {
            e.add_coeff(i, &c, &Scalar::one());
        }
        e
    }

    pub fn algebra(&self) -> AlgebraId {
        self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> MultiPoly {
        self.coeffs.get(&i).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &MultiPoly)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub(crate) fn add_coeff(&mut self, i: usize, c: &MultiPoly, s: &Scalar) {
        let slot = self.coeffs.entry(i).or_default();
        slot.add_scaled(c, s);
        if slot.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add_assign(&mut self, rhs: &Element) -> Result<()> {
        if rhs.alg != self.alg {
            return Err(Error::MixedAlgebra);
        }
        for (i, c) in &rhs.coeffs {
            self.add_coeff(*i, c, &Scalar::one());
        }
        Ok(())
    }

    pub fn scale(&self, c: &MultiPoly) -> Element {
        let mut out = Element::zero(self.alg);
        for (i, v) in &self.coeffs {
            let p = v * c;
            if !p.is_zero() {
                out.coeffs.insert(*i, p);
            }
        }
        out
    }

    pub fn scale_scalar(&self, c: &Scalar) -> Element {
        self.scale(&MultiPoly::constant(c.clone()))
    }

    /// Apply a coefficient-wise transformation (substitution, conjugation, ...).
    pub fn map_coeffs(&self, mut f: impl FnMut(&MultiPoly) -> Result<MultiPoly>) -> Result<Element> {
        let mut out = Element::zero(self.alg);
        for (i, v) in &self.coeffs {
            let p = f(v)?;
            if !p.is_zero() {
                out.coeffs.insert(*i, p);
            }
        }
        Ok(out)
    }

    /// `Some(c)` with `self = c·other` for a constant `c`, if such `c` exists.
    pub fn ratio_to(&self, other: &Element) -> Option<Scalar> {
        if self.coeffs.keys().ne(other.coeffs.keys()) || other.is_zero() {
            return None;
        }
        let (i0, o0) = other.coeffs.iter().next()?;
        let s0 = self.coeffs.get(i0)?;
        let c = s0.as_constant()?.checked_div(&o0.as_constant()?).ok()?;
        if other.scale_scalar(&c) == *self {
            Some(c)
        } else {
            None
        }
    }
}

impl<'a> std::ops::Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.alg, rhs.alg, "mixed-algebra addition");
        let mut out = self.clone();
        for (i, c) in &rhs.coeffs {
            out.add_coeff(*i, c, &Scalar::one());
        }
        out
    }
}

impl<'a> std::ops::Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.alg, rhs.alg, "mixed-algebra subtraction");
        let mut out = self.clone();
        for (i, c) in &rhs.coeffs {
            out.add_coeff(*i, c, &-Scalar::one());
        }
        out
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale_scalar(&-Scalar::one())
    }
}

impl fmt::Display for Element {
    /// Catalog-grammar form, e.g. `1/2*h1 + i*e4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let items: Vec<(String, &MultiPoly)> =
            self.coeffs.iter().map(|(i, c)| (BASIS_NAMES[*i].to_string(), c)).collect();
        crate::catalog::emit::write_linear(f, &items)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> &'static LieAlgebra {
        sl4()
    }

    fn e(name: &str) -> Element {
        g().generator(name).unwrap()
    }

    #[test]
    fn chevalley_relations() {
        assert_eq!(g().bracket(&e("e1"), &e("em1")).unwrap(), e("h1"));
        assert_eq!(g().bracket(&e("e1"), &e("em2")).unwrap(), g().zero());
        assert_eq!(g().bracket(&e("e4"), &e("em4")).unwrap(), e("h4"));
        assert_eq!(g().bracket(&e("e6"), &e("em6")).unwrap(), e("h6"));
    }

    #[test]
    fn composite_roots() {
        assert_eq!(g().bracket(&e("e1"), &e("e2")).unwrap(), e("e4"));
        assert_eq!(g().bracket(&e("e2"), &e("e3")).unwrap(), e("e5"));
        assert_eq!(g().bracket(&e("e4"), &e("e3")).unwrap(), e("e6"));
        assert_eq!(g().bracket(&e("e1"), &e("e5")).unwrap(), e("e6"));
    }

    #[test]
    fn cartan_weights() {
        assert_eq!(g().bracket(&e("h1"), &e("e1")).unwrap(), e("e1").scale_scalar(&Scalar::from_int(2)));
        assert_eq!(g().bracket(&e("h1"), &e("e2")).unwrap(), -&e("e2"));
    }

    #[test]
    fn self_bracket_vanishes() {
        let x = &e("h1") + &e("e4");
        assert!(g().bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn jacobi_everywhere() {
        assert_eq!(g().jacobi_triple_count(), 455);
        assert!(g().jacobi_violations().is_empty());
    }

    #[test]
    fn killing_values() {
        assert_eq!(g().killing_form(&e("h1"), &e("h1")).unwrap(), MultiPoly::int(16));
        assert_eq!(g().killing_form(&e("e1"), &e("e2")).unwrap(), MultiPoly::zero());
        assert_eq!(g().killing_form(&e("e1"), &e("em1")).unwrap(), MultiPoly::int(8));
    }

    #[test]
    fn mixed_algebras_rejected() {
        let other = build_sl4().unwrap();
        assert!(matches!(g().bracket(&e("e1"), &other.basis(3)), Err(Error::MixedAlgebra)));
    }

    #[test]
    fn matrix_units_resolve() {
        assert_eq!(g().matrix_unit(1, 3).unwrap(), e("e4"));
        assert_eq!(g().matrix_unit(4, 1).unwrap(), e("em6"));
        assert!(g().matrix_unit(2, 2).is_err());
    }

    #[test]
    fn label_indices_round_trip() {
        for i in 0..DIM {
            assert_eq!(BasisLabel::from_index(i).index(), i);
        }
    }
}
